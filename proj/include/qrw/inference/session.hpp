// Copyright 2026 The QRW Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "qrw/error.hpp"
#include "qrw/inference/term.hpp"

namespace qrw::inference {

/// In-process stand-in for a DDE server: (service, topic) pairs with named
/// items and accepted commands.
class DdeRegistry {
   public:
    void add_item(const std::string &service, const std::string &topic, const std::string &item, Term value);
    void add_command(const std::string &service, const std::string &topic, const std::string &command);

    bool has_topic(const std::string &service, const std::string &topic) const;
    const Term *item(const std::string &service, const std::string &topic, const std::string &item) const;
    bool accepts(const std::string &service, const std::string &topic, const std::string &command) const;

   private:
    struct Topic {
        std::map<std::string, Term> items;
        std::set<std::string> commands;
    };
    std::map<std::pair<std::string, std::string>, Topic> topics_;
};

namespace dde {

struct Connect {
    std::string service;
    std::string topic;
};
struct Request {
    std::string topic;
    std::string item;
};
struct Execute {
    std::string command;
};
struct Disconnect {};

using Message = std::variant<Connect, Request, Execute, Disconnect>;

struct Disconnected {
    friend bool operator==(const Disconnected &, const Disconnected &) = default;
};
struct Connected {
    std::int64_t handle = 0;
    std::string service;
    std::string topic;
    friend bool operator==(const Connected &, const Connected &) = default;
};
using State = std::variant<Disconnected, Connected>;

}  // namespace dde

struct SessionEvent {
    dde::Message message;
    Term reply;
};

/// Single-owner client session. Handles are issued from a per-session
/// counter, so equal message sequences yield equal sessions.
struct Session {
    dde::State state = dde::Disconnected{};
    std::vector<SessionEvent> log;
    std::int64_t next_handle = 1;

    bool connected() const noexcept { return std::holds_alternative<dde::Connected>(state); }
};

struct StepResult {
    Session session;
    Term reply;
};

/// Applies one message. Replies: connect -> connected(Handle); request ->
/// the item's value, or error(existence_error(dde_topic, Topic)) when the
/// topic or item is not registered; execute -> ok, or the same existence
/// error; disconnect -> disconnected (also from Disconnected, as a no-op).
/// Throws ProtocolError for request/execute while Disconnected and for
/// connect while Connected; rejected messages are not logged.
StepResult session_step(const DdeRegistry &registry, const Session &session, const dde::Message &message);

/// Folds the logged messages over session_step from a fresh session.
Session replay(const DdeRegistry &registry, const std::vector<SessionEvent> &log);

std::string describe(const dde::Message &message);

}  // namespace qrw::inference
