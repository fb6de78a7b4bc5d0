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

#include "qrw/inference/session.hpp"

namespace qrw::inference {

void DdeRegistry::add_item(const std::string &service, const std::string &topic, const std::string &item,
                           Term value) {
    topics_[{service, topic}].items[item] = std::move(value);
}

void DdeRegistry::add_command(const std::string &service, const std::string &topic, const std::string &command) {
    topics_[{service, topic}].commands.insert(command);
}

bool DdeRegistry::has_topic(const std::string &service, const std::string &topic) const {
    return topics_.count({service, topic}) > 0;
}

const Term *DdeRegistry::item(const std::string &service, const std::string &topic, const std::string &item) const {
    auto it = topics_.find({service, topic});
    if (it == topics_.end()) {
        return nullptr;
    }
    auto found = it->second.items.find(item);
    return found == it->second.items.end() ? nullptr : &found->second;
}

bool DdeRegistry::accepts(const std::string &service, const std::string &topic, const std::string &command) const {
    auto it = topics_.find({service, topic});
    return it != topics_.end() && it->second.commands.count(command) > 0;
}

namespace {

Term topic_error(const std::string &topic) {
    return Term::compound("error",
                          {Term::compound("existence_error", {Term::atom("dde_topic"), Term::atom(topic)})});
}

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

StepResult session_step(const DdeRegistry &registry, const Session &session, const dde::Message &message) {
    StepResult out{session, Term()};
    const auto *conn = std::get_if<dde::Connected>(&session.state);
    std::visit(Overloaded{
                   [&](const dde::Connect &m) {
                       if (conn) {
                           throw ProtocolError("connect while connected to " + conn->service + "/" + conn->topic);
                       }
                       const std::int64_t handle = out.session.next_handle++;
                       out.session.state = dde::Connected{handle, m.service, m.topic};
                       out.reply = Term::compound("connected", {Term::integer(handle)});
                   },
                   [&](const dde::Request &m) {
                       if (!conn) {
                           throw ProtocolError("request while disconnected");
                       }
                       const Term *value = registry.item(conn->service, m.topic, m.item);
                       out.reply = value ? *value : topic_error(m.topic);
                   },
                   [&](const dde::Execute &m) {
                       if (!conn) {
                           throw ProtocolError("execute while disconnected");
                       }
                       out.reply = registry.accepts(conn->service, conn->topic, m.command) ? Term::atom("ok")
                                                                                           : topic_error(conn->topic);
                   },
                   [&](const dde::Disconnect &) {
                       out.session.state = dde::Disconnected{};
                       out.reply = Term::atom("disconnected");
                   },
               },
               message);
    out.session.log.push_back(SessionEvent{message, out.reply});
    return out;
}

Session replay(const DdeRegistry &registry, const std::vector<SessionEvent> &log) {
    Session session;
    for (const SessionEvent &event : log) {
        session = session_step(registry, session, event.message).session;
    }
    return session;
}

std::string describe(const dde::Message &message) {
    return std::visit(Overloaded{
                          [](const dde::Connect &m) { return "connect(" + m.service + ", " + m.topic + ")"; },
                          [](const dde::Request &m) { return "request(" + m.topic + ", " + m.item + ")"; },
                          [](const dde::Execute &m) { return "execute(" + m.command + ")"; },
                          [](const dde::Disconnect &) { return std::string("disconnect"); },
                      },
                      message);
}

}  // namespace qrw::inference
