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

#include <gtest/gtest.h>

#include "qrw/inference/reader.hpp"
#include "qrw/inference/session.hpp"

namespace qrw::inference {
namespace {

DdeRegistry registry() {
    DdeRegistry r;
    r.add_item("scanner", "ports", "open", read_term("[22, 80]").term);
    r.add_command("scanner", "ports", "rescan");
    return r;
}

TEST(Session, ConnectRequestExecuteDisconnect) {
    const DdeRegistry reg = registry();
    Session s;
    StepResult r = session_step(reg, s, dde::Connect{"scanner", "ports"});
    EXPECT_EQ(to_string(r.reply), "connected(1)");
    ASSERT_TRUE(r.session.connected());
    EXPECT_EQ(std::get<dde::Connected>(r.session.state).handle, 1);

    r = session_step(reg, r.session, dde::Request{"ports", "open"});
    EXPECT_EQ(to_string(r.reply), "[22,80]");
    r = session_step(reg, r.session, dde::Request{"unknown_topic", "i"});
    EXPECT_EQ(to_string(r.reply), "error(existence_error(dde_topic,unknown_topic))");
    r = session_step(reg, r.session, dde::Execute{"rescan"});
    EXPECT_EQ(to_string(r.reply), "ok");
    r = session_step(reg, r.session, dde::Execute{"format"});
    EXPECT_EQ(r.reply.indicator(), "error/1");
    r = session_step(reg, r.session, dde::Disconnect{});
    EXPECT_FALSE(r.session.connected());
    EXPECT_EQ(r.session.log.size(), 6u);

    r = session_step(reg, r.session, dde::Connect{"scanner", "ports"});
    EXPECT_EQ(to_string(r.reply), "connected(2)");
}

TEST(Session, IllegalMessagesAreProtocolErrors) {
    const DdeRegistry reg = registry();
    Session s;
    EXPECT_THROW(session_step(reg, s, dde::Request{"ports", "open"}), ProtocolError);
    EXPECT_THROW(session_step(reg, s, dde::Execute{"rescan"}), ProtocolError);
    const Session c = session_step(reg, s, dde::Connect{"scanner", "ports"}).session;
    EXPECT_THROW(session_step(reg, c, dde::Connect{"scanner", "ports"}), ProtocolError);
    EXPECT_EQ(c.log.size(), 1u);
}

TEST(Session, DisconnectWhileDisconnectedIsANoOp) {
    const StepResult r = session_step(registry(), Session{}, dde::Disconnect{});
    EXPECT_FALSE(r.session.connected());
    EXPECT_EQ(r.session.log.size(), 1u);
}

TEST(Session, LogReplayReproducesFinalState) {
    const DdeRegistry reg = registry();
    Session s;
    const dde::Message script[] = {dde::Connect{"scanner", "ports"}, dde::Request{"ports", "open"},
                                   dde::Execute{"rescan"},           dde::Disconnect{},
                                   dde::Connect{"scanner", "other"}, dde::Request{"other", "x"}};
    for (const auto &m : script) {
        s = session_step(reg, s, m).session;
    }
    const Session replayed = replay(reg, s.log);
    EXPECT_EQ(replayed.state, s.state);
    EXPECT_EQ(replayed.next_handle, s.next_handle);
    ASSERT_EQ(replayed.log.size(), s.log.size());
    for (std::size_t i = 0; i < s.log.size(); ++i) {
        EXPECT_EQ(replayed.log[i].reply, s.log[i].reply);
        EXPECT_EQ(describe(replayed.log[i].message), describe(s.log[i].message));
    }
}

}  // namespace
}  // namespace qrw::inference
