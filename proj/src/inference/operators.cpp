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

#include "qrw/inference/operators.hpp"

namespace qrw::inference {

OperatorTable OperatorTable::standard() {
    OperatorTable t;
    t.add(1200, OpType::xfx, ":-");
    t.add(1200, OpType::xfx, "-->");
    t.add(1200, OpType::fx, ":-");
    t.add(1200, OpType::fx, "?-");
    t.add(1100, OpType::xfy, ";");
    t.add(1050, OpType::xfy, "->");
    t.add(1000, OpType::xfy, ",");
    t.add(990, OpType::xfx, ":=");
    t.add(900, OpType::fy, "\\+");
    for (const char *op : {"=", "\\=", "==", "\\==", "@<", "@>", "@=<", "@>=", "=..", "is", "=:=", "=\\=", "<", ">",
                           "=<", ">="}) {
        t.add(700, OpType::xfx, op);
    }
    t.add(500, OpType::yfx, "+");
    t.add(500, OpType::yfx, "-");
    t.add(500, OpType::yfx, "/\\");
    t.add(500, OpType::yfx, "\\/");
    for (const char *op : {"*", "/", "//", "mod", "rem", "<<", ">>"}) {
        t.add(400, OpType::yfx, op);
    }
    t.add(200, OpType::xfx, "**");
    t.add(200, OpType::xfy, "^");
    t.add(200, OpType::fy, "-");
    t.add(200, OpType::fy, "+");
    t.add(200, OpType::fy, "\\");
    t.add(200, OpType::xfy, ":");
    t.add(200, OpType::fy, "@");
    t.add(100, OpType::xfy, "|");
    return t;
}

void OperatorTable::add(int priority, OpType type, const std::string &name) {
    const OpDef def{priority, type};
    switch (type) {
        case OpType::fy:
        case OpType::fx:
            prefix_[name] = def;
            break;
        case OpType::xf:
        case OpType::yf:
            postfix_[name] = def;
            break;
        default:
            infix_[name] = def;
            break;
    }
}

namespace {
std::optional<OpDef> find(const std::map<std::string, OpDef> &m, const std::string &name) {
    auto it = m.find(name);
    if (it == m.end() || it->second.priority == 0) {
        return std::nullopt;
    }
    return it->second;
}
}  // namespace

std::optional<OpDef> OperatorTable::prefix(const std::string &name) const { return find(prefix_, name); }
std::optional<OpDef> OperatorTable::infix(const std::string &name) const { return find(infix_, name); }
std::optional<OpDef> OperatorTable::postfix(const std::string &name) const { return find(postfix_, name); }

bool OperatorTable::is_operator(const std::string &name) const {
    return prefix(name) || infix(name) || postfix(name);
}

std::optional<OpType> parse_op_type(const std::string &text) {
    if (text == "xfx") return OpType::xfx;
    if (text == "xfy") return OpType::xfy;
    if (text == "yfx") return OpType::yfx;
    if (text == "fy") return OpType::fy;
    if (text == "fx") return OpType::fx;
    if (text == "xf") return OpType::xf;
    if (text == "yf") return OpType::yf;
    return std::nullopt;
}

}  // namespace qrw::inference
