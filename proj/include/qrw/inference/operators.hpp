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

#include <map>
#include <optional>
#include <string>

namespace qrw::inference {

enum class OpType { xfx, xfy, yfx, fy, fx, xf, yf };

struct OpDef {
    int priority = 0;
    OpType type = OpType::xfx;
};

/// Operator declarations used by both the rule reader and the term printer.
/// Starts from the standard table plus the extensions the rule fixture needs:
/// `|` as a tight infix pair (priority 100), prefix `@`, and `:=`.
class OperatorTable {
   public:
    static OperatorTable standard();

    /// Registers or replaces an operator (the `op/3` directive).
    void add(int priority, OpType type, const std::string &name);

    std::optional<OpDef> prefix(const std::string &name) const;
    std::optional<OpDef> infix(const std::string &name) const;
    std::optional<OpDef> postfix(const std::string &name) const;
    bool is_operator(const std::string &name) const;

   private:
    std::map<std::string, OpDef> prefix_;
    std::map<std::string, OpDef> infix_;
    std::map<std::string, OpDef> postfix_;
};

std::optional<OpType> parse_op_type(const std::string &text);

}  // namespace qrw::inference
