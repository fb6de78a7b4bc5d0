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

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrw/inference/operators.hpp"
#include "qrw/inference/term.hpp"

namespace qrw::inference {

struct ReadTerm;
ReadTerm read_term(std::string_view text);

/// One term read from source text. Variables are numbered 0..n-1 in order of
/// first appearance; `variable_names[i]` is the source name of variable i
/// ("_" for anonymous ones).
struct ReadTerm {
    Term term;
    std::vector<std::string> variable_names;
    std::size_t line = 0;
};

/// Reads '.'-terminated terms in standard operator syntax. Throws ParseError
/// with the line and column of the offending token.
class Reader {
   public:
    explicit Reader(std::string_view source, OperatorTable ops = OperatorTable::standard());
    ~Reader();
    Reader(const Reader &) = delete;
    Reader &operator=(const Reader &) = delete;

    /// The next term, or nullopt at end of input.
    std::optional<ReadTerm> next();

    OperatorTable &operators();

   private:
    friend ReadTerm read_term(std::string_view text);
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Reads a single term; the terminating '.' is optional.
ReadTerm read_term(std::string_view text);

}  // namespace qrw::inference
