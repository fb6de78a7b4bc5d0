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

#include <iosfwd>
#include <string>
#include <vector>

#include "qrw/cli/command.hpp"

namespace qrw::cli {

/// Runs `cmd`. Primary output goes to cmd.out when set, otherwise to `out`.
/// Returns 0 on success and 1 when a report contains failed checks; module
/// errors propagate as qrw::Error.
int execute(const Command &cmd, std::ostream &out);

/// Full front end: parse, execute, map errors to exit statuses 0/1/2 with a
/// single `error kind=... message="..."` line on `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qrw::cli
