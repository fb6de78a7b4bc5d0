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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qrw/error.hpp"

namespace qrw::cli {

/// Malformed command line; maps to exit status 2.
class UsageError : public Error {
   public:
    explicit UsageError(const std::string &message) : Error("usage", message) {}
};

/// Raised by parse_args for --help; carries the rendered usage text.
class HelpRequested : public std::exception {
   public:
    explicit HelpRequested(std::string text) : text_(std::move(text)) {}
    const char *what() const noexcept override { return text_.c_str(); }
    const std::string &text() const noexcept { return text_; }

   private:
    std::string text_;
};

struct Command {
    std::string subcommand;
    std::string action;
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> svg;

    // qsim run
    std::string circuit = "paper";
    unsigned qubits = 4;
    std::size_t gates = 16;
    std::uint64_t basis = 0;

    // rules
    std::optional<std::filesystem::path> rules;
    std::optional<std::filesystem::path> graph;
    std::string goal;
    std::optional<std::string> syn, udp, ipa;
    std::size_t max_solutions = 100;
    std::size_t depth_limit = 4096;

    // primes
    std::vector<std::uint64_t> n;
    std::uint64_t limit = 10'000;

    // waves grid / phi
    std::string id = "eq53";
    std::string axis;
    double min = 0.0;
    double max = 6.283185307179586;
    std::size_t points = 101;
    std::string axis2;
    double min2 = 0.0;
    double max2 = 1.0;
    std::size_t points2 = 0;
    double theta = 0.0;
    double x = 0.0;
    double nval = 1.0;

    // waves propagate
    double young = 1.0;
    double density = 1.0;
    double courant = 0.5;
    std::size_t grid = 401;
    double length = 40.0;
    std::size_t steps = 200;

    // algebra check
    std::size_t max_order = 24;
};

/// Parses argv without the program name. QRW_SEED (passed as `env_seed`)
/// supplies the seed when --seed is absent.
Command parse_args(const std::vector<std::string> &args, std::optional<std::string> env_seed = std::nullopt);

/// Reads QRW_SEED from the process environment.
std::optional<std::string> seed_from_environment();

}  // namespace qrw::cli
