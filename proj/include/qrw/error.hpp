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
#include <stdexcept>
#include <string>

namespace qrw {

/// Base of every error raised by the toolkit. `kind()` is a short stable
/// identifier used by the command-line front end when it reports failures.
class Error : public std::runtime_error {
   public:
    Error(std::string kind, const std::string &message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string &kind() const noexcept { return kind_; }

   private:
    std::string kind_;
};

#define QRW_DEFINE_ERROR(Name, tag)                                    \
    class Name : public Error {                                        \
       public:                                                         \
        explicit Name(const std::string &message) : Error(tag, message) {} \
    };

QRW_DEFINE_ERROR(ArgumentError, "argument")
QRW_DEFINE_ERROR(DomainError, "domain")
QRW_DEFINE_ERROR(ContractError, "contract")
QRW_DEFINE_ERROR(RenormalizationError, "renormalization")
QRW_DEFINE_ERROR(ProtocolError, "protocol")
QRW_DEFINE_ERROR(ResolutionError, "resolution")
QRW_DEFINE_ERROR(StructuralError, "structural")
QRW_DEFINE_ERROR(ConfigurationError, "configuration")
QRW_DEFINE_ERROR(UnsupportedError, "unsupported")
QRW_DEFINE_ERROR(SaturationError, "saturation")

#undef QRW_DEFINE_ERROR

/// Raised by the rule-file reader; carries a 1-based line and column.
class ParseError : public Error {
   public:
    ParseError(const std::string &message, std::size_t line, std::size_t column)
        : Error("parse", message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line),
          column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace qrw
