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

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace qrw::cli {

/// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

/// LF-terminated CSV; every row must match the header width.
std::string render_csv(const std::vector<std::string> &header, const std::vector<std::vector<std::string>> &rows);

/// Two-space indented, sorted-key JSON with a trailing newline.
std::string render_json(const nlohmann::json &value);

struct Series {
    std::string name;
    std::vector<double> xs;
    std::vector<double> ys;
};

/// SVG 1.1 line plot on a fixed 640x400 viewport. Non-finite points are skipped.
std::string render_svg_polyline(const std::string &title, const std::vector<Series> &series);

/// SVG 1.1 heatmap of `values` (row-major, rows x cols) on the same viewport.
std::string render_svg_heatmap(const std::string &title, std::size_t rows, std::size_t cols,
                               const std::vector<double> &values);

/// Writes via a sibling temporary file and rename.
void write_atomic(const std::filesystem::path &path, const std::string &content);

}  // namespace qrw::cli
