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

#include "qrw/cli/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <unistd.h>

#include "qrw/error.hpp"

namespace qrw::cli {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 40.0;
constexpr std::array<const char *, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape_xml(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void svg_open(std::ostringstream &os, const std::string &title) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"400\" "
          "viewBox=\"0 0 640 400\">\n"
       << "<title>" << escape_xml(title) << "</title>\n"
       << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n"
       << "<text x=\"320\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
       << escape_xml(title) << "</text>\n";
}

}  // namespace

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (value == 0.0) {
        return "0";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, ptr);
}

std::string render_csv(const std::vector<std::string> &header, const std::vector<std::vector<std::string>> &rows) {
    auto join = [](const std::vector<std::string> &cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            line += (i ? "," : "") + cells[i];
        }
        return line + "\n";
    };
    std::string out = join(header);
    for (const auto &row : rows) {
        if (row.size() != header.size()) {
            throw ContractError("CSV row has " + std::to_string(row.size()) + " cells, header has " +
                                std::to_string(header.size()));
        }
        out += join(row);
    }
    return out;
}

std::string render_json(const nlohmann::json &value) { return value.dump(2) + "\n"; }

std::string render_svg_polyline(const std::string &title, const std::vector<Series> &series) {
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo, ylo = xlo, yhi = -xlo;
    for (const Series &s : series) {
        for (std::size_t i = 0; i < s.xs.size() && i < s.ys.size(); ++i) {
            if (std::isfinite(s.xs[i]) && std::isfinite(s.ys[i])) {
                xlo = std::min(xlo, s.xs[i]);
                xhi = std::max(xhi, s.xs[i]);
                ylo = std::min(ylo, s.ys[i]);
                yhi = std::max(yhi, s.ys[i]);
            }
        }
    }
    if (!(xlo <= xhi)) {
        xlo = ylo = 0.0;
        xhi = yhi = 1.0;
    }
    if (xhi == xlo) {
        xhi = xlo + 1.0;
    }
    if (yhi == ylo) {
        yhi = ylo + 1.0;
        ylo -= 1.0;
    }
    auto px = [&](double x) { return kMargin + (x - xlo) / (xhi - xlo) * (kWidth - 2 * kMargin); };
    auto py = [&](double y) { return kHeight - kMargin - (y - ylo) / (yhi - ylo) * (kHeight - 2 * kMargin); };

    std::ostringstream os;
    svg_open(os, title);
    os << "<rect x=\"40\" y=\"40\" width=\"560\" height=\"320\" fill=\"none\" stroke=\"#888\"/>\n";
    os << "<text x=\"40\" y=\"380\" font-family=\"sans-serif\" font-size=\"10\">" << format_number(xlo)
       << "</text>\n<text x=\"600\" y=\"380\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
       << format_number(xhi) << "</text>\n<text x=\"36\" y=\"44\" text-anchor=\"end\" font-family=\"sans-serif\" "
       << "font-size=\"10\">" << format_number(yhi) << "</text>\n<text x=\"36\" y=\"360\" text-anchor=\"end\" "
       << "font-family=\"sans-serif\" font-size=\"10\">" << format_number(ylo) << "</text>\n";
    if (ylo < 0.0 && yhi > 0.0) {
        os << "<line x1=\"40\" y1=\"" << fixed(py(0.0)) << "\" x2=\"600\" y2=\"" << fixed(py(0.0))
           << "\" stroke=\"#ccc\"/>\n";
    }
    for (std::size_t k = 0; k < series.size(); ++k) {
        const Series &s = series[k];
        const char *colour = kPalette[k % kPalette.size()];
        os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < s.xs.size() && i < s.ys.size(); ++i) {
            if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) {
                continue;
            }
            os << (first ? "" : " ") << fixed(px(s.xs[i])) << "," << fixed(py(s.ys[i]));
            first = false;
        }
        os << "\"/>\n";
        os << "<text x=\"" << fixed(600.0 - 80.0) << "\" y=\"" << fixed(56.0 + 14.0 * static_cast<double>(k))
           << "\" fill=\"" << colour << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape_xml(s.name)
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_svg_heatmap(const std::string &title, std::size_t rows, std::size_t cols,
                               const std::vector<double> &values) {
    if (values.size() != rows * cols) {
        throw ContractError("heatmap expects rows * cols values");
    }
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double v : values) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (!(lo < hi)) {
        hi = lo + 1.0;
    }
    std::ostringstream os;
    svg_open(os, title);
    const double cw = (kWidth - 2 * kMargin) / static_cast<double>(std::max<std::size_t>(cols, 1));
    const double ch = (kHeight - 2 * kMargin) / static_cast<double>(std::max<std::size_t>(rows, 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const double v = values[r * cols + c];
            std::string fill = "#808080";
            if (std::isfinite(v)) {
                const double t = (v - lo) / (hi - lo);
                const int red = static_cast<int>(std::lround(255.0 * t));
                const int blue = 255 - red;
                char buf[8];
                std::snprintf(buf, sizeof buf, "#%02x00%02x", red, blue);
                fill = buf;
            }
            os << "<rect x=\"" << fixed(kMargin + cw * static_cast<double>(c)) << "\" y=\""
               << fixed(kMargin + ch * static_cast<double>(r)) << "\" width=\"" << fixed(cw) << "\" height=\""
               << fixed(ch) << "\" fill=\"" << fill << "\"/>\n";
        }
    }
    os << "<text x=\"40\" y=\"380\" font-family=\"sans-serif\" font-size=\"10\">min " << format_number(lo)
       << " (blue), max " << format_number(hi) << " (red)</text>\n</svg>\n";
    return os.str();
}

void write_atomic(const std::filesystem::path &path, const std::string &content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw ArgumentError("cannot open '" + tmp.string() + "' for writing");
        }
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw ArgumentError("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw ArgumentError("cannot rename onto '" + path.string() + "'");
    }
}

}  // namespace qrw::cli
