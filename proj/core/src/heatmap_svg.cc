// Copyright 2026 The OntoMesh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ontomesh/heatmap_svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ontomesh/error.h"
#include "ontomesh/file_util.h"
#include "ontomesh/text_format.h"

namespace ontomesh {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

int ParsePositive(std::string_view key, std::string_view value) {
  int out = 0;
  for (char c : value) {
    if (c < '0' || c > '9' || out > 100000) {
      throw Error(ErrorCode::kInvalidArgument,
                  "palette: '" + std::string(key) + "' expects a positive integer");
    }
    out = out * 10 + (c - '0');
  }
  if (out <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "palette: '" + std::string(key) + "' expects a positive integer");
  }
  return out;
}

// Approximate advance of a label in user units.
int TextWidth(std::string_view text, int font_size) {
  return static_cast<int>(std::ceil(static_cast<double>(text.size()) * font_size * 0.6));
}

}  // namespace

std::array<int, 3> ParseHexColor(std::string_view hex) {
  auto nibble = [hex](char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(ErrorCode::kInvalidArgument, "invalid colour '" + std::string(hex) + "'");
  };
  if (hex.size() != 7 || hex[0] != '#') {
    throw Error(ErrorCode::kInvalidArgument, "colour must be #rrggbb, got '" + std::string(hex) + "'");
  }
  std::array<int, 3> rgb{};
  for (int i = 0; i < 3; ++i) rgb[i] = nibble(hex[1 + 2 * i]) * 16 + nibble(hex[2 + 2 * i]);
  return rgb;
}

std::string ToHexColor(const std::array<int, 3>& rgb) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

HeatmapPalette ParsePalette(std::string_view text) {
  HeatmapPalette p;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument, "palette: expected key=value");
    }
    const auto key = Trim(line.substr(0, eq));
    const auto value = Trim(line.substr(eq + 1));
    if (key == "low") {
      ParseHexColor(value);
      p.low = value;
    } else if (key == "high") {
      ParseHexColor(value);
      p.high = value;
    } else if (key == "diagonal") {
      ParseHexColor(value);
      p.diagonal = value;
    } else if (key == "cell_size") {
      p.cell_size = ParsePositive(key, value);
    } else if (key == "font_size") {
      p.font_size = ParsePositive(key, value);
    } else {
      throw Error(ErrorCode::kInvalidArgument, "palette: unknown key '" + std::string(key) + "'");
    }
  }
  return p;
}

std::string InterpolateColor(const HeatmapPalette& palette, double value, double lo, double hi) {
  const auto a = ParseHexColor(palette.low);
  const auto b = ParseHexColor(palette.high);
  const double t = hi > lo ? std::clamp((value - lo) / (hi - lo), 0.0, 1.0) : 0.0;
  std::array<int, 3> rgb{};
  for (int i = 0; i < 3; ++i) {
    rgb[i] = static_cast<int>(std::lround(a[i] + t * (b[i] - a[i])));
  }
  return ToHexColor(rgb);
}

std::string RenderHeatmapSvg(const DomainMatrix& matrix, const HeatmapPalette& palette) {
  const std::size_t n = matrix.size();
  const int cell = palette.cell_size;
  const int fs = palette.font_size;

  double lo = 0, hi = 0;
  if (!matrix.cells.empty()) {
    lo = *std::min_element(matrix.cells.begin(), matrix.cells.end());
    hi = *std::max_element(matrix.cells.begin(), matrix.cells.end());
  }

  int label_w = 0;
  for (const auto& l : matrix.labels) label_w = std::max(label_w, TextWidth(l, fs));
  const int pad = 10;
  const int bar_h = 14;
  const int grid_w = static_cast<int>(n) * cell;
  const int left = pad + label_w + 6;
  const int bar_top = pad + fs + 4;                   // title line above the bar
  const int col_label_top = bar_top + bar_h + fs + 12;  // bar, its tick labels
  // Column labels are rotated -45 degrees; reserve their projected height.
  const int col_label_h = static_cast<int>(std::ceil(label_w * 0.7072)) + fs;
  const int top = col_label_top + col_label_h;
  const int width = left + std::max(grid_w, 120) + pad + label_w / 2;
  const int height = top + grid_w + pad;
  const int bar_w = std::max(grid_w, 120);

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
       std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
       std::to_string(width) + " " + std::to_string(height) + "\" font-family=\"sans-serif\" " +
       "font-size=\"" + std::to_string(fs) + "\">\n";
  s += "  <defs>\n    <linearGradient id=\"colorbar\" x1=\"0\" y1=\"0\" x2=\"1\" y2=\"0\">\n";
  s += "      <stop offset=\"0\" stop-color=\"" + palette.low + "\"/>\n";
  s += "      <stop offset=\"1\" stop-color=\"" + palette.high + "\"/>\n";
  s += "    </linearGradient>\n  </defs>\n";
  s += "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" + std::to_string(width) +
       "\" height=\"" + std::to_string(height) + "\" fill=\"#ffffff\"/>\n";
  s += "  <text class=\"title\" x=\"" + std::to_string(left) + "\" y=\"" +
       std::to_string(pad + fs) + "\">" + XmlEscape(std::string(MatrixMetricName(matrix.metric))) +
       "</text>\n";

  // Colour bar with its value range.
  const std::string lo_text = FormatDecimal(lo, 3), hi_text = FormatDecimal(hi, 3);
  s += "  <rect class=\"colorbar\" x=\"" + std::to_string(left) + "\" y=\"" +
       std::to_string(bar_top) + "\" width=\"" + std::to_string(bar_w) + "\" height=\"" +
       std::to_string(bar_h) + "\" fill=\"url(#colorbar)\" stroke=\"#666666\"/>\n";
  const int tick_y = bar_top + bar_h + fs + 2;
  s += "  <text class=\"colorbar-min\" x=\"" + std::to_string(left) + "\" y=\"" +
       std::to_string(tick_y) + "\">" + lo_text + "</text>\n";
  s += "  <text class=\"colorbar-max\" x=\"" + std::to_string(left + bar_w) + "\" y=\"" +
       std::to_string(tick_y) + "\" text-anchor=\"end\">" + hi_text + "</text>\n";
  s += "  <text class=\"range\" x=\"" + std::to_string(left + bar_w / 2) + "\" y=\"" +
       std::to_string(tick_y) + "\" text-anchor=\"middle\">" + lo_text + "–" + hi_text +
       "</text>\n";

  for (std::size_t j = 0; j < n; ++j) {
    const int x = left + static_cast<int>(j) * cell + cell / 2;
    const int y = top - 4;
    s += "  <text class=\"col-label\" x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
         "\" transform=\"rotate(-45 " + std::to_string(x) + " " + std::to_string(y) + ")\">" +
         XmlEscape(matrix.labels[j]) + "</text>\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    const int y = top + static_cast<int>(i) * cell;
    s += "  <text class=\"row-label\" x=\"" + std::to_string(left - 6) + "\" y=\"" +
         std::to_string(y + cell / 2 + fs / 3) + "\" text-anchor=\"end\">" +
         XmlEscape(matrix.labels[i]) + "</text>\n";
    for (std::size_t j = 0; j < n; ++j) {
      const double v = matrix.at(i, j);
      const std::string fill = i == j ? palette.diagonal : InterpolateColor(palette, v, lo, hi);
      const int x = left + static_cast<int>(j) * cell;
      s += "  <rect class=\"cell\" data-row=\"" + std::to_string(i) + "\" data-col=\"" +
           std::to_string(j) + "\" data-value=\"" + FormatNumber(v) + "\" x=\"" +
           std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
           std::to_string(cell) + "\" height=\"" + std::to_string(cell) + "\" fill=\"" + fill +
           "\" stroke=\"#ffffff\"/>\n";
      const double t = hi > lo ? (v - lo) / (hi - lo) : 0.0;
      s += "  <text class=\"value\" x=\"" + std::to_string(x + cell / 2) + "\" y=\"" +
           std::to_string(y + cell / 2 + fs / 3) + "\" text-anchor=\"middle\" fill=\"" +
           (i != j && t > 0.55 ? "#ffffff" : "#222222") + "\">" + FormatDecimal(v, 2) +
           "</text>\n";
    }
  }
  s += "</svg>\n";
  return s;
}

std::size_t WriteHeatmapSvg(const DomainMatrix& matrix, const std::filesystem::path& out,
                            const HeatmapPalette& palette) {
  return WriteFileBytes(out, RenderHeatmapSvg(matrix, palette));
}

}  // namespace ontomesh
