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

#ifndef ONTOMESH_HEATMAP_SVG_H_
#define ONTOMESH_HEATMAP_SVG_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "ontomesh/domain_matrix.h"

namespace ontomesh {

struct HeatmapPalette {
  std::string low = "#f7fbff";
  std::string high = "#08306b";
  std::string diagonal = "#d9d9d9";
  int cell_size = 32;
  int font_size = 11;
};

// key=value lines with keys low, high, diagonal, cell_size, font_size.
// Colours are #rrggbb; lines starting with '#' are comments.
HeatmapPalette ParsePalette(std::string_view text);

std::array<int, 3> ParseHexColor(std::string_view hex);
std::string ToHexColor(const std::array<int, 3>& rgb);

// Colour for `value` on the linear scale [lo, hi]; a degenerate range maps
// everything to the low colour.
std::string InterpolateColor(const HeatmapPalette& palette, double value, double lo, double hi);

// n x n grid of <rect class="cell"> elements (diagonal in the neutral
// colour) with row and column labels, and a horizontal colour bar above
// the grid labelled with the value range.
std::string RenderHeatmapSvg(const DomainMatrix& matrix, const HeatmapPalette& palette = {});
std::size_t WriteHeatmapSvg(const DomainMatrix& matrix, const std::filesystem::path& out,
                            const HeatmapPalette& palette = {});

}  // namespace ontomesh

#endif  // ONTOMESH_HEATMAP_SVG_H_
