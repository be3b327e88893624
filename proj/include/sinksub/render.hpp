// Copyright 2026 The sinksub Authors
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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sinksub/nim.hpp"

namespace sinksub {

using Rgb = std::array<std::uint8_t, 3>;

// 0 purple, 1 blue, 2 green, 3 yellow.
[[nodiscard]] const std::map<Nimber, Rgb>& default_palette();
inline constexpr Rgb kBackground{255, 255, 255};

struct RasterRow {
  std::string label;
  std::vector<Nimber> values;
};

// One band per row, padded on the right with the background colour.
struct NimberRaster {
  std::vector<RasterRow> rows;
  std::uint64_t width = 0;  // longest row
  std::map<Nimber, Rgb> palette = default_palette();

  void add_row(std::string label, std::vector<Nimber> values);
};

enum class RenderMode { PerK, PerDeltaClass };

[[nodiscard]] RenderMode parse_render_mode(const std::string& text);

struct RenderOptions {
  std::uint64_t m = 2;
  RenderMode mode = RenderMode::PerK;
  std::uint64_t scale = 1;  // pixel rows per band; one pixel column per position
  // PerDeltaClass: residue d = delta mod 2m and layers n = 0..layers-1, with
  // delta = d + 2mn (n starts at 1 when d = 0).
  std::uint64_t d = 0;
  std::uint64_t layers = 4;
};

// Rows of the family: per k, delta = m + k for k in 1..m-1; per class, the
// deltas above. Each row is the brute-force sink sequence over one formula
// period, starting at x = 1.
[[nodiscard]] NimberRaster family_raster(const RenderOptions& options);

// Binary P6 image; height = rows * scale, width = raster.width.
// Throws std::invalid_argument for a value missing from the palette.
[[nodiscard]] std::string to_ppm(const NimberRaster& raster, std::uint64_t scale);

[[nodiscard]] std::string render_family(const RenderOptions& options);

// Writes bytes to `path`; throws std::runtime_error on I/O failure.
void write_file(const std::string& path, const std::string& bytes);

}  // namespace sinksub
