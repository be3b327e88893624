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

#include "sinksub/render.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "sinksub/additive.hpp"

namespace sinksub {

const std::map<Nimber, Rgb>& default_palette() {
  static const std::map<Nimber, Rgb> palette{
      {0, {100, 40, 140}},
      {1, {40, 80, 220}},
      {2, {40, 170, 80}},
      {3, {240, 200, 40}},
  };
  return palette;
}

void NimberRaster::add_row(std::string label, std::vector<Nimber> values) {
  width = std::max<std::uint64_t>(width, values.size());
  rows.push_back({std::move(label), std::move(values)});
}

RenderMode parse_render_mode(const std::string& text) {
  if (text == "per_k") return RenderMode::PerK;
  if (text == "per_delta_class") return RenderMode::PerDeltaClass;
  throw std::invalid_argument("unknown render mode '" + text + "'");
}

NimberRaster family_raster(const RenderOptions& opt) {
  if (opt.m == 0) throw std::invalid_argument("m must be positive");
  std::vector<std::uint64_t> deltas;
  if (opt.mode == RenderMode::PerK) {
    if (opt.m < 2) throw std::invalid_argument("per_k mode needs m >= 2");
    for (std::uint64_t k = 1; k < opt.m; ++k) deltas.push_back(opt.m + k);
  } else {
    if (opt.d >= 2 * opt.m) throw std::invalid_argument("d must lie in [0, 2m)");
    if (opt.layers == 0) throw std::invalid_argument("layers must be positive");
    const std::uint64_t first = opt.d == 0 ? 1 : 0;
    for (std::uint64_t n = first; n < first + opt.layers; ++n) {
      deltas.push_back(opt.d + 2 * opt.m * n);
    }
  }

  NimberRaster raster;
  for (std::uint64_t delta : deltas) {
    const AdditiveParams p = reduce_params(opt.m, delta);
    GrundySequence seq = grundy_sequence(p.set(), Convention::Sink, period_formula(p));
    raster.add_row("m=" + std::to_string(opt.m) + " delta=" + std::to_string(delta),
                   std::move(seq.values));
  }
  return raster;
}

std::string to_ppm(const NimberRaster& raster, std::uint64_t scale) {
  if (scale == 0) throw std::invalid_argument("scale must be positive");
  const std::uint64_t height = raster.rows.size() * scale;
  std::string out = "P6\n" + std::to_string(raster.width) + " " + std::to_string(height) +
                    "\n255\n";
  const std::size_t header = out.size();
  out.reserve(header + 3 * raster.width * height);

  std::string band;
  for (const RasterRow& row : raster.rows) {
    band.clear();
    for (std::uint64_t x = 0; x < raster.width; ++x) {
      Rgb c = kBackground;
      if (x < row.values.size()) {
        auto it = raster.palette.find(row.values[x]);
        if (it == raster.palette.end()) {
          throw std::invalid_argument("no palette entry for value " +
                                      std::to_string(row.values[x]));
        }
        c = it->second;
      }
      band.append(reinterpret_cast<const char*>(c.data()), c.size());
    }
    for (std::uint64_t r = 0; r < scale; ++r) out += band;
  }
  return out;
}

std::string render_family(const RenderOptions& options) {
  return to_ppm(family_raster(options), options.scale);
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace sinksub
