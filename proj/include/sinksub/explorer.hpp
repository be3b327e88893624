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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sinksub/additive.hpp"
#include "sinksub/period.hpp"

namespace sinksub {

struct ScanRow {
  std::uint64_t m = 0;
  std::uint64_t delta = 0;
  std::uint64_t d = 0;
  AdditiveCase case_tag = AdditiveCase::I;
  std::uint64_t formula_period = 0;
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;
  bool match = false;  // preperiod == 0 && period == formula_period
  std::uint64_t wall_period = 0;
  bool rotation_dual = false;  // sink and wall words agree up to rotation

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

[[nodiscard]] ScanRow scan_row(std::uint64_t m, std::uint64_t delta);

// Rows for 1 <= m <= m_max, 1 <= delta <= delta_max in (m, delta) order,
// computed on `threads` workers (0 picks the hardware concurrency).
[[nodiscard]] std::vector<ScanRow> scan_additive(std::uint64_t m_max, std::uint64_t delta_max,
                                                 unsigned threads = 1);

// Header m,delta,d,case,formula_period,preperiod,period,match,wall_period,rotation_dual
void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows);

struct ScanSummary {
  std::size_t rows = 0;
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t same_length = 0;    // wall period equals sink period
  std::size_t rotation_dual = 0;
};

[[nodiscard]] ScanSummary summarize(std::span<const ScanRow> rows);
void write_summary(std::ostream& out, const ScanSummary& summary);

// Sink and wall periods side by side. The duality is a conjecture; both
// flags are reported, never required.
struct DualityRecord {
  PeriodInfo sink;
  PeriodInfo wall;
  bool same_length = false;
  bool rotation_dual = false;
};

[[nodiscard]] DualityRecord duality_report(const SubtractionSet& set);

}  // namespace sinksub
