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

#include "sinksub/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

namespace sinksub {
namespace {

PeriodInfo detect_with_retry(const SubtractionSet& set, Convention convention) {
  try {
    return detect_period(set, convention);
  } catch (const HorizonExhausted& e) {
    // Wall sequences may carry a long pre-period; give them one wider try.
    const std::uint64_t wider = std::max<std::uint64_t>(1'000'000, 8 * e.horizon());
    return detect_period(set, convention, wider);
  }
}

}  // namespace

DualityRecord duality_report(const SubtractionSet& set) {
  DualityRecord rec;
  rec.sink = detect_with_retry(set, Convention::Sink);
  rec.wall = detect_with_retry(set, Convention::Wall);
  rec.same_length = rec.sink.period == rec.wall.period;
  rec.rotation_dual = minimal_rotation_equivalent(rec.sink.period_word, rec.wall.period_word);
  return rec;
}

ScanRow scan_row(std::uint64_t m, std::uint64_t delta) {
  const AdditiveParams params = reduce_params(m, delta);
  const DualityRecord dual = duality_report(params.set());
  ScanRow row;
  row.m = m;
  row.delta = delta;
  row.d = params.d;
  row.case_tag = params.case_tag;
  row.formula_period = period_formula(params);
  row.preperiod = dual.sink.preperiod;
  row.period = dual.sink.period;
  row.match = row.preperiod == 0 && row.period == row.formula_period;
  row.wall_period = dual.wall.period;
  row.rotation_dual = dual.rotation_dual;
  return row;
}

std::vector<ScanRow> scan_additive(std::uint64_t m_max, std::uint64_t delta_max,
                                   unsigned threads) {
  if (m_max == 0 || delta_max == 0) {
    throw std::invalid_argument("m_max and delta_max must be positive");
  }
  const std::size_t total = m_max * delta_max;
  std::vector<ScanRow> rows(total);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));

  // Each worker writes only its own slots; the slot index fixes the order.
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t j = next++; j < total; j = next++) {
      try {
        rows[j] = scan_row(j / delta_max + 1, j % delta_max + 1);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows) {
  out << "m,delta,d,case,formula_period,preperiod,period,match,wall_period,rotation_dual\n";
  for (const ScanRow& r : rows) {
    out << r.m << ',' << r.delta << ',' << r.d << ',' << to_string(r.case_tag) << ','
        << r.formula_period << ',' << r.preperiod << ',' << r.period << ','
        << (r.match ? "true" : "false") << ',' << r.wall_period << ','
        << (r.rotation_dual ? "true" : "false") << '\n';
  }
}

ScanSummary summarize(std::span<const ScanRow> rows) {
  ScanSummary s;
  s.rows = rows.size();
  for (const ScanRow& r : rows) {
    (r.match ? s.matches : s.mismatches) += 1;
    if (r.wall_period == r.period) ++s.same_length;
    if (r.rotation_dual) ++s.rotation_dual;
  }
  return s;
}

void write_summary(std::ostream& out, const ScanSummary& s) {
  out << "rows=" << s.rows << " matches=" << s.matches << " mismatches=" << s.mismatches
      << " same_length=" << s.same_length << " rotation_dual=" << s.rotation_dual << '\n';
}

}  // namespace sinksub
