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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sinksub/nim.hpp"

namespace sinksub {

// No window state repeated within the horizon.
class HorizonExhausted : public std::runtime_error {
 public:
  HorizonExhausted(std::uint64_t horizon, std::string theoretical_bound);

  [[nodiscard]] std::uint64_t horizon() const { return horizon_; }
  // rho^max_move, printed as a decimal (or as "rho^max" when huge).
  [[nodiscard]] const std::string& theoretical_bound() const { return bound_; }

 private:
  std::uint64_t horizon_;
  std::string bound_;
};

struct PeriodInfo {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  std::vector<Nimber> period_word;
  std::int64_t start_index = 1;

  friend bool operator==(const PeriodInfo&, const PeriodInfo&) = default;
};

// Minimal (preperiod, period) of the nim-sequence. A repeated window of the
// last max_move values proves periodicity for every position, not only those
// inside the horizon. `horizon` counts generated positions and must be at
// least 2*max_move+2; defaults to default_horizon(set).
[[nodiscard]] PeriodInfo detect_period(const SubtractionSet& set,
                                       Convention convention,
                                       std::optional<std::uint64_t> horizon = {});

// 8 * p(m, delta) when the set is {m, m+delta, 2m+delta}, else 10^6.
[[nodiscard]] std::uint64_t default_horizon(const SubtractionSet& set);

// Start index of the lexicographically least rotation (Booth).
[[nodiscard]] std::size_t least_rotation(std::span<const Nimber> word);

// True iff both words have equal length and b is a cyclic rotation of a.
[[nodiscard]] bool minimal_rotation_equivalent(std::span<const Nimber> a,
                                               std::span<const Nimber> b);

// Digits '0'..'9' for values below 10, bracketed decimals otherwise.
[[nodiscard]] std::string word_digits(std::span<const Nimber> word);
// Inverse of word_digits for plain digit strings. Throws std::invalid_argument.
[[nodiscard]] std::vector<Nimber> parse_word_digits(const std::string& text);

}  // namespace sinksub
