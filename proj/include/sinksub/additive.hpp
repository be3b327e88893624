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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sinksub/nim.hpp"
#include "sinksub/word.hpp"

namespace sinksub {

// Additive three-move sets S(m, delta) = {m, m+delta, 2m+delta}.
//
// With d = delta mod 2m the family splits in two:
//   Case I   (0 <= d <= m): linear period 3m + 2*delta - d,
//   Case II  (m < d < 2m) : quadratic period m(m + 2*delta + d) / gcd(m, d).
// Case II is further described by k = d - m in [1, m-1].

enum class AdditiveCase { I, II };

[[nodiscard]] const char* to_string(AdditiveCase c);

class WrongCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedDelta : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AdditiveParams {
  std::uint64_t m = 1;
  std::uint64_t delta = 1;
  std::uint64_t d = 0;  // delta mod 2m
  AdditiveCase case_tag = AdditiveCase::I;
  std::uint64_t k = 0;  // d - m; Case II only, else 0
  std::uint64_t a = 0;  // (delta - d) / 2m + 1; Case I only, else 0
  std::uint64_t g = 1;  // gcd(m, d), which equals gcd(m, k) in Case II
  // Case II only (else 0): m = g * index_period, k = g * long_blocks.
  std::uint64_t index_period = 0;
  std::uint64_t long_blocks = 0;

  [[nodiscard]] std::array<std::uint64_t, 3> moves() const {
    return {m, m + delta, 2 * m + delta};
  }
  [[nodiscard]] SubtractionSet set() const {
    const auto s = moves();
    return SubtractionSet{s[0], s[1], s[2]};
  }
  // Case II with m < delta < 2m, the regime with an explicit block word.
  [[nodiscard]] bool base_layer() const {
    return case_tag == AdditiveCase::II && delta < 2 * m;
  }

  friend bool operator==(const AdditiveParams&, const AdditiveParams&) = default;
};

// Throws std::invalid_argument when m or delta is zero.
[[nodiscard]] AdditiveParams reduce_params(std::uint64_t m, std::uint64_t delta);

// Recognizes {a, b, a+b} with a < b and returns the matching (m, delta).
[[nodiscard]] std::optional<AdditiveParams> as_additive(const SubtractionSet& set);

[[nodiscard]] std::uint64_t period_formula(const AdditiveParams& params);

// (1^m 2^m)^a 3^d 0^m (3^m 0^m)^(a-1). Throws WrongCase for Case II.
[[nodiscard]] PeriodWord candidate_word_case1(const AdditiveParams& params);

// alpha = [k i], beta = [k(i+1)], gamma = smallest positive representative of
// k(i+1), all modulo m.
struct BlockIndices {
  std::uint64_t i = 0;
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  std::uint64_t gamma = 0;

  friend bool operator==(const BlockIndices&, const BlockIndices&) = default;
};

[[nodiscard]] BlockIndices block_indices(std::uint64_t i, std::uint64_t m, std::uint64_t k);

// Factor names inside one block. A1..A3 form the prefix A(i); B1..B5 and
// C1..C9 follow it in B- and C-blocks; Z is the inserted 0^m.
enum class FactorLabel : std::uint8_t {
  A1, A2, A3,
  B1, B2, B3, B4, B5,
  C1, C2, C3, C4, C5, C6, C7, C8, C9,
  Z,
};

[[nodiscard]] std::string to_string(FactorLabel label);

struct LabeledFactor {
  FactorLabel label;
  std::uint64_t block;   // block index i
  Factor factor;
  std::uint64_t offset;  // first position, 0-based, within the enclosing word
};

struct Block {
  BlockTag tag;          // B or C
  BlockIndices indices;
  // Every factor of the block in order, empty ones included, followed by Z
  // when zeta is set. Offsets are relative to the block start.
  std::vector<LabeledFactor> factors;
  bool zeta = false;     // beta == 0: a 0^m factor follows the block

  // Length of the B or C part alone.
  [[nodiscard]] std::uint64_t core_length() const;
  // Length including the Z factor when present.
  [[nodiscard]] std::uint64_t length() const;
};

// B(i) when gamma > alpha, C(i) otherwise. Requires 1 <= k < m.
[[nodiscard]] Block build_block(const BlockIndices& idx, std::uint64_t m, std::uint64_t k);

// Nonempty labeled factors of blocks first..first+count-1 laid out back to
// back, with offsets counted from the start of block `first`.
[[nodiscard]] std::vector<LabeledFactor> block_layout(std::uint64_t m, std::uint64_t k,
                                                      std::uint64_t first,
                                                      std::uint64_t count);

// The product over i = 0..m-1 of phi(i) zeta(i). Its length is m(4m+3k),
// which is gcd(m,k) copies of the minimal period. Throws WrongCase for
// Case I and UnsupportedDelta for delta > 2m.
[[nodiscard]] PeriodWord build_period_word_case2(const AdditiveParams& params);

// The same product over one index cycle i = 0..m/gcd(m,k)-1, length
// m(4m+3k)/gcd(m,k). Same preconditions.
[[nodiscard]] PeriodWord build_period_cycle_case2(const AdditiveParams& params);

// Brute-force sink sequence of length period_formula(params).
[[nodiscard]] PeriodWord oracle_prefix_word(const AdditiveParams& params);

// Best available word of length period_formula(params): the closed-form word in
// Case I, the index-cycle block word in the Case II base layer, otherwise the
// brute-force prefix. `symbolic` reports which path was taken.
[[nodiscard]] PeriodWord candidate_word(const AdditiveParams& params, bool* symbolic = nullptr);

}  // namespace sinksub
