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

#include "sinksub/additive.hpp"

#include <numeric>

namespace sinksub {
namespace {

void require_base_layer(const AdditiveParams& p) {
  if (p.case_tag != AdditiveCase::II) {
    throw WrongCase("WrongCase: block word needs d in (m, 2m), got m=" +
                    std::to_string(p.m) + " delta=" + std::to_string(p.delta));
  }
  if (!p.base_layer()) {
    throw UnsupportedDelta("UnsupportedDelta: block word is built for m < delta < 2m only, got m=" +
                           std::to_string(p.m) + " delta=" + std::to_string(p.delta));
  }
}

PeriodWord product(std::uint64_t m, std::uint64_t k, std::uint64_t count) {
  std::vector<Factor> factors;
  std::vector<BlockEntry> blocks;
  std::uint64_t offset = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const Block block = build_block(block_indices(i, m, k), m, k);
    blocks.push_back({block.tag, static_cast<std::uint32_t>(i), offset, block.core_length()});
    offset += block.core_length();
    if (block.zeta) {
      blocks.push_back({BlockTag::Z, static_cast<std::uint32_t>(i), offset, m});
      offset += m;
    }
    for (const LabeledFactor& f : block.factors) factors.push_back(f.factor);
  }
  return PeriodWord(std::move(factors), std::move(blocks));
}

}  // namespace

const char* to_string(AdditiveCase c) { return c == AdditiveCase::I ? "I" : "II"; }

AdditiveParams reduce_params(std::uint64_t m, std::uint64_t delta) {
  if (m == 0 || delta == 0) throw std::invalid_argument("m and delta must be positive");
  AdditiveParams p;
  p.m = m;
  p.delta = delta;
  p.d = delta % (2 * m);
  p.g = std::gcd(m, p.d);
  if (p.d <= m) {
    p.case_tag = AdditiveCase::I;
    p.a = (delta - p.d) / (2 * m) + 1;
  } else {
    p.case_tag = AdditiveCase::II;
    p.k = p.d - m;
    p.index_period = m / p.g;
    p.long_blocks = p.k / p.g;
  }
  return p;
}

std::optional<AdditiveParams> as_additive(const SubtractionSet& set) {
  const auto s = set.moves();
  if (s.size() != 3 || s[0] + s[1] != s[2]) return std::nullopt;
  return reduce_params(s[0], s[1] - s[0]);
}

std::uint64_t period_formula(const AdditiveParams& p) {
  if (p.case_tag == AdditiveCase::I) return 3 * p.m + 2 * p.delta - p.d;
  return p.m * (p.m + 2 * p.delta + p.d) / p.g;
}

PeriodWord candidate_word_case1(const AdditiveParams& p) {
  if (p.case_tag != AdditiveCase::I) {
    throw WrongCase("WrongCase: closed-form linear word needs d <= m, got m=" +
                    std::to_string(p.m) + " delta=" + std::to_string(p.delta));
  }
  std::vector<Factor> factors;
  for (std::uint64_t j = 0; j < p.a; ++j) {
    factors.push_back({1, p.m});
    factors.push_back({2, p.m});
  }
  factors.push_back({3, p.d});
  factors.push_back({0, p.m});
  for (std::uint64_t j = 1; j < p.a; ++j) {
    factors.push_back({3, p.m});
    factors.push_back({0, p.m});
  }
  return PeriodWord(std::move(factors));
}

BlockIndices block_indices(std::uint64_t i, std::uint64_t m, std::uint64_t k) {
  BlockIndices idx;
  idx.i = i;
  idx.alpha = (k * i) % m;
  idx.beta = (k * (i + 1)) % m;
  idx.gamma = idx.beta == 0 ? m : idx.beta;
  return idx;
}

std::string to_string(FactorLabel label) {
  static constexpr const char* kNames[] = {
      "A1", "A2", "A3", "B1", "B2", "B3", "B4", "B5", "C1",
      "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "Z",
  };
  return kNames[static_cast<std::size_t>(label)];
}

std::uint64_t Block::core_length() const {
  std::uint64_t n = 0;
  for (const LabeledFactor& f : factors) {
    if (f.label != FactorLabel::Z) n += f.factor.length;
  }
  return n;
}

std::uint64_t Block::length() const {
  std::uint64_t n = 0;
  for (const LabeledFactor& f : factors) n += f.factor.length;
  return n;
}

Block build_block(const BlockIndices& idx, std::uint64_t m, std::uint64_t k) {
  if (k == 0 || k >= m) throw std::invalid_argument("block needs 1 <= k < m");
  const std::uint64_t al = idx.alpha;
  const std::uint64_t be = idx.beta;
  const std::uint64_t ga = idx.gamma;

  Block block;
  block.indices = idx;
  block.zeta = be == 0;
  std::uint64_t offset = 0;
  auto push = [&](FactorLabel label, Nimber symbol, std::uint64_t length) {
    block.factors.push_back({label, idx.i, {symbol, length}, offset});
    offset += length;
  };

  push(FactorLabel::A1, 1, m - al);
  push(FactorLabel::A2, 0, al);
  push(FactorLabel::A3, 2, m - al);
  if (ga > al) {
    block.tag = BlockTag::B;
    push(FactorLabel::B1, 1, ga);
    push(FactorLabel::B2, 3, m - ga);
    push(FactorLabel::B3, 2, ga);
    push(FactorLabel::B4, 0, m - al);
    push(FactorLabel::B5, 3, ga);
  } else {
    // gamma < alpha forces beta < k, so k - beta > 0.
    block.tag = BlockTag::C;
    push(FactorLabel::C1, 1, m);
    push(FactorLabel::C2, 2, m);
    push(FactorLabel::C3, 1, be);
    push(FactorLabel::C4, 0, k - be);
    push(FactorLabel::C5, 3, m - k);
    push(FactorLabel::C6, 2, be);
    push(FactorLabel::C7, 3, k - be);
    push(FactorLabel::C8, 0, m);
    push(FactorLabel::C9, 3, be);
  }
  if (block.zeta) push(FactorLabel::Z, 0, m);
  return block;
}

std::vector<LabeledFactor> block_layout(std::uint64_t m, std::uint64_t k,
                                        std::uint64_t first, std::uint64_t count) {
  std::vector<LabeledFactor> out;
  std::uint64_t base = 0;
  for (std::uint64_t i = first; i < first + count; ++i) {
    const Block block = build_block(block_indices(i % m, m, k), m, k);
    for (LabeledFactor f : block.factors) {
      if (f.factor.length == 0) continue;
      f.offset += base;
      out.push_back(f);
    }
    base += block.length();
  }
  return out;
}

PeriodWord build_period_word_case2(const AdditiveParams& p) {
  require_base_layer(p);
  return product(p.m, p.k, p.m);
}

PeriodWord build_period_cycle_case2(const AdditiveParams& p) {
  require_base_layer(p);
  return product(p.m, p.k, p.index_period);
}

PeriodWord oracle_prefix_word(const AdditiveParams& p) {
  const GrundySequence seq = grundy_sequence(p.set(), Convention::Sink, period_formula(p));
  return PeriodWord::from_values(seq.values);
}

PeriodWord candidate_word(const AdditiveParams& p, bool* symbolic) {
  const bool has_symbolic = p.case_tag == AdditiveCase::I || p.base_layer();
  if (symbolic) *symbolic = has_symbolic;
  if (p.case_tag == AdditiveCase::I) return candidate_word_case1(p);
  if (p.base_layer()) return build_period_cycle_case2(p);
  return oracle_prefix_word(p);
}

}  // namespace sinksub
