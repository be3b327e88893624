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

#include <gtest/gtest.h>

#include <numeric>

#include "oracle.hpp"
#include "sinksub/period.hpp"

namespace sinksub {
namespace {

std::vector<Nimber> brute_prefix(std::uint64_t m, std::uint64_t delta, std::size_t n) {
  const auto v = oracle::sink_values({m, m + delta, 2 * m + delta}, n);
  return {v.begin(), v.end()};
}

TEST(ReduceParamsTest, Examples) {
  const AdditiveParams a = reduce_params(5, 9);
  EXPECT_EQ(a.d, 9u);
  EXPECT_EQ(a.case_tag, AdditiveCase::II);
  EXPECT_EQ(a.k, 4u);
  EXPECT_EQ(a.g, 1u);

  const AdditiveParams b = reduce_params(1, 1);
  EXPECT_EQ(b.d, 1u);
  EXPECT_EQ(b.case_tag, AdditiveCase::I);
  EXPECT_EQ(b.a, 1u);

  const AdditiveParams c = reduce_params(6, 20);
  EXPECT_EQ(c.d, 8u);
  EXPECT_EQ(c.case_tag, AdditiveCase::II);
  EXPECT_EQ(c.k, 2u);
  EXPECT_EQ(c.g, 2u);
  EXPECT_EQ(c.index_period, 3u);
  EXPECT_EQ(c.long_blocks, 1u);
  EXPECT_EQ(period_formula(c), 162u);
  EXPECT_EQ(detect_period(c.set(), Convention::Sink).period, 162u);

  EXPECT_THROW((void)reduce_params(0, 3), std::invalid_argument);
  EXPECT_THROW((void)reduce_params(3, 0), std::invalid_argument);
}

TEST(ReduceParamsTest, Invariants) {
  for (std::uint64_t m = 1; m <= 15; ++m) {
    for (std::uint64_t delta = 1; delta <= 8 * m; ++delta) {
      const AdditiveParams p = reduce_params(m, delta);
      const auto s = p.moves();
      EXPECT_LT(s[0], s[1]);
      EXPECT_LT(s[1], s[2]);
      EXPECT_EQ(s[0] + s[1], s[2]);
      EXPECT_LT(p.d, 2 * m);
      EXPECT_EQ(p.case_tag == AdditiveCase::I, p.d <= m);
      if (m == 1) EXPECT_EQ(p.case_tag, AdditiveCase::I);
      if (p.case_tag == AdditiveCase::II) {
        EXPECT_GE(p.k, 1u);
        EXPECT_LE(p.k, m - 1);
        EXPECT_EQ(p.g, std::gcd(m, p.k));
        EXPECT_EQ(std::gcd(p.index_period, p.long_blocks), 1u);
      } else {
        EXPECT_EQ(p.a, (delta - p.d) / (2 * m) + 1);
      }
      auto back = as_additive(p.set());
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, p);
    }
  }
  EXPECT_FALSE(as_additive({2, 5}).has_value());
  EXPECT_FALSE(as_additive({2, 5, 8}).has_value());
}

TEST(PeriodFormulaTest, WorkedValues) {
  EXPECT_EQ(period_formula(reduce_params(5, 6)), 115u);
  EXPECT_EQ(period_formula(reduce_params(5, 9)), 160u);
  EXPECT_EQ(period_formula(reduce_params(6, 8)), 90u);
  EXPECT_EQ(period_formula(reduce_params(6, 10)), 108u);
  const AdditiveParams p = reduce_params(2, 5);
  EXPECT_EQ(p.d, 1u);
  EXPECT_EQ(p.case_tag, AdditiveCase::I);
  EXPECT_EQ(period_formula(p), 15u);
  EXPECT_EQ(detect_period(p.set(), Convention::Sink).period, 15u);
}

TEST(PeriodFormulaTest, BaseLayerMatchesBlockLength) {
  for (std::uint64_t m = 2; m <= 30; ++m) {
    for (std::uint64_t k = 1; k < m; ++k) {
      EXPECT_EQ(period_formula(reduce_params(m, m + k)),
                m * (4 * m + 3 * k) / std::gcd(m, k));
    }
  }
}

TEST(PeriodFormulaTest, LayerIncrement) {
  for (std::uint64_t m = 2; m <= 12; ++m) {
    for (std::uint64_t d = m + 1; d < 2 * m; ++d) {
      for (std::uint64_t n = 0; n < 4; ++n) {
        const std::uint64_t lo = period_formula(reduce_params(m, d + 2 * m * n));
        const std::uint64_t hi = period_formula(reduce_params(m, d + 2 * m * (n + 1)));
        EXPECT_EQ(hi - lo, 4 * m * m / std::gcd(m, d));
      }
    }
  }
  // Confirmed by detection for small layers.
  for (std::uint64_t m = 2; m <= 5; ++m) {
    for (std::uint64_t d = m + 1; d < 2 * m; ++d) {
      for (std::uint64_t n = 0; n <= 2; ++n) {
        const AdditiveParams p = reduce_params(m, d + 2 * m * n);
        const PeriodInfo info = detect_period(p.set(), Convention::Sink);
        EXPECT_EQ(info.preperiod, 0u);
        EXPECT_EQ(info.period, period_formula(p));
      }
    }
  }
}

TEST(CaseOneWordTest, Examples) {
  EXPECT_EQ(candidate_word_case1(reduce_params(1, 1)).digits(), "1230");
  EXPECT_EQ(candidate_word_case1(reduce_params(2, 2)).digits(), "11223300");
  const PeriodWord w = candidate_word_case1(reduce_params(2, 4));
  EXPECT_EQ(w.digits(), "11221122003300");
  EXPECT_EQ(w.run_length(), "1^2 2^2 1^2 2^2 0^2 3^2 0^2");
  EXPECT_EQ(w.total_length(), 14u);
  EXPECT_EQ(w.expand(), brute_prefix(2, 4, 14));
  EXPECT_THROW((void)candidate_word_case1(reduce_params(5, 9)), WrongCase);
}

TEST(CaseOneWordTest, LengthMatchesFormula) {
  for (std::uint64_t m = 1; m <= 12; ++m) {
    for (std::uint64_t delta = 1; delta <= 8 * m; ++delta) {
      const AdditiveParams p = reduce_params(m, delta);
      if (p.case_tag != AdditiveCase::I) continue;
      const PeriodWord w = candidate_word_case1(p);
      EXPECT_EQ(w.total_length(), period_formula(p));
      for (std::size_t j = 1; j < w.factors().size(); ++j) {
        EXPECT_NE(w.factors()[j].symbol, w.factors()[j - 1].symbol);
      }
    }
  }
}

TEST(BlockIndicesTest, Examples) {
  EXPECT_EQ(block_indices(0, 5, 4), (BlockIndices{0, 0, 4, 4}));
  EXPECT_EQ(block_indices(1, 5, 4), (BlockIndices{1, 4, 3, 3}));
  EXPECT_EQ(block_indices(2, 6, 2), (BlockIndices{2, 4, 0, 6}));
}

TEST(BlockIndicesTest, Invariants) {
  for (std::uint64_t m = 2; m <= 20; ++m) {
    for (std::uint64_t k = 1; k < m; ++k) {
      for (std::uint64_t i = 0; i < m; ++i) {
        const BlockIndices x = block_indices(i, m, k);
        EXPECT_LT(x.alpha, m);
        EXPECT_LT(x.beta, m);
        EXPECT_GE(x.gamma, 1u);
        EXPECT_LE(x.gamma, m);
        EXPECT_EQ(x.gamma, x.beta > 0 ? x.beta : m);
        if (i == 0) EXPECT_EQ(x.alpha, 0u);
        if (i >= 1) EXPECT_EQ(x.alpha, block_indices(i - 1, m, k).beta);
      }
    }
  }
}

std::string rle(const Block& b) {
  std::string out;
  for (const LabeledFactor& f : b.factors) {
    if (f.factor.length == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(f.factor.symbol) + "^" + std::to_string(f.factor.length);
  }
  return out;
}

TEST(BuildBlockTest, Examples) {
  const Block b0 = build_block(block_indices(0, 5, 4), 5, 4);
  EXPECT_EQ(b0.tag, BlockTag::B);
  EXPECT_FALSE(b0.zeta);
  EXPECT_EQ(rle(b0), "1^5 2^5 1^4 3^1 2^4 0^5 3^4");
  EXPECT_EQ(b0.core_length(), 28u);

  const Block b1 = build_block(block_indices(1, 5, 4), 5, 4);
  EXPECT_EQ(b1.tag, BlockTag::C);
  EXPECT_EQ(b1.core_length(), 33u);
  // alpha=4, beta=3: A = 1^1 0^4 2^1, then 1^5 2^5 1^3 0^1 3^1 2^3 3^1 0^5 3^3.
  EXPECT_EQ(rle(b1), "1^1 0^4 2^1 1^5 2^5 1^3 0^1 3^1 2^3 3^1 0^5 3^3");

  // The lower-case block 1^{m-i} 0^i 2^{m-i} 1^{1+i} 3^{m-1-i} 2^{1+i} 0^{m-i} 3^{1+i}.
  for (std::uint64_t i = 0; i < 5; ++i) {
    const Block b = build_block(block_indices(i, 5, 1), 5, 1);
    EXPECT_EQ(b.tag, BlockTag::B);
    std::vector<Factor> expected{{1, 5 - i}, {0, i}, {2, 5 - i}, {1, 1 + i},
                                 {3, 4 - i}, {2, 1 + i}, {0, 5 - i}, {3, 1 + i}};
    if (i == 4) expected.push_back({0, 5});
    std::vector<Factor> got;
    for (const LabeledFactor& f : b.factors) got.push_back(f.factor);
    EXPECT_EQ(got, expected) << "i=" << i;
  }

  const Block wrap = build_block(block_indices(2, 6, 2), 6, 2);
  EXPECT_EQ(wrap.tag, BlockTag::B);
  EXPECT_TRUE(wrap.zeta);
  EXPECT_EQ(wrap.length(), wrap.core_length() + 6);
  EXPECT_THROW((void)build_block(block_indices(0, 5, 5), 5, 5), std::invalid_argument);
}

TEST(BlockWordTest, WorkedStructures) {
  struct Case {
    std::uint64_t m, k;
    const char* blocks;
    std::uint64_t cycle_length;
  };
  for (const Case& c : {Case{5, 1, "BBBBBZ", 115}, Case{5, 4, "BCCCBZ", 160},
                        Case{6, 2, "BBBZBBBZ", 90}, Case{6, 4, "BCBZBCBZ", 108}}) {
    const AdditiveParams p = reduce_params(c.m, c.m + c.k);
    const PeriodWord full = build_period_word_case2(p);
    const PeriodWord cycle = build_period_cycle_case2(p);
    EXPECT_EQ(full.block_string(), c.blocks);
    EXPECT_EQ(cycle.total_length(), c.cycle_length);
    EXPECT_EQ(full.total_length(), p.g * c.cycle_length);
    EXPECT_EQ(full.factors().back(), (Factor{0, c.m}));
    EXPECT_EQ(cycle.total_length(), period_formula(p));
  }
}

TEST(BlockWordTest, Preconditions) {
  EXPECT_THROW((void)build_period_word_case2(reduce_params(5, 3)), WrongCase);
  EXPECT_THROW((void)build_period_word_case2(reduce_params(5, 19)), UnsupportedDelta);
  EXPECT_THROW((void)build_period_cycle_case2(reduce_params(3, 10)), UnsupportedDelta);
}

TEST(BlockWordTest, ZIsAlwaysPrecededByB) {
  for (std::uint64_t m = 2; m <= 20; ++m) {
    for (std::uint64_t k = 1; k < m; ++k) {
      const PeriodWord w = build_period_word_case2(reduce_params(m, m + k));
      const auto& blocks = w.blocks();
      ASSERT_FALSE(blocks.empty());
      EXPECT_EQ(blocks.back().tag, BlockTag::Z);
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (blocks[j].tag == BlockTag::Z) {
          ASSERT_GT(j, 0u);
          EXPECT_EQ(blocks[j - 1].tag, BlockTag::B);
        }
      }
    }
  }
}

TEST(OracleWordTest, Examples) {
  EXPECT_EQ(oracle_prefix_word(reduce_params(1, 1)).digits(), "1230");
  const AdditiveParams p59 = reduce_params(5, 9);
  EXPECT_EQ(oracle_prefix_word(p59), build_period_word_case2(p59));
  const AdditiveParams p = reduce_params(3, 10);
  EXPECT_EQ(p.d, 4u);
  EXPECT_EQ(p.k, 1u);
  EXPECT_EQ(period_formula(p), 81u);
  EXPECT_EQ(oracle_prefix_word(p).total_length(), 81u);
  EXPECT_EQ(detect_period(p.set(), Convention::Sink),
            (PeriodInfo{0, 81, oracle_prefix_word(p).expand(), 1}));
}

TEST(OracleWordTest, ConstructionsEqualBruteForce) {
  for (std::uint64_t m = 1; m <= 10; ++m) {
    for (std::uint64_t delta = 1; delta <= 6 * m; ++delta) {
      const AdditiveParams p = reduce_params(m, delta);
      if (p.case_tag != AdditiveCase::I) continue;
      const PeriodWord w = candidate_word_case1(p);
      EXPECT_EQ(w.expand(), brute_prefix(m, delta, w.total_length())) << m << ' ' << delta;
    }
    for (std::uint64_t k = 1; k < m; ++k) {
      const PeriodWord w = build_period_word_case2(reduce_params(m, m + k));
      EXPECT_EQ(w.expand(), brute_prefix(m, m + k, w.total_length())) << m << ' ' << k;
    }
  }
}

TEST(CandidateWordTest, Dispatch) {
  bool symbolic = false;
  EXPECT_EQ(candidate_word(reduce_params(1, 1), &symbolic).digits(), "1230");
  EXPECT_TRUE(symbolic);
  EXPECT_EQ(candidate_word(reduce_params(6, 8), &symbolic).total_length(), 90u);
  EXPECT_TRUE(symbolic);
  EXPECT_EQ(candidate_word(reduce_params(3, 10), &symbolic).total_length(), 81u);
  EXPECT_FALSE(symbolic);
}

}  // namespace
}  // namespace sinksub
