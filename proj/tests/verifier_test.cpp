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

#include "sinksub/verifier.hpp"
#include "sinksub/period.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "oracle.hpp"

namespace sinksub {
namespace {

TEST(VerifyMexTest, Examples) {
  EXPECT_TRUE(verify_mex_consistency(parse_word_digits("1230"), {1, 2, 3}).pass());

  const MexCheck bad = verify_mex_consistency(parse_word_digits("1231"), {1, 2, 3});
  ASSERT_FALSE(bad.pass());
  EXPECT_EQ(bad.violations.front(), (MexViolation{4, 0, 1}));

  const AdditiveParams p = reduce_params(5, 9);
  const PeriodWord w = build_period_word_case2(p);
  EXPECT_EQ(w.total_length(), 160u);
  const MexCheck ok = verify_mex_consistency(w, p.set());
  EXPECT_TRUE(ok.pass());
  EXPECT_EQ(ok.checked_positions, 2 * 160u + 19u);

  EXPECT_THROW((void)verify_mex_consistency(std::vector<Nimber>{}, {1}), std::invalid_argument);
}

// pass  <=>  the brute-force sequence is word-periodic over 2|w| + max S.
TEST(VerifyMexTest, AgreesWithBruteForce) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    std::set<std::uint64_t> s;
    const std::size_t want = 1 + rng() % 3;
    while (s.size() < want) s.insert(1 + rng() % 6);
    const std::vector<std::uint64_t> moves(s.begin(), s.end());
    const std::size_t len = 1 + rng() % 12;
    const std::size_t horizon = 2 * len + moves.back();
    const auto truth = oracle::sink_values(moves, horizon);
    std::vector<Nimber> word;
    if (rng() % 2) {
      word.assign(truth.begin(), truth.begin() + len);
    } else {
      for (std::size_t j = 0; j < len; ++j) word.push_back(rng() % 4);
    }
    bool periodic = true;
    for (std::size_t x = 0; x < horizon; ++x) periodic &= truth[x] == word[x % len];
    EXPECT_EQ(verify_mex_consistency(word, SubtractionSet(moves)).pass(), periodic);
  }
}

TEST(VerifyMexTest, SingleMutationsAreRejected) {
  std::mt19937 rng(23);
  for (auto [m, delta] : {std::pair{5ull, 9ull}, {6ull, 8ull}, {2ull, 5ull}, {4ull, 3ull}}) {
    const AdditiveParams p = reduce_params(m, delta);
    const std::vector<Nimber> word = candidate_word(p).expand();
    ASSERT_TRUE(verify_mex_consistency(word, p.set()).pass());
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Nimber> mutated = word;
      const std::size_t at = rng() % word.size();
      mutated[at] = (mutated[at] + 1 + rng() % 3) % 4;
      const MexCheck check = verify_mex_consistency(mutated, p.set());
      ASSERT_FALSE(check.pass());
      EXPECT_EQ(check.violations.front().position, at + 1);
    }
  }
}

TEST(LemmaIdentitiesTest, Examples) {
  EXPECT_TRUE(check_lemma_identities(5, 4).pass);
  EXPECT_TRUE(check_lemma_identities(19, 7).pass);
  EXPECT_TRUE(check_lemma_identities(2, 1).pass);
  EXPECT_THROW((void)check_lemma_identities(4, 4), std::invalid_argument);
}

TEST(BlockStructureTest, AllSmallParameters) {
  for (std::uint64_t m = 2; m <= 25; ++m) {
    for (std::uint64_t k = 1; k < m; ++k) {
      const IdentityCheck c = check_block_structure(m, k);
      EXPECT_TRUE(c.pass) << m << ' ' << k << ' ' << c.identity << ' ' << c.detail;
    }
  }
}

const AuditRecord* find_record(const AuditReport& r, std::uint32_t copy, std::uint64_t block,
                               FactorLabel label) {
  for (const AuditRecord& rec : r.records) {
    if (rec.copy == copy && rec.block == block && rec.label == label) return &rec;
  }
  return nullptr;
}

bool has_witness(const AuditRecord& rec, Nimber value, std::uint64_t move,
                 const std::string& source) {
  for (const ReachabilityEntry& e : rec.reachability) {
    if (e.value != value) continue;
    for (const AuditWitness& w : e.witnesses) {
      if (w.move == move && w.source == source) return true;
    }
  }
  return false;
}

TEST(AuditTest, LowerCaseAllBBlocks) {
  const AdditiveParams p = reduce_params(5, 6);
  const AuditReport r = audit_tables(p);
  EXPECT_EQ(r.word_length, 115u);
  EXPECT_GT(r.min_similar_gap, 3 * 5u + 1u);
  // A3 of B(1) in bB reaches 0 through s2 into the previous block's 0-factor.
  const AuditRecord* a3 = find_record(r, 1, 1, FactorLabel::A3);
  ASSERT_NE(a3, nullptr);
  EXPECT_EQ(a3->context, "bB");
  EXPECT_TRUE(has_witness(*a3, 0, 11, "b4"));
  EXPECT_TRUE(has_witness(*a3, 1, 5, "A1"));
  // In the first copy, B(0) meets the sink.
  const AuditRecord* first = find_record(r, 0, 0, FactorLabel::A3);
  ASSERT_NE(first, nullptr);
  EXPECT_EQ(first->context, "sinkB");
  EXPECT_TRUE(has_witness(*first, 0, 11, "sink"));
}

TEST(AuditTest, WrapCaseNeedsZAndPreviousZero) {
  const AdditiveParams p = reduce_params(6, 8);  // k = 2, s2 = 14, s3 = 20
  const AuditReport r = audit_tables(p);
  for (auto [copy, block] : {std::pair{0u, 3ull}, {1u, 0ull}, {1u, 3ull}}) {
    const AuditRecord* a3 = find_record(r, copy, block, FactorLabel::A3);
    ASSERT_NE(a3, nullptr);
    EXPECT_EQ(a3->context, "bZB");
    EXPECT_TRUE(has_witness(*a3, 0, 14, "Z")) << copy << ' ' << block;
    EXPECT_TRUE(has_witness(*a3, 0, 20, "b4")) << copy << ' ' << block;
  }
}

TEST(AuditTest, DoubleWitnessInCConcatenation) {
  const AdditiveParams p = reduce_params(5, 9);  // k = 4, s2 = 14, s3 = 19
  const AuditReport r = audit_tables(p);
  const AuditRecord* a3 = find_record(r, 0, 2, FactorLabel::A3);
  ASSERT_NE(a3, nullptr);
  EXPECT_EQ(a3->context, "cC");
  EXPECT_TRUE(has_witness(*a3, 0, 14, "c8"));
  EXPECT_TRUE(has_witness(*a3, 0, 19, "c4"));
}

TEST(AuditTest, PassesForSmallParametersAndImpliesVerify) {
  for (std::uint64_t m = 2; m <= 10; ++m) {
    for (std::uint64_t k = 1; k < m; ++k) {
      const AdditiveParams p = reduce_params(m, m + k);
      AuditReport r;
      ASSERT_NO_THROW(r = audit_tables(p)) << m << ' ' << k;
      EXPECT_GT(r.min_similar_gap, 3 * m + k);
      for (const AuditRecord& rec : r.records) {
        EXPECT_TRUE(rec.collision_check);
        EXPECT_EQ(rec.reachability.size(), rec.claimed_value);
      }
      EXPECT_TRUE(verify_mex_consistency(build_period_word_case2(p), p.set()).pass());
    }
  }
}

TEST(AuditTest, Preconditions) {
  EXPECT_THROW((void)audit_tables(reduce_params(5, 3)), WrongCase);
  EXPECT_THROW((void)audit_tables(reduce_params(3, 10)), UnsupportedDelta);
}

TEST(AuditTest, TraceFormat) {
  const AuditReport r = audit_tables(reduce_params(2, 3));
  std::ostringstream out;
  write_audit_trace(out, r);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("audit m=2 k=1 word_length=22", 0), 0u);
  EXPECT_NE(text.find("ctx=sinkB A1 [1,2] value=1 | 0: s2>sink[1,2]"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), static_cast<long>(r.records.size() + 1));
}

}  // namespace
}  // namespace sinksub
