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
#include <stdexcept>
#include <string>
#include <vector>

#include "sinksub/additive.hpp"
#include "sinksub/nim.hpp"
#include "sinksub/word.hpp"

namespace sinksub {

// ---------------------------------------------------------------------------
// Recurrence check
// ---------------------------------------------------------------------------

struct MexViolation {
  std::uint64_t position;  // absolute, starting at 1
  Nimber expected;         // mex of the option values
  Nimber found;            // word value

  friend bool operator==(const MexViolation&, const MexViolation&) = default;
};

struct MexCheck {
  std::uint64_t checked_positions = 0;
  std::vector<MexViolation> violations;  // in position order

  [[nodiscard]] bool pass() const { return violations.empty(); }
};

// Repeats `word` from x = 1 with the sink below, and checks the mex rule at
// positions 1 .. 2|word| + max_move. A pass certifies the infinite periodic
// extension: every window in the second copy already occurred in the first.
// Throws std::invalid_argument on an empty word.
[[nodiscard]] MexCheck verify_mex_consistency(std::span<const Nimber> word,
                                              const SubtractionSet& set);
[[nodiscard]] MexCheck verify_mex_consistency(const PeriodWord& word,
                                              const SubtractionSet& set);

// ---------------------------------------------------------------------------
// Factor-level audit of the Case II block word
// ---------------------------------------------------------------------------

// One (move, source factor) pair whose translate meets the audited factor.
struct AuditWitness {
  std::uint64_t move;
  std::string source;          // relative name: "sink", "A2", "b4", "Z", "c8", ...
  std::int64_t cover_lo;       // covered sub-range of the audited factor
  std::int64_t cover_hi;
};

struct ReachabilityEntry {
  Nimber value;                        // a value below the factor value
  std::vector<AuditWitness> witnesses; // jointly cover the whole factor
};

struct AuditRecord {
  std::uint32_t copy;          // 0: first period (meets the sink), 1: second
  std::uint64_t block;         // block index i
  FactorLabel label;
  std::string context;         // sinkB, bB, bZB, cB, bC, cC
  Nimber claimed_value;
  std::int64_t lo;             // absolute positions, x = 1 is the first letter
  std::int64_t hi;
  std::vector<ReachabilityEntry> reachability;
  bool collision_check = true; // no option carries claimed_value

  // Compact id such as "A3" or "Z".
  [[nodiscard]] std::string factor_id() const { return to_string(label); }
};

struct AuditReport {
  std::uint64_t m = 0;
  std::uint64_t k = 0;
  std::uint64_t word_length = 0;
  std::vector<AuditRecord> records;
  // Smallest gap, counted in letters strictly between them, over same-label
  // factors of adjacent blocks; must exceed 3m + k.
  std::uint64_t min_similar_gap = 0;
  std::uint64_t similar_pairs = 0;
};

class AuditFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lays out the block word twice after the sink and checks every factor of
// both copies. Throws WrongCase / UnsupportedDelta outside the Case II base
// layer and AuditFailure on the first uncovered position, collision or
// separation defect.
[[nodiscard]] AuditReport audit_tables(const AdditiveParams& params);

// One line per record, listing witnesses per smaller value.
void write_audit_trace(std::ostream& out, const AuditReport& report);

// ---------------------------------------------------------------------------
// Index identities and block structure
// ---------------------------------------------------------------------------

struct IdentityCheck {
  bool pass = true;
  std::uint64_t i = 0;       // first failing block index
  std::string identity;      // which identity failed
  std::string detail;
};

// For every i in [0, m):
//   gamma > alpha  =>  gamma - alpha = k
//   gamma < alpha  =>  alpha - beta = m - k, beta < k, alpha > m - k
//   alpha(i) = beta(i-1)            (beta(-1) = 0)
//   alpha(i) = gamma(i-1) mod m     (i >= 1; gamma = m wraps to 0)
[[nodiscard]] IdentityCheck check_lemma_identities(std::uint64_t m, std::uint64_t k);

// Block lengths, short/long counts per index cycle, periodicity of the block
// pattern in i, Z placement, and the lengths of the cycle and full words.
[[nodiscard]] IdentityCheck check_block_structure(std::uint64_t m, std::uint64_t k);

}  // namespace sinksub
