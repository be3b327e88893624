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

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sinksub {

MexCheck verify_mex_consistency(std::span<const Nimber> word, const SubtractionSet& set) {
  if (word.empty()) throw std::invalid_argument("word must be nonempty");
  const std::uint64_t len = word.size();
  const std::uint64_t horizon = 2 * len + set.max_move();
  auto value = [&](std::int64_t x) -> Nimber {
    return x <= 0 ? 0 : word[static_cast<std::uint64_t>(x - 1) % len];
  };

  MexCheck check;
  check.checked_positions = horizon;
  std::vector<Nimber> options(set.size());
  for (std::uint64_t x = 1; x <= horizon; ++x) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      options[j] = value(static_cast<std::int64_t>(x) - static_cast<std::int64_t>(set.moves()[j]));
    }
    const Nimber expected = mex(options);
    const Nimber found = value(static_cast<std::int64_t>(x));
    if (expected != found) check.violations.push_back({x, expected, found});
  }
  return check;
}

MexCheck verify_mex_consistency(const PeriodWord& word, const SubtractionSet& set) {
  const std::vector<Nimber> values = word.expand();
  return verify_mex_consistency(std::span<const Nimber>(values), set);
}

namespace {

struct Placed {
  LabeledFactor lf;
  std::uint32_t copy;
  std::uint64_t gblock;  // copy * m + block
  std::int64_t lo;
  std::int64_t hi;
};

struct BlockInfo {
  BlockTag tag;
  bool zeta;
};

char lower(BlockTag t) { return static_cast<char>(std::tolower(static_cast<char>(t))); }

std::string lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string range_text(std::int64_t lo, std::int64_t hi) {
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

class Auditor {
 public:
  explicit Auditor(const AdditiveParams& p) : m_(p.m), k_(p.k) {
    const auto s = p.moves();
    moves_.assign(s.begin(), s.end());
    for (std::uint64_t i = 0; i < m_; ++i) {
      const Block b = build_block(block_indices(i, m_, k_), m_, k_);
      blocks_.push_back({b.tag, b.zeta});
    }
    const std::vector<LabeledFactor> one = block_layout(m_, k_, 0, m_);
    length_ = one.back().offset + one.back().factor.length;
    for (std::uint32_t copy = 0; copy < 2; ++copy) {
      for (const LabeledFactor& f : one) {
        const std::int64_t lo = static_cast<std::int64_t>(f.offset + copy * length_ + 1);
        placed_.push_back({f, copy, copy * m_ + f.block, lo,
                           lo + static_cast<std::int64_t>(f.factor.length) - 1});
      }
    }
  }

  AuditReport run() {
    AuditReport report;
    report.m = m_;
    report.k = k_;
    report.word_length = length_;
    for (const Placed& f : placed_) report.records.push_back(audit(f));
    check_separation(report);
    return report;
  }

 private:
  const BlockInfo& info(std::uint64_t gblock) const { return blocks_[gblock % m_]; }

  std::string context(std::uint64_t gblock) const {
    const char tag = static_cast<char>(info(gblock).tag);
    if (gblock == 0) return std::string("sink") + tag;
    const BlockInfo& prev = info(gblock - 1);
    std::string out(1, lower(prev.tag));
    if (prev.zeta) out += 'Z';
    out += tag;
    return out;
  }

  std::string relative_name(const Placed& source, std::uint64_t gblock) const {
    const std::string label = to_string(source.lf.label);
    if (source.gblock == gblock) return label;
    if (source.gblock + 1 == gblock) {
      return source.lf.label == FactorLabel::Z ? label : lower(label);
    }
    return lower(label) + "@-" + std::to_string(gblock - source.gblock);
  }

  // Calls visit(source or nullptr for the sink, lo, hi) for every u-valued
  // piece meeting [a, b].
  template <typename Visit>
  void each_valued(Nimber u, std::int64_t a, std::int64_t b, Visit visit) const {
    if (u == 0 && a <= 0) visit(nullptr, a, std::min<std::int64_t>(b, 0));
    auto it = std::lower_bound(placed_.begin(), placed_.end(), a,
                               [](const Placed& f, std::int64_t x) { return f.hi < x; });
    for (; it != placed_.end() && it->lo <= b; ++it) {
      if (it->lf.factor.symbol == u) visit(&*it, std::max(a, it->lo), std::min(b, it->hi));
    }
  }

  AuditRecord audit(const Placed& f) const {
    AuditRecord rec;
    rec.copy = f.copy;
    rec.block = f.lf.block;
    rec.label = f.lf.label;
    rec.context = context(f.gblock);
    rec.claimed_value = f.lf.factor.symbol;
    rec.lo = f.lo;
    rec.hi = f.hi;

    const std::string where = "m=" + std::to_string(m_) + " k=" + std::to_string(k_) +
                              " copy=" + std::to_string(f.copy) + " block=" +
                              std::to_string(f.lf.block) + " " + to_string(f.lf.label) +
                              " " + range_text(f.lo, f.hi);

    for (Nimber u = 0; u < rec.claimed_value; ++u) {
      ReachabilityEntry entry{u, {}};
      std::vector<std::pair<std::int64_t, std::int64_t>> covered;
      for (std::uint64_t s : moves_) {
        const auto shift = static_cast<std::int64_t>(s);
        each_valued(u, f.lo - shift, f.hi - shift,
                    [&](const Placed* src, std::int64_t lo, std::int64_t hi) {
                      entry.witnesses.push_back({s, src ? relative_name(*src, f.gblock) : "sink",
                                                 lo + shift, hi + shift});
                      covered.emplace_back(lo + shift, hi + shift);
                    });
      }
      std::sort(covered.begin(), covered.end());
      std::int64_t next = f.lo;
      for (auto [lo, hi] : covered) {
        if (lo > next) break;
        next = std::max(next, hi + 1);
      }
      if (next <= f.hi) {
        throw AuditFailure("AuditFailure: reachability " + where + ": position " +
                           std::to_string(next) + " has no option of value " +
                           std::to_string(u));
      }
      rec.reachability.push_back(std::move(entry));
    }

    for (std::uint64_t s : moves_) {
      const auto shift = static_cast<std::int64_t>(s);
      each_valued(rec.claimed_value, f.lo - shift, f.hi - shift,
                  [&](const Placed* src, std::int64_t lo, std::int64_t) {
                    rec.collision_check = false;
                    throw AuditFailure("AuditFailure: collision " + where + ": move " +
                                       std::to_string(s) + " from position " +
                                       std::to_string(lo + shift) + " reaches " +
                                       (src ? relative_name(*src, f.gblock) : std::string("sink")) +
                                       " of equal value");
                  });
    }
    return rec;
  }

  void check_separation(AuditReport& report) const {
    const std::uint64_t bound = 3 * m_ + k_;
    std::map<std::pair<std::uint64_t, FactorLabel>, const Placed*> by_block;
    for (const Placed& f : placed_) by_block[{f.gblock, f.lf.label}] = &f;
    report.min_similar_gap = std::numeric_limits<std::uint64_t>::max();
    for (const Placed& f : placed_) {
      if (f.gblock == 0) continue;
      auto it = by_block.find({f.gblock - 1, f.lf.label});
      if (it == by_block.end()) continue;
      const auto gap = static_cast<std::uint64_t>(f.lo - it->second->hi - 1);
      ++report.similar_pairs;
      report.min_similar_gap = std::min(report.min_similar_gap, gap);
      if (gap <= bound) {
        throw AuditFailure("AuditFailure: similar factors " + to_string(f.lf.label) +
                           " in blocks " + std::to_string(f.gblock - 1) + " and " +
                           std::to_string(f.gblock) + " are only " + std::to_string(gap) +
                           " letters apart (need > " + std::to_string(bound) + ")");
      }
    }
  }

  std::uint64_t m_;
  std::uint64_t k_;
  std::vector<std::uint64_t> moves_;
  std::vector<BlockInfo> blocks_;
  std::vector<Placed> placed_;
  std::uint64_t length_ = 0;
};

}  // namespace

AuditReport audit_tables(const AdditiveParams& params) {
  if (params.case_tag != AdditiveCase::II) {
    throw WrongCase("WrongCase: audit needs d in (m, 2m)");
  }
  if (!params.base_layer()) {
    throw UnsupportedDelta("UnsupportedDelta: audit covers m < delta < 2m only");
  }
  return Auditor(params).run();
}

void write_audit_trace(std::ostream& out, const AuditReport& report) {
  out << "audit m=" << report.m << " k=" << report.k << " word_length=" << report.word_length
      << " records=" << report.records.size() << " min_similar_gap=" << report.min_similar_gap
      << '\n';
  for (const AuditRecord& r : report.records) {
    out << "copy=" << r.copy << " block=" << r.block << " ctx=" << r.context << ' '
        << r.factor_id() << ' ' << range_text(r.lo, r.hi) << " value=" << r.claimed_value;
    for (const ReachabilityEntry& e : r.reachability) {
      out << " | " << e.value << ':';
      for (const AuditWitness& w : e.witnesses) {
        out << ' ' << "s" << w.move << '>' << w.source << range_text(w.cover_lo, w.cover_hi);
      }
    }
    out << " | collision=" << (r.collision_check ? "none" : "FOUND") << '\n';
  }
}

IdentityCheck check_lemma_identities(std::uint64_t m, std::uint64_t k) {
  if (k == 0 || k >= m) throw std::invalid_argument("identities need 1 <= k < m");
  auto fail = [](std::uint64_t i, std::string identity, const BlockIndices& x) {
    std::ostringstream detail;
    detail << "alpha=" << x.alpha << " beta=" << x.beta << " gamma=" << x.gamma;
    return IdentityCheck{false, i, std::move(identity), detail.str()};
  };
  for (std::uint64_t i = 0; i < m; ++i) {
    const BlockIndices x = block_indices(i, m, k);
    if (x.gamma > x.alpha && x.gamma - x.alpha != k) {
      return fail(i, "gamma>alpha implies gamma-alpha=k", x);
    }
    if (x.gamma < x.alpha &&
        !(x.alpha - x.beta == m - k && x.beta < k && x.alpha > m - k)) {
      return fail(i, "gamma<alpha implies alpha-beta=m-k, beta<k, alpha>m-k", x);
    }
    if (x.gamma == x.alpha) return fail(i, "gamma differs from alpha", x);
    const std::uint64_t prev_beta = i == 0 ? 0 : block_indices(i - 1, m, k).beta;
    if (x.alpha != prev_beta) return fail(i, "alpha(i)=beta(i-1)", x);
    if (i >= 1 && x.alpha != block_indices(i - 1, m, k).gamma % m) {
      return fail(i, "alpha(i)=gamma(i-1) mod m", x);
    }
  }
  // i = m closes the cycle: alpha(m) = 0 = gamma(m-1) mod m.
  if (block_indices(m - 1, m, k).gamma % m != (k * m) % m) {
    return fail(m, "alpha(m)=gamma(m-1) mod m", block_indices(m - 1, m, k));
  }
  return {};
}

IdentityCheck check_block_structure(std::uint64_t m, std::uint64_t k) {
  if (k == 0 || k >= m) throw std::invalid_argument("structure needs 1 <= k < m");
  const std::uint64_t g = std::gcd(m, k);
  const std::uint64_t cycle = m / g;
  const std::uint64_t long_expected = k / g;
  auto fail = [](std::uint64_t i, std::string what, std::string detail = {}) {
    return IdentityCheck{false, i, std::move(what), std::move(detail)};
  };

  std::vector<Block> blocks;
  for (std::uint64_t i = 0; i < m; ++i) blocks.push_back(build_block(block_indices(i, m, k), m, k));

  std::uint64_t short_count = 0;
  std::uint64_t long_count = 0;
  std::uint64_t cycle_length = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    const Block& b = blocks[i];
    const std::uint64_t alpha = b.indices.alpha;
    std::uint64_t a_len = 0;
    for (const LabeledFactor& f : b.factors) {
      if (f.label == FactorLabel::A1 || f.label == FactorLabel::A2 || f.label == FactorLabel::A3) {
        a_len += f.factor.length;
      }
    }
    if (a_len != 2 * m - alpha) return fail(i, "|A|=2m-alpha", std::to_string(a_len));
    const std::uint64_t core = b.core_length();
    if (b.tag == BlockTag::B && core != 4 * m + 2 * k) {
      return fail(i, "|B|=4m+2k", std::to_string(core));
    }
    if (b.tag == BlockTag::C && core != 5 * m + 2 * k) {
      return fail(i, "|C|=5m+2k", std::to_string(core));
    }
    if (b.tag == BlockTag::C) {
      for (const LabeledFactor& f : b.factors) {
        if ((f.label == FactorLabel::C4 || f.label == FactorLabel::C7) && f.factor.length == 0) {
          return fail(i, "k-beta>0 in C-block");
        }
      }
    }
    if (b.zeta && b.tag != BlockTag::B) return fail(i, "Z preceded by B");
    const bool is_short = b.tag == BlockTag::B && !b.zeta;
    if (is_short != (alpha < m - k)) return fail(i, "short iff alpha<m-k");
    if (b.length() != (is_short ? 4 * m + 2 * k : 5 * m + 2 * k)) {
      return fail(i, "block contribution is 4m+2k or 5m+2k", std::to_string(b.length()));
    }
    if (i < cycle) {
      (is_short ? short_count : long_count) += 1;
      cycle_length += b.length();
    }
    if (i + cycle < m) {
      const Block& later = blocks[i + cycle];
      if (later.tag != b.tag || later.zeta != b.zeta || !(later.indices.alpha == alpha)) {
        return fail(i, "block pattern periodic in i with period m/gcd(m,k)");
      }
    }
  }
  if (short_count != cycle - long_expected || long_count != long_expected) {
    return fail(0, "short/long counts (M-K, K)",
                std::to_string(short_count) + "/" + std::to_string(long_count));
  }
  if (cycle_length != m * (4 * m + 3 * k) / g) {
    return fail(0, "|P|=m(4m+3k)/gcd(m,k)", std::to_string(cycle_length));
  }
  std::uint64_t full = 0;
  for (const Block& b : blocks) full += b.length();
  if (full != g * cycle_length) return fail(0, "full product is gcd copies of the cycle");
  return {};
}

}  // namespace sinksub
