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

#include "sinksub/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sinksub/additive.hpp"
#include "sinksub/explorer.hpp"
#include "sinksub/nim.hpp"
#include "sinksub/period.hpp"
#include "sinksub/render.hpp"
#include "sinksub/verifier.hpp"

namespace sinksub {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GameOptions {
  std::string set;
  std::uint64_t m = 0;
  std::uint64_t delta = 0;
  CLI::Option* set_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* delta_opt = nullptr;

  void attach(CLI::App* app) {
    set_opt = app->add_option("--set", set, "Move set, e.g. 2,5");
    m_opt = app->add_option("--m", m, "Smallest move of {m, m+delta, 2m+delta}")
                ->check(CLI::PositiveNumber);
    delta_opt = app->add_option("--delta", delta, "Gap of the additive set")
                    ->check(CLI::PositiveNumber);
    set_opt->excludes(m_opt)->excludes(delta_opt);
  }

  [[nodiscard]] bool additive_form() const { return m_opt->count() > 0; }

  [[nodiscard]] AdditiveParams params() const {
    if (!m_opt->count() || !delta_opt->count()) {
      throw UsageError("--m and --delta are both required");
    }
    return reduce_params(m, delta);
  }

  [[nodiscard]] SubtractionSet resolve() const {
    if (set_opt->count()) {
      try {
        return SubtractionSet::parse(set);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (m_opt->count() || delta_opt->count()) return params().set();
    throw UsageError("give either --set or --m with --delta");
  }
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string period_line(const PeriodInfo& info) {
  return "preperiod=" + std::to_string(info.preperiod) +
         " period=" + std::to_string(info.period) + " word=" + word_digits(info.period_word);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grundy sequences of sink and wall subtraction games", "sinksub"};
  app.require_subcommand(1);

  // nimseq
  GameOptions nimseq_game;
  std::string nimseq_conv = "sink";
  std::size_t nimseq_count = 20;
  auto* nimseq = app.add_subcommand("nimseq", "Print nim-values from the start index");
  nimseq_game.attach(nimseq);
  nimseq->add_option("--convention", nimseq_conv, "sink or wall")
      ->check(CLI::IsMember({"sink", "wall"}));
  nimseq->add_option("--count", nimseq_count, "Number of values")->check(CLI::PositiveNumber);

  // period
  GameOptions period_game;
  std::string period_conv = "sink";
  std::optional<std::uint64_t> period_horizon;
  auto* period = app.add_subcommand("period", "Detect the pre-period and period");
  period_game.attach(period);
  period->add_option("--convention", period_conv, "sink or wall")
      ->check(CLI::IsMember({"sink", "wall"}));
  period->add_option("--horizon", period_horizon, "Positions to examine before giving up");

  // additive
  GameOptions additive_game;
  bool additive_check = false;
  bool additive_word = false;
  bool additive_params = false;
  auto* additive = app.add_subcommand("additive", "Closed-form period and candidate word");
  additive_game.attach(additive);
  additive_game.set_opt->group("");  // additive needs --m/--delta
  additive->add_flag("--check", additive_check, "Verify the word against the mex rule");
  additive->add_flag("--word", additive_word, "Print the word in run-length form");
  additive->add_flag("--params", additive_params, "Print every derived parameter");

  // verify
  GameOptions verify_game;
  std::string verify_word;
  auto* verify = app.add_subcommand("verify", "Check a period word against the sink mex rule");
  verify_game.attach(verify);
  verify->add_option("--word", verify_word, "Digits of the period word, e.g. 1230")->required();

  // audit
  GameOptions audit_game;
  std::optional<std::uint64_t> audit_k;
  bool audit_trace = false;
  auto* audit = app.add_subcommand("audit", "Factor-level reachability and anti-collision audit");
  audit_game.attach(audit);
  audit_game.set_opt->group("");
  auto* audit_k_opt = audit->add_option("--k", audit_k, "Block speed, delta = m + k");
  audit_k_opt->excludes(audit_game.delta_opt);
  audit->add_flag("--trace", audit_trace, "Print one record per factor");

  // scan
  std::uint64_t scan_m_max = 12;
  std::uint64_t scan_delta_max = 51;
  std::string scan_out = "-";
  unsigned scan_threads = 1;
  auto* scan = app.add_subcommand("scan", "Sweep additive sets and write CSV");
  scan->add_option("--m-max", scan_m_max)->check(CLI::PositiveNumber);
  scan->add_option("--delta-max", scan_delta_max)->check(CLI::PositiveNumber);
  scan->add_option("--out", scan_out, "CSV path, '-' for standard output");
  scan->add_option("--threads", scan_threads, "Worker threads, 0 for all cores");

  // duality
  GameOptions duality_game;
  auto* duality = app.add_subcommand("duality", "Compare sink and wall periods");
  duality_game.attach(duality);

  // render
  RenderOptions render_opt;
  std::string render_mode = "per_k";
  std::string render_out;
  auto* render = app.add_subcommand("render", "Write a PPM raster of a family of periods");
  render->add_option("--m", render_opt.m)->required()->check(CLI::PositiveNumber);
  render->add_option("--mode", render_mode)->check(CLI::IsMember({"per_k", "per_delta_class"}));
  render->add_option("--scale", render_opt.scale, "Pixel rows per band")
      ->check(CLI::PositiveNumber);
  render->add_option("--d", render_opt.d, "Residue of delta mod 2m (per_delta_class)");
  render->add_option("--layers", render_opt.layers, "Number of layers (per_delta_class)")
      ->check(CLI::PositiveNumber);
  render->add_option("--out", render_out, "Output .ppm path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*nimseq) {
      const SubtractionSet set = nimseq_game.resolve();
      const GrundySequence seq =
          grundy_sequence(set, parse_convention(nimseq_conv), nimseq_count);
      for (std::size_t i = 0; i < seq.values.size(); ++i) {
        out << (i ? " " : "") << seq.values[i];
      }
      out << '\n';
    } else if (*period) {
      const SubtractionSet set = period_game.resolve();
      if (period_horizon && *period_horizon < 2 * set.max_move() + 2) {
        throw UsageError("--horizon must be at least 2*max_move+2");
      }
      out << period_line(detect_period(set, parse_convention(period_conv), period_horizon))
          << '\n';
    } else if (*additive) {
      const AdditiveParams p = additive_game.params();
      const std::uint64_t formula = period_formula(p);
      std::ostringstream line;
      line << "case=" << to_string(p.case_tag);
      PeriodWord word;
      if (p.case_tag == AdditiveCase::I) {
        line << " d=" << p.d << " a=" << p.a;
        word = candidate_word_case1(p);
      } else {
        line << " k=" << p.k;
        if (p.base_layer()) {
          word = build_period_word_case2(p);
        } else {
          line << " n=" << (p.delta - p.d) / (2 * p.m);
          word = oracle_prefix_word(p);
        }
      }
      line << " p=" << formula;
      if (p.case_tag == AdditiveCase::II) {
        line << " blocks=" << (p.base_layer() ? word.block_string() : std::string("none"));
      }
      bool ok = true;
      if (additive_check) {
        ok = verify_mex_consistency(word, p.set()).pass() &&
             detect_period(p.set(), Convention::Sink) ==
                 PeriodInfo{0, formula, oracle_prefix_word(p).expand(), 1};
        line << " verified=" << (ok ? "pass" : "fail");
      }
      out << line.str() << '\n';
      if (additive_params) {
        const auto s = p.moves();
        out << "params m=" << p.m << " delta=" << p.delta << " d=" << p.d
            << " case=" << to_string(p.case_tag) << " k=" << p.k << " a=" << p.a
            << " g=" << p.g << " M=" << p.index_period << " K=" << p.long_blocks
            << " moves=" << s[0] << ',' << s[1] << ',' << s[2] << '\n';
      }
      if (additive_word) {
        out << "word=" << word.run_length() << '\n';
      }
      return ok ? kExitOk : kExitFailed;
    } else if (*verify) {
      const SubtractionSet set = verify_game.resolve();
      std::vector<Nimber> word;
      try {
        word = parse_word_digits(verify_word);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (word.empty()) throw UsageError("--word must be nonempty");
      const MexCheck check = verify_mex_consistency(word, set);
      if (check.pass()) {
        out << "pass positions=" << check.checked_positions << '\n';
        return kExitOk;
      }
      const MexViolation& v = check.violations.front();
      out << "fail MexViolation position=" << v.position << " expected=" << v.expected
          << " found=" << v.found << " violations=" << check.violations.size() << '\n';
      return kExitFailed;
    } else if (*audit) {
      if (!audit_game.m_opt->count()) throw UsageError("--m is required");
      AdditiveParams p;
      if (audit_k) {
        if (*audit_k == 0 || *audit_k >= audit_game.m) {
          throw UsageError("--k must lie in [1, m-1]");
        }
        p = reduce_params(audit_game.m, audit_game.m + *audit_k);
      } else {
        p = audit_game.params();
      }
      try {
        const AuditReport report = audit_tables(p);
        if (audit_trace) write_audit_trace(out, report);
        out << "pass m=" << report.m << " k=" << report.k << " factors=" << report.records.size()
            << " min_similar_gap=" << report.min_similar_gap << '\n';
      } catch (const AuditFailure& e) {
        out << "fail " << e.what() << '\n';
        return kExitFailed;
      }
    } else if (*scan) {
      const std::vector<ScanRow> rows = scan_additive(scan_m_max, scan_delta_max, scan_threads);
      if (scan_out == "-") {
        write_scan_csv(out, rows);
      } else {
        std::ofstream file(scan_out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open '" + scan_out + "' for writing");
        write_scan_csv(file, rows);
        if (!file) throw std::runtime_error("write to '" + scan_out + "' failed");
        write_summary(out, summarize(rows));
      }
    } else if (*duality) {
      const DualityRecord rec = duality_report(duality_game.resolve());
      out << "sink " << period_line(rec.sink) << '\n'
          << "wall " << period_line(rec.wall) << '\n'
          << "same_length=" << bool_text(rec.same_length)
          << " rotation_dual=" << bool_text(rec.rotation_dual) << '\n';
    } else if (*render) {
      render_opt.mode = parse_render_mode(render_mode);
      write_file(render_out, render_family(render_opt));
      out << "wrote " << render_out << '\n';
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const WrongCase& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedDelta& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HorizonExhausted& e) {
    err << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

}  // namespace sinksub
