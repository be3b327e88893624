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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sinksub/additive.hpp"
#include "sinksub/cli.hpp"
#include "sinksub/explorer.hpp"
#include "sinksub/nim.hpp"
#include "sinksub/period.hpp"
#include "sinksub/render.hpp"
#include "sinksub/verifier.hpp"

namespace py = pybind11;
using namespace sinksub;

namespace {

SubtractionSet to_set(const std::vector<std::uint64_t>& moves) { return SubtractionSet(moves); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Grundy sequences of sink and wall subtraction games";

  py::register_exception<HorizonExhausted>(m, "HorizonExhausted", PyExc_RuntimeError);
  py::register_exception<AuditFailure>(m, "AuditFailure", PyExc_RuntimeError);
  py::register_exception<WrongCase>(m, "WrongCase", PyExc_ValueError);
  py::register_exception<UnsupportedDelta>(m, "UnsupportedDelta", PyExc_ValueError);

  m.def("mex", [](const std::vector<Nimber>& values) { return mex(values); }, py::arg("values"));

  m.def(
      "grundy_sequence",
      [](const std::vector<std::uint64_t>& moves, const std::string& convention,
         std::size_t count) {
        return grundy_sequence(to_set(moves), parse_convention(convention), count).values;
      },
      py::arg("moves"), py::arg("convention") = "sink", py::arg("count") = 20);

  py::class_<PeriodInfo>(m, "PeriodInfo")
      .def_readonly("preperiod", &PeriodInfo::preperiod)
      .def_readonly("period", &PeriodInfo::period)
      .def_readonly("period_word", &PeriodInfo::period_word)
      .def_readonly("start_index", &PeriodInfo::start_index)
      .def("__repr__", [](const PeriodInfo& p) {
        return "PeriodInfo(preperiod=" + std::to_string(p.preperiod) +
               ", period=" + std::to_string(p.period) + ", word='" +
               word_digits(p.period_word) + "')";
      });

  m.def(
      "detect_period",
      [](const std::vector<std::uint64_t>& moves, const std::string& convention,
         std::optional<std::uint64_t> horizon) {
        py::gil_scoped_release release;
        return detect_period(to_set(moves), parse_convention(convention), horizon);
      },
      py::arg("moves"), py::arg("convention") = "sink", py::arg("horizon") = py::none());

  m.def(
      "rotation_equivalent",
      [](const std::vector<Nimber>& a, const std::vector<Nimber>& b) {
        return minimal_rotation_equivalent(a, b);
      },
      py::arg("a"), py::arg("b"));

  py::class_<AdditiveParams>(m, "AdditiveParams")
      .def_readonly("m", &AdditiveParams::m)
      .def_readonly("delta", &AdditiveParams::delta)
      .def_readonly("d", &AdditiveParams::d)
      .def_property_readonly("case", [](const AdditiveParams& p) { return to_string(p.case_tag); })
      .def_readonly("k", &AdditiveParams::k)
      .def_readonly("a", &AdditiveParams::a)
      .def_readonly("g", &AdditiveParams::g)
      .def_readonly("M", &AdditiveParams::index_period)
      .def_readonly("K", &AdditiveParams::long_blocks)
      .def_property_readonly("moves", &AdditiveParams::moves);

  m.def("reduce_params", &reduce_params, py::arg("m"), py::arg("delta"));
  m.def(
      "period_formula",
      [](std::uint64_t mm, std::uint64_t delta) { return period_formula(reduce_params(mm, delta)); },
      py::arg("m"), py::arg("delta"));

  m.def(
      "candidate_word",
      [](std::uint64_t mm, std::uint64_t delta) {
        return candidate_word(reduce_params(mm, delta)).digits();
      },
      py::arg("m"), py::arg("delta"));
  m.def(
      "block_word",
      [](std::uint64_t mm, std::uint64_t delta) {
        const PeriodWord w = build_period_word_case2(reduce_params(mm, delta));
        return py::make_tuple(w.digits(), w.block_string());
      },
      py::arg("m"), py::arg("delta"),
      "Full block product for m < delta < 2m as (digits, block structure).");

  m.def(
      "verify_mex_consistency",
      [](const std::string& word, const std::vector<std::uint64_t>& moves) {
        const MexCheck check = verify_mex_consistency(parse_word_digits(word), to_set(moves));
        std::vector<py::tuple> out;
        for (const MexViolation& v : check.violations) {
          out.push_back(py::make_tuple(v.position, v.expected, v.found));
        }
        return out;
      },
      py::arg("word"), py::arg("moves"),
      "List of (position, expected, found); empty on success.");

  m.def(
      "audit_tables",
      [](std::uint64_t mm, std::uint64_t k) {
        const AuditReport report = audit_tables(reduce_params(mm, mm + k));
        std::ostringstream trace;
        write_audit_trace(trace, report);
        py::dict d;
        d["records"] = report.records.size();
        d["min_similar_gap"] = report.min_similar_gap;
        d["word_length"] = report.word_length;
        d["trace"] = trace.str();
        return d;
      },
      py::arg("m"), py::arg("k"));

  m.def(
      "scan_csv",
      [](std::uint64_t m_max, std::uint64_t delta_max, unsigned threads) {
        std::vector<ScanRow> rows;
        {
          py::gil_scoped_release release;
          rows = scan_additive(m_max, delta_max, threads);
        }
        std::ostringstream out;
        write_scan_csv(out, rows);
        return out.str();
      },
      py::arg("m_max"), py::arg("delta_max"), py::arg("threads") = 1);

  m.def(
      "duality_report",
      [](const std::vector<std::uint64_t>& moves) {
        const DualityRecord rec = duality_report(to_set(moves));
        py::dict d;
        d["sink"] = rec.sink;
        d["wall"] = rec.wall;
        d["same_length"] = rec.same_length;
        d["rotation_dual"] = rec.rotation_dual;
        return d;
      },
      py::arg("moves"));

  m.def(
      "render_family",
      [](std::uint64_t mm, const std::string& mode, std::uint64_t scale, std::uint64_t d,
         std::uint64_t layers) {
        RenderOptions opt;
        opt.m = mm;
        opt.mode = parse_render_mode(mode);
        opt.scale = scale;
        opt.d = d;
        opt.layers = layers;
        return py::bytes(render_family(opt));
      },
      py::arg("m"), py::arg("mode") = "per_k", py::arg("scale") = 1, py::arg("d") = 0,
      py::arg("layers") = 4);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"sinksub"};
        for (const std::string& a : args) argv.push_back(a.c_str());
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line and returns (status, stdout, stderr).");
}
