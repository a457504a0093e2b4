#include "ctl/errors.hpp"
#include "ctl/example.hpp"
#include "ctl/line_complex.hpp"
#include "ctl/partitioner.hpp"
#include "ctl/report.hpp"
#include "ctl/spherical.hpp"
#include "ctl/tiling.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ctl;

namespace {

std::vector<lc::FaceDegree> degrees(const std::vector<std::string>& m) {
  std::vector<lc::FaceDegree> out;
  for (const auto& s : m) out.push_back(report::parse_face_degree(s));
  return out;
}

std::string generate(const std::string& kind, int q, const std::vector<std::string>& m, int n, int radius,
                     std::uint64_t seed) {
  lc::Scheme scheme;
  if (kind == "regular") {
    scheme = lc::RegularScheme{q, degrees(m), radius};
  } else if (kind == "closed") {
    scheme = lc::ClosedScheme{n, q};
  } else if (kind == "random") {
    scheme = lc::RandomClosedScheme{n, q, seed};
  } else if (kind == "exp") {
    scheme = lc::ClassicScheme{lc::ClassicKind::exp, radius};
  } else if (kind == "sine") {
    scheme = lc::ClassicScheme{lc::ClassicKind::sine, radius};
  } else if (kind == "punctured-sphere-cover") {
    scheme = lc::ClassicScheme{lc::ClassicKind::punctured_sphere_cover, radius};
  } else {
    throw DomainError("unknown generator '" + kind + "'");
  }
  return lc::serialize_spg(lc::generate(scheme));
}

std::string excess(const std::string& spg) {
  auto c = lc::parse_spg(spg);
  return report::excess(c, lc::trace_faces(c)).dump();
}

std::string mean_excess(const std::string& spg, const std::string& base, int jmax) {
  auto c = lc::parse_spg(spg);
  auto p = c.find(base);
  if (!p) throw UnknownVertex("no vertex '" + base + "'");
  return report::mean_excess(lc::mean_excess_sequence(c, lc::trace_faces(c), *p, jmax)).dump();
}

std::string partition(const std::string& spg, std::int64_t M) {
  auto c = lc::parse_spg(spg);
  part::Subgraph all;
  for (std::size_t i = 0; i < c.size(); ++i) all.vertices.push_back(static_cast<int>(i));
  all.infinite = !c.frontier().empty();
  auto mask = part::frontier_mask(c);
  return part::serialize_gpt(part::name_pieces(part::partition_lemma_par2(c.graph(), c.q(), all, M, mask)), c);
}

std::string certify_t2(const std::string& spg, const std::string& gpt, const std::string& eps, std::int64_t M,
                       bool parallel) {
  auto c = lc::parse_spg(spg);
  auto p = part::parse_gpt(gpt, c);
  return to_json(part::certify_T2(c, lc::trace_faces(c), p, parse_rational(eps), M, {parallel})).dump();
}

std::string certify_tfinal(const std::string& spg, const std::string& eps, std::int64_t M, const std::string& mode,
                           bool resolved_only) {
  auto c = lc::parse_spg(spg);
  part::TfinalOptions opt;
  if (mode != "constructive" && mode != "exhaustive") throw DomainError("mode must be constructive or exhaustive");
  opt.mode = mode == "exhaustive" ? part::TfinalMode::exhaustive : part::TfinalMode::constructive;
  opt.resolved_only = resolved_only;
  return to_json(part::certify_Tfinal(c, lc::trace_faces(c), parse_rational(eps), M, opt)).dump();
}

std::string check_tiling(const std::string& tlg, double eps, std::int64_t M, const std::string& theorem) {
  auto t = tiling::parse_tlg(tlg);
  if (theorem == "conditions") return to_json(tiling::check_theorem_T(t, eps, M)).dump();
  if (theorem == "clusters") return to_json(tiling::check_final_tiling_theorem(t, eps, M)).dump();
  throw DomainError("theorem must be conditions or clusters");
}

std::string half_sheet(int q, const std::vector<std::string>& m) {
  auto d = degrees(m);
  return report::half_sheet(q, d, tiling::half_sheet_curvature_identity(q, d)).dump();
}

std::string record(double eps, int n) {
  auto rec = example::build(eps, n);
  auto j = example::to_json(rec);
  j["log_areas_within_eps"] = example::log_areas_within_eps(rec);
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Line complexes, excess certificates, tilings and the branched-cover growth record";
  py::register_exception<Error>(m, "CtlError", PyExc_ValueError);

  m.def("generate", &generate, py::arg("kind"), py::arg("q") = 3, py::arg("m") = std::vector<std::string>{},
        py::arg("n") = 3, py::arg("radius") = 3, py::arg("seed") = 1);
  m.def("validate", [](const std::string& spg) { return report::validation(lc::validate(lc::parse_spg(spg))).dump(); });
  m.def("faces", [](const std::string& spg) {
    auto c = lc::parse_spg(spg);
    return report::faces(c, lc::trace_faces(c)).dump();
  });
  m.def("excess", &excess);
  m.def("mean_excess", &mean_excess, py::arg("spg"), py::arg("base"), py::arg("jmax"));
  m.def("partition", &partition, py::arg("spg"), py::arg("M"));
  m.def("certify_t2", &certify_t2, py::arg("spg"), py::arg("gpt"), py::arg("eps"), py::arg("M"),
        py::arg("parallel") = false);
  m.def("certify_tfinal", &certify_tfinal, py::arg("spg"), py::arg("eps"), py::arg("M"),
        py::arg("mode") = "constructive", py::arg("resolved_only") = false);
  m.def("regular_tiling", [](int d, int radius) { return tiling::serialize_tlg(tiling::regular_tiling(d, radius)); },
        py::arg("d"), py::arg("radius"));
  m.def("check_tiling", &check_tiling, py::arg("tlg"), py::arg("eps"), py::arg("M"),
        py::arg("theorem") = "conditions");
  m.def("constants", [](double eps, std::int64_t M, double k) { return to_json(tiling::constant_ledger(eps, M, k)).dump(); },
        py::arg("eps"), py::arg("M"), py::arg("k") = 0.0);
  m.def("constants_pi",
        [](const std::string& r, std::int64_t M, double k) {
          return to_json(tiling::constant_ledger_pi(parse_rational(r), M, k)).dump();
        },
        py::arg("eps_over_pi"), py::arg("M"), py::arg("k") = 0.0);
  m.def("r_q_eps", &sph::r_q_eps, py::arg("q"), py::arg("eps"));
  m.def("circumradius_oracle", &sph::circumradius_equilateral_oracle, py::arg("angle"));
  m.def("half_sheet_identity", &half_sheet, py::arg("q"), py::arg("m"));
  m.def("record", &record, py::arg("eps"), py::arg("n"));
  m.def("export_tiling",
        [](double eps, int n, int stage, int fan_cap) {
          return tiling::serialize_tlg(example::export_tiling(example::build(eps, n), stage, fan_cap));
        },
        py::arg("eps"), py::arg("n"), py::arg("stage"), py::arg("fan_cap") = 16);
}
