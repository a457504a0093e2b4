#include "ctl/cli.hpp"

#include "ctl/errors.hpp"
#include "ctl/example.hpp"
#include "ctl/line_complex.hpp"
#include "ctl/partitioner.hpp"
#include "ctl/report.hpp"
#include "ctl/spherical.hpp"
#include "ctl/tiling.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

namespace ctl::cli {

namespace {

using Json = nlohmann::ordered_json;

// Writes to `path` when given, else to `out`.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot write '" + path + "'");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<lc::FaceDegree> parse_degrees(const std::string& list) {
  std::vector<lc::FaceDegree> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(report::parse_face_degree(item));
  return out;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("CTL_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw DomainError("CTL_SEED must be a non-negative integer");
    }
  }
  return 1;
}

std::string certificate_text(const Certificate& c) {
  std::ostringstream out;
  out << "verdict: " << to_string(c.verdict) << "\n";
  out << "theorem: " << c.theorem << "\n";
  out << "eps: " << c.eps << "  M: " << c.M << "\n";
  out << "pieces: " << c.pieces.size() << "\n";
  if (!c.violations.empty()) {
    out << "violations:";
    for (const auto& v : c.violations) out << " " << v;
    out << "\n";
  }
  if (c.witness) out << "witness: " << c.witness->piece << " " << c.witness->condition << " " << c.witness->detail << "\n";
  if (c.annotation) out << "note: " << *c.annotation << "\n";
  return out.str();
}

}  // namespace

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::hyperbolic:
      return 0;
    case Verdict::conditions_violated:
      return 2;
    case Verdict::inconclusive:
      return 3;
  }
  return 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial and geometric checks for the conformal type of surfaces", "conformal-type-lab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every verb");
  std::function<int()> action;

  std::string in, out_path, format;
  std::map<CLI::App*, std::string> default_format;
  auto fmt = [&](CLI::App* sub, std::string def, std::vector<std::string> allowed) {
    default_format[sub] = std::move(def);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed));
  };

  // validate
  auto* validate = app.add_subcommand("validate", "Structural checks of a line complex");
  validate->add_option("--in", in, "Input .spg")->required();
  validate->callback([&] {
    action = [&] {
      auto complex = lc::read_spg_file(in);
      auto diags = lc::validate(complex);
      if (format == "json") {
        out << dump(report::validation(diags));
      } else if (diags.empty()) {
        out << "valid: " << complex.size() << " vertices, q=" << complex.q() << "\n";
      } else {
        for (const auto& d : diags) out << d.property << ": " << d.witness << ": " << d.message << "\n";
      }
      return diags.empty() ? 0 : 1;
    };
  });

  // faces
  auto* faces = app.add_subcommand("faces", "Trace faces and their half-perimeters");
  faces->add_option("--in", in, "Input .spg")->required();
  faces->callback([&] {
    action = [&] {
      auto complex = lc::read_spg_file(in);
      auto fs = lc::trace_faces(complex);
      if (format == "json") {
        out << dump(report::faces(complex, fs));
        return 0;
      }
      for (const auto& f : fs.faces) {
        out << "F" << f.id << " corner=" << f.corner << " m=" << f.m.to_string() << (f.closed ? " closed" : " open")
            << " walk=";
        for (std::size_t i = 0; i < f.walk.size(); ++i) out << (i ? "," : "") << complex.id(f.walk[i].vertex);
        out << "\n";
      }
      return 0;
    };
  });

  // excess
  auto* excess = app.add_subcommand("excess", "Per-vertex excess E_p");
  excess->add_option("--in", in, "Input .spg")->required();
  excess->callback([&] {
    action = [&] {
      auto complex = lc::read_spg_file(in);
      auto fs = lc::trace_faces(complex);
      if (format == "json") {
        out << dump(report::excess(complex, fs));
        return 0;
      }
      auto r = lc::excess_report(complex, fs);
      if (format == "csv") out << "id,num,den\n";
      for (std::size_t v = 0; v < r.per_vertex.size(); ++v) {
        const auto& e = r.per_vertex[v];
        const auto& id = complex.id(static_cast<int>(v));
        if (format == "csv") {
          out << id << "," << (e ? std::to_string(e->numerator()) : "") << ","
              << (e ? std::to_string(e->denominator()) : "") << "\n";
        } else {
          out << id << " " << (e ? to_string(*e) : "unresolved") << "\n";
        }
      }
      return 0;
    };
  });

  // mean-excess
  std::string base;
  int jmax = 0;
  auto* mean = app.add_subcommand("mean-excess", "Partial means of E over balls B(p, j)");
  mean->add_option("--in", in, "Input .spg")->required();
  mean->add_option("--base", base, "Center vertex id")->required();
  mean->add_option("--jmax", jmax, "Largest radius")->required()->check(CLI::NonNegativeNumber);
  mean->callback([&] {
    action = [&] {
      auto complex = lc::read_spg_file(in);
      auto fs = lc::trace_faces(complex);
      auto p = complex.find(base);
      if (!p) throw UnknownVertex("no vertex '" + base + "'");
      auto rows = lc::mean_excess_sequence(complex, fs, *p, jmax);
      if (format == "json") {
        out << dump(report::mean_excess(rows));
      } else if (format == "csv") {
        out << report::mean_excess_csv(rows);
      } else {
        for (const auto& r : rows) out << "j=" << r.j << " n=" << r.n << " mean=" << to_string(r.mean) << "\n";
      }
      return 0;
    };
  });

  // partition
  std::int64_t M = 1;
  auto* partition = app.add_subcommand("partition", "Cut a complex into connected pieces of size in [M, 2qM^2]");
  partition->add_option("--in", in, "Input .spg")->required();
  partition->add_option("--M", M, "Piece size parameter (>= 2)")->required();
  partition->add_option("--out", out_path, "Output .gpt (default stdout)");
  partition->callback([&] {
    action = [&] {
      auto complex = lc::read_spg_file(in);
      auto mask = part::frontier_mask(complex);
      part::Subgraph all;
      all.vertices.resize(complex.size());
      for (std::size_t i = 0; i < complex.size(); ++i) all.vertices[i] = static_cast<int>(i);
      all.infinite = !complex.frontier().empty();
      auto pieces = part::partition_lemma_par2(complex.graph(), complex.q(), all, M, mask);
      emit(out, out_path, part::serialize_gpt(part::name_pieces(std::move(pieces)), complex));
      return 0;
    };
  });

  // certify
  std::string theorem, partition_path, eps_text, mode = "constructive";
  bool parallel = false, resolved_only = false;
  auto* certify = app.add_subcommand("certify", "Check the excess conditions on a line complex");
  certify->add_option("theorem", theorem, "t2 (given partition) or tfinal (connected subgraphs)")
      ->required()
      ->check(CLI::IsMember({"t2", "tfinal"}));
  certify->add_option("--in", in, "Input .spg")->required();
  certify->add_option("--partition", partition_path, "Input .gpt (t2)");
  certify->add_option("--eps", eps_text, "Excess margin, exact (e.g. 1/3)")->required();
  certify->add_option("--M", M, "Size bound")->required();
  certify->add_option("--mode", mode, "tfinal mode")->check(CLI::IsMember({"constructive", "exhaustive"}));
  certify->add_flag("--resolved-only", resolved_only, "tfinal: restrict to vertices with resolved excess");
  certify->add_flag("--parallel", parallel, "Check pieces concurrently");
  certify->callback([&] {
    action = [&] {
      auto complex = lc::read_spg_file(in);
      auto fs = lc::trace_faces(complex);
      Rational eps = parse_rational(eps_text);
      Certificate cert;
      if (theorem == "t2") {
        if (partition_path.empty()) throw DomainError("certify t2 needs --partition");
        auto p = part::read_gpt_file(partition_path, complex);
        cert = part::certify_T2(complex, fs, p, eps, M, {parallel});
      } else {
        part::TfinalOptions opt;
        opt.mode = mode == "exhaustive" ? part::TfinalMode::exhaustive : part::TfinalMode::constructive;
        opt.resolved_only = resolved_only;
        opt.parallel = parallel;
        cert = part::certify_Tfinal(complex, fs, eps, M, opt);
      }
      out << (format == "json" ? dump(to_json(cert)) : certificate_text(cert));
      return exit_code(cert.verdict);
    };
  });

  // check-tiling
  double eps_real = 0.0;
  std::string tiling_theorem = "conditions";
  auto* check = app.add_subcommand("check-tiling", "Check cluster and triangle conditions on a .tlg tiling");
  check->add_option("--in", in, "Input .tlg")->required();
  check->add_option("--eps", eps_real, "eps in radians")->required();
  check->add_option("--M", M, "Cluster size bound")->required();
  check->add_option("--theorem", tiling_theorem, "conditions: given clusters; clusters: degree-3 partition")
      ->check(CLI::IsMember({"conditions", "clusters"}));
  check->callback([&] {
    action = [&] {
      auto t = tiling::read_tlg_file(in);
      auto cert = tiling_theorem == "conditions" ? tiling::check_theorem_T(t, eps_real, M)
                                                 : tiling::check_final_tiling_theorem(t, eps_real, M);
      out << (format == "json" ? dump(to_json(cert)) : certificate_text(cert));
      return exit_code(cert.verdict);
    };
  });

  // constants
  std::string eps_pi;
  double k = 0.0;
  auto* constants = app.add_subcommand("constants", "Constant ledger C_length, C_liso, C_comb, C, C_final");
  auto* eps_opt = constants->add_option("--eps", eps_real, "eps in radians");
  auto* eps_pi_opt = constants->add_option("--eps-pi", eps_pi, "eps as an exact multiple of pi (e.g. 1/6)");
  eps_opt->excludes(eps_pi_opt);
  constants->add_option("--M", M, "Cluster size bound")->required();
  constants->add_option("--k", k, "Model curvature");
  constants->callback([&] {
    action = [&] {
      if (eps_opt->count() == 0 && eps_pi_opt->count() == 0) throw DomainError("constants needs --eps or --eps-pi");
      auto ledger = eps_pi_opt->count() ? tiling::constant_ledger_pi(parse_rational(eps_pi), M, k)
                                        : tiling::constant_ledger(eps_real, M, k);
      if (format == "json") {
        out << dump(tiling::to_json(ledger));
      } else {
        out << std::setprecision(17);
        for (const auto& e : ledger.entries) out << e.name << " " << e.value << "  (" << e.provenance << ")\n";
      }
      return 0;
    };
  });

  // rqe
  double qv = 0.0;
  bool oracle = false;
  auto* rqe = app.add_subcommand("rqe", "Circumradius R_{q,eps} of the equilateral spherical triangle");
  rqe->add_option("--q", qv, "q in (1, 3]")->required();
  rqe->add_option("--eps", eps_real, "Shift eps >= 0")->required();
  rqe->add_flag("--oracle", oracle, "Also run the bisection oracle");
  rqe->callback([&] {
    action = [&] {
      double r = sph::r_q_eps(qv, eps_real);
      std::optional<double> o;
      if (oracle) o = sph::circumradius_equilateral_oracle(std::numbers::pi * qv / 3.0) - eps_real;
      if (format == "json") {
        Json j{{"q", qv}, {"eps", eps_real}, {"r", r}};
        if (o) {
          j["oracle"] = *o;
          j["difference"] = r - *o;
        }
        out << dump(j);
      } else {
        out << std::setprecision(12) << r;
        if (o) out << " oracle " << *o << " difference " << std::setprecision(3) << (r - *o);
        out << "\n";
      }
      return 0;
    };
  });

  // identity
  int q_int = 3;
  std::string degrees;
  auto* identity = app.add_subcommand("identity", "Hemisphere curvature sum versus pi * E_p");
  identity->add_option("--q", q_int, "Number of faces at p (>= 3)")->required();
  identity->add_option("--m", degrees, "Comma-separated half-perimeters, 'inf' allowed")->required();
  identity->callback([&] {
    action = [&] {
      auto m = parse_degrees(degrees);
      auto id = tiling::half_sheet_curvature_identity(q_int, m);
      if (format == "json") {
        out << dump(report::half_sheet(q_int, m, id));
      } else {
        out << "sum_K/pi " << to_string(id.sum_K_over_pi) << " E_p " << to_string(id.excess) << " residual "
            << to_string(id.residual) << "\n";
      }
      return 0;
    };
  });

  // gen
  std::string kind, m_list;
  int n = 3, radius = 3, d = 7;
  std::optional<std::uint64_t> seed;
  auto* gen = app.add_subcommand("gen", "Generate a line complex (.spg) or regular tiling (.tlg)");
  gen->add_option("kind", kind, "regular | closed | random | exp | sine | punctured-sphere-cover | tiling")
      ->required()
      ->check(CLI::IsMember({"regular", "closed", "random", "exp", "sine", "punctured-sphere-cover", "tiling"}));
  gen->add_option("--q", q_int, "Labels per vertex");
  gen->add_option("--m", m_list, "regular: comma-separated half-perimeters");
  gen->add_option("--n", n, "closed/random: sheets");
  gen->add_option("--radius", radius, "Truncation depth");
  gen->add_option("--d", d, "tiling: triangles per vertex");
  gen->add_option("--seed", seed, "random: seed (default CTL_SEED, else 1)");
  gen->add_option("--out", out_path, "Output path (default stdout)");
  gen->callback([&] {
    action = [&] {
      if (kind == "tiling") {
        emit(out, out_path, tiling::serialize_tlg(tiling::regular_tiling(d, radius)));
        return 0;
      }
      lc::Scheme scheme;
      if (kind == "regular") {
        if (m_list.empty()) throw DomainError("gen regular needs --m");
        scheme = lc::RegularScheme{q_int, parse_degrees(m_list), radius};
      } else if (kind == "closed") {
        scheme = lc::ClosedScheme{n, q_int};
      } else if (kind == "random") {
        scheme = lc::RandomClosedScheme{n, q_int, seed ? *seed : default_seed()};
      } else {
        auto c = kind == "exp" ? lc::ClassicKind::exp
                 : kind == "sine" ? lc::ClassicKind::sine
                                  : lc::ClassicKind::punctured_sphere_cover;
        scheme = lc::ClassicScheme{c, radius};
      }
      emit(out, out_path, lc::serialize_spg(lc::generate(scheme)));
      return 0;
    };
  });

  // record
  std::string record_verb, tiling_path;
  int stage = 2, fan_cap = 16;
  auto* record = app.add_subcommand("record", "Growth record of the parabolic branched-cover example");
  record->add_option("verb", record_verb, "export")->required()->check(CLI::IsMember({"export"}));
  record->add_option("--eps", eps_real, "Triangle area bound")->required();
  record->add_option("--n", n, "Number of stages (1..8)")->required();
  record->add_option("--out", out_path, "JSON output path (default stdout)");
  record->add_option("--tiling", tiling_path, "Also write the stage tiling as .tlg");
  record->add_option("--stage", stage, "Stage for --tiling");
  record->add_option("--fan-cap", fan_cap, "Fan size cap for --tiling");
  record->callback([&] {
    action = [&] {
      auto rec = example::build(eps_real, n);
      auto j = example::to_json(rec);
      auto audits = Json::array();
      for (int i = 0; i <= rec.n_max; ++i) {
        auto a = example::riemann_hurwitz_audit(rec, i);
        audits.push_back({{"n", i},
                          {"sheets", a.sheets.to_string()},
                          {"branch_count", a.branch_count.to_string()},
                          {"euler_char", a.euler_char},
                          {"combinatorial_disk", a.combinatorial_disk}});
      }
      j["audits"] = std::move(audits);
      j["log_areas_within_eps"] = example::log_areas_within_eps(rec);
      if (!tiling_path.empty()) {
        auto t = example::export_tiling(rec, stage, fan_cap);
        std::ofstream file(tiling_path, std::ios::binary);
        if (!file) throw DomainError("cannot write '" + tiling_path + "'");
        file << tiling::serialize_tlg(t);
      }
      emit(out, out_path, dump(j));
      return 0;
    };
  });

  for (auto* sub : {validate, faces, excess, mean, partition, certify, check, constants, rqe, identity, gen, record}) {
    bool sequence = sub == mean;
    bool cert = sub == certify || sub == check || sub == constants || sub == record;
    if (sub == gen || sub == partition || sub == record) continue;
    if (sequence) {
      fmt(sub, "csv", {"text", "json", "csv"});
    } else if (sub == excess) {
      fmt(sub, "text", {"text", "json", "csv"});
    } else {
      fmt(sub, cert ? "json" : "text", {"text", "json"});
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }
  if (format.empty()) {
    for (auto* sub : app.get_subcommands()) {
      if (auto it = default_format.find(sub); it != default_format.end()) format = it->second;
    }
  }
  try {
    return action ? action() : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ctl::cli
