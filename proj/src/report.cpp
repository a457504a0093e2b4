#include "ctl/report.hpp"

#include "ctl/errors.hpp"

#include <charconv>
#include <sstream>

namespace ctl::report {

Json rational(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

Json validation(const std::vector<lc::Diagnostic>& diagnostics) {
  Json out;
  out["valid"] = diagnostics.empty();
  auto list = Json::array();
  for (const auto& d : diagnostics) {
    list.push_back({{"property", d.property}, {"witness", d.witness}, {"message", d.message}});
  }
  out["diagnostics"] = std::move(list);
  return out;
}

Json faces(const lc::LineComplex& complex, const lc::FaceSet& faces) {
  auto list = Json::array();
  for (const auto& f : faces.faces) {
    Json j;
    j["id"] = f.id;
    j["corner"] = f.corner;
    j["m"] = f.m.to_string();
    j["closed"] = f.closed;
    auto walk = Json::array();
    for (const auto& step : f.walk) walk.push_back(complex.id(step.vertex));
    j["walk"] = std::move(walk);
    list.push_back(std::move(j));
  }
  return {{"q", complex.q()}, {"faces", std::move(list)}};
}

Json excess(const lc::LineComplex& complex, const lc::FaceSet& faces) {
  auto r = lc::excess_report(complex, faces);
  auto list = Json::array();
  for (std::size_t v = 0; v < r.per_vertex.size(); ++v) {
    Json j;
    j["id"] = complex.id(static_cast<int>(v));
    j["excess"] = r.per_vertex[v] ? rational(*r.per_vertex[v]) : Json(nullptr);
    list.push_back(std::move(j));
  }
  Json out;
  out["all_resolved"] = r.all_resolved;
  out["regular"] = r.regular ? rational(*r.regular) : Json(nullptr);
  out["vertices"] = std::move(list);
  return out;
}

Json mean_excess(const std::vector<lc::MeanExcessRow>& rows) {
  auto list = Json::array();
  for (const auto& r : rows) list.push_back({{"j", r.j}, {"n", r.n}, {"mean", rational(r.mean)}});
  return list;
}

std::string mean_excess_csv(const std::vector<lc::MeanExcessRow>& rows) {
  std::ostringstream out;
  out << "j,n_j,partial_mean_num,partial_mean_den\n";
  for (const auto& r : rows) {
    out << r.j << "," << r.n << "," << r.mean.numerator() << "," << r.mean.denominator() << "\n";
  }
  return out.str();
}

Json half_sheet(int q, const std::vector<lc::FaceDegree>& m, const tiling::HalfSheetIdentity& id) {
  auto degrees = Json::array();
  for (const auto& d : m) degrees.push_back(d ? Json(*d) : Json("inf"));
  Json out;
  out["q"] = q;
  out["m"] = std::move(degrees);
  out["sum_K_over_pi"] = rational(id.sum_K_over_pi);
  out["excess"] = rational(id.excess);
  out["residual"] = rational(id.residual);
  out["sum_K_numeric"] = id.sum_K_numeric;
  return out;
}

lc::FaceDegree parse_face_degree(std::string_view text) {
  if (text == "inf") return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw DomainError("face degree must be a positive integer or 'inf', got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace ctl::report
