#pragma once

#include "ctl/line_complex.hpp"
#include "ctl/rational.hpp"
#include "ctl/tiling.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ctl::report {

using Json = nlohmann::ordered_json;

Json rational(const Rational& r);

Json validation(const std::vector<lc::Diagnostic>& diagnostics);
Json faces(const lc::LineComplex& complex, const lc::FaceSet& faces);
Json excess(const lc::LineComplex& complex, const lc::FaceSet& faces);
Json mean_excess(const std::vector<lc::MeanExcessRow>& rows);
/// Columns j, n_j, partial_mean_num, partial_mean_den.
std::string mean_excess_csv(const std::vector<lc::MeanExcessRow>& rows);
Json half_sheet(int q, const std::vector<lc::FaceDegree>& m, const tiling::HalfSheetIdentity& id);

/// "inf" or a positive integer; throws DomainError otherwise.
lc::FaceDegree parse_face_degree(std::string_view text);

}  // namespace ctl::report
