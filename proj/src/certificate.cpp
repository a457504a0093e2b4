#include "ctl/certificate.hpp"

namespace ctl {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::hyperbolic:
      return "hyperbolic";
    case Verdict::conditions_violated:
      return "conditions-violated";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::string status_name(PieceStatus s) {
  switch (s) {
    case PieceStatus::ok:
      return "ok";
    case PieceStatus::violated:
      return "violated";
    case PieceStatus::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace

nlohmann::ordered_json to_json(const Certificate& c) {
  nlohmann::ordered_json out;
  out["verdict"] = to_string(c.verdict);
  out["theorem"] = c.theorem;
  out["q"] = c.q;
  out["eps"] = c.eps;
  out["M"] = c.M;
  auto pieces = nlohmann::ordered_json::array();
  for (const auto& p : c.pieces) {
    nlohmann::ordered_json j;
    j["id"] = p.id;
    j["ids"] = p.members;
    j["size"] = p.size;
    if (p.exact_sum) {
      j["excess_sum"] = {{"num", p.exact_sum->numerator()}, {"den", p.exact_sum->denominator()}};
    } else if (p.real_sum) {
      j["excess_sum"] = *p.real_sum;
    } else {
      j["excess_sum"] = nullptr;
    }
    j["status"] = status_name(p.status);
    if (!p.violated.empty()) j["violated"] = p.violated;
    pieces.push_back(std::move(j));
  }
  out["pieces"] = std::move(pieces);
  if (c.witness) {
    out["witness"] = {{"piece", c.witness->piece},
                      {"condition", c.witness->condition},
                      {"detail", c.witness->detail},
                      {"ids", c.witness->members}};
  } else {
    out["witness"] = nullptr;
  }
  out["violations"] = c.violations;
  if (c.annotation) out["annotation"] = *c.annotation;
  for (const auto& [key, value] : c.extra.items()) out[key] = value;
  return out;
}

}  // namespace ctl
