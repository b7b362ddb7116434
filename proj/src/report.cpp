#include "affcrystal/report.hpp"

namespace affcrystal {

using nlohmann::ordered_json;

ordered_json poly_json(const LaurentPoly& p) {
  ordered_json out = ordered_json::array();
  for (const auto& [e, c] : p.pairs()) out.push_back({e, c});
  return out;
}

LaurentPoly poly_from_json(const ordered_json& j) {
  LaurentPoly p;
  for (const auto& t : j) p.add_term(t.at(0).get<int>(), t.at(1).get<LaurentPoly::Coeff>());
  return p;
}

ordered_json spec_json(const CrystalSpec& spec) {
  ordered_json out;
  out["n"] = spec.n;
  ordered_json shapes = ordered_json::array();
  for (const auto& s : spec.shapes) shapes.push_back(s.to_string());
  out["shapes"] = shapes;
  if (spec.level) out["level"] = *spec.level;
  if (spec.Lambda) out["Lambda"] = spec.Lambda->to_selector();
  if (spec.LambdaPrime) out["LambdaPrime"] = spec.LambdaPrime->to_selector();
  if (spec.b0) out["b0"] = spec.b0->to_string();
  return out;
}

ordered_json box_json(const BetaBox& box) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < box.lo.size(); ++i) out.push_back({box.lo[i], box.hi[i]});
  return out;
}

ordered_json identity_json(const IdentityReport& rep) {
  ordered_json out;
  out["lhs_polynomial"] = poly_json(rep.lhs);
  out["rhs_polynomial"] = poly_json(rep.rhs);
  out["equal"] = rep.equal;
  out["applicable"] = rep.applicable;
  out["summand_count"] = rep.summand_count;
  out["truncation_bound"] = box_json(rep.box);
  if (!rep.note.empty()) out["note"] = rep.note;
  return out;
}

ordered_json certificate_json(const PairingCertificate& cert) {
  ordered_json out;
  out["valid"] = cert.valid();
  out["summand_count"] = cert.summand_count;
  out["pairing_size"] = cert.pair_count;
  out["involutive"] = cert.involutive;
  out["fixed_point_free"] = cert.fixed_point_free;
  out["signs_opposite"] = cert.signs_opposite;
  out["exponents_equal"] = cert.exponents_equal;
  out["v_preserved"] = cert.color_preserved;
  out["total"] = poly_json(cert.total);
  if (!cert.failures.empty()) out["failures"] = cert.failures;
  return out;
}

ordered_json normal_form_json(const NormalForm& nf) {
  if (nf.zero) return "zero";
  ordered_json out;
  out["sign"] = nf.sign;
  out["qpow"] = nf.qpow;
  out["beta"] = nf.beta;
  return out;
}

}  // namespace affcrystal
