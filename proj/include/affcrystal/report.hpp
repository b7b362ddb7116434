#pragma once

// JSON encodings shared by the command line and the acceptance harness.

#include <json.hpp>

#include "affcrystal/bosonic.hpp"
#include "affcrystal/straighten.hpp"

namespace affcrystal {

inline constexpr const char* kSchema = "affcrystal/1";

/// [[exp, coeff], ...] sorted by exponent.
nlohmann::ordered_json poly_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json spec_json(const CrystalSpec& spec);
nlohmann::ordered_json box_json(const BetaBox& box);
nlohmann::ordered_json identity_json(const IdentityReport& rep);
nlohmann::ordered_json certificate_json(const PairingCertificate& cert);
nlohmann::ordered_json normal_form_json(const NormalForm& nf);

}  // namespace affcrystal
