#pragma once

#include <json.hpp>

#include "ghstab/classify.hpp"
#include "ghstab/constants.hpp"
#include "ghstab/constructors.hpp"
#include "ghstab/polynomial.hpp"

namespace ghstab {

// Exact rationals are always written as strings; polynomials use the canonical
// text form.
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Polynomial& f);
nlohmann::json to_json(const LambdaVector& l);
nlohmann::json to_json(const Memberships& m);
nlohmann::json to_json(const StabilityReport& r);
nlohmann::json to_json(const CertifiedConstant& c);
nlohmann::json to_json(const GeneralizedProduct& p);
nlohmann::json to_json(const ExtensionCertificate& c);
nlohmann::json to_json(const StabilizationResult& r);

}  // namespace ghstab
