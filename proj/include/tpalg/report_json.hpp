#pragma once

#include "tpalg/halfderiv.hpp"
#include "tpalg/identities.hpp"
#include "tpalg/structure.hpp"
#include "tpalg/witt.hpp"

#include <json.hpp>

namespace tpalg {

// JSON views of the report types. Keys are emitted sorted (nlohmann object =
// std::map), scalars in canonical textual form, so serialized reports are
// byte-stable across runs.

nlohmann::json element_json(const Element& e);
nlohmann::json matrix_json(const Matrix& m);
nlohmann::json subspace_json(const Subspace& s);
nlohmann::json defect_json(const Defect& d);
nlohmann::json identity_report_json(const IdentityReport& r);
nlohmann::json simplicity_json(const SimplicityReport& r);
nlohmann::json structure_json(const SuperAlgebra& a); // series + annihilator
nlohmann::json halfderiv_json(const HalfDerivationSpace& s);
nlohmann::json window_report_json(const witt::WindowReport& r);
nlohmann::json algebra_json(const SuperAlgebra& a); // same shape as the file

} // namespace tpalg
