#pragma once

#include "gysinkit/complex.hpp"
#include "gysinkit/dual_geometry.hpp"
#include "gysinkit/exact_sequence.hpp"
#include "gysinkit/group_action.hpp"
#include "gysinkit/gysin.hpp"
#include "gysinkit/homology.hpp"
#include "gysinkit/linalg.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace gysinkit {

using Json = nlohmann::ordered_json;

/// Parses text, turning syntax errors into MalformedInput with line and column.
Json parse_json_text(const std::string& text, const std::string& source);

struct ComplexInput {
  SimplicialComplex complex;
  std::optional<Colouring> colouring;
};

/// {"maximal_simplices": [[int, ...], ...], "colouring": {"vertex": int, ...}?}
ComplexInput complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& c, const std::optional<Colouring>& nu = std::nullopt);

/// {"group": {"table": [[...]]}, "vertex_perms": {"g": [images of the vertices in ascending order]}}
ExplicitAction action_from_json(const Json& j, const SimplicialComplex& c);
Json action_to_json(const SimplicialComplex& c, const ExplicitAction& a);

/// {"orbits": [{"dim": int, "stab": "label"}], "stabilizers": {"label": int | "inf"}}
OrbitData orbit_data_from_json(const Json& j);
Json orbit_data_to_json(const OrbitData& d);

/// Arrays of decimal strings.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// {"rank": int, "torsion": ["2", ...], "text": "Z/2 ⊕ Z^3"}
Json group_to_json(const FGAbelianGroup& g);
FGAbelianGroup group_from_json(const Json& j);

Json graded_to_json(const GradedGroup& g);
Json euler_to_json(const EulerDecomposition& e);
Json tau_to_json(const FormalTau& t);
Json k_value_to_json(const KGroupValue& v);
Json exactness_to_json(const std::string& name, const ExactnessReport& r);
Json gysin_to_json(const GysinResult& r);
Json free_product_to_json(const FreeProductReport& r);
Json dual_rows_to_json(const std::vector<DualCheckRow>& rows);

} // namespace gysinkit
