#pragma once

#include "crystk/assembly.hpp"
#include "crystk/domain.hpp"
#include "crystk/lines.hpp"

#include <json.hpp>

namespace crystk {

// JSON conventions: rationals as "p/q" (or "p"), vectors as 3-element
// arrays, matrices as 3x3 nested arrays.
nlohmann::json to_json(const ExactScalar& s);
nlohmann::json to_json(const Vec3& v);
nlohmann::json to_json(const Mat3& m);
nlohmann::json to_json(const AffineIsometry& g);
nlohmann::json to_json(const KExpr& e);
nlohmann::json to_json(const PointGroup& g);

/// catalog.json entry: {label, lattice_basis, point_group_name,
/// point_group_elements}.
nlohmann::json catalog_entry_json(const CrystGroup& g);
nlohmann::json catalog_json();

/// domains/gamma_i.json: {sides, pairings, vertices, subdivision_vertices}.
nlohmann::json domain_json(const FundamentalDomain& d);

/// Cell table of one group: positions and stabilizers.
nlohmann::json cells_json(const std::string& label);

/// lines.json for one group:
/// [{line:{t,v}, strict_stabilizer_name, structure, cokernel_n0, cokernel_n1}].
nlohmann::json lines_json(const std::string& label);

/// {label, K_minus1, K0_tilde, Wh}.
nlohmann::json ktheory_json(const KTheoryResult& r);

} // namespace crystk
