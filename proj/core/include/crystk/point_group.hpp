#pragma once

#include "crystk/abstract_group.hpp"
#include "crystk/lattice.hpp"
#include "crystk/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crystk {

/// Finite group of orthogonal matrices, stored extensionally with a sorted,
/// deduplicated element list (so set operations are cheap at order <= 48).
struct PointGroup {
    std::vector<Mat3> elements;
    std::string name;

    std::size_t size() const { return elements.size(); }
    bool contains(const Mat3& m) const;
    bool is_subgroup_of(const PointGroup& other) const;
    bool contains_inversion() const;
    MulTable multiplication_table() const;
    std::vector<Mat3> orientation_preserving() const;
};

/// Closure of the generators under multiplication; aborts past 96 elements.
PointGroup generate_group(const std::vector<Mat3>& gens, std::string name = {});

/// The 32 standard point groups plus the non-standard variants that occur in
/// stabilizer bookkeeping.  Suffix "x(-1)" adjoins the central inversion;
/// suffixes "_1"/"_2" distinguish the x-/y-axis variants of a z-axis group.
const PointGroup& standard_point_group(const std::string& name);
bool is_known_point_group_name(const std::string& name);

const std::vector<std::string>& orientation_preserving_names(); // 11
const std::vector<std::string>& standard_point_group_names();   // all 32

bool preserves_lattice(const PointGroup& h, const Lattice& l);

/// One orbit of pole vectors: fixed directions of nontrivial rotations.
struct PoleOrbit {
    Vec3 representative; // primitive integer vector
    long stabilizer_order = 0;
    long orbit_size = 0;
};

struct PoleData {
    std::vector<PoleOrbit> orbits; // sorted by (stabilizer order, representative)
    bool counting_identity_holds = false;

    std::vector<long> stabilizer_orders() const;
};

PoleData pole_data(const PointGroup& h);

/// Abstract isomorphism types of all finite subgroups arising as cell
/// stabilizers.  The aliased products (Z/2 x Z/2, Z/3 x Z/2, D3 x Z/2)
/// canonicalize to D2, Z6 and D6.
enum class FinGroupType {
    One,
    Z2,
    Z3,
    Z4,
    Z6,
    D2,
    D3,
    D4,
    D6,
    Z4xZ2,
    Z6xZ2,
    D2xZ2,
    D4xZ2,
    D6xZ2,
    A4,
    S4,
    A4xZ2,
    S4xZ2,
};

std::string to_string(FinGroupType t);
FinGroupType fin_group_type_from_string(const std::string& s);
const MulTable& model_table(FinGroupType t);
long type_order(FinGroupType t);

FinGroupType finite_iso_type(const std::vector<Mat3>& elements);
FinGroupType finite_iso_type(const MulTable& table);

/// Negligible = isomorphic to a subgroup of S4.
bool is_negligible_finite(FinGroupType t);
bool is_negligible_finite(const std::vector<Mat3>& elements);

bool has_square_free_order(std::size_t order);

} // namespace crystk
