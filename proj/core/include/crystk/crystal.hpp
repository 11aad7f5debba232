#pragma once

#include "crystk/lattice.hpp"
#include "crystk/point_group.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crystk {

/// Split crystallographic group <L, H>, labelled by the point-group name
/// subscripted with the lattice index (1-7).
struct CrystGroup {
    Lattice lattice;
    PointGroup point_group;
    std::string label;
    int lattice_index = 0;

    bool contains(const AffineIsometry& g) const;
};

/// The 73 split groups, ordered by lattice then by the catalog cell order.
const std::vector<CrystGroup>& catalog();

/// Lookup by label; "Gamma_1".."Gamma_7" alias the maximal groups.
const CrystGroup& catalog_entry(const std::string& label);

/// The i-th maximal group (i = 1..7): the lattice paired with its largest
/// point group.
const CrystGroup& maximal_group(int i);

const Lattice& catalog_lattice(int i); // 1..7
int catalog_lattice_count(int i);      // entries on lattice i

/// Point group rewritten in the lattice basis; all entries integral.
struct IntegralRep {
    std::vector<std::array<std::int64_t, 9>> matrices; // sorted
};

IntegralRep integral_representation(const CrystGroup& g);

/// Exhaustive search for a unimodular conjugator with entries in
/// [-bound, bound]; std::nullopt means none within the bound (not a proof
/// of inequivalence).
std::optional<std::array<std::int64_t, 9>>
bounded_conjugacy(const IntegralRep& rep1, const IntegralRep& rep2, int bound);

struct CatalogReport {
    bool consistent = false;
    int valid_pairs = 0;
    int tuple_collisions = 0;
    int distinct_at_bound = 0;
    std::vector<std::string> notes;
};

/// Asserts all 73 pairs valid and pairwise distinguishable, falling back to
/// the bounded conjugacy oracle on invariant-tuple collisions.
CatalogReport verify_catalog(int bound = 2);

} // namespace crystk
