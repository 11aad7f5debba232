#pragma once

#include "crystk/crystal.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crystk {

/// Half-space boundary plane: points of the side satisfy normal . x = offset,
/// the polyhedron's interior satisfies normal . x < offset.
struct Side {
    Vec3 normal; // outward, unnormalized (rational squared norm)
    ExactScalar offset;
};

/// Convex compact fundamental polyhedron with its side-pairing, as encoded
/// data for the seven maximal groups.
struct FundamentalDomain {
    int index = 0; // 1..7
    std::vector<Side> sides;
    std::vector<Vec3> vertices;
    std::vector<AffineIsometry> pairings;   // pairings[i] maps partner side onto side i
    std::vector<Vec3> subdivision_vertices; // added when a side is self-paired

    bool side_contains(int side, const Vec3& p) const;
    bool polyhedron_contains(const Vec3& p) const;
    std::vector<Vec3> side_polygon(int side) const; // polytope vertices on a side
    int partner(int side) const;                    // side paired with `side`
    bool pairing_is_reflection(int side) const;     // fixes its side pointwise

    /// All 0-cells of the standard cellulation (vertices + subdivision).
    std::vector<Vec3> cellulation_vertices() const;

    /// All 1-cells: ridge pieces plus subdivision-axis pieces.
    std::vector<std::pair<Vec3, Vec3>> cellulation_edges() const;
};

const FundamentalDomain& fundamental_domain(int i); // 1..7

/// Exact dihedral angle between sides with outward normals n1, n2:
/// theta = pi - arccos(n1.n2 / |n1||n2|), held as sign(cos theta) and
/// cos^2 theta.  The catalog dictionary {0, 1/4, 1/2, 3/4, 1} of squares is
/// recognized as a rational multiple of pi.
struct ExactAngle {
    int cos_sign = 0;    // sign of cos(theta)
    ExactScalar cos2;    // cos^2(theta)
    bool pi_rational = false;
    ExactScalar pi_multiple; // theta / pi when pi_rational

    bool operator==(const ExactAngle&) const = default;
    std::string str() const;
};

ExactAngle dihedral_cosine(const Vec3& n1, const Vec3& n2);

struct RidgeCycle {
    std::vector<Vec3> sample_points;
    bool dihedral = false;       // otherwise cyclic
    bool sum_known = false;      // angle sum reduced to a rational multiple of pi
    ExactScalar angle_sum_pi;    // sum / pi
    bool ok = false;             // submultiple condition holds
};

struct SubproperReport {
    bool ok = false;
    std::vector<RidgeCycle> cycles;
    bool pairing_valid = false;   // phi_{S'} = phi_S^{-1} and phi_S(S') = S
    bool reversing_subdivision = false; // the midpoint-vertex subcase fired
};

SubproperReport verify_subproper(const FundamentalDomain& d);

/// The side-pairing generates exactly the group <L, H>.
bool pairing_generates_group(const FundamentalDomain& d, const CrystGroup& g,
                             int word_length = 8);

/// pi(Gamma_v) = {h in H : v - h v in L} with its affine lifts.
struct PointStabilizer {
    std::vector<Mat3> image; // sorted
    std::vector<AffineIsometry> lifts;
};

PointStabilizer point_stabilizer(const CrystGroup& g, const Vec3& v);

/// Elements fixing all the given points simultaneously (with one common
/// lattice translation); pointwise stabilizer of the spanned cell.
std::vector<Mat3> cell_pointwise_stabilizer(const CrystGroup& g,
                                            const std::vector<Vec3>& points);

/// True when 2v is not in L, which forces a negligible stabilizer for
/// subgroups of the signed permutation group; false means inconclusive.
/// Throws PreconditionViolated when H is not inside S4+x(-1).
bool negligibility_shortcut(const CrystGroup& g, const Vec3& v);

struct CellOrbit {
    int dim = 0;
    std::vector<Vec3> points; // dim 0: one point; dim 1: two endpoints; ...
    std::vector<Mat3> stabilizer_image;
    FinGroupType type = FinGroupType::One;

    Vec3 representative_point() const;
};

struct CellComplex {
    std::vector<CellOrbit> cells; // all orbit representatives, dims 0..3

    std::vector<CellOrbit> non_negligible() const;
    int count(int dim) const;
};

/// Are two cells in the same orbit under <L, H>?
bool cells_equivalent(const CrystGroup& g, const CellOrbit& a, const CellOrbit& b);
bool vertex_equivalent(const CrystGroup& g, const Vec3& a, const Vec3& b);

/// Equivariant cell structure of Gamma_i's fundamental polyhedron, reduced
/// to orbit representatives with stabilizers (cached).
const CellComplex& cell_complex(int gamma_index);

/// Finite-index refinement: reuses big's non-negligible cells, applies a
/// right transversal, merges sub-orbits, recomputes stabilizers and drops
/// negligible cells.
CellComplex refine_stabilizers(const CrystGroup& big, const CrystGroup& sub,
                               const CellComplex& cells);

/// Refined non-negligible cells of any catalog group (from its maximal
/// group's complex; cached by label).
const CellComplex& catalog_cells(const std::string& label);

} // namespace crystk
