#pragma once

#include "crystk/linalg.hpp"

#include <array>
#include <string>
#include <vector>

namespace crystk {

/// Rank-3 lattice given by a rational basis.  Bases are stored exactly as
/// given (catalog bases in particular are never reduced), so printed output
/// matches the catalog presentation.
class Lattice {
public:
    Lattice(Vec3 b0, Vec3 b1, Vec3 b2, std::string name = {});

    const std::array<Vec3, 3>& basis() const { return basis_; }
    const std::string& name() const { return name_; }

    /// Basis vectors as matrix columns.
    const Mat3& basis_matrix() const { return matrix_; }
    const Mat3& inverse_basis_matrix() const { return inverse_; }

    /// Coordinates of v in this basis (exact 3x3 solve).
    Vec3 coordinates(const Vec3& v) const { return inverse_ * v; }

    /// v is in the lattice iff its basis coordinates are integers.
    bool contains(const Vec3& v) const { return coordinates(v).is_integral(); }

    bool operator==(const Lattice& r) const { return basis_ == r.basis_; }

    /// Same subgroup of R^3, regardless of presentation.
    bool same_lattice(const Lattice& r) const;

private:
    std::array<Vec3, 3> basis_;
    std::string name_;
    Mat3 matrix_;
    Mat3 inverse_;
};

bool lattice_contains(const Lattice& L, const Vec3& v);

/// |det| of the coordinate matrix of small's basis in big's basis.
/// Throws NotASublattice when small is not contained in big.
BigInt sublattice_index(const Lattice& big, const Lattice& small);

/// True iff  L ∩ span(generators)  equals the subgroup the generators
/// generate (Definition of a full subgroup).  Throws GeneratorNotInLattice.
bool is_full_subgroup(const Lattice& L, const std::vector<Vec3>& generators);

Vec3 apply_isometry(const AffineIsometry& g, const Vec3& p);

} // namespace crystk
