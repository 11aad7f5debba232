#include "crystk/lattice.hpp"

#include "crystk/errors.hpp"
#include "crystk/intmatrix.hpp"

#include <stdexcept>

namespace crystk {

Lattice::Lattice(Vec3 b0, Vec3 b1, Vec3 b2, std::string name)
    : basis_{std::move(b0), std::move(b1), std::move(b2)}, name_(std::move(name))
{
    matrix_ = Mat3::from_columns(basis_[0], basis_[1], basis_[2]);
    if (matrix_.det().is_zero())
        throw std::domain_error("Lattice: basis is linearly dependent");
    inverse_ = matrix_.inverse();
}

bool Lattice::same_lattice(const Lattice& r) const
{
    for (const Vec3& b : r.basis_)
        if (!contains(b))
            return false;
    for (const Vec3& b : basis_)
        if (!r.contains(b))
            return false;
    return true;
}

bool lattice_contains(const Lattice& L, const Vec3& v) { return L.contains(v); }

BigInt sublattice_index(const Lattice& big, const Lattice& small)
{
    Mat3 coords = Mat3::zero();
    for (int j = 0; j < 3; ++j) {
        Vec3 c = big.coordinates(small.basis()[j]);
        if (!c.is_integral())
            throw NotASublattice("basis vector " + small.basis()[j].str()
                                 + " is not in the larger lattice");
        for (int i = 0; i < 3; ++i)
            coords(i, j) = c[i];
    }
    ExactScalar d = coords.det().abs();
    return d.numerator(); // integral by construction
}

namespace {

// Columns of the matrix are the lattice coordinates of the generators.
IntMatrix generator_coordinates(const Lattice& L, const std::vector<Vec3>& gens)
{
    IntMatrix g(3, static_cast<int>(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j) {
        Vec3 c = L.coordinates(gens[j]);
        if (!c.is_integral())
            throw GeneratorNotInLattice(gens[j].str());
        for (int i = 0; i < 3; ++i)
            g(i, static_cast<int>(j)) = c[i].numerator();
    }
    return g;
}

} // namespace

bool is_full_subgroup(const Lattice& L, const std::vector<Vec3>& generators)
{
    IntMatrix gen_coords = generator_coordinates(L, generators);

    // A linearly independent spanning subset (at most three vectors).
    std::vector<Vec3> indep;
    for (const Vec3& g : generators) {
        if (g.is_zero() || indep.size() == 3)
            continue;
        Mat3 test = Mat3::zero();
        for (std::size_t r = 0; r < indep.size(); ++r)
            for (int c = 0; c < 3; ++c)
                test(static_cast<int>(r), c) = indep[r][c];
        for (int c = 0; c < 3; ++c)
            test(static_cast<int>(indep.size()), c) = g[c];
        int rank = 3;
        for (const auto& k : test.kernel())
            rank -= k ? 1 : 0;
        if (rank == static_cast<int>(indep.size()) + 1)
            indep.push_back(g);
    }

    // Lattice points of span(generators): integer coordinate vectors n with
    // B n perpendicular to the span's orthogonal complement.  Equivalently
    // n lies in the integer kernel of W^T B, where W spans the complement.
    Mat3 gen_rows = Mat3::zero();
    for (std::size_t j = 0; j < indep.size(); ++j)
        for (int c = 0; c < 3; ++c)
            gen_rows(static_cast<int>(j), c) = indep[j][c];
    auto complement = gen_rows.kernel();

    std::vector<Vec3> w;
    for (const auto& k : complement)
        if (k)
            w.push_back(*k);

    // Clear denominators so the constraint matrix is integral.
    IntMatrix constraints(static_cast<int>(w.size()), 3);
    for (std::size_t r = 0; r < w.size(); ++r) {
        Vec3 row = L.basis_matrix().transposed() * w[r]; // (w^T B)^T
        BigInt den = lcm(lcm(row.x.denominator(), row.y.denominator()), row.z.denominator());
        for (int c = 0; c < 3; ++c) {
            ExactScalar e = row[c] * ExactScalar(den);
            constraints(static_cast<int>(r), c) = e.numerator();
        }
    }
    IntMatrix span_points = w.empty() ? IntMatrix::identity(3) : integer_kernel(constraints);

    // Full iff every lattice point of the span is an integer combination of
    // the generators.
    for (int j = 0; j < span_points.cols(); ++j) {
        std::vector<BigInt> x(3);
        for (int i = 0; i < 3; ++i)
            x[i] = span_points(i, j);
        if (!in_integer_span(gen_coords, x))
            return false;
    }
    return true;
}

Vec3 apply_isometry(const AffineIsometry& g, const Vec3& p) { return g(p); }

} // namespace crystk
