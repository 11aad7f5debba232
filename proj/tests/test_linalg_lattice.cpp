#include <doctest.h>

#include "crystk/errors.hpp"
#include "crystk/lattice.hpp"
#include "crystk/linalg.hpp"

#include <random>

using namespace crystk;

namespace {

const Vec3 x = vec(1, 0, 0), y = vec(0, 1, 0), z = vec(0, 0, 1);
const Vec3 v1 = vec(1, 1, 1), v2 = vec(1, -1, 0), v3 = vec(0, -1, 1);
const ExactScalar half(1, 2), third(1, 3);

Lattice cubic() { return Lattice(x, y, z); }

// Random unimodular matrix: a short product of shears, swaps and sign flips.
Mat3 random_unimodular(std::mt19937& rng)
{
    Mat3 u = Mat3::identity();
    std::uniform_int_distribution<int> kind(0, 2), idx(0, 2), shear(-2, 2);
    for (int step = 0; step < 8; ++step) {
        int i = idx(rng), j = idx(rng);
        Mat3 e = Mat3::identity();
        switch (kind(rng)) {
        case 0:
            if (i != j)
                e(i, j) = ExactScalar(shear(rng));
            break;
        case 1:
            if (i != j) {
                e = Mat3::zero();
                e(i, j) = ExactScalar(1);
                e(j, i) = ExactScalar(1);
                e(3 - i - j, 3 - i - j) = ExactScalar(1);
            }
            break;
        default:
            e(i, i) = ExactScalar(-1);
            break;
        }
        u = u * e;
    }
    return u;
}

} // namespace

TEST_CASE("matrix determinant, inverse, orthogonality")
{
    Mat3 r = mat(0, -1, 0, 1, 0, 0, 0, 0, 1);
    CHECK(r.det() == ExactScalar(1));
    CHECK(r.is_orthogonal());
    CHECK(r.order() == 4);
    CHECK(r * r.inverse() == Mat3::identity());

    Mat3 hex = mat(2, 2, -1, -1, 2, 2, 2, -1, 2, 3);
    CHECK(hex.is_orthogonal());
    CHECK(hex.order() == 6);
    CHECK(hex * vec(1, 1, 1) == vec(1, 1, 1));

    CHECK_THROWS_AS(AffineIsometry(vec(0, 0, 0), mat(1, 1, 0, 0, 1, 0, 0, 0, 1)),
                    NotOrthogonal);
}

TEST_CASE("isometry composition law is exact")
{
    AffineIsometry g1(vec(1, 0, 0), mat(0, -1, 0, 1, 0, 0, 0, 0, 1));
    AffineIsometry g2(vec(0, 1, 0), mat(1, 0, 0, 0, 0, 1, 0, -1, 0));
    AffineIsometry g = g1 * g2;
    Vec3 p = {half, third, ExactScalar(2)};
    CHECK(g(p) == g1(g2(p)));
    CHECK((g * g.inverse())(p) == p);
}

TEST_CASE("apply_isometry examples")
{
    CHECK(apply_isometry(AffineIsometry(), {frac(1, 4), frac(1, 4), ExactScalar(0)})
          == Vec3{frac(1, 4), frac(1, 4), ExactScalar(0)});

    AffineIsometry antipodal(vec(0, 0, 0), -Mat3::identity());
    CHECK(apply_isometry(antipodal, {half, half, half}) == Vec3{-half, -half, -half});

    // Reflection across the plane x+y+z=0, then translate by (1,1,1).
    AffineIsometry g(vec(1, 1, 1), mat(1, -2, -2, -2, 1, -2, -2, -2, 1, 3));
    CHECK(apply_isometry(g, vec(0, 0, 0)) == vec(1, 1, 1));
}

// |g p - g q|^2 = |p - q|^2 for orthogonal linear parts.
TEST_CASE("isometries preserve squared distances")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> coord(-6, 6), den(1, 5);
    AffineIsometry g(Vec3{half, third, -half}, mat(0, 0, -1, 0, -1, 0, -1, 0, 0));
    for (int t = 0; t < 100; ++t) {
        Vec3 p{ExactScalar(coord(rng), den(rng)), ExactScalar(coord(rng), den(rng)),
               ExactScalar(coord(rng), den(rng))};
        Vec3 q{ExactScalar(coord(rng), den(rng)), ExactScalar(coord(rng), den(rng)),
               ExactScalar(coord(rng), den(rng))};
        CHECK((g(p) - g(q)).norm2() == (p - q).norm2());
    }
}

TEST_CASE("lattice_contains examples")
{
    CHECK(lattice_contains(cubic(), x));
    Lattice face((x + y) * half, (x + z) * half, (y + z) * half);
    CHECK(lattice_contains(face, {half, half, ExactScalar(0)}));
    CHECK_FALSE(lattice_contains(cubic(), {half, ExactScalar(0), ExactScalar(0)}));
}

TEST_CASE("sublattice_index examples")
{
    Lattice big((x + y + z) * half, y, z);
    CHECK(sublattice_index(big, cubic()) == 2);
    CHECK(sublattice_index(cubic(), cubic()) == 1);
    Lattice big7(v1, (v2 + v3) * third, v3);
    Lattice small7(v1, v2, v3);
    CHECK(sublattice_index(big7, small7) == 3);
    CHECK_THROWS_AS(sublattice_index(cubic(), big), NotASublattice);
}

TEST_CASE("is_full_subgroup examples")
{
    CHECK(is_full_subgroup(cubic(), {x}));

    // L = <(x+z)/2, y, z> meets the x-axis exactly in <x>: full.  (The
    // oracle below enumerates lattice points in the span directly.)
    Lattice l4((x + z) * half, y, z);
    CHECK(is_full_subgroup(l4, {x}));
    {
        bool found_proper_fraction = false;
        for (long long a = -4; a <= 4; ++a)
            for (long long b = -4; b <= 4; ++b)
                for (long long c = -4; c <= 4; ++c) {
                    Vec3 p = l4.basis()[0] * ExactScalar(a) + l4.basis()[1] * ExactScalar(b)
                        + l4.basis()[2] * ExactScalar(c);
                    if (p.y.is_zero() && p.z.is_zero() && !p.x.is_integer())
                        found_proper_fraction = true;
                }
        CHECK_FALSE(found_proper_fraction);
    }

    // Not full: <2x> misses the lattice point x in its span.
    CHECK_FALSE(is_full_subgroup(cubic(), {x + x}));

    Lattice prism(v1, v2, v3);
    CHECK(is_full_subgroup(prism, {v2, v3}));

    CHECK_THROWS_AS(is_full_subgroup(cubic(), {{half, ExactScalar(0), ExactScalar(0)}}),
                    GeneratorNotInLattice);
}

// Membership is invariant under change of basis generating the same lattice.
TEST_CASE("lattice membership is basis independent")
{
    std::mt19937 rng(2024);
    Lattice base((x + y + z) * half, y, z);
    std::uniform_int_distribution<long long> coord(-8, 8), den(1, 6);
    for (int t = 0; t < 100; ++t) {
        Mat3 u = random_unimodular(rng);
        Mat3 nb = base.basis_matrix() * u; // columns combine integrally
        Lattice rebased(nb.column(0), nb.column(1), nb.column(2));
        REQUIRE(rebased.same_lattice(base));
        Vec3 p{ExactScalar(coord(rng), den(rng)), ExactScalar(coord(rng), den(rng)),
               ExactScalar(coord(rng), den(rng))};
        CHECK(base.contains(p) == rebased.contains(p));
    }
}
