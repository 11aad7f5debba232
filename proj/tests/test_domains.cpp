#include <doctest.h>

#include "crystk/domain.hpp"
#include "crystk/errors.hpp"

#include <random>

using namespace crystk;

namespace {

const ExactScalar half(1, 2), quarter(1, 4);

FinGroupType stab_type(const std::string& label, const Vec3& v)
{
    return finite_iso_type(point_stabilizer(catalog_entry(label), v).image);
}

} // namespace

TEST_CASE("domains are bounded with nonempty interior")
{
    for (int i = 1; i <= 7; ++i) {
        const FundamentalDomain& d = fundamental_domain(i);
        Vec3 bary = vec(0, 0, 0);
        for (const Vec3& v : d.vertices)
            bary = bary + v;
        bary = bary * ExactScalar(1, static_cast<long long>(d.vertices.size()));
        for (const Side& s : d.sides)
            CHECK(s.normal.dot(bary) < s.offset);
        for (const Vec3& v : d.vertices) {
            CHECK(d.polyhedron_contains(v));
            int on = 0;
            for (const Side& s : d.sides)
                on += s.normal.dot(v) == s.offset ? 1 : 0;
            CHECK(on >= 3);
        }
    }
}

TEST_CASE("dihedral_cosine examples")
{
    const FundamentalDomain& d1 = fundamental_domain(1);
    ExactAngle a12 = dihedral_cosine(d1.sides[0].normal, d1.sides[1].normal);
    CHECK(a12.pi_rational);
    CHECK(a12.pi_multiple == frac(1, 4)); // theta(S1,S2) = pi/4

    ExactAngle perp = dihedral_cosine(vec(1, 0, 0), vec(0, 1, 0));
    CHECK(perp.pi_rational);
    CHECK(perp.pi_multiple == frac(1, 2));

    const FundamentalDomain& d2 = fundamental_domain(2);
    ExactAngle a25 = dihedral_cosine(d2.sides[1].normal, d2.sides[4].normal);
    CHECK_FALSE(a25.pi_rational); // arccos(1/sqrt 3)
    CHECK(a25.cos_sign == 1);
    CHECK(a25.cos2 == frac(1, 3));
}

TEST_CASE("Gamma_1 dihedral angles match the listed values")
{
    const FundamentalDomain& d = fundamental_domain(1);
    auto angle = [&](int i, int j) {
        ExactAngle a = dihedral_cosine(d.sides[i].normal, d.sides[j].normal);
        REQUIRE(a.pi_rational);
        return a.pi_multiple;
    };
    CHECK(angle(0, 1) == frac(1, 4));
    CHECK(angle(0, 2) == frac(1, 3));
    CHECK(angle(0, 3) == frac(1, 2));
    CHECK(angle(1, 2) == frac(1, 2));
    CHECK(angle(1, 3) == frac(1, 2));
    CHECK(angle(2, 3) == frac(1, 4));
}

TEST_CASE("all seven side pairings are subproper")
{
    for (int i = 1; i <= 7; ++i) {
        SubproperReport r = verify_subproper(fundamental_domain(i));
        CHECK(r.ok);
        CHECK(r.pairing_valid);
        // The reversing (midpoint-vertex) subcase never fires here.
        CHECK_FALSE(r.reversing_subdivision);
    }
}

TEST_CASE("Gamma_1 cycles are singleton and dihedral")
{
    SubproperReport r = verify_subproper(fundamental_domain(1));
    for (const RidgeCycle& c : r.cycles) {
        CHECK(c.sample_points.size() == 1);
        CHECK(c.dihedral);
    }
}

TEST_CASE("Gamma_2 rotation cycles pair up with angle sum pi")
{
    SubproperReport r = verify_subproper(fundamental_domain(2));
    int two_point_cycles = 0;
    for (const RidgeCycle& c : r.cycles)
        if (c.sample_points.size() == 2) {
            ++two_point_cycles;
            CHECK(c.angle_sum_pi == ExactScalar(1));
        }
    CHECK(two_point_cycles == 2);
}

TEST_CASE("Gamma_7 has the cyclic 2pi/3 ridge cycle")
{
    SubproperReport r = verify_subproper(fundamental_domain(7));
    bool found = false;
    for (const RidgeCycle& c : r.cycles)
        if (!c.dihedral && c.angle_sum_pi == frac(2, 3)) {
            found = true;
            CHECK(c.ok);
        }
    CHECK(found);
}

TEST_CASE("side pairings generate the maximal groups")
{
    for (int i = 1; i <= 7; ++i)
        CHECK(pairing_generates_group(fundamental_domain(i), maximal_group(i)));
}

TEST_CASE("point_stabilizer examples")
{
    CHECK(stab_type("Gamma_1", {half, half, half}) == FinGroupType::S4xZ2);
    CHECK(point_stabilizer(catalog_entry("Gamma_1"), {half, half, half}).image
          == standard_point_group("S4+x(-1)").elements);

    // Generic point: trivial stabilizer.
    CHECK(point_stabilizer(catalog_entry("Gamma_1"),
                           {frac(1, 7), frac(1, 11), frac(1, 13)})
              .image.size()
          == 1);

    CHECK(stab_type("Gamma_3", {quarter, quarter, ExactScalar(0)})
          == FinGroupType::D2xZ2);
    CHECK(point_stabilizer(catalog_entry("Gamma_3"), {quarter, quarter, ExactScalar(0)})
              .image.size()
          == 8);

    // pi is injective on the stabilizer: lifts match the image 1:1 and fix v.
    auto ps = point_stabilizer(catalog_entry("Gamma_1"),
                               {half, ExactScalar(0), ExactScalar(0)});
    CHECK(ps.lifts.size() == ps.image.size());
    for (const auto& lift : ps.lifts)
        CHECK(lift(Vec3{half, ExactScalar(0), ExactScalar(0)})
              == Vec3{half, ExactScalar(0), ExactScalar(0)});
}

TEST_CASE("negligibility_shortcut examples")
{
    CHECK(negligibility_shortcut(catalog_entry("Gamma_1"), {quarter, quarter, quarter}));
    CHECK_FALSE(negligibility_shortcut(catalog_entry("Gamma_1"),
                                       {half, ExactScalar(0), ExactScalar(0)}));
    CHECK(negligibility_shortcut(catalog_entry("Gamma_2"),
                                 {frac(3, 8), frac(3, 8), ExactScalar(0)}));
    CHECK_THROWS_AS(negligibility_shortcut(catalog_entry("Gamma_5"), vec(0, 0, 0)),
                    PreconditionViolated);
}

TEST_CASE("maximal group cell complexes match the stated stabilizers")
{
    // Gamma_1: four vertex orbits, no non-negligible edges.
    auto nn1 = cell_complex(1).non_negligible();
    REQUIRE(nn1.size() == 4);
    for (const auto& c : nn1)
        CHECK(c.dim == 0);

    // Gamma_5: six vertices and the one starred edge.
    auto nn5 = cell_complex(5).non_negligible();
    int edges5 = 0;
    for (const auto& c : nn5)
        edges5 += c.dim == 1 ? 1 : 0;
    CHECK(nn5.size() == 7);
    CHECK(edges5 == 1);

    // All other maximal groups have vertex-only contributions.
    for (int i : {2, 3, 4, 6, 7})
        for (const auto& c : cell_complex(i).non_negligible())
            CHECK(c.dim == 0);

    // 2- and 3-cells carry at most order-2 / trivial stabilizers.
    for (int i = 1; i <= 7; ++i)
        for (const auto& c : cell_complex(i).cells) {
            if (c.dim == 2)
                CHECK(c.stabilizer_image.size() <= 2);
            if (c.dim == 3)
                CHECK(c.stabilizer_image.size() == 1);
        }
}

TEST_CASE("refine_stabilizers examples")
{
    const CrystGroup& gamma1 = catalog_entry("Gamma_1");
    const CrystGroup& a4 = catalog_entry("A4+x(-1)_1");
    const CrystGroup& d2 = catalog_entry("D2+x(-1)_1");

    CellComplex a4_cells = refine_stabilizers(gamma1, a4, cell_complex(1));
    REQUIRE(a4_cells.cells.size() == 4);
    int a4_count = 0, d2_count = 0;
    for (const auto& c : a4_cells.cells) {
        a4_count += c.type == FinGroupType::A4xZ2 ? 1 : 0;
        d2_count += c.type == FinGroupType::D2xZ2 ? 1 : 0;
    }
    CHECK(a4_count == 2);
    CHECK(d2_count == 2);

    // Identity refinement.
    CellComplex same = refine_stabilizers(gamma1, gamma1, cell_complex(1));
    CHECK(same.cells.size() == cell_complex(1).non_negligible().size());

    // (D2+x(-1))_1 has eight vertices, all with the full point group.
    CellComplex d2_cells = refine_stabilizers(gamma1, d2, cell_complex(1));
    CHECK(d2_cells.cells.size() == 8);
    for (const auto& c : d2_cells.cells)
        CHECK(c.type == FinGroupType::D2xZ2);

    CHECK_THROWS_AS(refine_stabilizers(a4, catalog_entry("Gamma_5"), cell_complex(1)),
                    NotASubgroup);
}

// Stabilizers transform by conjugation along orbits.
TEST_CASE("point stabilizers are conjugation equivariant")
{
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long long> num(-8, 8), den(1, 8), shift(-2, 2);
    for (int i = 1; i <= 7; ++i) {
        const CrystGroup& g = maximal_group(i);
        for (int trial = 0; trial < 200; ++trial) {
            Vec3 v{ExactScalar(num(rng), den(rng)), ExactScalar(num(rng), den(rng)),
                   ExactScalar(num(rng), den(rng))};
            const auto& elems = g.point_group.elements;
            const Mat3& h = elems[static_cast<std::size_t>(rng() % elems.size())];
            Vec3 l = g.lattice.basis()[0] * ExactScalar(shift(rng))
                + g.lattice.basis()[1] * ExactScalar(shift(rng))
                + g.lattice.basis()[2] * ExactScalar(shift(rng));
            Vec3 moved = h * v + l;

            auto orig = point_stabilizer(g, v).image;
            auto conj = point_stabilizer(g, moved).image;
            std::vector<Mat3> expected;
            for (const Mat3& s : orig)
                expected.push_back(h * s * h.inverse());
            std::sort(expected.begin(), expected.end());
            CHECK(expected == conj);
        }
    }
}
