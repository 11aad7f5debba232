#include <doctest.h>

#include "crystk/crystal.hpp"
#include "crystk/errors.hpp"
#include "crystk/point_group.hpp"

#include <map>
#include <set>

using namespace crystk;

namespace {

const Vec3 x = vec(1, 0, 0), y = vec(0, 1, 0), z = vec(0, 0, 1);

bool is_signed_permutation(const Mat3& m)
{
    for (int r = 0; r < 3; ++r) {
        int nonzero = 0;
        for (int c = 0; c < 3; ++c) {
            const ExactScalar& e = m(r, c);
            if (e.is_zero())
                continue;
            ++nonzero;
            if (e != ExactScalar(1) && e != ExactScalar(-1))
                return false;
        }
        if (nonzero != 1)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("generate_group examples")
{
    CHECK(standard_point_group("S4+").size() == 24);
    CHECK(generate_group({}).size() == 1);
    CHECK(standard_point_group("D6+").size() == 12);
    CHECK_THROWS_AS(generate_group({mat(1, 1, 0, 0, 1, 0, 0, 0, 1)}), NotOrthogonal);
}

TEST_CASE("standard point group census: 11 + 11 + 10 = 32")
{
    CHECK(orientation_preserving_names().size() == 11);
    CHECK(standard_point_group_names().size() == 32);

    std::multiset<std::size_t> op_orders;
    for (const auto& n : orientation_preserving_names())
        op_orders.insert(standard_point_group(n).size());
    CHECK(op_orders == std::multiset<std::size_t>{1, 2, 3, 4, 6, 4, 6, 8, 12, 12, 24});

    // <H+, (-1)> has order 2|H+|.
    for (const auto& n : orientation_preserving_names()) {
        const PointGroup& h = standard_point_group(n);
        const PointGroup& hinv = standard_point_group(n + "x(-1)");
        CHECK(hinv.size() == 2 * h.size());
        CHECK(hinv.contains_inversion());
    }
}

TEST_CASE("standard_point_group named examples")
{
    const PointGroup& s4 = standard_point_group("S4+");
    CHECK(s4.size() == 24);
    for (const Mat3& m : s4.elements) {
        CHECK(is_signed_permutation(m));
        CHECK(m.det() == ExactScalar(1));
    }

    CHECK(standard_point_group("C1+").size() == 1);

    const PointGroup& d4pp = standard_point_group("D4''");
    CHECK(d4pp.size() == 8);
    for (const Mat3& m : d4pp.elements) {
        CHECK(is_signed_permutation(m));
        CHECK(m(2, 2) == ExactScalar(1)); // a 1 in the lower right corner
    }

    CHECK_THROWS_AS(standard_point_group("Q8"), UnknownName);
}

TEST_CASE("crystallographic restriction: element orders in {1,2,3,4,6}")
{
    const std::set<int> allowed = {1, 2, 3, 4, 6};
    for (const auto& name : standard_point_group_names())
        for (const Mat3& m : standard_point_group(name).elements)
            CHECK(allowed.count(m.order()) == 1);
}

TEST_CASE("preserves_lattice examples")
{
    Lattice cubic(x, y, z);
    CHECK(preserves_lattice(standard_point_group("S4+x(-1)"), cubic));
    CHECK_FALSE(preserves_lattice(standard_point_group("D6+x(-1)"), cubic));
    CHECK(preserves_lattice(standard_point_group("C1+"), cubic));
    Lattice prism(vec(1, 1, 1), vec(1, -1, 0), vec(0, -1, 1));
    CHECK(preserves_lattice(standard_point_group("D6+x(-1)"), prism));
}

TEST_CASE("pole_data examples")
{
    PoleData s4 = pole_data(standard_point_group("S4+"));
    CHECK(s4.orbits.size() == 3);
    CHECK(s4.stabilizer_orders() == std::vector<long>{2, 3, 4});
    CHECK(s4.counting_identity_holds);

    PoleData trivial = pole_data(standard_point_group("C1+"));
    CHECK(trivial.orbits.empty());

    PoleData d6inv = pole_data(standard_point_group("D6+x(-1)"));
    std::set<Vec3> reps;
    for (const auto& o : d6inv.orbits)
        reps.insert(o.representative);
    CHECK(reps == std::set<Vec3>{vec(1, 1, 1), vec(1, -1, 0), vec(1, -2, 1)});
}

// Proposition-style triple check: (2,2,n), (2,3,3) or (2,3,4) for the
// noncyclic orientation-preserving groups; two equal orders for the cyclic.
TEST_CASE("pole orbit triples for the orientation-preserving groups")
{
    const std::map<std::string, std::vector<long>> expected = {
        {"C2+", {2, 2}},      {"C3+", {3, 3}},      {"C4+", {4, 4}},
        {"C6+", {6, 6}},      {"D2+", {2, 2, 2}},   {"D3+", {2, 2, 3}},
        {"D4+", {2, 2, 4}},   {"D6+", {2, 2, 6}},   {"A4+", {2, 3, 3}},
        {"S4+", {2, 3, 4}},
    };
    for (const auto& [name, orders] : expected) {
        PoleData p = pole_data(standard_point_group(name));
        CHECK(p.stabilizer_orders() == orders);
        CHECK(p.counting_identity_holds);
    }
}

TEST_CASE("finite_iso_type examples")
{
    CHECK(finite_iso_type(standard_point_group("S4+x(-1)").elements)
          == FinGroupType::S4xZ2);
    CHECK(finite_iso_type(standard_point_group("D4''").elements) == FinGroupType::D4);
    CHECK(finite_iso_type(std::vector<Mat3>{Mat3::identity()}) == FinGroupType::One);
    CHECK(finite_iso_type(standard_point_group("C3+x(-1)").elements) == FinGroupType::Z6);
    CHECK(finite_iso_type(standard_point_group("D3+x(-1)").elements) == FinGroupType::D6);
    CHECK(finite_iso_type(standard_point_group("D'_6").elements) == FinGroupType::D6);
    CHECK(finite_iso_type(standard_point_group("Dhat'_4").elements) == FinGroupType::D4);
    CHECK(finite_iso_type(standard_point_group("C2+x(-1)").elements) == FinGroupType::D2);
}

TEST_CASE("is_negligible_finite examples")
{
    CHECK(is_negligible_finite(FinGroupType::D4));
    CHECK_FALSE(is_negligible_finite(FinGroupType::D4xZ2)); // 16 does not divide 24
    // Z/6 has an element of order 6, so it does not embed in S4 even though
    // its order is square-free; the S4-embedding oracle agrees.
    CHECK_FALSE(is_negligible_finite(FinGroupType::Z6));
    CHECK_FALSE(embeds_in_s4(model_table(FinGroupType::Z6)));
    CHECK(embeds_in_s4(model_table(FinGroupType::D3)));

    // The type-list decision procedure agrees with the embedding oracle on
    // every type in the catalog list.
    for (int t = 0; t <= static_cast<int>(FinGroupType::S4xZ2); ++t) {
        FinGroupType type = static_cast<FinGroupType>(t);
        CHECK(is_negligible_finite(type) == embeds_in_s4(model_table(type)));
    }
}

// The fingerprint-based recognizer agrees with brute-force isomorphism
// search against the reference models on every subgroup of every standard
// point group (exhaustive).
TEST_CASE("finite_iso_type agrees with brute force on all subgroups")
{
    std::set<std::string> checked; // skip repeated abstract tables by size+orders
    for (const auto& name : standard_point_group_names()) {
        MulTable table = standard_point_group(name).multiplication_table();
        for (const auto& subset : all_subgroups(table)) {
            MulTable sub = subgroup_table(table, subset);
            FinGroupType fast = finite_iso_type(sub);
            int matches = 0;
            for (int t = 0; t <= static_cast<int>(FinGroupType::S4xZ2); ++t) {
                FinGroupType type = static_cast<FinGroupType>(t);
                if (model_table(type).n != sub.n)
                    continue;
                if (isomorphic(sub, model_table(type))) {
                    ++matches;
                    CHECK(fast == type);
                }
            }
            CHECK(matches == 1);
        }
    }
}
