#include <doctest.h>

#include "crystk/rational.hpp"

#include <random>
#include <unordered_set>

using namespace crystk;

TEST_CASE("canonical lowest terms with positive denominator")
{
    ExactScalar a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(ExactScalar(0, 5) == ExactScalar(0));
    CHECK(ExactScalar(2, 4) == ExactScalar(1, 2));
}

TEST_CASE("arithmetic and comparisons")
{
    ExactScalar half(1, 2), third(1, 3);
    CHECK(half + third == ExactScalar(5, 6));
    CHECK(half * third == ExactScalar(1, 6));
    CHECK(half - third == ExactScalar(1, 6));
    CHECK(half / third == ExactScalar(3, 2));
    CHECK(third < half);
    CHECK((-half).is_negative());
    CHECK_THROWS_AS(half / ExactScalar(0), std::domain_error);
}

TEST_CASE("floor")
{
    CHECK(ExactScalar(7, 2).floor() == 3);
    CHECK(ExactScalar(-7, 2).floor() == -4);
    CHECK(ExactScalar(4).floor() == 4);
    CHECK(ExactScalar(-4).floor() == -4);
}

TEST_CASE("string round trip")
{
    CHECK(ExactScalar(1, 2).str() == "1/2");
    CHECK(ExactScalar(-3).str() == "-3");
    CHECK(ExactScalar::parse("22/7") == ExactScalar(22, 7));
    CHECK(ExactScalar::parse("-5") == ExactScalar(-5));
    CHECK(ExactScalar::parse("4/6") == ExactScalar(2, 3));
}

// canonical(a) * canonical(b) = canonical(a*b); hashing respects equality.
TEST_CASE("product of canonical forms is canonical, hash respects equality")
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> num(-50, 50), den(1, 30);
    for (int trial = 0; trial < 500; ++trial) {
        long long an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
        ExactScalar a(an, ad), b(bn, bd);
        ExactScalar prod = a * b;
        CHECK(gcd(boost::multiprecision::abs(prod.numerator()), prod.denominator()) == 1);
        CHECK(prod.denominator() > 0);
        ExactScalar same_a(an * 7, ad * 7);
        CHECK(same_a == a);
        CHECK(same_a.hash() == a.hash());
    }
    std::unordered_set<ExactScalar> set;
    set.insert(ExactScalar(1, 2));
    set.insert(ExactScalar(2, 4));
    CHECK(set.size() == 1);
}

TEST_CASE("big values stay exact")
{
    ExactScalar tiny(1, 1000000007LL);
    ExactScalar x = tiny;
    for (int i = 0; i < 5; ++i)
        x = x * tiny;
    CHECK(x.numerator() == 1);
    CHECK(x.denominator() == boost::multiprecision::pow(BigInt(1000000007LL), 6));
}
