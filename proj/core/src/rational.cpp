#include "crystk/rational.hpp"

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>

namespace crystk {

ExactScalar::ExactScalar(long long num, long long den)
    : ExactScalar(BigInt(num), BigInt(den))
{
}

ExactScalar::ExactScalar(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("ExactScalar: zero denominator");
    BigInt n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(n), d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    v_ = Rep(n, d);
}

ExactScalar ExactScalar::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return ExactScalar(BigInt(std::string(text)));
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    return ExactScalar(num, den);
}

BigInt ExactScalar::floor() const
{
    BigInt num = numerator(), den = denominator();
    BigInt q = num / den;
    if (num < 0 && q * den != num)
        --q;
    return q;
}

ExactScalar ExactScalar::operator-() const { return ExactScalar(Rep(-v_)); }
ExactScalar ExactScalar::operator+(const ExactScalar& rhs) const { return ExactScalar(Rep(v_ + rhs.v_)); }
ExactScalar ExactScalar::operator-(const ExactScalar& rhs) const { return ExactScalar(Rep(v_ - rhs.v_)); }
ExactScalar ExactScalar::operator*(const ExactScalar& rhs) const { return ExactScalar(Rep(v_ * rhs.v_)); }

ExactScalar ExactScalar::operator/(const ExactScalar& rhs) const
{
    if (rhs.is_zero())
        throw std::domain_error("ExactScalar: division by zero");
    return ExactScalar(Rep(v_ / rhs.v_));
}

ExactScalar ExactScalar::reciprocal() const
{
    if (is_zero())
        throw std::domain_error("ExactScalar: reciprocal of zero");
    return ExactScalar(denominator(), numerator());
}

std::string ExactScalar::str() const
{
    if (is_integer())
        return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

std::size_t ExactScalar::hash() const
{
    std::size_t seed = boost::hash<BigInt>()(numerator());
    boost::hash_combine(seed, boost::hash<BigInt>()(denominator()));
    return seed;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(); }

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

} // namespace crystk
