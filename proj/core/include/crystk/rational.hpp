#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace crystk {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational scalar, always in lowest terms with a
/// positive denominator, so equality and hashing are plain value comparisons.
class ExactScalar {
public:
    ExactScalar() : v_(0) {}
    ExactScalar(int n) : v_(n) {}
    ExactScalar(long long n) : v_(n) {}
    ExactScalar(const BigInt& n) : v_(n) {}
    ExactScalar(long long num, long long den);
    ExactScalar(const BigInt& num, const BigInt& den);

    /// Parses "p/q" or "p".
    static ExactScalar parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    bool is_positive() const { return v_ > 0; }
    bool is_negative() const { return v_ < 0; }
    int sign() const { return v_.sign(); }

    /// Largest integer <= *this.
    BigInt floor() const;

    ExactScalar operator-() const;
    ExactScalar operator+(const ExactScalar& rhs) const;
    ExactScalar operator-(const ExactScalar& rhs) const;
    ExactScalar operator*(const ExactScalar& rhs) const;
    ExactScalar operator/(const ExactScalar& rhs) const;

    ExactScalar& operator+=(const ExactScalar& rhs) { return *this = *this + rhs; }
    ExactScalar& operator-=(const ExactScalar& rhs) { return *this = *this - rhs; }
    ExactScalar& operator*=(const ExactScalar& rhs) { return *this = *this * rhs; }
    ExactScalar& operator/=(const ExactScalar& rhs) { return *this = *this / rhs; }

    bool operator==(const ExactScalar& rhs) const { return v_ == rhs.v_; }
    bool operator!=(const ExactScalar& rhs) const { return v_ != rhs.v_; }
    bool operator<(const ExactScalar& rhs) const { return v_ < rhs.v_; }
    bool operator<=(const ExactScalar& rhs) const { return v_ <= rhs.v_; }
    bool operator>(const ExactScalar& rhs) const { return v_ > rhs.v_; }
    bool operator>=(const ExactScalar& rhs) const { return v_ >= rhs.v_; }

    ExactScalar abs() const { return is_negative() ? -*this : *this; }
    ExactScalar reciprocal() const;

    /// "p/q", or "p" when q = 1.
    std::string str() const;

    std::size_t hash() const;

private:
    using Rep = boost::multiprecision::cpp_rational;
    explicit ExactScalar(Rep v) : v_(std::move(v)) {}
    Rep v_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

/// Convenience literal-ish constructor: frac(1, 2) is 1/2.
inline ExactScalar frac(long long num, long long den) { return ExactScalar(num, den); }

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

} // namespace crystk

template <>
struct std::hash<crystk::ExactScalar> {
    std::size_t operator()(const crystk::ExactScalar& s) const { return s.hash(); }
};
