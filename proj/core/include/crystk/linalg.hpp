#pragma once

#include "crystk/rational.hpp"

#include <array>
#include <iosfwd>
#include <optional>

namespace crystk {

/// Column vector in dimensionless lattice coordinates.
struct Vec3 {
    ExactScalar x, y, z;

    Vec3() = default;
    Vec3(ExactScalar x_, ExactScalar y_, ExactScalar z_)
        : x(std::move(x_)), y(std::move(y_)), z(std::move(z_))
    {
    }

    const ExactScalar& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    ExactScalar& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& r) const { return {x + r.x, y + r.y, z + r.z}; }
    Vec3 operator-(const Vec3& r) const { return {x - r.x, y - r.y, z - r.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(const ExactScalar& s) const { return {x * s, y * s, z * s}; }

    bool operator==(const Vec3& r) const { return x == r.x && y == r.y && z == r.z; }
    bool operator!=(const Vec3& r) const { return !(*this == r); }
    bool operator<(const Vec3& r) const;

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    bool is_integral() const { return x.is_integer() && y.is_integer() && z.is_integer(); }

    ExactScalar dot(const Vec3& r) const { return x * r.x + y * r.y + z * r.z; }
    ExactScalar norm2() const { return dot(*this); }

    /// Scales to integer entries with gcd 1.  Zero stays zero.
    Vec3 primitive() const;

    std::size_t hash() const;
    std::string str() const;
};

inline Vec3 vec(long long x, long long y, long long z)
{
    return {ExactScalar(x), ExactScalar(y), ExactScalar(z)};
}

/// 3x3 matrix over ExactScalar, row-major.
struct Mat3 {
    std::array<ExactScalar, 9> m;

    static Mat3 identity();
    static Mat3 zero();
    static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2);
    static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
    static Mat3 diagonal(const ExactScalar& a, const ExactScalar& b, const ExactScalar& c);

    const ExactScalar& operator()(int r, int c) const { return m[3 * r + c]; }
    ExactScalar& operator()(int r, int c) { return m[3 * r + c]; }

    Vec3 row(int r) const { return {m[3 * r], m[3 * r + 1], m[3 * r + 2]}; }
    Vec3 column(int c) const { return {m[c], m[3 + c], m[6 + c]}; }

    Mat3 operator*(const Mat3& r) const;
    Vec3 operator*(const Vec3& v) const;
    Mat3 operator+(const Mat3& r) const;
    Mat3 operator-(const Mat3& r) const;
    Mat3 operator-() const;
    Mat3 operator*(const ExactScalar& s) const;

    bool operator==(const Mat3& r) const { return m == r.m; }
    bool operator!=(const Mat3& r) const { return !(*this == r); }
    bool operator<(const Mat3& r) const;

    Mat3 transposed() const;
    ExactScalar det() const;
    ExactScalar trace() const { return m[0] + m[4] + m[8]; }

    /// Exact inverse; throws std::domain_error when singular.
    Mat3 inverse() const;

    bool is_orthogonal() const; // M^T M = I
    bool is_integral() const;

    /// Multiplicative order; caps at `bound` and throws then.
    int order(int bound = 96) const;

    /// Basis of the rational kernel (0, 1, 2 or 3 vectors).
    std::array<std::optional<Vec3>, 3> kernel() const;

    std::size_t hash() const;
    std::string str() const;
};

/// Builds a matrix from nine integers scaled by 1/den (den = 3 for the
/// hexagonal rotations, 1 otherwise).
Mat3 mat(long long a, long long b, long long c,
         long long d, long long e, long long f,
         long long g, long long h, long long i, long long den = 1);

/// Isometry x -> translation + linear * x with orthogonal linear part.
struct AffineIsometry {
    Vec3 translation;
    Mat3 linear;

    AffineIsometry() : translation(vec(0, 0, 0)), linear(Mat3::identity()) {}
    AffineIsometry(Vec3 t, Mat3 a); // checks orthogonality

    static AffineIsometry translate(const Vec3& t) { return AffineIsometry(t, Mat3::identity()); }
    static AffineIsometry linear_map(const Mat3& a) { return AffineIsometry(vec(0, 0, 0), a); }

    Vec3 operator()(const Vec3& p) const { return translation + linear * p; }

    /// (w1 + A1)(w2 + A2) = (w1 + A1 w2) + A1 A2.
    AffineIsometry operator*(const AffineIsometry& r) const;
    AffineIsometry inverse() const;

    bool operator==(const AffineIsometry& r) const
    {
        return translation == r.translation && linear == r.linear;
    }
    bool operator<(const AffineIsometry& r) const;

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Vec3& v);
std::ostream& operator<<(std::ostream& os, const Mat3& m);

} // namespace crystk
