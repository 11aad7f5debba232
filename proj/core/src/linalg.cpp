#include "crystk/linalg.hpp"

#include "crystk/errors.hpp"

#include <boost/functional/hash.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crystk {

bool Vec3::operator<(const Vec3& r) const
{
    if (x != r.x)
        return x < r.x;
    if (y != r.y)
        return y < r.y;
    return z < r.z;
}

Vec3 Vec3::primitive() const
{
    if (is_zero())
        return *this;
    BigInt den = lcm(lcm(x.denominator(), y.denominator()), z.denominator());
    BigInt a = x.numerator() * (den / x.denominator());
    BigInt b = y.numerator() * (den / y.denominator());
    BigInt c = z.numerator() * (den / z.denominator());
    BigInt g = gcd(gcd(boost::multiprecision::abs(a), boost::multiprecision::abs(b)),
                   boost::multiprecision::abs(c));
    return {ExactScalar(BigInt(a / g)), ExactScalar(BigInt(b / g)), ExactScalar(BigInt(c / g))};
}

std::size_t Vec3::hash() const
{
    std::size_t seed = x.hash();
    boost::hash_combine(seed, y.hash());
    boost::hash_combine(seed, z.hash());
    return seed;
}

std::string Vec3::str() const
{
    return "(" + x.str() + "," + y.str() + "," + z.str() + ")";
}

Mat3 Mat3::identity()
{
    Mat3 r = zero();
    r.m[0] = r.m[4] = r.m[8] = ExactScalar(1);
    return r;
}

Mat3 Mat3::zero()
{
    Mat3 r;
    for (auto& e : r.m)
        e = ExactScalar(0);
    return r;
}

Mat3 Mat3::from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2)
{
    Mat3 r;
    for (int c = 0; c < 3; ++c) {
        r(0, c) = r0[c];
        r(1, c) = r1[c];
        r(2, c) = r2[c];
    }
    return r;
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2)
{
    return from_rows({c0.x, c1.x, c2.x}, {c0.y, c1.y, c2.y}, {c0.z, c1.z, c2.z});
}

Mat3 Mat3::diagonal(const ExactScalar& a, const ExactScalar& b, const ExactScalar& c)
{
    Mat3 r = zero();
    r.m[0] = a;
    r.m[4] = b;
    r.m[8] = c;
    return r;
}

Mat3 Mat3::operator*(const Mat3& r) const
{
    Mat3 out = zero();
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            const ExactScalar& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (int j = 0; j < 3; ++j)
                out(i, j) += a * r(k, j);
        }
    return out;
}

Vec3 Mat3::operator*(const Vec3& v) const
{
    return {row(0).dot(v), row(1).dot(v), row(2).dot(v)};
}

Mat3 Mat3::operator+(const Mat3& r) const
{
    Mat3 out;
    for (int i = 0; i < 9; ++i)
        out.m[i] = m[i] + r.m[i];
    return out;
}

Mat3 Mat3::operator-(const Mat3& r) const
{
    Mat3 out;
    for (int i = 0; i < 9; ++i)
        out.m[i] = m[i] - r.m[i];
    return out;
}

Mat3 Mat3::operator-() const
{
    Mat3 out;
    for (int i = 0; i < 9; ++i)
        out.m[i] = -m[i];
    return out;
}

Mat3 Mat3::operator*(const ExactScalar& s) const
{
    Mat3 out;
    for (int i = 0; i < 9; ++i)
        out.m[i] = m[i] * s;
    return out;
}

bool Mat3::operator<(const Mat3& r) const
{
    for (int i = 0; i < 9; ++i) {
        if (m[i] != r.m[i])
            return m[i] < r.m[i];
    }
    return false;
}

Mat3 Mat3::transposed() const
{
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out(i, j) = (*this)(j, i);
    return out;
}

ExactScalar Mat3::det() const
{
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6])
        + m[2] * (m[3] * m[7] - m[4] * m[6]);
}

Mat3 Mat3::inverse() const
{
    ExactScalar d = det();
    if (d.is_zero())
        throw std::domain_error("Mat3: inverse of singular matrix");
    Mat3 adj;
    adj(0, 0) = m[4] * m[8] - m[5] * m[7];
    adj(0, 1) = m[2] * m[7] - m[1] * m[8];
    adj(0, 2) = m[1] * m[5] - m[2] * m[4];
    adj(1, 0) = m[5] * m[6] - m[3] * m[8];
    adj(1, 1) = m[0] * m[8] - m[2] * m[6];
    adj(1, 2) = m[2] * m[3] - m[0] * m[5];
    adj(2, 0) = m[3] * m[7] - m[4] * m[6];
    adj(2, 1) = m[1] * m[6] - m[0] * m[7];
    adj(2, 2) = m[0] * m[4] - m[1] * m[3];
    return adj * d.reciprocal();
}

bool Mat3::is_orthogonal() const { return transposed() * *this == identity(); }

bool Mat3::is_integral() const
{
    for (const auto& e : m)
        if (!e.is_integer())
            return false;
    return true;
}

int Mat3::order(int bound) const
{
    Mat3 p = *this;
    const Mat3 id = identity();
    for (int n = 1; n <= bound; ++n) {
        if (p == id)
            return n;
        p = p * *this;
    }
    throw ClosureBoundExceeded("matrix order exceeds " + std::to_string(bound));
}

std::array<std::optional<Vec3>, 3> Mat3::kernel() const
{
    // Gaussian elimination over Q.
    std::array<std::array<ExactScalar, 3>, 3> a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            a[i][j] = (*this)(i, j);
    int pivot_col[3] = {-1, -1, -1};
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int piv = -1;
        for (int r = rank; r < 3; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[rank], a[piv]);
        ExactScalar inv = a[rank][col].reciprocal();
        for (int j = 0; j < 3; ++j)
            a[rank][j] *= inv;
        for (int r = 0; r < 3; ++r) {
            if (r == rank || a[r][col].is_zero())
                continue;
            ExactScalar f = a[r][col];
            for (int j = 0; j < 3; ++j)
                a[r][j] -= f * a[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::array<std::optional<Vec3>, 3> basis;
    int n = 0;
    for (int col = 0; col < 3; ++col) {
        bool is_pivot = false;
        for (int r = 0; r < rank; ++r)
            is_pivot = is_pivot || pivot_col[r] == col;
        if (is_pivot)
            continue;
        Vec3 v = vec(0, 0, 0);
        v[col] = ExactScalar(1);
        for (int r = 0; r < rank; ++r)
            v[pivot_col[r]] = -a[r][col];
        basis[n++] = v;
    }
    return basis;
}

std::size_t Mat3::hash() const
{
    std::size_t seed = 0;
    for (const auto& e : m)
        boost::hash_combine(seed, e.hash());
    return seed;
}

std::string Mat3::str() const
{
    std::ostringstream os;
    os << "[" << row(0).str() << "," << row(1).str() << "," << row(2).str() << "]";
    return os.str();
}

Mat3 mat(long long a, long long b, long long c,
         long long d, long long e, long long f,
         long long g, long long h, long long i, long long den)
{
    Mat3 r;
    const long long entries[9] = {a, b, c, d, e, f, g, h, i};
    for (int k = 0; k < 9; ++k)
        r.m[k] = ExactScalar(entries[k], den);
    return r;
}

AffineIsometry::AffineIsometry(Vec3 t, Mat3 a)
    : translation(std::move(t)), linear(std::move(a))
{
    if (!linear.is_orthogonal())
        throw NotOrthogonal("affine isometry with non-orthogonal linear part");
}

AffineIsometry AffineIsometry::operator*(const AffineIsometry& r) const
{
    AffineIsometry out;
    out.translation = translation + linear * r.translation;
    out.linear = linear * r.linear;
    return out;
}

AffineIsometry AffineIsometry::inverse() const
{
    AffineIsometry out;
    out.linear = linear.transposed(); // orthogonal
    out.translation = -(out.linear * translation);
    return out;
}

bool AffineIsometry::operator<(const AffineIsometry& r) const
{
    if (!(linear == r.linear))
        return linear < r.linear;
    return translation < r.translation;
}

std::string AffineIsometry::str() const
{
    return translation.str() + " + " + linear.str();
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const Mat3& m) { return os << m.str(); }

} // namespace crystk
