#include "crystk/intmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace crystk {

using boost::multiprecision::abs;

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        r(i, i) = 1;
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& r) const
{
    if (cols_ != r.rows_)
        throw std::domain_error("IntMatrix: size mismatch in product");
    IntMatrix out(rows_, r.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < r.cols_; ++j)
                out(i, j) += a * r(k, j);
        }
    return out;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

BigInt IntMatrix::det() const
{
    if (rows_ != cols_)
        throw std::domain_error("IntMatrix: det of non-square matrix");
    // Fraction-free Gaussian elimination (Bareiss).
    IntMatrix a = *this;
    const int n = rows_;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (a(r, k) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0)
                return 0;
            for (int c = 0; c < n; ++c)
                std::swap(a(k, c), a(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntMatrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ";" : "") << "[";
        for (int j = 0; j < cols_; ++j)
            os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

struct Worker {
    IntMatrix d, u, v; // invariant: original = u * d * v

    explicit Worker(const IntMatrix& m)
        : d(m), u(IntMatrix::identity(m.rows())), v(IntMatrix::identity(m.cols()))
    {
    }

    // Row op on d is compensated by the inverse column op on u.
    void swap_rows(int i, int j)
    {
        for (int c = 0; c < d.cols(); ++c)
            std::swap(d(i, c), d(j, c));
        for (int r = 0; r < u.rows(); ++r)
            std::swap(u(r, i), u(r, j));
    }
    void swap_cols(int i, int j)
    {
        for (int r = 0; r < d.rows(); ++r)
            std::swap(d(r, i), d(r, j));
        for (int c = 0; c < v.cols(); ++c)
            std::swap(v(i, c), v(j, c));
    }
    void add_row(int dst, int src, const BigInt& f) // row dst += f * row src
    {
        for (int c = 0; c < d.cols(); ++c)
            d(dst, c) += f * d(src, c);
        for (int r = 0; r < u.rows(); ++r)
            u(r, src) -= f * u(r, dst);
    }
    void add_col(int dst, int src, const BigInt& f)
    {
        for (int r = 0; r < d.rows(); ++r)
            d(r, dst) += f * d(r, src);
        for (int c = 0; c < v.cols(); ++c)
            v(src, c) -= f * v(dst, c);
    }
    void negate_row(int i)
    {
        for (int c = 0; c < d.cols(); ++c)
            d(i, c) = -d(i, c);
        for (int r = 0; r < u.rows(); ++r)
            u(r, i) = -u(r, i);
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    Worker w(m);
    const int nmin = std::min(m.rows(), m.cols());

    for (int s = 0; s < nmin; ++s) {
        for (;;) {
            // Locate the minimal nonzero entry of the trailing block.
            int pr = -1, pc = -1;
            for (int i = s; i < w.d.rows(); ++i)
                for (int j = s; j < w.d.cols(); ++j)
                    if (w.d(i, j) != 0
                        && (pr < 0 || abs(w.d(i, j)) < abs(w.d(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr < 0)
                break; // trailing block is zero
            w.swap_rows(s, pr);
            w.swap_cols(s, pc);

            bool reduced = true;
            for (int i = s + 1; i < w.d.rows(); ++i)
                if (w.d(i, s) != 0) {
                    w.add_row(i, s, -(w.d(i, s) / w.d(s, s)));
                    if (w.d(i, s) != 0)
                        reduced = false;
                }
            for (int j = s + 1; j < w.d.cols(); ++j)
                if (w.d(s, j) != 0) {
                    w.add_col(j, s, -(w.d(s, j) / w.d(s, s)));
                    if (w.d(s, j) != 0)
                        reduced = false;
                }
            if (!reduced)
                continue;

            // Pivot divides every trailing entry, or fold an offender in.
            int br = -1, bc = -1;
            for (int i = s + 1; i < w.d.rows() && br < 0; ++i)
                for (int j = s + 1; j < w.d.cols(); ++j)
                    if (w.d(i, j) % w.d(s, s) != 0) {
                        br = i;
                        bc = j;
                        break;
                    }
            if (br < 0)
                break;
            w.add_row(s, br, 1);
            (void)bc;
        }
        if (w.d(s, s) < 0)
            w.negate_row(s);
    }

    SmithDecomposition out;
    out.d = w.d;
    out.u = w.u;
    out.v = w.v;
    for (int s = 0; s < nmin; ++s)
        if (w.d(s, s) != 0) {
            out.invariant_factors.push_back(w.d(s, s));
            ++out.rank;
        }
    return out;
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    // M = U D V, so M x = 0 iff (V x) vanishes on the pivot coordinates.
    // Kernel basis: V^{-1} e_i for the non-pivot i.  V^{-1} is recovered by
    // solving V X = I with exact integer elimination on the unimodular V.
    SmithDecomposition s = smith_normal_form(m);
    const int n = m.cols();
    const int k = n - s.rank;
    IntMatrix kernel(n, k);
    if (k == 0)
        return kernel;

    // Invert the unimodular V via its Smith decomposition: V = U' D' V'
    // with D' = I, hence V^{-1} = V'^{-1} U'^{-1}... simpler: adjugate-free
    // Gauss-Jordan over rationals would leave Q; instead solve V x = e_i
    // by Cramer with det = ±1 (Bareiss determinants stay integral).
    IntMatrix vinv(n, n);
    BigInt dv = s.v.det(); // ±1
    for (int col = 0; col < n; ++col)
        for (int row = 0; row < n; ++row) {
            // cofactor expansion: vinv(row, col) = det(V with col `row`
            // replaced by e_col) / det(V)
            IntMatrix t = s.v;
            for (int r = 0; r < n; ++r)
                t(r, row) = (r == col) ? 1 : 0;
            vinv(row, col) = t.det() / dv;
        }
    int out_col = 0;
    for (int i = 0; i < n; ++i) {
        bool pivot = i < std::min(m.rows(), m.cols()) && s.d(i, i) != 0;
        if (pivot)
            continue;
        for (int r = 0; r < n; ++r)
            kernel(r, out_col) = vinv(r, i);
        ++out_col;
    }
    return kernel;
}

bool in_integer_span(const IntMatrix& m, const std::vector<BigInt>& x)
{
    if (static_cast<int>(x.size()) != m.rows())
        throw std::domain_error("in_integer_span: size mismatch");
    // M c = x iff D (V c) = U^{-1} x; solve via U y = x first.
    SmithDecomposition s = smith_normal_form(m);
    const int n = m.rows();
    // y = U^{-1} x by Cramer (det U = ±1).
    BigInt du = s.u.det();
    std::vector<BigInt> y(n);
    for (int i = 0; i < n; ++i) {
        IntMatrix t = s.u;
        for (int r = 0; r < n; ++r)
            t(r, i) = x[r];
        y[i] = t.det() / du;
    }
    const int nmin = std::min(m.rows(), m.cols());
    for (int i = 0; i < n; ++i) {
        BigInt di = i < nmin ? s.d(i, i) : BigInt(0);
        if (di == 0) {
            if (y[i] != 0)
                return false;
        } else if (y[i] % di != 0) {
            return false;
        }
    }
    return true;
}

CokernelShape cokernel_shape(const IntMatrix& m)
{
    SmithDecomposition s = smith_normal_form(m);
    CokernelShape out;
    out.free_rank = m.rows() - s.rank;
    for (const BigInt& d : s.invariant_factors)
        if (d > 1)
            out.torsion.push_back(d);
    return out;
}

int kernel_rank(const IntMatrix& m)
{
    return m.cols() - smith_normal_form(m).rank;
}

} // namespace crystk
