#pragma once

#include "crystk/rational.hpp"

#include <string>
#include <vector>

namespace crystk {

/// Dense integer matrix with exact arithmetic.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const BigInt& operator()(int r, int c) const { return a_[r * cols_ + c]; }
    BigInt& operator()(int r, int c) { return a_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& r) const;
    bool operator==(const IntMatrix& r) const
    {
        return rows_ == r.rows_ && cols_ == r.cols_ && a_ == r.a_;
    }

    IntMatrix transposed() const;
    BigInt det() const; // square only

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<BigInt> a_;
};

/// M = U * D * V with U, V unimodular and D diagonal with
/// invariant factors d1 | d2 | ... >= 0.
struct SmithDecomposition {
    IntMatrix u, d, v;
    std::vector<BigInt> invariant_factors; // nonzero diagonal entries
    int rank = 0;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Basis of the integer kernel {x : M x = 0} as matrix columns
/// (automatically saturated).
IntMatrix integer_kernel(const IntMatrix& m);

/// True iff x lies in the integer column span of M.
bool in_integer_span(const IntMatrix& m, const std::vector<BigInt>& x);

/// Cokernel Z^rows / im(M) as (free rank, torsion factors > 1).
struct CokernelShape {
    int free_rank = 0;
    std::vector<BigInt> torsion;
    bool operator==(const CokernelShape&) const = default;
};
CokernelShape cokernel_shape(const IntMatrix& m);

/// dim ker as a free abelian group (integer kernels are free).
int kernel_rank(const IntMatrix& m);

} // namespace crystk
