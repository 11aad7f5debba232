#pragma once

#include <string>

namespace crystk {

/// Formal abelian-group expression: Z^r + (Z/2)^a + (Z/4)^b + optional
/// infinite sums of Z/2 and Z/4 + symbolic Nil multiplicities.  Infinite-sum
/// flags collapse idempotently; finite counts are never folded into them.
struct KExpr {
    long z_rank = 0;
    long z2 = 0;
    long z4 = 0;
    bool inf_z2 = false;
    bool inf_z4 = false;
    long nk_d4 = 0;
    long nk_d6 = 0;

    bool is_zero() const
    {
        return z_rank == 0 && z2 == 0 && z4 == 0 && !inf_z2 && !inf_z4 && nk_d4 == 0
            && nk_d6 == 0;
    }

    KExpr operator+(const KExpr& r) const
    {
        KExpr out;
        out.z_rank = z_rank + r.z_rank;
        out.z2 = z2 + r.z2;
        out.z4 = z4 + r.z4;
        out.inf_z2 = inf_z2 || r.inf_z2;
        out.inf_z4 = inf_z4 || r.inf_z4;
        out.nk_d4 = nk_d4 + r.nk_d4;
        out.nk_d6 = nk_d6 + r.nk_d6;
        return out;
    }
    KExpr& operator+=(const KExpr& r) { return *this = *this + r; }

    bool operator==(const KExpr&) const = default;

    static KExpr free_part(long rank)
    {
        KExpr e;
        e.z_rank = rank;
        return e;
    }
    static KExpr torsion(long z2_count, long z4_count)
    {
        KExpr e;
        e.z2 = z2_count;
        e.z4 = z4_count;
        return e;
    }
    static KExpr infinite_z2()
    {
        KExpr e;
        e.inf_z2 = true;
        return e;
    }
    static KExpr infinite_z4()
    {
        KExpr e;
        e.inf_z4 = true;
        return e;
    }
    static KExpr nil_d4(long mult)
    {
        KExpr e;
        e.nk_d4 = mult;
        return e;
    }
    static KExpr nil_d6(long mult)
    {
        KExpr e;
        e.nk_d6 = mult;
        return e;
    }

    /// Fixed render order: Z-rank, Z/2, Z/4, inf(Z/2), inf(Z/4), NK terms.
    std::string str() const;

    /// Parses the renderer's output (used by the golden tables).
    static KExpr parse(const std::string& text);
};

} // namespace crystk
