#include "crystk/kgroup.hpp"

#include "crystk/errors.hpp"

#include <algorithm>
#include <map>

namespace crystk {

KExpr wh_table(FinGroupType t, int q)
{
    // Validate the type (throws for anything outside the enum).
    (void)to_string(t);
    if (q > 1)
        throw UnknownType("wh_table is defined for q <= 1");
    if (q <= -2)
        return {};

    KExpr e;
    switch (t) {
    case FinGroupType::Z6:
        if (q == -1)
            e.z_rank = 1;
        break;
    case FinGroupType::Z4xZ2:
        if (q == 0)
            e.z2 = 1;
        break;
    case FinGroupType::Z6xZ2:
        if (q == -1)
            e.z_rank = 3;
        if (q == 0)
            e.z2 = 2;
        break;
    case FinGroupType::D2xZ2:
        if (q == 0)
            e.z2 = 1;
        break;
    case FinGroupType::D6:
        if (q == -1)
            e.z_rank = 1;
        break;
    case FinGroupType::D4xZ2:
        if (q == 0)
            e.z4 = 1;
        break;
    case FinGroupType::D6xZ2:
        if (q == -1)
            e.z_rank = 3;
        if (q == 0)
            e.z2 = 2;
        break;
    case FinGroupType::A4xZ2:
        if (q == -1)
            e.z_rank = 1;
        if (q == 0)
            e.z2 = 1;
        break;
    case FinGroupType::S4xZ2:
        if (q == -1)
            e.z_rank = 1;
        if (q == 0)
            e.z4 = 1;
        break;
    default:
        break; // everything else in the list has zero lower K-theory
    }
    return e;
}

namespace {

long km1_rank(FinGroupType t, const WhTableFn& table)
{
    KExpr e = table(t, -1);
    if (e.z2 || e.z4 || e.inf_z2 || e.inf_z4 || e.nk_d4 || e.nk_d6)
        throw DimensionMismatch("K_-1 of a finite stabilizer must be free");
    return e.z_rank;
}

} // namespace

QuinnComplex QuinnComplex::from_cells(const std::vector<CellOrbit>& cells,
                                      const WhTableFn& table)
{
    QuinnComplex c;
    for (const CellOrbit& cell : cells) {
        if (cell.dim == 0)
            c.vertex_types.push_back(cell.type);
        else if (cell.dim == 1)
            c.edge_types.push_back(cell.type);
    }
    long total = 0;
    for (FinGroupType t : c.vertex_types)
        total += km1_rank(t, table);
    c.complement_rank = static_cast<int>(total);
    c.boundary_km1 = IntMatrix(0, static_cast<int>(c.edge_types.size()));
    return c;
}

HomologyPair chain_homology(const QuinnComplex& c, int q)
{
    HomologyPair out;
    auto to_kexpr = [](const CokernelShape& shape) {
        KExpr e;
        e.z_rank = shape.free_rank;
        for (const BigInt& d : shape.torsion) {
            if (d == 2)
                ++e.z2;
            else if (d == 4)
                ++e.z4;
            else
                throw DimensionMismatch("torsion factor outside {2,4}: " + d.str());
        }
        return e;
    };

    if (q == -1) {
        long edge_rank = 0;
        for (FinGroupType t : c.edge_types)
            edge_rank += km1_rank(t, wh_table);
        if (c.boundary_km1.cols() != static_cast<int>(edge_rank))
            throw DimensionMismatch("boundary columns must match the edge K_-1 rank");
        out.e2_0 = to_kexpr(cokernel_shape(c.boundary_km1));
        out.e2_0.z_rank += c.complement_rank; // untouched vertex summands
        out.e2_1.z_rank = kernel_rank(c.boundary_km1);
        return out;
    }
    if (q == 0) {
        // Edge stabilizers in the catalog have trivial reduced K0, so the
        // q = 0 row carries no boundary.
        for (FinGroupType t : c.vertex_types)
            out.e2_0 += wh_table(t, 0);
        for (FinGroupType t : c.edge_types)
            if (!wh_table(t, 0).is_zero())
                throw DimensionMismatch("edge with nonzero reduced K0");
        return out;
    }
    return out; // q = 1: Wh of every finite stabilizer vanishes
}

const std::vector<HardCaseData>& hard_case_boundaries()
{
    static const std::vector<HardCaseData> data = [] {
        std::vector<HardCaseData> v;
        auto matrix = [](std::initializer_list<std::initializer_list<int>> rows) {
            IntMatrix m(static_cast<int>(rows.size()),
                        static_cast<int>(rows.begin()->size()));
            int r = 0;
            for (const auto& row : rows) {
                int c = 0;
                for (int e : row)
                    m(r, c++) = e;
                ++r;
            }
            return m;
        };
        // One distinguished Z-summand per edge endpoint (the edge group
        // retracts off a Z-summand of the vertex group); the complementary
        // summands pass through untouched.
        v.push_back({"D6+x(-1)_5", matrix({{1}, {-1}}), 2}); // Gamma_5
        v.push_back({"C6+x(-1)_5", matrix({{1}, {-1}}), 2});
        v.push_back({"C6+_5", matrix({{-1, 1}, {1, -1}}), 2});
        v.push_back({"D6+_5", matrix({{1}, {-1}}), 2});
        v.push_back({"D6''_5", matrix({{-1, 1}, {1, -1}}), 2});
        return v;
    }();
    return data;
}

HfinResult assemble_hfin(const std::string& label)
{
    return assemble_hfin(label, wh_table);
}

HfinResult assemble_hfin(const std::string& label, const WhTableFn& table)
{
    const CrystGroup& g = catalog_entry(label);
    const CellComplex& cells = catalog_cells(g.label);

    QuinnComplex complex = QuinnComplex::from_cells(cells.cells, table);

    if (!complex.edge_types.empty()) {
        const HardCaseData* hard = nullptr;
        for (const HardCaseData& h : hard_case_boundaries())
            if (h.label == g.label)
                hard = &h;
        if (!hard)
            throw MissingCellData(g.label + " has edges but no boundary data");
        long edge_rank = 0;
        for (FinGroupType t : complex.edge_types)
            edge_rank += km1_rank(t, table);
        if (hard->boundary.cols() != static_cast<int>(edge_rank)
            || hard->boundary.rows() != hard->distinguished_vertices
            || complex.complement_rank < hard->distinguished_vertices)
            throw DimensionMismatch(g.label + ": boundary data out of shape");
        complex.boundary_km1 = hard->boundary;
        complex.complement_rank -= hard->distinguished_vertices;
    }

    HomologyPair km1 = chain_homology(complex, -1);
    KExpr vertex_k0;
    for (FinGroupType t : complex.vertex_types)
        vertex_k0 += table(t, 0);

    // One of E2_{0,0} and E2_{1,-1} always vanishes; fail loudly otherwise
    // instead of choosing an extension order.
    if (!vertex_k0.is_zero() && !km1.e2_1.is_zero())
        throw DimensionMismatch(g.label + ": both E2_{0,0} and E2_{1,-1} nonzero");

    HfinResult out;
    out.h_minus1 = km1.e2_0;
    out.h0 = vertex_k0 + km1.e2_1;
    out.h1 = {};
    return out;
}

} // namespace crystk
