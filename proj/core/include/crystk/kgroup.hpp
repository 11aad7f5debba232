#pragma once

#include "crystk/domain.hpp"
#include "crystk/intmatrix.hpp"
#include "crystk/kexpr.hpp"

#include <functional>
#include <string>
#include <vector>

namespace crystk {

/// Lower K-theory lookup for the finite stabilizer types: q = 1 (Wh),
/// q = 0 (reduced K0), q <= -1 (K_q); zero outside the table and for
/// q <= -2.  Throws UnknownType for types outside the stabilizer list.
KExpr wh_table(FinGroupType t, int q);

using WhTableFn = std::function<KExpr(FinGroupType, int)>;

/// Chain data of the quotient cell complex in dimensions 0 and 1, with the
/// K_{-1}-level boundary map reduced to the distinguished Z-summands.
struct QuinnComplex {
    std::vector<FinGroupType> vertex_types;
    std::vector<FinGroupType> edge_types;

    // K_{-1} boundary on the distinguished coordinates: one row per
    // distinguished vertex summand, one column per edge.
    IntMatrix boundary_km1;
    int complement_rank = 0; // untouched Z-summands of the vertex K_{-1}

    static QuinnComplex from_cells(const std::vector<CellOrbit>& cells,
                                   const WhTableFn& table);
};

struct HomologyPair {
    KExpr e2_0; // cokernel at the given level
    KExpr e2_1; // kernel at the given level
};

/// E2_{0,q} and E2_{1,q} of the complex; q = -1 uses the boundary data,
/// q = 0 and 1 have zero boundary (edge torsion vanishes in the catalog).
HomologyPair chain_homology(const QuinnComplex& c, int q);

struct HfinResult {
    KExpr h_minus1;
    KExpr h0;
    KExpr h1; // always zero
};

/// First summand of the splitting: homology of the refined cell complex of
/// the given catalog group, with the five hard boundary cases as data.
HfinResult assemble_hfin(const std::string& label);
HfinResult assemble_hfin(const std::string& label, const WhTableFn& table);

/// Encoded boundary matrix for the groups whose quotient has non-negligible
/// edges; nullptr-equivalent (empty) for everyone else.
struct HardCaseData {
    std::string label;
    IntMatrix boundary; // distinguished coordinates x edges
    int distinguished_vertices = 0;
};
const std::vector<HardCaseData>& hard_case_boundaries();

} // namespace crystk
