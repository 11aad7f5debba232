#pragma once

#include "crystk/kgroup.hpp"
#include "crystk/lines.hpp"

#include <string>
#include <vector>

namespace crystk {

/// Final assembled lower K-theory of a catalog group: the finite part plus
/// the line cokernels at n = 0 and n = 1 (nothing enters at n = -1).
struct KTheoryResult {
    std::string label;
    KExpr k_minus1;
    KExpr k0_tilde;
    KExpr wh;

    bool operator==(const KTheoryResult&) const = default;
};

KTheoryResult k_theory(const std::string& label);

/// All 73 results in catalog order.
const std::vector<KTheoryResult>& k_theory_all();

struct GoldenReport {
    bool ok = false;
    int tables_checked = 0;
    std::vector<std::string> mismatches;
};

/// Recomputes every table from scratch and diffs against the embedded
/// golden transcriptions.
GoldenReport run_goldens();

/// Embedded golden data (parsed JSON blobs).
namespace goldens {
const std::string& json_text();
} // namespace goldens

} // namespace crystk
