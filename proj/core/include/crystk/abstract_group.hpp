#pragma once

#include <string>
#include <vector>

namespace crystk {

/// Finite group given extensionally by its multiplication table.
struct MulTable {
    int n = 0;
    std::vector<int> table; // n*n, table[i*n+j] = index of g_i * g_j
    int identity = 0;

    int mul(int i, int j) const { return table[i * n + j]; }
    int inv(int i) const;
    int element_order(int i) const;

    std::vector<int> order_multiset() const; // sorted element orders
    bool is_abelian() const;
    int center_size() const;

    /// Small generating set found greedily.
    std::vector<int> generating_set() const;
};

MulTable cyclic_table(int n);
MulTable dihedral_table(int n); // order 2n
MulTable alternating4_table();
MulTable symmetric4_table();
MulTable product_table(const MulTable& a, const MulTable& b);

bool isomorphic(const MulTable& a, const MulTable& b);

/// All subgroups as sorted element-index sets.
std::vector<std::vector<int>> all_subgroups(const MulTable& g);
MulTable subgroup_table(const MulTable& g, const std::vector<int>& subset);

/// True iff g embeds in S4 (exhaustive search over S4's subgroups).
bool embeds_in_s4(const MulTable& g);

} // namespace crystk
