#include "crystk/abstract_group.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace crystk {

int MulTable::inv(int i) const
{
    for (int j = 0; j < n; ++j)
        if (mul(i, j) == identity)
            return j;
    throw std::logic_error("MulTable: element without inverse");
}

int MulTable::element_order(int i) const
{
    int p = i, order = 1;
    while (p != identity) {
        p = mul(p, i);
        ++order;
        if (order > n)
            throw std::logic_error("MulTable: order exceeds group size");
    }
    return order;
}

std::vector<int> MulTable::order_multiset() const
{
    std::vector<int> orders(n);
    for (int i = 0; i < n; ++i)
        orders[i] = element_order(i);
    std::sort(orders.begin(), orders.end());
    return orders;
}

bool MulTable::is_abelian() const
{
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mul(i, j) != mul(j, i))
                return false;
    return true;
}

int MulTable::center_size() const
{
    int count = 0;
    for (int i = 0; i < n; ++i) {
        bool central = true;
        for (int j = 0; j < n && central; ++j)
            central = mul(i, j) == mul(j, i);
        count += central ? 1 : 0;
    }
    return count;
}

namespace {

std::vector<int> closure(const MulTable& g, std::vector<int> seed)
{
    std::set<int> have(seed.begin(), seed.end());
    have.insert(g.identity);
    std::vector<int> frontier(have.begin(), have.end());
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int b : have) {
                for (int c : {g.mul(a, b), g.mul(b, a)})
                    if (have.insert(c).second)
                        next.push_back(c);
            }
        frontier = std::move(next);
    }
    return {have.begin(), have.end()};
}

} // namespace

std::vector<int> MulTable::generating_set() const
{
    std::vector<int> gens;
    std::vector<int> current = closure(*this, {});
    while (static_cast<int>(current.size()) < n) {
        // Add the element that grows the closure the most.
        int best = -1;
        std::size_t best_size = current.size();
        for (int i = 0; i < n; ++i) {
            if (std::binary_search(current.begin(), current.end(), i))
                continue;
            std::vector<int> seed = gens;
            seed.push_back(i);
            std::size_t sz = closure(*this, seed).size();
            if (sz > best_size) {
                best = i;
                best_size = sz;
            }
        }
        gens.push_back(best);
        std::vector<int> seed = gens;
        current = closure(*this, seed);
    }
    return gens;
}

MulTable cyclic_table(int n)
{
    MulTable g;
    g.n = n;
    g.table.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.table[i * n + j] = (i + j) % n;
    return g;
}

MulTable dihedral_table(int n)
{
    // Elements 0..n-1 are rotations r^i, n..2n-1 are reflections s r^i.
    MulTable g;
    g.n = 2 * n;
    g.table.resize(4 * n * n);
    auto idx = [n](bool flip, int rot) { return (flip ? n : 0) + ((rot % n) + n) % n; };
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
            bool fi = i >= n, fj = j >= n;
            int ri = i % n, rj = j % n;
            // (s^fi r^ri)(s^fj r^rj) = s^(fi+fj) r^(±ri+rj)
            int rot = fj ? (rj - ri) : (ri + rj);
            g.table[i * 2 * n + j] = idx(fi != fj, rot);
        }
    return g;
}

namespace {

// Permutations of {0,1,2,3} as a multiplication table, optionally even only.
MulTable perm4_table(bool even_only)
{
    std::array<int, 4> p = {0, 1, 2, 3};
    std::vector<std::array<int, 4>> elems;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                inversions += p[i] > p[j] ? 1 : 0;
        if (!even_only || inversions % 2 == 0)
            elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    // Identity first for convenience.
    std::sort(elems.begin(), elems.end());
    MulTable g;
    g.n = static_cast<int>(elems.size());
    g.table.resize(g.n * g.n);
    std::map<std::array<int, 4>, int> index;
    for (int i = 0; i < g.n; ++i)
        index[elems[i]] = i;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            std::array<int, 4> prod{};
            for (int k = 0; k < 4; ++k)
                prod[k] = elems[i][elems[j][k]];
            g.table[i * g.n + j] = index[prod];
        }
    g.identity = index[{0, 1, 2, 3}];
    return g;
}

} // namespace

MulTable alternating4_table() { return perm4_table(true); }
MulTable symmetric4_table() { return perm4_table(false); }

MulTable product_table(const MulTable& a, const MulTable& b)
{
    MulTable g;
    g.n = a.n * b.n;
    g.table.resize(g.n * g.n);
    auto idx = [&](int i, int j) { return i * b.n + j; };
    for (int i1 = 0; i1 < a.n; ++i1)
        for (int j1 = 0; j1 < b.n; ++j1)
            for (int i2 = 0; i2 < a.n; ++i2)
                for (int j2 = 0; j2 < b.n; ++j2)
                    g.table[idx(i1, j1) * g.n + idx(i2, j2)] =
                        idx(a.mul(i1, i2), b.mul(j1, j2));
    g.identity = idx(a.identity, b.identity);
    return g;
}

bool isomorphic(const MulTable& a, const MulTable& b)
{
    if (a.n != b.n)
        return false;
    if (a.order_multiset() != b.order_multiset())
        return false;

    std::vector<int> gens = a.generating_set();
    if (gens.empty())
        return true; // both trivial

    // Backtracking over images of the generators; the partial map is grown
    // by closure and checked for homomorphism consistency as it grows.
    std::vector<int> gen_orders;
    for (int g : gens)
        gen_orders.push_back(a.element_order(g));

    std::function<bool(std::size_t, std::vector<int>&)> place =
        [&](std::size_t k, std::vector<int>& images) -> bool {
        if (k == gens.size()) {
            // Build the full map by expressing every element as a word.
            std::vector<int> map(a.n, -1);
            map[a.identity] = b.identity;
            std::vector<int> known = {a.identity};
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (map[gens[i]] != -1 && map[gens[i]] != images[i])
                    return false;
                map[gens[i]] = images[i];
                known.push_back(gens[i]);
            }
            bool grew = true;
            while (grew) {
                grew = false;
                std::size_t sz = known.size();
                for (std::size_t i = 0; i < sz; ++i)
                    for (std::size_t j = 0; j < sz; ++j) {
                        int p = a.mul(known[i], known[j]);
                        int q = b.mul(map[known[i]], map[known[j]]);
                        if (map[p] == -1) {
                            map[p] = q;
                            known.push_back(p);
                            grew = true;
                        } else if (map[p] != q) {
                            return false;
                        }
                    }
            }
            if (static_cast<int>(known.size()) != a.n)
                return false;
            std::vector<bool> hit(b.n, false);
            for (int i = 0; i < a.n; ++i) {
                if (hit[map[i]])
                    return false;
                hit[map[i]] = true;
            }
            return true;
        }
        for (int cand = 0; cand < b.n; ++cand) {
            if (b.element_order(cand) != gen_orders[k])
                continue;
            images.push_back(cand);
            if (place(k + 1, images))
                return true;
            images.pop_back();
        }
        return false;
    };

    std::vector<int> images;
    return place(0, images);
}

std::vector<std::vector<int>> all_subgroups(const MulTable& g)
{
    std::set<std::vector<int>> found;
    found.insert(closure(g, {}));
    // Join-closure: extend every known subgroup by every element.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(found.begin(), found.end());
        for (const auto& sub : snapshot)
            for (int e = 0; e < g.n; ++e) {
                if (std::binary_search(sub.begin(), sub.end(), e))
                    continue;
                std::vector<int> seed = sub;
                seed.push_back(e);
                grew |= found.insert(closure(g, seed)).second;
            }
    }
    return {found.begin(), found.end()};
}

MulTable subgroup_table(const MulTable& g, const std::vector<int>& subset)
{
    MulTable s;
    s.n = static_cast<int>(subset.size());
    s.table.resize(s.n * s.n);
    std::map<int, int> index;
    for (int i = 0; i < s.n; ++i)
        index[subset[i]] = i;
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            auto it = index.find(g.mul(subset[i], subset[j]));
            if (it == index.end())
                throw std::logic_error("subgroup_table: subset is not closed");
            s.table[i * s.n + j] = it->second;
        }
    for (int i = 0; i < s.n; ++i)
        if (subset[i] == g.identity)
            s.identity = i;
    return s;
}

bool embeds_in_s4(const MulTable& g)
{
    static const MulTable s4 = symmetric4_table();
    static const std::vector<std::vector<int>> subs = all_subgroups(s4);
    if (24 % g.n != 0)
        return false;
    for (const auto& sub : subs) {
        if (static_cast<int>(sub.size()) != g.n)
            continue;
        if (isomorphic(g, subgroup_table(s4, sub)))
            return true;
    }
    return false;
}

} // namespace crystk
