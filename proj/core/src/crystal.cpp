#include "crystk/crystal.hpp"

#include "crystk/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace crystk {

bool CrystGroup::contains(const AffineIsometry& g) const
{
    return point_group.contains(g.linear) && lattice.contains(g.translation);
}

namespace {

struct CatalogData {
    std::vector<Lattice> lattices;           // index 0..6 for L1..L7
    std::vector<std::vector<std::string>> pg_names;
    std::vector<CrystGroup> entries;
    std::map<std::string, std::size_t> by_label;
    std::vector<std::size_t> maximal;        // index of Gamma_i per lattice

    CatalogData()
    {
        const Vec3 x = vec(1, 0, 0), y = vec(0, 1, 0), z = vec(0, 0, 1);
        const Vec3 v1 = vec(1, 1, 1), v2 = vec(1, -1, 0), v3 = vec(0, -1, 1);
        const ExactScalar half(1, 2), third(1, 3);

        lattices = {
            Lattice(x, y, z, "L1"),
            Lattice((x + y + z) * half, y, z, "L2"),
            Lattice((x + y) * half, (x + z) * half, (y + z) * half, "L3"),
            Lattice((x + z) * half, y, z, "L4"),
            Lattice(v1, v2, v3, "L5"),
            Lattice((v1 + v2 + v3) * third, v2, v3, "L6"),
            Lattice(v1, (v2 + v3) * third, v3, "L7"),
        };

        pg_names = {
            {"S4+x(-1)", "S4+", "S'_4", "A4+x(-1)", "A4+", "D4''",
             "D4+x(-1)", "D4+", "C'_2", "D2+x(-1)", "D2+", "C'_4",
             "C4+x(-1)", "C4+", "D'_2", "C2+x(-1)", "C2+", "D'_4",
             "C1+x(-1)", "C1+", "Dhat'_4"},
            {"S4+x(-1)", "S4+", "S'_4", "A4+x(-1)", "A4+", "D4''",
             "D4+x(-1)", "D4+", "C'_2", "D2+x(-1)", "D2+", "C'_4",
             "C4+x(-1)", "C4+", "D'_2", "C2+x(-1)", "C2+", "D'_4",
             "Dhat'_4"},
            {"S4+x(-1)", "S4+", "S'_4", "A4+x(-1)", "A4+", "D'_2",
             "D2+x(-1)", "D2+"},
            {"D2+x(-1)", "D2+", "D'_2", "D'_2_2"},
            {"D6+x(-1)", "D6+", "C'_6", "C6+x(-1)", "D'_6", "C6+",
             "D3+x(-1)", "Dhat'_6", "C3+", "C3+x(-1)", "D'_3", "D3+",
             "D6''"},
            {"D3+x(-1)", "D3+", "D'_3", "C3+x(-1)", "C3+"},
            {"D3+x(-1)", "D3+", "D'_3"},
        };

        const std::vector<std::string> maximal_names = {
            "S4+x(-1)", "S4+x(-1)", "S4+x(-1)", "D2+x(-1)",
            "D6+x(-1)", "D3+x(-1)", "D3+x(-1)"};

        for (std::size_t li = 0; li < lattices.size(); ++li) {
            for (const std::string& pg : pg_names[li]) {
                CrystGroup g{lattices[li], standard_point_group(pg),
                             pg + "_" + std::to_string(li + 1),
                             static_cast<int>(li + 1)};
                if (!preserves_lattice(g.point_group, g.lattice))
                    throw CatalogInconsistent(g.label + " does not preserve its lattice");
                if (pg == maximal_names[li])
                    maximal.push_back(entries.size());
                by_label.emplace(g.label, entries.size());
                entries.push_back(std::move(g));
            }
        }
        // Every entry is a subgroup of its lattice's maximal group.
        for (std::size_t li = 0; li < lattices.size(); ++li) {
            const PointGroup& big = entries[maximal[li]].point_group;
            for (const CrystGroup& g : entries)
                if (g.lattice_index == static_cast<int>(li + 1)
                    && !g.point_group.is_subgroup_of(big))
                    throw CatalogInconsistent(g.label + " not inside the maximal group");
        }
        if (entries.size() != 73)
            throw CatalogInconsistent("expected 73 entries, found "
                                      + std::to_string(entries.size()));
    }
};

const CatalogData& data()
{
    static const CatalogData d;
    return d;
}

} // namespace

const std::vector<CrystGroup>& catalog() { return data().entries; }

const CrystGroup& catalog_entry(const std::string& label)
{
    const auto& d = data();
    if (label.rfind("Gamma_", 0) == 0 && label.size() == 7) {
        int i = label[6] - '0';
        if (i >= 1 && i <= 7)
            return d.entries[d.maximal[i - 1]];
    }
    auto it = d.by_label.find(label);
    if (it == d.by_label.end())
        throw NotInCatalog(label);
    return d.entries[it->second];
}

const CrystGroup& maximal_group(int i)
{
    if (i < 1 || i > 7)
        throw NotInCatalog("Gamma_" + std::to_string(i));
    return data().entries[data().maximal[i - 1]];
}

const Lattice& catalog_lattice(int i)
{
    if (i < 1 || i > 7)
        throw NotInCatalog("lattice " + std::to_string(i));
    return data().lattices[i - 1];
}

int catalog_lattice_count(int i)
{
    return static_cast<int>(data().pg_names.at(i - 1).size());
}

IntegralRep integral_representation(const CrystGroup& g)
{
    const Mat3& b = g.lattice.basis_matrix();
    const Mat3 binv = g.lattice.inverse_basis_matrix();
    IntegralRep out;
    for (const Mat3& m : g.point_group.elements) {
        Mat3 c = binv * m * b;
        std::array<std::int64_t, 9> row{};
        for (int i = 0; i < 9; ++i) {
            if (!c.m[i].is_integer())
                throw NonIntegralResult(g.label + ": " + m.str());
            row[i] = static_cast<std::int64_t>(c.m[i].numerator());
        }
        out.matrices.push_back(row);
    }
    std::sort(out.matrices.begin(), out.matrices.end());
    return out;
}

namespace {

using IMat = std::array<std::int64_t, 9>;

IMat imul(const IMat& a, const IMat& b)
{
    IMat c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            std::int64_t v = a[3 * i + k];
            if (!v)
                continue;
            for (int j = 0; j < 3; ++j)
                c[3 * i + j] += v * b[3 * k + j];
        }
    return c;
}

std::int64_t idet(const IMat& m)
{
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6])
        + m[2] * (m[3] * m[7] - m[4] * m[6]);
}

IMat iadj(const IMat& m)
{
    return {m[4] * m[8] - m[5] * m[7], m[2] * m[7] - m[1] * m[8],
            m[1] * m[5] - m[2] * m[4], m[5] * m[6] - m[3] * m[8],
            m[0] * m[8] - m[2] * m[6], m[2] * m[3] - m[0] * m[5],
            m[3] * m[7] - m[4] * m[6], m[1] * m[6] - m[0] * m[7],
            m[0] * m[4] - m[1] * m[3]};
}

// Small generating set of an integer matrix group (greedy closure growth).
std::vector<IMat> igenerators(const std::vector<IMat>& sorted_elems)
{
    auto contains = [&](const std::vector<IMat>& set, const IMat& m) {
        return std::binary_search(set.begin(), set.end(), m);
    };
    auto close = [&](std::vector<IMat> gens) {
        static const IMat id = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        std::vector<IMat> have = {id};
        for (const IMat& g : gens)
            if (!contains(have, g)) {
                have.push_back(g);
                std::sort(have.begin(), have.end());
            }
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<IMat> add;
            for (const IMat& a : have)
                for (const IMat& g : gens) {
                    IMat p = imul(a, g);
                    if (!contains(have, p))
                        add.push_back(p);
                }
            for (const IMat& p : add)
                if (!contains(have, p)) {
                    have.push_back(p);
                    std::sort(have.begin(), have.end());
                    grew = true;
                }
        }
        return have;
    };

    std::vector<IMat> gens;
    std::vector<IMat> current = close({});
    while (current.size() < sorted_elems.size()) {
        const IMat* best = nullptr;
        std::size_t best_size = current.size();
        for (const IMat& e : sorted_elems) {
            if (contains(current, e))
                continue;
            std::vector<IMat> trial = gens;
            trial.push_back(e);
            std::size_t sz = close(trial).size();
            if (sz > best_size) {
                best = &e;
                best_size = sz;
                if (sz == sorted_elems.size())
                    break;
            }
        }
        gens.push_back(*best);
        current = close(gens);
    }
    return gens;
}

} // namespace

std::optional<IMat> bounded_conjugacy(const IntegralRep& rep1, const IntegralRep& rep2,
                                      int bound)
{
    if (rep1.matrices.size() != rep2.matrices.size())
        return std::nullopt;
    const auto& set2 = rep2.matrices;
    auto in2 = [&](const IMat& m) {
        return std::binary_search(set2.begin(), set2.end(), m);
    };
    std::vector<IMat> gens = igenerators(rep1.matrices);

    auto conjugates = [&](const IMat& x) {
        std::int64_t d = idet(x);
        if (d != 1 && d != -1)
            return false;
        IMat xinv = iadj(x);
        if (d == -1)
            for (auto& e : xinv)
                e = -e;
        for (const IMat& g : gens)
            if (!in2(imul(imul(x, g), xinv)))
                return false;
        return true;
    };

    static const IMat id = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    if (conjugates(id))
        return id;

    const int w = 2 * bound + 1;
    std::int64_t total = 1;
    for (int i = 0; i < 9; ++i)
        total *= w;
    IMat x{};
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t c = code;
        for (int i = 0; i < 9; ++i) {
            x[i] = static_cast<int>(c % w) - bound;
            c /= w;
        }
        if (conjugates(x))
            return x;
    }
    return std::nullopt;
}

namespace {

std::string invariant_tuple(const CrystGroup& g)
{
    std::ostringstream os;
    os << to_string(finite_iso_type(g.point_group.elements));
    os << "|inv=" << (g.point_group.contains_inversion() ? 1 : 0);
    os << "|det=" << g.lattice.basis_matrix().det().abs().str();
    PoleData poles = pole_data(g.point_group);
    os << "|poles=";
    for (const auto& o : poles.orbits)
        os << "(" << o.stabilizer_order << "," << o.representative.norm2().str() << ")";
    // Conjugation invariants of the element set.
    std::vector<std::string> fingerprint;
    for (const Mat3& m : g.point_group.elements) {
        std::ostringstream e;
        e << m.det().str() << ":" << m.trace().str() << ":" << m.order();
        fingerprint.push_back(e.str());
    }
    std::sort(fingerprint.begin(), fingerprint.end());
    os << "|elems=";
    for (const auto& f : fingerprint)
        os << f << ";";
    return os.str();
}

} // namespace

CatalogReport verify_catalog(int bound)
{
    const auto& entries = catalog();
    CatalogReport report;
    report.valid_pairs = static_cast<int>(entries.size());

    std::vector<std::string> tuples;
    for (const CrystGroup& g : entries)
        tuples.push_back(invariant_tuple(g));

    report.consistent = true;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (tuples[i] != tuples[j])
                continue;
            ++report.tuple_collisions;
            auto witness = bounded_conjugacy(integral_representation(entries[i]),
                                             integral_representation(entries[j]), bound);
            if (witness) {
                report.consistent = false;
                report.notes.push_back(entries[i].label + " ~ " + entries[j].label
                                       + ": unimodular conjugator found");
            } else {
                ++report.distinct_at_bound;
                report.notes.push_back(entries[i].label + " vs " + entries[j].label
                                       + ": distinct at bound "
                                       + std::to_string(bound));
            }
        }
    return report;
}

} // namespace crystk
