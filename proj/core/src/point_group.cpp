#include "crystk/point_group.hpp"

#include "crystk/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace crystk {

bool PointGroup::contains(const Mat3& m) const
{
    return std::binary_search(elements.begin(), elements.end(), m);
}

bool PointGroup::is_subgroup_of(const PointGroup& other) const
{
    for (const Mat3& m : elements)
        if (!other.contains(m))
            return false;
    return true;
}

bool PointGroup::contains_inversion() const { return contains(-Mat3::identity()); }

MulTable PointGroup::multiplication_table() const
{
    MulTable t;
    t.n = static_cast<int>(elements.size());
    t.table.resize(t.n * t.n);
    const Mat3 id = Mat3::identity();
    for (int i = 0; i < t.n; ++i) {
        if (elements[i] == id)
            t.identity = i;
        for (int j = 0; j < t.n; ++j) {
            Mat3 p = elements[i] * elements[j];
            auto it = std::lower_bound(elements.begin(), elements.end(), p);
            if (it == elements.end() || !(*it == p))
                throw std::logic_error("PointGroup: element set is not closed");
            t.table[i * t.n + j] = static_cast<int>(it - elements.begin());
        }
    }
    return t;
}

std::vector<Mat3> PointGroup::orientation_preserving() const
{
    std::vector<Mat3> out;
    for (const Mat3& m : elements)
        if (m.det() == ExactScalar(1))
            out.push_back(m);
    return out;
}

PointGroup generate_group(const std::vector<Mat3>& gens, std::string name)
{
    constexpr std::size_t kBound = 96; // 2 * 48, safety bound
    for (const Mat3& g : gens)
        if (!g.is_orthogonal())
            throw NotOrthogonal("generator " + g.str());

    std::set<Mat3> have;
    have.insert(Mat3::identity());
    for (const Mat3& g : gens)
        have.insert(g);
    std::vector<Mat3> frontier(have.begin(), have.end());
    while (!frontier.empty()) {
        std::vector<Mat3> next;
        for (const Mat3& a : frontier)
            for (const Mat3& g : gens) {
                for (const Mat3& p : {a * g, g * a})
                    if (have.insert(p).second) {
                        next.push_back(p);
                        if (have.size() > kBound)
                            throw ClosureBoundExceeded("closure exceeds 96 elements");
                    }
            }
        frontier = std::move(next);
    }
    PointGroup out;
    out.elements.assign(have.begin(), have.end());
    out.name = std::move(name);
    return out;
}

namespace {

const Mat3 kCyc = mat(0, 1, 0, 0, 0, 1, 1, 0, 0); // cyclic coordinate permutation

struct Registry {
    std::map<std::string, PointGroup> groups;
    std::vector<std::string> op_names;
    std::vector<std::string> standard_names;

    void add(const std::string& name, const std::vector<Mat3>& gens)
    {
        groups.emplace(name, generate_group(gens, name));
    }

    Registry()
    {
        const Mat3 rot6 = mat(2, 2, -1, -1, 2, 2, 2, -1, 2, 3);

        add("C1+", {});
        add("C2+", {mat(-1, 0, 0, 0, -1, 0, 0, 0, 1)});
        add("C3+", {kCyc});
        add("C4+", {mat(0, -1, 0, 1, 0, 0, 0, 0, 1)});
        add("C6+", {rot6});
        add("D2+", {mat(-1, 0, 0, 0, 1, 0, 0, 0, -1), mat(-1, 0, 0, 0, -1, 0, 0, 0, 1)});
        add("D3+", {kCyc, mat(0, -1, 0, -1, 0, 0, 0, 0, -1)});
        add("D4+", {mat(0, 1, 0, -1, 0, 0, 0, 0, 1), mat(1, 0, 0, 0, -1, 0, 0, 0, -1)});
        add("D6+", {rot6, mat(0, -1, 0, -1, 0, 0, 0, 0, -1)});
        add("A4+", {mat(1, 0, 0, 0, -1, 0, 0, 0, -1), kCyc});
        add("S4+", {mat(1, 0, 0, 0, 0, 1, 0, -1, 0), kCyc});

        add("C'_2", {mat(1, 0, 0, 0, 1, 0, 0, 0, -1)});
        add("C'_4", {mat(0, 1, 0, -1, 0, 0, 0, 0, -1)});
        add("C'_6", {mat(-2, -2, 1, 1, -2, -2, -2, 1, -2, 3)});
        add("D'_2", {mat(-1, 0, 0, 0, 1, 0, 0, 0, 1), mat(1, 0, 0, 0, -1, 0, 0, 0, 1)});
        add("D'_3", {kCyc, mat(0, 1, 0, 1, 0, 0, 0, 0, 1)});
        add("D'_4", {mat(0, -1, 0, -1, 0, 0, 0, 0, 1), mat(1, 0, 0, 0, -1, 0, 0, 0, -1)});
        add("D4''", {mat(0, -1, 0, -1, 0, 0, 0, 0, 1), mat(-1, 0, 0, 0, 1, 0, 0, 0, 1)});
        add("D'_6", {mat(1, -2, -2, -2, -2, 1, -2, 1, -2, 3), mat(0, 1, 0, 1, 0, 0, 0, 0, 1)});
        add("D6''", {mat(-1, 2, 2, 2, 2, -1, 2, -1, 2, 3), mat(0, 1, 0, 1, 0, 0, 0, 0, 1)});
        add("S'_4", {kCyc, mat(0, 0, -1, 0, 1, 0, -1, 0, 0)});

        add("Dhat'_4", {mat(0, 1, 0, 1, 0, 0, 0, 0, -1), mat(-1, 0, 0, 0, 1, 0, 0, 0, 1)});
        add("Dhat'_6", {mat(-1, 2, 2, 2, 2, -1, 2, -1, 2, 3), mat(0, -1, 0, -1, 0, 0, 0, 0, -1)});

        // Line-stabilizer groups named by their generators in the strict
        // stabilizer tables.
        const Mat3 A = mat(0, 1, 0, 1, 0, 0, 0, 0, 1);   // xy swap
        const Mat3 B = mat(1, 0, 0, 0, 1, 0, 0, 0, -1);  // z flip
        const Mat3 C = mat(-1, 0, 0, 0, -1, 0, 0, 0, 1); // 180 about z
        const Mat3 D = mat(2, -1, 2, -1, 2, 2, 2, 2, -1, 3);
        const Mat3 E = mat(1, -2, -2, -2, 1, -2, -2, -2, 1, 3);
        const Mat3 F = mat(0, 0, 1, 0, 1, 0, 1, 0, 0); // xz swap
        add("<A,B>", {A, B});
        add("<A,C>", {A, C});
        add("<A,D>", {A, D});
        add("<D,E>", {D, E});
        add("<E,F>", {E, F});

        op_names = {"C1+", "C2+", "C3+", "C4+", "C6+", "D2+", "D3+", "D4+", "D6+",
                    "A4+", "S4+"};
        standard_names = op_names;
        for (const auto& n : op_names)
            standard_names.push_back(n + "x(-1)");
        for (const auto& n :
             {"C'_2", "C'_4", "C'_6", "D'_2", "D'_3", "D'_4", "D4''", "D'_6", "D6''",
              "S'_4"})
            standard_names.push_back(n);

        // Axis variants: conjugation by the cyclic permutation moves the
        // distinguished z-axis to x (subscript 1) or y (subscript 2).
        const Mat3 c1 = kCyc * kCyc, c2 = kCyc;
        for (const std::string base : {"D4+", "D'_4", "D4''", "D'_2"}) {
            const PointGroup& g = groups.at(base);
            for (int axis = 1; axis <= 2; ++axis) {
                const Mat3& c = axis == 1 ? c1 : c2;
                std::vector<Mat3> conj;
                for (const Mat3& m : g.elements)
                    conj.push_back(c * m * c.inverse());
                add(base + "_" + std::to_string(axis), conj);
            }
        }
    }
};

const Registry& registry()
{
    static const Registry r;
    return r;
}

} // namespace

const PointGroup& standard_point_group(const std::string& name)
{
    const auto& reg = registry().groups;
    auto it = reg.find(name);
    if (it != reg.end())
        return it->second;

    // "...x(-1)" adjoins the inversion to a registered group; memoized.
    static std::map<std::string, PointGroup> extended;
    auto ext = extended.find(name);
    if (ext != extended.end())
        return ext->second;
    const std::string suffix = "x(-1)";
    if (name.size() > suffix.size()
        && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
        std::string base = name.substr(0, name.size() - suffix.size());
        auto bit = reg.find(base);
        if (bit != reg.end()) {
            std::vector<Mat3> gens = bit->second.elements;
            gens.push_back(-Mat3::identity());
            auto [pos, ok] = extended.emplace(name, generate_group(gens, name));
            (void)ok;
            return pos->second;
        }
    }
    throw UnknownName(name);
}

bool is_known_point_group_name(const std::string& name)
{
    try {
        standard_point_group(name);
        return true;
    } catch (const UnknownName&) {
        return false;
    }
}

const std::vector<std::string>& orientation_preserving_names()
{
    return registry().op_names;
}

const std::vector<std::string>& standard_point_group_names()
{
    return registry().standard_names;
}

bool preserves_lattice(const PointGroup& h, const Lattice& l)
{
    for (const Mat3& m : h.elements)
        for (const Vec3& b : l.basis())
            if (!l.contains(m * b))
                return false;
    return true;
}

namespace {

// Fewest leading zeros first, then lexicographically least, with the first
// nonzero coordinate positive.  Reproduces the catalog's printed choices.
Vec3 canonical_pole_rep(const std::vector<Vec3>& orbit)
{
    std::vector<Vec3> candidates;
    for (const Vec3& v : orbit) {
        Vec3 p = v.primitive();
        for (int i = 0; i < 3; ++i) {
            if (p[i].is_zero())
                continue;
            if (p[i].is_negative())
                p = -p;
            break;
        }
        candidates.push_back(p);
    }
    auto leading_zeros = [](const Vec3& v) {
        int n = 0;
        while (n < 3 && v[n].is_zero())
            ++n;
        return n;
    };
    Vec3 best = candidates.front();
    for (const Vec3& c : candidates) {
        int lc = leading_zeros(c), lb = leading_zeros(best);
        if (lc < lb || (lc == lb && c < best))
            best = c;
    }
    return best;
}

} // namespace

std::vector<long> PoleData::stabilizer_orders() const
{
    std::vector<long> out;
    for (const auto& o : orbits)
        out.push_back(o.stabilizer_order);
    return out;
}

PoleData pole_data(const PointGroup& h)
{
    const Mat3 id = Mat3::identity();
    std::vector<Mat3> rotations = h.orientation_preserving();

    // Pole vectors: +-(primitive axis) of every nontrivial rotation.
    std::set<Vec3> pole_vectors;
    for (const Mat3& r : rotations) {
        if (r == id)
            continue;
        auto ker = (r - id).kernel();
        if (!ker[0] || ker[1])
            throw std::logic_error("pole_data: rotation without a unique axis");
        Vec3 axis = ker[0]->primitive();
        pole_vectors.insert(axis);
        pole_vectors.insert(-axis);
    }

    auto rotation_stabilizer_order = [&](const Vec3& v) {
        long n = 0;
        for (const Mat3& r : rotations)
            n += (r * v == v) ? 1 : 0;
        return n;
    };

    // Orbits under the full group (for the published list).
    PoleData out;
    std::set<Vec3> seen;
    for (const Vec3& v : pole_vectors) {
        if (seen.count(v))
            continue;
        std::vector<Vec3> orbit;
        for (const Mat3& m : h.elements) {
            Vec3 w = m * v;
            if (seen.insert(w).second)
                orbit.push_back(w);
        }
        PoleOrbit o;
        o.representative = canonical_pole_rep(orbit);
        o.orbit_size = static_cast<long>(orbit.size());
        o.stabilizer_order = rotation_stabilizer_order(o.representative);
        out.orbits.push_back(o);
    }
    std::sort(out.orbits.begin(), out.orbits.end(), [](const PoleOrbit& a, const PoleOrbit& b) {
        if (a.stabilizer_order != b.stabilizer_order)
            return a.stabilizer_order < b.stabilizer_order;
        return a.representative < b.representative;
    });
    if (out.orbits.size() > 3)
        throw std::logic_error("pole_data: more than three pole orbits");

    // Counting identity 2 - 2/|H+| = sum (1 - 1/|H+_v|) over orbit
    // representatives of pole vectors under the rotation subgroup.
    if (rotations.size() <= 1) {
        out.counting_identity_holds = pole_vectors.empty();
        if (pole_vectors.empty())
            out.counting_identity_holds = true;
        return out;
    }
    ExactScalar rhs(0);
    std::set<Vec3> seen_plus;
    for (const Vec3& v : pole_vectors) {
        if (seen_plus.count(v))
            continue;
        for (const Mat3& r : rotations)
            seen_plus.insert(r * v);
        rhs += ExactScalar(1) - ExactScalar(1, rotation_stabilizer_order(v));
    }
    ExactScalar lhs = ExactScalar(2) - ExactScalar(2, static_cast<long long>(rotations.size()));
    out.counting_identity_holds = lhs == rhs;
    return out;
}

namespace {

const std::vector<std::pair<FinGroupType, std::string>>& type_names()
{
    static const std::vector<std::pair<FinGroupType, std::string>> names = {
        {FinGroupType::One, "1"},
        {FinGroupType::Z2, "Z/2"},
        {FinGroupType::Z3, "Z/3"},
        {FinGroupType::Z4, "Z/4"},
        {FinGroupType::Z6, "Z/6"},
        {FinGroupType::D2, "D2"},
        {FinGroupType::D3, "D3"},
        {FinGroupType::D4, "D4"},
        {FinGroupType::D6, "D6"},
        {FinGroupType::Z4xZ2, "Z/4 x Z/2"},
        {FinGroupType::Z6xZ2, "Z/6 x Z/2"},
        {FinGroupType::D2xZ2, "D2 x Z/2"},
        {FinGroupType::D4xZ2, "D4 x Z/2"},
        {FinGroupType::D6xZ2, "D6 x Z/2"},
        {FinGroupType::A4, "A4"},
        {FinGroupType::S4, "S4"},
        {FinGroupType::A4xZ2, "A4 x Z/2"},
        {FinGroupType::S4xZ2, "S4 x Z/2"},
    };
    return names;
}

} // namespace

std::string to_string(FinGroupType t)
{
    for (const auto& [type, name] : type_names())
        if (type == t)
            return name;
    throw std::logic_error("to_string(FinGroupType)");
}

FinGroupType fin_group_type_from_string(const std::string& s)
{
    for (const auto& [type, name] : type_names())
        if (name == s)
            return type;
    throw UnknownType(s);
}

const MulTable& model_table(FinGroupType t)
{
    static const std::map<FinGroupType, MulTable> models = [] {
        std::map<FinGroupType, MulTable> m;
        m[FinGroupType::One] = cyclic_table(1);
        m[FinGroupType::Z2] = cyclic_table(2);
        m[FinGroupType::Z3] = cyclic_table(3);
        m[FinGroupType::Z4] = cyclic_table(4);
        m[FinGroupType::Z6] = cyclic_table(6);
        m[FinGroupType::D2] = dihedral_table(2);
        m[FinGroupType::D3] = dihedral_table(3);
        m[FinGroupType::D4] = dihedral_table(4);
        m[FinGroupType::D6] = dihedral_table(6);
        m[FinGroupType::Z4xZ2] = product_table(cyclic_table(4), cyclic_table(2));
        m[FinGroupType::Z6xZ2] = product_table(cyclic_table(6), cyclic_table(2));
        m[FinGroupType::D2xZ2] = product_table(dihedral_table(2), cyclic_table(2));
        m[FinGroupType::D4xZ2] = product_table(dihedral_table(4), cyclic_table(2));
        m[FinGroupType::D6xZ2] = product_table(dihedral_table(6), cyclic_table(2));
        m[FinGroupType::A4] = alternating4_table();
        m[FinGroupType::S4] = symmetric4_table();
        m[FinGroupType::A4xZ2] = product_table(alternating4_table(), cyclic_table(2));
        m[FinGroupType::S4xZ2] = product_table(symmetric4_table(), cyclic_table(2));
        return m;
    }();
    return models.at(t);
}

long type_order(FinGroupType t) { return model_table(t).n; }

FinGroupType finite_iso_type(const MulTable& table)
{
    if (table.n > 48)
        throw PreconditionViolated("finite_iso_type: order exceeds 48");

    // Fingerprint: (order, abelian, element-order multiset, center size).
    // Exhaustive pre-testing (see the point-group tests) shows this is
    // already injective on the catalog's list; the isomorphism search is the
    // verified fallback.
    const auto orders = table.order_multiset();
    const bool abelian = table.is_abelian();
    std::vector<FinGroupType> candidates;
    for (const auto& [type, name] : type_names()) {
        (void)name;
        const MulTable& model = model_table(type);
        if (model.n != table.n || model.is_abelian() != abelian)
            continue;
        if (model.order_multiset() != orders)
            continue;
        if (model.center_size() != table.center_size())
            continue;
        candidates.push_back(type);
    }
    if (candidates.size() == 1)
        return candidates.front();
    for (FinGroupType t : candidates)
        if (isomorphic(table, model_table(t)))
            return t;
    throw UnrecognizedType("order " + std::to_string(table.n)
                           + " group outside the stabilizer list");
}

FinGroupType finite_iso_type(const std::vector<Mat3>& elements)
{
    PointGroup g;
    g.elements = elements;
    std::sort(g.elements.begin(), g.elements.end());
    return finite_iso_type(g.multiplication_table());
}

bool is_negligible_finite(FinGroupType t)
{
    switch (t) {
    case FinGroupType::One:
    case FinGroupType::Z2:
    case FinGroupType::Z3:
    case FinGroupType::Z4:
    case FinGroupType::D2:
    case FinGroupType::D3:
    case FinGroupType::D4:
    case FinGroupType::A4:
    case FinGroupType::S4:
        return true;
    default:
        return false;
    }
}

bool is_negligible_finite(const std::vector<Mat3>& elements)
{
    return is_negligible_finite(finite_iso_type(elements));
}

bool has_square_free_order(std::size_t order)
{
    for (std::size_t p = 2; p * p <= order; ++p)
        if (order % (p * p) == 0)
            return false;
    return true;
}

} // namespace crystk
