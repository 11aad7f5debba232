#include "crystk/domain.hpp"

#include "crystk/errors.hpp"
#include "crystk/intmatrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace crystk {

namespace {

const ExactScalar kHalf(1, 2), kThird(1, 3);

AffineIsometry lin(const Mat3& m) { return AffineIsometry::linear_map(m); }
AffineIsometry aff(const Vec3& t, const Mat3& m) { return AffineIsometry(t, m); }

FundamentalDomain make_domain_1()
{
    FundamentalDomain d;
    d.index = 1;
    d.sides = {
        {vec(0, -1, 1), ExactScalar(0)},  // y = z
        {vec(0, 0, -1), ExactScalar(0)},  // z = 0
        {vec(-1, 1, 0), ExactScalar(0)},  // x = y
        {vec(1, 0, 0), kHalf},            // x = 1/2
    };
    d.vertices = {vec(0, 0, 0), Vec3{kHalf, ExactScalar(0), ExactScalar(0)},
                  Vec3{kHalf, kHalf, ExactScalar(0)}, Vec3{kHalf, kHalf, kHalf}};
    d.pairings = {
        lin(mat(1, 0, 0, 0, 0, 1, 0, 1, 0)),
        lin(mat(1, 0, 0, 0, 1, 0, 0, 0, -1)),
        lin(mat(0, 1, 0, 1, 0, 0, 0, 0, 1)),
        aff(vec(1, 0, 0), mat(-1, 0, 0, 0, 1, 0, 0, 0, 1)),
    };
    return d;
}

FundamentalDomain make_domain_2()
{
    FundamentalDomain d;
    d.index = 2;
    d.sides = {
        {vec(0, -1, 1), ExactScalar(0)},
        {vec(0, 0, -1), ExactScalar(0)},
        {vec(-1, 1, 0), ExactScalar(0)},
        {vec(1, 0, 0), kHalf},
        {vec(1, 1, 1), frac(3, 4)},       // x + y + z = 3/4
    };
    d.vertices = {
        vec(0, 0, 0),
        Vec3{kHalf, ExactScalar(0), ExactScalar(0)},
        Vec3{frac(1, 4), frac(1, 4), frac(1, 4)},
        Vec3{frac(3, 8), frac(3, 8), ExactScalar(0)},
        Vec3{kHalf, frac(1, 4), ExactScalar(0)},
        Vec3{kHalf, frac(1, 8), frac(1, 8)},
    };
    d.pairings = {
        lin(mat(1, 0, 0, 0, 0, 1, 0, 1, 0)),
        lin(mat(1, 0, 0, 0, 1, 0, 0, 0, -1)),
        lin(mat(0, 1, 0, 1, 0, 0, 0, 0, 1)),
        aff(vec(1, 0, 0), mat(-1, 0, 0, 0, 1, 0, 0, 0, 1)),
        aff(Vec3{kHalf, kHalf, kHalf}, mat(0, 0, -1, 0, -1, 0, -1, 0, 0)),
    };
    // The rotation-axis endpoints are already polytope vertices.
    return d;
}

FundamentalDomain make_domain_3()
{
    FundamentalDomain d;
    d.index = 3;
    d.sides = {
        {vec(0, -1, 1), ExactScalar(0)},
        {vec(0, 0, -1), ExactScalar(0)},
        {vec(-1, 1, 0), ExactScalar(0)},
        {vec(1, 1, 0), kHalf},            // x + y = 1/2
    };
    d.vertices = {
        vec(0, 0, 0),
        Vec3{kHalf, ExactScalar(0), ExactScalar(0)},
        Vec3{frac(1, 4), frac(1, 4), ExactScalar(0)},
        Vec3{frac(1, 4), frac(1, 4), frac(1, 4)},
    };
    d.pairings = {
        lin(mat(1, 0, 0, 0, 0, 1, 0, 1, 0)),
        lin(mat(1, 0, 0, 0, 1, 0, 0, 0, -1)),
        lin(mat(0, 1, 0, 1, 0, 0, 0, 0, 1)),
        aff(Vec3{kHalf, kHalf, ExactScalar(0)}, mat(0, -1, 0, -1, 0, 0, 0, 0, 1)),
    };
    return d;
}

FundamentalDomain make_domain_4()
{
    FundamentalDomain d;
    d.index = 4;
    d.sides = {
        {vec(0, -1, 0), ExactScalar(0)},  // y = 0
        {vec(1, 0, 1), kHalf},            // x + z = 1/2
        {vec(0, 1, 0), kHalf},            // y = 1/2
        {vec(-1, 0, 0), ExactScalar(0)},  // x = 0
        {vec(0, 0, -1), ExactScalar(0)},  // z = 0
    };
    d.vertices = {
        vec(0, 0, 0),
        Vec3{kHalf, ExactScalar(0), ExactScalar(0)},
        Vec3{ExactScalar(0), ExactScalar(0), kHalf},
        Vec3{ExactScalar(0), kHalf, ExactScalar(0)},
        Vec3{kHalf, kHalf, ExactScalar(0)},
        Vec3{ExactScalar(0), kHalf, kHalf},
    };
    d.pairings = {
        lin(mat(1, 0, 0, 0, -1, 0, 0, 0, 1)),
        aff(Vec3{kHalf, ExactScalar(0), kHalf}, mat(-1, 0, 0, 0, 1, 0, 0, 0, -1)),
        aff(vec(0, 1, 0), mat(1, 0, 0, 0, -1, 0, 0, 0, 1)),
        lin(mat(-1, 0, 0, 0, 1, 0, 0, 0, 1)),
        lin(mat(1, 0, 0, 0, 1, 0, 0, 0, -1)),
    };
    d.subdivision_vertices = {Vec3{frac(1, 4), ExactScalar(0), frac(1, 4)},
                              Vec3{frac(1, 4), kHalf, frac(1, 4)}};
    return d;
}

FundamentalDomain make_domain_5()
{
    FundamentalDomain d;
    d.index = 5;
    d.sides = {
        {vec(1, 1, 1), frac(3, 2)},        // x + y + z = 3/2
        {vec(0, -1, 1), ExactScalar(1)},   // z = y + 1
        {vec(-1, -1, -1), ExactScalar(0)}, // x + y + z = 0
        {vec(-2, 1, 1), ExactScalar(0)},   // -2x + y + z = 0
        {vec(1, 0, -1), ExactScalar(0)},   // x = z
    };
    d.vertices = {
        Vec3{kHalf, kHalf, kHalf},
        Vec3{kHalf, ExactScalar(0), ExactScalar(1)},
        Vec3{ExactScalar(0), -kHalf, kHalf},
        Vec3{kThird, frac(-2, 3), kThird},
        Vec3{frac(5, 6), frac(-1, 6), frac(5, 6)},
        vec(0, 0, 0),
    };
    d.pairings = {
        aff(vec(1, 1, 1), mat(1, -2, -2, -2, 1, -2, -2, -2, 1, 3)),
        aff(vec(0, -1, 1), mat(1, 0, 0, 0, 0, 1, 0, 1, 0)),
        lin(mat(1, -2, -2, -2, 1, -2, -2, -2, 1, 3)),
        lin(mat(-1, 2, 2, 2, 2, -1, 2, -1, 2, 3)),
        lin(mat(0, 0, 1, 0, 1, 0, 1, 0, 0)),
    };
    return d;
}

FundamentalDomain make_domain_6()
{
    FundamentalDomain d;
    d.index = 6;
    d.sides = {
        {vec(-1, 0, 1), ExactScalar(0)},   // x = z
        {vec(5, 2, 5), ExactScalar(3)},    // 5x + 2y + 5z = 3
        {vec(1, -1, 0), ExactScalar(1)},   // x - y = 1
        {vec(0, 1, -1), ExactScalar(0)},   // y = z
        {vec(-1, -1, -1), ExactScalar(0)}, // x + y + z = 0
    };
    d.vertices = {
        vec(0, 0, 0),
        Vec3{kThird, frac(-2, 3), kThird},
        Vec3{frac(5, 12), frac(-7, 12), frac(5, 12)},
        Vec3{frac(2, 3), frac(-1, 3), frac(-1, 3)},
        Vec3{frac(5, 6), frac(-1, 6), frac(-1, 6)},
        Vec3{frac(1, 4), frac(1, 4), frac(1, 4)},
    };
    d.pairings = {
        lin(mat(0, 0, 1, 0, 1, 0, 1, 0, 0)),
        aff(Vec3{frac(2, 3), frac(-1, 3), frac(2, 3)}, mat(0, 0, -1, 0, -1, 0, -1, 0, 0)),
        aff(vec(1, -1, 0), mat(0, 1, 0, 1, 0, 0, 0, 0, 1)),
        lin(mat(1, 0, 0, 0, 0, 1, 0, 1, 0)),
        lin(mat(0, -1, 0, -1, 0, 0, 0, 0, -1)),
    };
    d.subdivision_vertices = {Vec3{kThird, frac(-1, 6), kThird},
                              Vec3{kHalf, -kHalf, ExactScalar(0)}};
    return d;
}

FundamentalDomain make_domain_7()
{
    FundamentalDomain d;
    d.index = 7;
    d.sides = {
        {vec(1, -2, 1), ExactScalar(1)},   // x - 2y + z = 1
        {vec(1, 1, 1), frac(3, 2)},        // x + y + z = 3/2
        {vec(1, 0, -1), ExactScalar(0)},   // x = z
        {vec(-2, 1, 1), ExactScalar(0)},   // -2x + y + z = 0
        {vec(-1, -1, -1), frac(3, 2)},     // x + y + z = -3/2
    };
    d.vertices = {
        Vec3{-kHalf, frac(-5, 6), frac(-1, 6)},
        Vec3{-kThird, frac(-5, 6), -kThird},
        Vec3{-kHalf, -kHalf, -kHalf},
        Vec3{kHalf, frac(1, 6), frac(5, 6)},
        Vec3{frac(2, 3), frac(1, 6), frac(2, 3)},
        Vec3{kHalf, kHalf, kHalf},
    };
    d.pairings = {
        aff(Vec3{kThird, frac(-2, 3), kThird}, mat(0, 0, -1, 0, -1, 0, -1, 0, 0)),
        AffineIsometry::translate(vec(1, 1, 1)),
        lin(mat(0, 0, 1, 0, 1, 0, 1, 0, 0)),
        lin(mat(-1, 0, 0, 0, 0, -1, 0, -1, 0)),
        AffineIsometry::translate(vec(-1, -1, -1)),
    };
    d.subdivision_vertices = {vec(0, 0, 0), Vec3{ExactScalar(0), -kThird, kThird},
                              Vec3{frac(1, 6), -kThird, frac(1, 6)}};
    return d;
}

} // namespace

bool FundamentalDomain::side_contains(int side, const Vec3& p) const
{
    return sides[side].normal.dot(p) == sides[side].offset && polyhedron_contains(p);
}

bool FundamentalDomain::polyhedron_contains(const Vec3& p) const
{
    for (const Side& s : sides)
        if (s.normal.dot(p) > s.offset)
            return false;
    return true;
}

std::vector<Vec3> FundamentalDomain::side_polygon(int side) const
{
    std::vector<Vec3> out;
    for (const Vec3& v : vertices)
        if (sides[side].normal.dot(v) == sides[side].offset)
            out.push_back(v);
    return out;
}

int FundamentalDomain::partner(int side) const
{
    AffineIsometry inv = pairings[side].inverse();
    for (std::size_t j = 0; j < pairings.size(); ++j)
        if (pairings[j] == inv)
            return static_cast<int>(j);
    throw NotSubproper("side " + std::to_string(side) + " has no paired side");
}

bool FundamentalDomain::pairing_is_reflection(int side) const
{
    const AffineIsometry& phi = pairings[side];
    for (const Vec3& v : side_polygon(side))
        if (phi(v) != v)
            return false;
    return true;
}

std::vector<Vec3> FundamentalDomain::cellulation_vertices() const
{
    std::vector<Vec3> out = vertices;
    for (const Vec3& v : subdivision_vertices)
        if (std::find(out.begin(), out.end(), v) == out.end())
            out.push_back(v);
    return out;
}

namespace {

// Maximal segments between consecutive collinear cellulation vertices.
std::vector<std::pair<Vec3, Vec3>> pieces_on_line(const std::vector<Vec3>& points)
{
    if (points.size() < 2)
        return {};
    Vec3 dir = points.back() - points.front();
    if (dir.is_zero())
        return {};
    std::vector<std::pair<ExactScalar, Vec3>> sorted;
    for (const Vec3& p : points)
        sorted.push_back({dir.dot(p - points.front()), p});
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Vec3, Vec3>> out;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        out.push_back({sorted[i].second, sorted[i + 1].second});
    return out;
}

bool collinear(const Vec3& a, const Vec3& b, const Vec3& c)
{
    Vec3 u = b - a, v = c - a;
    return (u.y * v.z - u.z * v.y).is_zero() && (u.z * v.x - u.x * v.z).is_zero()
        && (u.x * v.y - u.y * v.x).is_zero();
}

// Fixed line of a self-paired rotation side, clipped to the side polygon.
// `reversing` reports the midpoint-vertex subcase (pairing reverses the
// line instead of fixing it pointwise).
std::optional<std::pair<Vec3, Vec3>> side_axis(const FundamentalDomain& d, int side,
                                               bool& reversing)
{
    const AffineIsometry& phi = d.pairings[side];
    if (d.partner(side) != side || d.pairing_is_reflection(side))
        return std::nullopt;

    // Midpoints p -> (p + phi p)/2 land on the invariant line.
    std::vector<Vec3> poly = d.side_polygon(side);
    Vec3 m0 = (poly[0] + phi(poly[0])) * kHalf;
    Vec3 m1;
    bool found = false;
    for (std::size_t i = 1; i < poly.size() && !found; ++i) {
        m1 = (poly[i] + phi(poly[i])) * kHalf;
        found = m1 != m0;
    }
    if (!found)
        throw NotSubproper("degenerate self-pairing axis");
    reversing = phi(m0) != m0;

    // Clip the invariant line to the side boundary.
    Vec3 dir = m1 - m0;
    std::vector<Vec3> hits;
    for (std::size_t j = 0; j < d.sides.size(); ++j) {
        if (static_cast<int>(j) == side)
            continue;
        ExactScalar denom = d.sides[j].normal.dot(dir);
        if (denom.is_zero())
            continue;
        ExactScalar t = (d.sides[j].offset - d.sides[j].normal.dot(m0)) / denom;
        Vec3 p = m0 + dir * t;
        if (d.polyhedron_contains(p)
            && std::find(hits.begin(), hits.end(), p) == hits.end())
            hits.push_back(p);
    }
    if (hits.size() != 2)
        throw NotSubproper("self-pairing axis does not cross its side");
    return std::make_pair(hits[0], hits[1]);
}

} // namespace

std::vector<std::pair<Vec3, Vec3>> FundamentalDomain::cellulation_edges() const
{
    std::vector<Vec3> verts = cellulation_vertices();
    std::vector<std::pair<Vec3, Vec3>> out;

    // Ridge pieces: cellulation vertices shared by two side planes,
    // consecutive along the intersection line.
    for (std::size_t i = 0; i < sides.size(); ++i)
        for (std::size_t j = i + 1; j < sides.size(); ++j) {
            std::vector<Vec3> on_line;
            for (const Vec3& v : verts)
                if (sides[i].normal.dot(v) == sides[i].offset
                    && sides[j].normal.dot(v) == sides[j].offset)
                    on_line.push_back(v);
            if (on_line.size() < 2)
                continue;
            bool line_ok = true;
            for (std::size_t k = 2; k < on_line.size(); ++k)
                line_ok = line_ok && collinear(on_line[0], on_line[1], on_line[k]);
            if (!line_ok)
                continue;
            for (auto& piece : pieces_on_line(on_line)) {
                Vec3 mid = (piece.first + piece.second) * kHalf;
                if (polyhedron_contains(mid)
                    && std::find(out.begin(), out.end(), piece) == out.end())
                    out.push_back(piece);
            }
        }

    // Subdivision-axis pieces inside self-paired sides.
    for (std::size_t s = 0; s < sides.size(); ++s) {
        bool reversing = false;
        auto axis = side_axis(*this, static_cast<int>(s), reversing);
        if (!axis)
            continue;
        std::vector<Vec3> on_axis;
        for (const Vec3& v : verts)
            if (collinear(axis->first, axis->second, v)
                && side_contains(static_cast<int>(s), v))
                on_axis.push_back(v);
        for (auto& piece : pieces_on_line(on_axis))
            if (std::find(out.begin(), out.end(), piece) == out.end())
                out.push_back(piece);
    }
    return out;
}

const FundamentalDomain& fundamental_domain(int i)
{
    static const std::vector<FundamentalDomain> domains = {
        make_domain_1(), make_domain_2(), make_domain_3(), make_domain_4(),
        make_domain_5(), make_domain_6(), make_domain_7()};
    if (i < 1 || i > 7)
        throw NotInCatalog("domain " + std::to_string(i));
    return domains[i - 1];
}

std::string ExactAngle::str() const
{
    if (pi_rational)
        return pi_multiple.str() + "*pi";
    return "arccos(" + std::string(cos_sign < 0 ? "-" : "") + "sqrt(" + cos2.str()
        + "))";
}

ExactAngle dihedral_cosine(const Vec3& n1, const Vec3& n2)
{
    if (n1.is_zero() || n2.is_zero())
        throw std::domain_error("dihedral_cosine: zero normal");
    // theta = pi - arccos(n1.n2/(|n1||n2|)), so cos(theta) = -n1.n2/(|n1||n2|).
    ExactScalar dot = n1.dot(n2);
    ExactAngle a;
    a.cos_sign = -dot.sign();
    a.cos2 = dot * dot / (n1.norm2() * n2.norm2());

    struct Entry {
        ExactScalar square;
        ExactScalar positive_multiple; // theta/pi when cos(theta) > 0
    };
    static const std::vector<Entry> dictionary = {
        {ExactScalar(0), frac(1, 2)}, {frac(1, 4), frac(1, 3)},
        {frac(1, 2), frac(1, 4)},     {frac(3, 4), frac(1, 6)},
        {ExactScalar(1), ExactScalar(0)},
    };
    for (const Entry& e : dictionary)
        if (a.cos2 == e.square) {
            a.pi_rational = true;
            a.pi_multiple = a.cos_sign >= 0 ? e.positive_multiple
                                            : ExactScalar(1) - e.positive_multiple;
            if (a.cos2.is_zero())
                a.pi_multiple = frac(1, 2);
            return a;
        }
    return a;
}

namespace {

std::vector<int> sides_containing(const FundamentalDomain& d, const Vec3& p)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < d.sides.size(); ++i)
        if (d.sides[i].normal.dot(p) == d.sides[i].offset)
            out.push_back(static_cast<int>(i));
    return out;
}

} // namespace

SubproperReport verify_subproper(const FundamentalDomain& d)
{
    SubproperReport report;

    // phi_{S'} = phi_S^{-1} and phi_S maps the partner side onto the side.
    report.pairing_valid = true;
    for (std::size_t i = 0; i < d.sides.size(); ++i) {
        int j = d.partner(static_cast<int>(i));
        std::vector<Vec3> image;
        for (const Vec3& v : d.side_polygon(j))
            image.push_back(d.pairings[i](v));
        std::vector<Vec3> target = d.side_polygon(static_cast<int>(i));
        std::sort(image.begin(), image.end());
        std::sort(target.begin(), target.end());
        if (image != target)
            report.pairing_valid = false;
    }

    // Which bad-side subcase fires (the reversing one needs a midpoint
    // vertex; it does not occur for these seven domains).
    for (std::size_t s = 0; s < d.sides.size(); ++s) {
        bool reversing = false;
        (void)side_axis(d, static_cast<int>(s), reversing);
        report.reversing_subdivision = report.reversing_subdivision || reversing;
    }

    std::set<Vec3> visited;
    for (const auto& edge : d.cellulation_edges()) {
        Vec3 start = (edge.first + edge.second) * kHalf;
        if (visited.count(start))
            continue;

        RidgeCycle cycle;
        std::vector<Vec3> queue = {start};
        visited.insert(start);
        bool has_reflection_end = false;
        while (!queue.empty()) {
            Vec3 p = queue.back();
            queue.pop_back();
            cycle.sample_points.push_back(p);
            if (cycle.sample_points.size() > 24)
                throw NotSubproper("ridge cycle exceeds 24 points");
            for (int s : sides_containing(d, p)) {
                Vec3 q = d.pairings[s].inverse()(p);
                if (q == p) {
                    if (d.pairing_is_reflection(s))
                        has_reflection_end = true;
                    continue;
                }
                if (!visited.count(q)) {
                    visited.insert(q);
                    queue.push_back(q);
                }
            }
        }
        cycle.dihedral = has_reflection_end;

        // Sum the dihedral angles: pi-rational parts add up; the remaining
        // arccos values must cancel in opposite-sign pairs (each pair is pi).
        ExactScalar total(0);
        std::vector<ExactAngle> named;
        for (const Vec3& p : cycle.sample_points) {
            std::vector<int> on = sides_containing(d, p);
            if (on.size() == 1) {
                total += ExactScalar(1); // flat angle across a subdivided side
                continue;
            }
            if (on.size() != 2)
                throw NotSubproper("ridge sample lies on " + std::to_string(on.size())
                                   + " sides");
            ExactAngle a = dihedral_cosine(d.sides[on[0]].normal, d.sides[on[1]].normal);
            if (a.pi_rational)
                total += a.pi_multiple;
            else
                named.push_back(a);
        }
        for (std::size_t i = 0; i < named.size();) {
            bool cancelled = false;
            for (std::size_t j = i + 1; j < named.size(); ++j)
                if (named[i].cos2 == named[j].cos2
                    && named[i].cos_sign == -named[j].cos_sign) {
                    total += ExactScalar(1);
                    named.erase(named.begin() + j);
                    named.erase(named.begin() + i);
                    cancelled = true;
                    break;
                }
            if (!cancelled)
                ++i;
        }
        cycle.sum_known = named.empty();
        if (cycle.sum_known && !total.is_zero()) {
            cycle.angle_sum_pi = total;
            ExactScalar quotient =
                cycle.dihedral ? total.reciprocal() : ExactScalar(2) / total;
            cycle.ok = quotient.is_integer() && quotient.is_positive();
        }
        report.cycles.push_back(cycle);
    }

    report.ok = report.pairing_valid;
    for (const RidgeCycle& c : report.cycles)
        report.ok = report.ok && c.ok;
    if (!report.ok)
        throw NotSubproper("domain " + std::to_string(d.index));
    return report;
}

bool pairing_generates_group(const FundamentalDomain& d, const CrystGroup& g,
                             int word_length)
{
    // Containment: every pairing lies in <L, H>.
    for (const AffineIsometry& phi : d.pairings)
        if (!g.contains(phi))
            return false;

    // Point-group surjectivity: the linear parts generate H.
    std::vector<Mat3> linear_parts;
    for (const AffineIsometry& phi : d.pairings)
        linear_parts.push_back(phi.linear);
    if (generate_group(linear_parts).size() != g.point_group.size())
        return false;

    // Lattice surjectivity: pure translations among bounded-length words
    // must span L with index 1.
    std::vector<AffineIsometry> gens = d.pairings;
    for (const AffineIsometry& phi : d.pairings)
        gens.push_back(phi.inverse());
    std::set<AffineIsometry> words = {AffineIsometry()};
    std::vector<Vec3> translations;
    std::vector<AffineIsometry> frontier(words.begin(), words.end());
    for (int len = 0; len < word_length; ++len) {
        std::vector<AffineIsometry> next;
        for (const AffineIsometry& w : frontier)
            for (const AffineIsometry& s : gens) {
                AffineIsometry ws = w * s;
                if (!words.insert(ws).second)
                    continue;
                next.push_back(ws);
                if (ws.linear == Mat3::identity() && !ws.translation.is_zero())
                    translations.push_back(ws.translation);
            }
        frontier = std::move(next);
        if (translations.size() < 3)
            continue;
        IntMatrix coords(3, static_cast<int>(translations.size()));
        for (std::size_t c = 0; c < translations.size(); ++c) {
            Vec3 t = g.lattice.coordinates(translations[c]);
            if (!t.is_integral())
                return false;
            for (int r = 0; r < 3; ++r)
                coords(r, static_cast<int>(c)) = t[r].numerator();
        }
        auto s = smith_normal_form(coords);
        if (s.rank == 3 && s.invariant_factors == std::vector<BigInt>{1, 1, 1})
            return true;
    }
    return false;
}

PointStabilizer point_stabilizer(const CrystGroup& g, const Vec3& v)
{
    PointStabilizer out;
    for (const Mat3& h : g.point_group.elements) {
        Vec3 diff = v - h * v;
        if (g.lattice.contains(diff)) {
            out.image.push_back(h);
            out.lifts.emplace_back(diff, h);
        }
    }
    return out;
}

std::vector<Mat3> cell_pointwise_stabilizer(const CrystGroup& g,
                                            const std::vector<Vec3>& points)
{
    std::vector<Mat3> out;
    for (const Mat3& h : g.point_group.elements) {
        Vec3 l = points.front() - h * points.front();
        if (!g.lattice.contains(l))
            continue;
        bool fixes_all = true;
        for (std::size_t i = 1; i < points.size() && fixes_all; ++i)
            fixes_all = (points[i] - h * points[i]) == l;
        if (fixes_all)
            out.push_back(h);
    }
    return out;
}

bool negligibility_shortcut(const CrystGroup& g, const Vec3& v)
{
    if (!g.point_group.is_subgroup_of(standard_point_group("S4+x(-1)")))
        throw PreconditionViolated(g.label + ": point group outside S4+x(-1)");
    return !g.lattice.contains(v + v);
}

Vec3 CellOrbit::representative_point() const
{
    Vec3 sum = vec(0, 0, 0);
    for (const Vec3& p : points)
        sum = sum + p;
    return sum * ExactScalar(1, static_cast<long long>(points.size()));
}

std::vector<CellOrbit> CellComplex::non_negligible() const
{
    std::vector<CellOrbit> out;
    for (const CellOrbit& c : cells)
        if (!is_negligible_finite(c.type))
            out.push_back(c);
    return out;
}

int CellComplex::count(int dim) const
{
    int n = 0;
    for (const CellOrbit& c : cells)
        n += c.dim == dim ? 1 : 0;
    return n;
}

bool vertex_equivalent(const CrystGroup& g, const Vec3& a, const Vec3& b)
{
    for (const Mat3& h : g.point_group.elements)
        if (g.lattice.contains(b - h * a))
            return true;
    return false;
}

namespace {

bool edge_equivalent(const CrystGroup& g, const Vec3& a1, const Vec3& a2, const Vec3& b1,
                     const Vec3& b2)
{
    for (const Mat3& h : g.point_group.elements) {
        Vec3 l1 = b1 - h * a1;
        if (g.lattice.contains(l1) && (b2 - h * a2) == l1)
            return true;
        Vec3 l2 = b2 - h * a1;
        if (g.lattice.contains(l2) && (b1 - h * a2) == l2)
            return true;
    }
    return false;
}

} // namespace

bool cells_equivalent(const CrystGroup& g, const CellOrbit& a, const CellOrbit& b)
{
    if (a.dim != b.dim)
        return false;
    if (a.dim == 0)
        return vertex_equivalent(g, a.points[0], b.points[0]);
    if (a.dim == 1)
        return edge_equivalent(g, a.points[0], a.points[1], b.points[0], b.points[1]);
    throw DimensionMismatch("orbit test only supports dimensions 0 and 1");
}

namespace {

CellOrbit make_vertex_orbit(const CrystGroup& g, const Vec3& v)
{
    CellOrbit c;
    c.dim = 0;
    c.points = {v};
    c.stabilizer_image = point_stabilizer(g, v).image;
    c.type = finite_iso_type(c.stabilizer_image);
    return c;
}

CellOrbit make_edge_orbit(const CrystGroup& g, const Vec3& a, const Vec3& b)
{
    CellOrbit c;
    c.dim = 1;
    c.points = {std::min(a, b), std::max(a, b)};
    c.stabilizer_image = cell_pointwise_stabilizer(g, c.points);
    c.type = finite_iso_type(c.stabilizer_image);
    return c;
}

CellComplex build_gamma_complex(int index)
{
    const FundamentalDomain& d = fundamental_domain(index);
    const CrystGroup& g = maximal_group(index);

    CellComplex out;

    std::vector<Vec3> verts = d.cellulation_vertices();
    std::sort(verts.begin(), verts.end());
    std::vector<bool> used(verts.size(), false);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (used[i])
            continue;
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!used[j] && vertex_equivalent(g, verts[i], verts[j]))
                used[j] = true;
        out.cells.push_back(make_vertex_orbit(g, verts[i]));
    }

    std::vector<CellOrbit> edge_orbits;
    for (const auto& e : d.cellulation_edges()) {
        CellOrbit c = make_edge_orbit(g, e.first, e.second);
        bool seen = false;
        for (CellOrbit& o : edge_orbits)
            if (cells_equivalent(g, o, c)) {
                seen = true;
                if (c.points < o.points)
                    o = c;
            }
        if (!seen)
            edge_orbits.push_back(c);
    }
    for (CellOrbit& c : edge_orbits) {
        // Anything stabilizing a 1-cell must fix it pointwise.
        Vec3 mid = (c.points[0] + c.points[1]) * kHalf;
        for (const Mat3& h : point_stabilizer(g, mid).image) {
            Vec3 l = mid - h * mid;
            bool maps_to_self = ((h * c.points[0] + l) == c.points[0]
                                 && (h * c.points[1] + l) == c.points[1])
                || ((h * c.points[0] + l) == c.points[1]
                    && (h * c.points[1] + l) == c.points[0]);
            if (maps_to_self
                && std::find(c.stabilizer_image.begin(), c.stabilizer_image.end(), h)
                    == c.stabilizer_image.end())
                throw CatalogInconsistent("edge stabilizer does not fix pointwise");
        }
        out.cells.push_back(c);
    }

    // One 2-cell orbit per pairing pair, and the interior 3-cell.
    for (std::size_t s = 0; s < d.sides.size(); ++s) {
        if (d.partner(static_cast<int>(s)) < static_cast<int>(s))
            continue;
        CellOrbit c;
        c.dim = 2;
        c.points = d.side_polygon(static_cast<int>(s));
        c.stabilizer_image = cell_pointwise_stabilizer(g, c.points);
        c.type = finite_iso_type(c.stabilizer_image);
        out.cells.push_back(c);
    }
    CellOrbit interior;
    interior.dim = 3;
    interior.points = d.vertices;
    interior.stabilizer_image = cell_pointwise_stabilizer(g, interior.points);
    interior.type = finite_iso_type(interior.stabilizer_image);
    out.cells.push_back(interior);
    return out;
}

} // namespace

const CellComplex& cell_complex(int gamma_index)
{
    static std::map<int, CellComplex> cache;
    auto it = cache.find(gamma_index);
    if (it == cache.end())
        it = cache.emplace(gamma_index, build_gamma_complex(gamma_index)).first;
    return it->second;
}

CellComplex refine_stabilizers(const CrystGroup& big, const CrystGroup& sub,
                               const CellComplex& cells)
{
    if (!sub.point_group.is_subgroup_of(big.point_group)
        || !sub.lattice.same_lattice(big.lattice))
        throw NotASubgroup(sub.label + " inside " + big.label);

    // Canonical right transversal of H' in H.
    std::vector<Mat3> transversal;
    for (const Mat3& h : big.point_group.elements) {
        bool covered = false;
        for (const Mat3& t : transversal)
            if (sub.point_group.contains(h * t.inverse())) {
                covered = true;
                break;
            }
        if (!covered)
            transversal.push_back(h);
    }

    std::vector<CellOrbit> reps;
    for (const CellOrbit& c : cells.non_negligible()) {
        for (const Mat3& t : transversal) {
            CellOrbit moved;
            moved.dim = c.dim;
            for (const Vec3& p : c.points)
                moved.points.push_back(t * p);
            if (moved.dim == 1 && moved.points[1] < moved.points[0])
                std::swap(moved.points[0], moved.points[1]);
            bool seen = false;
            for (CellOrbit& o : reps)
                if (cells_equivalent(sub, o, moved)) {
                    seen = true;
                    if (moved.points < o.points)
                        o.points = moved.points;
                }
            if (!seen)
                reps.push_back(std::move(moved));
        }
    }

    CellComplex out;
    for (CellOrbit& c : reps) {
        c.stabilizer_image = c.dim == 0 ? point_stabilizer(sub, c.points[0]).image
                                        : cell_pointwise_stabilizer(sub, c.points);
        c.type = finite_iso_type(c.stabilizer_image);
        if (!is_negligible_finite(c.type))
            out.cells.push_back(c);
    }
    std::sort(out.cells.begin(), out.cells.end(),
              [](const CellOrbit& a, const CellOrbit& b) {
                  if (a.dim != b.dim)
                      return a.dim < b.dim;
                  return a.points < b.points;
              });
    return out;
}

const CellComplex& catalog_cells(const std::string& label)
{
    static std::map<std::string, CellComplex> cache;
    const CrystGroup& g = catalog_entry(label);
    auto it = cache.find(g.label);
    if (it != cache.end())
        return it->second;
    const CrystGroup& big = maximal_group(g.lattice_index);
    CellComplex refined = refine_stabilizers(big, g, cell_complex(g.lattice_index));
    return cache.emplace(g.label, std::move(refined)).first->second;
}

} // namespace crystk
