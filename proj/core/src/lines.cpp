#include "crystk/lines.hpp"

#include "crystk/errors.hpp"

#include <algorithm>
#include <map>

namespace crystk {

namespace {

const ExactScalar kHalf(1, 2);

ExactScalar rational_gcd(const ExactScalar& a, const ExactScalar& b)
{
    if (a.is_zero())
        return b.abs();
    if (b.is_zero())
        return a.abs();
    BigInt q = lcm(a.denominator(), b.denominator());
    BigInt na = a.numerator() * (q / a.denominator());
    BigInt nb = b.numerator() * (q / b.denominator());
    return ExactScalar(gcd(boost::multiprecision::abs(na), boost::multiprecision::abs(nb)),
                       q);
}

// Smallest beta > 0 with beta * v in L, for rational v != 0.
ExactScalar primitive_multiple(const Lattice& l, const Vec3& v)
{
    Vec3 c = l.coordinates(v);
    BigInt den = lcm(lcm(c.x.denominator(), c.y.denominator()), c.z.denominator());
    BigInt n1 = c.x.numerator() * (den / c.x.denominator());
    BigInt n2 = c.y.numerator() * (den / c.y.denominator());
    BigInt n3 = c.z.numerator() * (den / c.z.denominator());
    BigInt g = gcd(gcd(boost::multiprecision::abs(n1), boost::multiprecision::abs(n2)),
                   boost::multiprecision::abs(n3));
    BigInt shared = gcd(g, den);
    return ExactScalar(den / shared, g / shared);
}

// All beta in [0,1) with w + beta v in L (solutions repeat modulo 1 since
// v lies in L).
std::vector<ExactScalar> offsets_into_lattice(const Lattice& l, const Vec3& w,
                                              const Vec3& v)
{
    Vec3 cv = l.coordinates(v);
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
        if (!cv[i].is_zero())
            pivot = i;
    std::vector<ExactScalar> out;
    if (pivot < 0)
        return out;
    Vec3 cw = l.coordinates(w);
    // beta = (m - cw[pivot]) / cv[pivot], integer m, restricted to [0, 1).
    ExactScalar step = (ExactScalar(1) / cv[pivot]).abs();
    ExactScalar beta0 = -cw[pivot] / cv[pivot];
    ExactScalar start = beta0 - step * ExactScalar(((beta0 / step).floor()));
    for (ExactScalar beta = start; beta < ExactScalar(1); beta += step) {
        if (beta.is_negative())
            continue;
        if (l.contains(w + v * beta))
            out.push_back(beta);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

ParamLine ParamLine::make(const Lattice& l, const Vec3& t, const Vec3& v)
{
    if (v.is_zero())
        throw std::domain_error("ParamLine: zero direction");
    Vec3 dir = v * primitive_multiple(l, v);
    for (int i = 0; i < 3; ++i) {
        if (dir[i].is_zero())
            continue;
        if (dir[i].is_negative())
            dir = -dir;
        break;
    }
    ParamLine out;
    out.direction = dir;
    out.offset = t - dir * (t.dot(dir) / dir.norm2());
    return out;
}

std::string ParamLine::str() const { return offset.str() + " + a*" + direction.str(); }

bool lines_equivalent(const CrystGroup& g, const ParamLine& a, const ParamLine& b)
{
    for (const Mat3& h : g.point_group.elements) {
        Vec3 hv = h * a.direction;
        if (hv != b.direction && hv != -b.direction)
            continue;
        // Need l in L and beta with  h t_a + l = t_b + beta v_b.
        if (!offsets_into_lattice(g.lattice, b.offset - h * a.offset, b.direction)
                 .empty())
            return true;
    }
    return false;
}

StrictStabilizer strict_stabilizer(const CrystGroup& g, const ParamLine& line)
{
    StrictStabilizer out;
    for (const Mat3& h : g.point_group.elements) {
        if (h * line.direction != line.direction)
            continue;
        Vec3 diff = line.offset - h * line.offset;
        if (g.lattice.contains(diff)) {
            out.image.push_back(h);
            out.lifts.emplace_back(diff, h);
        }
    }
    return out;
}

bool is_negligible_line(const CrystGroup& g, const ParamLine& line)
{
    std::size_t hv = 0;
    for (const Mat3& h : g.point_group.elements)
        hv += h * line.direction == line.direction ? 1 : 0;
    if (has_square_free_order(hv))
        return true;
    return has_square_free_order(strict_stabilizer(g, line).image.size());
}

namespace {

std::vector<ParamLine> maximal_line_data(int index)
{
    const Lattice& l = catalog_lattice(index);
    auto line = [&](const Vec3& t, const Vec3& v) { return ParamLine::make(l, t, v); };
    const Vec3 zero = vec(0, 0, 0), x = vec(1, 0, 0), y = vec(0, 1, 0), z = vec(0, 0, 1);
    const Vec3 half_z = Vec3{ExactScalar(0), ExactScalar(0), kHalf};
    switch (index) {
    case 1:
        return {line(zero, z), line(Vec3{kHalf, kHalf, ExactScalar(0)}, z),
                line(Vec3{kHalf, ExactScalar(0), ExactScalar(0)}, z),
                line(zero, vec(1, 1, 0)), line(half_z, vec(1, 1, 0))};
    case 2:
        return {line(zero, z), line(Vec3{kHalf, ExactScalar(0), ExactScalar(0)}, z),
                line(zero, vec(1, 1, 0))};
    case 3:
        return {line(zero, z), line(Vec3{frac(1, 4), frac(1, 4), ExactScalar(0)}, z),
                line(zero, vec(1, 1, 0)), line(half_z, vec(1, 1, 0))};
    case 4:
        return {line(zero, z), line(Vec3{ExactScalar(0), kHalf, ExactScalar(0)}, z),
                line(zero, x), line(Vec3{ExactScalar(0), kHalf, ExactScalar(0)}, x),
                line(zero, y), line(half_z, y)};
    case 5:
        return {line(zero, vec(1, 1, 1)),
                line(Vec3{kHalf, -kHalf, ExactScalar(0)}, vec(1, 1, 1)),
                line(zero, vec(1, -1, 0)),
                line(Vec3{kHalf, kHalf, kHalf}, vec(1, -1, 0)),
                line(zero, vec(1, -2, 1)),
                line(Vec3{kHalf, kHalf, kHalf}, vec(1, -2, 1))};
    default:
        return {};
    }
}

std::vector<ParamLine> compute_t_double_prime(const CrystGroup& g)
{
    const CrystGroup& big = maximal_group(g.lattice_index);
    if (g.label == big.label) {
        std::vector<ParamLine> data = maximal_line_data(g.lattice_index);
        for (const ParamLine& l : data)
            if (is_negligible_line(g, l))
                throw NotInCatalog("negligible line in the maximal data: " + l.str());
        return data;
    }

    std::vector<Mat3> transversal;
    for (const Mat3& h : big.point_group.elements) {
        bool covered = false;
        for (const Mat3& t : transversal)
            if (g.point_group.contains(h * t.inverse())) {
                covered = true;
                break;
            }
        if (!covered)
            transversal.push_back(h);
    }

    std::vector<ParamLine> reps;
    for (const ParamLine& l : t_double_prime(big)) {
        for (const Mat3& t : transversal) {
            ParamLine moved = ParamLine::make(g.lattice, t * l.offset, t * l.direction);
            bool seen = false;
            for (const ParamLine& r : reps)
                if (lines_equivalent(g, r, moved)) {
                    seen = true;
                    break;
                }
            if (!seen)
                reps.push_back(moved);
        }
    }
    std::vector<ParamLine> out;
    for (const ParamLine& l : reps)
        if (!is_negligible_line(g, l))
            out.push_back(l);
    if (out.size() > 20)
        throw NotInCatalog(g.label + ": more than 20 line orbits");
    return out;
}

} // namespace

const std::vector<ParamLine>& t_double_prime(const CrystGroup& g)
{
    static std::map<std::string, std::vector<ParamLine>> cache;
    auto it = cache.find(g.label);
    if (it != cache.end())
        return it->second;
    return cache.emplace(g.label, compute_t_double_prime(g)).first->second;
}

const std::vector<ParamLine>& t_double_prime(const std::string& label)
{
    return t_double_prime(catalog_entry(label));
}

MinimalTranslation minimal_translation(const CrystGroup& g, const ParamLine& line)
{
    if (!g.lattice.contains(line.offset + line.offset))
        throw PreconditionViolated("line offset is not half a lattice vector: "
                                   + line.str());
    const Vec3& v = line.direction;
    ExactScalar vv = v.norm2();
    ExactScalar q(0);
    for (const Vec3& b : g.lattice.basis())
        q = rational_gcd(q, b.dot(v) / vv);

    std::vector<Mat3> candidates = {Mat3::identity()}; // the "easy" case first
    for (const Mat3& h : g.point_group.elements)
        if (!(h == Mat3::identity()))
            candidates.push_back(h);
    for (ExactScalar c = q; c <= ExactScalar(1); c += q) {
        for (const Mat3& h : candidates) {
            if (h * v != v)
                continue;
            Vec3 shift = (line.offset - h * line.offset) + v * c;
            if (g.lattice.contains(shift))
                return {c, q, AffineIsometry(shift, h)};
        }
    }
    throw PreconditionViolated("no translation found at C <= 1 for " + line.str());
}

std::optional<LineReflection> find_reflection(const CrystGroup& g, const ParamLine& line)
{
    const Vec3& v = line.direction;
    for (const Mat3& h : g.point_group.elements) {
        if (h * v != -v)
            continue;
        auto ds = offsets_into_lattice(g.lattice, line.offset - h * line.offset, v);
        if (ds.empty())
            continue;
        Vec3 shift = (line.offset - h * line.offset) + v * ds.front();
        return LineReflection{ds.front(), AffineIsometry(shift, h)};
    }
    return std::nullopt;
}

std::string to_string(VCType t)
{
    switch (t) {
    case VCType::C4xZ:
        return "C4 x Z";
    case VCType::D2xZ:
        return "D2 x Z";
    case VCType::D2sdZ:
        return "D2 : Z";
    case VCType::D4xZ:
        return "D4 x Z";
    case VCType::D6xZ:
        return "D6 x Z";
    case VCType::C4xDinf:
        return "C4 x Dinf";
    case VCType::D2xDinf:
        return "D2 x Dinf";
    case VCType::D4xDinf:
        return "D4 x Dinf";
    case VCType::D6xDinf:
        return "D6 x Dinf";
    case VCType::D4aC4D4:
        return "D4 *_C4 D4";
    case VCType::D4aD2D4:
        return "D4 *_D2 D4";
    case VCType::D2Z2aD2D4:
        return "(D2 x Z/2) *_D2 D4";
    case VCType::Negligible:
        return "negligible";
    }
    throw UnknownVCType("unnamed");
}

VCType vc_type_from_string(const std::string& s)
{
    for (int t = 0; t <= static_cast<int>(VCType::Negligible); ++t)
        if (to_string(static_cast<VCType>(t)) == s)
            return static_cast<VCType>(t);
    throw UnknownVCType(s);
}

std::string VCStructure::str() const { return to_string(classified); }

namespace {

VCType classify(const VCStructure& s)
{
    auto square_free_type = [](FinGroupType t) {
        return has_square_free_order(static_cast<std::size_t>(type_order(t)));
    };
    if (s.is_semidirect) {
        if (square_free_type(s.fiber))
            return VCType::Negligible;
        switch (s.fiber) {
        case FinGroupType::Z4:
            if (!s.twisted)
                return VCType::C4xZ;
            break;
        case FinGroupType::D2:
            return s.twisted ? VCType::D2sdZ : VCType::D2xZ;
        case FinGroupType::D4:
            if (!s.twisted)
                return VCType::D4xZ;
            break;
        case FinGroupType::D6:
            if (!s.twisted)
                return VCType::D6xZ;
            break;
        default:
            break;
        }
        throw UnknownVCType("semidirect with fiber " + to_string(s.fiber)
                            + (s.twisted ? " (twisted)" : ""));
    }
    if (square_free_type(s.amalgamated))
        return VCType::Negligible;
    FinGroupType a = std::min(s.left, s.right), b = std::max(s.left, s.right);
    const FinGroupType f = s.amalgamated;
    if (f == FinGroupType::Z4 && a == FinGroupType::Z4xZ2 && b == FinGroupType::Z4xZ2)
        return VCType::C4xDinf;
    if (f == FinGroupType::Z4 && a == FinGroupType::D4 && b == FinGroupType::D4)
        return VCType::D4aC4D4;
    if (f == FinGroupType::D2 && a == FinGroupType::D2xZ2 && b == FinGroupType::D2xZ2)
        return VCType::D2xDinf;
    if (f == FinGroupType::D2 && a == FinGroupType::D4 && b == FinGroupType::D4)
        return VCType::D4aD2D4;
    if (f == FinGroupType::D2
        && ((a == FinGroupType::D4 && b == FinGroupType::D2xZ2)
            || (a == FinGroupType::D2xZ2 && b == FinGroupType::D4)))
        return VCType::D2Z2aD2D4;
    if (f == FinGroupType::D4 && a == FinGroupType::D4xZ2 && b == FinGroupType::D4xZ2)
        return VCType::D4xDinf;
    if (f == FinGroupType::D6 && a == FinGroupType::D6xZ2 && b == FinGroupType::D6xZ2)
        return VCType::D6xDinf;
    throw UnknownVCType(to_string(s.left) + " *_" + to_string(s.amalgamated) + " "
                        + to_string(s.right));
}

} // namespace

VCStructure vc_structure(const CrystGroup& g, const ParamLine& line)
{
    StrictStabilizer strict = strict_stabilizer(g, line);
    MinimalTranslation mt = minimal_translation(g, line);
    auto refl = find_reflection(g, line);

    VCStructure out;
    if (!refl) {
        out.is_semidirect = true;
        out.fiber = finite_iso_type(strict.image);
        // Twisted iff conjugation by pi(gamma_T) is not inner on the image.
        const Mat3& c = mt.gamma_t.linear;
        bool inner = false;
        for (const Mat3& s : strict.image) {
            bool same = true;
            for (const Mat3& m : strict.image)
                same = same && c * m * c.inverse() == s * m * s.inverse();
            inner = inner || same;
        }
        out.twisted = !inner;
    } else {
        std::vector<Mat3> left_gens = strict.image, right_gens = strict.image;
        left_gens.push_back(refl->gamma_r.linear);
        right_gens.push_back((mt.gamma_t * refl->gamma_r).linear);
        out.left = finite_iso_type(generate_group(left_gens).elements);
        out.right = finite_iso_type(generate_group(right_gens).elements);
        out.amalgamated = finite_iso_type(strict.image);
    }
    out.classified = classify(out);
    return out;
}

KExpr cokernel(VCType t, int n)
{
    if (n < -1 || n > 1)
        return {};
    if (n == -1)
        return {}; // trivial at n = -1 for everything in the closed list
    const bool wh = n == 1;
    switch (t) {
    case VCType::Negligible:
        return {};
    case VCType::C4xZ:
    case VCType::D2xZ:
    case VCType::D2sdZ:
    case VCType::C4xDinf:
    case VCType::D2xDinf:
    case VCType::D4aC4D4:
    case VCType::D4aD2D4:
    case VCType::D2Z2aD2D4:
        return KExpr::infinite_z2();
    case VCType::D4xZ:
        return wh ? KExpr::nil_d4(2) : KExpr::infinite_z2() + KExpr::infinite_z4();
    case VCType::D4xDinf:
        return wh ? KExpr::nil_d4(1) : KExpr::infinite_z2() + KExpr::infinite_z4();
    case VCType::D6xZ:
        return wh ? KExpr::nil_d6(2) : KExpr::infinite_z2();
    case VCType::D6xDinf:
        return wh ? KExpr::nil_d6(1) : KExpr::infinite_z2();
    }
    throw UnknownVCType("cokernel");
}

KExpr cokernel(const VCStructure& s, int n) { return cokernel(s.classified, n); }

} // namespace crystk
