#pragma once

#include "crystk/crystal.hpp"
#include "crystk/kexpr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crystk {

/// Line r(alpha) = offset + alpha * direction with the direction primitive
/// in the lattice (sign fixed by the first nonzero coordinate) and the
/// offset perpendicular to it.
struct ParamLine {
    Vec3 offset;
    Vec3 direction;

    static ParamLine make(const Lattice& l, const Vec3& t, const Vec3& v);
    Vec3 at(const ExactScalar& alpha) const { return offset + direction * alpha; }
    bool operator==(const ParamLine& r) const
    {
        return offset == r.offset && direction == r.direction;
    }
    std::string str() const;
};

/// Same Gamma-orbit of unparametrized lines?
bool lines_equivalent(const CrystGroup& g, const ParamLine& a, const ParamLine& b);

/// Strict stabilizer {gamma : gamma fixes the line pointwise}: the image is
/// {h in H_v : t - h t in L}, with the affine lifts.
struct StrictStabilizer {
    std::vector<Mat3> image;
    std::vector<AffineIsometry> lifts;
};
StrictStabilizer strict_stabilizer(const CrystGroup& g, const ParamLine& line);

/// Negligible in the line sense: the strict stabilizer has square-free
/// order (fast path: |H_v| square-free already suffices).
bool is_negligible_line(const CrystGroup& g, const ParamLine& line);

/// One line per orbit of non-negligible lines; data for the maximal groups,
/// computed by transversal refinement for everyone else.  Cached.
const std::vector<ParamLine>& t_double_prime(const CrystGroup& g);
const std::vector<ParamLine>& t_double_prime(const std::string& label);

/// Smallest C > 0 with some gamma_T in Gamma translating r(alpha) to
/// r(alpha + C); q generates {v1.v / v.v : v1 in L}.
struct MinimalTranslation {
    ExactScalar c;
    ExactScalar q;
    AffineIsometry gamma_t;
};
MinimalTranslation minimal_translation(const CrystGroup& g, const ParamLine& line);

/// Isometry acting as r(alpha) -> r(d - alpha), when one exists.
struct LineReflection {
    ExactScalar d;
    AffineIsometry gamma_r;
};
std::optional<LineReflection> find_reflection(const CrystGroup& g, const ParamLine& line);

/// The twelve structures with nonzero cokernels, plus a marker for
/// square-free (negligible) fibers.
enum class VCType {
    C4xZ,
    D2xZ,
    D2sdZ, // D2 x| Z, twisted
    D4xZ,
    D6xZ,
    C4xDinf,
    D2xDinf,
    D4xDinf,
    D6xDinf,
    D4aC4D4,   // D4 *_C4 D4
    D4aD2D4,   // D4 *_D2 D4
    D2Z2aD2D4, // (D2 x Z/2) *_D2 D4
    Negligible,
};
std::string to_string(VCType t);
VCType vc_type_from_string(const std::string& s);

/// Stabilizer of the line rebuilt from its strict stabilizer: either a
/// semidirect product with Z or an amalgam of the two end stabilizers.
struct VCStructure {
    bool is_semidirect = false;
    FinGroupType fiber = FinGroupType::One; // strict stabilizer type
    bool twisted = false;                   // conjugation by gamma_T not inner
    FinGroupType left = FinGroupType::One;  // amalgam factors
    FinGroupType amalgamated = FinGroupType::One;
    FinGroupType right = FinGroupType::One;
    VCType classified = VCType::Negligible;

    std::string str() const;
};
VCStructure vc_structure(const CrystGroup& g, const ParamLine& line);

/// Cokernel of the relative assembly map for a structure in the closed
/// list; zero at n = -1 and for negligible structures.
KExpr cokernel(VCType t, int n);
KExpr cokernel(const VCStructure& s, int n);

} // namespace crystk
