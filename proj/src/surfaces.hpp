#pragma once

#include "padic.hpp"
#include "poly.hpp"

#include <functional>
#include <vector>

namespace mk3 {

enum class FamilyId { F1, F2, F3 };

FamilyId parse_family(const std::string& s);  // "f1" | "f2" | "f3"
std::string family_name(FamilyId f);

struct Surface {
    FamilyId family;
    Int k;

    // F3 smoothness indicator k(4k+1)((4k-5)^2 - 32); recorded, nonzero means smooth.
    Int smoothness_indicator() const;
};

struct AffinePoint {
    Rat x, y, z;
    bool operator==(const AffinePoint& o) const { return x == o.x && y == o.y && z == o.z; }
};

// Coefficients of the general Markoff-type (2,2,2) form
//   a x^2y^2z^2 + b (x^2y^2 + x^2z^2 + y^2z^2) + c xyz + d (x^2+y^2+z^2) + e.
struct GeneralForm {
    Rat a, b, c, d, e;
};

GeneralForm as_general_form(const Surface& s);
bool nondegeneracy_check(const GeneralForm& g);

// F = x^2+y^2+z^2 + pair*(x^2y^2+y^2z^2+z^2x^2) + triple*x^2y^2z^2 - k
struct FamilyCoeffs {
    long long pair;
    long long triple;
};
FamilyCoeffs family_coeffs(FamilyId f);
Poly family_poly(FamilyId f);  // with symbolic k (variable index 3)

Rat evaluate(const Surface& s, const AffinePoint& P);
std::array<Rat, 3> gradient(const Surface& s, const AffinePoint& P);

// ---- factored identities ----------------------------------------------------
enum class IdentityId {
    adjacent_product,      // F1: (4x^2y^2-1)(4y^2z^2-1) = (2y^2+1)^2 - 4(k+1)y^2
    triple_product_minus,  // F2: (4x^2-1)(4y^2-1)(4z^2-1) = 4k-1
    triple_product_plus,   // F3: (4x^2+1)(4y^2+1)(4z^2+1) = (4k+1) + 128x^2y^2z^2
    fiber_split,           // F3: (4x^2+1)(1+4y^2+4z^2-16y^2z^2) = (4k+1) - 32y^2z^2
    b_class_product,       // F3: (16x^2y^2-4x^2-4y^2-1)(16x^2z^2-4x^2-4z^2-1)
                           //        = 2((4x^2-(4k-1)/4)^2 - ((4k-5)^2-32)/16)
};

IdentityId parse_identity(const std::string& s);
std::string identity_name(IdentityId id);

struct identity_not_applicable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IdentityCertificate {
    bool holds = false;
    bool symbolic = false;
    std::string quotient;  // multiplier of the family polynomial (symbolic mode)
    Rat lhs, rhs;          // numeric mode values
};

// Symbolic: verifies lhs - rhs is an exact polynomial multiple of the family equation.
IdentityCertificate factored_identity_symbolic(FamilyId f, IdentityId id);
// Numeric: requires evaluate(s, P) == 0, checks both sides agree at P.
IdentityCertificate factored_identity_numeric(const Surface& s, IdentityId id, const AffinePoint& P);

// ---- the symmetry group G (24 elements: even sign changes x permutations) ----
std::vector<AffinePoint> g_orbit(const AffinePoint& P);
AffinePoint g_canonical(const AffinePoint& P);
int g_orbit_size(const AffinePoint& P);

// ---- searches ----------------------------------------------------------------
struct FoundPoint {
    AffinePoint point;  // G-canonical representative
    int orbit_size;
};

std::vector<FoundPoint> integral_point_search(const Surface& s, long long box);
std::vector<FoundPoint> rational_point_search(const Surface& s, long long height);

// ---- residue evaluation for scans and Hensel lifting -------------------------
class SurfaceMod : public PolySystemMod {
public:
    SurfaceMod(const Surface& s);
    u64 eval(u64 x, u64 y, u64 z, u64 mod) const override;
    std::array<u64, 3> grad(u64 x, u64 y, u64 z, u64 mod) const override;

private:
    void refresh(u64 mod) const;
    FamilyCoeffs co_;
    Int k_;
    mutable u64 cmod_ = 0, ck_ = 0, cpair_ = 0, ctriple_ = 0;
};

// F with coordinates scaled by p^{-shift[i]} and denominators cleared:
//   G(X,Y,Z) = p^M * F(X/p^sx, Y/p^sy, Z/p^sz), M = 2(sx+sy+sz).
class ScaledSurfaceMod : public PolySystemMod {
public:
    ScaledSurfaceMod(const Surface& s, long long p, std::array<int, 3> shifts);
    u64 eval(u64 x, u64 y, u64 z, u64 mod) const override;
    std::array<u64, 3> grad(u64 x, u64 y, u64 z, u64 mod) const override;

private:
    struct Mono {
        Int coeff;
        std::array<int, 3> e;  // exponents (0 or 2)
        int pshift;            // power of p multiplying the monomial
    };
    void refresh(u64 mod) const;
    std::vector<Mono> monos_;
    long long p_;
    mutable u64 cmod_ = 0;
    mutable std::vector<u64> ccoef_;        // coeff * p^pshift mod cmod_
    mutable std::vector<std::array<u64, 3>> cdcoef_;  // per-variable derivative coefficients
};

}  // namespace mk3
