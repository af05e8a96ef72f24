#include "surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace mk3 {

FamilyId parse_family(const std::string& s) {
    if (s == "f1" || s == "F1" || s == "1") return FamilyId::F1;
    if (s == "f2" || s == "F2" || s == "2") return FamilyId::F2;
    if (s == "f3" || s == "F3" || s == "3") return FamilyId::F3;
    throw std::invalid_argument("unknown family: " + s);
}

std::string family_name(FamilyId f) {
    switch (f) {
        case FamilyId::F1: return "f1";
        case FamilyId::F2: return "f2";
        case FamilyId::F3: return "f3";
    }
    return "?";
}

FamilyCoeffs family_coeffs(FamilyId f) {
    switch (f) {
        case FamilyId::F1: return {0, -4};
        case FamilyId::F2: return {-4, 16};
        case FamilyId::F3: return {4, -16};
    }
    return {0, 0};
}

Int Surface::smoothness_indicator() const {
    return k * (4 * k + 1) * ((4 * k - 5) * (4 * k - 5) - 32);
}

GeneralForm as_general_form(const Surface& s) {
    auto co = family_coeffs(s.family);
    return {Rat(co.triple), Rat(co.pair), Rat(0), Rat(1), Rat(-s.k)};
}

bool nondegeneracy_check(const GeneralForm& g) {
    return g.c != Rat(0) && g.b * g.e != g.d * g.d && g.a * g.d != g.b * g.b;
}

Poly family_poly(FamilyId f) {
    auto co = family_coeffs(f);
    Poly x = Poly::var(0), y = Poly::var(1), z = Poly::var(2), k = Poly::var(3);
    Poly x2 = x * x, y2 = y * y, z2 = z * z;
    return x2 + y2 + z2 + (x2 * y2 + y2 * z2 + z2 * x2) * Rat(co.pair) +
           x2 * y2 * z2 * Rat(co.triple) - k;
}

Rat evaluate(const Surface& s, const AffinePoint& P) {
    auto co = family_coeffs(s.family);
    Rat x2 = P.x * P.x, y2 = P.y * P.y, z2 = P.z * P.z;
    return x2 + y2 + z2 + Rat(co.pair) * (x2 * y2 + y2 * z2 + z2 * x2) +
           Rat(co.triple) * (x2 * y2 * z2) - Rat(s.k);
}

std::array<Rat, 3> gradient(const Surface& s, const AffinePoint& P) {
    auto co = family_coeffs(s.family);
    Rat x2 = P.x * P.x, y2 = P.y * P.y, z2 = P.z * P.z;
    Rat two(2);
    return {two * P.x * (Rat(1) + Rat(co.pair) * (y2 + z2) + Rat(co.triple) * y2 * z2),
            two * P.y * (Rat(1) + Rat(co.pair) * (z2 + x2) + Rat(co.triple) * z2 * x2),
            two * P.z * (Rat(1) + Rat(co.pair) * (x2 + y2) + Rat(co.triple) * x2 * y2)};
}

// ---- identities --------------------------------------------------------------

IdentityId parse_identity(const std::string& s) {
    if (s == "adjacent_product") return IdentityId::adjacent_product;
    if (s == "triple_product_minus") return IdentityId::triple_product_minus;
    if (s == "triple_product_plus") return IdentityId::triple_product_plus;
    if (s == "fiber_split") return IdentityId::fiber_split;
    if (s == "b_class_product") return IdentityId::b_class_product;
    throw std::invalid_argument("unknown identity: " + s);
}

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::adjacent_product: return "adjacent_product";
        case IdentityId::triple_product_minus: return "triple_product_minus";
        case IdentityId::triple_product_plus: return "triple_product_plus";
        case IdentityId::fiber_split: return "fiber_split";
        case IdentityId::b_class_product: return "b_class_product";
    }
    return "?";
}

static FamilyId identity_family(IdentityId id) {
    switch (id) {
        case IdentityId::adjacent_product: return FamilyId::F1;
        case IdentityId::triple_product_minus: return FamilyId::F2;
        default: return FamilyId::F3;
    }
}

static std::pair<Poly, Poly> identity_sides(IdentityId id) {
    Poly x = Poly::var(0), y = Poly::var(1), z = Poly::var(2), k = Poly::var(3);
    Poly one = Poly::constant(Rat(1));
    Poly x2 = x * x, y2 = y * y, z2 = z * z;
    switch (id) {
        case IdentityId::adjacent_product:
            return {(x2 * y2 * Rat(4) - one) * (y2 * z2 * Rat(4) - one),
                    (y2 * Rat(2) + one) * (y2 * Rat(2) + one) - (k + one) * y2 * Rat(4)};
        case IdentityId::triple_product_minus:
            return {(x2 * Rat(4) - one) * (y2 * Rat(4) - one) * (z2 * Rat(4) - one),
                    k * Rat(4) - one};
        case IdentityId::triple_product_plus:
            return {(x2 * Rat(4) + one) * (y2 * Rat(4) + one) * (z2 * Rat(4) + one),
                    k * Rat(4) + one + x2 * y2 * z2 * Rat(128)};
        case IdentityId::fiber_split:
            return {(x2 * Rat(4) + one) * (one + y2 * Rat(4) + z2 * Rat(4) - y2 * z2 * Rat(16)),
                    k * Rat(4) + one - y2 * z2 * Rat(32)};
        case IdentityId::b_class_product: {
            Poly fxy = x2 * y2 * Rat(16) - x2 * Rat(4) - y2 * Rat(4) - one;
            Poly fxz = x2 * z2 * Rat(16) - x2 * Rat(4) - z2 * Rat(4) - one;
            Poly t = x2 * Rat(4) - (k * Rat(4) - one) * Rat(Int(1), Int(4));
            Poly disc = ((k * Rat(4) - Poly::constant(Rat(5))) * (k * Rat(4) - Poly::constant(Rat(5))) -
                         Poly::constant(Rat(32))) *
                        Rat(Int(1), Int(16));
            return {fxy * fxz, (t * t - disc) * Rat(2)};
        }
    }
    throw std::logic_error("identity_sides");
}

IdentityCertificate factored_identity_symbolic(FamilyId f, IdentityId id) {
    if (identity_family(id) != f)
        throw identity_not_applicable(identity_name(id) + " does not apply to " + family_name(f));
    auto [lhs, rhs] = identity_sides(id);
    Poly diff = lhs - rhs;
    auto [q, r] = diff.div_by_family(family_poly(f));
    IdentityCertificate cert;
    cert.symbolic = true;
    cert.holds = r.is_zero();
    cert.quotient = q.str();
    return cert;
}

IdentityCertificate factored_identity_numeric(const Surface& s, IdentityId id, const AffinePoint& P) {
    if (identity_family(id) != s.family)
        throw identity_not_applicable(identity_name(id) + " does not apply to " + family_name(s.family));
    if (evaluate(s, P) != Rat(0))
        throw std::invalid_argument("factored_identity: point is not on the surface");
    auto [lhs, rhs] = identity_sides(id);
    IdentityCertificate cert;
    cert.lhs = lhs.eval(P.x, P.y, P.z, Rat(s.k));
    cert.rhs = rhs.eval(P.x, P.y, P.z, Rat(s.k));
    cert.holds = cert.lhs == cert.rhs;
    return cert;
}

// ---- the group G --------------------------------------------------------------

std::vector<AffinePoint> g_orbit(const AffinePoint& P) {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static const int signs[4][3] = {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}};
    std::vector<AffinePoint> orbit;
    Rat c[3] = {P.x, P.y, P.z};
    for (auto& pm : perms)
        for (auto& sg : signs) {
            AffinePoint Q{c[pm[0]] * Rat(sg[0]), c[pm[1]] * Rat(sg[1]), c[pm[2]] * Rat(sg[2])};
            if (std::find(orbit.begin(), orbit.end(), Q) == orbit.end()) orbit.push_back(Q);
        }
    return orbit;
}

static bool rat_less(const Rat& a, const Rat& b) { return a < b; }

static bool point_lex_less(const AffinePoint& a, const AffinePoint& b) {
    if (a.x != b.x) return rat_less(a.x, b.x);
    if (a.y != b.y) return rat_less(a.y, b.y);
    return rat_less(a.z, b.z);
}

AffinePoint g_canonical(const AffinePoint& P) {
    auto orbit = g_orbit(P);
    // prefer the all-nonnegative sorted representative when reachable; otherwise lex-max...
    // use plain lexicographic *maximum* of nonneg-heavy? Keep it simple and deterministic:
    // representative = lexicographically greatest? No: pick the orbit element that is
    // lexicographically smallest under (abs-sorted, then sign) is fiddly; use componentwise
    // comparison favoring nonnegative triples first, then lex order.
    AffinePoint best = orbit[0];
    auto neg_count = [](const AffinePoint& q) {
        return (q.x < Rat(0)) + (q.y < Rat(0)) + (q.z < Rat(0));
    };
    auto better = [&](const AffinePoint& a, const AffinePoint& b) {
        int na = neg_count(a), nb = neg_count(b);
        if (na != nb) return na < nb;
        return point_lex_less(a, b);
    };
    for (auto& q : orbit)
        if (better(q, best)) best = q;
    return best;
}

int g_orbit_size(const AffinePoint& P) { return (int)g_orbit(P).size(); }

// ---- searches ------------------------------------------------------------------

static bool perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

std::vector<FoundPoint> integral_point_search(const Surface& s, long long box) {
    if (box < 0) throw std::invalid_argument("box must be >= 0");
    auto co = family_coeffs(s.family);
    std::set<std::array<Int, 3>> reps;
    for (long long xi = 0; xi <= box; ++xi) {
        Int x2 = Int(xi) * xi;
        for (long long yi = xi; yi <= box; ++yi) {
            Int y2 = Int(yi) * yi;
            // F = z^2 * Dz + Cz
            Int Dz = 1 + co.pair * (x2 + y2) + co.triple * x2 * y2;
            Int Cz = x2 + y2 + co.pair * x2 * y2 - s.k;
            if (Dz == 0) continue;  // never happens over Z for these families
            Int num = -Cz;
            if (num % Dz != 0) continue;
            Int z2 = num / Dz;
            Int zr;
            if (!perfect_square(z2, zr) || zr > box) continue;
            for (Int zc : std::set<Int>{zr, -zr}) {
                AffinePoint P{Rat(Int(xi)), Rat(Int(yi)), Rat(zc)};
                AffinePoint C = g_canonical(P);
                reps.insert({C.x.numerator(), C.y.numerator(), C.z.numerator()});
            }
        }
    }
    std::vector<FoundPoint> out;
    for (auto& r : reps) {
        AffinePoint P{Rat(r[0]), Rat(r[1]), Rat(r[2])};
        out.push_back({P, g_orbit_size(P)});
    }
    return out;
}

namespace {

struct Frac64 {
    long long n, d;  // d > 0, reduced
};

std::vector<Frac64> height_fractions(long long H) {
    std::vector<Frac64> out;
    for (long long d = 1; d <= H; ++d)
        for (long long n = 0; n <= H; ++n)
            if (std::gcd(n, d) == 1) out.push_back({n, d});
    return out;
}

}  // namespace

std::vector<FoundPoint> rational_point_search(const Surface& s, long long height) {
    if (height < 1) throw std::invalid_argument("height must be >= 1");
    auto co = family_coeffs(s.family);
    auto fractions = height_fractions(height);
    std::vector<Rat> xs, xs2;
    xs.reserve(fractions.size());
    for (auto& f : fractions) {
        Rat q(f.n, f.d);
        xs.push_back(q);
        xs2.push_back(q * q);
    }
    std::set<std::array<Int, 6>> reps;
    auto hgt = [](const Rat& q) {
        Int n = q.numerator() < 0 ? -q.numerator() : q.numerator();
        return std::max(n, q.denominator());
    };
    for (size_t i = 0; i < fractions.size(); ++i) {
        const Rat& x = xs[i];
        const Rat& x2 = xs2[i];
        for (size_t j = i; j < fractions.size(); ++j) {
            const Rat& y = xs[j];
            const Rat& y2 = xs2[j];
            Rat Dz = Rat(1) + Rat(co.pair) * (x2 + y2) + Rat(co.triple) * x2 * y2;
            Rat Cz = x2 + y2 + Rat(co.pair) * x2 * y2 - Rat(s.k);
            if (Dz == Rat(0)) continue;  // a z-line would need Cz == 0 too; not a point list
            Rat z2 = -Cz / Dz;
            if (z2 < Rat(0)) continue;
            Int rn, rd;
            if (!perfect_square(z2.numerator(), rn) || !perfect_square(z2.denominator(), rd)) continue;
            Rat z(rn, rd);
            if (hgt(z) > Int(height)) continue;
            for (const Rat& zc : {z, -z}) {
                AffinePoint P{x, y, zc};
                if (P.x.denominator() == 1 && P.y.denominator() == 1 && P.z.denominator() == 1)
                    continue;  // affine-integral points are the integral search's business
                AffinePoint C = g_canonical(P);
                reps.insert({C.x.numerator(), C.x.denominator(), C.y.numerator(), C.y.denominator(),
                             C.z.numerator(), C.z.denominator()});
                if (zc == Rat(0)) break;
            }
        }
    }
    std::vector<FoundPoint> out;
    for (auto& r : reps) {
        AffinePoint P{Rat(r[0], r[1]), Rat(r[2], r[3]), Rat(r[4], r[5])};
        out.push_back({P, g_orbit_size(P)});
    }
    return out;
}

// ---- residue systems ------------------------------------------------------------

SurfaceMod::SurfaceMod(const Surface& s) : co_(family_coeffs(s.family)), k_(s.k) {}

static u64 reduce_int(const Int& v, u64 mod) {
    Int r = v % Int(mod);
    if (r < 0) r += Int(mod);
    return r.convert_to<u64>();
}

void SurfaceMod::refresh(u64 mod) const {
    if (cmod_ == mod) return;
    cmod_ = mod;
    ck_ = reduce_int(k_, mod);
    cpair_ = reduce_int(Int(co_.pair), mod);
    ctriple_ = reduce_int(Int(co_.triple), mod);
}

u64 SurfaceMod::eval(u64 x, u64 y, u64 z, u64 mod) const {
    refresh(mod);
    u64 x2 = mulmod(x, x, mod), y2 = mulmod(y, y, mod), z2 = mulmod(z, z, mod);
    u64 sum = addmod(addmod(x2, y2, mod), z2, mod);
    u64 xy = mulmod(x2, y2, mod), yz = mulmod(y2, z2, mod), zx = mulmod(z2, x2, mod);
    u64 mid = mulmod(cpair_, addmod(addmod(xy, yz, mod), zx, mod), mod);
    u64 top = mulmod(ctriple_, mulmod(xy, z2, mod), mod);
    return submod(addmod(addmod(sum, mid, mod), top, mod), ck_, mod);
}

std::array<u64, 3> SurfaceMod::grad(u64 x, u64 y, u64 z, u64 mod) const {
    refresh(mod);
    u64 x2 = mulmod(x, x, mod), y2 = mulmod(y, y, mod), z2 = mulmod(z, z, mod);
    auto part = [&](u64 w, u64 a2, u64 b2) {
        u64 inner = addmod(1 % mod, mulmod(cpair_, addmod(a2, b2, mod), mod), mod);
        inner = addmod(inner, mulmod(ctriple_, mulmod(a2, b2, mod), mod), mod);
        return mulmod(addmod(w, w, mod), inner, mod);
    };
    return {part(x, y2, z2), part(y, z2, x2), part(z, x2, y2)};
}

ScaledSurfaceMod::ScaledSurfaceMod(const Surface& s, long long p, std::array<int, 3> sh) : p_(p) {
    auto co = family_coeffs(s.family);
    int M = 2 * (sh[0] + sh[1] + sh[2]);
    auto add = [&](Int c, int ex, int ey, int ez) {
        if (c == 0) return;
        int denom = ex * sh[0] + ey * sh[1] + ez * sh[2];
        monos_.push_back({c, {ex, ey, ez}, M - denom});
    };
    add(1, 2, 0, 0);
    add(1, 0, 2, 0);
    add(1, 0, 0, 2);
    add(co.pair, 2, 2, 0);
    add(co.pair, 0, 2, 2);
    add(co.pair, 2, 0, 2);
    add(co.triple, 2, 2, 2);
    add(-s.k, 0, 0, 0);
}

void ScaledSurfaceMod::refresh(u64 mod) const {
    if (cmod_ == mod) return;
    cmod_ = mod;
    ccoef_.clear();
    cdcoef_.clear();
    for (auto& m : monos_) {
        u64 t = reduce_int(m.coeff, mod);
        for (int i = 0; i < m.pshift; ++i) t = mulmod(t, (u64)p_ % mod, mod);
        ccoef_.push_back(t);
        std::array<u64, 3> d{};
        for (int v = 0; v < 3; ++v) d[v] = mulmod(t, (u64)m.e[v] % mod, mod);
        cdcoef_.push_back(d);
    }
}

u64 ScaledSurfaceMod::eval(u64 x, u64 y, u64 z, u64 mod) const {
    refresh(mod);
    u64 acc = 0;
    u64 c[3] = {x, y, z};
    for (size_t mi = 0; mi < monos_.size(); ++mi) {
        u64 t = ccoef_[mi];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < monos_[mi].e[i]; ++j) t = mulmod(t, c[i], mod);
        acc = addmod(acc, t, mod);
    }
    return acc;
}

std::array<u64, 3> ScaledSurfaceMod::grad(u64 x, u64 y, u64 z, u64 mod) const {
    refresh(mod);
    std::array<u64, 3> g{0, 0, 0};
    u64 c[3] = {x, y, z};
    for (size_t mi = 0; mi < monos_.size(); ++mi) {
        auto& m = monos_[mi];
        for (int v = 0; v < 3; ++v) {
            if (m.e[v] == 0) continue;
            u64 t = cdcoef_[mi][v];
            for (int i = 0; i < 3; ++i) {
                int ee = m.e[i] - (i == v ? 1 : 0);
                for (int j = 0; j < ee; ++j) t = mulmod(t, c[i], mod);
            }
            g[v] = addmod(g[v], t, mod);
        }
    }
    return g;
}

}  // namespace mk3
