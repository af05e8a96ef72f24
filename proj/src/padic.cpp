#include "padic.hpp"

namespace mk3 {

Valuation valuation(const Rat& n, const Int& p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
    if (n == Rat(0)) return {true, 0};
    return {false, valuation_int(n.numerator(), p) - valuation_int(n.denominator(), p)};
}

static Int pow_int(const Int& p, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

PadicApprox PadicApprox::exact_zero(const Int& p) {
    PadicApprox a;
    a.p_ = p;
    a.kind_ = Kind::exact_zero;
    return a;
}

void PadicApprox::normalize(const Int& known_residue, int modexp, long long shift) {
    // value = known_residue * p^shift, residue known mod p_^modexp
    Int r = known_residue % pow_int(p_, modexp);
    if (r < 0) r += pow_int(p_, modexp);
    if (r == 0) {
        kind_ = Kind::vanishing;
        val_ = shift;  // value == 0 mod p^(modexp+shift); store base shift
        prec_ = modexp;
        unit_ = 0;
        return;
    }
    long long v = valuation_int(r, p_);
    kind_ = Kind::approx;
    val_ = shift + v;
    prec_ = modexp - (int)v;
    unit_ = (r / pow_int(p_, (int)v)) % pow_int(p_, prec_);
}

PadicApprox PadicApprox::from_rational(const Rat& x, const Int& p, int precision) {
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");
    PadicApprox a;
    a.p_ = p;
    if (x == Rat(0)) {
        a.kind_ = Kind::exact_zero;
        return a;
    }
    long long vn = valuation_int(x.numerator(), p);
    long long vd = valuation_int(x.denominator(), p);
    Int pk = pow_int(p, precision);
    Int nu = x.numerator() / pow_int(p, (int)vn) % pk;
    Int de = x.denominator() / pow_int(p, (int)vd) % pk;
    if (nu < 0) nu += pk;
    if (de < 0) de += pk;
    // invert de mod p^precision
    Int t = 0, newt = 1, r = pk, newr = de;
    while (newr != 0) {
        Int q = r / newr;
        Int tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (t < 0) t += pk;
    a.kind_ = Kind::approx;
    a.val_ = vn - vd;
    a.prec_ = precision;
    a.unit_ = nu * t % pk;
    return a;
}

PadicApprox PadicApprox::from_scaled_residue(const Int& p, const Int& residue, int modexp, long long shift) {
    PadicApprox a;
    a.p_ = p;
    a.normalize(residue, modexp, shift);
    return a;
}

long long PadicApprox::val() const {
    if (kind_ != Kind::approx) throw std::logic_error("val(): valuation not determined");
    return val_;
}
const Int& PadicApprox::unit() const {
    if (kind_ != Kind::approx) throw std::logic_error("unit(): not an approx value");
    return unit_;
}
int PadicApprox::precision() const { return prec_; }

PadicApprox PadicApprox::operator*(const PadicApprox& o) const {
    if (kind_ == Kind::exact_zero || o.kind_ == Kind::exact_zero) return exact_zero(p_);
    PadicApprox a;
    a.p_ = p_;
    if (kind_ == Kind::vanishing || o.kind_ == Kind::vanishing) {
        // product vanishes mod p^(K1 + floor2): K = known-zero depth, floor = valuation lower bound
        long long floor1 = kind_ == Kind::vanishing ? val_ + prec_ : val_;
        long long floor2 = o.kind_ == Kind::vanishing ? o.val_ + o.prec_ : o.val_;
        a.kind_ = Kind::vanishing;
        a.val_ = floor1 + floor2 - 1;
        a.prec_ = 1;
        return a;
    }
    a.kind_ = Kind::approx;
    a.val_ = val_ + o.val_;
    a.prec_ = std::min(prec_, o.prec_);
    Int pk = pow_int(p_, a.prec_);
    a.unit_ = unit_ % pk * (o.unit_ % pk) % pk;
    return a;
}

PadicApprox PadicApprox::operator+(const PadicApprox& o) const {
    if (kind_ == Kind::exact_zero) return o;
    if (o.kind_ == Kind::exact_zero) return *this;
    // known-residue form: value == r * 1, r known mod p^N with N = val+prec
    auto known = [&](const PadicApprox& a, long long base) -> Int {
        if (a.kind_ == Kind::vanishing) return 0;
        return a.unit_ * pow_int(p_, (int)(a.val_ - base));
    };
    long long N1 = val_ + prec_, N2 = o.val_ + o.prec_;
    long long base1 = kind_ == Kind::vanishing ? val_ + prec_ : val_;
    long long base2 = o.kind_ == Kind::vanishing ? o.val_ + o.prec_ : o.val_;
    long long base = std::min(base1, base2);
    long long N = std::min(N1, N2);
    if (N <= base) {
        // no information beyond "== 0 mod p^N"
        PadicApprox a;
        a.p_ = p_;
        a.kind_ = Kind::vanishing;
        a.val_ = N - 1;
        a.prec_ = 1;
        return a;
    }
    Int r = known(*this, base) + known(o, base);
    PadicApprox a;
    a.p_ = p_;
    a.normalize(r, (int)(N - base), base);
    return a;
}

PadicApprox PadicApprox::operator-() const {
    PadicApprox a = *this;
    if (a.kind_ == Kind::approx) {
        Int pk = pow_int(p_, a.prec_);
        a.unit_ = (pk - a.unit_ % pk) % pk;
    }
    return a;
}

SquareClass PadicApprox::square_class() const {
    if (kind_ == Kind::exact_zero) throw std::invalid_argument("square_class of zero");
    if (kind_ == Kind::vanishing) return SquareClass::undetermined;
    if (p_ == 2) {
        if (prec_ < 3) return SquareClass::undetermined;
        if (val_ % 2 != 0) return SquareClass::nonsquare;
        return unit_ % 8 == 1 ? SquareClass::square : SquareClass::nonsquare;
    }
    if (prec_ < 1) return SquareClass::undetermined;
    if (val_ % 2 != 0) return SquareClass::nonsquare;
    return legendre(unit_, p_) == 1 ? SquareClass::square : SquareClass::nonsquare;
}

SquareClass square_class(const PadicApprox& a) { return a.square_class(); }

// ---------------------------------------------------------------------------

ResidueWitness certify_witness(const PolySystemMod& F, long long p, int m, std::array<u64, 3> pt) {
    ResidueWitness w;
    w.prime = p;
    w.exponent = m;
    w.point = pt;
    u64 pm = pow_u64((u64)p, m);
    if (F.eval(pt[0], pt[1], pt[2], pm) != 0)
        throw std::invalid_argument("certify_witness: point does not satisfy F == 0 mod p^m");
    auto g = F.grad(pt[0], pt[1], pt[2], pm);
    long long e = m;  // "vanishes mod p^m" counts as valuation >= m
    for (int i = 0; i < 3; ++i) {
        long long v = g[i] == 0 ? m : val_u64(g[i], (u64)p);
        e = std::min(e, v);
    }
    w.lift_margin = m - 2 * e;
    w.liftable = w.lift_margin >= 1;
    return w;
}

std::array<u64, 3> hensel_lift(const PolySystemMod& F, const ResidueWitness& w, int N) {
    const long long p = w.prime;
    const int m = w.exponent;
    u64 pm = pow_u64((u64)p, m);
    if (F.eval(w.point[0], w.point[1], w.point[2], pm) != 0)
        throw std::invalid_argument("hensel_lift: witness does not satisfy F == 0 mod p^m");
    auto g0 = F.grad(w.point[0], w.point[1], w.point[2], pm);
    long long e = m;
    int coord = -1;
    for (int i = 0; i < 3; ++i) {
        long long v = g0[i] == 0 ? m : val_u64(g0[i], (u64)p);
        if (v < e) { e = v; coord = i; }
    }
    if (coord == -1) throw singular_point_error("all partial derivatives vanish mod p^" + std::to_string(m));
    if (m <= 2 * e)
        throw newton_condition_error("not certified liftable: m = " + std::to_string(m) +
                                     " <= 2e = " + std::to_string(2 * e));
    if (N <= m) {
        u64 pN = pow_u64((u64)p, N);
        return {w.point[0] % pN, w.point[1] % pN, w.point[2] % pN};
    }

    const u64 P = pow_u64((u64)p, N + (int)e);
    const u64 pe = pow_u64((u64)p, (int)e);
    std::array<u64, 3> cur = w.point;
    long long curm = m;
    while (curm < N) {
        u64 fv = F.eval(cur[0], cur[1], cur[2], P);
        if (fv == 0) break;
        u64 gv = F.grad(cur[0], cur[1], cur[2], P)[coord];
        u64 ghat = gv / pe;                        // unit mod P/pe
        u64 Pq = P / pe;
        u64 winv = inv_mod_u64(ghat % Pq, Pq);
        u64 delta = mulmod(fv / pe % Pq, winv, Pq);
        delta = (Pq - delta) % Pq;                 // - F / dF
        cur[coord] = addmod(cur[coord], delta, P);
        curm = std::min<long long>(2 * (curm - e), N);
    }
    u64 pN = pow_u64((u64)p, N);
    u64 check = F.eval(cur[0] % pN, cur[1] % pN, cur[2] % pN, pN);
    if (check != 0) throw std::logic_error("hensel_lift: postcondition failed");
    return {cur[0] % pN, cur[1] % pN, cur[2] % pN};
}

}  // namespace mk3
