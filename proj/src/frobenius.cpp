#include "frobenius.hpp"

namespace mk3 {

namespace {

struct ProjPoint {
    long long a, b;  // [a : b]
};

std::vector<ProjPoint> proj_line(const SmallField& F) {
    std::vector<ProjPoint> pts;
    pts.push_back({1, 0});
    for (long long a = 0; a < F.q(); ++a) pts.push_back({a, 1});
    return pts;
}

}  // namespace

long long count_points(long long k_residue, long long p, int n, FamilyId fam, int fiber_axis,
                       long long ceiling) {
    long long q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    if (q > ceiling) throw std::invalid_argument("count_points: p^n exceeds the configured ceiling");
    SmallField F(p, n);
    auto co = family_coeffs(fam);
    long long cpair = ((co.pair % p) + p) % p;
    long long ctriple = ((co.triple % p) + p) % p;
    long long km = ((k_residue % p) + p) % p;
    auto P1 = proj_line(F);

    // tridegree-(2,2,2) form in the homogeneous pairs u = (x,r), v = (y,s), w = (z,t):
    //   x^2 s^2 t^2 + y^2 r^2 t^2 + z^2 r^2 s^2
    // + pair (x^2 y^2 t^2 + y^2 z^2 r^2 + z^2 x^2 s^2) + triple x^2 y^2 z^2 - k r^2 s^2 t^2
    auto eval = [&](long long x, long long r, long long y, long long s, long long z, long long t) {
        long long x2 = F.mul(x, x), r2 = F.mul(r, r), y2 = F.mul(y, y);
        long long s2 = F.mul(s, s), z2 = F.mul(z, z), t2 = F.mul(t, t);
        long long acc = F.mul(x2, F.mul(s2, t2));
        acc = F.add(acc, F.mul(y2, F.mul(r2, t2)));
        acc = F.add(acc, F.mul(z2, F.mul(r2, s2)));
        long long mid = F.add(F.mul(x2, F.mul(y2, t2)),
                              F.add(F.mul(y2, F.mul(z2, r2)), F.mul(z2, F.mul(x2, s2))));
        acc = F.add(acc, F.mul(F.scalar(cpair), mid));
        acc = F.add(acc, F.mul(F.scalar(ctriple), F.mul(x2, F.mul(y2, z2))));
        acc = F.sub(acc, F.mul(F.scalar(km), F.mul(r2, F.mul(s2, t2))));
        return acc;
    };

    // smoothness scan: a point where all six partials vanish is a singular point
    // (char != 2: the Euler relations then force the value to vanish as well)
    auto deval = [&](long long x, long long r, long long y, long long s, long long z, long long t,
                     int var) {
        // derivative with respect to var in {x,r,y,s,z,t}; every variable appears squared,
        // so d/dx f = 2x * (coefficient of x^2 monomials)
        long long x2 = F.mul(x, x), r2 = F.mul(r, r), y2 = F.mul(y, y);
        long long s2 = F.mul(s, s), z2 = F.mul(z, z), t2 = F.mul(t, t);
        long long inner = 0;
        switch (var) {
            case 0:  // x
                inner = F.add(F.mul(s2, t2), F.add(F.mul(F.scalar(cpair), F.add(F.mul(y2, t2), F.mul(z2, s2))),
                                                   F.mul(F.scalar(ctriple), F.mul(y2, z2))));
                return F.mul(F.scalar(2), F.mul(x, inner));
            case 1:  // r
                inner = F.add(F.mul(y2, t2), F.add(F.mul(z2, s2), F.mul(F.scalar(cpair), F.mul(y2, z2))));
                inner = F.sub(inner, F.mul(F.scalar(km), F.mul(s2, t2)));
                return F.mul(F.scalar(2), F.mul(r, inner));
            case 2:  // y
                inner = F.add(F.mul(r2, t2), F.add(F.mul(F.scalar(cpair), F.add(F.mul(x2, t2), F.mul(z2, r2))),
                                                   F.mul(F.scalar(ctriple), F.mul(x2, z2))));
                return F.mul(F.scalar(2), F.mul(y, inner));
            case 3:  // s
                inner = F.add(F.mul(x2, t2), F.add(F.mul(z2, r2), F.mul(F.scalar(cpair), F.mul(z2, x2))));
                inner = F.sub(inner, F.mul(F.scalar(km), F.mul(r2, t2)));
                return F.mul(F.scalar(2), F.mul(s, inner));
            case 4:  // z
                inner = F.add(F.mul(r2, s2), F.add(F.mul(F.scalar(cpair), F.add(F.mul(y2, r2), F.mul(x2, s2))),
                                                   F.mul(F.scalar(ctriple), F.mul(x2, y2))));
                return F.mul(F.scalar(2), F.mul(z, inner));
            case 5:  // t
                inner = F.add(F.mul(x2, s2), F.add(F.mul(y2, r2), F.mul(F.scalar(cpair), F.mul(x2, y2))));
                inner = F.sub(inner, F.mul(F.scalar(km), F.mul(r2, s2)));
                return F.mul(F.scalar(2), F.mul(t, inner));
        }
        throw std::logic_error("deval");
    };

    long long total = 0;
    for (auto& u : P1)
        for (auto& v : P1)
            for (auto& w : P1) {
                long long c[6];
                switch (fiber_axis) {
                    case 0: c[0] = u.a; c[1] = u.b; c[2] = v.a; c[3] = v.b; c[4] = w.a; c[5] = w.b; break;
                    case 1: c[0] = w.a; c[1] = w.b; c[2] = u.a; c[3] = u.b; c[4] = v.a; c[5] = v.b; break;
                    default: c[0] = v.a; c[1] = v.b; c[2] = w.a; c[3] = w.b; c[4] = u.a; c[5] = u.b; break;
                }
                if (eval(c[0], c[1], c[2], c[3], c[4], c[5]) != 0) continue;
                ++total;
                bool singular = true;
                for (int var = 0; var < 6 && singular; ++var)
                    if (deval(c[0], c[1], c[2], c[3], c[4], c[5], var) != 0) singular = false;
                if (singular)
                    throw singular_reduction("singular point on the reduction at ([" + std::to_string(c[0]) +
                                             ":" + std::to_string(c[1]) + "],[" + std::to_string(c[2]) + ":" +
                                             std::to_string(c[3]) + "],[" + std::to_string(c[4]) + ":" +
                                             std::to_string(c[5]) + "]) over F_" + std::to_string(q));
            }
    return total;
}

CountTable count_table(long long k_residue, long long p, int max_n, FamilyId fam) {
    CountTable t;
    t.p = p;
    for (int n = 1; n <= max_n; ++n) t.counts.push_back({n, count_points(k_residue, p, n, fam)});
    return t;
}

std::vector<Rat> quotient_traces(const CountTable& counts) {
    std::vector<Rat> out;
    for (auto& [n, cnt] : counts.counts) {
        Int pn = 1;
        for (int i = 0; i < n; ++i) pn *= counts.p;
        int tn = n % 2 == 0 ? 18 : 4;
        out.push_back(Rat(cnt, 1) / Rat(pn) - Rat(pn) - Rat(Int(1), pn) - Rat(tn));
    }
    return out;
}

CharPoly newton_charpoly(const std::vector<Rat>& traces) {
    if (traces.size() < 2) throw std::invalid_argument("newton_charpoly: need at least two traces");
    Rat p1 = traces[0], p2 = traces[1];
    Rat e1 = p1;
    Rat e2 = (e1 * p1 - p2) / 2;
    if (e2 == Rat(0))
        throw sign_undetermined("middle coefficient vanishes; functional-equation sign undetermined");
    // sign +1: palindrome t^4 f(1/t) = f(t), so e4 = 1 and e3 = e1
    Rat e3 = e1, e4(1);
    if (traces.size() >= 3) {
        Rat p3 = e1 * p2 - e2 * p1 + Rat(3) * e3;
        if (p3 != traces[2])
            throw trace_inconsistent("third trace " + to_string(traces[2]) +
                                     " inconsistent with reconstruction " + to_string(p3));
    }
    CharPoly cp;
    cp.quotient = {Rat(1), -e1, e2, -e3, e4};
    return cp;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    RatPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

static void poly_trim(RatPoly& a) {
    while (a.size() > 1 && a.back() == Rat(0)) a.pop_back();
}

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a0, const RatPoly& b0) {
    RatPoly a = a0, b = b0;
    poly_trim(a);
    poly_trim(b);
    if (b.size() == 1 && b[0] == Rat(0)) throw std::invalid_argument("poly division by zero");
    if (a.size() < b.size()) return {{Rat(0)}, a};
    RatPoly q(a.size() - b.size() + 1, Rat(0));
    for (int i = (int)a.size() - 1; i >= (int)b.size() - 1; --i) {
        if (a[i] == Rat(0)) continue;
        Rat c = a[i] / b.back();
        int shift = i - (int)b.size() + 1;
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
    poly_trim(a);
    poly_trim(q);
    return {q, a};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    poly_trim(a);
    poly_trim(b);
    while (!(b.size() == 1 && b[0] == Rat(0))) {
        auto [q, r] = poly_divmod(a, b);
        a = b;
        b = r;
    }
    // normalize monic
    if (!(a.size() == 1 && a[0] == Rat(0))) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

RatPoly cyclotomic(int m) {
    switch (m) {
        case 1: return {Rat(-1), Rat(1)};
        case 2: return {Rat(1), Rat(1)};
        case 3: return {Rat(1), Rat(1), Rat(1)};
        case 4: return {Rat(1), Rat(0), Rat(1)};
        case 5: return {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)};
        case 6: return {Rat(1), Rat(-1), Rat(1)};
        case 8: return {Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)};
        case 10: return {Rat(1), Rat(-1), Rat(1), Rat(-1), Rat(1)};
        case 12: return {Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)};
    }
    throw std::invalid_argument("cyclotomic: unsupported index");
}

int count_unity_eigenvalues(const RatPoly& f0) {
    RatPoly f = f0;
    poly_trim(f);
    int total = 0;
    for (int m : {1, 2, 3, 4, 5, 6, 8, 10, 12}) {
        RatPoly phi = cyclotomic(m);
        if (phi.size() > f.size()) continue;
        while (true) {
            auto [q, r] = poly_divmod(f, phi);
            poly_trim(r);
            if (!(r.size() == 1 && r[0] == Rat(0))) break;
            total += (int)phi.size() - 1;
            f = q;
            if (f.size() < phi.size()) break;
        }
    }
    return total;
}

RatPoly full_charpoly(const CharPoly& cp) {
    RatPoly f = {cp.quotient[4], cp.quotient[3], cp.quotient[2], cp.quotient[1], cp.quotient[0]};
    RatPoly tm1 = {Rat(-1), Rat(1)}, tp1 = {Rat(1), Rat(1)};
    for (int i = 0; i < cp.exp_t_minus_1; ++i) f = poly_mul(f, tm1);
    for (int i = 0; i < cp.exp_t_plus_1; ++i) f = poly_mul(f, tp1);
    return f;
}

FrobeniusReport frobenius_verify(long long p, long long kmod, int max_n) {
    FrobeniusReport rep;
    rep.table = count_table(kmod, p, max_n);
    rep.traces = quotient_traces(rep.table);
    rep.charpoly = newton_charpoly(rep.traces);
    RatPoly quot = {rep.charpoly.quotient[4], rep.charpoly.quotient[3], rep.charpoly.quotient[2],
                    rep.charpoly.quotient[1], rep.charpoly.quotient[0]};
    rep.unity_roots_quotient = count_unity_eigenvalues(quot);
    rep.unity_roots_full = count_unity_eigenvalues(full_charpoly(rep.charpoly));
    rep.lefschetz_ok = true;
    for (size_t i = 0; i < rep.table.counts.size(); ++i) {
        auto [n, cnt] = rep.table.counts[i];
        Int pn = 1, p2n = 1;
        for (int t = 0; t < n; ++t) pn *= p;
        p2n = pn * pn;
        Rat tn(n % 2 == 0 ? 18 : 4);
        Rat recon = Rat(1) + Rat(p2n) + Rat(pn) * (tn + rep.traces[i]);
        if (recon != Rat(Int(cnt))) rep.lefschetz_ok = false;
    }
    return rep;
}

}  // namespace mk3
