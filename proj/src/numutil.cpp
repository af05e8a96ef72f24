#include "numutil.hpp"

namespace mk3 {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s), 1);
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational: " + s);
    return Rat(num, den);
}

std::vector<std::pair<Int, int>> factorize(Int n, int digit_bound) {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    if (n < 0) n = -n;
    std::vector<std::pair<Int, int>> out;
    for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
        if (d > 2000000) {
            // remaining cofactor is either prime or too hard for trial division
            break;
        }
    }
    if (n > 1) {
        if (!is_prime(n)) {
            if ((int)n.str().size() > digit_bound)
                throw factor_too_large("factorization too large: cofactor " + n.str());
            // keep dividing; n has a factor above the scan cutoff
            for (Int d = 2000001; d * d <= n; d += 2) {
                if (n % d == 0) {
                    int e = 0;
                    while (n % d == 0) { n /= d; ++e; }
                    out.emplace_back(d, e);
                }
            }
        }
        if (n > 1) out.emplace_back(n, 1);
    }
    return out;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d : {Int(2), Int(3), Int(5), Int(7), Int(11), Int(13), Int(17), Int(19), Int(23),
                  Int(29), Int(31), Int(37)}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit-ish sizes; desk scale inputs
    Int d = n - 1;
    int r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    for (Int a : {Int(2), Int(3), Int(5), Int(7), Int(11), Int(13), Int(17), Int(19), Int(23),
                  Int(29), Int(31), Int(37)}) {
        Int x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = x * x % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

long long valuation_int(Int n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    if (n < 0) n = -n;
    long long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

Int pow_mod(Int base, Int exp, const Int& mod) {
    Int r = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp % 2 == 1) r = r * base % mod;
        base = base * base % mod;
        exp /= 2;
    }
    return r;
}

int legendre(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    Int r = pow_mod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

u64 pow_u64(u64 p, int e) {
    u64 r = 1;
    const u64 cap = (u64)1 << 62;
    for (int i = 0; i < e; ++i) {
        if (r > cap / p) throw std::overflow_error("prime power exceeds u64 scan range");
        r *= p;
    }
    return r;
}

u64 inv_mod_u64(u64 a, u64 m) {
    // extended euclid on signed 128-bit
    __int128 t = 0, newt = 1, r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("inv_mod_u64: not invertible");
    if (t < 0) t += m;
    return (u64)t;
}

}  // namespace mk3
