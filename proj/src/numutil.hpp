#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mk3 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline std::string to_string(const Int& n) { return n.str(); }
inline std::string to_string(const Rat& q) {
    if (q.denominator() == 1) return q.numerator().str();
    return q.numerator().str() + "/" + q.denominator().str();
}

// Parse "a" or "a/b" into a rational.
Rat parse_rat(const std::string& s);

struct factor_too_large : std::runtime_error {
    explicit factor_too_large(const std::string& what) : std::runtime_error(what) {}
};

// Trial-division factorization. Inputs are desk scale; a composite cofactor
// with more digits than `digit_bound` raises factor_too_large.
std::vector<std::pair<Int, int>> factorize(Int n, int digit_bound = 24);

bool is_prime(const Int& n);

// v_p(n) for n != 0.
long long valuation_int(Int n, const Int& p);

// Legendre symbol (a|p) for odd prime p: +1, -1, or 0.
int legendre(Int a, const Int& p);

Int pow_mod(Int base, Int exp, const Int& mod);

// ---- u64 modular arithmetic for hot scan loops (modulus < 2^62) ----
using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }
inline u64 addmod(u64 a, u64 b, u64 m) { u64 s = a + b; return s >= m || s < a ? s - m : s; }
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

// p^e as u64; throws if it would exceed 2^62.
u64 pow_u64(u64 p, int e);

inline long long val_u64(u64 n, u64 p) {
    if (n == 0) return -1;  // caller treats as "at least modulus depth"
    long long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

u64 inv_mod_u64(u64 a, u64 m);  // a invertible mod m (m a prime power, gcd(a,m)=1)

}  // namespace mk3
