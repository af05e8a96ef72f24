#include "hilbert.hpp"

#include <set>

namespace mk3 {

Place Place::prime(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("Place::prime: " + p.str() + " is not prime");
    return Place(p, false);
}

namespace {

int eps2(const Int& u) {  // (u-1)/2 mod 2 for odd u
    Int m = u % 4;
    if (m < 0) m += 4;
    return m == 1 ? 0 : 1;
}
int omega2(const Int& u) {  // (u^2-1)/8 mod 2 for odd u
    Int m = u % 8;
    if (m < 0) m += 8;
    return (m == 1 || m == 7) ? 0 : 1;
}

}  // namespace

HalfInvariant hilbert_symbol_units(long long aval, const Int& aunit, long long bval, const Int& bunit,
                                   const Int& p) {
    if (p == 2) {
        int h = (eps2(aunit) * eps2(bunit) + (int)((aval % 2 + 2) % 2) * omega2(bunit) +
                 (int)((bval % 2 + 2) % 2) * omega2(aunit)) %
                2;
        return {h};
    }
    int eps_p = (int)(((p - 1) / 2) % 2);
    int na = legendre(aunit, p) == 1 ? 0 : 1;
    int nb = legendre(bunit, p) == 1 ? 0 : 1;
    long long al = (aval % 2 + 2) % 2, be = (bval % 2 + 2) % 2;
    int h = (int)((al * be * eps_p + be * na + al * nb) % 2);
    return {h};
}

HalfInvariant hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == Rat(0) || b == Rat(0)) throw std::invalid_argument("hilbert_symbol: zero slot");
    if (v.is_real()) return {a < Rat(0) && b < Rat(0) ? 1 : 0};
    const Int& p = v.p();
    int prec = p == 2 ? 3 : 1;
    PadicApprox pa = PadicApprox::from_rational(a, p, prec);
    PadicApprox pb = PadicApprox::from_rational(b, p, prec);
    return hilbert_symbol_units(pa.val(), pa.unit(), pb.val(), pb.unit(), p);
}

HalfInvariant hilbert_symbol_padic(const PadicApprox& a, const Rat& b, const Int& p) {
    if (b == Rat(0)) throw std::invalid_argument("hilbert_symbol_padic: zero slot");
    if (a.is_exact_zero()) throw std::invalid_argument("hilbert_symbol_padic: zero slot");
    int needed = p == 2 ? 3 : 1;
    if (a.kind() == PadicApprox::Kind::vanishing)
        throw precision_error("first slot vanishes to known precision; deepen the witness", needed);
    if (a.precision() < needed)
        throw precision_error("unit class undetermined at this precision", needed - a.precision());
    long long bv = valuation(b, p).v;
    PadicApprox bb = PadicApprox::from_rational(b, p, needed);
    return hilbert_symbol_units(a.val(), a.unit(), bv, bb.unit(), p);
}

bool product_formula_check(const Rat& a, const Rat& b) {
    if (a == Rat(0) || b == Rat(0)) throw std::invalid_argument("product_formula_check: zero input");
    Int m = 2 * a.numerator() * a.denominator() * b.numerator() * b.denominator();
    if (m < 0) m = -m;
    std::set<Int> primes;
    primes.insert(2);
    for (auto& [q, e] : factorize(m)) primes.insert(q);
    int total = hilbert_symbol(a, b, Place::real()).halves;
    for (const Int& q : primes) total += hilbert_symbol(a, b, Place::prime(q)).halves;
    return total % 2 == 0;
}

}  // namespace mk3
