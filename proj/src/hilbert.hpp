#pragma once

#include "padic.hpp"

#include <variant>

namespace mk3 {

// A place of Q: the real place or a verified prime.
class Place {
public:
    static Place real() { return Place(Int(0), true); }
    static Place prime(const Int& p);

    bool is_real() const { return real_; }
    const Int& p() const { return p_; }
    std::string str() const { return real_ ? "real" : p_.str(); }
    bool operator==(const Place& o) const { return real_ == o.real_ && p_ == o.p_; }

private:
    Place(Int p, bool real) : p_(std::move(p)), real_(real) {}
    Int p_;
    bool real_;
};

// Element of (1/2)Z / Z, written additively: 0 or 1/2.
struct HalfInvariant {
    int halves = 0;  // 0 or 1
    HalfInvariant operator+(HalfInvariant o) const { return {(halves + o.halves) % 2}; }
    bool operator==(HalfInvariant o) const { return halves == o.halves; }
    bool zero() const { return halves == 0; }
    std::string str() const { return halves ? "1/2" : "0"; }
};

// Classical closed-form local Hilbert symbol (a,b)_v, additively valued in {0, 1/2}.
HalfInvariant hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// Same with the first slot a finite-precision p-adic value. Agrees with the exact
// symbol whenever the approximation is precise enough; otherwise raises
// precision_error with the missing depth.
HalfInvariant hilbert_symbol_padic(const PadicApprox& a, const Rat& b, const Int& p);

// Internal form used by the scan engines: a = p^aval * aunit, b = p^bval * bunit.
HalfInvariant hilbert_symbol_units(long long aval, const Int& aunit, long long bval, const Int& bunit,
                                   const Int& p);

// Sum of (a,b)_v over the real place and all primes dividing 2ab is 0 (reciprocity).
bool product_formula_check(const Rat& a, const Rat& b);

}  // namespace mk3
