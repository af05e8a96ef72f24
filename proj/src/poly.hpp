#pragma once

#include "numutil.hpp"

#include <array>
#include <map>

namespace mk3 {

// Sparse exact polynomial in Q[x, y, z, k]. Small: identity checking only.
class Poly {
public:
    using Expo = std::array<int, 4>;  // exponents of x, y, z, k

    Poly() = default;
    static Poly constant(const Rat& c);
    static Poly var(int i);  // 0=x, 1=y, 2=z, 3=k

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly operator-() const { return *this * Rat(-1); }

    bool is_zero() const { return terms_.empty(); }
    int deg_k() const;

    Rat eval(const Rat& x, const Rat& y, const Rat& z, const Rat& k) const;
    Poly d(int i) const;  // partial derivative

    // Divide by a polynomial of the form  R(x,y,z) - k  (degree 1 in k, leading
    // coefficient -1). Returns {quotient, remainder}; remainder has k-degree 0
    // and equals this with k := R substituted.
    std::pair<Poly, Poly> div_by_family(const Poly& family) const;

    const std::map<Expo, Rat>& terms() const { return terms_; }
    std::string str() const;

private:
    std::map<Expo, Rat> terms_;
    void add_term(const Expo& e, const Rat& c);
};

}  // namespace mk3
