#pragma once

#include "numutil.hpp"

#include <vector>

namespace mk3 {

// Arithmetic in F_{p^n} for tiny q = p^n (point-counting scale). Elements are
// indices 0..q-1 encoding base-p coefficient vectors; full mul/add tables.
class SmallField {
public:
    SmallField(long long p, int n);

    long long p() const { return p_; }
    int n() const { return n_; }
    long long q() const { return q_; }

    long long add(long long a, long long b) const { return add_[a * q_ + b]; }
    long long sub(long long a, long long b) const { return add_[a * q_ + neg_[b]]; }
    long long mul(long long a, long long b) const { return mul_[a * q_ + b]; }
    long long neg(long long a) const { return neg_[a]; }
    long long scalar(long long c) const;
    bool is_square(long long a) const { return sq_[a]; }

private:
    long long p_;
    int n_;
    long long q_;
    std::vector<long long> modpoly_;  // monic irreducible, coefficients c_0..c_{n-1}
    std::vector<long long> add_, mul_, neg_;
    std::vector<char> sq_;
};

}  // namespace mk3
