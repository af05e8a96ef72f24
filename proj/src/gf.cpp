#include "gf.hpp"

namespace mk3 {

namespace {

// search for a monic irreducible of degree n over F_p (no roots suffices for n <= 3;
// for n >= 4 also exclude degree-2 factors by gcd with x^{p^2}-x style checks --
// counting stays at n <= 3, so plain root exclusion plus a quadratic-factor scan)
std::vector<long long> find_irreducible(long long p, int n) {
    std::vector<long long> c(n, 0);
    auto has_root = [&](const std::vector<long long>& poly) {
        for (long long a = 0; a < p; ++a) {
            long long w = 1;  // Horner over the monic polynomial
            for (int i = n - 1; i >= 0; --i) w = (w * a % p + poly[i]) % p;
            if (w == 0) return true;
        }
        return false;
    };
    auto divisible_by_quadratic = [&](const std::vector<long long>& poly) {
        if (n < 4) return false;
        for (long long b = 0; b < p; ++b)
            for (long long cc = 0; cc < p; ++cc) {
                // divide monic poly by x^2 + b x + cc and test zero remainder
                std::vector<long long> r(poly.begin(), poly.end());
                r.push_back(1);
                for (int d = n; d >= 2; --d) {
                    long long lead = r[d] % p;
                    if (lead == 0) continue;
                    r[d] = 0;
                    r[d - 1] = ((r[d - 1] - lead * b) % p + p) % p;
                    r[d - 2] = ((r[d - 2] - lead * cc) % p + p) % p;
                }
                if (r[0] % p == 0 && r[1] % p == 0) {
                    // x^2+bx+cc divides; only a problem if that quadratic is irreducible
                    long long disc = ((b * b - 4 * cc) % p + p) % p;
                    bool sq = false;
                    for (long long t = 0; t < p; ++t)
                        if (t * t % p == disc) sq = true;
                    if (!sq) return true;
                }
            }
        return false;
    };
    while (true) {
        if (!has_root(c) && !divisible_by_quadratic(c)) return c;
        int i = 0;
        while (i < n && ++c[i] == p) c[i++] = 0;
        if (i == n) throw std::logic_error("no irreducible found");
    }
}

}  // namespace

SmallField::SmallField(long long p, int n) : p_(p), n_(n) {
    q_ = 1;
    for (int i = 0; i < n; ++i) {
        q_ *= p;
        if (q_ > 4096) throw std::invalid_argument("SmallField: q exceeds the enumeration ceiling");
    }
    modpoly_ = n > 1 ? find_irreducible(p, n) : std::vector<long long>{0};

    auto digits = [&](long long a) {
        std::vector<long long> d(n_);
        for (int i = 0; i < n_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    };
    auto index = [&](const std::vector<long long>& d) {
        long long a = 0;
        for (int i = n_ - 1; i >= 0; --i) a = a * p_ + d[i];
        return a;
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    for (long long a = 0; a < q_; ++a) {
        auto da = digits(a);
        std::vector<long long> dn(n_);
        for (int i = 0; i < n_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = index(dn);
        for (long long b = 0; b < q_; ++b) {
            auto db = digits(b);
            std::vector<long long> ds(n_);
            for (int i = 0; i < n_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = index(ds);
            // multiply polynomials then reduce by the monic modulus
            std::vector<long long> prod(2 * n_ - 1, 0);
            for (int i = 0; i < n_; ++i)
                if (da[i])
                    for (int j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (int d = 2 * n_ - 2; d >= n_; --d) {
                long long c = prod[d];
                if (!c) continue;
                prod[d] = 0;
                for (int i = 0; i < n_; ++i)
                    prod[d - n_ + i] = ((prod[d - n_ + i] - c * modpoly_[i]) % p_ + p_) % p_;
            }
            std::vector<long long> dm(prod.begin(), prod.begin() + n_);
            mul_[a * q_ + b] = index(dm);
        }
    }
    sq_.assign(q_, 0);
    for (long long a = 0; a < q_; ++a) sq_[mul_[a * q_ + a]] = 1;
}

long long SmallField::scalar(long long c) const {
    long long r = ((c % p_) + p_) % p_;
    return r;  // degree-0 element: identical index encoding
}

}  // namespace mk3
