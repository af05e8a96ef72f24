#pragma once

#include "numutil.hpp"

#include <array>
#include <optional>

namespace mk3 {

enum class SquareClass { square, nonsquare, undetermined };

struct Valuation {
    bool infinite = false;  // set only for exact zero input
    long long v = 0;
};

// v_p of an exact rational; zero maps to the distinguished infinite result.
Valuation valuation(const Rat& n, const Int& p);

struct precision_error : std::runtime_error {
    int extra_depth;  // minimal additional unit digits the caller must supply
    precision_error(const std::string& what, int extra) : std::runtime_error(what), extra_depth(extra) {}
};

// A p-adic number known to finite precision: exact zero, or p^val * unit with
// `prec` known unit digits, or only "== 0 mod p^N" (valuation not yet resolved).
class PadicApprox {
public:
    enum class Kind { exact_zero, approx, vanishing };

    static PadicApprox from_rational(const Rat& x, const Int& p, int precision);
    static PadicApprox exact_zero(const Int& p);
    // value = residue * p^shift where residue is known mod p^modexp (residue may be divisible by p)
    static PadicApprox from_scaled_residue(const Int& p, const Int& residue, int modexp, long long shift);

    Kind kind() const { return kind_; }
    const Int& prime() const { return p_; }
    bool is_exact_zero() const { return kind_ == Kind::exact_zero; }
    long long val() const;           // requires kind approx
    const Int& unit() const;          // requires kind approx
    int precision() const;            // unit digits (approx) / known-zero depth (vanishing)

    PadicApprox operator*(const PadicApprox& o) const;
    PadicApprox operator+(const PadicApprox& o) const;
    PadicApprox operator-() const;
    PadicApprox operator-(const PadicApprox& o) const { return *this + (-o); }

    // Squareness in Q_p^x. Exact zero raises; insufficient precision yields undetermined.
    SquareClass square_class() const;

private:
    PadicApprox() = default;
    void normalize(const Int& known_residue, int modexp, long long shift);

    Int p_;
    Kind kind_ = Kind::exact_zero;
    long long val_ = 0;
    Int unit_ = 0;
    int prec_ = 0;
};

SquareClass square_class(const PadicApprox& a);

// ---- multivariate Hensel lifting on residue systems -------------------------

// Evaluation interface for one polynomial F(x,y,z) with integer coefficients,
// working modulo u64 prime powers. Implemented by the surfaces module.
struct PolySystemMod {
    virtual ~PolySystemMod() = default;
    virtual u64 eval(u64 x, u64 y, u64 z, u64 mod) const = 0;
    virtual std::array<u64, 3> grad(u64 x, u64 y, u64 z, u64 mod) const = 0;
};

struct ResidueWitness {
    long long prime = 0;
    int exponent = 0;                 // m: point satisfies F == 0 mod p^m
    std::array<u64, 3> point{};       // residues mod p^m
    bool liftable = false;            // Newton condition m > 2e
    long long lift_margin = 0;        // m - 2e
};

struct newton_condition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct singular_point_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Certify a witness in place: recomputes e = min_i v_p(dF_i) at the point and the
// Newton margin. Returns the filled-in witness.
ResidueWitness certify_witness(const PolySystemMod& F, long long p, int m, std::array<u64, 3> pt);

// Lift w to a solution mod p^N. Deterministic: corrects along the coordinate of
// minimal derivative valuation, lowest index on ties. The result agrees with
// w.point mod p^{m-e}.
std::array<u64, 3> hensel_lift(const PolySystemMod& F, const ResidueWitness& w, int N);

}  // namespace mk3
