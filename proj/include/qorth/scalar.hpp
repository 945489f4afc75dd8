// Exact coefficient field K = Q(i)(r)[w]/(w^2 - 1 - r^4).
//
// Every coefficient in the engine lives here. r plays the role of a formal
// fourth root of the deformation parameter (q = r^4, s = q^{1/2} = r^2), and
// w is a square root of 1 + r^4, which makes eta = w/r satisfy
// eta^2 = r^2 + r^{-2}. Elements are kept in a unique canonical form so that
// equality is plain component comparison and printing is reproducible.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qorth {

// Gaussian rational re + im*i with arbitrary precision components.
struct GaussRational {
    mpq_class re, im;

    GaussRational() : re(0), im(0) {}
    GaussRational(long n) : re(n), im(0) {}
    GaussRational(mpq_class real, mpq_class imag) : re(std::move(real)), im(std::move(imag)) {}

    static GaussRational i() { return GaussRational(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussRational conj_i() const { return GaussRational(re, -im); }

    GaussRational operator-() const { return GaussRational(-re, -im); }
    GaussRational operator+(const GaussRational& o) const { return {re + o.re, im + o.im}; }
    GaussRational operator-(const GaussRational& o) const { return {re - o.re, im - o.im}; }
    GaussRational operator*(const GaussRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRational inverse() const;
    GaussRational operator/(const GaussRational& o) const { return *this * o.inverse(); }

    bool operator==(const GaussRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRational& o) const { return !(*this == o); }
};

// Dense univariate polynomial in r over GaussRational, no trailing zeros.
class RPoly {
public:
    RPoly() = default;
    explicit RPoly(GaussRational c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    static RPoly monomial(GaussRational c, int degree);
    static RPoly one() { return RPoly(GaussRational(1)); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const GaussRational& leading() const { return c_.back(); }
    GaussRational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : GaussRational();
    }

    RPoly operator+(const RPoly& o) const;
    RPoly operator-(const RPoly& o) const;
    RPoly operator*(const RPoly& o) const;
    RPoly operator-() const;

    // Euclidean division: *this = q*d + rem with deg(rem) < deg(d). d != 0.
    void divrem(const RPoly& d, RPoly& quot, RPoly& rem) const;

    static RPoly gcd_monic(const RPoly& x, const RPoly& y);

    RPoly monic() const;                 // divide by leading coefficient
    RPoly conj_i() const;                // i -> -i on coefficients
    RPoly reversed() const;              // r -> 1/r times r^degree
    int low_degree() const;              // valuation: smallest k with c_k != 0
    GaussRational eval_one() const;      // value at r = 1

    bool operator==(const RPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RPoly& o) const { return !(*this == o); }

private:
    void trim();
    std::vector<GaussRational> c_;  // c_[k] multiplies r^k
};

// Reduced fraction of RPoly with monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(RPoly::one()) {}
    explicit RationalFunction(GaussRational c) : num_(std::move(c)), den_(RPoly::one()) {}
    RationalFunction(RPoly num, RPoly den);

    // c * r^k, k may be negative
    static RationalFunction monomial(GaussRational c, int k);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    const RPoly& num() const { return num_; }
    const RPoly& den() const { return den_; }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction inverse() const;

    RationalFunction conj_i() const;
    RationalFunction subst_inv_r() const;  // r -> 1/r
    std::optional<GaussRational> eval_one() const;  // r = 1, nullopt if den vanishes

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

private:
    void normalize();
    RPoly num_, den_;
};

// The two coefficient conjugations (star structures act through these).
enum class Regime : std::uint8_t {
    q_real,       // i -> -i, r -> r, w -> w
    q_unimodular  // i -> -i, r -> 1/r, w -> w r^{-2}
};

// Element part0 + part1*w of K, w^2 = 1 + r^4.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : a_(GaussRational(n)) {}
    explicit Scalar(GaussRational c) : a_(std::move(c)) {}
    Scalar(RationalFunction part0, RationalFunction part1)
        : a_(std::move(part0)), b_(std::move(part1)) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(GaussRational::i()); }
    static Scalar w() { return Scalar(RationalFunction(), RationalFunction(GaussRational(1))); }
    static Scalar r_power(int k) {
        return Scalar(RationalFunction::monomial(GaussRational(1), k), RationalFunction());
    }
    static Scalar q_power_half(int k) { return r_power(2 * k); }  // q^{k/2}
    static Scalar q_power(int k) { return r_power(4 * k); }
    static Scalar rational(long num, long den);
    static Scalar eta() { return w() * r_power(-1); }  // eta^2 = q^{1/2}+q^{-1/2}

    const RationalFunction& part0() const { return a_; }
    const RationalFunction& part1() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }

    Scalar operator+(const Scalar& o) const { return Scalar(a_ + o.a_, b_ + o.b_); }
    Scalar operator-(const Scalar& o) const { return Scalar(a_ - o.a_, b_ - o.b_); }
    Scalar operator-() const { return Scalar(-a_, -b_); }
    Scalar operator*(const Scalar& o) const;
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // r = 1 substitution; defined only for w-free values with nonvanishing
    // denominator at 1.
    std::optional<GaussRational> eval_one() const;

    // Canonical text, parseable by the expression grammar.
    std::string to_text() const;
    // True when to_text() is a top-level sum (caller should parenthesize).
    bool text_is_sum() const;

private:
    RationalFunction a_, b_;
};

Scalar conjugate(const Scalar& x, Regime regime);

// q-integer [n] = (r^{2n} - r^{-2n})/(r^2 - r^{-2}); [-n] = -[n], [0] = 0.
Scalar qint(int n);

}  // namespace qorth
