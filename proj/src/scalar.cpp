#include "qorth/scalar.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qorth {

GaussRational GaussRational::inverse() const {
    mpq_class n = re * re + im * im;
    if (n == 0) throw std::domain_error("GaussRational: division by zero");
    return GaussRational(re / n, -im / n);
}

// ---------------------------------------------------------------- RPoly

void RPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RPoly RPoly::monomial(GaussRational c, int degree) {
    RPoly p;
    if (c.is_zero()) return p;
    if (degree < 0) throw std::invalid_argument("RPoly::monomial: negative degree");
    p.c_.assign(static_cast<size_t>(degree) + 1, GaussRational());
    p.c_.back() = std::move(c);
    return p;
}

RPoly RPoly::operator+(const RPoly& o) const {
    RPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < r.c_.size(); ++k) {
        if (k < c_.size()) r.c_[k] = r.c_[k] + c_[k];
        if (k < o.c_.size()) r.c_[k] = r.c_[k] + o.c_[k];
    }
    r.trim();
    return r;
}

RPoly RPoly::operator-() const {
    RPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

RPoly RPoly::operator-(const RPoly& o) const { return *this + (-o); }

RPoly RPoly::operator*(const RPoly& o) const {
    RPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, GaussRational());
    for (size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].is_zero()) continue;
        for (size_t b = 0; b < o.c_.size(); ++b)
            r.c_[a + b] = r.c_[a + b] + c_[a] * o.c_[b];
    }
    r.trim();
    return r;
}

void RPoly::divrem(const RPoly& d, RPoly& quot, RPoly& rem) const {
    if (d.is_zero()) throw std::domain_error("RPoly::divrem: division by zero polynomial");
    quot = RPoly();
    rem = *this;
    GaussRational lead_inv = d.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        GaussRational c = rem.leading() * lead_inv;
        RPoly t = RPoly::monomial(c, shift);
        quot = quot + t;
        rem = rem - t * d;
    }
}

RPoly RPoly::gcd_monic(const RPoly& x, const RPoly& y) {
    RPoly a = x, b = y;
    while (!b.is_zero()) {
        RPoly q, r;
        a.divrem(b, q, r);
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

RPoly RPoly::monic() const {
    if (is_zero()) return *this;
    RPoly r = *this;
    GaussRational inv = leading().inverse();
    for (auto& c : r.c_) c = c * inv;
    return r;
}

RPoly RPoly::conj_i() const {
    RPoly r = *this;
    for (auto& c : r.c_) c = c.conj_i();
    return r;
}

RPoly RPoly::reversed() const {
    RPoly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

int RPoly::low_degree() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return 0;
}

GaussRational RPoly::eval_one() const {
    GaussRational v;
    for (const auto& c : c_) v = v + c;
    return v;
}

// ----------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(RPoly num, RPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = RPoly::one();
        return;
    }
    RPoly g = RPoly::gcd_monic(num_, den_);
    if (g.degree() > 0) {
        RPoly q, r;
        num_.divrem(g, q, r);
        num_ = q;
        den_.divrem(g, q, r);
        den_ = q;
    }
    if (!den_.leading().is_one()) {
        GaussRational inv = den_.leading().inverse();
        num_ = num_ * RPoly(inv);
        den_ = den_.monic();
    }
}

RationalFunction RationalFunction::monomial(GaussRational c, int k) {
    if (c.is_zero()) return RationalFunction();
    if (k >= 0) return RationalFunction(RPoly::monomial(std::move(c), k), RPoly::one());
    return RationalFunction(RPoly(std::move(c)), RPoly::monomial(GaussRational(1), -k));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction();
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    return *this * o.inverse();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::conj_i() const {
    RationalFunction r = *this;
    r.num_ = r.num_.conj_i();
    r.den_ = r.den_.conj_i();
    r.normalize();
    return r;
}

RationalFunction RationalFunction::subst_inv_r() const {
    if (is_zero()) return *this;
    // num(1/r)/den(1/r) = rev(num) * r^{deg den - deg num} / rev(den)
    int shift = den_.degree() - num_.degree();
    RPoly n = num_.reversed();
    RPoly d = den_.reversed();
    if (shift >= 0)
        return RationalFunction(n * RPoly::monomial(GaussRational(1), shift), d);
    return RationalFunction(n, d * RPoly::monomial(GaussRational(1), -shift));
}

std::optional<GaussRational> RationalFunction::eval_one() const {
    GaussRational d = den_.eval_one();
    if (d.is_zero()) return std::nullopt;
    return num_.eval_one() / d;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("Scalar::rational: zero denominator");
    mpq_class v(num, den);
    v.canonicalize();
    return Scalar(GaussRational(v, mpq_class(0)));
}

Scalar Scalar::operator*(const Scalar& o) const {
    // (a + b w)(a' + b' w) = aa' + bb'(1+r^4) + (ab' + a'b) w
    static const RationalFunction wsq =
        RationalFunction(GaussRational(1)) + RationalFunction::monomial(GaussRational(1), 4);
    return Scalar(a_ * o.a_ + b_ * o.b_ * wsq, a_ * o.b_ + b_ * o.a_);
}

Scalar Scalar::inverse() const {
    static const RationalFunction wsq =
        RationalFunction(GaussRational(1)) + RationalFunction::monomial(GaussRational(1), 4);
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    // 1/(a+bw) = (a-bw)/(a^2 - b^2(1+r^4)); the norm is nonzero because
    // 1+r^4 is not a square in Q(i)(r).
    RationalFunction n = a_ * a_ - b_ * b_ * wsq;
    if (n.is_zero()) throw std::logic_error("Scalar: vanishing norm on nonzero element");
    RationalFunction ninv = n.inverse();
    return Scalar(a_ * ninv, -b_ * ninv);
}

std::optional<GaussRational> Scalar::eval_one() const {
    if (!b_.is_zero()) return std::nullopt;
    return a_.eval_one();
}

Scalar conjugate(const Scalar& x, Regime regime) {
    if (regime == Regime::q_real)
        return Scalar(x.part0().conj_i(), x.part1().conj_i());
    // i -> -i, r -> 1/r, w -> w r^{-2}
    RationalFunction a = x.part0().conj_i().subst_inv_r();
    RationalFunction b = x.part1().conj_i().subst_inv_r() *
                         RationalFunction::monomial(GaussRational(1), -2);
    return Scalar(std::move(a), std::move(b));
}

Scalar qint(int n) {
    if (n == 0) return Scalar::zero();
    if (n < 0) return -qint(-n);
    // [n] = sum_{j=0}^{n-1} r^{2(n-1) - 4j}
    Scalar v = Scalar::zero();
    for (int j = 0; j < n; ++j) v += Scalar::r_power(2 * (n - 1) - 4 * j);
    return v;
}

// --------------------------------------------------------------- printing

namespace {

// "2", "-1/2", "i", "-2/3*i", "1+i" (mixed values are sums)
std::string gauss_text(const GaussRational& v, bool& is_sum) {
    is_sum = false;
    auto rat = [](const mpq_class& x) {
        std::ostringstream os;
        os << x;
        return os.str();
    };
    if (v.im == 0) return rat(v.re);
    std::string im_part;
    if (v.im == 1)
        im_part = "i";
    else if (v.im == -1)
        im_part = "-i";
    else
        im_part = rat(v.im) + "*i";
    if (v.re == 0) return im_part;
    is_sum = true;
    if (v.im > 0) return rat(v.re) + "+" + im_part;
    return rat(v.re) + im_part;  // im_part already carries '-'
}

// one Laurent term c*r^e
std::string laurent_term(const GaussRational& c, int e) {
    bool sum = false;
    std::string ct = gauss_text(c, sum);
    std::string cpart = sum ? "(" + ct + ")" : ct;
    if (e == 0) return cpart;
    std::string rp = (e == 1) ? "r" : "r^" + std::to_string(e);
    if (c.is_one()) return rp;
    if (c == GaussRational(-1)) return "-" + rp;
    return cpart + "*" + rp;
}

std::string poly_text(const RPoly& p, int shift, bool& is_sum) {
    // renders p * r^shift as a Laurent sum
    std::string out;
    int terms = 0;
    for (int k = 0; k <= p.degree(); ++k) {
        GaussRational c = p.coeff(k);
        if (c.is_zero()) continue;
        std::string t = laurent_term(c, k + shift);
        if (terms == 0) {
            out = t;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
        ++terms;
    }
    is_sum = terms > 1;
    if (terms == 0) return "0";
    return out;
}

// text of a RationalFunction; is_sum reports a top-level '+'/'-'
std::string rf_text(const RationalFunction& f, bool& is_sum) {
    is_sum = false;
    if (f.is_zero()) return "0";
    const RPoly& den = f.den();
    int lo = den.low_degree();
    bool den_is_monomial = (lo == den.degree());
    if (den_is_monomial) {
        return poly_text(f.num(), -lo, is_sum);
    }
    bool ns = false, ds = false;
    std::string n = poly_text(f.num(), 0, ns);
    std::string d = poly_text(den, 0, ds);
    if (ns) n = "(" + n + ")";
    return n + "/(" + d + ")";
}

}  // namespace

std::string Scalar::to_text() const {
    if (is_zero()) return "0";
    bool as = false, bs = false;
    std::string sa = a_.is_zero() ? "" : rf_text(a_, as);
    std::string sb;
    if (!b_.is_zero()) {
        if (b_.is_one()) {
            sb = "w";
        } else if ((-b_).is_one()) {
            sb = "-w";
        } else {
            std::string t = rf_text(b_, bs);
            sb = bs ? "(" + t + ")*w" : t + "*w";
        }
    }
    if (sa.empty()) return sb;
    if (sb.empty()) return sa;
    if (sb[0] == '-') return sa + " - " + sb.substr(1);
    return sa + " + " + sb;
}

bool Scalar::text_is_sum() const {
    if (!a_.is_zero() && !b_.is_zero()) return true;
    if (!a_.is_zero()) {
        bool s = false;
        rf_text(a_, s);
        return s;
    }
    return false;  // pure w-part renders as w, -w, c*w or (sum)*w
}

}  // namespace qorth
