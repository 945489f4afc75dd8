#include "qorth/uqdual.hpp"

#include <stdexcept>

namespace qorth {

namespace {

enum : int { F = 0, K = 1, KINV = 2, E = 3 };

RewriteSystem make_uq_system(const Alphabet& alph) {
    const Scalar q = Scalar::q_power(1);
    const Scalar lam_half = Scalar::q_power_half(1) - Scalar::q_power_half(-1);
    auto m = [&](std::initializer_list<int> gens, Scalar c) {
        return NcPoly(alph, word_of(gens), std::move(c));
    };
    std::vector<Rule> rules;
    rules.push_back({word_of({E, F}),
                     m({F, E}, Scalar::one()) + m({K}, lam_half.inverse()) -
                         m({KINV}, lam_half.inverse())});
    rules.push_back({word_of({E, K}), m({K, E}, q.inverse())});
    rules.push_back({word_of({E, KINV}), m({KINV, E}, q)});
    rules.push_back({word_of({K, F}), m({F, K}, q.inverse())});
    rules.push_back({word_of({KINV, F}), m({F, KINV}, q)});
    rules.push_back({word_of({K, KINV}), NcPoly::unit(alph)});
    rules.push_back({word_of({KINV, K}), NcPoly::unit(alph)});
    return RewriteSystem(alph, std::move(rules));
}

StarMap make_uq_star(const Alphabet& alph, UqStar form) {
    auto m = [&](std::initializer_list<int> gens, Scalar c) {
        return NcPoly(alph, word_of(gens), std::move(c));
    };
    switch (form) {
        case UqStar::compact:
            return StarMap(alph,
                           {m({KINV, E}, Scalar::one()), m({K}, Scalar::one()),
                            m({KINV}, Scalar::one()), m({F, K}, Scalar::one())},
                           Regime::q_real);
        case UqStar::noncompact:
            return StarMap(alph,
                           {m({KINV, E}, -Scalar::one()), m({K}, Scalar::one()),
                            m({KINV}, Scalar::one()), m({F, K}, -Scalar::one())},
                           Regime::q_real);
        case UqStar::split:
        default:
            return StarMap(alph,
                           {m({F}, -Scalar::one()), m({K}, Scalar::one()),
                            m({KINV}, Scalar::one()), m({E}, -Scalar::one())},
                           Regime::q_unimodular);
    }
}

}  // namespace

UqAlgebra::UqAlgebra(const SoAlgebra& so)
    : so_(so),
      alph_(Alphabet::make("uq", {"F", "K", "Kinv", "E"})),
      sys_(make_uq_system(alph_)),
      star_compact_(make_uq_star(alph_, UqStar::compact)),
      star_noncompact_(make_uq_star(alph_, UqStar::noncompact)),
      star_split_(make_uq_star(alph_, UqStar::split)) {
    auto g = [&](int k) { return NcPoly(alph_, word_of({k}), Scalar::one()); };
    coproduct_ = {
        Tensor2::of(g(F), unit()) + Tensor2::of(g(KINV), g(F)),
        Tensor2::of(g(K), g(K)),
        Tensor2::of(g(KINV), g(KINV)),
        Tensor2::of(g(E), g(K)) + Tensor2::of(unit(), g(E)),
    };
    counit_ = {Scalar::zero(), Scalar::one(), Scalar::one(), Scalar::zero()};
    antipode_ = {
        -(g(K) * g(F)),     // S(F) = -KF
        g(KINV),            // S(K) = K^{-1}
        g(K),               // S(K^{-1}) = K
        -(g(E) * g(KINV)),  // S(E) = -E K^{-1}
    };
}

Tensor2 UqAlgebra::coproduct(const NcPoly& p) const {
    Tensor2 out(alph_, alph_);
    for (const auto& [w, c] : p.terms()) {
        Tensor2 prod = Tensor2::of(unit(), unit(c));
        for (char g : w) prod = prod * coproduct_[static_cast<unsigned char>(g)];
        out = out + prod;
    }
    return out.map_left([this](const NcPoly& x) { return reduce(x); })
        .map_right([this](const NcPoly& x) { return reduce(x); });
}

Scalar UqAlgebra::counit(const NcPoly& p) const {
    Scalar v = Scalar::zero();
    for (const auto& [w, c] : p.terms()) {
        bool live = true;
        for (char g : w)
            if (g == F || g == E) {
                live = false;
                break;
            }
        if (live) v += c;
    }
    return v;
}

NcPoly UqAlgebra::antipode(const NcPoly& p) const {
    NcPoly out(alph_);
    for (const auto& [w, c] : p.terms()) {
        NcPoly prod = unit(c);
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            prod = prod * antipode_[static_cast<unsigned char>(*it)];
        out += prod;
    }
    return reduce(out);
}

NcPoly UqAlgebra::casimir_ef_form() const {
    const Scalar d = Scalar::q_power_half(1) - Scalar::q_power_half(-1);
    Scalar d2 = (d * d).inverse();
    return gen("E") * gen("F") + gen("K").scaled(Scalar::q_power_half(-1) * d2) +
           gen("Kinv").scaled(Scalar::q_power_half(1) * d2);
}

NcPoly UqAlgebra::casimir_fe_form() const {
    const Scalar d = Scalar::q_power_half(1) - Scalar::q_power_half(-1);
    Scalar d2 = (d * d).inverse();
    return gen("F") * gen("E") + gen("K").scaled(Scalar::q_power_half(1) * d2) +
           gen("Kinv").scaled(Scalar::q_power_half(-1) * d2);
}

NcPoly UqAlgebra::casimir_symmetric_form() const {
    const Scalar d = Scalar::q_power_half(1) - Scalar::q_power_half(-1);
    Scalar c = (Scalar::q_power_half(1) + Scalar::q_power_half(-1)) * (d * d).inverse();
    Scalar half = Scalar::rational(1, 2);
    return (gen("E") * gen("F") + gen("F") * gen("E")).scaled(half) +
           (gen("K") + gen("Kinv")).scaled(c);
}

// --------------------------------------------------------------- pairing

Scalar UqAlgebra::pair_gens(int i, int j, const std::string& fname, const Scalar& alpha) const {
    const Scalar q = Scalar::q_power(1);
    const Scalar eta = Scalar::eta();
    const Scalar s = Scalar::q_power_half(1);
    if (fname == "K") {
        if (i != j) return Scalar::zero();
        return i == 1 ? q.inverse() : (i == 2 ? Scalar::one() : q);
    }
    if (fname == "Kinv") {
        if (i != j) return Scalar::zero();
        return i == 1 ? q : (i == 2 ? Scalar::one() : q.inverse());
    }
    if (fname == "E") {
        if (i == 2 && j == 1) return alpha * eta;
        if (i == 3 && j == 2) return -(alpha * s * eta);
        return Scalar::zero();
    }
    if (fname == "F") {
        if (i == 1 && j == 2) return alpha.inverse() * eta;
        if (i == 2 && j == 3) return -(alpha.inverse() * s.inverse() * eta);
        return Scalar::zero();
    }
    throw std::invalid_argument("pair_gens: unknown generator " + fname);
}

namespace {

// counit of a word over the defining-matrix alphabet: product of deltas
bool u_word_counit_one(const Word& w) {
    for (char g : w) {
        int id = static_cast<unsigned char>(g);
        if (id / 3 != id % 3) return false;
    }
    return true;
}

}  // namespace

Scalar UqAlgebra::pair(const NcPoly& f, const NcPoly& a) const {
    const Scalar one = Scalar::one();
    // word-level recursion; fw over this algebra, aw over the u alphabet
    std::function<Scalar(const Word&, const Word&)> pw = [&](const Word& fw,
                                                             const Word& aw) -> Scalar {
        if (fw.empty()) return u_word_counit_one(aw) ? one : Scalar::zero();
        if (aw.empty()) {
            for (char g : fw)
                if (g == F || g == E) return Scalar::zero();
            return one;
        }
        if (fw.size() == 1) {
            int x = static_cast<unsigned char>(fw[0]);
            int ug = static_cast<unsigned char>(aw[0]);
            int i = ug / 3 + 1, j = ug % 3 + 1;
            Word rest = aw.substr(1);
            auto tbl = [&](const char* n) { return pair_gens(i, j, n, one); };
            switch (x) {
                case K:
                    return tbl("K") * pw(fw, rest);
                case KINV:
                    return tbl("Kinv") * pw(fw, rest);
                case E: {
                    Scalar v = tbl("E") * pw(word_of({K}), rest);
                    if (i == j) v += pw(fw, rest);
                    return v;
                }
                case F:
                default: {
                    Scalar v = tbl("F") * (u_word_counit_one(rest) ? one : Scalar::zero());
                    v += tbl("Kinv") * pw(fw, rest);
                    return v;
                }
            }
        }
        // <x frest, a> = sum over middle indices of Delta(a)
        Word head(1, fw[0]);
        Word frest = fw.substr(1);
        std::function<Scalar(size_t, Word, Word)> split = [&](size_t pos, Word left,
                                                              Word right) -> Scalar {
            if (pos == aw.size()) return pw(head, left) * pw(frest, right);
            int ug = static_cast<unsigned char>(aw[pos]);
            int i = ug / 3 + 1, j = ug % 3 + 1;
            Scalar total = Scalar::zero();
            for (int m = 1; m <= 3; ++m) {
                Word l = left, r = right;
                l.push_back(static_cast<char>((i - 1) * 3 + (m - 1)));
                r.push_back(static_cast<char>((m - 1) * 3 + (j - 1)));
                total += split(pos + 1, std::move(l), std::move(r));
            }
            return total;
        };
        return split(0, Word(), Word());
    };

    Scalar total = Scalar::zero();
    for (const auto& [fw, fc] : f.terms())
        for (const auto& [aw, ac] : a.terms()) total += fc * ac * pw(fw, aw);
    return total;
}

// ---------------------------------------------------------------- actions

namespace {

// single-generator actions on a single defining-matrix generator
// right action changes the row, left action changes the column
struct GenAction {
    int gen = -1;  // resulting generator id, -1 for zero
    Scalar coeff;
};

GenAction right_on(int ug, int fgen) {
    int i = ug / 3 + 1, j = ug % 3;  // row i, column index j (0-based)
    const Scalar q = Scalar::q_power(1);
    const Scalar eta = Scalar::eta();
    const Scalar s = Scalar::q_power_half(1);
    switch (fgen) {
        case K:
            return {ug, i == 1 ? q.inverse() : (i == 2 ? Scalar::one() : q)};
        case KINV:
            return {ug, i == 1 ? q : (i == 2 ? Scalar::one() : q.inverse())};
        case E:
            if (i == 2) return {0 * 3 + j, eta};
            if (i == 3) return {1 * 3 + j, -(s * eta)};
            return {-1, Scalar::zero()};
        case F:
        default:
            if (i == 1) return {1 * 3 + j, eta};
            if (i == 2) return {2 * 3 + j, -(s.inverse() * eta)};
            return {-1, Scalar::zero()};
    }
}

GenAction left_on(int fgen, int ug) {
    int i = ug / 3;            // row index (0-based)
    int j = ug % 3 + 1;        // column 1..3
    const Scalar q = Scalar::q_power(1);
    const Scalar eta = Scalar::eta();
    const Scalar s = Scalar::q_power_half(1);
    switch (fgen) {
        case K:
            return {ug, j == 1 ? q.inverse() : (j == 2 ? Scalar::one() : q)};
        case KINV:
            return {ug, j == 1 ? q : (j == 2 ? Scalar::one() : q.inverse())};
        case E:
            if (j == 1) return {i * 3 + 1, eta};
            if (j == 2) return {i * 3 + 2, -(s * eta)};
            return {-1, Scalar::zero()};
        case F:
        default:
            if (j == 2) return {i * 3 + 0, eta};
            if (j == 3) return {i * 3 + 1, -(s.inverse() * eta)};
            return {-1, Scalar::zero()};
    }
}

}  // namespace

NcPoly UqAlgebra::word_right_action(const Word& a, char fgen) const {
    const Alphabet& ualph = so_.alphabet();
    NcPoly out(ualph);
    int x = static_cast<unsigned char>(fgen);
    if (x == K || x == KINV) {
        Scalar c = Scalar::one();
        for (char g : a) {
            GenAction act = right_on(static_cast<unsigned char>(g), x);
            c *= act.coeff;
        }
        out.add_term(a, c);
        return out;
    }
    // E: suffix letters get the K action; F: prefix letters get the Kinv action
    for (size_t pos = 0; pos < a.size(); ++pos) {
        GenAction mid = right_on(static_cast<unsigned char>(a[pos]), x);
        if (mid.gen < 0) continue;
        Scalar c = mid.coeff;
        Word w = a;
        w[pos] = static_cast<char>(mid.gen);
        if (x == E) {
            for (size_t t = pos + 1; t < a.size(); ++t)
                c *= right_on(static_cast<unsigned char>(a[t]), K).coeff;
        } else {
            for (size_t t = 0; t < pos; ++t)
                c *= right_on(static_cast<unsigned char>(a[t]), KINV).coeff;
        }
        out.add_term(w, c);
    }
    return out;
}

NcPoly UqAlgebra::word_left_action(char fgen, const Word& a) const {
    const Alphabet& ualph = so_.alphabet();
    NcPoly out(ualph);
    int x = static_cast<unsigned char>(fgen);
    if (x == K || x == KINV) {
        Scalar c = Scalar::one();
        for (char g : a) c *= left_on(x, static_cast<unsigned char>(g)).coeff;
        out.add_term(a, c);
        return out;
    }
    for (size_t pos = 0; pos < a.size(); ++pos) {
        GenAction mid = left_on(x, static_cast<unsigned char>(a[pos]));
        if (mid.gen < 0) continue;
        Scalar c = mid.coeff;
        Word w = a;
        w[pos] = static_cast<char>(mid.gen);
        if (x == E) {
            for (size_t t = pos + 1; t < a.size(); ++t)
                c *= left_on(K, static_cast<unsigned char>(a[t])).coeff;
        } else {
            for (size_t t = 0; t < pos; ++t)
                c *= left_on(KINV, static_cast<unsigned char>(a[t])).coeff;
        }
        out.add_term(w, c);
    }
    return out;
}

NcPoly UqAlgebra::right_action(const NcPoly& a, const NcPoly& f) const {
    const Alphabet& ualph = so_.alphabet();
    NcPoly total(ualph);
    for (const auto& [fw, fc] : f.terms()) {
        NcPoly cur = a;
        for (char x : fw) {  // a <| (f1 f2 ...) = ((a <| f1) <| f2) ...
            NcPoly next(ualph);
            for (const auto& [aw, ac] : cur.terms()) next += word_right_action(aw, x).scaled(ac);
            cur = std::move(next);
        }
        total += cur.scaled(fc);
    }
    return total;
}

NcPoly UqAlgebra::left_action(const NcPoly& f, const NcPoly& a) const {
    const Alphabet& ualph = so_.alphabet();
    NcPoly total(ualph);
    for (const auto& [fw, fc] : f.terms()) {
        NcPoly cur = a;
        for (auto it = fw.rbegin(); it != fw.rend(); ++it) {  // (fg) |> a = f |> (g |> a)
            NcPoly next(ualph);
            for (const auto& [aw, ac] : cur.terms()) next += word_left_action(*it, aw).scaled(ac);
            cur = std::move(next);
        }
        total += cur.scaled(fc);
    }
    return total;
}

const StarMap& UqAlgebra::star(UqStar form) const {
    switch (form) {
        case UqStar::compact:
            return star_compact_;
        case UqStar::noncompact:
            return star_noncompact_;
        case UqStar::split:
        default:
            return star_split_;
    }
}

}  // namespace qorth
