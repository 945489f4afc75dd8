#include "qorth/slq2.hpp"

#include <stdexcept>

namespace qorth {

namespace {

enum : int { A = 0, B = 1, C = 2, D = 3 };

RewriteSystem make_system(const Alphabet& alph) {
    const Scalar s_inv = Scalar::q_power_half(-1);
    auto w2 = [](int g, int h) { return word_of({g, h}); };
    auto m = [&](int g, int h, Scalar c) { return NcPoly(alph, w2(g, h), std::move(c)); };
    std::vector<Rule> rules;
    rules.push_back({w2(B, A), m(A, B, s_inv)});
    rules.push_back({w2(C, A), m(A, C, s_inv)});
    rules.push_back({w2(D, B), m(B, D, s_inv)});
    rules.push_back({w2(D, C), m(C, D, s_inv)});
    // bc = cb = s^{-1}(ad - 1)
    NcPoly ad_rhs = m(A, D, s_inv) - NcPoly::unit(alph, s_inv);
    rules.push_back({w2(B, C), ad_rhs});
    rules.push_back({w2(C, B), ad_rhs});
    // da = s^{-2} ad + (1 - s^{-2})
    rules.push_back({w2(D, A), m(A, D, Scalar::q_power(-1)) +
                                   NcPoly::unit(alph, Scalar::one() - Scalar::q_power(-1))});
    return RewriteSystem(alph, std::move(rules));
}

SlHopf make_hopf(const Alphabet& alph) {
    const Scalar s = Scalar::q_power_half(1);
    auto g = [&](int k) {
        Word w;
        w.push_back(static_cast<char>(k));
        return NcPoly(alph, w, Scalar::one());
    };
    SlHopf h;
    h.coproduct = {
        Tensor2::of(g(A), g(A)) + Tensor2::of(g(B), g(C)),
        Tensor2::of(g(A), g(B)) + Tensor2::of(g(B), g(D)),
        Tensor2::of(g(C), g(A)) + Tensor2::of(g(D), g(C)),
        Tensor2::of(g(C), g(B)) + Tensor2::of(g(D), g(D)),
    };
    h.counit = {Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::one()};
    h.antipode = {g(D), g(B).scaled(-s.inverse()), g(C).scaled(-s), g(A)};
    return h;
}

StarMap make_star(const Alphabet& alph, Regime regime) {
    auto g = [&](int k) {
        Word w;
        w.push_back(static_cast<char>(k));
        return NcPoly(alph, w, Scalar::one());
    };
    if (regime == Regime::q_real) {
        const Scalar s = Scalar::q_power_half(1);
        // a* = d, b* = -s c, c* = -s^{-1} b, d* = a
        return StarMap(alph, {g(D), g(C).scaled(-s), g(B).scaled(-s.inverse()), g(A)}, regime);
    }
    return StarMap(alph, {g(A), g(B), g(C), g(D)}, regime);
}

}  // namespace

SlAlgebra::SlAlgebra()
    : alph_(Alphabet::make("sl2", {"a", "b", "c", "d"})),
      sys_(make_system(alph_)),
      hopf_(make_hopf(alph_)),
      star_real_(make_star(alph_, Regime::q_real)),
      star_unimodular_(make_star(alph_, Regime::q_unimodular)) {}

NcPoly SlAlgebra::display_form(const NcPoly& reduced) const {
    const Scalar s = Scalar::q_power_half(1);
    NcPoly out(alph_);
    // worklist of sorted words a^i b^j c^k d^l; peel ad-pairs until one side
    // is empty: a^i b^j c^k d^l =
    //   s^{j+k} a^{i-1} b^j c^k d^{l-1} + s^{j+k+1} a^{i-1} b^{j+1} c^{k+1} d^{l-1}
    std::map<Word, Scalar, DegLexLess> work(reduced.terms().begin(), reduced.terms().end());
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Word w = it->first;
        Scalar c = it->second;
        work.erase(it);
        for (size_t t = 1; t < w.size(); ++t)
            if (w[t - 1] > w[t])
                throw std::invalid_argument("display_form: expects a reduced polynomial");
        int cnt[4] = {0, 0, 0, 0};
        for (char g : w) ++cnt[static_cast<unsigned char>(g)];
        if (cnt[A] == 0 || cnt[D] == 0) {
            out.add_term(w, c);
            continue;
        }
        int i = cnt[A], j = cnt[B], k = cnt[C], l = cnt[D];
        auto sorted = [&](int ia, int jb, int kc, int ld) {
            Word nw;
            nw.append(static_cast<size_t>(ia), static_cast<char>(A));
            nw.append(static_cast<size_t>(jb), static_cast<char>(B));
            nw.append(static_cast<size_t>(kc), static_cast<char>(C));
            nw.append(static_cast<size_t>(ld), static_cast<char>(D));
            return nw;
        };
        Scalar f = Scalar::one();
        for (int t = 0; t < j + k; ++t) f *= s;
        auto push = [&](Word nw, Scalar nc) {
            auto [slot, fresh] = work.emplace(std::move(nw), nc);
            if (!fresh) {
                slot->second += nc;
                if (slot->second.is_zero()) work.erase(slot);
            }
        };
        push(sorted(i - 1, j, k, l - 1), c * f);
        push(sorted(i - 1, j + 1, k + 1, l - 1), c * f * s);
    }
    return out;
}

Scalar SlAlgebra::counit(const NcPoly& p) const {
    Scalar v = Scalar::zero();
    for (const auto& [w, c] : p.terms()) {
        bool live = true;
        for (char g : w)
            if (g == B || g == C) {
                live = false;
                break;
            }
        if (live) v += c;
    }
    return v;
}

std::vector<Scalar> SlAlgebra::bc_coefficients(const NcPoly& p) const {
    NcPoly disp = display_form(reduce(p));
    std::vector<Scalar> coeffs;
    for (const auto& [w, c] : disp.terms()) {
        int cnt[4] = {0, 0, 0, 0};
        for (char g : w) ++cnt[static_cast<unsigned char>(g)];
        bool sorted_bc = (cnt[A] == 0 && cnt[D] == 0 && cnt[B] == cnt[C] &&
                          static_cast<size_t>(cnt[B] + cnt[C]) == w.size());
        if (!sorted_bc)
            throw std::domain_error("singular trace: argument is not a polynomial in bc");
        size_t k = static_cast<size_t>(cnt[B]);
        if (coeffs.size() <= k) coeffs.resize(k + 1, Scalar::zero());
        coeffs[k] = c;
    }
    return coeffs;
}

Scalar SlAlgebra::singular_trace(const NcPoly& p) const {
    std::vector<Scalar> coeffs = bc_coefficients(p);
    Scalar v = Scalar::zero();
    for (size_t k = 1; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        // mu((bc)^k) = (-1)^k r^{2k} / (r^{4k} - 1)
        Scalar val = Scalar::r_power(2 * static_cast<int>(k)) /
                     (Scalar::r_power(4 * static_cast<int>(k)) - Scalar::one());
        if (k % 2 == 1) val = -val;
        v += coeffs[k] * val;
    }
    return v;
}

Tensor2 SlAlgebra::coproduct(const NcPoly& p) const {
    Tensor2 out(alph_, alph_);
    for (const auto& [w, c] : p.terms()) {
        Tensor2 prod = Tensor2::of(unit(), unit(c));
        for (char g : w) prod = prod * hopf_.coproduct[static_cast<unsigned char>(g)];
        out = out + prod;
    }
    return out.map_left([this](const NcPoly& x) { return reduce(x); })
        .map_right([this](const NcPoly& x) { return reduce(x); });
}

NcPoly SlAlgebra::antipode(const NcPoly& p) const {
    NcPoly out(alph_);
    for (const auto& [w, c] : p.terms()) {
        NcPoly prod = unit(c);
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            prod = prod * hopf_.antipode[static_cast<unsigned char>(*it)];
        out += prod;
    }
    return reduce(out);
}

}  // namespace qorth
