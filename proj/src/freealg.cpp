#include "qorth/freealg.hpp"

#include <sstream>
#include <stdexcept>

namespace qorth {

// -------------------------------------------------------------- Alphabet

Alphabet Alphabet::make(std::string name, std::vector<std::string> symbols) {
    auto impl = std::make_shared<Impl>();
    impl->name = std::move(name);
    impl->symbols = std::move(symbols);
    if (impl->symbols.size() > 200)
        throw std::invalid_argument("Alphabet: too many symbols");
    for (size_t k = 0; k < impl->symbols.size(); ++k) {
        auto [it, fresh] = impl->index.emplace(impl->symbols[k], static_cast<int>(k));
        if (!fresh) throw std::invalid_argument("Alphabet: duplicate symbol " + impl->symbols[k]);
    }
    Alphabet a;
    a.impl_ = std::move(impl);
    return a;
}

int Alphabet::id(const std::string& symbol) const {
    auto it = impl_->index.find(symbol);
    return it == impl_->index.end() ? -1 : it->second;
}

int Alphabet::require(const std::string& symbol) const {
    int g = id(symbol);
    if (g < 0)
        throw std::invalid_argument("Alphabet " + impl_->name + ": unknown symbol " + symbol);
    return g;
}

// ---------------------------------------------------------------- NcPoly

NcPoly::NcPoly(Alphabet alph, const Word& word, Scalar coeff) : alph_(std::move(alph)) {
    add_term(word, coeff);
}

NcPoly NcPoly::unit(const Alphabet& alph, Scalar c) { return NcPoly(alph, Word(), std::move(c)); }

NcPoly NcPoly::generator(const Alphabet& alph, const std::string& symbol) {
    Word w;
    w.push_back(static_cast<char>(alph.require(symbol)));
    return NcPoly(alph, w, Scalar::one());
}

Scalar NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NcPoly::check_alphabet(const NcPoly& o) const {
    if (!alph_.same(o.alph_))
        throw std::invalid_argument("NcPoly: alphabet mismatch (" + alph_.name() + " vs " +
                                    o.alph_.name() + ")");
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    check_alphabet(o);
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    check_alphabet(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    check_alphabet(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    check_alphabet(o);
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

NcPoly NcPoly::operator-() const {
    NcPoly r(alph_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    check_alphabet(o);
    NcPoly r(alph_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) r.add_term(w1 + w2, c1 * c2);
    return r;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
    NcPoly r(alph_);
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
    return r;
}

bool NcPoly::operator==(const NcPoly& o) const { return terms_ == o.terms_; }

std::string NcPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        // render word with exponent-collapsed runs
        std::string wt;
        for (size_t k = 0; k < w.size();) {
            size_t j = k;
            while (j < w.size() && w[j] == w[k]) ++j;
            if (!wt.empty()) wt += "*";
            wt += alph_.symbol(static_cast<unsigned char>(w[k]));
            if (j - k > 1) wt += "^" + std::to_string(j - k);
            k = j;
        }
        Scalar coeff = c;
        std::string ct = coeff.to_text();
        bool neg = !ct.empty() && ct[0] == '-';
        if (neg) {
            Scalar m = -coeff;
            std::string mt = m.to_text();
            if (mt.empty() || mt[0] != '-') {  // clean sign split
                coeff = m;
                ct = mt;
            } else {
                neg = false;
            }
        }
        std::string term;
        if (wt.empty()) {
            term = coeff.text_is_sum() ? "(" + ct + ")" : ct;
        } else if (coeff.is_one()) {
            term = wt;
        } else {
            term = (coeff.text_is_sum() ? "(" + ct + ")" : ct) + "*" + wt;
        }
        if (first) {
            if (neg) os << "-";
            os << term;
            first = false;
        } else {
            os << (neg ? " - " : " + ") << term;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- StarMap

StarMap::StarMap(Alphabet alph, std::vector<NcPoly> images, Regime regime)
    : alph_(std::move(alph)), images_(std::move(images)), regime_(regime) {
    if (static_cast<int>(images_.size()) != alph_.size())
        throw std::invalid_argument("StarMap: need an image for every generator");
}

NcPoly StarMap::operator()(const NcPoly& p) const {
    if (!p.alphabet().same(alph_)) throw std::invalid_argument("StarMap: alphabet mismatch");
    NcPoly out(alph_);
    for (const auto& [w, c] : p.terms()) {
        NcPoly prod = NcPoly::unit(alph_, conjugate(c, regime_));
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            prod = prod * images_[static_cast<unsigned char>(*it)];
        out += prod;
    }
    return out;
}

// ----------------------------------------------------------------- GenMap

GenMap::GenMap(Alphabet domain, Alphabet codomain, std::vector<NcPoly> images)
    : dom_(std::move(domain)), cod_(std::move(codomain)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != dom_.size())
        throw std::invalid_argument("GenMap: need an image for every generator");
    for (const auto& p : images_)
        if (!p.alphabet().same(cod_)) throw std::invalid_argument("GenMap: image alphabet mismatch");
}

NcPoly GenMap::operator()(const NcPoly& p) const {
    if (!p.alphabet().same(dom_)) throw std::invalid_argument("GenMap: alphabet mismatch");
    NcPoly out(cod_);
    for (const auto& [w, c] : p.terms()) {
        NcPoly prod = NcPoly::unit(cod_, c);
        for (char g : w) prod = prod * images_[static_cast<unsigned char>(g)];
        out += prod;
    }
    return out;
}

// ---------------------------------------------------------------- Tensor2

Tensor2 Tensor2::of(const NcPoly& l, const NcPoly& r) {
    Tensor2 t(l.alphabet(), r.alphabet());
    for (const auto& [wl, cl] : l.terms())
        for (const auto& [wr, cr] : r.terms()) t.add_term(wl, wr, cl * cr);
    return t;
}

void Tensor2::add_term(const Word& l, const Word& r, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(l, r);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
    Tensor2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
    Tensor2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

Tensor2 Tensor2::operator*(const Tensor2& o) const {
    Tensor2 r(left_, right_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

Tensor2 Tensor2::scaled(const Scalar& c) const {
    Tensor2 r(left_, right_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

Tensor2 Tensor2::map_left(const std::function<NcPoly(const NcPoly&)>& f) const {
    Tensor2 r;
    bool init = false;
    for (const auto& [k, c] : terms_) {
        NcPoly img = f(NcPoly(left_, k.first, Scalar::one()));
        if (!init) {
            r = Tensor2(img.alphabet(), right_);
            init = true;
        }
        for (const auto& [w, v] : img.terms()) r.add_term(w, k.second, v * c);
    }
    if (!init) r = Tensor2(left_, right_);
    return r;
}

Tensor2 Tensor2::map_right(const std::function<NcPoly(const NcPoly&)>& f) const {
    Tensor2 r;
    bool init = false;
    for (const auto& [k, c] : terms_) {
        NcPoly img = f(NcPoly(right_, k.second, Scalar::one()));
        if (!init) {
            r = Tensor2(left_, img.alphabet());
            init = true;
        }
        for (const auto& [w, v] : img.terms()) r.add_term(k.first, w, v * c);
    }
    if (!init) r = Tensor2(left_, right_);
    return r;
}

std::string Tensor2::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        NcPoly l(left_, k.first, c);
        NcPoly r(right_, k.second, Scalar::one());
        os << "(" << l.to_text() << ") (x) (" << r.to_text() << ")";
    }
    return os.str();
}

// --------------------------------------------------------------- NcMatrix

NcMatrix::NcMatrix(int rows, int cols, const Alphabet& alph) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("NcMatrix: negative extent");
    e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), NcPoly(alph));
}

size_t NcMatrix::idx(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("NcMatrix: index out of range");
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
}

NcMatrix NcMatrix::identity(int n, const Alphabet& alph) {
    NcMatrix m(n, n, alph);
    for (int k = 0; k < n; ++k) m.at(k, k) = NcPoly::unit(alph);
    return m;
}

NcMatrix NcMatrix::operator+(const NcMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("NcMatrix: shape mismatch");
    NcMatrix r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
}

NcMatrix NcMatrix::operator-(const NcMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("NcMatrix: shape mismatch");
    NcMatrix r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
    return r;
}

NcMatrix NcMatrix::operator*(const NcMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("NcMatrix: inner extent mismatch");
    NcMatrix r(rows_, o.cols_, e_.empty() ? o.e_.front().alphabet() : e_.front().alphabet());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            NcPoly acc = r.at(i, j);
            for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

NcMatrix NcMatrix::transposed() const {
    NcMatrix r = *this;
    r.rows_ = cols_;
    r.cols_ = rows_;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.e_[static_cast<size_t>(j) * rows_ + i] = at(i, j);
    return r;
}

NcMatrix NcMatrix::map(const std::function<NcPoly(const NcPoly&)>& f) const {
    NcMatrix r = *this;
    for (auto& p : r.e_) p = f(p);
    return r;
}

NcPoly NcMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("NcMatrix: trace of non-square matrix");
    NcPoly t = e_.empty() ? NcPoly() : NcPoly(e_.front().alphabet());
    for (int k = 0; k < rows_; ++k) t += at(k, k);
    return t;
}

}  // namespace qorth
