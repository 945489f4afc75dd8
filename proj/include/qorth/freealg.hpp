// Free noncommutative polynomials over Scalar on declared alphabets,
// tensor-square elements, matrices, and star maps.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qorth/scalar.hpp"

namespace qorth {

// Ordered list of generator symbols. The declaration order drives the
// deg-lex monomial order; alphabets are immutable and shared by handle.
class Alphabet {
public:
    static Alphabet make(std::string name, std::vector<std::string> symbols);

    const std::string& name() const { return impl_->name; }
    int size() const { return static_cast<int>(impl_->symbols.size()); }
    const std::string& symbol(int id) const { return impl_->symbols.at(static_cast<size_t>(id)); }
    int id(const std::string& symbol) const;        // -1 if absent
    int require(const std::string& symbol) const;   // throws if absent

    bool same(const Alphabet& o) const { return impl_ == o.impl_; }

private:
    struct Impl {
        std::string name;
        std::vector<std::string> symbols;
        std::map<std::string, int> index;
    };
    std::shared_ptr<const Impl> impl_;
};

// Word = sequence of generator ids (empty word is the unit). Stored as a
// byte string so short words need no allocation.
using Word = std::string;

inline Word word_of(std::initializer_list<int> ids) {
    Word w;
    for (int g : ids) w.push_back(static_cast<char>(g));
    return w;
}

// degree first, then lexicographically in the alphabet order
struct DegLexLess {
    bool operator()(const Word& x, const Word& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    }
};

// Term-collected noncommutative polynomial; zero coefficients never stored.
class NcPoly {
public:
    NcPoly() = default;
    explicit NcPoly(Alphabet alph) : alph_(std::move(alph)) {}
    NcPoly(Alphabet alph, const Word& word, Scalar coeff);

    static NcPoly unit(const Alphabet& alph, Scalar c = Scalar::one());
    static NcPoly generator(const Alphabet& alph, const std::string& symbol);

    const Alphabet& alphabet() const { return alph_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, Scalar, DegLexLess>& terms() const { return terms_; }
    Scalar coeff(const Word& w) const;

    void add_term(const Word& w, const Scalar& c);

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly operator*(const NcPoly& o) const;  // concatenation product
    NcPoly scaled(const Scalar& c) const;

    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);

    bool operator==(const NcPoly& o) const;
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

    std::string to_text() const;

private:
    void check_alphabet(const NcPoly& o) const;
    Alphabet alph_;
    std::map<Word, Scalar, DegLexLess> terms_;
};

inline NcPoly operator*(const Scalar& c, const NcPoly& p) { return p.scaled(c); }

// Antilinear anti-homomorphism determined by images of the generators and a
// coefficient conjugation regime.
class StarMap {
public:
    StarMap(Alphabet alph, std::vector<NcPoly> images, Regime regime);
    NcPoly operator()(const NcPoly& p) const;
    Regime regime() const { return regime_; }

private:
    Alphabet alph_;
    std::vector<NcPoly> images_;
    Regime regime_;
};

// Algebra homomorphism determined by generator images (possibly into a
// different alphabet).
class GenMap {
public:
    GenMap(Alphabet domain, Alphabet codomain, std::vector<NcPoly> images);
    const Alphabet& domain() const { return dom_; }
    const Alphabet& codomain() const { return cod_; }
    const NcPoly& image(int gen) const { return images_.at(static_cast<size_t>(gen)); }
    NcPoly operator()(const NcPoly& p) const;

private:
    Alphabet dom_, cod_;
    std::vector<NcPoly> images_;
};

// Element of A (x) B: finite sum of coeff * (left word (x) right word).
class Tensor2 {
public:
    Tensor2() = default;
    Tensor2(Alphabet left, Alphabet right) : left_(std::move(left)), right_(std::move(right)) {}

    static Tensor2 of(const NcPoly& l, const NcPoly& r);

    const Alphabet& left_alphabet() const { return left_; }
    const Alphabet& right_alphabet() const { return right_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Word, Word>, Scalar>& terms() const { return terms_; }

    void add_term(const Word& l, const Word& r, const Scalar& c);

    Tensor2 operator+(const Tensor2& o) const;
    Tensor2 operator-(const Tensor2& o) const;
    Tensor2 operator*(const Tensor2& o) const;  // componentwise product
    Tensor2 scaled(const Scalar& c) const;

    // apply a polynomial map to every left (resp. right) leg and recollect
    Tensor2 map_left(const std::function<NcPoly(const NcPoly&)>& f) const;
    Tensor2 map_right(const std::function<NcPoly(const NcPoly&)>& f) const;

    bool operator==(const Tensor2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Tensor2& o) const { return !(*this == o); }

    std::string to_text() const;

private:
    Alphabet left_, right_;
    std::map<std::pair<Word, Word>, Scalar> terms_;
};

// Rectangular matrix with NcPoly entries.
class NcMatrix {
public:
    NcMatrix() : rows_(0), cols_(0) {}
    NcMatrix(int rows, int cols, const Alphabet& alph);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const NcPoly& at(int r, int c) const { return e_.at(idx(r, c)); }
    NcPoly& at(int r, int c) { return e_.at(idx(r, c)); }

    static NcMatrix identity(int n, const Alphabet& alph);

    NcMatrix operator+(const NcMatrix& o) const;
    NcMatrix operator-(const NcMatrix& o) const;
    NcMatrix operator*(const NcMatrix& o) const;  // entry order: (this entry)*(o entry)
    NcMatrix transposed() const;
    NcMatrix map(const std::function<NcPoly(const NcPoly&)>& f) const;  // entrywise
    NcPoly trace() const;

private:
    size_t idx(int r, int c) const;
    int rows_, cols_;
    std::vector<NcPoly> e_;
};

}  // namespace qorth
