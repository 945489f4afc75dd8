#include "qorth/rewrite.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qorth {

namespace {
const DegLexLess kLess{};
}

RewriteSystem::RewriteSystem(Alphabet alph, std::vector<Rule> rules)
    : alph_(std::move(alph)), rules_(std::move(rules)) {
    by_first_.assign(static_cast<size_t>(alph_.size()), {});
    std::map<Word, int> seen;
    for (size_t k = 0; k < rules_.size(); ++k) {
        const Rule& rule = rules_[k];
        if (rule.lhs.empty()) throw std::invalid_argument("RewriteSystem: empty rule lhs");
        if (!rule.rhs.alphabet().same(alph_))
            throw std::invalid_argument("RewriteSystem: rhs alphabet mismatch");
        if (!seen.emplace(rule.lhs, 1).second)
            throw std::invalid_argument("RewriteSystem: two rules share an lhs");
        for (const auto& [w, c] : rule.rhs.terms())
            if (!kLess(w, rule.lhs))
                throw std::invalid_argument("RewriteSystem: rule is not order-decreasing");
        by_first_[static_cast<unsigned char>(rule.lhs[0])].push_back(k);
    }
}

std::optional<std::pair<size_t, size_t>> RewriteSystem::find_redex(const Word& w) const {
    for (size_t pos = 0; pos < w.size(); ++pos) {
        size_t best = rules_.size();
        for (size_t idx : by_first_[static_cast<unsigned char>(w[pos])]) {
            const Word& lhs = rules_[idx].lhs;
            if (lhs.size() <= w.size() - pos && w.compare(pos, lhs.size(), lhs) == 0)
                best = std::min(best, idx);
        }
        if (best < rules_.size()) return std::make_pair(pos, best);
    }
    return std::nullopt;
}

NcPoly RewriteSystem::normal_form(const NcPoly& p) const {
    if (!p.alphabet().same(alph_)) throw std::invalid_argument("normal_form: alphabet mismatch");
    // terms still to be processed, worked from the largest down; reduced
    // words accumulate in done
    std::map<Word, Scalar, DegLexLess> pending(p.terms().begin(), p.terms().end());
    NcPoly done(alph_);
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word w = it->first;
        Scalar c = it->second;
        pending.erase(it);
        if (c.is_zero()) continue;
        auto redex = find_redex(w);
        if (!redex) {
            done.add_term(w, c);
            continue;
        }
        auto [pos, idx] = *redex;
        const Rule& rule = rules_[idx];
        Word prefix = w.substr(0, pos);
        Word suffix = w.substr(pos + rule.lhs.size());
        for (const auto& [rw, rc] : rule.rhs.terms()) {
            Word nw = prefix + rw + suffix;
            Scalar nc = c * rc;
            auto [slot, fresh] = pending.emplace(nw, nc);
            if (!fresh) {
                slot->second += nc;
                if (slot->second.is_zero()) pending.erase(slot);
            }
        }
    }
    return done;
}

std::vector<CriticalPairFailure> check_confluence(const RewriteSystem& rs,
                                                  int max_overlap_degree) {
    std::vector<CriticalPairFailure> failures;
    const auto& rules = rs.rules();
    const Alphabet& alph = rs.alphabet();
    auto poly_of = [&](const Word& w) { return NcPoly(alph, w, Scalar::one()); };

    for (size_t a = 0; a < rules.size(); ++a) {
        const Word& la = rules[a].lhs;
        for (size_t b = 0; b < rules.size(); ++b) {
            const Word& lb = rules[b].lhs;
            // overlap: la = X Y, lb = Y Z with nonempty Y shorter than both
            for (size_t k = 1; k < std::min(la.size(), lb.size()); ++k) {
                if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
                Word super = la + lb.substr(k);
                if (static_cast<int>(super.size()) > max_overlap_degree) continue;
                NcPoly left = rules[a].rhs * poly_of(lb.substr(k));
                NcPoly right = poly_of(la.substr(0, la.size() - k)) * rules[b].rhs;
                NcPoly diff = rs.normal_form(left - right);
                if (!diff.is_zero()) failures.push_back({a, b, super, diff});
            }
            // inclusion: lb occurs strictly inside la
            if (a != b && lb.size() < la.size()) {
                for (size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
                    if (la.compare(pos, lb.size(), lb) != 0) continue;
                    if (static_cast<int>(la.size()) > max_overlap_degree) continue;
                    NcPoly left = rules[a].rhs;
                    NcPoly right =
                        poly_of(la.substr(0, pos)) * rules[b].rhs * poly_of(la.substr(pos + lb.size()));
                    NcPoly diff = rs.normal_form(left - right);
                    if (!diff.is_zero()) failures.push_back({a, b, la, diff});
                }
            }
        }
    }
    return failures;
}

// --------------------------------------------------------- ideal membership

namespace {

// sparse row over a word-indexed column space
struct SparseRow {
    std::map<Word, Scalar, DegLexLess> entries;
    std::map<size_t, Scalar> provenance;  // generator-instance index -> coefficient
};

void row_axpy(SparseRow& dst, const Scalar& c, const SparseRow& src) {
    for (const auto& [w, v] : src.entries) {
        auto [it, fresh] = dst.entries.emplace(w, c * v);
        if (!fresh) {
            it->second += c * v;
            if (it->second.is_zero()) dst.entries.erase(it);
        }
    }
    for (const auto& [g, v] : src.provenance) {
        auto [it, fresh] = dst.provenance.emplace(g, c * v);
        if (!fresh) {
            it->second += c * v;
            if (it->second.is_zero()) dst.provenance.erase(it);
        }
    }
}

struct GeneratorInstance {
    size_t relation_index;
    Word left, right;
};

}  // namespace

struct IdealSpan::Impl {
    Alphabet alph;
    int bound = 0;
    std::vector<SparseRow> rows;
    std::vector<GeneratorInstance> instances;
    std::vector<NcPoly> relations;
    struct Pivot {
        Word column;
        size_t row;
    };
    std::vector<Pivot> pivots;
};

IdealSpan::IdealSpan(Alphabet alph_in, std::vector<NcPoly> relations, int bound)
    : impl_(std::make_unique<Impl>()) {
    impl_->alph = std::move(alph_in);
    impl_->bound = bound;
    impl_->relations = std::move(relations);
    const Alphabet& alph = impl_->alph;

    // enumerate words up to a length
    auto words_up_to = [&](int len) {
        std::vector<Word> out{Word()};
        std::vector<Word> layer{Word()};
        for (int d = 1; d <= len; ++d) {
            std::vector<Word> next;
            for (const auto& w : layer)
                for (int g = 0; g < alph.size(); ++g) {
                    Word nw = w;
                    nw.push_back(static_cast<char>(g));
                    next.push_back(nw);
                }
            out.insert(out.end(), next.begin(), next.end());
            layer = std::move(next);
        }
        return out;
    };

    std::vector<SparseRow>& rows = impl_->rows;
    std::vector<GeneratorInstance>& instances = impl_->instances;
    std::map<Word, int> column_use;  // live occurrence counts per column

    for (size_t rix = 0; rix < impl_->relations.size(); ++rix) {
        const NcPoly& g = impl_->relations[rix];
        if (g.is_zero()) continue;
        if (!g.alphabet().same(alph)) throw std::invalid_argument("ideal span: alphabet mismatch");
        int gdeg = g.degree();
        int room = bound - gdeg;
        if (room < 0) continue;
        for (const auto& lw : words_up_to(room)) {
            int remain = room - static_cast<int>(lw.size());
            for (const auto& rw : words_up_to(remain)) {
                SparseRow row;
                for (const auto& [w, c] : g.terms()) row.entries.emplace(lw + w + rw, c);
                row.provenance.emplace(instances.size(), Scalar::one());
                instances.push_back({rix, lw, rw});
                rows.push_back(std::move(row));
            }
        }
    }

    for (const auto& row : rows)
        for (const auto& [w, c] : row.entries) column_use[w] += 1;

    // forward elimination with fewest-occupancy pivot columns
    std::vector<size_t> alive(rows.size());
    for (size_t k = 0; k < rows.size(); ++k) alive[k] = k;
    auto& pivots = impl_->pivots;

    while (true) {
        // pick the live column with the fewest live-row occurrences
        Word best_col;
        int best_use = -1;
        for (const auto& [w, used] : column_use) {
            if (used <= 0) continue;
            if (best_use < 0 || used < best_use || (used == best_use && kLess(w, best_col))) {
                best_use = used;
                best_col = w;
            }
        }
        if (best_use < 0) break;
        // pivot row: fewest entries, then lowest index
        size_t pick = rows.size();
        size_t pick_size = 0;
        for (size_t k : alive) {
            auto it = rows[k].entries.find(best_col);
            if (it == rows[k].entries.end()) continue;
            if (pick == rows.size() || rows[k].entries.size() < pick_size) {
                pick = k;
                pick_size = rows[k].entries.size();
            }
        }
        if (pick == rows.size()) {
            column_use[best_col] = 0;
            continue;
        }
        // normalize and eliminate everywhere else
        SparseRow& prow = rows[pick];
        Scalar inv = prow.entries.at(best_col).inverse();
        for (auto& [w, c] : prow.entries) c *= inv;
        for (auto& [g, c] : prow.provenance) c *= inv;
        for (const auto& [w, c] : prow.entries) column_use[w] -= 1;
        std::vector<size_t> next_alive;
        next_alive.reserve(alive.size());
        for (size_t k : alive) {
            if (k == pick) continue;
            auto it = rows[k].entries.find(best_col);
            if (it != rows[k].entries.end()) {
                Scalar c = -it->second;
                for (const auto& [w, v] : rows[k].entries) column_use[w] -= 1;
                row_axpy(rows[k], c, prow);
                for (const auto& [w, v] : rows[k].entries) column_use[w] += 1;
            }
            if (!rows[k].entries.empty()) next_alive.push_back(k);
        }
        alive = std::move(next_alive);
        pivots.push_back({best_col, pick});
        column_use[best_col] = 0;
    }
}

IdealSpan::~IdealSpan() = default;
IdealSpan::IdealSpan(IdealSpan&&) noexcept = default;
IdealSpan& IdealSpan::operator=(IdealSpan&&) noexcept = default;

int IdealSpan::degree_bound() const { return impl_->bound; }

MembershipResult IdealSpan::member(const NcPoly& target) const {
    if (target.degree() > impl_->bound)
        throw std::invalid_argument("ideal span: degree bound below target degree");
    const auto& rows = impl_->rows;
    const auto& instances = impl_->instances;
    const auto& pivots = impl_->pivots;

    // reduce the target against the pivot rows, collecting the combination
    std::map<Word, Scalar, DegLexLess> residual(target.terms().begin(), target.terms().end());
    std::map<size_t, Scalar> combination;
    for (const auto& piv : pivots) {
        auto it = residual.find(piv.column);
        if (it == residual.end()) continue;
        Scalar c = it->second;
        for (const auto& [w, v] : rows[piv.row].entries) {
            auto [slot, fresh] = residual.emplace(w, -(c * v));
            if (!fresh) {
                slot->second -= c * v;
                if (slot->second.is_zero()) residual.erase(slot);
            }
        }
        for (const auto& [g, v] : rows[piv.row].provenance) {
            auto [slot, fresh] = combination.emplace(g, c * v);
            if (!fresh) {
                slot->second += c * v;
                if (slot->second.is_zero()) combination.erase(slot);
            }
        }
    }
    MembershipResult res;
    if (!residual.empty()) {
        res.member = false;
        res.inconclusive = true;  // a larger bound might still certify membership
        return res;
    }
    res.member = true;
    for (const auto& [g, c] : combination) {
        if (c.is_zero()) continue;
        res.certificate.push_back({instances[g].relation_index, instances[g].left,
                                   instances[g].right, c});
    }
    return res;
}

RewriteSystem rules_from_relations(const Alphabet& alph, const std::vector<NcPoly>& relations) {
    // Gaussian elimination on the relation rows, always eliminating the
    // deg-lex largest remaining word.
    std::vector<NcPoly> rows;
    for (const auto& r : relations)
        if (!r.is_zero()) rows.push_back(r);

    std::vector<NcPoly> basis;
    for (size_t k = 0; k < rows.size(); ++k) {
        NcPoly row = rows[k];
        for (const auto& b : basis) {
            const Word& lead = b.terms().rbegin()->first;
            Scalar c = row.coeff(lead);
            if (!c.is_zero()) row -= b.scaled(c);
        }
        if (row.is_zero()) continue;
        Scalar lead_inv = row.terms().rbegin()->second.inverse();
        row = row.scaled(lead_inv);
        // back-substitute into the existing basis
        for (auto& b : basis) {
            Scalar c = b.coeff(row.terms().rbegin()->first);
            if (!c.is_zero()) b -= row.scaled(c);
        }
        basis.push_back(std::move(row));
    }

    std::vector<Rule> rules;
    for (const auto& b : basis) {
        Word lead = b.terms().rbegin()->first;
        NcPoly rhs = NcPoly(alph) - (b - NcPoly(alph, lead, b.terms().rbegin()->second));
        rules.push_back({lead, std::move(rhs)});
    }
    std::sort(rules.begin(), rules.end(),
              [](const Rule& x, const Rule& y) { return kLess(x.lhs, y.lhs); });
    return RewriteSystem(alph, std::move(rules));
}

}  // namespace qorth
