#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "bb/polynomial.hpp"
#include "bb/term_order.hpp"

namespace bb {

/// True iff t lies in the support of f and has maximal degree there.
inline bool validate_marking(const Polynomial& f, const Term& t) {
    if (f.is_zero()) throw zero_polynomial_error("cannot mark the zero polynomial");
    return f.coefficient(t) != 0 && t.degree() == f.degree();
}

/// A nonzero polynomial together with one designated support term of maximal
/// degree. The marked term plays the role a leading term would play under a
/// degree compatible term ordering, without committing to any ordering.
class MarkedPolynomial {
  public:
    MarkedPolynomial(Polynomial poly, Term marked)
        : poly_(std::move(poly)), marked_(std::move(marked)) {
        if (!validate_marking(poly_, marked_))
            throw marking_error("marked term must be a maximal-degree support term");
    }

    const Polynomial& poly() const { return poly_; }
    const Term& marked_term() const { return marked_; }
    int degree() const { return marked_.degree(); }

    friend bool operator==(const MarkedPolynomial& a, const MarkedPolynomial& b) {
        return a.marked_ == b.marked_ && a.poly_ == b.poly_;
    }

  private:
    Polynomial poly_;
    Term marked_;
};

/// Marks f at its leading term under a degree compatible ordering.
inline MarkedPolynomial mark_by_degree_compatible_ordering(const Polynomial& f,
                                                           const TermOrdering& sigma) {
    if (!sigma.degree_compatible())
        throw strategy_error("marking requires a degree compatible term ordering");
    return MarkedPolynomial(f, sigma.leading_term(f));
}

/// Heuristic marking that prefers a mixed maximal-degree term (one involving
/// at least two variables) over pure powers, to steer the computation towards
/// border bases that no term ordering can produce. Ties break by deglex.
inline MarkedPolynomial mark_avoiding_pure_powers(const Polynomial& f) {
    if (f.is_zero()) throw zero_polynomial_error("cannot mark the zero polynomial");
    const TermOrdering deglex = TermOrdering::deglex();
    int d = f.degree();
    const Term* best = nullptr;
    bool best_mixed = false;
    for (const auto& [t, c] : f.terms()) {
        if (t.degree() != d) continue;
        bool mixed = !t.is_pure_power();
        if (best == nullptr || (mixed && !best_mixed) ||
            (mixed == best_mixed && deglex.greater(t, *best))) {
            best = &t;
            best_mixed = mixed;
        }
    }
    return MarkedPolynomial(f, *best);
}

/// Enumeration strategy for the supports fed into the interreduction: maps a
/// finite term set to a degree-nonincreasing sequence. Ties inside a degree
/// are resolved per strategy; the explicit strategy follows a user-supplied
/// priority list (listed terms first, in list order) and falls back to
/// descending deglex for terms the list does not mention.
class TermEnumeration {
  public:
    enum class Kind { DegLexDescending, DegRevLexDescending, Explicit };

    TermEnumeration() : TermEnumeration(Kind::DegLexDescending) {}

    explicit TermEnumeration(Kind kind, std::vector<Term> priority = {})
        : kind_(kind), priority_(std::move(priority)) {
        if (kind_ == Kind::Explicit && priority_.empty())
            throw strategy_error("explicit enumeration needs a term sequence");
    }

    static TermEnumeration deglex_descending() { return TermEnumeration(Kind::DegLexDescending); }
    static TermEnumeration degrevlex_descending() {
        return TermEnumeration(Kind::DegRevLexDescending);
    }
    static TermEnumeration explicit_sequence(std::vector<Term> terms) {
        return TermEnumeration(Kind::Explicit, std::move(terms));
    }

    Kind kind() const { return kind_; }

    std::vector<Term> enumerate(const TermSet& terms) const {
        std::vector<Term> out(terms.begin(), terms.end());
        const TermOrdering tie(kind_ == Kind::DegRevLexDescending ? TermOrdering::Kind::DegRevLex
                                                                  : TermOrdering::Kind::DegLex);
        if (kind_ != Kind::Explicit) {
            // Descending deglex/degrevlex is already degree nonincreasing.
            std::sort(out.begin(), out.end(),
                      [&](const Term& a, const Term& b) { return tie.greater(a, b); });
            return out;
        }
        auto rank = [&](const Term& t) -> std::size_t {
            for (std::size_t i = 0; i < priority_.size(); ++i)
                if (priority_[i] == t) return i;
            return priority_.size();
        };
        std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
            int da = a.degree(), db = b.degree();
            if (da != db) return da > db;
            std::size_t ra = rank(a), rb = rank(b);
            if (ra != rb) return ra < rb;
            return tie.greater(a, b);
        });
        return out;
    }

  private:
    Kind kind_;
    std::vector<Term> priority_;
};

}  // namespace bb
