#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "bb/errors.hpp"
#include "bb/polynomial.hpp"
#include "bb/term.hpp"

namespace bb {

/// A term ordering: lex, deglex or degrevlex together with a variable
/// priority permutation (priority[0] is the most significant variable,
/// default x_1 > x_2 > ... in declaration order).
class TermOrdering {
  public:
    enum class Kind { Lex, DegLex, DegRevLex };

    explicit TermOrdering(Kind kind, std::vector<int> priority = {})
        : kind_(kind), priority_(std::move(priority)) {}

    static TermOrdering lex() { return TermOrdering(Kind::Lex); }
    static TermOrdering deglex() { return TermOrdering(Kind::DegLex); }
    static TermOrdering degrevlex() { return TermOrdering(Kind::DegRevLex); }

    Kind kind() const { return kind_; }

    /// Degree-compatible orderings refine comparison by total degree; their
    /// leading terms are always maximal-degree support terms.
    bool degree_compatible() const { return kind_ != Kind::Lex; }

    /// Three-way comparison: negative when t < u, zero on equality.
    int compare(const Term& t, const Term& u) const {
        if (!same_ring(t, u)) throw dimension_error("comparing terms of different rings");
        if (degree_compatible()) {
            int dt = t.degree(), du = u.degree();
            if (dt != du) return dt < du ? -1 : 1;
        }
        const std::vector<int> order = priority_for(t.nvars());
        if (kind_ == Kind::DegRevLex) {
            // Ties break on the least significant variable: the term with the
            // smaller exponent there is the larger one.
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                int a = t.exponent(*it), b = u.exponent(*it);
                if (a != b) return a > b ? -1 : 1;
            }
            return 0;
        }
        for (int i : order) {
            int a = t.exponent(i), b = u.exponent(i);
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }

    bool less(const Term& t, const Term& u) const { return compare(t, u) < 0; }
    bool greater(const Term& t, const Term& u) const { return compare(t, u) > 0; }

    /// The maximal support term of a nonzero polynomial.
    Term leading_term(const Polynomial& f) const {
        if (f.is_zero()) throw zero_polynomial_error("leading term of zero");
        const Term* best = nullptr;
        for (const auto& [t, c] : f.terms())
            if (best == nullptr || greater(t, *best)) best = &t;
        return *best;
    }

    Rational leading_coefficient(const Polynomial& f) const {
        return f.coefficient(leading_term(f));
    }

    std::string name() const {
        switch (kind_) {
            case Kind::Lex: return "lex";
            case Kind::DegLex: return "deglex";
            case Kind::DegRevLex: return "degrevlex";
        }
        return "?";
    }

  private:
    std::vector<int> priority_for(int nvars) const {
        if (!priority_.empty()) {
            if (static_cast<int>(priority_.size()) != nvars)
                throw dimension_error("priority permutation size mismatch");
            return priority_;
        }
        std::vector<int> id(static_cast<std::size_t>(nvars));
        std::iota(id.begin(), id.end(), 0);
        return id;
    }

    Kind kind_;
    std::vector<int> priority_;
};

}  // namespace bb
