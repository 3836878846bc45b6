#pragma once

#include <vector>

#include "bb/term.hpp"

namespace bb {

namespace detail {

// Enumerates every divisor of t into out.
inline void collect_divisors(const Term& t, TermSet& out) {
    std::vector<int> e(static_cast<std::size_t>(t.nvars()), 0);
    // Odometer over the box [0, t].
    while (true) {
        out.insert(Term(e));
        int i = 0;
        for (; i < t.nvars(); ++i) {
            if (e[static_cast<std::size_t>(i)] < t.exponent(i)) {
                ++e[static_cast<std::size_t>(i)];
                break;
            }
            e[static_cast<std::size_t>(i)] = 0;
        }
        if (i == t.nvars()) return;
    }
}

}  // namespace detail

/// True iff S is closed under taking divisors. Closure under division by a
/// single variable suffices and is what gets checked.
inline bool is_order_ideal(const TermSet& terms) {
    for (const Term& t : terms) {
        for (int i = 0; i < t.nvars(); ++i) {
            if (t.exponent(i) == 0) continue;
            std::vector<int> e(t.exponents());
            --e[static_cast<std::size_t>(i)];
            if (!terms.contains(Term(std::move(e)))) return false;
        }
    }
    return true;
}

/// A finite set of terms closed under taking divisors. Carries the ambient
/// variable count explicitly so the empty order ideal still knows its ring.
class OrderIdeal {
  public:
    explicit OrderIdeal(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw dimension_error("need at least one variable");
    }

    /// The smallest order ideal containing the given terms (all divisors of
    /// all generators).
    static OrderIdeal span(int nvars, const TermSet& generators) {
        OrderIdeal o(nvars);
        for (const Term& t : generators) {
            if (t.nvars() != nvars) throw dimension_error("generator from a different ring");
            detail::collect_divisors(t, o.terms_);
        }
        return o;
    }

    /// Wraps an existing set, validating closedness.
    static OrderIdeal from_terms(int nvars, TermSet terms) {
        if (!is_order_ideal(terms)) throw error("term set is not closed under divisors");
        OrderIdeal o(nvars);
        o.terms_ = std::move(terms);
        return o;
    }

    int nvars() const { return nvars_; }
    const TermSet& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool contains(const Term& t) const { return terms_.contains(t); }

    bool contains_all(const TermSet& s) const {
        for (const Term& t : s)
            if (!terms_.contains(t)) return false;
        return true;
    }

    /// The border: (x_1 O u ... u x_n O) \ O, and {1} for the empty order
    /// ideal.
    TermSet border() const {
        TermSet out;
        if (terms_.empty()) {
            out.insert(Term::one(nvars_));
            return out;
        }
        for (const Term& t : terms_)
            for (int i = 0; i < nvars_; ++i) {
                Term u = term_mul_variable(t, i);
                if (!terms_.contains(u)) out.insert(u);
            }
        return out;
    }

    /// O u x_1 O u ... u x_n O. Again an order ideal; the expansion of the
    /// empty order ideal is empty.
    OrderIdeal plus_expanded() const {
        OrderIdeal out(nvars_);
        out.terms_ = terms_;
        for (const Term& t : terms_)
            for (int i = 0; i < nvars_; ++i) out.terms_.insert(term_mul_variable(t, i));
        return out;
    }

    /// The order ideal spanned by this one and additional terms.
    OrderIdeal enlarged_by(const TermSet& extra) const {
        OrderIdeal out(nvars_);
        out.terms_ = terms_;
        for (const Term& t : extra) {
            if (t.nvars() != nvars_) throw dimension_error("term from a different ring");
            detail::collect_divisors(t, out.terms_);
        }
        return out;
    }

    friend bool operator==(const OrderIdeal& a, const OrderIdeal& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

  private:
    int nvars_;
    TermSet terms_;
};

}  // namespace bb
