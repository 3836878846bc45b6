#pragma once

#include <compare>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bb/errors.hpp"

namespace bb {

/// A term (power product) of the monoid of monomials in n variables,
/// stored as its exponent vector. The ambient variable count n is the
/// vector length and is fixed per computation.
class Term {
  public:
    Term() = default;

    explicit Term(std::vector<int> exponents) : exponents_(std::move(exponents)) {
        if (exponents_.empty()) throw dimension_error("term needs at least one variable");
        for (int e : exponents_)
            if (e < 0) throw error("negative exponent");
    }

    /// The term 1 in n variables.
    static Term one(int nvars) { return Term(std::vector<int>(nvars, 0)); }

    /// The variable x_i (0-based index) in n variables.
    static Term variable(int nvars, int i) {
        if (i < 0 || i >= nvars) throw dimension_error("variable index out of range");
        std::vector<int> e(nvars, 0);
        e[i] = 1;
        return Term(std::move(e));
    }

    int nvars() const { return static_cast<int>(exponents_.size()); }
    int exponent(int i) const { return exponents_[i]; }
    const std::vector<int>& exponents() const { return exponents_; }

    int degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

    bool is_one() const {
        for (int e : exponents_)
            if (e != 0) return false;
        return true;
    }

    /// True when the term involves at most one variable (1, x, x^2, ...).
    bool is_pure_power() const {
        int positive = 0;
        for (int e : exponents_)
            if (e > 0) ++positive;
        return positive <= 1;
    }

    // Canonical storage order: plain lexicographic comparison of exponent
    // vectors. This is only a tie-breaking device for deterministic set and
    // map iteration, not a term ordering in the algebraic sense.
    auto operator<=>(const Term& other) const = default;

    friend bool same_ring(const Term& a, const Term& b) { return a.nvars() == b.nvars(); }

  private:
    std::vector<int> exponents_;
};

using TermSet = std::set<Term>;

/// Componentwise sum of exponents (the monoid product t * u).
inline Term term_mul(const Term& t, const Term& u) {
    if (!same_ring(t, u)) throw dimension_error("term product across different rings");
    std::vector<int> e(t.exponents());
    for (int i = 0; i < u.nvars(); ++i) e[i] += u.exponent(i);
    return Term(std::move(e));
}

/// Multiplication by one variable, t * x_i.
inline Term term_mul_variable(const Term& t, int i) {
    return term_mul(t, Term::variable(t.nvars(), i));
}

/// True iff t divides u, i.e. every exponent of t is <= that of u.
inline bool term_divides(const Term& t, const Term& u) {
    if (!same_ring(t, u)) throw dimension_error("divisibility across different rings");
    for (int i = 0; i < t.nvars(); ++i)
        if (t.exponent(i) > u.exponent(i)) return false;
    return true;
}

/// The quotient u / t; requires t | u.
inline Term term_quotient(const Term& u, const Term& t) {
    if (!term_divides(t, u)) throw error("term quotient without divisibility");
    std::vector<int> e(u.exponents());
    for (int i = 0; i < t.nvars(); ++i) e[i] -= t.exponent(i);
    return Term(std::move(e));
}

/// Renders a term like "x^2*y" against variable names; "1" for the unit.
inline std::string to_string(const Term& t, const std::vector<std::string>& names) {
    std::string out;
    for (int i = 0; i < t.nvars(); ++i) {
        int e = t.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += names[static_cast<std::size_t>(i)];
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

}  // namespace bb
