#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bb/rational.hpp"
#include "bb/term.hpp"

namespace bb {

/// Sparse polynomial over the rationals: a finite association Term -> Rational
/// that never stores zero coefficients. The zero polynomial is the empty
/// association. Values are immutable in spirit: all operations return new
/// polynomials.
class Polynomial {
  public:
    using TermMap = std::map<Term, Rational>;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }

    static Polynomial monomial(Rational coeff, Term t) {
        Polynomial p;
        if (coeff != 0) p.terms_.emplace(std::move(t), std::move(coeff));
        return p;
    }

    static Polynomial constant(int nvars, Rational c) {
        return monomial(std::move(c), Term::one(nvars));
    }

    /// Builds a polynomial from explicit associations, pruning zeros.
    static Polynomial from_terms(TermMap terms) {
        Polynomial p;
        p.terms_ = std::move(terms);
        std::erase_if(p.terms_, [](const auto& entry) { return entry.second == 0; });
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of t, zero when absent.
    Rational coefficient(const Term& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// The support as a set of terms. Errors on the zero polynomial.
    TermSet support() const {
        require_nonzero();
        TermSet s;
        for (const auto& [t, c] : terms_) s.insert(t);
        return s;
    }

    /// Maximum degree over the support. Errors on the zero polynomial.
    int degree() const {
        require_nonzero();
        int d = 0;
        for (const auto& [t, c] : terms_) d = std::max(d, t.degree());
        return d;
    }

    int nvars() const {
        require_nonzero();
        return terms_.begin()->first.nvars();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        return a.terms_ < b.terms_;
    }

    friend Polynomial add_scaled(const Polynomial& f, const Rational& c, const Polynomial& g);
    friend Polynomial mul_by_variable(const Polynomial& f, int i);
    friend Polynomial mul_by_term(const Polynomial& f, const Term& t);
    friend Polynomial scale(const Polynomial& f, const Rational& c);

  private:
    void require_nonzero() const {
        if (terms_.empty()) throw zero_polynomial_error("operation undefined for the zero polynomial");
    }

    TermMap terms_;
};

/// f + c*g with zero coefficients pruned.
inline Polynomial add_scaled(const Polynomial& f, const Rational& c, const Polynomial& g) {
    if (c == 0) return f;
    Polynomial out = f;
    for (const auto& [t, gc] : g.terms_) {
        auto [it, inserted] = out.terms_.emplace(t, c * gc);
        if (!inserted) {
            it->second += c * gc;
            if (it->second == 0) out.terms_.erase(it);
        } else if (it->second == 0) {
            out.terms_.erase(it);
        }
    }
    return out;
}

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    return add_scaled(f, Rational(1), g);
}

inline Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    return add_scaled(f, Rational(-1), g);
}

inline Polynomial scale(const Polynomial& f, const Rational& c) {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [t, fc] : f.terms_) out.terms_.emplace(t, c * fc);
    return out;
}

/// x_i * f; every support term is multiplied by the variable.
inline Polynomial mul_by_variable(const Polynomial& f, int i) {
    Polynomial out;
    for (const auto& [t, c] : f.terms_) out.terms_.emplace(term_mul_variable(t, i), c);
    return out;
}

/// t * f for an arbitrary term t.
inline Polynomial mul_by_term(const Polynomial& f, const Term& t) {
    Polynomial out;
    for (const auto& [u, c] : f.terms_) out.terms_.emplace(term_mul(u, t), c);
    return out;
}

}  // namespace bb
