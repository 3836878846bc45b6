#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "bb/order_ideal.hpp"
#include "bb/polynomial.hpp"
#include "bb/term_order.hpp"

namespace bb {

namespace detail {

inline Term term_lcm(const Term& t, const Term& u) {
    std::vector<int> e(t.exponents());
    for (int i = 0; i < u.nvars(); ++i) e[i] = std::max(e[i], u.exponent(i));
    return Term(std::move(e));
}

}  // namespace detail

/// The unique normal form of f modulo G under sigma: every term divisible by
/// a leading term of G is reduced away. Zero iff f lies in the ideal when G
/// is a Groebner basis.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                              const TermOrdering& sigma) {
    std::vector<std::pair<Term, std::size_t>> leading;
    for (std::size_t i = 0; i < G.size(); ++i) leading.emplace_back(sigma.leading_term(G[i]), i);

    Polynomial::TermMap remainder;
    Polynomial work = f;
    while (!work.is_zero()) {
        const Term t = sigma.leading_term(work);
        const Rational c = work.coefficient(t);
        std::optional<std::size_t> reducer;
        for (const auto& [lt, i] : leading)
            if (term_divides(lt, t)) {
                reducer = i;
                break;
            }
        if (reducer) {
            const Polynomial& g = G[*reducer];
            const Rational factor = c / g.coefficient(sigma.leading_term(g));
            work = add_scaled(work, -factor,
                              mul_by_term(g, term_quotient(t, sigma.leading_term(g))));
        } else {
            remainder.emplace(t, c);
            work = add_scaled(work, -c, Polynomial::monomial(Rational(1), t));
        }
    }
    return Polynomial::from_terms(std::move(remainder));
}

/// Buchberger's algorithm with normal pair selection, the coprime-criterion
/// skip and full tail reduction: returns the unique reduced sigma-Groebner
/// basis of the ideal generated by F, monic and sorted by increasing leading
/// term.
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& F,
                                          const TermOrdering& sigma) {
    std::vector<Polynomial> basis;
    for (const Polynomial& f : F) {
        if (f.is_zero()) throw zero_polynomial_error("zero polynomial among generators");
        basis.push_back(scale(f, 1 / f.coefficient(sigma.leading_term(f))));
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        // Normal strategy: treat the pair with the smallest leading-term lcm
        // first.
        auto best = pairs.begin();
        Term best_lcm = detail::term_lcm(sigma.leading_term(basis[best->first]),
                                         sigma.leading_term(basis[best->second]));
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            Term lcm = detail::term_lcm(sigma.leading_term(basis[it->first]),
                                        sigma.leading_term(basis[it->second]));
            if (sigma.less(lcm, best_lcm)) {
                best = it;
                best_lcm = std::move(lcm);
            }
        }
        const auto [i, j] = *best;
        pairs.erase(best);

        const Term lt_i = sigma.leading_term(basis[i]);
        const Term lt_j = sigma.leading_term(basis[j]);
        if (best_lcm == term_mul(lt_i, lt_j)) continue;  // coprime leading terms

        Polynomial s = add_scaled(mul_by_term(basis[i], term_quotient(best_lcm, lt_i)),
                                  Rational(-1),
                                  mul_by_term(basis[j], term_quotient(best_lcm, lt_j)));
        Polynomial r = normal_form(s, basis, sigma);
        if (r.is_zero()) continue;
        r = scale(r, 1 / r.coefficient(sigma.leading_term(r)));
        for (std::size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
        basis.push_back(std::move(r));
    }

    // Minimalize: drop elements whose leading term another one divides.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Term lt = sigma.leading_term(basis[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Term other = sigma.leading_term(basis[j]);
            redundant = term_divides(other, lt) && (other != lt || j < i);
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Reduce tails against the other elements.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others, sigma);
        reduced.push_back(scale(r, 1 / r.coefficient(sigma.leading_term(r))));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return sigma.less(sigma.leading_term(a), sigma.leading_term(b));
    });
    return reduced;
}

/// The sigma-quotient basis: all terms not divisible by any leading term of
/// the Groebner basis. Requires the ideal to be zero-dimensional, i.e. a pure
/// power of every variable occurs among the leading terms.
inline OrderIdeal sigma_quotient_basis(const std::vector<Polynomial>& G,
                                       const TermOrdering& sigma) {
    if (G.empty()) throw dimension_error("empty basis generates no zero-dimensional ideal");
    const int n = G.front().nvars();

    std::vector<Term> leading;
    for (const Polynomial& g : G) leading.push_back(sigma.leading_term(g));

    std::vector<int> bound(n, -1);
    for (const Term& lt : leading) {
        if (!lt.is_pure_power()) continue;
        if (lt.is_one()) {
            for (int i = 0; i < n; ++i) bound[i] = 0;
            break;
        }
        for (int i = 0; i < n; ++i)
            if (lt.exponent(i) > 0 && (bound[i] < 0 || lt.exponent(i) < bound[i]))
                bound[i] = lt.exponent(i);
    }
    for (int i = 0; i < n; ++i)
        if (bound[i] < 0)
            throw dimension_error("ideal is not zero-dimensional: no pure power of variable " +
                                  std::to_string(i + 1) + " among the leading terms");

    TermSet terms;
    std::vector<int> e(n, 0);
    while (true) {
        Term t(e);
        bool divisible = false;
        for (const Term& lt : leading) divisible = divisible || term_divides(lt, t);
        if (!divisible) terms.insert(std::move(t));
        int i = 0;
        for (; i < n; ++i) {
            if (e[i] + 1 < bound[i]) {
                ++e[i];
                break;
            }
            e[i] = 0;
        }
        if (i == n) break;
    }
    return OrderIdeal::from_terms(n, std::move(terms));
}

}  // namespace bb
