#pragma once

#include <map>
#include <vector>

#include "bb/marking.hpp"
#include "bb/order_ideal.hpp"
#include "bb/polynomial.hpp"

namespace bb {

/// Formal multiplication matrix for one variable over an order ideal basis:
/// the column of t describes x_i * t expressed in the order ideal, either as
/// the unit vector of x_i * t or, for border terms, as the tail of the basis
/// polynomial marked there.
struct MultiplicationMatrix {
    int variable = 0;
    std::vector<std::vector<Rational>> entries;  // entries[row][col], square of size |O|
};

namespace detail {

inline std::vector<std::vector<Rational>> matrix_product(
    const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

}  // namespace detail

/// Builds the n formal multiplication matrices of a structural border
/// prebasis. Throws structure_error when G is not a prebasis for O: the
/// marked terms must be exactly the border, each with coefficient one, and
/// every remaining support term must lie in O.
inline std::vector<MultiplicationMatrix> multiplication_matrices(
    const std::vector<MarkedPolynomial>& G, const OrderIdeal& O) {
    const int n = O.nvars();
    const TermSet border = O.border();

    std::map<Term, const MarkedPolynomial*> by_marked;
    for (const MarkedPolynomial& g : G) {
        if (!by_marked.emplace(g.marked_term(), &g).second)
            throw structure_error("two polynomials share a marked term");
        if (!border.contains(g.marked_term()))
            throw structure_error("marked term is not a border term");
        if (g.poly().coefficient(g.marked_term()) != 1)
            throw structure_error("marked term must have coefficient one");
        for (const auto& [t, c] : g.poly().terms())
            if (t != g.marked_term() && !O.contains(t))
                throw structure_error("support term outside the order ideal");
    }
    if (by_marked.size() != border.size())
        throw structure_error("one polynomial per border term required");

    std::vector<Term> basis(O.terms().begin(), O.terms().end());
    std::map<Term, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    std::vector<MultiplicationMatrix> matrices;
    for (int v = 0; v < n; ++v) {
        MultiplicationMatrix m;
        m.variable = v;
        m.entries.assign(basis.size(), std::vector<Rational>(basis.size(), Rational(0)));
        for (std::size_t col = 0; col < basis.size(); ++col) {
            const Term product = term_mul_variable(basis[col], v);
            if (auto it = index.find(product); it != index.end()) {
                m.entries[it->second][col] = 1;
                continue;
            }
            // product is a border term; its column is the negated tail of the
            // polynomial marked there.
            const MarkedPolynomial& g = *by_marked.at(product);
            for (const auto& [t, c] : g.poly().terms())
                if (t != g.marked_term()) m.entries[index.at(t)][col] = -c;
        }
        matrices.push_back(std::move(m));
    }
    return matrices;
}

/// Certifies a border basis: a structural prebasis is the border basis of the
/// ideal it generates iff its formal multiplication matrices pairwise
/// commute. Exact arithmetic, exact equality.
inline bool is_border_basis(const std::vector<MarkedPolynomial>& G, const OrderIdeal& O) {
    const std::vector<MultiplicationMatrix> m = multiplication_matrices(G, O);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (detail::matrix_product(m[i].entries, m[j].entries) !=
                detail::matrix_product(m[j].entries, m[i].entries))
                return false;
    return true;
}

/// Exact evaluation of f at a rational point.
inline Rational evaluate(const Polynomial& f, const std::vector<Rational>& point) {
    Rational sum(0);
    for (const auto& [t, c] : f.terms()) {
        if (t.nvars() != static_cast<int>(point.size()))
            throw dimension_error("point dimension does not match the ring");
        Rational value = c;
        for (int i = 0; i < t.nvars(); ++i)
            for (int e = 0; e < t.exponent(i); ++e) value *= point[i];
        sum += value;
    }
    return sum;
}

}  // namespace bb
