#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bb/marking.hpp"
#include "bb/polynomial.hpp"

namespace bb {

/// A branch point recorded while reassigning a row pivot: the minimum nonzero
/// column shares its degree with other nonzero columns of the row, so any of
/// them would keep the algorithm correct. Logged only when the candidate set
/// has more than one element.
struct ChoicePoint {
    int call_id = 0;              // which interreduction call within a run
    int ordinal = 0;              // position among this call's logged choices
    int row = 0;                  // row whose pivot was reassigned
    std::vector<int> candidates;  // same-degree columns with nonzero entry, increasing
    int chosen = 0;               // the column actually selected

    friend bool operator==(const ChoicePoint& a, const ChoicePoint& b) {
        return a.call_id == b.call_id && a.ordinal == b.ordinal && a.row == b.row &&
               a.candidates == b.candidates && a.chosen == b.chosen;
    }
};

/// Pivot overrides keyed by (call id, choice ordinal): at that branch point
/// the given column is selected instead of the minimum one. The column must
/// belong to the recorded candidate set.
using PivotOverrides = std::map<std::pair<int, int>, int>;

struct InterreductionResult {
    std::vector<MarkedPolynomial> reduced;
    std::vector<ChoicePoint> log;
};

/// Gaussian elimination over the enumerated support union that normalizes
/// every marked term to coefficient one and eliminates it from all other
/// rows. The output spans the same rational vector space as the input, its
/// markings are valid and pairwise distinct, and no output marked term occurs
/// in the support of another output polynomial. A pivot lost to elimination
/// is reassigned to the minimum nonzero column of its row; when several
/// columns of the same degree qualify, the selection is a logged branch point
/// that an override may redirect.
inline InterreductionResult marked_interreduce(const std::vector<MarkedPolynomial>& inputs,
                                               const TermEnumeration& enumeration,
                                               const PivotOverrides& overrides = {},
                                               int call_id = 0) {
    InterreductionResult result;
    if (inputs.empty()) return result;

    TermSet support_union;
    for (const MarkedPolynomial& f : inputs)
        for (const auto& [t, c] : f.poly().terms()) support_union.insert(t);

    const std::vector<Term> terms = enumeration.enumerate(support_union);
    const std::size_t l = terms.size();
    const std::size_t s = inputs.size();

    std::map<Term, std::size_t> column;
    for (std::size_t j = 0; j < l; ++j) column.emplace(terms[j], j);

    std::vector<std::vector<Rational>> a(s, std::vector<Rational>(l, Rational(0)));
    std::vector<std::size_t> pivot(s);
    for (std::size_t i = 0; i < s; ++i) {
        for (const auto& [t, c] : inputs[i].poly().terms()) a[i][column.at(t)] = c;
        pivot[i] = column.at(inputs[i].marked_term());
    }

    auto row_is_zero = [&](std::size_t k) {
        for (const Rational& v : a[k])
            if (v != 0) return false;
        return true;
    };

    int ordinal = 0;
    for (std::size_t i = 0; i < s; ++i) {
        if (a[i][pivot[i]] != 0) {
            const Rational inv = 1 / a[i][pivot[i]];
            for (Rational& v : a[i]) v *= inv;
        } else if (!row_is_zero(i)) {
            // The pivot bookkeeping below keeps every nonzero row's pivot
            // entry nonzero; reaching this line means the invariant broke.
            throw error("internal: nonzero row with zero pivot entry");
        }
        const std::size_t pi = pivot[i];
        for (std::size_t k = 0; k < s; ++k) {
            if (k == i || a[k][pi] == 0) continue;
            const Rational factor = a[k][pi];
            for (std::size_t j = 0; j < l; ++j) a[k][j] -= factor * a[i][j];
        }
        // Reassign pivots invalidated by the elimination above.
        for (std::size_t k = i + 1; k < s; ++k) {
            if (a[k][pivot[k]] != 0) continue;
            std::size_t j = 0;
            while (j < l && a[k][j] == 0) ++j;
            if (j == l) continue;  // row reduced to zero; dropped below
            std::vector<int> candidates;
            const int deg = terms[j].degree();
            for (std::size_t c = j; c < l && terms[c].degree() == deg; ++c)
                if (a[k][c] != 0) candidates.push_back(static_cast<int>(c));
            std::size_t chosen = j;
            if (candidates.size() > 1) {
                if (auto it = overrides.find({call_id, ordinal}); it != overrides.end()) {
                    bool valid = false;
                    for (int c : candidates) valid = valid || c == it->second;
                    if (!valid) throw contract_error("pivot override outside the candidate set");
                    chosen = static_cast<std::size_t>(it->second);
                }
                result.log.push_back(
                    {call_id, ordinal, static_cast<int>(k), candidates, static_cast<int>(chosen)});
                ++ordinal;
            }
            pivot[k] = chosen;
        }
    }

    for (std::size_t i = 0; i < s; ++i) {
        Polynomial::TermMap entries;
        for (std::size_t j = 0; j < l; ++j)
            if (a[i][j] != 0) entries.emplace(terms[j], a[i][j]);
        if (!entries.empty())
            result.reduced.emplace_back(Polynomial::from_terms(std::move(entries)), terms[pivot[i]]);
    }
    return result;
}

}  // namespace bb
