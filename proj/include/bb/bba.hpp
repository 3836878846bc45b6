#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bb/interreduction.hpp"
#include "bb/marking.hpp"
#include "bb/order_ideal.hpp"
#include "bb/polynomial.hpp"

namespace bb {

/// Terminal states of a run. On success the basis is the unique border basis
/// of the input ideal for the returned order ideal; each element is marked at
/// its border term and its remaining support lies inside the order ideal.
struct Success {
    OrderIdeal order_ideal;
    std::vector<MarkedPolynomial> basis;
    OrderIdeal universe;
};

/// The candidate set U \ {marked terms} failed to be an order ideal. The core
/// is the largest always-order-ideal part (universe minus all multiples of
/// marked terms); the offending terms are candidate \ core, i.e. multiples of
/// marked terms that no polynomial of the current basis set accounts for.
struct StoppedAtT7 {
    TermSet candidate;
    OrderIdeal core;
    TermSet offending;
    OrderIdeal universe;
};

/// Backtracking explored every pivot alternative without reaching success:
/// the chosen input marking admits no border basis.
struct Exhausted {};

/// The configured iteration or node budget ran out. This guards inputs whose
/// ideal is not zero-dimensional, for which the algorithm need not terminate.
struct IterationLimit {};

using BBAOutcome = std::variant<Success, StoppedAtT7, Exhausted, IterationLimit>;

struct RunConfig {
    TermEnumeration enumeration = TermEnumeration::deglex_descending();
    int max_iterations = 0;  // 0: defaults to 10 * (nvars + max input degree)
    PivotOverrides overrides;
    int first_call_id = 0;
    std::function<void(const std::string&)> trace;  // step transition sink, may be null
};

struct RunReport {
    BBAOutcome outcome;
    std::vector<ChoicePoint> log;
    long interreduction_calls = 0;
    int iterations = 0;
};

inline bool succeeded(const BBAOutcome& outcome) {
    return std::holds_alternative<Success>(outcome);
}

/// One interreduction pass that turns any set of validly marked polynomials
/// into one satisfying the algorithm's entry condition: no marked term occurs
/// in the support of another polynomial.
inline InterreductionResult preprocess(const std::vector<MarkedPolynomial>& input,
                                       const TermEnumeration& enumeration, int call_id = 0) {
    for (const MarkedPolynomial& f : input)
        if (f.poly().is_zero()) throw contract_error("zero polynomial in input");
    return marked_interreduce(input, enumeration, {}, call_id);
}

/// The sequence V followed by the products x_i * v that do not already occur
/// in V as polynomials, each marked at x_i times the marked term of v.
/// Products are emitted in (variable index, source position) order and
/// duplicate product polynomials keep only their first occurrence.
inline std::vector<MarkedPolynomial> expand_and_mark_vplus(
    const std::vector<MarkedPolynomial>& v) {
    std::vector<MarkedPolynomial> out(v.begin(), v.end());
    if (v.empty()) return out;
    const int n = v.front().poly().nvars();
    std::set<Polynomial> seen;
    for (const MarkedPolynomial& f : v) seen.insert(f.poly());
    for (int i = 0; i < n; ++i)
        for (const MarkedPolynomial& f : v) {
            Polynomial product = mul_by_variable(f.poly(), i);
            if (!seen.insert(product).second) continue;
            Term marked = term_mul_variable(f.marked_term(), i);
            out.emplace_back(std::move(product), std::move(marked));
        }
    return out;
}

namespace detail {

inline void sort_by_marked_term(std::vector<MarkedPolynomial>& v) {
    std::sort(v.begin(), v.end(), [](const MarkedPolynomial& a, const MarkedPolynomial& b) {
        return a.marked_term() < b.marked_term();
    });
}

inline TermSet marked_terms(const std::vector<MarkedPolynomial>& v) {
    TermSet out;
    for (const MarkedPolynomial& f : v) out.insert(f.marked_term());
    return out;
}

}  // namespace detail

/// Runs the border basis computation on marked input polynomials. The input
/// must already satisfy the entry condition established by preprocess(); the
/// ideal it generates is assumed zero-dimensional, with the iteration limit
/// converting a violation of that assumption into a reported outcome.
inline RunReport run(const std::vector<MarkedPolynomial>& input, const RunConfig& config = {}) {
    if (input.empty()) throw contract_error("empty input");
    const int n = input.front().poly().nvars();
    int max_degree = 0;
    for (const MarkedPolynomial& f : input) {
        if (f.poly().nvars() != n) throw contract_error("inputs from different rings");
        max_degree = std::max(max_degree, f.degree());
    }
    for (std::size_t i = 0; i < input.size(); ++i)
        for (std::size_t j = 0; j < input.size(); ++j)
            if (i != j && input[j].poly().coefficient(input[i].marked_term()) != 0)
                throw contract_error("marked term occurs in the support of another input");

    const int iteration_limit =
        config.max_iterations > 0 ? config.max_iterations : 10 * (n + max_degree);
    auto trace = [&](const std::string& msg) {
        if (config.trace) config.trace(msg);
    };

    RunReport report;
    int call_id = config.first_call_id;
    auto interreduce = [&](const std::vector<MarkedPolynomial>& seq) {
        InterreductionResult r = marked_interreduce(seq, config.enumeration, config.overrides,
                                                    call_id++);
        ++report.interreduction_calls;
        for (const ChoicePoint& cp : r.log) report.log.push_back(cp);
        return r;
    };

    // (T1) the universe spanned by the input supports.
    TermSet input_support;
    for (const MarkedPolynomial& f : input)
        for (const auto& [t, c] : f.poly().terms()) input_support.insert(t);
    OrderIdeal universe = OrderIdeal::span(n, input_support);
    trace("T1 universe size=" + std::to_string(universe.size()));

    // (T2) a vector space basis of the input span with pairwise distinct
    // marked terms.
    std::vector<MarkedPolynomial> v = interreduce(input).reduced;
    detail::sort_by_marked_term(v);
    trace("T2 basis size=" + std::to_string(v.size()));

    while (true) {
        if (++report.iterations > iteration_limit) {
            trace("iteration limit reached");
            report.outcome = IterationLimit{};
            return report;
        }

        // (T3) extend by variable multiples and interreduce.
        const TermSet previous_marked = detail::marked_terms(v);
        InterreductionResult reduced = interreduce(expand_and_mark_vplus(v));
        std::vector<MarkedPolynomial> v_prime, w_prime;
        for (MarkedPolynomial& f : reduced.reduced) {
            if (previous_marked.contains(f.marked_term()))
                v_prime.push_back(std::move(f));
            else
                w_prime.push_back(std::move(f));
        }
        if (detail::marked_terms(v_prime) != previous_marked)
            throw error("internal: marked terms of the basis changed during extension");
        trace("T3 iteration=" + std::to_string(report.iterations) +
              " kept=" + std::to_string(v_prime.size()) +
              " new=" + std::to_string(w_prime.size()));

        // (T4)/(T5) keep the new polynomials whose marked term lies in the
        // universe and grow the universe until it covers their supports.
        std::vector<MarkedPolynomial> w;
        while (true) {
            w.clear();
            for (const MarkedPolynomial& f : w_prime)
                if (universe.contains(f.marked_term())) w.push_back(f);
            TermSet support;
            for (const MarkedPolynomial& f : w)
                for (const auto& [t, c] : f.poly().terms()) support.insert(t);
            if (universe.contains_all(support)) break;
            universe = universe.enlarged_by(support);
            trace("T5 universe enlarged to size=" + std::to_string(universe.size()));
        }

        // (T6) absorb the new polynomials and repeat, if there are any.
        if (!w.empty()) {
            trace("T6 absorbing " + std::to_string(w.size()) + " polynomials");
            v = std::move(v_prime);
            v.insert(v.end(), std::make_move_iterator(w.begin()), std::make_move_iterator(w.end()));
            detail::sort_by_marked_term(v);
            continue;
        }

        // (T7) candidate order ideal: universe minus the marked terms.
        const TermSet marked = detail::marked_terms(v);
        if (marked.size() != v.size())
            throw error("internal: duplicate marked terms at candidate construction");
        for (const MarkedPolynomial& f : v)
            if (!universe.contains_all(f.poly().support()))
                throw error("internal: basis support escaped the universe");
        TermSet candidate = universe.terms();
        for (const Term& t : marked) candidate.erase(t);
        if (!is_order_ideal(candidate)) {
            TermSet core_terms;
            for (const Term& u : universe.terms()) {
                bool multiple = false;
                for (const Term& m : marked) multiple = multiple || term_divides(m, u);
                if (!multiple) core_terms.insert(u);
            }
            TermSet offending;
            for (const Term& t : candidate)
                if (!core_terms.contains(t)) offending.insert(t);
            trace("T7 candidate of size=" + std::to_string(candidate.size()) +
                  " is not an order ideal");
            report.outcome = StoppedAtT7{std::move(candidate),
                                         OrderIdeal::from_terms(n, std::move(core_terms)),
                                         std::move(offending), std::move(universe)};
            return report;
        }
        OrderIdeal order_ideal = OrderIdeal::from_terms(n, std::move(candidate));
        trace("T7 order ideal size=" + std::to_string(order_ideal.size()));

        // (T8) expand the universe until it contains the border.
        const TermSet border = order_ideal.border();
        if (!universe.contains_all(border)) {
            universe = universe.plus_expanded();
            trace("T8 universe expanded to size=" + std::to_string(universe.size()));
            continue;
        }

        // (T9) the border basis: the polynomials marked at border terms.
        std::vector<MarkedPolynomial> basis;
        for (const MarkedPolynomial& f : v)
            if (border.contains(f.marked_term())) basis.push_back(f);
        trace("T9 success basis size=" + std::to_string(basis.size()));
        report.outcome = Success{std::move(order_ideal), std::move(basis), std::move(universe)};
        return report;
    }
}

/// Depth-first search over the logged pivot alternatives: reruns the
/// computation with redirected choices, most recent branch point first and
/// alternatives in increasing column order, until a run succeeds. The budget
/// caps the total number of interreduction executions across reruns.
inline RunReport run_with_backtracking(const std::vector<MarkedPolynomial>& input,
                                       const RunConfig& config = {}, long budget = 10000) {
    struct Node {
        PivotOverrides overrides;
        std::size_t pinned;  // branch points fixed by this node
    };

    RunConfig base = config;
    std::vector<Node> stack;
    stack.push_back({base.overrides, base.overrides.size()});

    long used = 0;
    bool first = true;
    bool hit_limit = false;
    RunReport default_report;

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        if (!first && budget >= 0 && used >= budget) {
            RunReport report = std::move(default_report);
            report.outcome = IterationLimit{};
            report.interreduction_calls = used;
            return report;
        }
        RunConfig attempt = base;
        attempt.overrides = node.overrides;
        RunReport report = run(input, attempt);
        used += report.interreduction_calls;
        if (first) default_report = report;
        first = false;
        if (succeeded(report.outcome)) {
            report.interreduction_calls = used;
            return report;
        }
        if (std::holds_alternative<IterationLimit>(report.outcome)) {
            // Cannot trust this branch's log to be complete; note and skip.
            hit_limit = true;
            continue;
        }
        // Children: redirect one free branch point, keeping all earlier
        // choices. Push order yields most-recent-first, alternatives in
        // increasing column order.
        for (std::size_t i = node.pinned; i < report.log.size(); ++i) {
            const ChoicePoint& cp = report.log[i];
            for (auto alt = cp.candidates.rbegin(); alt != cp.candidates.rend(); ++alt) {
                if (*alt == cp.chosen) continue;
                Node child;
                child.pinned = i + 1;
                child.overrides = node.overrides;
                for (std::size_t k = node.pinned; k < i; ++k)
                    child.overrides[{report.log[k].call_id, report.log[k].ordinal}] =
                        report.log[k].chosen;
                child.overrides[{cp.call_id, cp.ordinal}] = *alt;
                stack.push_back(std::move(child));
            }
        }
    }

    RunReport report = std::move(default_report);
    report.outcome = hit_limit ? BBAOutcome(IterationLimit{}) : BBAOutcome(Exhausted{});
    report.interreduction_calls = used;
    return report;
}

}  // namespace bb
