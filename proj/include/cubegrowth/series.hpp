#pragma once

#include <string>
#include <vector>

#include "cubegrowth/automaton.hpp"
#include "cubegrowth/rational_function.hpp"
#include "cubegrowth/solve.hpp"
#include "cubegrowth/symbolic.hpp"
#include "cubegrowth/unipoly.hpp"

namespace cubegrowth {

// Full multivariate elimination is kept exact up to this many states; larger
// multivariate systems are refused (identity checks fall back to evaluation
// at rational sample points).  Univariate systems have no limit.
constexpr int kMultivariateStateLimit = 24;

namespace detail {

inline LaurentMatrix identity_minus(LaurentMatrix q) {
    const int nv = q.empty() ? 0 : q[0][0].nvars();
    for (size_t i = 0; i < q.size(); ++i) q[i][i] = Laurent::one(nv) - q[i][i];
    return q;
}

struct SeriesSolve {
    std::vector<std::vector<Laurent>> numerators;  // [column][state]
    Laurent denominator;
};

// Exact solve of M X = e_col for the given unit columns; dense integer
// polynomials when univariate, sparse Laurent otherwise.  Rows are scaled by
// the lcm of their coefficient denominators first, which leaves the
// solutions unchanged.
inline SeriesSolve solve_unit_columns(const LaurentMatrix& m, const std::vector<int>& unit_rows) {
    const int n = static_cast<int>(m.size());
    const int nv = m[0][0].nvars();
    SeriesSolve out;
    if (nv == 1) {
        std::vector<Integer> scale(n, Integer(1));
        for (int i = 0; i < n; ++i)
            for (const auto& row_entry : m[i])
                for (const auto& [e, c] : row_entry.terms())
                    mpz_lcm(scale[i].get_mpz_t(), scale[i].get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<std::vector<DensePoly>> a(n, std::vector<DensePoly>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a[i][j] = DensePoly::from_laurent(m[i][j] * Rational(scale[i]));
        std::vector<std::vector<DensePoly>> cols;
        for (int r : unit_rows) {
            std::vector<DensePoly> c(n);
            c[r] = DensePoly::from_coeffs(0, {scale[r]});
            cols.push_back(std::move(c));
        }
        auto sol = solve_fraction_free(std::move(a), std::move(cols));
        out.denominator = sol.denominator.to_laurent();
        for (auto& col : sol.numerators) {
            std::vector<Laurent> lc;
            for (auto& p : col) lc.push_back(p.to_laurent());
            out.numerators.push_back(std::move(lc));
        }
        return out;
    }
    std::vector<std::vector<Laurent>> cols;
    for (int r : unit_rows) {
        std::vector<Laurent> c(n, Laurent(nv));
        c[r] = Laurent::one(nv);
        cols.push_back(std::move(c));
    }
    auto sol = solve_fraction_free(m, std::move(cols));
    out.denominator = std::move(sol.denominator);
    out.numerators = std::move(sol.numerators);
    return out;
}

inline void guard_size(const Model& m, const Substitution& subst) {
    if (subst.nvars() > 1 && m.nstates() > kMultivariateStateLimit)
        throw SolveTooLarge("multivariate solve over " + std::to_string(m.nstates()) +
                            " states exceeds the exact-solve limit of " +
                            std::to_string(kMultivariateStateLimit));
}

inline RationalFunction assemble(const Automaton& a, const Model& m, const SeriesSolve& sol,
                                 int column, int x) {
    Laurent num(sol.denominator.nvars());
    for (int i : a.initial_states(m, x)) num += sol.numerators[column][i];
    return RationalFunction(std::move(num), sol.denominator);
}

}  // namespace detail

// The growth series G_{x,y} under a substitution, as an exact rational
// function: solve (I - Q(t)) X = E and take B X.  Forward and reverse
// conventions give equal results.
inline RationalFunction growth_series(const Model& m, int x, int y, const Substitution& subst,
                                      Convention convention = Convention::forward) {
    detail::guard_size(m, subst);
    Automaton a = build_automaton(m, convention);
    LaurentMatrix sys = detail::identity_minus(specialize(transition_matrix(a, m), m, subst));
    auto sol = detail::solve_unit_columns(sys, {m.trivial_of_vertex[y]});
    return detail::assemble(a, m, sol, 0, x);
}

// All ordered vertex pairs from one elimination per convention; the result
// is indexed [x][y].
inline std::vector<std::vector<RationalFunction>> growth_series_table(
    const Model& m, const Substitution& subst, Convention convention = Convention::forward) {
    detail::guard_size(m, subst);
    Automaton a = build_automaton(m, convention);
    LaurentMatrix sys = detail::identity_minus(specialize(transition_matrix(a, m), m, subst));
    std::vector<int> cols;
    for (int v = 0; v < m.nvertices(); ++v) cols.push_back(m.trivial_of_vertex[v]);
    auto sol = detail::solve_unit_columns(sys, cols);
    std::vector<std::vector<RationalFunction>> table(
        m.nvertices(), std::vector<RationalFunction>(m.nvertices()));
    for (int x = 0; x < m.nvertices(); ++x)
        for (int y = 0; y < m.nvertices(); ++y) table[x][y] = detail::assemble(a, m, sol, y, x);
    return table;
}

// The reciprocal series by the matrix route: invert every monomial entry of
// Q(t) and solve B (I - Q-bar)^{-1} E.  Throws ReciprocalUndefined when
// I - Q-bar is singular.
inline RationalFunction reciprocal_series(const Model& m, int x, int y, const Substitution& subst,
                                          Convention convention = Convention::forward) {
    detail::guard_size(m, subst);
    Automaton a = build_automaton(m, convention);
    LaurentMatrix sys =
        detail::identity_minus(invert_entries(specialize(transition_matrix(a, m), m, subst)));
    try {
        auto sol = detail::solve_unit_columns(sys, {m.trivial_of_vertex[y]});
        return detail::assemble(a, m, sol, 0, x);
    } catch (const SingularSystem& e) {
        throw ReciprocalUndefined(std::string("reciprocal series does not exist: ") + e.what());
    }
}

inline std::vector<std::vector<RationalFunction>> reciprocal_series_table(
    const Model& m, const Substitution& subst, Convention convention = Convention::forward) {
    detail::guard_size(m, subst);
    Automaton a = build_automaton(m, convention);
    LaurentMatrix sys =
        detail::identity_minus(invert_entries(specialize(transition_matrix(a, m), m, subst)));
    std::vector<int> cols;
    for (int v = 0; v < m.nvertices(); ++v) cols.push_back(m.trivial_of_vertex[v]);
    try {
        auto sol = detail::solve_unit_columns(sys, cols);
        std::vector<std::vector<RationalFunction>> table(
            m.nvertices(), std::vector<RationalFunction>(m.nvertices()));
        for (int x = 0; x < m.nvertices(); ++x)
            for (int y = 0; y < m.nvertices(); ++y) table[x][y] = detail::assemble(a, m, sol, y, x);
        return table;
    } catch (const SingularSystem& e) {
        throw ReciprocalUndefined(std::string("reciprocal series does not exist: ") + e.what());
    }
}

}  // namespace cubegrowth
