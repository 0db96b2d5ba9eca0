#pragma once

#include <string>
#include <vector>

#include "cubegrowth/automaton.hpp"
#include "cubegrowth/laurent.hpp"
#include "cubegrowth/model.hpp"
#include "cubegrowth/substitution.hpp"

namespace cubegrowth {

// Entry of a matrix over the state alphabet: zero, or sign * symbol, or
// sign * 1 (sym < 0).  Transition matrices have at most one symbol per
// entry, which is all the structural identities need.
struct SymEntry {
    int sign = 0;
    int sym = -1;

    friend bool operator==(const SymEntry& a, const SymEntry& b) {
        if (a.sign == 0 && b.sign == 0) return true;
        return a.sign == b.sign && a.sym == b.sym;
    }
};

struct SymbolicMatrix {
    int n = 0;
    std::vector<std::vector<SymEntry>> e;

    explicit SymbolicMatrix(int size = 0) : n(size), e(size, std::vector<SymEntry>(size)) {}

    friend bool operator==(const SymbolicMatrix& a, const SymbolicMatrix& b) {
        return a.n == b.n && a.e == b.e;
    }
};

// Q+ or Q- of an automaton: entry (i, j) is the label of the transition
// i -> j, or zero.
inline SymbolicMatrix transition_matrix(const Automaton& a, const Model& m) {
    SymbolicMatrix q(m.nstates());
    for (const auto& t : a.transitions) q.e[t.from][t.to] = {1, t.label};
    return q;
}

// Entrywise application of d -> d*; the unit and zero are fixed.
inline SymbolicMatrix star(const SymbolicMatrix& q, const Model& m) {
    SymbolicMatrix r = q;
    for (auto& row : r.e)
        for (auto& x : row)
            if (x.sign != 0 && x.sym >= 0) x.sym = m.diags[x.sym].star;
    return r;
}

// Conjugation by the permutation matrix of the involution: entry (i, j)
// becomes entry (i*, j*).  This permutes entries without starring symbols.
inline SymbolicMatrix conjugate_by_star(const SymbolicMatrix& q, const Model& m) {
    SymbolicMatrix r(q.n);
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) r.e[i][j] = q.e[m.diags[i].star][m.diags[j].star];
    return r;
}

inline std::vector<int> star_word(const Model& m, const std::vector<int>& word) {
    std::vector<int> out;
    for (int d : word) out.push_back(m.diags[d].star);
    return out;
}

using LaurentMatrix = std::vector<std::vector<Laurent>>;

// Entrywise monomial substitution; signs are preserved and units map to 1.
inline LaurentMatrix specialize(const SymbolicMatrix& q, const Model& m,
                                const Substitution& subst) {
    LaurentMatrix out(q.n, std::vector<Laurent>(q.n, Laurent(subst.nvars())));
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) {
            const SymEntry& x = q.e[i][j];
            if (x.sign == 0) continue;
            Laurent v = x.sym < 0 ? Laurent::one(subst.nvars()) : subst.monomial_of(m, x.sym);
            out[i][j] = x.sign < 0 ? -v : v;
        }
    return out;
}

inline LaurentMatrix laurent_matrix_from_int(const std::vector<std::vector<int>>& a, int nvars) {
    LaurentMatrix out(a.size(), std::vector<Laurent>(a.size(), Laurent(nvars)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            out[i][j] = Laurent::constant(nvars, a[i][j]);
    return out;
}

inline LaurentMatrix matmul(const LaurentMatrix& a, const LaurentMatrix& b) {
    const size_t n = a.size();
    LaurentMatrix out(n, std::vector<Laurent>(n, Laurent(n ? a[0][0].nvars() : 0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    return out;
}

inline Laurent matrix_entry_inverted(const Laurent& p) { return p.invert_variables(); }

// Q-bar: every monomial entry replaced by its reciprocal.
inline LaurentMatrix invert_entries(const LaurentMatrix& a) {
    LaurentMatrix out = a;
    for (auto& row : out)
        for (auto& x : row) x = x.invert_variables();
    return out;
}

}  // namespace cubegrowth
