#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubegrowth/model.hpp"
#include "cubegrowth/substitution.hpp"

namespace cubegrowth {

enum class Convention { forward, reverse };

inline const char* to_string(Convention c) {
    return c == Convention::forward ? "forward" : "reverse";
}

// The normal-form automaton.  States are all diagonals; accepted words from
// x to y are exactly the normal cube paths from x to y.
//
// Forward convention: i -> j labeled i when omega(i) = alpha(j) and
// star(sigma(i*)) does not meet sigma(j) in Lk(omega(i)); i -> y labeled i
// when omega(i) = y.  Reverse convention: i -> j labeled i* when
// alpha(i) = omega(j) and star(sigma(i)) does not meet sigma(j*); i -> y
// labeled i* when alpha(i) = y.  Trivial states have no outgoing
// transitions, and the trivial diagonal at the source vertex is an initial
// state, so the empty word is accepted exactly when x = y.
struct Automaton {
    Convention convention = Convention::forward;
    int nstates = 0;
    struct Transition {
        int from, to, label;
    };
    std::vector<Transition> transitions;             // sorted by (from, to)
    std::vector<std::vector<std::pair<int, int>>> out;  // per state: (to, label)

    // B_alpha(x) for the forward convention, B_omega(x) for the reverse.
    std::vector<int> initial_states(const Model& m, int x) const {
        return convention == Convention::forward ? m.with_alpha[x] : m.with_omega[x];
    }
};

inline Automaton build_automaton(const Model& m, Convention convention) {
    if (!m.npc.pass)
        throw InvalidComplex("complex failed nonpositive-curvature validation: " +
                             m.npc.summary(m.cx));
    Automaton a;
    a.convention = convention;
    a.nstates = m.nstates();
    a.out.assign(a.nstates, {});
    for (int i : m.alphabet) {
        const Diagonal& di = m.diags[i];
        if (convention == Convention::forward) {
            const LinkComplex& link = m.links[di.omega];
            const std::vector<int>& sigma_istar = m.diags[di.star].sigma;
            for (int j : m.with_alpha[di.omega]) {
                const Diagonal& dj = m.diags[j];
                if (dj.trivial()) continue;
                if (!link.star_meets(sigma_istar, dj.sigma))
                    a.transitions.push_back({i, j, i});
            }
            a.transitions.push_back({i, m.trivial_of_vertex[di.omega], i});
        } else {
            const LinkComplex& link = m.links[di.alpha];
            for (int j : m.with_omega[di.alpha]) {
                const Diagonal& dj = m.diags[j];
                if (dj.trivial()) continue;
                if (!link.star_meets(di.sigma, m.diags[dj.star].sigma))
                    a.transitions.push_back({i, j, di.star});
            }
            a.transitions.push_back({i, m.trivial_of_vertex[di.alpha], di.star});
        }
    }
    std::sort(a.transitions.begin(), a.transitions.end(),
              [](const Automaton::Transition& p, const Automaton::Transition& q) {
                  return std::pair(p.from, p.to) < std::pair(q.from, q.to);
              });
    for (const auto& t : a.transitions) a.out[t.from].push_back({t.to, t.label});
    return a;
}

// Membership by simulating the transition relation on state sets.
inline bool accepts(const Automaton& a, const Model& m, int x, int y,
                    const std::vector<int>& word) {
    for (int letter : word)
        if (letter < 0 || letter >= m.nstates() || m.diags[letter].trivial())
            throw UnknownLetter("word letters must be nontrivial diagonals");
    std::set<int> cur;
    for (int s : a.initial_states(m, x)) cur.insert(s);
    for (int letter : word) {
        std::set<int> next;
        for (int s : cur)
            for (auto [to, label] : a.out[s])
                if (label == letter) next.insert(to);
        cur = std::move(next);
        if (cur.empty()) return false;
    }
    return cur.count(m.trivial_of_vertex[y]) > 0;
}

inline bool accepts(const Automaton& a, const Model& m, const std::string& x,
                    const std::string& y, const std::vector<std::string>& word) {
    std::vector<int> letters;
    for (const auto& w : word) letters.push_back(m.letter_index(w));
    return accepts(a, m, m.vertex_index(x), m.vertex_index(y), letters);
}

using Word = std::vector<int>;

// All accepted words with at most max_len letters, ordered by length and
// then lexicographically in the state order.
inline std::vector<Word> enumerate_words(const Automaton& a, const Model& m, int x, int y,
                                         int max_len) {
    std::vector<Word> results;
    const int accept = m.trivial_of_vertex[y];
    // Paths are state sequences; the emitted word is the label sequence.
    std::vector<std::pair<int, Word>> layer;
    for (int s : a.initial_states(m, x)) {
        if (s == accept) results.push_back({});
        if (!m.diags[s].trivial()) layer.push_back({s, {}});
    }
    for (int len = 1; len <= max_len && !layer.empty(); ++len) {
        std::vector<std::pair<int, Word>> next;
        for (const auto& [s, w] : layer) {
            for (auto [to, label] : a.out[s]) {
                Word nw = w;
                nw.push_back(label);
                if (to == accept) results.push_back(nw);
                if (!m.diags[to].trivial()) next.push_back({to, std::move(nw)});
            }
        }
        layer = std::move(next);
    }
    std::sort(results.begin(), results.end(), [](const Word& p, const Word& q) {
        if (p.size() != q.size()) return p.size() < q.size();
        return p < q;
    });
    return results;
}

// Exact weighted path counting: the coefficient table, truncated by total
// degree of the substituted monomials, of the sum of weights of all accepted
// words from x to y.  This is the dynamic-programming oracle the series
// engine is checked against.
inline Laurent weighted_counts(const Automaton& a, const Model& m, int x, int y,
                               const Substitution& subst, int max_degree) {
    for (int d : m.alphabet) {
        const ExponentVec& e = subst.image_of(m, d);
        int deg = total_degree(e);
        bool nonneg = std::all_of(e.begin(), e.end(), [](int v) { return v >= 0; });
        if (deg <= 0 || !nonneg)
            throw NonPositiveWeight("letter '" + m.diags[d].name +
                                    "' must map to a nontrivial monomial with nonnegative exponents");
    }
    const int accept = m.trivial_of_vertex[y];
    // Buckets by total degree; every transition adds at least one.
    std::vector<std::map<std::pair<int, ExponentVec>, Integer>> frontier(max_degree + 1);
    for (int s : a.initial_states(m, x)) frontier[0][{s, ExponentVec(subst.nvars(), 0)}] += 1;

    Laurent table(subst.nvars());
    for (int deg = 0; deg <= max_degree; ++deg) {
        for (const auto& [key, count] : frontier[deg]) {
            const auto& [state, exps] = key;
            if (state == accept) table.add_term(exps, Rational(count));
            for (auto [to, label] : a.out[state]) {
                const ExponentVec& le = subst.image_of(m, label);
                int ndeg = deg + total_degree(le);
                if (ndeg > max_degree) continue;
                ExponentVec ne = exps;
                for (size_t i = 0; i < ne.size(); ++i) ne[i] += le[i];
                frontier[ndeg][{to, std::move(ne)}] += count;
            }
        }
    }
    return table;
}

// DOT rendering; trivial states are double circles, transition labels are
// letter names.
inline std::string export_dot(const Automaton& a, const Model& m) {
    std::ostringstream os;
    os << "digraph \"" << (m.cx.name.empty() ? "automaton" : m.cx.name) << "-"
       << to_string(a.convention) << "\" {\n";
    os << "  rankdir=LR;\n";
    for (int s = 0; s < m.nstates(); ++s)
        os << "  \"" << m.diags[s].name << "\" [shape="
           << (m.diags[s].trivial() ? "doublecircle" : "circle") << "];\n";
    for (const auto& t : a.transitions)
        os << "  \"" << m.diags[t.from].name << "\" -> \"" << m.diags[t.to].name
           << "\" [label=\"" << m.diags[t.label].name << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace cubegrowth
