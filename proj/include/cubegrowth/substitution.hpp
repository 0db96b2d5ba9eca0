#pragma once

#include <map>
#include <string>
#include <vector>

#include "cubegrowth/laurent.hpp"
#include "cubegrowth/model.hpp"

namespace cubegrowth {

// A monomial substitution: each letter (nontrivial diagonal) maps to a
// monomial over a declared variable set.  Images are exponent vectors with
// coefficient one.
struct Substitution {
    std::string kind;                       // "single" | "per-hyperplane" | "per-diagonal"
    std::vector<std::string> names;
    std::map<int, ExponentVec> image;       // alphabet position -> exponents
    bool star_invariant = false;

    int nvars() const { return static_cast<int>(names.size()); }

    const ExponentVec& image_of(const Model& m, int diag) const {
        int pos = m.alpha_pos.at(diag);
        if (pos < 0) throw UncoveredSymbol("trivial diagonal has no letter image");
        auto it = image.find(pos);
        if (it == image.end())
            throw UncoveredSymbol("no image for letter '" + m.diags[diag].name + "'");
        return it->second;
    }

    Laurent monomial_of(const Model& m, int diag) const {
        return Laurent::monomial(image_of(m, diag));
    }
};

namespace detail {

inline void finish(Substitution& s, const Model& m) {
    s.star_invariant = true;
    for (int d : m.alphabet) {
        const ExponentVec& a = s.image_of(m, d);
        const ExponentVec& b = s.image_of(m, m.diags[d].star);
        if (a != b) {
            s.star_invariant = false;
            break;
        }
    }
}

}  // namespace detail

// d -> t^{|d|}.
inline Substitution single_variable_substitution(const Model& m) {
    Substitution s;
    s.kind = "single";
    s.names = {"t"};
    for (size_t p = 0; p < m.alphabet.size(); ++p)
        s.image[static_cast<int>(p)] = {m.diags[m.alphabet[p]].dim};
    detail::finish(s, m);
    return s;
}

// d -> product of one indeterminate per hyperplane class crossed.
inline Substitution per_hyperplane_substitution(const Model& m) {
    Substitution s;
    s.kind = "per-hyperplane";
    for (const auto& label : m.hyp.labels) s.names.push_back("t_" + label);
    for (size_t p = 0; p < m.alphabet.size(); ++p) {
        ExponentVec e(m.hyp.size(), 0);
        for (int cls : weight(m.cx, m.hyp, m.diags[m.alphabet[p]])) e[cls] += 1;
        s.image[static_cast<int>(p)] = e;
    }
    detail::finish(s, m);
    return s;
}

// d -> its own fresh variable t1, t2, ... in state order.
inline Substitution per_diagonal_substitution(const Model& m) {
    Substitution s;
    s.kind = "per-diagonal";
    int n = static_cast<int>(m.alphabet.size());
    for (int p = 0; p < n; ++p) s.names.push_back("t" + std::to_string(p + 1));
    for (int p = 0; p < n; ++p) {
        ExponentVec e(n, 0);
        e[p] = 1;
        s.image[p] = e;
    }
    detail::finish(s, m);
    return s;
}

inline Substitution substitution_by_kind(const Model& m, const std::string& kind) {
    if (kind == "single") return single_variable_substitution(m);
    if (kind == "per-hyperplane") return per_hyperplane_substitution(m);
    if (kind == "per-diagonal") return per_diagonal_substitution(m);
    throw Error("unknown substitution kind '" + kind + "'");
}

}  // namespace cubegrowth
