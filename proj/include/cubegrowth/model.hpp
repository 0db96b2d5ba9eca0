#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cubegrowth/complex.hpp"
#include "cubegrowth/diagonals.hpp"
#include "cubegrowth/hyperplanes.hpp"
#include "cubegrowth/links.hpp"
#include "cubegrowth/validate.hpp"

namespace cubegrowth {

// Everything derived from a loaded complex that the automaton and series
// layers consume.  All of it is immutable after analyze().
struct Model {
    CubicalComplex cx;
    std::vector<LinkComplex> links;
    std::vector<Diagonal> diags;          // the state set, in state order
    std::vector<int> trivial_of_vertex;   // vertex index -> diagonal index
    std::vector<int> alphabet;            // nontrivial diagonal indices
    std::vector<int> alpha_pos;           // diagonal index -> alphabet position or -1
    std::vector<std::vector<int>> with_alpha;  // vertex -> diagonals starting there
    std::vector<std::vector<int>> with_omega;  // vertex -> diagonals ending there
    HyperplanePartition hyp;
    ValidationReport npc;
    std::map<std::string, int> diag_by_name;

    int nstates() const { return static_cast<int>(diags.size()); }
    int nvertices() const { return cx.count(0); }

    int vertex_index(const std::string& id) const { return cx.vertex_index(id); }

    int letter_index(const std::string& name) const {
        auto it = diag_by_name.find(name);
        if (it == diag_by_name.end() || diags[it->second].trivial())
            throw UnknownLetter("unknown letter '" + name + "'");
        return it->second;
    }
};

inline Model analyze(CubicalComplex cx) {
    Model m;
    m.cx = std::move(cx);
    m.links = build_links(m.cx);
    m.diags = build_diagonals(m.cx, m.links);
    m.trivial_of_vertex.assign(m.cx.count(0), -1);
    m.alpha_pos.assign(m.diags.size(), -1);
    m.with_alpha.assign(m.cx.count(0), {});
    m.with_omega.assign(m.cx.count(0), {});
    for (size_t i = 0; i < m.diags.size(); ++i) {
        const Diagonal& d = m.diags[i];
        if (d.trivial()) {
            m.trivial_of_vertex[d.cube] = static_cast<int>(i);
        } else {
            m.alpha_pos[i] = static_cast<int>(m.alphabet.size());
            m.alphabet.push_back(static_cast<int>(i));
        }
        m.with_alpha[d.alpha].push_back(static_cast<int>(i));
        m.with_omega[d.omega].push_back(static_cast<int>(i));
        m.diag_by_name[d.name] = static_cast<int>(i);
    }
    m.hyp = hyperplane_classes(m.cx);
    m.npc = validate_npc(m.cx, m.links);
    return m;
}

inline Model analyze_document(const std::string& text) { return analyze(load_complex(text)); }

}  // namespace cubegrowth
