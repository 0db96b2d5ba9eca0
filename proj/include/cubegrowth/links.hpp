#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cubegrowth/complex.hpp"

namespace cubegrowth {

// The link of a vertex.  Link vertices are edge-ends (edge, end) -- not
// edges -- so a loop edge contributes two of them; this matches the links of
// a quotient by a free action.  Each incidence of a k-cube corner at the
// vertex contributes the (k-1)-simplex of its k axis edge-ends.
class LinkComplex {
public:
    struct Incidence {
        int dim = 0;
        int cube = 0;
        std::vector<int> bits;
        std::vector<int> verts;  // sorted link-vertex indices
    };

    int owner = 0;
    std::vector<std::pair<int, int>> verts;          // (edge index, end), sorted
    std::map<std::pair<int, int>, int> vert_index;
    std::vector<std::set<std::vector<int>>> simp;    // simp[d]: sorted vertex sets
    std::vector<std::vector<char>> adj;              // 1-simplex relation
    std::vector<Incidence> incidences;               // all cube corners at owner, dim >= 1

    int dim() const {
        for (int d = static_cast<int>(simp.size()) - 1; d >= 0; --d)
            if (!simp[d].empty()) return d;
        return -1;
    }
    long chi() const {
        long c = 0;
        for (size_t d = 0; d < simp.size(); ++d)
            c += (d % 2 == 0 ? 1 : -1) * static_cast<long>(simp[d].size());
        return c;
    }
    long chi_reduced() const { return chi() - 1; }

    bool has_simplex(const std::vector<int>& vs) const {
        int d = static_cast<int>(vs.size()) - 1;
        return d >= 0 && d < static_cast<int>(simp.size()) && simp[d].count(vs) > 0;
    }

    // Star membership via the flag property: w lies in star(sigma) iff w is
    // in sigma or adjacent to every vertex of sigma.  Valid only on links
    // that passed the flag check.
    bool in_star(const std::vector<int>& sigma, int w) const {
        for (int u : sigma)
            if (u == w) return true;
        for (int u : sigma)
            if (!adj[w][u]) return false;
        return true;
    }

    bool star_meets(const std::vector<int>& sigma, const std::vector<int>& tau) const {
        for (int w : tau)
            if (in_star(sigma, w)) return true;
        return false;
    }

    std::string vertex_label(const CubicalComplex& cx, int v) const {
        return cx.ids[1][verts[v].first] + ":" + std::to_string(verts[v].second);
    }
};

inline std::vector<LinkComplex> build_links(const CubicalComplex& cx) {
    std::vector<LinkComplex> links(cx.count(0));
    for (int v = 0; v < cx.count(0); ++v) links[v].owner = v;

    // Link vertices: ends of edges.  Edges are already id-sorted, so the
    // (edge, end) order is deterministic.
    for (int e = 0; e < cx.count(1); ++e)
        for (int end = 0; end <= 1; ++end) {
            LinkComplex& link = links[cx.face(1, e, 1, end)];
            link.vert_index[{e, end}] = static_cast<int>(link.verts.size());
            link.verts.push_back({e, end});
        }

    // Simplices: one per (cube, corner) incidence.
    for (int k = 1; k <= cx.dimension(); ++k) {
        std::vector<int> bits(k, 0);
        for (int c = 0; c < cx.count(k); ++c) {
            for (int corner = 0; corner < (1 << k); ++corner) {
                for (int i = 0; i < k; ++i) bits[i] = (corner >> (k - 1 - i)) & 1;
                int v = cx.corner_vertex(k, c, bits);
                LinkComplex& link = links[v];
                LinkComplex::Incidence inc;
                inc.dim = k;
                inc.cube = c;
                inc.bits = bits;
                for (int axis = 1; axis <= k; ++axis) {
                    int e = cx.axis_edge(k, c, bits, axis);
                    inc.verts.push_back(link.vert_index.at({e, bits[axis - 1]}));
                }
                std::sort(inc.verts.begin(), inc.verts.end());
                // inc.verts keeps repeats for the simplicial check; the
                // stored simplex is the deduplicated vertex set.
                std::vector<int> vset = inc.verts;
                vset.erase(std::unique(vset.begin(), vset.end()), vset.end());
                if (static_cast<int>(link.simp.size()) < k) link.simp.resize(k);
                link.simp[static_cast<int>(vset.size()) - 1].insert(std::move(vset));
                link.incidences.push_back(std::move(inc));
            }
        }
    }

    for (auto& link : links) {
        int n = static_cast<int>(link.verts.size());
        link.adj.assign(n, std::vector<char>(n, 0));
        if (link.simp.size() >= 2)
            for (const auto& s : link.simp[1])
                if (s.size() == 2) {
                    link.adj[s[0]][s[1]] = 1;
                    link.adj[s[1]][s[0]] = 1;
                }
    }
    return links;
}

inline const LinkComplex& link_of_vertex(const CubicalComplex& cx,
                                         const std::vector<LinkComplex>& links,
                                         int v) {
    if (v < 0 || v >= cx.count(0)) throw NotAVertex("not a vertex index");
    return links[v];
}

// Shape summary of the link of a cell: simplex counts per dimension, total
// dimension and Euler characteristic, with chi(empty) = 0 and dim(empty) = -1.
struct CellLink {
    int dim = -1;
    long chi = 0;
    std::vector<long> counts;
};

// Link of the idx-th k-cube, computed inside the vertex link at one of its
// corners: simplices tau disjoint from sigma(corner) with tau u sigma a
// simplex.  The result does not depend on the corner (a tested property);
// corner 0...0 is the default.
inline CellLink link_of_cube(const CubicalComplex& cx, const std::vector<LinkComplex>& links,
                             int k, int idx, int corner = 0) {
    CellLink out;
    if (k == 0) {
        const LinkComplex& link = links[idx];
        out.dim = link.dim();
        out.chi = link.chi();
        for (const auto& level : link.simp) out.counts.push_back(static_cast<long>(level.size()));
        return out;
    }
    std::vector<int> bits(k, 0);
    for (int i = 0; i < k; ++i) bits[i] = (corner >> (k - 1 - i)) & 1;
    int v = cx.corner_vertex(k, idx, bits);
    const LinkComplex& link = links[v];
    std::vector<int> sigma;
    for (int axis = 1; axis <= k; ++axis) {
        int e = cx.axis_edge(k, idx, bits, axis);
        sigma.push_back(link.vert_index.at({e, bits[axis - 1]}));
    }
    std::sort(sigma.begin(), sigma.end());
    for (const auto& level : link.simp) {
        for (const auto& s : level) {
            if (s.size() <= sigma.size()) continue;
            if (!std::includes(s.begin(), s.end(), sigma.begin(), sigma.end())) continue;
            std::vector<int> tau;
            std::set_difference(s.begin(), s.end(), sigma.begin(), sigma.end(),
                                std::back_inserter(tau));
            if (tau.empty()) continue;
            int d = static_cast<int>(tau.size()) - 1;
            if (static_cast<int>(out.counts.size()) <= d) out.counts.resize(d + 1, 0);
            out.counts[d] += 1;
        }
    }
    for (size_t d = 0; d < out.counts.size(); ++d) {
        out.chi += (d % 2 == 0 ? 1 : -1) * out.counts[d];
        if (out.counts[d] > 0) out.dim = static_cast<int>(d);
    }
    return out;
}

}  // namespace cubegrowth
