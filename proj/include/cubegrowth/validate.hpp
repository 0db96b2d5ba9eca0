#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubegrowth/complex.hpp"
#include "cubegrowth/links.hpp"

namespace cubegrowth {

// Nonpositive-curvature validation: every vertex link must be a simplicial
// complex and flag.  Failures are report entries, never exceptions.
struct ValidationReport {
    struct VertexCheck {
        int vertex = 0;
        bool simplicial = true;
        bool flag = true;
        std::string detail;
    };
    bool connected = true;
    std::vector<VertexCheck> vertices;
    bool pass = false;

    std::string summary(const CubicalComplex& cx) const {
        std::ostringstream os;
        os << (pass ? "PASS" : "FAIL") << ": links of " << vertices.size() << " vertices checked";
        for (const auto& v : vertices)
            if (!v.simplicial || !v.flag)
                os << "\n  vertex '" << cx.ids[0][v.vertex] << "': "
                   << (v.simplicial ? "" : "not simplicial; ") << (v.flag ? "" : "not flag; ")
                   << v.detail;
        if (!connected) os << "\n  1-skeleton is disconnected";
        return os.str();
    }
};

namespace detail {

// Bron-Kerbosch maximal clique enumeration; links are tiny.
inline void maximal_cliques(const std::vector<std::vector<char>>& adj, std::vector<int>& r,
                            std::vector<int> p, std::vector<int> x,
                            std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    std::vector<int> p_copy = p;
    for (int v : p_copy) {
        std::vector<int> np, nx;
        for (int u : p)
            if (adj[u][v]) np.push_back(u);
        for (int u : x)
            if (adj[u][v]) nx.push_back(u);
        r.push_back(v);
        maximal_cliques(adj, r, np, nx, out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace detail

inline ValidationReport validate_npc(const CubicalComplex& cx,
                                     const std::vector<LinkComplex>& links) {
    ValidationReport report;
    report.pass = true;
    for (const auto& link : links) {
        ValidationReport::VertexCheck check;
        check.vertex = link.owner;
        std::ostringstream detail;

        // (a) the link is a simplicial complex.
        std::map<std::vector<int>, const LinkComplex::Incidence*> seen;
        for (const auto& inc : link.incidences) {
            bool repeats = std::adjacent_find(inc.verts.begin(), inc.verts.end()) != inc.verts.end();
            if (repeats) {
                check.simplicial = false;
                detail << "cube '" << cx.ids[inc.dim][inc.cube] << "' repeats a link vertex; ";
                continue;
            }
            auto [it, fresh] = seen.emplace(inc.verts, &inc);
            if (!fresh) {
                check.simplicial = false;
                detail << "cubes '" << cx.ids[it->second->dim][it->second->cube] << "' and '"
                       << cx.ids[inc.dim][inc.cube] << "' span the same link simplex; ";
            }
            if (inc.dim >= 2) {
                for (size_t drop = 0; drop < inc.verts.size(); ++drop) {
                    std::vector<int> facet;
                    for (size_t i = 0; i < inc.verts.size(); ++i)
                        if (i != drop) facet.push_back(inc.verts[i]);
                    if (!link.has_simplex(facet)) {
                        check.simplicial = false;
                        detail << "missing face of the simplex of cube '"
                               << cx.ids[inc.dim][inc.cube] << "'; ";
                    }
                }
            }
        }

        // (b) the link is flag: every maximal clique of the adjacency graph
        // spans a simplex.
        if (check.simplicial) {
            std::vector<int> all(link.verts.size());
            for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            std::vector<std::vector<int>> cliques;
            std::vector<int> r;
            detail::maximal_cliques(link.adj, r, all, {}, cliques);
            for (auto& clique : cliques) {
                if (clique.size() < 3) continue;
                std::sort(clique.begin(), clique.end());
                if (!link.has_simplex(clique)) {
                    check.flag = false;
                    detail << "pairwise-adjacent set {";
                    for (size_t i = 0; i < clique.size(); ++i)
                        detail << (i ? ", " : "") << link.vertex_label(cx, clique[i]);
                    detail << "} spans no simplex; ";
                }
            }
        }

        check.detail = detail.str();
        if (!check.simplicial || !check.flag) report.pass = false;
        report.vertices.push_back(std::move(check));
    }
    return report;
}

// Eulerian test: every maximal cell must be top-dimensional, and the link of
// every cell must have the Euler characteristic of the sphere of its own
// dimension, chi = 1 + (-1)^dim.  With chi(empty) = 0 and dim(empty) = -1,
// top-dimensional cells pass automatically.
struct EulerianReport {
    struct CellCheck {
        int dim = 0;
        int cube = 0;
        long chi = 0;
        int link_dim = -1;
        long required = 0;
    };
    int n = 0;
    bool all_maximal_top = true;
    std::vector<std::pair<int, int>> low_maximal_cells;
    std::vector<CellCheck> failures;
    long cells_checked = 0;
    bool eulerian = false;

    std::string summary(const CubicalComplex& cx) const {
        std::ostringstream os;
        os << (eulerian ? "Eulerian" : "not Eulerian") << ", n=" << n;
        if (!all_maximal_top) {
            os << "; maximal cells below dimension " << n << ":";
            for (auto [d, c] : low_maximal_cells) os << " '" << cx.ids[d][c] << "'";
        }
        for (const auto& f : failures)
            os << "\n  cell '" << cx.ids[f.dim][f.cube] << "': chi(link)=" << f.chi
               << " (dim " << f.link_dim << "), required " << f.required;
        return os.str();
    }
};

inline EulerianReport eulerian_status(const CubicalComplex& cx,
                                      const std::vector<LinkComplex>& links) {
    EulerianReport report;
    report.n = cx.dimension();

    std::vector<std::vector<char>> referenced(cx.dimension() + 1);
    for (int k = 0; k <= cx.dimension(); ++k) referenced[k].assign(cx.count(k), 0);
    for (int k = 1; k <= cx.dimension(); ++k)
        for (int c = 0; c < cx.count(k); ++c)
            for (int f : cx.faces[k][c]) referenced[k - 1][f] = 1;
    for (int k = 0; k < cx.dimension(); ++k)
        for (int c = 0; c < cx.count(k); ++c)
            if (!referenced[k][c]) {
                report.all_maximal_top = false;
                report.low_maximal_cells.push_back({k, c});
            }

    for (int k = 0; k <= cx.dimension(); ++k)
        for (int c = 0; c < cx.count(k); ++c) {
            CellLink cl = link_of_cube(cx, links, k, c);
            long required = 1 + (cl.dim % 2 == 0 ? 1 : -1);
            ++report.cells_checked;
            if (cl.chi != required)
                report.failures.push_back({k, c, cl.chi, cl.dim, required});
        }

    report.eulerian = report.all_maximal_top && report.failures.empty();
    return report;
}

}  // namespace cubegrowth
