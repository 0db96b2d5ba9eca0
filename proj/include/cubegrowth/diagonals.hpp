#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cubegrowth/complex.hpp"
#include "cubegrowth/links.hpp"

namespace cubegrowth {

// A directed diagonal of a cube: the cube together with the corner it starts
// at.  A k-cube carries 2^k of them; the 0-dimensional ones are the trivial
// diagonals (the vertices).  d* is the diagonal from the opposite corner.
struct Diagonal {
    int dim = 0;
    int cube = 0;
    std::vector<int> bits;
    int alpha = 0;             // initial vertex
    int omega = 0;             // terminal vertex
    int star = 0;              // index of d*
    std::string name;          // vertex id / "e", "e*" / "s@01", "s@01*"
    std::vector<int> sigma;    // simplex of d in Lk(alpha); empty when trivial

    bool trivial() const { return dim == 0; }
};

// All diagonals in the deterministic state order: by (dimension, cube id,
// corner bits); the trivial diagonals come first and follow the vertex
// order.  Cubes within a level are already id-sorted.
inline std::vector<Diagonal> build_diagonals(const CubicalComplex& cx,
                                             const std::vector<LinkComplex>& links) {
    std::vector<Diagonal> out;
    for (int k = 0; k <= cx.dimension(); ++k) {
        for (int c = 0; c < cx.count(k); ++c) {
            for (int corner = 0; corner < (1 << k); ++corner) {
                Diagonal d;
                d.dim = k;
                d.cube = c;
                d.bits.resize(k);
                for (int i = 0; i < k; ++i) d.bits[i] = (corner >> (k - 1 - i)) & 1;
                d.alpha = k == 0 ? c : cx.corner_vertex(k, c, d.bits);
                std::vector<int> opposite(k);
                for (int i = 0; i < k; ++i) opposite[i] = 1 - d.bits[i];
                d.omega = k == 0 ? c : cx.corner_vertex(k, c, opposite);
                out.push_back(std::move(d));
            }
        }
    }
    // The corner loop above emits bits in lexicographic order already, and
    // cubes are id-sorted per level, so `out` is in state order.

    std::map<std::tuple<int, int, std::vector<int>>, int> where;
    for (size_t i = 0; i < out.size(); ++i)
        where[{out[i].dim, out[i].cube, out[i].bits}] = static_cast<int>(i);
    for (auto& d : out) {
        std::vector<int> opposite(d.dim);
        for (int i = 0; i < d.dim; ++i) opposite[i] = 1 - d.bits[i];
        d.star = where.at({d.dim, d.cube, opposite});
    }

    for (auto& d : out) {
        if (d.trivial()) {
            d.name = cx.ids[0][d.cube];
            continue;
        }
        std::vector<int> canonical = d.bits;
        bool starred = false;
        {
            std::vector<int> opposite(d.dim);
            for (int i = 0; i < d.dim; ++i) opposite[i] = 1 - d.bits[i];
            if (opposite < canonical) {
                canonical = opposite;
                starred = true;
            }
        }
        std::string base = cx.ids[d.dim][d.cube];
        if (d.dim > 1) {
            base += "@";
            for (int b : canonical) base += char('0' + b);
        }
        d.name = starred ? base + "*" : base;

        const LinkComplex& link = links[d.alpha];
        for (int axis = 1; axis <= d.dim; ++axis) {
            int e = cx.axis_edge(d.dim, d.cube, d.bits, axis);
            d.sigma.push_back(link.vert_index.at({e, d.bits[axis - 1]}));
        }
        std::sort(d.sigma.begin(), d.sigma.end());
        d.sigma.erase(std::unique(d.sigma.begin(), d.sigma.end()), d.sigma.end());
    }
    return out;
}

}  // namespace cubegrowth
