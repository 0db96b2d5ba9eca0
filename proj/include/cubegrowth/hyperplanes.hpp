#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cubegrowth/complex.hpp"
#include "cubegrowth/diagonals.hpp"

namespace cubegrowth {

// Partition of the unoriented edges into hyperplane classes: the finest
// partition merging opposite edges of every square.  Classes are labeled by
// their lexicographically smallest member edge.
struct HyperplanePartition {
    std::vector<std::vector<int>> classes;   // edge indices, sorted
    std::vector<std::string> labels;
    std::vector<int> class_of;               // per edge

    int size() const { return static_cast<int>(classes.size()); }
};

inline HyperplanePartition hyperplane_classes(const CubicalComplex& cx) {
    detail::UnionFind uf(cx.count(1));
    for (int s = 0; s < cx.count(2); ++s) {
        uf.merge(cx.face(2, s, 1, 0), cx.face(2, s, 1, 1));
        uf.merge(cx.face(2, s, 2, 0), cx.face(2, s, 2, 1));
    }
    std::map<int, std::vector<int>> groups;
    for (int e = 0; e < cx.count(1); ++e) groups[uf.find(e)].push_back(e);

    HyperplanePartition hp;
    hp.class_of.assign(cx.count(1), -1);
    std::vector<std::pair<std::string, std::vector<int>>> ordered;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        ordered.push_back({cx.ids[1][members.front()], members});
    }
    std::sort(ordered.begin(), ordered.end());
    for (auto& [label, members] : ordered) {
        for (int e : members) hp.class_of[e] = hp.size();
        hp.labels.push_back(label);
        hp.classes.push_back(members);
    }
    return hp;
}

// Weight of a diagonal: the multiset of hyperplane classes of the k axis
// edges of its cube at the start corner (sorted class indices).  Empty for a
// trivial diagonal.
inline std::vector<int> weight(const CubicalComplex& cx, const HyperplanePartition& hp,
                               const Diagonal& d) {
    std::vector<int> w;
    for (int axis = 1; axis <= d.dim; ++axis)
        w.push_back(hp.class_of[cx.axis_edge(d.dim, d.cube, d.bits, axis)]);
    std::sort(w.begin(), w.end());
    return w;
}

}  // namespace cubegrowth
