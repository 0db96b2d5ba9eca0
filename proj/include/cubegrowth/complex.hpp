#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cubegrowth/errors.hpp"

namespace cubegrowth {

// A finite cube complex presented as a graded cubical set: one identifier
// set per dimension plus face maps d_{i,eps} subject to the cubical identity
//   d_{i,eps} d_{j,delta} = d_{j-1,delta} d_{i,eps}   (i < j).
// Characteristic maps need not be injective, so loop edges and self-glued
// squares are legal.  Cubes of each level are kept sorted by identifier;
// every derived ordering in the library builds on that.
class CubicalComplex {
public:
    std::string name;
    // ids[k][i] is the identifier of the i-th k-cube.
    std::vector<std::vector<std::string>> ids;
    // faces[k][i] lists d_{1,0}, d_{1,1}, ..., d_{k,0}, d_{k,1} as indices
    // into level k-1; level 0 entries are empty.
    std::vector<std::vector<std::vector<int>>> faces;

    int dimension() const { return static_cast<int>(ids.size()) - 1; }
    int count(int k) const {
        return k >= 0 && k < static_cast<int>(ids.size()) ? static_cast<int>(ids[k].size()) : 0;
    }
    long total_cubes() const {
        long n = 0;
        for (const auto& level : ids) n += static_cast<long>(level.size());
        return n;
    }
    long euler_characteristic() const {
        long chi = 0;
        for (size_t k = 0; k < ids.size(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(ids[k].size());
        return chi;
    }

    // d_{axis,eps} of the idx-th k-cube; axis is 1-based.
    int face(int k, int idx, int axis, int eps) const {
        return faces[k][idx][2 * (axis - 1) + eps];
    }

    // Vertex reached by resolving the corner bits (eps_1, ..., eps_k),
    // repeatedly taking the first-axis face.
    int corner_vertex(int k, int idx, const std::vector<int>& bits) const {
        int cur = idx;
        for (int b = 0; b < k; ++b) cur = face(k - b, cur, 1, bits[b]);
        return cur;
    }

    // The 1-cube spanned by `axis` of the idx-th k-cube at the given corner:
    // faces off every other axis at its corner bit, top axis first so the
    // remaining indices stay put.
    int axis_edge(int k, int idx, const std::vector<int>& bits, int axis) const {
        int cur = idx;
        int d = k;
        for (int j = k; j >= 1; --j) {
            if (j == axis) continue;
            cur = face(d, cur, j, bits[j - 1]);
            --d;
        }
        return cur;
    }

    int vertex_index(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end() || it->second.first != 0)
            throw UnknownVertex("unknown vertex '" + id + "'");
        return it->second.second;
    }

    // (dimension, index) of a cube id, or (-1, -1).
    std::pair<int, int> find(const std::string& id) const {
        auto it = index_.find(id);
        return it == index_.end() ? std::pair<int, int>{-1, -1} : it->second;
    }

    void rebuild_index() {
        index_.clear();
        for (size_t k = 0; k < ids.size(); ++k)
            for (size_t i = 0; i < ids[k].size(); ++i)
                index_[ids[k][i]] = {static_cast<int>(k), static_cast<int>(i)};
    }

private:
    std::map<std::string, std::pair<int, int>> index_;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        int root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) x = std::exchange(parent_[x], root);
        return root;
    }
    void merge(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return;
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

inline const nlohmann::json& expect(const nlohmann::json& j, const char* key) {
    if (!j.contains(key))
        throw MalformedDocument(std::string("missing key '") + key + "'");
    return j.at(key);
}

inline std::string expect_string(const nlohmann::json& j, const char* what) {
    if (!j.is_string()) throw MalformedDocument(std::string(what) + " must be a string");
    return j.get<std::string>();
}

// The 2-dimensional shorthand (vertices, directed edges, squares by their
// four face edges) converted to the graded form.
inline nlohmann::json expand_shorthand(const nlohmann::json& j) {
    nlohmann::json cubes;
    cubes["0"] = expect(j, "vertices");
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : expect(j, "edges")) {
        nlohmann::json cube;
        cube["id"] = expect(e, "id");
        cube["faces"] = {expect(e, "from"), expect(e, "to")};
        edges.push_back(cube);
    }
    cubes["1"] = edges;
    if (j.contains("squares")) cubes["2"] = j.at("squares");
    nlohmann::json out;
    if (j.contains("name")) out["name"] = j.at("name");
    out["cubes"] = cubes;
    return out;
}

}  // namespace detail

inline CubicalComplex load_complex_json(const nlohmann::json& doc) {
    using nlohmann::json;
    if (!doc.is_object()) throw MalformedDocument("document must be a JSON object");
    const json& j = (!doc.contains("cubes") && doc.contains("vertices"))
                        ? detail::expand_shorthand(doc)
                        : doc;

    CubicalComplex cx;
    if (j.contains("name")) cx.name = detail::expect_string(j.at("name"), "name");
    const json& cubes = detail::expect(j, "cubes");
    if (!cubes.is_object()) throw MalformedDocument("'cubes' must be an object");

    int max_dim = -1;
    for (const auto& [key, value] : cubes.items()) {
        size_t pos = 0;
        int k = -1;
        try {
            k = std::stoi(key, &pos);
        } catch (...) {
        }
        if (k < 0 || pos != key.size())
            throw MalformedDocument("cube level '" + key + "' is not a dimension");
        if (!value.is_array())
            throw MalformedDocument("cube level '" + key + "' must be an array");
        if (!value.empty()) max_dim = std::max(max_dim, k);
    }
    if (max_dim < 0 || !cubes.contains("0") || cubes.at("0").empty())
        throw MalformedDocument("a complex needs at least one vertex");
    if (max_dim > 16) throw MalformedDocument("dimension too large");

    // Collect ids and raw face id lists, level by level.
    std::vector<std::vector<std::vector<std::string>>> raw_faces(max_dim + 1);
    cx.ids.resize(max_dim + 1);
    cx.faces.resize(max_dim + 1);
    std::map<std::string, int> seen;
    for (int k = 0; k <= max_dim; ++k) {
        if (!cubes.contains(std::to_string(k))) continue;
        for (const auto& cube : cubes.at(std::to_string(k))) {
            std::string id;
            std::vector<std::string> fs;
            if (k == 0) {
                id = detail::expect_string(cube, "vertex id");
            } else {
                if (!cube.is_object()) throw MalformedDocument("cube entries must be objects");
                id = detail::expect_string(detail::expect(cube, "id"), "cube id");
                const auto& farr = detail::expect(cube, "faces");
                if (!farr.is_array() || static_cast<int>(farr.size()) != 2 * k)
                    throw MalformedDocument("cube '" + id + "' must list " +
                                            std::to_string(2 * k) + " faces");
                for (const auto& f : farr) fs.push_back(detail::expect_string(f, "face id"));
            }
            if (!seen.emplace(id, k).second)
                throw MalformedDocument("duplicate cube identifier '" + id + "'");
            cx.ids[k].push_back(id);
            raw_faces[k].push_back(std::move(fs));
        }
    }

    // Deterministic ordering: sort every level by identifier.
    for (int k = 0; k <= max_dim; ++k) {
        std::vector<int> order(cx.ids[k].size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return cx.ids[k][a] < cx.ids[k][b]; });
        std::vector<std::string> sorted_ids;
        std::vector<std::vector<std::string>> sorted_faces;
        for (int i : order) {
            sorted_ids.push_back(cx.ids[k][i]);
            sorted_faces.push_back(raw_faces[k][i]);
        }
        cx.ids[k] = std::move(sorted_ids);
        raw_faces[k] = std::move(sorted_faces);
    }
    cx.rebuild_index();

    // Resolve face references.
    for (int k = 1; k <= max_dim; ++k) {
        cx.faces[k].resize(cx.ids[k].size());
        for (size_t i = 0; i < cx.ids[k].size(); ++i) {
            for (const auto& fid : raw_faces[k][i]) {
                auto [fd, fi] = cx.find(fid);
                if (fd != k - 1)
                    throw DanglingFaceReference("cube '" + cx.ids[k][i] + "' references '" +
                                                fid + "', which is not a " +
                                                std::to_string(k - 1) + "-cube");
                cx.faces[k][i].push_back(fi);
            }
        }
    }
    cx.faces[0].resize(cx.ids[0].size());

    // Cubical identity.
    for (int k = 2; k <= max_dim; ++k) {
        for (int c = 0; c < cx.count(k); ++c) {
            for (int i = 1; i < k; ++i)
                for (int j = i + 1; j <= k; ++j)
                    for (int eps = 0; eps <= 1; ++eps)
                        for (int delta = 0; delta <= 1; ++delta) {
                            int lhs = cx.face(k - 1, cx.face(k, c, j, delta), i, eps);
                            int rhs = cx.face(k - 1, cx.face(k, c, i, eps), j - 1, delta);
                            if (lhs != rhs)
                                throw CubicalIdentityViolation(
                                    "cube '" + cx.ids[k][c] + "' violates the cubical identity at (i=" +
                                    std::to_string(i) + ", j=" + std::to_string(j) + ", eps=" +
                                    std::to_string(eps) + ", delta=" + std::to_string(delta) + ")");
                        }
        }
    }

    // Connectivity of the 1-skeleton.
    detail::UnionFind uf(cx.count(0));
    for (int e = 0; e < cx.count(1); ++e) uf.merge(cx.face(1, e, 1, 0), cx.face(1, e, 1, 1));
    for (int v = 1; v < cx.count(0); ++v)
        if (uf.find(v) != uf.find(0))
            throw Disconnected("vertices '" + cx.ids[0][0] + "' and '" + cx.ids[0][v] +
                               "' lie in different components");

    return cx;
}

inline CubicalComplex load_complex(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedDocument(std::string("invalid JSON: ") + e.what());
    }
    return load_complex_json(j);
}

// Canonical graded-form serialization (levels and cubes in sorted order).
inline std::string serialize_complex(const CubicalComplex& cx) {
    nlohmann::ordered_json out;
    out["name"] = cx.name;
    nlohmann::ordered_json cubes;
    for (int k = 0; k <= cx.dimension(); ++k) {
        if (k == 0) {
            cubes["0"] = cx.ids[0];
            continue;
        }
        nlohmann::ordered_json level = nlohmann::ordered_json::array();
        for (int i = 0; i < cx.count(k); ++i) {
            nlohmann::ordered_json cube;
            cube["id"] = cx.ids[k][i];
            nlohmann::ordered_json fs = nlohmann::ordered_json::array();
            for (int f : cx.faces[k][i]) fs.push_back(cx.ids[k - 1][f]);
            cube["faces"] = fs;
            level.push_back(cube);
        }
        cubes[std::to_string(k)] = level;
    }
    out["cubes"] = cubes;
    return out.dump(2) + "\n";
}

}  // namespace cubegrowth
