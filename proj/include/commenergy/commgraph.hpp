#ifndef COMMENERGY_COMMGRAPH_HPP
#define COMMENERGY_COMMGRAPH_HPP

// Commuting graph of a finite non-abelian group: vertices are the non-central
// elements, edges join distinct commuting elements. Adjacency is stored as
// packed bit rows; the derived adjacency/degree/Laplacian/signless-Laplacian
// matrices are plain integer matrices.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "commenergy/groups.hpp"

namespace commenergy {

enum class MatrixKind { Adjacency, Degree, Laplacian, Signless };

inline const char* kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::Adjacency: return "adjacency";
        case MatrixKind::Degree: return "degree";
        case MatrixKind::Laplacian: return "laplacian";
        case MatrixKind::Signless: return "signless";
    }
    return "?";
}

struct IntMatrix {
    int n = 0;
    MatrixKind kind = MatrixKind::Adjacency;
    std::vector<long long> a;

    long long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    long long& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    long long trace() const {
        long long t = 0;
        for (int i = 0; i < n; ++i) t += at(i, i);
        return t;
    }
};

struct CommutingGraph {
    GroupFamilySpec group_spec;
    std::vector<int> vertices;       // group element indices, increasing
    std::vector<std::string> labels; // element labels, same order
    int n = 0;
    long edges = 0;
    std::vector<uint64_t> bits;  // packed rows, row stride = words
    size_t words = 0;

    bool adjacent(int i, int j) const {
        return (bits[static_cast<size_t>(i) * words + static_cast<size_t>(j >> 6)] >> (j & 63)) & 1u;
    }
    int degree(int i) const {
        int d = 0;
        for (size_t w = 0; w < words; ++w)
            d += __builtin_popcountll(bits[static_cast<size_t>(i) * words + w]);
        return d;
    }
};

inline CommutingGraph commuting_graph(const FiniteGroup& g) {
    std::vector<int> z = center(g);
    if (static_cast<int>(z.size()) == g.order)
        throw AbelianGroupError("commuting graph undefined for abelian group " + g.family.descriptor());
    CommutingGraph cg;
    cg.group_spec = g.family;
    std::vector<char> central(static_cast<size_t>(g.order), 0);
    for (int x : z) central[static_cast<size_t>(x)] = 1;
    for (int x = 0; x < g.order; ++x)
        if (!central[static_cast<size_t>(x)]) {
            cg.vertices.push_back(x);
            cg.labels.push_back(g.labels[static_cast<size_t>(x)]);
        }
    cg.n = static_cast<int>(cg.vertices.size());
    cg.words = static_cast<size_t>((cg.n + 63) / 64);
    cg.bits.assign(static_cast<size_t>(cg.n) * cg.words, 0);
    for (int i = 0; i < cg.n; ++i)
        for (int j = i + 1; j < cg.n; ++j)
            if (g.commute(cg.vertices[static_cast<size_t>(i)], cg.vertices[static_cast<size_t>(j)])) {
                cg.bits[static_cast<size_t>(i) * cg.words + static_cast<size_t>(j >> 6)] |= 1ull << (j & 63);
                cg.bits[static_cast<size_t>(j) * cg.words + static_cast<size_t>(i >> 6)] |= 1ull << (i & 63);
                ++cg.edges;
            }
    return cg;
}

struct FourMatrices {
    IntMatrix A, D, L, Q;
};

inline FourMatrices matrices(const CommutingGraph& cg) {
    FourMatrices m;
    for (IntMatrix* mm : {&m.A, &m.D, &m.L, &m.Q}) {
        mm->n = cg.n;
        mm->a.assign(static_cast<size_t>(cg.n) * cg.n, 0);
    }
    m.A.kind = MatrixKind::Adjacency;
    m.D.kind = MatrixKind::Degree;
    m.L.kind = MatrixKind::Laplacian;
    m.Q.kind = MatrixKind::Signless;
    for (int i = 0; i < cg.n; ++i) {
        long long d = cg.degree(i);
        m.D.at(i, i) = d;
        m.L.at(i, i) = d;
        m.Q.at(i, i) = d;
        for (int j = 0; j < cg.n; ++j)
            if (cg.adjacent(i, j)) {
                m.A.at(i, j) = 1;
                m.L.at(i, j) = -1;
                m.Q.at(i, j) = 1;
            }
    }
    return m;
}

// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<int>> components(const CommutingGraph& cg) {
    std::vector<int> comp(static_cast<size_t>(cg.n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < cg.n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u = 0; u < cg.n; ++u)
                if (cg.adjacent(v, u) && comp[static_cast<size_t>(u)] < 0) {
                    comp[static_cast<size_t>(u)] = static_cast<int>(out.size());
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

// Present iff every component is complete; the multiset of clique sizes,
// ascending. Completeness per component: every member has degree size-1.
inline std::optional<std::vector<long>> clique_decomposition(const CommutingGraph& cg) {
    std::vector<long> sizes;
    for (const auto& comp : components(cg)) {
        for (int v : comp)
            if (cg.degree(v) != static_cast<int>(comp.size()) - 1) return std::nullopt;
        sizes.push_back(static_cast<long>(comp.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

inline std::string dot_export(const CommutingGraph& cg) {
    std::string out = "graph commuting {\n";
    for (int i = 0; i < cg.n; ++i) {
        std::string lab = cg.labels[static_cast<size_t>(i)];
        std::string esc;
        for (char c : lab) {
            if (c == '"' || c == '\\') esc += '\\';
            esc += c;
        }
        out += "  v" + std::to_string(i) + " [label=\"" + esc + "\"];\n";
    }
    for (int i = 0; i < cg.n; ++i)
        for (int j = i + 1; j < cg.n; ++j)
            if (cg.adjacent(i, j)) out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

inline nlohmann::ordered_json edges_json(const CommutingGraph& cg) {
    nlohmann::ordered_json j;
    j["group"] = cg.group_spec.descriptor();
    j["vertices"] = cg.n;
    j["labels"] = cg.labels;
    std::vector<std::array<int, 2>> edges;
    for (int i = 0; i < cg.n; ++i)
        for (int k = i + 1; k < cg.n; ++k)
            if (cg.adjacent(i, k)) edges.push_back({i, k});
    j["edges"] = edges;
    return j;
}

}  // namespace commenergy

#endif
