#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace raowqo {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kDefaultEnumerationCap = 10;

// Multiset of non-negative vertex degrees, kept sorted non-increasing.
// Non-graphic sequences are representable; graphicness is a query, not an invariant.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> degrees);
    DegreeSequence(std::initializer_list<int> degrees);

    std::span<const int> degrees() const { return degrees_; }
    std::size_t size() const { return degrees_.size(); }
    bool empty() const { return degrees_.empty(); }
    int operator[](std::size_t i) const { return degrees_[i]; }
    long long sum() const;
    int max_degree() const { return degrees_.empty() ? 0 : degrees_.front(); }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> degrees_;
};

// Simple undirected graph on vertices 0..n-1, stored as a dense adjacency matrix.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

    std::size_t vertex_count() const { return n_; }
    bool has_edge(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }

    // Throws std::invalid_argument on loops, out-of-range endpoints and duplicates.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::size_t degree(Vertex v) const;
    std::size_t edge_count() const;
    std::vector<Vertex> neighbors(Vertex v) const;
    // Edges as (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> adj_;
};

// Erdős–Gallai test. Zero entries are stripped first; the empty sequence is graphic.
bool is_graphic(const DegreeSequence& d);

// Sufficient-only test: after stripping zeros, an even-sum sequence of length n whose
// largest entry k satisfies n >= k*k is graphic. A false result is inconclusive.
bool length_bound_sufficient(const DegreeSequence& d);

// Deterministic realization: vertex i receives degree d[i]. The vertex of highest
// remaining degree is laid off first against the next highest ones, ties by lowest index.
std::optional<Graph> havel_hakimi(const DegreeSequence& d);

// Visits every graph on 0..n-1 with deg(i) == d[i] exactly (entry-indexed, not up to
// isomorphism) in a fixed canonical order. The visitor returns false to stop early.
// Returns false iff the visitor stopped the enumeration. Throws CapExceeded if size > cap.
bool for_each_realization(const DegreeSequence& d, std::size_t cap,
                          const std::function<bool(const Graph&)>& visit);

std::vector<Graph> enumerate_realizations(const DegreeSequence& d,
                                          std::size_t cap = kDefaultEnumerationCap);

struct InducedSubgraph {
    Graph graph;
    // original[k] is the vertex of the parent graph that became vertex k.
    std::vector<Vertex> original;
};

// Vertices are re-indexed in the order given. Throws std::invalid_argument on
// out-of-range or repeated vertices.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

DegreeSequence degree_sequence_of(const Graph& g);

// Per-vertex degrees in vertex order (not sorted).
std::vector<int> vertex_degrees(const Graph& g);

}  // namespace raowqo
