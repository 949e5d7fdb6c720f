#include "raowqo/degseq.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "raowqo/errors.hpp"

namespace raowqo {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    for (int d : degrees_) {
        if (d < 0) {
            throw std::invalid_argument("negative degree " + std::to_string(d));
        }
    }
    std::stable_sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

DegreeSequence::DegreeSequence(std::initializer_list<int> degrees)
    : DegreeSequence(std::vector<int>(degrees)) {}

long long DegreeSequence::sum() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
    }
    if (has_edge(u, v)) {
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 1;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    adj_[u * n_ + v] = 0;
    adj_[v * n_ + u] = 0;
}

std::size_t Graph::degree(Vertex v) const {
    auto row = adj_.begin() + static_cast<std::ptrdiff_t>(v * n_);
    return static_cast<std::size_t>(std::count(row, row + static_cast<std::ptrdiff_t>(n_), 1));
}

std::size_t Graph::edge_count() const {
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u) {
        if (has_edge(v, u)) out.push_back(u);
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            if (has_edge(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

namespace {

// Erdős–Gallai on a non-increasing sequence of positive entries.
bool erdos_gallai(std::span<const int> d) {
    long long total = std::accumulate(d.begin(), d.end(), 0LL);
    if (total % 2 != 0) return false;
    const std::size_t n = d.size();
    long long prefix = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        long long rhs = static_cast<long long>(k) * static_cast<long long>(k - 1);
        for (std::size_t i = k; i < n; ++i) {
            rhs += std::min<long long>(d[i], static_cast<long long>(k));
        }
        if (prefix > rhs) return false;
    }
    return true;
}

std::vector<int> positive_part(std::span<const int> sorted_desc) {
    std::vector<int> out;
    for (int d : sorted_desc) {
        if (d > 0) out.push_back(d);
    }
    return out;
}

}  // namespace

bool is_graphic(const DegreeSequence& d) {
    return erdos_gallai(positive_part(d.degrees()));
}

bool length_bound_sufficient(const DegreeSequence& d) {
    const auto positive = positive_part(d.degrees());
    const long long total = std::accumulate(positive.begin(), positive.end(), 0LL);
    if (total % 2 != 0) return false;
    const long long largest = positive.empty() ? 0 : positive.front();
    return static_cast<long long>(positive.size()) >= largest * largest;
}

std::optional<Graph> havel_hakimi(const DegreeSequence& d) {
    const std::size_t n = d.size();
    std::vector<int> remaining(d.degrees().begin(), d.degrees().end());
    Graph g(n);
    std::vector<Vertex> candidates;
    candidates.reserve(n);
    while (true) {
        Vertex pivot = n;
        for (Vertex v = 0; v < n; ++v) {
            if (remaining[v] > 0 && (pivot == n || remaining[v] > remaining[pivot])) pivot = v;
        }
        if (pivot == n) break;

        candidates.clear();
        for (Vertex v = 0; v < n; ++v) {
            if (v != pivot && remaining[v] > 0) candidates.push_back(v);
        }
        const auto need = static_cast<std::size_t>(remaining[pivot]);
        if (candidates.size() < need) return std::nullopt;
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](Vertex a, Vertex b) { return remaining[a] > remaining[b]; });
        for (std::size_t k = 0; k < need; ++k) {
            g.add_edge(pivot, candidates[k]);
            --remaining[candidates[k]];
        }
        remaining[pivot] = 0;
    }
    return g;
}

namespace {

class RealizationSearch {
public:
    RealizationSearch(std::span<const int> degrees, const std::function<bool(const Graph&)>& visit)
        : remaining_(degrees.begin(), degrees.end()), graph_(degrees.size()), visit_(visit) {}

    // Returns false when the visitor asked to stop.
    bool row(Vertex i) {
        const std::size_t n = remaining_.size();
        if (i == n) return visit_(graph_);
        if (!suffix_feasible(i)) return true;
        return choose(i, i + 1, remaining_[i]);
    }

private:
    // Remaining degrees of vertices >= i must be freely realizable among themselves.
    bool suffix_feasible(Vertex i) const {
        std::vector<int> rest(remaining_.begin() + static_cast<std::ptrdiff_t>(i), remaining_.end());
        std::sort(rest.begin(), rest.end(), std::greater<>());
        return erdos_gallai(positive_part(rest));
    }

    bool choose(Vertex i, Vertex from, int need) {
        const std::size_t n = remaining_.size();
        if (need == 0) {
            const int saved = remaining_[i];
            remaining_[i] = 0;
            const bool go_on = row(i + 1);
            remaining_[i] = saved;
            return go_on;
        }
        std::size_t available = 0;
        for (Vertex j = from; j < n; ++j) {
            if (remaining_[j] > 0) ++available;
        }
        if (available < static_cast<std::size_t>(need)) return true;
        for (Vertex j = from; j < n; ++j) {
            if (remaining_[j] == 0) continue;
            graph_.add_edge(i, j);
            --remaining_[j];
            const bool go_on = choose(i, j + 1, need - 1);
            ++remaining_[j];
            graph_.remove_edge(i, j);
            if (!go_on) return false;
        }
        return true;
    }

    std::vector<int> remaining_;
    Graph graph_;
    const std::function<bool(const Graph&)>& visit_;
};

}  // namespace

bool for_each_realization(const DegreeSequence& d, std::size_t cap,
                          const std::function<bool(const Graph&)>& visit) {
    if (d.size() > cap) throw CapExceeded(d.size(), cap);
    if (!is_graphic(d)) return true;
    RealizationSearch search(d.degrees(), visit);
    return search.row(0);
}

std::vector<Graph> enumerate_realizations(const DegreeSequence& d, std::size_t cap) {
    std::vector<Graph> out;
    for_each_realization(d, cap, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex v : vertices) {
        if (v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
        if (seen[v]) throw std::invalid_argument("repeated vertex " + std::to_string(v));
        seen[v] = true;
    }
    InducedSubgraph out{Graph(vertices.size()), std::vector<Vertex>(vertices.begin(), vertices.end())};
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (g.has_edge(vertices[a], vertices[b])) out.graph.add_edge(a, b);
        }
    }
    return out;
}

std::vector<int> vertex_degrees(const Graph& g) {
    std::vector<int> out(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = static_cast<int>(g.degree(v));
    return out;
}

DegreeSequence degree_sequence_of(const Graph& g) {
    return DegreeSequence(vertex_degrees(g));
}

}  // namespace raowqo
