#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

namespace oracle {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) out.emplace_back(u, v);
    }
    return out;
}

// Entry-indexed degree vectors of all graphs on n vertices, one per mask.
void for_each_degree_vector(std::size_t n, const auto& visit) {
    if (n > 7) throw std::invalid_argument("brute force limited to 7 vertices");
    const auto pairs = pairs_of(n);
    const std::uint64_t count = std::uint64_t{1} << pairs.size();
    std::vector<int> deg(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (mask >> p & 1) {
                ++deg[pairs[p].first];
                ++deg[pairs[p].second];
            }
        }
        visit(mask, deg);
    }
}

const std::set<std::vector<int>>& realizable(std::size_t n) {
    static std::mutex lock;
    static std::map<std::size_t, std::set<std::vector<int>>> cache;
    std::lock_guard guard(lock);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::set<std::vector<int>> seen;
    for_each_degree_vector(n, [&](std::uint64_t, const std::vector<int>& deg) {
        std::vector<int> sorted = deg;
        std::sort(sorted.begin(), sorted.end());
        seen.insert(std::move(sorted));
    });
    return cache.emplace(n, std::move(seen)).first->second;
}

bool extend(const LabelledGraph& small, const LabelledGraph& big, std::vector<std::size_t>& image,
            std::vector<bool>& taken) {
    const std::size_t x = image.size();
    if (x == small.graph.vertex_count()) return true;
    for (std::size_t y = 0; y < big.graph.vertex_count(); ++y) {
        if (taken[y]) continue;
        if (!raowqo::leq(small.order, small.labels[x], big.labels[y])) continue;
        bool consistent = true;
        for (std::size_t p = 0; p < x && consistent; ++p) {
            consistent = small.graph.has_edge(p, x) == big.graph.has_edge(image[p], y);
        }
        if (!consistent) continue;
        taken[y] = true;
        image.push_back(y);
        if (extend(small, big, image, taken)) return true;
        image.pop_back();
        taken[y] = false;
    }
    return false;
}

std::vector<LabelledGraph> labelled_realizations(const LabelledGraphicSequence& d) {
    std::vector<int> degrees;
    std::vector<Label> labels;
    for (const auto& e : d.entries()) {
        degrees.push_back(e.degree);
        labels.push_back(e.label);
    }
    std::vector<LabelledGraph> out;
    for (auto& g : brute_force_realizations(degrees)) out.push_back({std::move(g), labels, d.order()});
    return out;
}

}  // namespace

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    const auto pairs = pairs_of(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (mask >> p & 1) g.add_edge(pairs[p].first, pairs[p].second);
    }
    return g;
}

bool brute_force_graphic(std::span<const int> degrees) {
    std::vector<int> sorted(degrees.begin(), degrees.end());
    std::sort(sorted.begin(), sorted.end());
    return realizable(sorted.size()).contains(sorted);
}

std::vector<Graph> brute_force_realizations(std::span<const int> degrees) {
    const std::size_t n = degrees.size();
    std::vector<Graph> out;
    const std::vector<int> target(degrees.begin(), degrees.end());
    for_each_degree_vector(n, [&](std::uint64_t mask, const std::vector<int>& deg) {
        if (deg == target) out.push_back(graph_from_mask(n, mask));
    });
    return out;
}

bool exhaustive_higman(std::span<const Label> a, std::span<const Label> b, const OrderOracle& base) {
    const std::size_t k = a.size();
    if (k > b.size()) return false;
    // Walk all k-combinations of b's indices via a selector permutation.
    std::vector<bool> selector(b.size(), false);
    std::fill(selector.begin(), selector.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::size_t next = 0;
        bool ok = true;
        for (std::size_t i = 0; i < b.size() && ok; ++i) {
            if (!selector[i]) continue;
            ok = raowqo::leq(base, a[next], b[i]);
            ++next;
        }
        if (ok) return true;
    } while (std::prev_permutation(selector.begin(), selector.end()));
    return false;
}

bool induced_contains(const LabelledGraph& small, const LabelledGraph& big) {
    std::vector<std::size_t> image;
    std::vector<bool> taken(big.graph.vertex_count(), false);
    return extend(small, big, image, taken);
}

bool double_brute_rao_le(const LabelledGraphicSequence& d1, const LabelledGraphicSequence& d2) {
    const auto small = labelled_realizations(d1);
    const auto big = labelled_realizations(d2);
    for (const auto& g2 : big) {
        for (const auto& g1 : small) {
            if (induced_contains(g1, g2)) return true;
        }
    }
    return false;
}

raowqo::DegreeSequence random_graphic(std::mt19937_64& rng, std::size_t length, int max_degree) {
    std::uniform_int_distribution<int> pick(0, max_degree);
    for (;;) {
        std::vector<int> d(length);
        for (auto& x : d) x = pick(rng);
        raowqo::DegreeSequence seq(std::move(d));
        if (raowqo::is_graphic(seq)) return seq;
    }
}

}  // namespace oracle
