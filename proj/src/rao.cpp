#include "raowqo/rao.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "raowqo/errors.hpp"

namespace raowqo {

LabelledGraphicSequence::LabelledGraphicSequence(OrderOracle order, std::vector<LabelledEntry> entries)
    : order_(std::move(order)), entries_(std::move(entries)) {
    std::vector<int> degrees;
    degrees.reserve(entries_.size());
    for (const auto& e : entries_) {
        if (e.degree < 0) throw std::invalid_argument("negative degree " + std::to_string(e.degree));
        check_label(order_, e.label);
        degrees.push_back(e.degree);
    }
    if (!is_graphic(DegreeSequence(std::move(degrees)))) {
        throw NotGraphicError("labelled sequence is not graphic");
    }
    std::vector<std::pair<std::string, LabelledEntry>> keyed;
    keyed.reserve(entries_.size());
    for (auto& e : entries_) keyed.emplace_back(label_key(e.label), std::move(e));
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.second.degree != b.second.degree) return a.second.degree > b.second.degree;
        return a.first < b.first;
    });
    for (std::size_t i = 0; i < keyed.size(); ++i) entries_[i] = std::move(keyed[i].second);
}

LabelledGraphicSequence LabelledGraphicSequence::unlabelled(const DegreeSequence& degrees) {
    std::vector<LabelledEntry> entries;
    entries.reserve(degrees.size());
    for (int d : degrees.degrees()) entries.push_back({d, Label::unit()});
    return LabelledGraphicSequence(OrderOracle::unit(), std::move(entries));
}

DegreeSequence LabelledGraphicSequence::degrees() const {
    std::vector<int> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.degree);
    return DegreeSequence(std::move(out));
}

long long LabelledGraphicSequence::degree_sum() const {
    long long total = 0;
    for (const auto& e : entries_) total += e.degree;
    return total;
}

namespace {

using DegreeLabel = std::pair<int, std::string>;

std::vector<DegreeLabel> sorted_pairs(const LabelledGraph& g) {
    std::vector<DegreeLabel> out;
    out.reserve(g.labels.size());
    for (Vertex v = 0; v < g.graph.vertex_count(); ++v) {
        out.emplace_back(static_cast<int>(g.graph.degree(v)), label_key(g.labels[v]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DegreeLabel> sorted_pairs(const LabelledGraphicSequence& d) {
    std::vector<DegreeLabel> out;
    out.reserve(d.size());
    for (const auto& e : d.entries()) out.emplace_back(e.degree, label_key(e.label));
    std::sort(out.begin(), out.end());
    return out;
}

bool well_formed(const LabelledGraph& g) {
    if (g.labels.size() != g.graph.vertex_count()) return false;
    return std::all_of(g.labels.begin(), g.labels.end(),
                       [&](const Label& l) { return is_well_typed(g.order, l); });
}

WitnessCheck fail(WitnessDefect defect, std::string reason) { return {defect, std::move(reason)}; }

// Kuhn's augmenting paths on a small dense bipartite graph; left[i] -> right[match[i]].
class BipartiteMatcher {
public:
    explicit BipartiteMatcher(const std::vector<std::vector<std::uint8_t>>& compatible)
        : compatible_(compatible),
          right_size_(compatible.empty() ? 0 : compatible.front().size()),
          owner_(right_size_, kFree) {}

    std::optional<std::vector<std::size_t>> perfect() {
        const std::size_t left_size = compatible_.size();
        if (left_size > right_size_) return std::nullopt;
        for (std::size_t l = 0; l < left_size; ++l) {
            visited_.assign(right_size_, 0);
            if (!augment(l)) return std::nullopt;
        }
        std::vector<std::size_t> match(left_size);
        for (std::size_t r = 0; r < right_size_; ++r) {
            if (owner_[r] != kFree) match[owner_[r]] = r;
        }
        return match;
    }

private:
    static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

    bool augment(std::size_t l) {
        for (std::size_t r = 0; r < right_size_; ++r) {
            if (!compatible_[l][r] || visited_[r]) continue;
            visited_[r] = 1;
            if (owner_[r] == kFree || augment(owner_[r])) {
                owner_[r] = l;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<std::uint8_t>>& compatible_;
    std::size_t right_size_;
    std::vector<std::size_t> owner_;
    std::vector<std::uint8_t> visited_;
};

void require_same_order(const LabelledGraphicSequence& d1, const LabelledGraphicSequence& d2) {
    if (!(d1.order() == d2.order())) {
        throw OrderMismatch("orders differ: " + order_key(d1.order()) + " vs " + order_key(d2.order()));
    }
}

std::vector<Label> labels_of(const LabelledGraphicSequence& d) {
    std::vector<Label> out;
    out.reserve(d.size());
    for (const auto& e : d.entries()) out.push_back(e.label);
    return out;
}

}  // namespace

bool realizes(const LabelledGraph& g, const LabelledGraphicSequence& d) {
    if (!well_formed(g) || !(g.order == d.order())) return false;
    if (g.graph.vertex_count() != d.size()) return false;
    return sorted_pairs(g) == sorted_pairs(d);
}

WitnessCheck verify_witness(const EmbeddingWitness& w) {
    const OrderOracle& order = w.d1.order();
    if (!(w.d2.order() == order) || !(w.g1.order == order) || !(w.g2.order == order)) {
        return fail(WitnessDefect::order_mismatch, "order mismatch");
    }
    if (!well_formed(w.g1) || !well_formed(w.g2)) {
        return fail(WitnessDefect::malformed_graph, "malformed labelled graph");
    }
    const std::size_t n1 = w.g1.graph.vertex_count();
    const std::size_t n2 = w.g2.graph.vertex_count();
    if (w.phi.size() != n1) return fail(WitnessDefect::phi_size, "phi size differs from g1 vertex count");
    std::vector<std::uint8_t> hit(n2, 0);
    for (Vertex x = 0; x < n1; ++x) {
        if (w.phi[x] >= n2) {
            return fail(WitnessDefect::phi_out_of_range, "phi(" + std::to_string(x) + ") out of range");
        }
        if (hit[w.phi[x]]) {
            return fail(WitnessDefect::not_injective, "not injective at vertex " + std::to_string(x));
        }
        hit[w.phi[x]] = 1;
    }
    for (Vertex x = 0; x < n1; ++x) {
        for (Vertex y = x + 1; y < n1; ++y) {
            if (w.g1.graph.has_edge(x, y) != w.g2.graph.has_edge(w.phi[x], w.phi[y])) {
                return fail(WitnessDefect::induced_condition,
                            "induced condition fails on pair " + std::to_string(x) + "," + std::to_string(y));
            }
        }
    }
    for (Vertex x = 0; x < n1; ++x) {
        if (!leq(order, w.g1.labels[x], w.g2.labels[w.phi[x]])) {
            return fail(WitnessDefect::label_not_dominated,
                        "label not dominated at vertex " + std::to_string(x));
        }
    }
    if (!realizes(w.g1, w.d1)) return fail(WitnessDefect::g1_not_realization, "g1 does not realize d1");
    if (!realizes(w.g2, w.d2)) return fail(WitnessDefect::g2_not_realization, "g2 does not realize d2");
    return {};
}

LabelledGraph realize(const LabelledGraphicSequence& d) {
    auto g = havel_hakimi(d.degrees());
    if (!g) throw NotGraphicError("labelled sequence is not graphic");
    return {std::move(*g), labels_of(d), d.order()};
}

bool may_contain(const LabelledGraphicSequence& d1, const LabelledGraphicSequence& d2) {
    return d1.size() <= d2.size() && d1.degree_sum() <= d2.degree_sum();
}

std::optional<EmbeddingWitness> rao_le_exact(const LabelledGraphicSequence& d1,
                                             const LabelledGraphicSequence& d2, std::size_t cap) {
    require_same_order(d1, d2);
    if (d2.size() > cap) throw CapExceeded(d2.size(), cap);
    if (d2.size() >= 64) throw CapExceeded(d2.size(), 63);
    if (!may_contain(d1, d2)) return std::nullopt;

    const std::size_t k = d1.size();
    const std::size_t n = d2.size();
    const auto target = d1.degrees();

    // label_ok[e][v]: entry e of d1 may sit on vertex v of d2's realization.
    std::vector<std::vector<std::uint8_t>> label_ok(k, std::vector<std::uint8_t>(n, 0));
    for (std::size_t e = 0; e < k; ++e) {
        for (std::size_t v = 0; v < n; ++v) label_ok[e][v] = leq(d1.order(), d1[e].label, d2[v].label);
    }

    std::optional<EmbeddingWitness> found;
    std::vector<Vertex> subset(k);
    std::vector<int> induced(k);
    std::vector<int> sorted_induced(k);
    std::vector<std::vector<std::uint8_t>> compatible(k, std::vector<std::uint8_t>(k, 0));

    auto try_subset = [&](const Graph& g2, std::uint64_t mask) {
        std::size_t pos = 0;
        for (std::uint64_t m = mask; m != 0; m &= m - 1) subset[pos++] = static_cast<Vertex>(std::countr_zero(m));
        for (std::size_t a = 0; a < k; ++a) {
            int deg = 0;
            for (std::size_t b = 0; b < k; ++b) {
                if (a != b && g2.has_edge(subset[a], subset[b])) ++deg;
            }
            induced[a] = deg;
        }
        sorted_induced = induced;
        std::sort(sorted_induced.begin(), sorted_induced.end(), std::greater<>());
        if (!std::equal(sorted_induced.begin(), sorted_induced.end(), target.degrees().begin())) return false;

        for (std::size_t e = 0; e < k; ++e) {
            for (std::size_t a = 0; a < k; ++a) {
                compatible[e][a] = d1[e].degree == induced[a] && label_ok[e][subset[a]];
            }
        }
        auto match = BipartiteMatcher(compatible).perfect();
        if (!match) return false;

        std::vector<Vertex> phi(k);
        for (std::size_t e = 0; e < k; ++e) phi[e] = subset[(*match)[e]];
        Graph g1(k);
        for (std::size_t e = 0; e < k; ++e) {
            for (std::size_t f = e + 1; f < k; ++f) {
                if (g2.has_edge(phi[e], phi[f])) g1.add_edge(e, f);
            }
        }
        found = EmbeddingWitness{d1, d2, LabelledGraph{std::move(g1), labels_of(d1), d1.order()},
                                 LabelledGraph{g2, labels_of(d2), d2.order()}, std::move(phi)};
        return true;
    };

    for_each_realization(d2.degrees(), cap, [&](const Graph& g2) {
        if (k == 0) return !try_subset(g2, 0);
        // Gosper's hack over all k-subsets of n vertices.
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit;) {
            if (try_subset(g2, mask)) return false;
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        return true;
    });
    return found;
}

namespace {

class PaddingSearch {
public:
    PaddingSearch(const LabelledGraphicSequence& d1, const LabelledGraphicSequence& d2, std::size_t budget)
        : d1_(d1), d2_(d2), budget_(budget), node_budget_(budget * (d2.size() + 1) * 16 + 64),
          used_(d2.size(), 0), assigned_(d1.size(), 0), class_of_(d2.size()) {
        std::map<DegreeLabel, std::size_t> leaders;
        for (std::size_t t = 0; t < d2.size(); ++t) {
            auto [it, inserted] = leaders.try_emplace(DegreeLabel{d2[t].degree, label_key(d2[t].label)}, t);
            class_of_[t] = it->second;
        }
        same_as_previous_.assign(d1.size(), 0);
        for (std::size_t e = 1; e < d1.size(); ++e) same_as_previous_[e] = d1[e] == d1[e - 1];
        compatible_.assign(d1.size(), std::vector<std::uint8_t>(d2.size(), 0));
        for (std::size_t e = 0; e < d1.size(); ++e) {
            for (std::size_t t = 0; t < d2.size(); ++t) {
                compatible_[e][t] = d1[e].degree == d2[t].degree && leq(d1.order(), d1[e].label, d2[t].label);
            }
        }
    }

    std::optional<EmbeddingWitness> run() {
        if (d1_.size() > d2_.size()) return std::nullopt;
        if (!BipartiteMatcher(compatible_).perfect()) return std::nullopt;
        assign(0);
        return std::move(found_);
    }

private:
    // Returns false when the search must stop (found, or a budget ran out).
    bool assign(std::size_t e) {
        if (++nodes_ > node_budget_) return false;
        if (e == d1_.size()) return evaluate();
        for (std::size_t t = 0; t < d2_.size(); ++t) {
            if (used_[t] || !compatible_[e][t]) continue;
            if (same_as_previous_[e] && t < assigned_[e - 1]) continue;
            if (!lowest_unused_in_class(t)) continue;
            used_[t] = 1;
            assigned_[e] = t;
            const bool go_on = assign(e + 1);
            used_[t] = 0;
            if (!go_on) return false;
        }
        return true;
    }

    bool lowest_unused_in_class(std::size_t t) const {
        for (std::size_t s = class_of_[t]; s < t; ++s) {
            if (class_of_[s] == class_of_[t] && !used_[s]) return false;
        }
        return true;
    }

    bool evaluate() {
        ++matchings_;
        std::vector<std::size_t> leftover;
        std::vector<int> leftover_degrees;
        for (std::size_t t = 0; t < d2_.size(); ++t) {
            if (!used_[t]) {
                leftover.push_back(t);
                leftover_degrees.push_back(d2_[t].degree);
            }
        }
        const DegreeSequence rest(leftover_degrees);
        if (rest.sum() % 2 != 0) {
            throw std::logic_error("equal-degree matching left an odd leftover sum");
        }
        if (length_bound_sufficient(rest) || is_graphic(rest)) {
            build(leftover, rest);
            return false;
        }
        return matchings_ < budget_;
    }

    void build(const std::vector<std::size_t>& leftover, const DegreeSequence& rest) {
        const std::size_t k = d1_.size();
        LabelledGraph g1 = realize(d1_);
        const auto padding = havel_hakimi(rest);
        if (!padding) throw std::logic_error("graphic leftover failed to realize");

        Graph g2(d2_.size());
        for (const auto& [u, v] : g1.graph.edges()) g2.add_edge(u, v);
        for (const auto& [u, v] : padding->edges()) g2.add_edge(k + u, k + v);
        std::vector<Label> labels;
        labels.reserve(d2_.size());
        for (std::size_t e = 0; e < k; ++e) labels.push_back(d2_[assigned_[e]].label);
        for (std::size_t t : leftover) labels.push_back(d2_[t].label);

        std::vector<Vertex> phi(k);
        for (std::size_t e = 0; e < k; ++e) phi[e] = e;
        found_ = EmbeddingWitness{d1_, d2_, std::move(g1), LabelledGraph{std::move(g2), std::move(labels), d2_.order()},
                                  std::move(phi)};
    }

    const LabelledGraphicSequence& d1_;
    const LabelledGraphicSequence& d2_;
    std::size_t budget_;
    std::size_t node_budget_;
    std::size_t matchings_ = 0;
    std::size_t nodes_ = 0;
    std::vector<std::uint8_t> used_;
    std::vector<std::size_t> assigned_;
    std::vector<std::size_t> class_of_;
    std::vector<std::uint8_t> same_as_previous_;
    std::vector<std::vector<std::uint8_t>> compatible_;
    std::optional<EmbeddingWitness> found_;
};

}  // namespace

std::optional<EmbeddingWitness> rao_le_padding(const LabelledGraphicSequence& d1,
                                               const LabelledGraphicSequence& d2, std::size_t budget) {
    require_same_order(d1, d2);
    if (budget == 0) return std::nullopt;
    return PaddingSearch(d1, d2, budget).run();
}

AlmostBoundedReduction reduce_almost_bounded(const LabelledGraphicSequence& d, std::size_t top_size) {
    return reduce_almost_bounded(d, top_size, realize(d).graph);
}

AlmostBoundedReduction reduce_almost_bounded(const LabelledGraphicSequence& d, std::size_t top_size,
                                             const Graph& realization) {
    if (d.size() < top_size) {
        throw TooShort("sequence of length " + std::to_string(d.size()) + " has fewer than " +
                       std::to_string(top_size) + " vertices");
    }
    if (realization.vertex_count() != d.size()) throw std::invalid_argument("realization has wrong vertex count");
    for (Vertex v = 0; v < d.size(); ++v) {
        if (static_cast<int>(realization.degree(v)) != d[v].degree) {
            throw std::invalid_argument("realization does not match entry degrees");
        }
    }

    std::vector<Vertex> order(d.size());
    for (Vertex v = 0; v < d.size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return realization.degree(a) > realization.degree(b); });
    std::vector<Vertex> top(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(top_size));
    std::vector<std::uint8_t> in_top(d.size(), 0);
    for (Vertex x : top) in_top[x] = 1;

    AlmostBoundedReduction out{top_size, induced_subgraph(realization, top).graph, {},
                               LabelledGraphicSequence(OrderOracle::unit(), {})};
    for (Vertex x : top) out.top_labels.push_back(d[x].label);

    std::vector<LabelledEntry> rest;
    for (Vertex v = 0; v < d.size(); ++v) {
        if (in_top[v]) continue;
        std::vector<std::size_t> adjacent;
        for (std::size_t t = 0; t < top_size; ++t) {
            if (realization.has_edge(v, top[t])) adjacent.push_back(t);
        }
        const int degree = d[v].degree - static_cast<int>(adjacent.size());
        rest.push_back({degree, Label::tuple({d[v].label, Label::subset(top_size, adjacent)})});
    }
    out.residual = LabelledGraphicSequence(
        OrderOracle::product({d.order(), OrderOracle::powerset_eq(top_size)}), std::move(rest));
    return out;
}

namespace {

// Top graph on vertices 0..N-1, residual graph shifted by N, cross edges from subset labels.
LabelledGraph reattach(const AlmostBoundedReduction& red, const LabelledGraph& residual, const OrderOracle& order) {
    const std::size_t top = red.top_size;
    const std::size_t n = top + residual.graph.vertex_count();
    LabelledGraph out{Graph(n), red.top_labels, order};
    for (const auto& [u, v] : red.top_graph.edges()) out.graph.add_edge(u, v);
    for (const auto& [u, v] : residual.graph.edges()) out.graph.add_edge(top + u, top + v);
    for (Vertex v = 0; v < residual.graph.vertex_count(); ++v) {
        const auto& pair = std::get<TupleLabel>(residual.labels[v].value).items;
        const auto& members = std::get<SubsetLabel>(pair[1].value).members;
        for (std::size_t t = 0; t < top; ++t) {
            if (members[t]) out.graph.add_edge(t, top + v);
        }
        out.labels.push_back(pair[0]);
    }
    return out;
}

}  // namespace

EmbeddingWitness recombine(const AlmostBoundedReduction& red_i, const AlmostBoundedReduction& red_j,
                           const EmbeddingWitness& residual_witness, const LabelledGraphicSequence& d_i,
                           const LabelledGraphicSequence& d_j) {
    require_same_order(d_i, d_j);
    if (red_i.top_size != red_j.top_size || !(red_i.top_graph == red_j.top_graph)) {
        throw TopGraphMismatch("ordered top graphs differ");
    }
    for (std::size_t t = 0; t < red_i.top_size; ++t) {
        if (!leq(d_i.order(), red_i.top_labels[t], red_j.top_labels[t])) {
            throw LabelNotDominated("top label x_" + std::to_string(t + 1) + " is not dominated");
        }
    }
    if (!(residual_witness.d1 == red_i.residual) || !(residual_witness.d2 == red_j.residual)) {
        throw std::invalid_argument("residual witness does not certify the given reductions");
    }
    if (const auto check = verify_witness(residual_witness); !check) {
        throw std::invalid_argument("residual witness rejected: " + check.reason);
    }

    const std::size_t top = red_i.top_size;
    LabelledGraph h_i = reattach(red_i, residual_witness.g1, d_i.order());
    LabelledGraph h_j = reattach(red_j, residual_witness.g2, d_j.order());
    if (!realizes(h_i, d_i) || !realizes(h_j, d_j)) {
        throw ReconstructionDegreeMismatch("reattached graphs do not realize the original sequences");
    }

    std::vector<Vertex> phi(h_i.graph.vertex_count());
    for (Vertex t = 0; t < top; ++t) phi[t] = t;
    for (Vertex v = 0; v < residual_witness.phi.size(); ++v) phi[top + v] = top + residual_witness.phi[v];

    EmbeddingWitness out{d_i, d_j, std::move(h_i), std::move(h_j), std::move(phi)};
    if (const auto check = verify_witness(out); !check) {
        throw std::logic_error("recombined witness rejected: " + check.reason);
    }
    return out;
}

namespace {

struct Candidate {
    std::vector<AlmostBoundedReduction> reductions;
};

Candidate prepare(const LabelledGraphicSequence& d, const GoodPairOptions& options) {
    const std::size_t top = std::min(options.max_degree, d.size());
    Candidate c;
    c.reductions.push_back(reduce_almost_bounded(d, top));
    if (options.realization_retries > 0 && d.size() <= kDefaultEnumerationCap) {
        const Graph primary = realize(d).graph;
        std::size_t extra = 0;
        for_each_realization(d.degrees(), kDefaultEnumerationCap, [&](const Graph& g) {
            if (g == primary) return true;
            c.reductions.push_back(reduce_almost_bounded(d, top, g));
            return ++extra < options.realization_retries;
        });
    }
    return c;
}

bool tops_compatible(const AlmostBoundedReduction& a, const AlmostBoundedReduction& b, const OrderOracle& order) {
    if (a.top_size != b.top_size || !(a.top_graph == b.top_graph)) return false;
    for (std::size_t t = 0; t < a.top_size; ++t) {
        if (!leq(order, a.top_labels[t], b.top_labels[t])) return false;
    }
    return true;
}

}  // namespace

std::optional<GoodPair> good_pair_almost_bounded(std::span<const LabelledGraphicSequence> ds,
                                                 const GoodPairOptions& options) {
    const auto bound = static_cast<long long>(options.max_degree);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto large = std::count_if(ds[i].entries().begin(), ds[i].entries().end(),
                                         [&](const LabelledEntry& e) { return e.degree > bound; });
        if (large > bound) {
            throw PreconditionViolated("sequence " + std::to_string(i) + " has " + std::to_string(large) +
                                       " entries exceeding " + std::to_string(bound));
        }
        if (i > 0) require_same_order(ds[0], ds[i]);
    }

    std::vector<Candidate> candidates;
    candidates.reserve(ds.size());
    for (const auto& d : ds) candidates.push_back(prepare(d, options));

    std::size_t attempts = 0;
    for (std::size_t j = 1; j < ds.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (attempts++ >= options.pair_budget) return std::nullopt;
            const auto& di = ds[i];
            const auto& dj = ds[j];
            if (!may_contain(di, dj)) continue;

            for (const auto& ri : candidates[i].reductions) {
                for (const auto& rj : candidates[j].reductions) {
                    if (!tops_compatible(ri, rj, di.order())) continue;
                    if (!may_contain(ri.residual, rj.residual)) continue;
                    if (auto w = rao_le_padding(ri.residual, rj.residual, options.matching_budget)) {
                        return GoodPair{i, j, recombine(ri, rj, *w, di, dj), "reduction+padding"};
                    }
                    if (rj.residual.size() <= options.exact_cap) {
                        if (auto w = rao_le_exact(ri.residual, rj.residual, options.exact_cap)) {
                            return GoodPair{i, j, recombine(ri, rj, *w, di, dj), "reduction+exact"};
                        }
                    }
                }
            }
            if (!options.direct_fallback) continue;
            if (auto w = rao_le_padding(di, dj, options.matching_budget)) {
                return GoodPair{i, j, std::move(*w), "padding"};
            }
            if (dj.size() <= options.exact_cap) {
                if (auto w = rao_le_exact(di, dj, options.exact_cap)) {
                    return GoodPair{i, j, std::move(*w), "exact"};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace raowqo
