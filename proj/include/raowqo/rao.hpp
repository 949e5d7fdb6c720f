#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "raowqo/degseq.hpp"
#include "raowqo/orders.hpp"

namespace raowqo {

inline constexpr std::size_t kDefaultExactCap = 8;
inline constexpr std::size_t kDefaultMatchingBudget = 1000;

struct LabelledEntry {
    int degree = 0;
    Label label;

    friend bool operator==(const LabelledEntry&, const LabelledEntry&) = default;
};

// A graphic sequence whose entries carry labels from a quasi-order. Semantically a
// multiset; entries are kept sorted by (degree descending, label key ascending).
class LabelledGraphicSequence {
public:
    // Throws TypeMismatch for ill-typed labels, NotGraphicError for non-graphic degrees,
    // std::invalid_argument for negative degrees.
    LabelledGraphicSequence(OrderOracle order, std::vector<LabelledEntry> entries);

    static LabelledGraphicSequence unlabelled(const DegreeSequence& degrees);

    const OrderOracle& order() const { return order_; }
    std::span<const LabelledEntry> entries() const { return entries_; }
    const LabelledEntry& operator[](std::size_t i) const { return entries_[i]; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    DegreeSequence degrees() const;
    long long degree_sum() const;

    friend bool operator==(const LabelledGraphicSequence&, const LabelledGraphicSequence&) = default;

private:
    OrderOracle order_;
    std::vector<LabelledEntry> entries_;
};

struct LabelledGraph {
    Graph graph;
    std::vector<Label> labels;
    OrderOracle order;

    friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;
};

// Certifies d1 <= d2: g1 realizes d1, g2 realizes d2, and phi embeds g1 into g2 as an
// induced subgraph with label dominance. Checked by verify_witness without trusting the producer.
struct EmbeddingWitness {
    LabelledGraphicSequence d1;
    LabelledGraphicSequence d2;
    LabelledGraph g1;
    LabelledGraph g2;
    std::vector<Vertex> phi;

    friend bool operator==(const EmbeddingWitness&, const EmbeddingWitness&) = default;
};

enum class WitnessDefect {
    none,
    order_mismatch,
    malformed_graph,
    g1_not_realization,
    g2_not_realization,
    phi_size,
    phi_out_of_range,
    not_injective,
    induced_condition,
    label_not_dominated,
};

struct WitnessCheck {
    WitnessDefect defect = WitnessDefect::none;
    std::string reason;

    bool ok() const { return defect == WitnessDefect::none; }
    explicit operator bool() const { return ok(); }
};

WitnessCheck verify_witness(const EmbeddingWitness& w);

// True iff g realizes d: degrees and labels agree as multisets of (degree, label).
bool realizes(const LabelledGraph& g, const LabelledGraphicSequence& d);

// Havel–Hakimi realization carrying entry i's label on vertex i.
LabelledGraph realize(const LabelledGraphicSequence& d);

// Cheap necessary conditions for d1 <= d2: no more entries and no larger degree sum.
bool may_contain(const LabelledGraphicSequence& d1, const LabelledGraphicSequence& d2);

// Exact decision. Enumerates entry-indexed realizations of d2 and, for each, every vertex
// subset of size |d1|, looking for a perfect matching of d1's entries onto the subset that
// agrees on induced degree and is label-dominated. Realizations of d1 are not enumerated:
// any such induced subgraph is itself a realization of d1.
// Throws OrderMismatch, CapExceeded (|d2| > cap).
std::optional<EmbeddingWitness> rao_le_exact(const LabelledGraphicSequence& d1,
                                             const LabelledGraphicSequence& d2,
                                             std::size_t cap = kDefaultExactCap);

// Sufficient-only padding construction. Matches each entry of d1 to a distinct entry of d2
// with equal degree and dominating label, trying up to `budget` matchings in canonical
// order, until the unmatched entries of d2 form a graphic leftover L. The witness is then
// the disjoint union of a realization of d1 with a realization of L. nullopt means only
// that this construction failed, not that d1 </= d2. Throws OrderMismatch.
std::optional<EmbeddingWitness> rao_le_padding(const LabelledGraphicSequence& d1,
                                               const LabelledGraphicSequence& d2,
                                               std::size_t budget = kDefaultMatchingBudget);

// Splits off the N largest-degree vertices x_1..x_N of a realization. Every other vertex
// keeps its degree into the rest of the graph and is relabelled with
// (original label, subset of {x_1..x_N} it is adjacent to).
struct AlmostBoundedReduction {
    std::size_t top_size = 0;
    Graph top_graph;
    std::vector<Label> top_labels;
    LabelledGraphicSequence residual;
};

// Uses the Havel–Hakimi realization. Throws TooShort if d.size() < top_size.
AlmostBoundedReduction reduce_almost_bounded(const LabelledGraphicSequence& d, std::size_t top_size);

// Same, on a caller-supplied entry-indexed realization (vertex i has degree d[i].degree).
AlmostBoundedReduction reduce_almost_bounded(const LabelledGraphicSequence& d, std::size_t top_size,
                                             const Graph& realization);

// Lifts a residual witness (red_i.residual <= red_j.residual) back to a witness of
// d_i <= d_j by re-attaching the top vertices. Throws TopGraphMismatch, LabelNotDominated,
// OrderMismatch, std::invalid_argument for a residual witness that does not fit, and
// ReconstructionDegreeMismatch if the rebuilt graphs fail to realize d_i / d_j.
EmbeddingWitness recombine(const AlmostBoundedReduction& red_i, const AlmostBoundedReduction& red_j,
                           const EmbeddingWitness& residual_witness, const LabelledGraphicSequence& d_i,
                           const LabelledGraphicSequence& d_j);

struct GoodPairOptions {
    std::size_t max_degree = 1;  // N: at most N entries may exceed N
    std::size_t pair_budget = 100000;
    std::size_t matching_budget = kDefaultMatchingBudget;
    std::size_t exact_cap = kDefaultExactCap;
    // Also try padding / exact on the whole sequences when the reduction route fails.
    bool direct_fallback = true;
    // Extra realizations per sequence (beyond Havel–Hakimi) to reduce, when the sequence
    // is small enough to enumerate. No completeness claim either way.
    std::size_t realization_retries = 0;
};

struct GoodPair {
    std::size_t i = 0;
    std::size_t j = 0;
    EmbeddingWitness witness;
    std::string method;
};

// Scans pairs i < j (j ascending, then i ascending) and returns the first one certified by
// a verified witness. nullopt when the list or the pair budget is exhausted: a finite list
// may be bad, so this is not an error. Throws PreconditionViolated if some sequence has
// more than N entries exceeding N.
std::optional<GoodPair> good_pair_almost_bounded(std::span<const LabelledGraphicSequence> ds,
                                                 const GoodPairOptions& options);

}  // namespace raowqo
