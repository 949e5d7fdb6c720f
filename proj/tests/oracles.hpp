#pragma once

// Brute-force reference implementations used only by tests. None of these share code paths
// with the library's search procedures: they enumerate every graph on n vertices as a bitmask
// over vertex pairs and every injection / subsequence directly.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "raowqo/degseq.hpp"
#include "raowqo/orders.hpp"
#include "raowqo/rao.hpp"

namespace oracle {

using raowqo::Graph;
using raowqo::Label;
using raowqo::LabelledGraph;
using raowqo::LabelledGraphicSequence;
using raowqo::OrderOracle;

Graph graph_from_mask(std::size_t n, std::uint64_t mask);

// Existence of a realization by scanning all 2^(n choose 2) graphs (n <= 7). Order of the
// input does not matter.
bool brute_force_graphic(std::span<const int> degrees);

// Every graph on 0..n-1 with deg(i) == degrees[i] (n <= 7), in mask order.
std::vector<Graph> brute_force_realizations(std::span<const int> degrees);

// Tries every strictly increasing index tuple of b.
bool exhaustive_higman(std::span<const Label> a, std::span<const Label> b, const OrderOracle& base);

// Is `small` an induced, label-dominated subgraph of `big`? Tries all injections.
bool induced_contains(const LabelledGraph& small, const LabelledGraph& big);

// Decides d1 <= d2 from the definition: enumerates labelled realizations of BOTH sequences
// and tests every pair for induced containment.
bool double_brute_rao_le(const LabelledGraphicSequence& d1, const LabelledGraphicSequence& d2);

// Random graphic degree sequence with the given length and maximum entry (rejection sampling).
raowqo::DegreeSequence random_graphic(std::mt19937_64& rng, std::size_t length, int max_degree);

}  // namespace oracle
