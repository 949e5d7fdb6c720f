#pragma once

// JSON wire formats. Objects use sorted keys and graphs list edges as [u, v] with u < v in
// lexicographic order, so equal values always serialize to identical bytes.
//
//   DegreeSequence            [3, 2, 1]
//   Graph                     {"edges": [[0, 1]], "n": 2}
//   Label                     {"t": "unit"} | {"t": "nat", "v": k} | {"t": "fin", "v": k, "n": N}
//                             | {"t": "tuple", "v": [...]} | {"t": "subset", "v": [i...], "n": N}
//                             | {"t": "seq", "v": [...]}
//   OrderOracle               {"t": "unit"} | {"t": "nat"} | {"t": "fin", "n": N}
//                             | {"t": "tuple", "v": [...]} | {"t": "subset", "n": N}
//                             | {"t": "seq", "v": <base>}
//   LabelledGraphicSequence   {"entries": [{"d": k, "label": <Label>}...], "order": <Order>}
//   LabelledGraph             {"edges": ..., "labels": [...], "n": N, "order": <Order>}
//   EmbeddingWitness          {"d1": ..., "d2": ..., "g1": ..., "g2": ..., "phi": [...]}
//
// Every *_from_json throws ParseError on malformed input.

#include <string>
#include <vector>

#include <json.hpp>

#include "raowqo/degseq.hpp"
#include "raowqo/orders.hpp"
#include "raowqo/rao.hpp"

namespace raowqo {

using json = nlohmann::json;

json degree_sequence_to_json(const DegreeSequence& d);
DegreeSequence degree_sequence_from_json(const json& j);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json label_to_json(const Label& label);
Label label_from_json(const json& j);
// Also accepts a bare integer as shorthand for a nat or fin label, per the expected order.
Label label_from_json(const json& j, const OrderOracle& expected);

json order_to_json(const OrderOracle& order);
OrderOracle order_from_json(const json& j);

json labelled_sequence_to_json(const LabelledGraphicSequence& d);
// Also accepts a plain integer array as an unlabelled sequence. Entries may omit "label"
// under the unit order.
LabelledGraphicSequence labelled_sequence_from_json(const json& j);

json labelled_graph_to_json(const LabelledGraph& g);
LabelledGraph labelled_graph_from_json(const json& j);

json witness_to_json(const EmbeddingWitness& w);
EmbeddingWitness witness_from_json(const json& j);

// Canonical text form written to files: two-space indent, trailing newline.
std::string to_text(const json& j);

// Throws ParseError for unreadable files or invalid JSON.
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace raowqo
