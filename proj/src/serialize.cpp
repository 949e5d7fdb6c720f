#include "raowqo/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "raowqo/errors.hpp"

namespace raowqo {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

[[noreturn]] void bad(const std::string& what, const json& j) {
    throw ParseError(what + ": " + j.dump());
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"", j);
    return j.at(key);
}

std::uint64_t unsigned_of(const json& j) {
    if (!j.is_number_integer() || j.get<long long>() < 0) bad("expected a non-negative integer", j);
    return j.get<std::uint64_t>();
}

int degree_of(const json& j) {
    if (!j.is_number_integer()) bad("expected an integer degree", j);
    const long long v = j.get<long long>();
    if (v < 0 || v > std::numeric_limits<int>::max()) bad("degree out of range", j);
    return static_cast<int>(v);
}

const std::string& tag_of(const json& j) {
    const json& t = field(j, "t");
    if (!t.is_string()) bad("tag must be a string", j);
    return t.get_ref<const std::string&>();
}

const json& array_field(const json& j, const char* key) {
    const json& a = field(j, key);
    if (!a.is_array()) bad(std::string("field \"") + key + "\" must be an array", j);
    return a;
}

}  // namespace

json degree_sequence_to_json(const DegreeSequence& d) {
    return json(std::vector<int>(d.degrees().begin(), d.degrees().end()));
}

DegreeSequence degree_sequence_from_json(const json& j) {
    if (!j.is_array()) bad("degree sequence must be an array", j);
    std::vector<int> degrees;
    for (const auto& x : j) degrees.push_back(degree_of(x));
    return DegreeSequence(std::move(degrees));
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    const auto n = unsigned_of(field(j, "n"));
    if (n > 4096) bad("vertex count too large", j);
    Graph g(n);
    for (const auto& e : array_field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) bad("edge must be a pair", e);
        try {
            g.add_edge(unsigned_of(e[0]), unsigned_of(e[1]));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(std::string("invalid edge: ") + ex.what());
        }
    }
    return g;
}

json label_to_json(const Label& label) {
    return std::visit(
        Overloaded{
            [](const UnitLabel&) { return json{{"t", "unit"}}; },
            [](const NatLabel& l) { return json{{"t", "nat"}, {"v", l.value}}; },
            [](const FinLabel& l) { return json{{"t", "fin"}, {"v", l.value}, {"n", l.modulus}}; },
            [](const TupleLabel& l) {
                json items = json::array();
                for (const auto& x : l.items) items.push_back(label_to_json(x));
                return json{{"t", "tuple"}, {"v", std::move(items)}};
            },
            [](const SubsetLabel& l) {
                json members = json::array();
                for (std::size_t i = 0; i < l.members.size(); ++i) {
                    if (l.members[i]) members.push_back(i);
                }
                return json{{"t", "subset"}, {"v", std::move(members)}, {"n", l.members.size()}};
            },
            [](const SeqLabel& l) {
                json items = json::array();
                for (const auto& x : l.items) items.push_back(label_to_json(x));
                return json{{"t", "seq"}, {"v", std::move(items)}};
            },
        },
        label.value);
}

Label label_from_json(const json& j) {
    const std::string& tag = tag_of(j);
    if (tag == "unit") return Label::unit();
    if (tag == "nat") return Label::nat(unsigned_of(field(j, "v")));
    if (tag == "fin") return Label::fin(unsigned_of(field(j, "v")), unsigned_of(field(j, "n")));
    if (tag == "tuple" || tag == "seq") {
        std::vector<Label> items;
        for (const auto& x : array_field(j, "v")) items.push_back(label_from_json(x));
        return tag == "tuple" ? Label::tuple(std::move(items)) : Label::seq(std::move(items));
    }
    if (tag == "subset") {
        const auto ground = unsigned_of(field(j, "n"));
        if (ground > 4096) bad("subset ground set too large", j);
        std::vector<std::size_t> members;
        for (const auto& x : array_field(j, "v")) members.push_back(unsigned_of(x));
        try {
            return Label::subset(ground, members);
        } catch (const TypeMismatch& ex) {
            throw ParseError(ex.what());
        }
    }
    bad("unknown label tag", j);
}

Label label_from_json(const json& j, const OrderOracle& expected) {
    if (j.is_number_integer()) {
        if (std::holds_alternative<NatLeq>(expected.kind)) return Label::nat(unsigned_of(j));
        if (const auto* fin = std::get_if<FiniteEq>(&expected.kind)) return Label::fin(unsigned_of(j), fin->size);
        bad("bare integer label needs a nat or fin order", j);
    }
    return label_from_json(j);
}

json order_to_json(const OrderOracle& order) {
    return std::visit(
        Overloaded{
            [](const UnitOrder&) { return json{{"t", "unit"}}; },
            [](const NatLeq&) { return json{{"t", "nat"}}; },
            [](const FiniteEq& o) { return json{{"t", "fin"}, {"n", o.size}}; },
            [](const ProductOrder& o) {
                json factors = json::array();
                for (const auto& f : o.factors) factors.push_back(order_to_json(f));
                return json{{"t", "tuple"}, {"v", std::move(factors)}};
            },
            [](const PowersetEq& o) { return json{{"t", "subset"}, {"n", o.ground}}; },
            [](const HigmanSeq& o) { return json{{"t", "seq"}, {"v", order_to_json(*o.base)}}; },
        },
        order.kind);
}

OrderOracle order_from_json(const json& j) {
    const std::string& tag = tag_of(j);
    if (tag == "unit") return OrderOracle::unit();
    if (tag == "nat") return OrderOracle::nat_leq();
    if (tag == "fin") {
        const auto n = unsigned_of(field(j, "n"));
        if (n == 0) bad("[N] needs N >= 1", j);
        return OrderOracle::finite_eq(n);
    }
    if (tag == "tuple") {
        std::vector<OrderOracle> factors;
        for (const auto& x : array_field(j, "v")) factors.push_back(order_from_json(x));
        return OrderOracle::product(std::move(factors));
    }
    if (tag == "subset") {
        const auto n = unsigned_of(field(j, "n"));
        if (n > 4096) bad("subset ground set too large", j);
        return OrderOracle::powerset_eq(n);
    }
    if (tag == "seq") return OrderOracle::higman(order_from_json(field(j, "v")));
    bad("unknown order tag", j);
}

json labelled_sequence_to_json(const LabelledGraphicSequence& d) {
    json entries = json::array();
    for (const auto& e : d.entries()) entries.push_back({{"d", e.degree}, {"label", label_to_json(e.label)}});
    return {{"order", order_to_json(d.order())}, {"entries", std::move(entries)}};
}

LabelledGraphicSequence labelled_sequence_from_json(const json& j) {
    try {
        if (j.is_array()) return LabelledGraphicSequence::unlabelled(degree_sequence_from_json(j));
        OrderOracle order = order_from_json(field(j, "order"));
        std::vector<LabelledEntry> entries;
        for (const auto& e : array_field(j, "entries")) {
            const int degree = degree_of(field(e, "d"));
            if (!e.contains("label") && std::holds_alternative<UnitOrder>(order.kind)) {
                entries.push_back({degree, Label::unit()});
            } else {
                entries.push_back({degree, label_from_json(field(e, "label"), order)});
            }
        }
        return LabelledGraphicSequence(std::move(order), std::move(entries));
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("invalid labelled sequence: ") + ex.what());
    }
}

json labelled_graph_to_json(const LabelledGraph& g) {
    json out = graph_to_json(g.graph);
    json labels = json::array();
    for (const auto& l : g.labels) labels.push_back(label_to_json(l));
    out["labels"] = std::move(labels);
    out["order"] = order_to_json(g.order);
    return out;
}

LabelledGraph labelled_graph_from_json(const json& j) {
    LabelledGraph g{graph_from_json(j), {}, order_from_json(field(j, "order"))};
    for (const auto& l : array_field(j, "labels")) g.labels.push_back(label_from_json(l, g.order));
    return g;
}

json witness_to_json(const EmbeddingWitness& w) {
    return {{"d1", labelled_sequence_to_json(w.d1)}, {"d2", labelled_sequence_to_json(w.d2)},
            {"g1", labelled_graph_to_json(w.g1)},    {"g2", labelled_graph_to_json(w.g2)},
            {"phi", w.phi}};
}

EmbeddingWitness witness_from_json(const json& j) {
    std::vector<Vertex> phi;
    for (const auto& x : array_field(j, "phi")) phi.push_back(unsigned_of(x));
    return {labelled_sequence_from_json(field(j, "d1")), labelled_sequence_from_json(field(j, "d2")),
            labelled_graph_from_json(field(j, "g1")), labelled_graph_from_json(field(j, "g2")), std::move(phi)};
}

std::string to_text(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& ex) {
        throw ParseError(path + ": " + ex.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace raowqo
