// rao_wqo: command-line front end for the Rao containment order on graphic sequences.
//
// Exit codes: 0 affirmative (with verifiable evidence), 1 definitive negative,
// 2 input or usage error, 3 inconclusive.

#include <chrono>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "raowqo/degseq.hpp"
#include "raowqo/errors.hpp"
#include "raowqo/orders.hpp"
#include "raowqo/rao.hpp"
#include "raowqo/serialize.hpp"

namespace {

using namespace raowqo;

enum Exit : int { kYes = 0, kNo = 1, kError = 2, kInconclusive = 3 };

struct Caps {
    std::size_t exact = kDefaultExactCap;
    std::size_t enumeration = kDefaultEnumerationCap;
};

Caps default_caps() {
    Caps caps;
    if (const char* env = std::getenv("RAO_WQO_CAP"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
            caps.exact = caps.enumeration = v;
        } catch (const std::exception&) {
            throw ParseError(std::string("RAO_WQO_CAP is not a non-negative integer: ") + env);
        }
    }
    return caps;
}

void warn_if_large(std::size_t cap, std::size_t default_cap, const char* what) {
    if (cap > default_cap) {
        std::cerr << "warning: " << what << " cap " << cap << " is above the default " << default_cap
                  << "; exhaustive search may be slow\n";
    }
}

class Stopwatch {
public:
    ~Stopwatch() {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
        std::cerr << "elapsed: " << ms << " ms\n";
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_witness(const EmbeddingWitness& w, const std::string& path) {
    if (const auto check = verify_witness(w); !check) {
        throw std::logic_error("refusing to emit an invalid witness: " + check.reason);
    }
    if (!path.empty()) write_text_file(path, to_text(witness_to_json(w)));
}

int cmd_graphic(const std::string& file) {
    const DegreeSequence d = degree_sequence_from_json(read_json_file(file));
    const bool graphic = is_graphic(d);
    std::cout << "graphic: " << (graphic ? "yes" : "no") << '\n';
    std::cout << "length bound alone decides: " << (length_bound_sufficient(d) ? "yes" : "no") << '\n';
    return graphic ? kYes : kNo;
}

int cmd_realize(const std::string& file, bool all, std::optional<std::size_t> cap) {
    const DegreeSequence d = degree_sequence_from_json(read_json_file(file));
    if (!all) {
        const auto g = havel_hakimi(d);
        if (!g) {
            std::cout << "not graphic\n";
            return kNo;
        }
        std::cout << to_text(graph_to_json(*g));
        return kYes;
    }
    const std::size_t limit = cap.value_or(default_caps().enumeration);
    warn_if_large(limit, kDefaultEnumerationCap, "enumeration");
    if (d.size() > limit) throw CapExceeded(d.size(), limit);
    if (!is_graphic(d)) {
        std::cout << "not graphic\n";
        return kNo;
    }
    json graphs = json::array();
    for (const auto& g : enumerate_realizations(d, limit)) graphs.push_back(graph_to_json(g));
    std::cout << to_text(graphs);
    return kYes;
}

int cmd_rao_le(const std::string& file1, const std::string& file2, const std::string& method,
               const std::string& witness_path, std::optional<std::size_t> cap, std::size_t budget) {
    const auto d1 = labelled_sequence_from_json(read_json_file(file1));
    const auto d2 = labelled_sequence_from_json(read_json_file(file2));
    if (!(d1.order() == d2.order())) throw OrderMismatch("sequences use different label orders");
    const std::size_t limit = cap.value_or(default_caps().exact);
    warn_if_large(limit, kDefaultExactCap, "exact");

    auto report_yes = [&](const EmbeddingWitness& w, const char* how) {
        emit_witness(w, witness_path);
        std::cout << "yes method=" << how << '\n';
        return kYes;
    };

    if (method == "padding" || method == "auto") {
        if (auto w = rao_le_padding(d1, d2, budget)) return report_yes(*w, "padding");
        if (method == "padding" || d2.size() > limit) {
            std::cout << "inconclusive method=padding\n";
            return kInconclusive;
        }
    }
    if (auto w = rao_le_exact(d1, d2, limit)) return report_yes(*w, "exact");
    std::cout << "no method=exact\n";
    return kNo;
}

int cmd_good_pair(const std::string& file, std::size_t max_degree, std::size_t budget, std::size_t retries,
                  const std::string& witness_path, std::optional<std::size_t> cap) {
    const json j = read_json_file(file);
    if (!j.is_array()) throw ParseError("good-pair input must be an array of sequences");
    std::vector<LabelledGraphicSequence> ds;
    for (const auto& x : j) ds.push_back(labelled_sequence_from_json(x));
    for (std::size_t i = 1; i < ds.size(); ++i) {
        if (!(ds[i].order() == ds[0].order())) throw OrderMismatch("sequences use different label orders");
    }

    GoodPairOptions options;
    options.max_degree = max_degree;
    options.pair_budget = budget;
    options.realization_retries = retries;
    options.exact_cap = cap.value_or(default_caps().exact);
    warn_if_large(options.exact_cap, kDefaultExactCap, "exact");

    const auto found = good_pair_almost_bounded(ds, options);
    if (!found) {
        std::cout << "none\n";
        return kNo;
    }
    emit_witness(found->witness, witness_path);
    std::cout << "pair " << found->i << ' ' << found->j << " method=" << found->method << '\n';
    return kYes;
}

int cmd_verify_witness(const std::string& file) {
    const EmbeddingWitness w = witness_from_json(read_json_file(file));
    const auto check = verify_witness(w);
    if (check) {
        std::cout << "ok\n";
        return kYes;
    }
    std::cout << "invalid: " << check.reason << '\n';
    return kNo;
}

OrderOracle parse_order_flag(const std::string& text) {
    if (!text.empty() && text.front() == '{') {
        try {
            return order_from_json(json::parse(text));
        } catch (const json::parse_error& ex) {
            throw ParseError(std::string("bad --order: ") + ex.what());
        }
    }
    if (text == "unit") return OrderOracle::unit();
    if (text == "nat") return OrderOracle::nat_leq();
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        std::size_t n = 0;
        try {
            std::size_t used = 0;
            n = std::stoul(text.substr(colon + 1), &used);
            if (used != text.size() - colon - 1) throw std::invalid_argument(text);
        } catch (const std::exception&) {
            throw ParseError("bad --order: " + text);
        }
        if (head == "fin" && n >= 1) return OrderOracle::finite_eq(n);
        if (head == "subset") return OrderOracle::powerset_eq(n);
    }
    throw ParseError("bad --order: " + text + " (expected unit, nat, fin:N, subset:N or a JSON descriptor)");
}

std::vector<Label> read_label_list(const std::string& file, const OrderOracle& order) {
    const json j = read_json_file(file);
    if (!j.is_array()) throw ParseError(file + ": expected an array of labels");
    std::vector<Label> out;
    for (const auto& x : j) out.push_back(label_from_json(x, order));
    return out;
}

int cmd_higman_le(const std::string& file_a, const std::string& file_b, const std::string& order_text) {
    const OrderOracle order = parse_order_flag(order_text);
    const auto a = read_label_list(file_a, order);
    const auto b = read_label_list(file_b, order);
    const auto match = higman_le(a, b, order);
    if (!match) {
        std::cout << "no embedding\n";
        return kNo;
    }
    std::cout << "embeds:";
    for (std::size_t i : *match) std::cout << ' ' << i;
    std::cout << '\n';
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rao containment order on (labelled) graphic sequences"};
    app.require_subcommand(1);

    int result = kError;

    std::string file, file2, witness_path, method = "auto", order_text = "nat";
    bool all = false;
    std::optional<std::size_t> cap;
    std::size_t budget = kDefaultMatchingBudget;
    std::size_t pair_budget = 100000;
    std::size_t max_degree = 0;
    std::size_t retries = 0;

    auto* graphic = app.add_subcommand("graphic", "Decide whether a degree sequence is graphic");
    graphic->add_option("file", file, "Degree sequence JSON")->required();
    graphic->callback([&] { result = cmd_graphic(file); });

    auto* realize_cmd = app.add_subcommand("realize", "Realize a degree sequence as a graph");
    realize_cmd->add_option("file", file, "Degree sequence JSON")->required();
    realize_cmd->add_flag("--all", all, "Enumerate every entry-indexed realization");
    realize_cmd->add_option("--cap", cap, "Maximum length for --all");
    realize_cmd->callback([&] { result = cmd_realize(file, all, cap); });

    auto* rao_le = app.add_subcommand("rao-le", "Decide D1 <= D2 in the Rao order");
    rao_le->add_option("file1", file, "Labelled sequence D1")->required();
    rao_le->add_option("file2", file2, "Labelled sequence D2")->required();
    rao_le->add_option("--method", method, "exact, padding or auto")
        ->check(CLI::IsMember({"exact", "padding", "auto"}));
    rao_le->add_option("--witness", witness_path, "Write the witness here");
    rao_le->add_option("--cap", cap, "Maximum length of D2 for exact search");
    rao_le->add_option("--budget", budget, "Matchings tried by the padding construction");
    rao_le->callback([&] { result = cmd_rao_le(file, file2, method, witness_path, cap, budget); });

    auto* good_pair = app.add_subcommand("good-pair", "Search a list of sequences for i < j with D_i <= D_j");
    good_pair->add_option("file", file, "JSON array of labelled sequences")->required();
    good_pair->add_option("--max-degree", max_degree, "N: at most N entries may exceed N")->required();
    good_pair->add_option("--budget", pair_budget, "Maximum number of pairs examined");
    good_pair->add_option("--retries", retries, "Alternative realizations reduced per short sequence");
    good_pair->add_option("--witness", witness_path, "Write the witness here");
    good_pair->add_option("--cap", cap, "Maximum length for exact search");
    good_pair->callback(
        [&] { result = cmd_good_pair(file, max_degree, pair_budget, retries, witness_path, cap); });

    auto* verify = app.add_subcommand("verify-witness", "Re-check an embedding witness");
    verify->add_option("file", file, "Witness JSON")->required();
    verify->callback([&] { result = cmd_verify_witness(file); });

    auto* higman = app.add_subcommand("higman-le", "Decide Higman embedding of label list A into B");
    higman->add_option("fileA", file, "Label list A")->required();
    higman->add_option("fileB", file2, "Label list B")->required();
    higman->add_option("--order", order_text, "unit, nat, fin:N, subset:N or a JSON descriptor");
    higman->callback([&] { result = cmd_higman_le(file, file2, order_text); });

    Stopwatch watch;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return result;
}
