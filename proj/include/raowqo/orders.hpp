#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace raowqo {

// Labels form a closed union so that every comparison is decidable and serializable.
struct Label;

struct UnitLabel {};
struct NatLabel {
    std::uint64_t value = 0;
};
// Element of [N] = {1, ..., N}.
struct FinLabel {
    std::uint64_t value = 1;
    std::uint64_t modulus = 1;
};
struct TupleLabel {
    std::vector<Label> items;
};
// Subset of a ground set {0, ..., ground - 1}.
struct SubsetLabel {
    std::vector<bool> members;
};
struct SeqLabel {
    std::vector<Label> items;
};

struct Label {
    std::variant<UnitLabel, NatLabel, FinLabel, TupleLabel, SubsetLabel, SeqLabel> value;

    static Label unit() { return {UnitLabel{}}; }
    static Label nat(std::uint64_t v) { return {NatLabel{v}}; }
    static Label fin(std::uint64_t v, std::uint64_t n) { return {FinLabel{v, n}}; }
    static Label tuple(std::vector<Label> items) { return {TupleLabel{std::move(items)}}; }
    static Label subset(std::size_t ground, std::span<const std::size_t> members);
    static Label seq(std::vector<Label> items) { return {SeqLabel{std::move(items)}}; }

    friend bool operator==(const Label& a, const Label& b);
};

struct OrderOracle;

struct UnitOrder {};
struct NatLeq {};
struct FiniteEq {
    std::uint64_t size = 1;
};
struct ProductOrder {
    std::vector<OrderOracle> factors;
};
struct PowersetEq {
    std::size_t ground = 0;
};
struct HigmanSeq {
    std::shared_ptr<const OrderOracle> base;
};

// Descriptor of a decidable quasi-order over labels.
struct OrderOracle {
    std::variant<UnitOrder, NatLeq, FiniteEq, ProductOrder, PowersetEq, HigmanSeq> kind;

    static OrderOracle unit() { return {UnitOrder{}}; }
    static OrderOracle nat_leq() { return {NatLeq{}}; }
    static OrderOracle finite_eq(std::uint64_t n) { return {FiniteEq{n}}; }
    static OrderOracle product(std::vector<OrderOracle> factors) {
        return {ProductOrder{std::move(factors)}};
    }
    static OrderOracle powerset_eq(std::size_t ground) { return {PowersetEq{ground}}; }
    static OrderOracle higman(OrderOracle base) {
        return {HigmanSeq{std::make_shared<const OrderOracle>(std::move(base))}};
    }

    friend bool operator==(const OrderOracle& a, const OrderOracle& b);
};

// Throws TypeMismatch unless the label has the shape the order expects.
void check_label(const OrderOracle& order, const Label& label);
bool is_well_typed(const OrderOracle& order, const Label& label);

// Decides a <= b. Throws TypeMismatch on ill-typed labels.
bool leq(const OrderOracle& order, const Label& a, const Label& b);

// Compact canonical serialization; also the tie-break key for canonical entry order.
std::string label_key(const Label& label);
std::string order_key(const OrderOracle& order);

// Higman embedding of a into b: strictly increasing indices i_0 < ... < i_{n-1} into b
// with a[k] <= b[i_k], chosen greedily leftmost. nullopt when no embedding exists.
std::optional<std::vector<std::size_t>> higman_le(std::span<const Label> a, std::span<const Label> b,
                                                  const OrderOracle& base);

// Earliest good pair: smallest j, then smallest i < j, with leq(items[i], items[j]).
template <class T, class Leq>
std::optional<std::pair<std::size_t, std::size_t>> find_good_pair(std::span<const T> items, Leq&& leq) {
    for (std::size_t j = 1; j < items.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (leq(items[i], items[j])) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

inline std::optional<std::pair<std::size_t, std::size_t>> find_good_pair(std::span<const Label> items,
                                                                         const OrderOracle& order) {
    return find_good_pair(items, [&](const Label& a, const Label& b) { return leq(order, a, b); });
}

}  // namespace raowqo
