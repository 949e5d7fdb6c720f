#include "raowqo/orders.hpp"

#include <string>

#include "raowqo/errors.hpp"
#include "raowqo/serialize.hpp"

namespace raowqo {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

bool items_equal(const std::vector<Label>& a, const std::vector<Label>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == b[i])) return false;
    }
    return true;
}

[[noreturn]] void mismatch(const OrderOracle& order, const Label& label) {
    throw TypeMismatch("label " + label_key(label) + " does not fit order " + order_key(order));
}

}  // namespace

Label Label::subset(std::size_t ground, std::span<const std::size_t> members) {
    SubsetLabel s{std::vector<bool>(ground, false)};
    for (std::size_t m : members) {
        if (m >= ground) throw TypeMismatch("subset member out of ground set");
        s.members[m] = true;
    }
    return {std::move(s)};
}

bool operator==(const Label& a, const Label& b) {
    if (a.value.index() != b.value.index()) return false;
    return std::visit(
        Overloaded{
            [](const UnitLabel&, const UnitLabel&) { return true; },
            [](const NatLabel& x, const NatLabel& y) { return x.value == y.value; },
            [](const FinLabel& x, const FinLabel& y) {
                return x.value == y.value && x.modulus == y.modulus;
            },
            [](const TupleLabel& x, const TupleLabel& y) { return items_equal(x.items, y.items); },
            [](const SubsetLabel& x, const SubsetLabel& y) { return x.members == y.members; },
            [](const SeqLabel& x, const SeqLabel& y) { return items_equal(x.items, y.items); },
            [](const auto&, const auto&) { return false; },
        },
        a.value, b.value);
}

bool operator==(const OrderOracle& a, const OrderOracle& b) {
    if (a.kind.index() != b.kind.index()) return false;
    return std::visit(
        Overloaded{
            [](const UnitOrder&, const UnitOrder&) { return true; },
            [](const NatLeq&, const NatLeq&) { return true; },
            [](const FiniteEq& x, const FiniteEq& y) { return x.size == y.size; },
            [](const ProductOrder& x, const ProductOrder& y) { return x.factors == y.factors; },
            [](const PowersetEq& x, const PowersetEq& y) { return x.ground == y.ground; },
            [](const HigmanSeq& x, const HigmanSeq& y) { return *x.base == *y.base; },
            [](const auto&, const auto&) { return false; },
        },
        a.kind, b.kind);
}

bool is_well_typed(const OrderOracle& order, const Label& label) {
    return std::visit(
        Overloaded{
            [&](const UnitOrder&) { return std::holds_alternative<UnitLabel>(label.value); },
            [&](const NatLeq&) { return std::holds_alternative<NatLabel>(label.value); },
            [&](const FiniteEq& o) {
                const auto* f = std::get_if<FinLabel>(&label.value);
                return f != nullptr && f->modulus == o.size && f->value >= 1 && f->value <= o.size;
            },
            [&](const ProductOrder& o) {
                const auto* t = std::get_if<TupleLabel>(&label.value);
                if (t == nullptr || t->items.size() != o.factors.size()) return false;
                for (std::size_t i = 0; i < o.factors.size(); ++i) {
                    if (!is_well_typed(o.factors[i], t->items[i])) return false;
                }
                return true;
            },
            [&](const PowersetEq& o) {
                const auto* s = std::get_if<SubsetLabel>(&label.value);
                return s != nullptr && s->members.size() == o.ground;
            },
            [&](const HigmanSeq& o) {
                const auto* s = std::get_if<SeqLabel>(&label.value);
                if (s == nullptr) return false;
                for (const auto& item : s->items) {
                    if (!is_well_typed(*o.base, item)) return false;
                }
                return true;
            },
        },
        order.kind);
}

void check_label(const OrderOracle& order, const Label& label) {
    if (!is_well_typed(order, label)) mismatch(order, label);
}

bool leq(const OrderOracle& order, const Label& a, const Label& b) {
    check_label(order, a);
    check_label(order, b);
    return std::visit(
        Overloaded{
            [](const UnitOrder&) { return true; },
            [&](const NatLeq&) {
                return std::get<NatLabel>(a.value).value <= std::get<NatLabel>(b.value).value;
            },
            [&](const FiniteEq&) { return a == b; },
            [&](const ProductOrder& o) {
                const auto& x = std::get<TupleLabel>(a.value).items;
                const auto& y = std::get<TupleLabel>(b.value).items;
                for (std::size_t i = 0; i < o.factors.size(); ++i) {
                    if (!leq(o.factors[i], x[i], y[i])) return false;
                }
                return true;
            },
            [&](const PowersetEq&) { return a == b; },
            [&](const HigmanSeq& o) {
                const auto& x = std::get<SeqLabel>(a.value).items;
                const auto& y = std::get<SeqLabel>(b.value).items;
                return higman_le(x, y, *o.base).has_value();
            },
        },
        order.kind);
}

std::string label_key(const Label& label) { return label_to_json(label).dump(); }

std::string order_key(const OrderOracle& order) { return order_to_json(order).dump(); }

std::optional<std::vector<std::size_t>> higman_le(std::span<const Label> a, std::span<const Label> b,
                                                  const OrderOracle& base) {
    for (const auto& x : a) check_label(base, x);
    for (const auto& y : b) check_label(base, y);
    std::vector<std::size_t> indices;
    indices.reserve(a.size());
    std::size_t next = 0;
    for (std::size_t pos = 0; pos < b.size() && next < a.size(); ++pos) {
        if (leq(base, a[next], b[pos])) {
            indices.push_back(pos);
            ++next;
        }
    }
    if (next < a.size()) return std::nullopt;
    return indices;
}

}  // namespace raowqo
