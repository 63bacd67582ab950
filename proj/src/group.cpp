#include "skewcov/group.hpp"

#include <numeric>

namespace skewcov {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<uint32_t> orders)
    : cyclic_orders(std::move(orders)) {
    if (cyclic_orders.empty()) cyclic_orders = {1};
    for (uint32_t n : cyclic_orders) {
        if (n == 0) throw ValidationError("group: zero cyclic order");
        n_ *= n;
        exponent_ = (uint32_t)std::lcm<uint64_t>(exponent_, n);
    }
    if (n_ > (1u << 20)) throw ValidationError("group: order too large");
}

std::vector<uint32_t> FiniteAbelianGroup::tuple(Elem g) const {
    std::vector<uint32_t> t(cyclic_orders.size());
    for (size_t i = cyclic_orders.size(); i-- > 0;) {
        t[i] = g % cyclic_orders[i];
        g /= cyclic_orders[i];
    }
    return t;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::from_tuple(const std::vector<uint32_t>& t) const {
    if (t.size() != cyclic_orders.size()) throw ValidationError("group: tuple arity mismatch");
    Elem g = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= cyclic_orders[i]) throw ValidationError("group: tuple entry out of range");
        g = g * cyclic_orders[i] + t[i];
    }
    return g;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::mul(Elem a, Elem b) const {
    auto ta = tuple(a), tb = tuple(b);
    for (size_t i = 0; i < ta.size(); ++i) ta[i] = (ta[i] + tb[i]) % cyclic_orders[i];
    return from_tuple(ta);
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::inv(Elem a) const {
    auto t = tuple(a);
    for (size_t i = 0; i < t.size(); ++i) t[i] = (cyclic_orders[i] - t[i]) % cyclic_orders[i];
    return from_tuple(t);
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::generator(size_t factor) const {
    std::vector<uint32_t> t(cyclic_orders.size(), 0);
    if (cyclic_orders[factor] > 1) t[factor] = 1;
    return from_tuple(t);
}

CharacterTable::CharacterTable(const FieldSpec& F, const FiniteAbelianGroup& G)
    : field(F), group(G) {
    if ((F.p - 1) % G.exponent() != 0)
        throw FieldIncompatible("characters: exponent(G) does not divide p-1");
    if (G.size() % F.p == 0)
        throw FieldIncompatible("characters: p divides |G|");
    std::vector<uint32_t> zeta(G.factors());
    for (size_t i = 0; i < G.factors(); ++i)
        zeta[i] = F.pow(F.primitive_root, (F.p - 1) / G.cyclic_orders[i]);
    values.assign(G.size(), std::vector<uint32_t>(G.size(), 1));
    for (uint32_t chi = 0; chi < G.size(); ++chi) {
        auto tc = G.tuple(chi);
        for (uint32_t g = 0; g < G.size(); ++g) {
            auto tg = G.tuple(g);
            uint32_t v = 1;
            for (size_t i = 0; i < G.factors(); ++i)
                v = F.mul(v, F.pow(zeta[i], (uint64_t)tc[i] * tg[i]));
            values[chi][g] = v;
        }
    }
    // multiplicativity, exhaustively
    for (uint32_t chi = 0; chi < G.size(); ++chi)
        for (uint32_t g = 0; g < G.size(); ++g)
            for (uint32_t h = 0; h < G.size(); ++h)
                if (values[chi][G.mul(g, h)] != F.mul(values[chi][g], values[chi][h]))
                    throw ValidationError("characters: multiplicativity failed");
}

} // namespace skewcov
