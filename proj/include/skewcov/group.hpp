#pragma once

// Finite abelian groups as products of cyclic factors, and their characters
// over GF(p) realized through a fixed primitive (p-1)-th root of unity.

#include <vector>

#include "skewcov/field.hpp"

namespace skewcov {

struct FiniteAbelianGroup {
    std::vector<uint32_t> cyclic_orders;

    explicit FiniteAbelianGroup(std::vector<uint32_t> orders);

    size_t size() const { return n_; }
    uint32_t exponent() const { return exponent_; }
    size_t factors() const { return cyclic_orders.size(); }

    // elements are indices into the lexicographic enumeration of tuples
    using Elem = uint32_t;
    std::vector<uint32_t> tuple(Elem g) const;
    Elem from_tuple(const std::vector<uint32_t>& t) const;
    Elem id() const { return 0; }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem generator(size_t factor) const;   // tuple with 1 in one slot

    bool operator==(const FiniteAbelianGroup& o) const { return cyclic_orders == o.cyclic_orders; }

  private:
    size_t n_ = 1;
    uint32_t exponent_ = 1;
};

// chi[t] is a character; characters are indexed like elements (Ghat ~ G).
// chi_t(g) = prod_i zeta_i^(t_i g_i) with zeta_i = primitive_root^((p-1)/n_i).
struct CharacterTable {
    FieldSpec field;
    FiniteAbelianGroup group;
    std::vector<std::vector<uint32_t>> values;   // values[t][g]

    CharacterTable(const FieldSpec& F, const FiniteAbelianGroup& G);

    uint32_t value(uint32_t chi, uint32_t g) const { return values[chi][g]; }
    size_t count() const { return values.size(); }
};

} // namespace skewcov
