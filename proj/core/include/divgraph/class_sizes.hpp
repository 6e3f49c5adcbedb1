#ifndef DIVGRAPH_CLASS_SIZES_HPP
#define DIVGRAPH_CLASS_SIZES_HPP

#include <optional>

#include "divgraph/cycle_type.hpp"
#include "divgraph/factored_nat.hpp"

namespace divgraph {

// |C_{S_n}(g)| for g of the given cycle type: (prod k_i! * m_i^{k_i}) * t!.
FactoredNat centralizer_order_sym(const CycleType& ct);

// |g^{S_n}| = n! / |C_{S_n}(g)|, computed exponent-wise.
FactoredNat class_size_sym(const CycleType& ct);

// Centralizer order inside A_n. Equals the S_n centralizer when the class
// splits, half of it otherwise. Throws std::invalid_argument for odd types.
FactoredNat centralizer_order_alt(const CycleType& ct);

// A_n class sizes for an even cycle type. When the class splits there are
// two A_n-classes of the same size (half the S_n size); otherwise one class
// of the full S_n size. Throws std::invalid_argument for odd types.
struct AltClassSizes {
    FactoredNat size;   // size of each A_n class of this type
    bool split;         // true: two classes of `size`; false: one
};
AltClassSizes class_sizes_alt(const CycleType& ct);

struct ClassRecord {
    CycleType ct;
    FactoredNat size_sym;
    std::optional<FactoredNat> size_alt; // per-class A_n size, even types only
    bool split;
};
ClassRecord class_record(const CycleType& ct);

} // namespace divgraph

#endif
