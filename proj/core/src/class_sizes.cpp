#include "divgraph/class_sizes.hpp"

#include <stdexcept>

#include "divgraph/errors.hpp"

namespace divgraph {

FactoredNat centralizer_order_sym(const CycleType& ct) {
    FactoredNat order = FactoredNat::factorial(ct.fixed_points());
    for (const auto& p : ct.parts()) {
        order *= FactoredNat::factorial(p.count);
        order *= FactoredNat::of(p.length).pow(p.count);
    }
    return order;
}

FactoredNat class_size_sym(const CycleType& ct) {
    return FactoredNat::factorial(ct.degree()).div_exact(centralizer_order_sym(ct));
}

FactoredNat centralizer_order_alt(const CycleType& ct) {
    FactoredNat sym = centralizer_order_sym(ct);
    if (ct.degree() < 2 || ct.splits_in_alternating())
        return sym; // A_1 = S_1
    return sym.halved();
}

AltClassSizes class_sizes_alt(const CycleType& ct) {
    FactoredNat sym = class_size_sym(ct);
    if (ct.splits_in_alternating()) {
        // A splitting class always has even S_n size; halved() traps the
        // impossible odd case as an internal error.
        return {sym.halved(), true};
    }
    return {sym, false};
}

ClassRecord class_record(const CycleType& ct) {
    ClassRecord rec{ct, class_size_sym(ct), std::nullopt, false};
    if (ct.parity() == Parity::even) {
        AltClassSizes alt = class_sizes_alt(ct);
        rec.size_alt = alt.size;
        rec.split = alt.split;
    }
    return rec;
}

} // namespace divgraph
