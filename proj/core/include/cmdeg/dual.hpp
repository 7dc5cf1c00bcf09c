#pragma once

#include <cstdint>

#include "cmdeg/order.hpp"

// Structure of the canonical dual isogeny on finite torsion modules of a
// CM curve, reduced to arithmetic on invariant-factor exponents: for a
// fixed prime ell, the pair (e1, e2) with e1 <= e2 stands for the group
// Z/ell^e1 x Z/ell^e2. The three cases follow how ell sits in K; c is
// ord_ell of the source order's conductor (the kernel of the canonical
// isogeny has degree ell^c on this component).

namespace cmdeg {

struct AbelianPair {
    std::int64_t inv1 = 0;  // smaller exponent
    std::int64_t inv2 = 0;  // larger exponent = exponent of the group

    std::int64_t order_exponent() const { return inv1 + inv2; }
    std::int64_t exponent() const { return inv2; }
    friend bool operator==(const AbelianPair&, const AbelianPair&) = default;
};

enum class TorsionCase { Split, Ramified, Inert };

// One torsion module E'[...]: Split(a, b) = the p1^a p2^b component with
// a <= b, Ramified(d) = the p^d component, Inert(b) = full ell^b torsion.
struct TorsionModuleSpec {
    TorsionCase kind = TorsionCase::Inert;
    std::int64_t ell = 2;  // prime
    std::int64_t c = 0;    // ord_ell(f) of the source order
    std::int64_t a = 0;    // Split only
    std::int64_t b = 0;    // Split / Inert
    std::int64_t d = 0;    // Ramified only

    static TorsionModuleSpec split(std::int64_t ell, std::int64_t c,
                                   std::int64_t a, std::int64_t b);
    static TorsionModuleSpec ramified(std::int64_t ell, std::int64_t c,
                                      std::int64_t d);
    static TorsionModuleSpec inert(std::int64_t ell, std::int64_t c,
                                   std::int64_t b);
};

// Invariant factors of the module itself:
// Split(a,b) -> (a,b); Ramified(d) -> (floor(d/2), ceil(d/2)); Inert(b) -> (b,b).
AbelianPair module_structure(const TorsionModuleSpec& spec);

// Exponent of the cyclic group (kernel of the dual) intersected with the
// module: Split -> min(a,c); Ramified -> min(c, floor(d/2)); Inert -> min(b,c).
std::int64_t kernel_intersection(const TorsionModuleSpec& spec);

// Invariant factors of the image of the module under the dual isogeny:
// the smaller exponent drops by c (clamped at 0), the larger is preserved.
AbelianPair dual_image(const TorsionModuleSpec& spec);

}  // namespace cmdeg
