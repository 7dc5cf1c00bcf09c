#pragma once

#include <cstdint>
#include <vector>

#include "cmdeg/order.hpp"

// Exact arithmetic in O/NO and the brute-force orbit oracle. Elements are
// written u + v*omega with omega = (delta + sqrt(delta))/2, whose minimal
// polynomial is x^2 - delta*x + (delta^2 - delta)/4. The unit group
// C_N(O) = (O/NO)^x acts coordinatewise on pairs; this module enumerates the
// orbits exhaustively and is the ground truth the closed forms are tested
// against.

namespace cmdeg {

struct RingElement {
    std::int64_t u = 0;
    std::int64_t v = 0;
    friend bool operator==(const RingElement&, const RingElement&) = default;
};

// Arithmetic context for O/NO.
class ModRing {
public:
    ModRing(const Order& order, std::int64_t n);

    std::int64_t n() const { return n_; }
    std::int64_t size() const { return n_ * n_; }

    RingElement add(RingElement a, RingElement b) const;
    RingElement neg(RingElement a) const;
    RingElement mul(RingElement a, RingElement b) const;
    RingElement one() const { return {n_ == 1 ? 0 : 1, 0}; }

    // norm(u + v*omega) = u^2 + delta*u*v + v^2*(delta^2 - delta)/4 mod n.
    std::int64_t norm(RingElement a) const;
    bool is_unit(RingElement a) const;

    // Additive order of a in (Z/n)^2: n / gcd(n, u, v).
    std::int64_t additive_order(RingElement a) const;

    std::int64_t index_of(RingElement a) const { return a.u * n_ + a.v; }
    RingElement element_at(std::int64_t idx) const { return {idx / n_, idx % n_}; }

private:
    std::int64_t n_;
    std::int64_t delta_mod_;  // delta mod n
    std::int64_t e_mod_;      // (delta^2 - delta)/4 mod n
};

struct MNPair {
    RingElement p;
    RingElement q;
};

struct OrbitReport {
    std::vector<std::int64_t> orbit_sizes;          // ascending
    std::vector<std::int64_t> reduced_orbit_sizes;  // ascending
    std::int64_t min_size = 0;
    std::int64_t min_reduced_size = 0;
    std::int64_t pair_count = 0;
};

// #C_N(O) = N^2 * prod_{p|N} (1 - (delta/p)/p)(1 - 1/p); closed form.
std::int64_t cartan_order(const Order& order, std::int64_t n,
                          std::int64_t max_n = limits::max_n_closed);

// Exhaustive scan of O/NO for elements of unit norm.
std::vector<RingElement> enumerate_units(const Order& order, std::int64_t n,
                                         std::int64_t max_n = limits::max_n_oracle);

// Image of the unit group O^x in (O/NO)^x: generated by -1 for delta < -4 and
// by omega + 2 for delta in {-3, -4} (the extra torsion unit). Injective for
// N >= 3; kernel {+-1} at N = 2.
std::vector<RingElement> torsion_unit_image(const Order& order, std::int64_t n,
                                            std::int64_t max_n = limits::max_n_oracle);

// Partitions all (M,N)-pairs — (P,Q) with ord P = M, ord Q = N and
// <P,Q> of cardinality M*N — into C_N(O)-orbits, plus the reduced variant
// (pairs identified under torsion_unit_image). N = 1 yields the single empty
// pair in one orbit of size 1.
OrbitReport pair_orbits(const Order& order, std::int64_t m, std::int64_t n,
                        std::int64_t max_n = limits::max_n_oracle);

// (least orbit size, least reduced orbit size) from pair_orbits.
struct MinOrbit {
    std::int64_t t_tilde;
    std::int64_t t;
};
MinOrbit min_orbit(const Order& order, std::int64_t m, std::int64_t n,
                   std::int64_t max_n = limits::max_n_oracle);

}  // namespace cmdeg
