#pragma once

#include <cstdint>

#include "cmdeg/order.hpp"

// Existence of rational cyclic N-isogenies on O-CM elliptic curves over the
// two base fields of interest, plus the per-prime depth invariants (m, M):
// m is the largest b admitting a Q(f)-rational cyclic l^b-isogeny and M the
// supremum of b admitting a K(f)-rational one (possibly unbounded).

namespace cmdeg {

// Finite bound or no bound at all. Never a sentinel integer: the split cases
// genuinely have no finite supremum.
struct DepthBound {
    bool unbounded = false;
    std::int64_t value = 0;  // meaningful only when !unbounded

    static DepthBound finite(std::int64_t v) { return DepthBound{false, v}; }
    static DepthBound infinite() { return DepthBound{true, 0}; }

    bool at_least(std::int64_t b) const { return unbounded || value >= b; }
    friend bool operator==(const DepthBound&, const DepthBound&) = default;
};

struct IsogenyDepth {
    std::int64_t m = 0;  // Q(f)-side maximum
    DepthBound m_sup;    // K(f)-side supremum; unbounded only in split cases

    friend bool operator==(const IsogenyDepth&, const IsogenyDepth&) = default;
};

// Q(f)-rational cyclic N-isogeny existence on some O-CM curve.
// delta = -4: N in {1,2,4}. delta = -3: N in {1,2,3,6,9}. delta < -4, keyed
// on the 2-adic shape of (f, delta_k):
//   (2 | f and 2 ramified in K) or 4 | f  ->  N | delta/4
//   f = 2 mod 4 with 2 unramified, or f odd with (delta_k/2) != -1
//                                         ->  N or N/2 is an odd divisor of delta
//   f odd and (delta_k/2) = -1            ->  N | delta
bool qf_cyclic_isogeny_exists(const Order& order, std::int64_t n);

// Existence of a primitive, proper, real O-ideal of index N. Multiplicative
// over the prime-power parts of N; per part (v = ord_2(delta)):
//   l odd:   a = ord_l(delta)
//   l = 2:   v >= 4 -> a = 2 or a = v - 2
//            v = 3  -> a = 1
//            v = 2  -> a = 1, and only when delta/4 = 3 mod 4 (when
//                      delta/4 = 1 mod 4 the lone index-2 candidate is an
//                      ideal of the maximal order, hence not proper)
//            v = 0  -> no even-index part at all
bool real_ideal_exists(const Order& order, std::int64_t n);

// Brute-force counterpart of real_ideal_exists: enumerates all index-N
// sublattices of Z*1 + Z*omega via Hermite bases (d1, 0; s, d2) with
// d1*d2 = N, 0 <= s < d1, and keeps those that are ideals (closed under
// multiplication by omega), primitive (cyclic quotient, gcd(d1, s, d2) = 1),
// real (stable under u + v*omega -> (u + v*delta) - v*omega), and proper
// (multiplier order equal to O, tested via its conductor).
bool real_ideal_exists_oracle(const Order& order, std::int64_t n,
                              std::int64_t max_n = limits::max_n_lattice);

// Structural form of the Q(f)-side criterion: true iff some d | gcd(f, N)
// admits a primitive proper real O(f/d)-ideal of index N/d, or -- when the
// ring class fields of conductors f and 2f coincide (see
// ring_class_coincidence) -- an ascending 2-step to conductor 2f followed by
// such a descent accounts for N. Agrees with qf_cyclic_isogeny_exists for
// all delta < -4.
bool structural_isogeny_admissible(const Order& order, std::int64_t n);

// K(f)-rational cyclic N-isogeny existence. For delta < -4: true iff delta
// is a square mod 4N. For delta in {-3, -4}: prime powers l^b are answered
// from the depth table (b <= M); composite N with two or more isogeny-relevant
// primes is not pinned down by the classification and raises
// unsupported_query (e.g. delta = -3, N = 18: both parts pass, the whole
// fails).
bool kf_cyclic_isogeny_exists(const Order& order, std::int64_t n);

// The (m, M) pair for one prime. Case table keyed on how ell sits relative
// to delta_k and f; M is unbounded exactly in the two split cases.
IsogenyDepth isogeny_depth(const Order& order, std::int64_t ell);

}  // namespace cmdeg
