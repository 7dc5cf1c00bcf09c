#pragma once

#include <cstdint>

#include "cmdeg/checked.hpp"

// Imaginary quadratic orders O(f) = Z + f*O_K, indexed by the fundamental
// discriminant delta_k of K and the conductor f. Total discriminant
// delta = f^2 * delta_k. Everything downstream is keyed on this pair.

namespace cmdeg {

struct Order {
    std::int64_t delta_k = 0;  // fundamental: squarefree = 1 mod 4, or 4m with m squarefree = 2,3 mod 4
    std::int64_t f = 1;        // conductor, >= 1
    std::int64_t delta = 0;    // f^2 * delta_k
    int w = 2;                 // unit count: 6 iff delta = -3, 4 iff delta = -4, else 2
};

// Five-way local classification of a prime ell relative to an order.
// The first two force ell coprime to f; the last three cover ell | delta.
enum class Splitting {
    Inert,          // (delta/ell) = -1
    SplitPrimeToF,  // (delta/ell) = +1
    SplitAboveF,    // ell | f and (delta_k/ell) = +1
    Ramified,       // (delta_k/ell) = 0
    InertAboveF,    // ell | f and (delta_k/ell) = -1
};

struct LocalCase {
    Splitting kind;
    int c;  // ord_ell(f)
};

const char* splitting_name(Splitting s);

bool is_fundamental_discriminant(std::int64_t delta_k);

// Validates delta_k (fundamental, negative) and f >= 1; derives delta and w.
// Throws invalid_input on malformed inputs, cap_exceeded if |delta| > cap.
Order make_order(std::int64_t delta_k, std::int64_t f,
                 std::int64_t max_abs_delta = limits::max_abs_delta);

// Splits a total discriminant delta < 0 into (delta_k, f) by extracting the
// largest square conductor, then delegates to make_order.
Order order_from_delta(std::int64_t delta,
                       std::int64_t max_abs_delta = limits::max_abs_delta);

// Kronecker symbol (delta/ell) for prime ell. At ell = 2: 0 if delta is even,
// +1 if delta = +-1 mod 8, -1 if delta = +-3 mod 8.
int kronecker(std::int64_t delta, std::int64_t ell);

LocalCase splitting_case(const Order& order, std::int64_t ell);

// h(delta): number of reduced primitive positive-definite binary quadratic
// forms (a,b,c) with b^2 - 4ac = delta, |b| <= a <= c, and b >= 0 when
// |b| = a or a = c.
std::int64_t class_number(std::int64_t delta,
                          std::int64_t max_abs_delta = limits::max_abs_delta);

// Recount under the alternate scan order (all |b| <= a <= sqrt(|delta|/3));
// independent implementation kept as a cross-check oracle.
std::int64_t class_number_recount(std::int64_t delta,
                                  std::int64_t max_abs_delta = limits::max_abs_delta);

// [K(f) : K^(1)] = (2/w_K) * f * prod_{p | f} (1 - (delta_k/p)/p) for f >= 2;
// 1 for f = 1. Always integral; non-integrality is asserted away.
std::int64_t ring_class_relative_degree(const Order& order);

// True iff the ring class fields for conductors f and ell*f coincide:
// (C1) ell = 2, (delta_k/2) = 1, f odd;
// (C2) delta_k = -4, f = 1, ell = 2;
// (C3) delta_k = -3, f = 1, ell in {2, 3}.
bool ring_class_coincidence(const Order& order, std::int64_t ell);

// Degree of X_1(N) over X(1): N^2 prod_{p|N} (1 - 1/p^2) / 2 for N >= 3,
// and 3 for N = 2.
std::int64_t x1_degree(std::int64_t n);

}  // namespace cmdeg
