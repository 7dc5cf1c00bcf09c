#pragma once

#include <cstdint>

#include "cmdeg/order.hpp"

// Closed forms for the least Cartan-orbit size T~(O, l^a, l^b) on (l^a, l^b)
// pairs and the least reduced-orbit size T(O, M, N), i.e. the least degree of
// a CM point on X(M,N) over the K(f)-side base field. Verified wholesale
// against the exhaustive oracle in cmdeg/cartan.hpp.

namespace cmdeg {

struct PrimePowerLevel {
    std::int64_t ell;  // prime
    int a;             // 0 <= a <= b
    int b;             // b >= 1
};

enum class BaseField { KF, QF };

struct DegreeAnswer {
    std::int64_t value = 1;
    BaseField base = BaseField::KF;
    // Whether every multiple of `value` is also realized as a degree. Known
    // true for the KF side; unknown in general on the QF side.
    bool multiples_closed = true;
};

// Least C_{l^b}(O)-orbit size on (l^a, l^b)-pairs. Case ladder keyed by
// splitting_case; the level l^b = 2 has its own two-row table.
std::int64_t t_tilde(const Order& order, const PrimePowerLevel& level,
                     std::int64_t max_n = limits::max_n_closed);

// Least reduced-orbit size for M | N: explicit small-level table for
// N in {1, 2, 3}, and prod t_tilde(l^a, l^b) / w for N >= 4.
DegreeAnswer t_kf(const Order& order, std::int64_t m, std::int64_t n,
                  std::int64_t max_n = limits::max_n_closed);

}  // namespace cmdeg
