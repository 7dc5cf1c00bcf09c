#pragma once

#include <cstdint>
#include <utility>

#include "cmdeg/degrees.hpp"
#include "cmdeg/isogeny.hpp"
#include "cmdeg/order.hpp"

// Least degrees over the Q(f)-side base field. Every answer is the KF-side
// degree from cmdeg/degrees.hpp times a factor of 1 or 2; the factor is
// decided by case ladders on the depth pair (m, M) of cmdeg/isogeny.hpp,
// and the trace records which clause fired.

namespace cmdeg {

struct QfCaseTrace {
    const char* case_id = "trivial";  // stable behavior-keyed clause name
    std::int64_t m = 0;               // from isogeny_depth (decisive prime)
    DepthBound m_sup;
    int factor = 1;  // 1 or 2; answer value = factor * KF degree
};

// Least Q(f)-side degree of a point of order ell^b. Ladder on (m, M):
//   b <= m          -> T    (pp-within-m)
//   m < b <= M      -> 2T   (pp-mid-doubled)
//   b > M = m       -> T    (pp-past-sup-equal)
//   b > M > m       -> 2T   (pp-past-sup-doubled; forces ell = 2)
std::pair<DegreeAnswer, QfCaseTrace> t_qf_prime_power(
    const Order& order, std::int64_t ell, int b,
    std::int64_t max_n = limits::max_n_closed);

// Least Q(f)-side degree of a point of order N: the KF degree, doubled iff
// some prime-power part of N has a doubled prime-power answer.
std::pair<DegreeAnswer, QfCaseTrace> t_qf_traced(
    const Order& order, std::int64_t n,
    std::int64_t max_n = limits::max_n_closed);
DegreeAnswer t_qf(const Order& order, std::int64_t n,
                  std::int64_t max_n = limits::max_n_closed);

// Least Q(f)-side degree of full 2-torsion plus a point of order 2^b.
// delta odd -> always doubled; delta = -4 -> single iff b = 1; delta < -4
// even -> six-clause ladder on (b, m, M), evaluated in printed order.
std::pair<DegreeAnswer, QfCaseTrace> t_qf_2_2b(
    const Order& order, int b, std::int64_t max_n = limits::max_n_closed);

// Least Q(f)-side degree for (2, N) with 2 | N: single iff delta is even,
// the 2-part ladder gives factor 1, and every odd part gives factor 1.
std::pair<DegreeAnswer, QfCaseTrace> t_qf_2_n_traced(
    const Order& order, std::int64_t n,
    std::int64_t max_n = limits::max_n_closed);
DegreeAnswer t_qf_2_n(const Order& order, std::int64_t n,
                      std::int64_t max_n = limits::max_n_closed);

// General (M, N) with M | N: M = 1 and M = 2 delegate to the above; M >= 3
// is always doubled (the M-torsion field already contains K).
std::pair<DegreeAnswer, QfCaseTrace> t_qf_full_traced(
    const Order& order, std::int64_t m, std::int64_t n,
    std::int64_t max_n = limits::max_n_closed);
DegreeAnswer t_qf_full(const Order& order, std::int64_t m, std::int64_t n,
                       std::int64_t max_n = limits::max_n_closed);

}  // namespace cmdeg
