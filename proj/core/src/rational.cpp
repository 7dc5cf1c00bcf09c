#include "cmdeg/rational.hpp"

#include <cstdint>
#include <utility>

#include "cmdeg/checked.hpp"

namespace cmdeg {

namespace {

DegreeAnswer qf_answer(const DegreeAnswer& kf, int factor) {
    // multiples_closed is deliberately false on this side: there are levels
    // whose realizable degree set is not closed under multiples.
    return DegreeAnswer{checked_mul(kf.value, factor), BaseField::QF, false};
}

}  // namespace

std::pair<DegreeAnswer, QfCaseTrace> t_qf_prime_power(const Order& order,
                                                      std::int64_t ell, int b,
                                                      std::int64_t max_n) {
    if (b < 1) throw invalid_input("t_qf_prime_power: b must be >= 1");
    const IsogenyDepth depth = isogeny_depth(order, ell);
    QfCaseTrace trace{"", depth.m, depth.m_sup, 1};
    if (b <= depth.m) {
        trace.case_id = "pp-within-m";
        trace.factor = 1;
    } else if (depth.m_sup.at_least(b)) {
        trace.case_id = "pp-mid-doubled";
        trace.factor = 2;
    } else if (depth.m_sup == DepthBound::finite(depth.m)) {
        trace.case_id = "pp-past-sup-equal";
        trace.factor = 1;
    } else {
        trace.case_id = "pp-past-sup-doubled";
        trace.factor = 2;
    }
    const DegreeAnswer kf = t_kf(order, 1, checked_pow(ell, b), max_n);
    return {qf_answer(kf, trace.factor), trace};
}

std::pair<DegreeAnswer, QfCaseTrace> t_qf_traced(const Order& order,
                                                 std::int64_t n,
                                                 std::int64_t max_n) {
    if (n < 1) throw invalid_input("t_qf: N must be >= 1");
    if (n == 1) return {DegreeAnswer{1, BaseField::QF, false}, QfCaseTrace{}};

    const auto parts = factorize(n);
    if (parts.size() == 1)
        return t_qf_prime_power(order, parts[0].first, parts[0].second, max_n);

    QfCaseTrace trace{"composite-single", 0, DepthBound::finite(0), 1};
    for (const auto& [p, b] : parts) {
        const auto [unused, part] = t_qf_prime_power(order, p, b, max_n);
        (void)unused;
        if (part.factor == 2) {
            trace = part;
            trace.case_id = "composite-doubled";
            break;
        }
    }
    const DegreeAnswer kf = t_kf(order, 1, n, max_n);
    return {qf_answer(kf, trace.factor), trace};
}

DegreeAnswer t_qf(const Order& order, std::int64_t n, std::int64_t max_n) {
    return t_qf_traced(order, n, max_n).first;
}

std::pair<DegreeAnswer, QfCaseTrace> t_qf_2_2b(const Order& order, int b,
                                               std::int64_t max_n) {
    if (b < 1) throw invalid_input("t_qf_2_2b: b must be >= 1");
    const IsogenyDepth depth = isogeny_depth(order, 2);
    QfCaseTrace trace{"", depth.m, depth.m_sup, 1};

    if (order.delta % 2 != 0) {
        trace.case_id = "m2-odd-delta-doubled";
        trace.factor = 2;
    } else if (order.delta == -4) {
        trace.case_id = b == 1 ? "m2-gauss-b1" : "m2-gauss-doubled";
        trace.factor = b == 1 ? 1 : 2;
    } else {
        const std::int64_t m = depth.m;
        const DepthBound& sup = depth.m_sup;
        if (b <= m) {
            trace.case_id = "m2-within-m";
            trace.factor = 1;
        } else if (b == 2 && m == 1 && sup.at_least(2)) {
            trace.case_id = "m2-b2-doubled";
            trace.factor = 2;
        } else if (m + 1 < b && sup.at_least(b)) {
            trace.case_id = "m2-mid-doubled";
            trace.factor = 2;
        } else if (b == m + 1 && b >= 3 && sup.at_least(b)) {
            trace.case_id = "m2-boundary-single";
            trace.factor = 1;
        } else if (sup == DepthBound::finite(m)) {
            trace.case_id = "m2-past-sup-single";
            trace.factor = 1;
        } else {
            trace.case_id = "m2-past-sup-doubled";
            trace.factor = 2;
        }
    }
    const DegreeAnswer kf = t_kf(order, 2, checked_pow(2, b), max_n);
    return {qf_answer(kf, trace.factor), trace};
}

std::pair<DegreeAnswer, QfCaseTrace> t_qf_2_n_traced(const Order& order,
                                                     std::int64_t n,
                                                     std::int64_t max_n) {
    if (n < 2 || n % 2 != 0)
        throw invalid_input("t_qf_2_n: N must be even and >= 2");
    const int b = ord_p(n, 2);
    auto [two_answer, trace] = t_qf_2_2b(order, b, max_n);
    (void)two_answer;
    if (trace.factor == 1) {
        std::int64_t odd = n >> b;
        for (const auto& [p, bp] : factorize(odd)) {
            const auto [unused, part] = t_qf_prime_power(order, p, bp, max_n);
            (void)unused;
            if (part.factor == 2) {
                trace = part;
                trace.case_id = "m2-odd-part-doubled";
                break;
            }
        }
    }
    const DegreeAnswer kf = t_kf(order, 2, n, max_n);
    return {qf_answer(kf, trace.factor), trace};
}

DegreeAnswer t_qf_2_n(const Order& order, std::int64_t n, std::int64_t max_n) {
    return t_qf_2_n_traced(order, n, max_n).first;
}

std::pair<DegreeAnswer, QfCaseTrace> t_qf_full_traced(const Order& order,
                                                      std::int64_t m,
                                                      std::int64_t n,
                                                      std::int64_t max_n) {
    if (m < 1 || n < 1 || n % m != 0)
        throw invalid_input("t_qf_full: need M >= 1 and M | N");
    if (m == 1) return t_qf_traced(order, n, max_n);
    if (m == 2) return t_qf_2_n_traced(order, n, max_n);
    QfCaseTrace trace{"m-large-doubled", 0, DepthBound::finite(0), 2};
    const DegreeAnswer kf = t_kf(order, m, n, max_n);
    return {qf_answer(kf, 2), trace};
}

DegreeAnswer t_qf_full(const Order& order, std::int64_t m, std::int64_t n,
                       std::int64_t max_n) {
    return t_qf_full_traced(order, m, n, max_n).first;
}

}  // namespace cmdeg
