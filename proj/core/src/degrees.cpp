#include "cmdeg/degrees.hpp"

#include <string>

#include "cmdeg/cartan.hpp"

namespace cmdeg {

namespace {

void check_level(const Order&, const PrimePowerLevel& level, std::int64_t max_n) {
    if (!is_prime(level.ell)) throw invalid_input("t_tilde: ell must be prime");
    if (level.b < 1 || level.a < 0 || level.a > level.b) {
        throw invalid_input("t_tilde: need 0 <= a <= b, b >= 1");
    }
    if (checked_pow(level.ell, level.b) > max_n) throw cap_exceeded("t_tilde: level cap");
}

std::int64_t max_i64(std::int64_t x, std::int64_t y) {
    return x > y ? x : y;
}

}  // namespace

std::int64_t t_tilde(const Order& order, const PrimePowerLevel& level, std::int64_t max_n) {
    check_level(order, level, max_n);
    const std::int64_t ell = level.ell;
    const std::int64_t a = level.a;
    const std::int64_t b = level.b;

    if (ell == 2 && b == 1) {
        // Two-row table for level 2; the general ladder below assumes l^b >= 3.
        if (a == 0) return kronecker(order.delta, 2) == -1 ? 3 : 1;
        return cartan_order(order, 2);  // free action on (2,2)-pairs: 2 - (delta/2)
    }

    const LocalCase lc = splitting_case(order, ell);
    const std::int64_t c = lc.c;
    switch (lc.kind) {
        case Splitting::Inert:
            return checked_mul(checked_pow(ell, 2 * b - 2), ell * ell - 1);
        case Splitting::SplitPrimeToF:
            if (a == 0) return checked_mul(checked_pow(ell, b - 1), ell - 1);
            return checked_mul(checked_pow(ell, a + b - 2), (ell - 1) * (ell - 1));
        case Splitting::SplitAboveF:
            return checked_mul(checked_pow(ell, a + b - 1), ell - 1);
        case Splitting::Ramified: {
            const std::int64_t e =
                (b <= 2 * c + 1) ? a + b - 1 : max_i64(a + b - 1, 2 * b - 2 * c - 2);
            return checked_mul(checked_pow(ell, e), ell - 1);
        }
        case Splitting::InertAboveF: {
            const std::int64_t e =
                (b <= 2 * c) ? a + b - 1 : max_i64(a + b - 1, 2 * b - 2 * c - 1);
            return checked_mul(checked_pow(ell, e), ell - 1);
        }
    }
    throw invalid_input("t_tilde: unreachable");
}

DegreeAnswer t_kf(const Order& order, std::int64_t m, std::int64_t n, std::int64_t max_n) {
    if (m < 1 || n < 1 || n % m != 0) throw invalid_input("t_kf requires M | N");
    if (n > max_n) throw cap_exceeded("t_kf: level cap");

    DegreeAnswer ans;
    ans.base = BaseField::KF;
    ans.multiples_closed = true;

    if (n == 1) {
        ans.value = 1;
        return ans;
    }
    if (n == 2 || n == 3) {
        // Small levels where the w-quotient relation fails; explicit table.
        const int chi = kronecker(order.delta, n);
        if (m == 1) {
            if (n == 2) {
                ans.value = (chi == -1 && order.delta != -3) ? 3 : 1;
            } else {
                ans.value = (chi == -1) ? exact_div(8, order.w) : 1;
            }
        } else {  // m == n
            ans.value = exact_div(checked_mul(2, n - chi), order.w);
        }
        return ans;
    }

    std::int64_t prod = 1;
    for (auto [p, bk] : factorize(n)) {
        prod = checked_mul(prod, t_tilde(order, {p, ord_p(m, p), bk}, max_n));
    }
    ans.value = exact_div(prod, order.w);  // integral for N >= 4
    return ans;
}

}  // namespace cmdeg
