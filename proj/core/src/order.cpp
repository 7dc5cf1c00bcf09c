#include "cmdeg/order.hpp"

#include <cassert>
#include <string>

namespace cmdeg {

const char* splitting_name(Splitting s) {
    switch (s) {
        case Splitting::Inert: return "inert";
        case Splitting::SplitPrimeToF: return "split";
        case Splitting::SplitAboveF: return "split-above-f";
        case Splitting::Ramified: return "ramified";
        case Splitting::InertAboveF: return "inert-above-f";
    }
    return "?";
}

namespace {

bool squarefree(std::int64_t n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
    }
    return true;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
    return ((a % m) + m) % m;
}

}  // namespace

bool is_fundamental_discriminant(std::int64_t delta_k) {
    if (delta_k >= 0) return false;
    if (mod_pos(delta_k, 4) == 1) return squarefree(delta_k);
    if (mod_pos(delta_k, 4) == 0) {
        const std::int64_t m = delta_k / 4;
        return squarefree(m) && (mod_pos(m, 4) == 2 || mod_pos(m, 4) == 3);
    }
    return false;
}

Order make_order(std::int64_t delta_k, std::int64_t f, std::int64_t max_abs_delta) {
    if (f <= 0) throw invalid_input("conductor must be positive");
    if (delta_k >= 0) throw invalid_input("discriminant must be negative");
    if (!is_fundamental_discriminant(delta_k)) {
        throw invalid_input("not a fundamental discriminant: " + std::to_string(delta_k));
    }
    const std::int64_t delta = checked_mul(checked_mul(f, f), delta_k);
    if (-delta > max_abs_delta) {
        throw cap_exceeded("|delta| = " + std::to_string(-delta) + " exceeds cap " +
                           std::to_string(max_abs_delta));
    }
    Order o;
    o.delta_k = delta_k;
    o.f = f;
    o.delta = delta;
    o.w = delta == -3 ? 6 : delta == -4 ? 4 : 2;
    return o;
}

Order order_from_delta(std::int64_t delta, std::int64_t max_abs_delta) {
    if (delta >= 0) throw invalid_input("discriminant must be negative");
    const std::int64_t r = mod_pos(delta, 4);
    if (r != 0 && r != 1) {
        throw invalid_input("not a discriminant (must be 0 or 1 mod 4): " + std::to_string(delta));
    }
    if (-delta > max_abs_delta) {
        throw cap_exceeded("|delta| exceeds cap");
    }
    // Largest f with f^2 | delta and delta/f^2 still a discriminant; the
    // fundamental part is what remains.
    std::int64_t f = 1;
    for (std::int64_t d = isqrt(-delta); d >= 1; --d) {
        if (delta % (d * d) != 0) continue;
        const std::int64_t core = delta / (d * d);
        if (is_fundamental_discriminant(core)) {
            f = d;
            break;
        }
    }
    return make_order(delta / (f * f), f, max_abs_delta);
}

int kronecker(std::int64_t delta, std::int64_t ell) {
    if (!is_prime(ell)) throw invalid_input("kronecker: ell must be prime");
    if (ell == 2) {
        if (delta % 2 == 0) return 0;
        const std::int64_t r = mod_pos(delta, 8);
        return (r == 1 || r == 7) ? 1 : -1;
    }
    const std::int64_t r = pow_mod(delta, (ell - 1) / 2, ell);  // Euler's criterion
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

LocalCase splitting_case(const Order& order, std::int64_t ell) {
    const int c = ord_p(order.f, ell);
    if (c > 0) {
        const int chi_k = kronecker(order.delta_k, ell);
        if (chi_k == 1) return {Splitting::SplitAboveF, c};
        if (chi_k == -1) return {Splitting::InertAboveF, c};
        return {Splitting::Ramified, c};
    }
    const int chi = kronecker(order.delta, ell);
    if (chi == 1) return {Splitting::SplitPrimeToF, 0};
    if (chi == -1) return {Splitting::Inert, 0};
    return {Splitting::Ramified, 0};
}

std::int64_t class_number(std::int64_t delta, std::int64_t max_abs_delta) {
    if (delta >= 0 || (mod_pos(delta, 4) != 0 && mod_pos(delta, 4) != 1)) {
        throw invalid_input("class_number: not a negative discriminant");
    }
    if (-delta > max_abs_delta) throw cap_exceeded("class_number cap");
    // Scan b with b = delta mod 2, 3b^2 <= |delta|; split b^2 - delta = 4ac.
    std::int64_t h = 0;
    for (std::int64_t b = mod_pos(delta, 2); 3 * b * b <= -delta; b += 2) {
        const std::int64_t ac = exact_div(b * b - delta, 4);
        for (std::int64_t a = (b > 1 ? b : 1); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            const std::int64_t c = ac / a;
            if (gcd_i64(gcd_i64(a, b), c) != 1) continue;
            // (a, b, c) counts once when b = 0, a = b, or a = c (b >= 0
            // representative), twice otherwise (for +-b).
            h += (b == 0 || a == b || a == c) ? 1 : 2;
        }
    }
    return h;
}

std::int64_t class_number_recount(std::int64_t delta, std::int64_t max_abs_delta) {
    if (delta >= 0 || (mod_pos(delta, 4) != 0 && mod_pos(delta, 4) != 1)) {
        throw invalid_input("class_number: not a negative discriminant");
    }
    if (-delta > max_abs_delta) throw cap_exceeded("class_number cap");
    std::int64_t h = 0;
    for (std::int64_t a = 1; 3 * a * a <= -delta; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            if (mod_pos(b - delta, 2) != 0) continue;
            const std::int64_t num = b * b - delta;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if ((b < 0) && (-b == a || a == c)) continue;  // keep the b >= 0 twin only
            if (gcd_i64(gcd_i64(a, b), c) != 1) continue;
            ++h;
        }
    }
    return h;
}

std::int64_t ring_class_relative_degree(const Order& order) {
    if (order.f == 1) return 1;
    const int w_k = order.delta_k == -3 ? 6 : order.delta_k == -4 ? 4 : 2;
    std::int64_t num = checked_mul(2, order.f);
    std::int64_t den = w_k;
    for (auto [p, k] : factorize(order.f)) {
        (void)k;
        num = checked_mul(num, p - kronecker(order.delta_k, p));
        den = checked_mul(den, p);
    }
    return exact_div(num, den);  // a field degree; always integral for f >= 2
}

bool ring_class_coincidence(const Order& order, std::int64_t ell) {
    if (!is_prime(ell)) throw invalid_input("ring_class_coincidence: ell must be prime");
    if (ell == 2 && kronecker(order.delta_k, 2) == 1 && order.f % 2 != 0) return true;  // (C1)
    if (order.delta_k == -4 && order.f == 1 && ell == 2) return true;                   // (C2)
    if (order.delta_k == -3 && order.f == 1 && (ell == 2 || ell == 3)) return true;     // (C3)
    return false;
}

std::int64_t x1_degree(std::int64_t n) {
    if (n < 2) throw invalid_input("x1_degree: n must be >= 2");
    if (n == 2) return 3;
    std::int64_t val = checked_mul(n, n);
    for (auto [p, k] : factorize(n)) {
        (void)k;
        val = exact_div(val, p * p);  // n^2 carries p^2 for every p | n
        val = checked_mul(val, p * p - 1);
    }
    return exact_div(val, 2);
}

}  // namespace cmdeg
