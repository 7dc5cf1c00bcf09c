#include "cmdeg/checked.hpp"

#include <algorithm>
#include <numeric>

namespace cmdeg {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow("add overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_overflow("sub overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow("mul overflow");
    return r;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
    if (exp < 0) throw arithmetic_overflow("negative exponent");
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

std::int64_t exact_div(std::int64_t a, std::int64_t b) {
    if (b == 0 || a % b != 0) throw arithmetic_overflow("inexact division");
    return a / b;
}

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw arithmetic_overflow("isqrt of negative");
    if (n < 2) return n;
    std::int64_t x = n, y = (x + 1) / 2;
    while (y < x) {  // Newton iteration on integers converges to floor(sqrt)
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

int ord_p(std::int64_t n, std::int64_t p) {
    if (n == 0 || p < 2) throw arithmetic_overflow("ord_p domain");
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d : {2, 3, 5}) {
        if (n % d == 0) return n == d;
    }
    // trial division by 6k +- 1
    for (std::int64_t d = 7; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 4) == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw arithmetic_overflow("factorize domain");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int k = 0;
            while (n % p == 0) {
                n /= p;
                ++k;
            }
            out.emplace_back(p, k);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (auto [p, k] : factorize(n)) {
        const std::size_t base = out.size();
        std::int64_t q = 1;
        for (int i = 1; i <= k; ++i) {
            q = checked_mul(q, p);
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m) {
    if (m < 1 || e < 0) throw arithmetic_overflow("pow_mod domain");
    if (m == 1) return 0;
    __int128 acc = 1;
    __int128 base = ((a % m) + m) % m;
    while (e > 0) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::int64_t>(acc);
}

namespace {

// Legendre symbol for odd prime p via Euler's criterion.
int legendre(std::int64_t a, std::int64_t p) {
    const std::int64_t r = pow_mod(a, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

// Square solvability in Z/p^k for odd prime p.
bool square_mod_odd_prime_power(std::int64_t a, std::int64_t p, int k) {
    const std::int64_t pk = checked_pow(p, k);
    a = ((a % pk) + pk) % pk;
    if (a == 0) return true;
    int e = 0;
    while (a % p == 0) {
        a /= p;
        ++e;
    }
    if (e % 2 != 0) return false;
    return legendre(a, p) == 1;
}

// Square solvability in Z/2^k.
bool square_mod_two_power(std::int64_t a, int k) {
    const std::int64_t pk = std::int64_t{1} << k;
    a = ((a % pk) + pk) % pk;
    if (a == 0) return true;
    int e = 0;
    while (a % 2 == 0) {
        a /= 2;
        ++e;
    }
    if (e % 2 != 0) return false;
    const int rem = k - e;  // odd unit a must be a square mod 2^rem
    if (rem <= 1) return true;
    if (rem == 2) return a % 4 == 1;
    return a % 8 == 1;
}

}  // namespace

bool is_square_mod(std::int64_t a, std::int64_t m) {
    if (m < 1) throw arithmetic_overflow("is_square_mod domain");
    for (auto [p, k] : factorize(m)) {
        const bool ok = (p == 2) ? square_mod_two_power(a, k)
                                 : square_mod_odd_prime_power(a, p, k);
        if (!ok) return false;
    }
    return true;
}

bool is_square_mod_exhaustive(std::int64_t a, std::int64_t m) {
    if (m < 1) throw arithmetic_overflow("is_square_mod domain");
    a = ((a % m) + m) % m;
    for (std::int64_t x = 0; x <= m / 2; ++x) {
        if ((static_cast<__int128>(x) * x - a) % m == 0) return true;
    }
    return false;
}

}  // namespace cmdeg
