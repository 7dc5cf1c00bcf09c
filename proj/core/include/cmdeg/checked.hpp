#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Checked signed-64-bit arithmetic and small number-theory utilities shared by
// every module. All quantities in this library stay far below 2^63 under the
// configured caps; an overflow therefore indicates a bug or a cap violation,
// and both throw rather than wrap.

namespace cmdeg {

// Input failed validation (bad discriminant, non-divisible levels, ...).
// The CLI maps this to exit code 2.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& msg) : std::invalid_argument(msg) {}
};

// A configured size cap was exceeded. CLI exit code 3.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// The query is well-formed but outside what the implemented theory answers.
class unsupported_query : public std::runtime_error {
public:
    explicit unsupported_query(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal arithmetic left the checked range; always a bug if caps hold.
class arithmetic_overflow : public std::overflow_error {
public:
    explicit arithmetic_overflow(const std::string& msg) : std::overflow_error(msg) {}
};

namespace limits {
// Default caps; call sites take these as defaulted parameters so alternative
// configurations stay explicit (no global mutable state).
inline constexpr std::int64_t max_abs_delta = 1'000'000;  // closed forms
inline constexpr std::int64_t max_n_closed = 10'000;      // closed-form levels
inline constexpr std::int64_t max_n_oracle = 64;          // finite-ring orbit sweeps
inline constexpr std::int64_t max_n_lattice = 200;        // sublattice enumeration
}  // namespace limits

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
// base^exp, exp >= 0, checked.
std::int64_t checked_pow(std::int64_t base, std::int64_t exp);

// Exact quotient; throws arithmetic_overflow if b does not divide a.
std::int64_t exact_div(std::int64_t a, std::int64_t b);

// floor(sqrt(n)) for n >= 0, exact (no floating point).
std::int64_t isqrt(std::int64_t n);

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

// Multiplicity of p in n (n != 0, p >= 2).
int ord_p(std::int64_t n, std::int64_t p);

bool is_prime(std::int64_t n);

// Prime factorization of n >= 1 as (prime, multiplicity), primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Divisors of n >= 1, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

// (a^e) mod m for m >= 1, e >= 0.
std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m);

// True iff some x satisfies x^2 = a (mod m), m >= 1. Prime-power analysis
// composed by CRT; exact for any m within the checked range.
bool is_square_mod(std::int64_t a, std::int64_t m);

// Exhaustive variant (tries every residue); oracle for is_square_mod in tests.
bool is_square_mod_exhaustive(std::int64_t a, std::int64_t m);

}  // namespace cmdeg
