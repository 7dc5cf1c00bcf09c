#include "cmdeg/verify.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cmdeg/cartan.hpp"
#include "cmdeg/checked.hpp"
#include "cmdeg/degrees.hpp"
#include "cmdeg/dual.hpp"
#include "cmdeg/isogeny.hpp"
#include "cmdeg/parallel.hpp"
#include "cmdeg/rational.hpp"

namespace cmdeg {

namespace {

constexpr std::size_t kMaxSampleFailures = 5;

// Accumulates pass/fail counts for one suite; failure descriptions are built
// lazily so the passing path allocates nothing.
class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    template <typename Describe>
    void expect(bool ok, Describe&& describe) {
        ++result_.checked;
        if (ok) return;
        ++result_.failed;
        if (result_.sample_failures.size() < kMaxSampleFailures) {
            std::ostringstream oss;
            describe(oss);
            result_.sample_failures.push_back(oss.str());
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

std::string order_tag(const Order& o) {
    std::ostringstream oss;
    oss << "delta_k=" << o.delta_k << ",f=" << o.f;
    return oss.str();
}

std::vector<std::int64_t> primes_up_to(std::int64_t cap) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= cap; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

// ---------------------------------------------------------------------------
// Stage A: one exhaustive orbit enumeration per (order, M, N) task, memoized
// so every orbit-backed suite reads the same reports.

struct OrbitKey {
    std::size_t order_idx;
    std::int64_t m;
    std::int64_t n;
    friend bool operator<(const OrbitKey& x, const OrbitKey& y) {
        return std::tie(x.order_idx, x.m, x.n) < std::tie(y.order_idx, y.m, y.n);
    }
};

struct OrbitBank {
    std::vector<Order> orders;
    std::int64_t n_cap = 0;
    std::vector<OrbitKey> keys;
    std::vector<OrbitReport> reports;
    std::map<OrbitKey, std::size_t> index;

    const OrbitReport& at(std::size_t order_idx, std::int64_t m,
                          std::int64_t n) const {
        return reports[index.at(OrbitKey{order_idx, m, n})];
    }
};

OrbitBank build_orbit_bank(const VerifyConfig& cfg) {
    OrbitBank bank;
    bank.orders = orders_up_to(cfg.max_abs_delta);
    bank.n_cap = std::min(cfg.max_n, cfg.oracle_cap);
    for (std::size_t oi = 0; oi < bank.orders.size(); ++oi)
        for (std::int64_t n = 1; n <= bank.n_cap; ++n)
            for (std::int64_t m = 1; m <= n; ++m)
                if (n % m == 0) bank.keys.push_back(OrbitKey{oi, m, n});
    bank.reports.resize(bank.keys.size());
    for (std::size_t i = 0; i < bank.keys.size(); ++i)
        bank.index.emplace(bank.keys[i], i);
    parallel_for(bank.keys.size(), cfg.workers, [&](std::size_t i) {
        const OrbitKey& k = bank.keys[i];
        bank.reports[i] =
            pair_orbits(bank.orders[k.order_idx], k.m, k.n, cfg.oracle_cap);
    });
    return bank;
}

// ---------------------------------------------------------------------------
// Orbit-backed suites.

// Unit counts in O/NO: exhaustive norm scan vs. the multiplicative closed form.
SuiteResult suite_units_count(const VerifyConfig& cfg, const OrbitBank& bank) {
    Suite s("units-count");
    for (const Order& o : bank.orders) {
        for (std::int64_t n = 1; n <= bank.n_cap; ++n) {
            const auto units = enumerate_units(o, n, cfg.oracle_cap);
            const std::int64_t closed = cartan_order(o, n);
            s.expect(static_cast<std::int64_t>(units.size()) == closed,
                     [&](std::ostream& os) {
                         os << order_tag(o) << " n=" << n
                            << " enumerated=" << units.size()
                            << " closed=" << closed;
                     });
        }
    }
    return s.take();
}

// Size of the image of the unit group O^x in (O/NO)^x: 1 at N = 1, w/2 at
// N = 2 (kernel {+-1}), w for N >= 3 (injective).
SuiteResult suite_torsion_image(const VerifyConfig& cfg, const OrbitBank& bank) {
    Suite s("torsion-image");
    for (const Order& o : bank.orders) {
        for (std::int64_t n = 1; n <= bank.n_cap; ++n) {
            const auto image = torsion_unit_image(o, n, cfg.oracle_cap);
            const std::int64_t expected =
                n == 1 ? 1 : (n == 2 ? o.w / 2 : o.w);
            s.expect(static_cast<std::int64_t>(image.size()) == expected,
                     [&](std::ostream& os) {
                         os << order_tag(o) << " n=" << n
                            << " image=" << image.size() << " want=" << expected;
                     });
        }
    }
    return s.take();
}

// For M = N every orbit has full Cartan size: the action on (N,N)-pairs,
// i.e. on bases, is free.
SuiteResult suite_free_action(const OrbitBank& bank) {
    Suite s("free-action");
    for (std::size_t oi = 0; oi < bank.orders.size(); ++oi) {
        const Order& o = bank.orders[oi];
        for (std::int64_t n = 1; n <= bank.n_cap; ++n) {
            const OrbitReport& rep = bank.at(oi, n, n);
            const std::int64_t full = cartan_order(o, n);
            const bool ok =
                std::all_of(rep.orbit_sizes.begin(), rep.orbit_sizes.end(),
                            [&](std::int64_t sz) { return sz == full; });
            s.expect(ok, [&](std::ostream& os) {
                os << order_tag(o) << " n=" << n << " expected all orbits of size "
                   << full;
            });
        }
    }
    return s.take();
}

// For N >= 4 torsion scaling acts freely on every orbit, so the reduced
// orbit multiset is the plain multiset divided elementwise by w.
SuiteResult suite_w_scaling(const OrbitBank& bank) {
    Suite s("w-scaling");
    for (const OrbitKey& k : bank.keys) {
        if (k.n < 4) continue;
        const Order& o = bank.orders[k.order_idx];
        const OrbitReport& rep = bank.at(k.order_idx, k.m, k.n);
        bool ok = rep.orbit_sizes.size() == rep.reduced_orbit_sizes.size();
        if (ok) {
            for (std::size_t i = 0; i < rep.orbit_sizes.size(); ++i) {
                if (rep.orbit_sizes[i] != o.w * rep.reduced_orbit_sizes[i]) {
                    ok = false;
                    break;
                }
            }
        }
        s.expect(ok, [&](std::ostream& os) {
            os << order_tag(o) << " m=" << k.m << " n=" << k.n
               << " orbit multiset is not w * reduced multiset (w=" << o.w << ")";
        });
    }
    return s.take();
}

// Least orbit size on (l^a, l^b)-pairs: closed form vs. enumeration.
SuiteResult suite_t_tilde_oracle(const OrbitBank& bank, bool inject_fault) {
    Suite s("t-tilde-oracle");
    for (std::size_t oi = 0; oi < bank.orders.size(); ++oi) {
        const Order& o = bank.orders[oi];
        for (std::int64_t ell : primes_up_to(bank.n_cap)) {
            for (int b = 1;; ++b) {
                const std::int64_t pb = checked_pow(ell, b);
                if (pb > bank.n_cap) break;
                for (int a = 0; a <= b; ++a) {
                    const std::int64_t pa = checked_pow(ell, a);
                    const std::int64_t enumerated = bank.at(oi, pa, pb).min_size;
                    const std::int64_t closed =
                        t_tilde(o, PrimePowerLevel{ell, a, b}) +
                        (inject_fault ? 1 : 0);
                    s.expect(enumerated == closed, [&](std::ostream& os) {
                        os << order_tag(o) << " ell=" << ell << " a=" << a
                           << " b=" << b << " enumerated=" << enumerated
                           << " closed=" << closed;
                    });
                }
            }
        }
    }
    return s.take();
}

// Report bookkeeping (min = front, sizes sum to the pair count) for every
// task, plus divisibility of all orbit sizes by the least one at prime-power
// levels.
SuiteResult suite_orbit_divisibility(const OrbitBank& bank) {
    Suite s("orbit-divisibility");
    for (const OrbitKey& k : bank.keys) {
        const Order& o = bank.orders[k.order_idx];
        const OrbitReport& rep = bank.at(k.order_idx, k.m, k.n);
        std::int64_t total = 0;
        for (std::int64_t sz : rep.orbit_sizes) total = checked_add(total, sz);
        const bool consistent =
            !rep.orbit_sizes.empty() && !rep.reduced_orbit_sizes.empty() &&
            std::is_sorted(rep.orbit_sizes.begin(), rep.orbit_sizes.end()) &&
            std::is_sorted(rep.reduced_orbit_sizes.begin(),
                           rep.reduced_orbit_sizes.end()) &&
            rep.min_size == rep.orbit_sizes.front() &&
            rep.min_reduced_size == rep.reduced_orbit_sizes.front() &&
            total == rep.pair_count;
        s.expect(consistent, [&](std::ostream& os) {
            os << order_tag(o) << " m=" << k.m << " n=" << k.n
               << " inconsistent orbit report";
        });
        if (factorize(k.n).size() == 1) {
            const bool divisible =
                std::all_of(rep.orbit_sizes.begin(), rep.orbit_sizes.end(),
                            [&](std::int64_t sz) { return sz % rep.min_size == 0; });
            s.expect(divisible, [&](std::ostream& os) {
                os << order_tag(o) << " m=" << k.m << " n=" << k.n
                   << " some orbit size is not a multiple of " << rep.min_size;
            });
        }
    }
    return s.take();
}

// Least reduced-orbit size vs. the closed form for every M | N.
SuiteResult suite_t_kf_oracle(const OrbitBank& bank) {
    Suite s("t-kf-oracle");
    for (const OrbitKey& k : bank.keys) {
        const Order& o = bank.orders[k.order_idx];
        const OrbitReport& rep = bank.at(k.order_idx, k.m, k.n);
        const DegreeAnswer ans = t_kf(o, k.m, k.n);
        const bool ok = ans.value == rep.min_reduced_size &&
                        ans.base == BaseField::KF && ans.multiples_closed;
        s.expect(ok, [&](std::ostream& os) {
            os << order_tag(o) << " m=" << k.m << " n=" << k.n
               << " enumerated=" << rep.min_reduced_size << " closed=" << ans.value;
        });
    }
    return s.take();
}

std::vector<std::int64_t> multiset_product(const std::vector<std::int64_t>& xs,
                                           const std::vector<std::int64_t>& ys) {
    std::vector<std::int64_t> out;
    out.reserve(xs.size() * ys.size());
    for (std::int64_t x : xs)
        for (std::int64_t y : ys) out.push_back(checked_mul(x, y));
    std::sort(out.begin(), out.end());
    return out;
}

// Orbit multisets at composite N factor as products of the prime-power
// multisets (component-wise ring splitting).
SuiteResult suite_crt_multiplicativity(const OrbitBank& bank) {
    Suite s("crt-multiplicativity");
    for (const OrbitKey& k : bank.keys) {
        const auto parts = factorize(k.n);
        if (parts.size() < 2) continue;
        const Order& o = bank.orders[k.order_idx];
        std::vector<std::int64_t> expected{1};
        for (const auto& [p, e] : parts) {
            const std::int64_t pa = checked_pow(p, ord_p(k.m, p));
            const std::int64_t pb = checked_pow(p, e);
            expected = multiset_product(
                expected, bank.at(k.order_idx, pa, pb).orbit_sizes);
        }
        const OrbitReport& rep = bank.at(k.order_idx, k.m, k.n);
        s.expect(expected == rep.orbit_sizes, [&](std::ostream& os) {
            os << order_tag(o) << " m=" << k.m << " n=" << k.n
               << " orbit multiset differs from the product of its prime parts";
        });
    }
    return s.take();
}

// When ell divides the conductor, the orbits on points of order ell^2 have
// the fixed census {ell*(ell-1)} x ell plus one orbit of size ell^3*(ell-1).
SuiteResult suite_ell_squared_census(const OrbitBank& bank) {
    Suite s("ell-squared-census");
    for (std::size_t oi = 0; oi < bank.orders.size(); ++oi) {
        const Order& o = bank.orders[oi];
        for (std::int64_t ell : {std::int64_t{2}, std::int64_t{3}}) {
            if (o.f % ell != 0 || ell * ell > bank.n_cap) continue;
            std::vector<std::int64_t> expected(
                static_cast<std::size_t>(ell), ell * (ell - 1));
            expected.push_back(ell * ell * ell * (ell - 1));
            const OrbitReport& rep = bank.at(oi, 1, ell * ell);
            s.expect(rep.orbit_sizes == expected, [&](std::ostream& os) {
                os << order_tag(o) << " ell=" << ell
                   << " order-ell^2 orbit census mismatch";
            });
        }
    }
    return s.take();
}

// ---------------------------------------------------------------------------
// Isogeny-existence suites.

struct TrianglePoint {
    bool closed_real = false;
    bool oracle_real = false;
    bool qf = false;
    bool structural = false;
};

// Divisor criterion vs. sublattice enumeration for real ideals (all delta),
// and the arithmetic Q(f)-isogeny criterion vs. its structural form
// (delta < -4; the two extra-unit discriminants follow different rules and
// are pinned in their own suite).
SuiteResult suite_isogeny_triangle(const VerifyConfig& cfg) {
    Suite s("isogeny-triangle");
    const std::vector<Order> orders = orders_up_to(cfg.triangle_abs_delta);
    std::vector<std::vector<TrianglePoint>> grid(orders.size());
    const std::int64_t lattice_cap =
        std::max(cfg.triangle_max_n, limits::max_n_lattice);
    parallel_for(orders.size(), cfg.workers, [&](std::size_t oi) {
        const Order& o = orders[oi];
        const std::int64_t n_max = std::min(2 * -o.delta, cfg.triangle_max_n);
        auto& row = grid[oi];
        row.resize(static_cast<std::size_t>(n_max));
        for (std::int64_t n = 1; n <= n_max; ++n) {
            TrianglePoint& pt = row[static_cast<std::size_t>(n - 1)];
            pt.closed_real = real_ideal_exists(o, n);
            pt.oracle_real = real_ideal_exists_oracle(o, n, lattice_cap);
            if (o.delta < -4) {
                pt.qf = qf_cyclic_isogeny_exists(o, n);
                pt.structural = structural_isogeny_admissible(o, n);
            }
        }
    });
    for (std::size_t oi = 0; oi < orders.size(); ++oi) {
        const Order& o = orders[oi];
        for (std::size_t j = 0; j < grid[oi].size(); ++j) {
            const std::int64_t n = static_cast<std::int64_t>(j) + 1;
            const TrianglePoint& pt = grid[oi][j];
            s.expect(pt.closed_real == pt.oracle_real, [&](std::ostream& os) {
                os << order_tag(o) << " n=" << n << " real-ideal closed="
                   << pt.closed_real << " oracle=" << pt.oracle_real;
            });
            if (o.delta < -4) {
                s.expect(pt.qf == pt.structural, [&](std::ostream& os) {
                    os << order_tag(o) << " n=" << n << " qf-criterion=" << pt.qf
                       << " structural=" << pt.structural;
                });
            }
        }
    }
    return s.take();
}

// Necessity bounds: a real ideal of index N forces N | delta; a Q(f)-rational
// cyclic N-isogeny (delta < -4) forces N | 2*delta.
SuiteResult suite_isogeny_necessity(const VerifyConfig& cfg) {
    Suite s("isogeny-necessity");
    for (const Order& o : orders_up_to(cfg.triangle_abs_delta)) {
        const std::int64_t n_max = std::min(2 * -o.delta, 2 * cfg.triangle_max_n);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            if (real_ideal_exists(o, n)) {
                s.expect(-o.delta % n == 0, [&](std::ostream& os) {
                    os << order_tag(o) << " n=" << n
                       << " real ideal exists but n does not divide |delta|";
                });
            }
            if (o.delta < -4 && qf_cyclic_isogeny_exists(o, n)) {
                s.expect(2 * -o.delta % n == 0, [&](std::ostream& os) {
                    os << order_tag(o) << " n=" << n
                       << " isogeny exists but n does not divide 2|delta|";
                });
            }
        }
    }
    return s.take();
}

// The two extra-unit discriminants have fixed rational-isogeny level sets.
SuiteResult suite_gauss_eisenstein_sets() {
    Suite s("gauss-eisenstein-sets");
    const Order gauss = make_order(-4, 1);
    const Order eisenstein = make_order(-3, 1);
    for (std::int64_t n = 1; n <= 50; ++n) {
        const bool g_want = n == 1 || n == 2 || n == 4;
        s.expect(qf_cyclic_isogeny_exists(gauss, n) == g_want,
                 [&](std::ostream& os) {
                     os << "delta=-4 n=" << n << " want " << g_want;
                 });
        const bool e_want = n == 1 || n == 2 || n == 3 || n == 6 || n == 9;
        s.expect(qf_cyclic_isogeny_exists(eisenstein, n) == e_want,
                 [&](std::ostream& os) {
                     os << "delta=-3 n=" << n << " want " << e_want;
                 });
    }
    return s.take();
}

// ---------------------------------------------------------------------------
// Depth suites.

// For delta < -4, a K(f)-rational cyclic l^b-isogeny exists iff delta is a
// square mod 4*l^b, so the depth supremum must match the largest square level
// (or stay square through the horizon when unbounded).
SuiteResult suite_depth_square(const VerifyConfig& cfg) {
    Suite s("depth-square");
    const auto primes = primes_up_to(cfg.depth_max_ell);
    for (const Order& o : orders_up_to(cfg.depth_abs_delta)) {
        if (o.delta >= -4) continue;
        for (std::int64_t ell : primes) {
            const IsogenyDepth d = isogeny_depth(o, ell);
            int last_square = 0;
            bool downward_closed = true;
            bool past_end = false;
            for (int b = 0; b <= cfg.depth_square_horizon; ++b) {
                const bool sq =
                    is_square_mod(o.delta, checked_mul(4, checked_pow(ell, b)));
                if (sq && past_end) downward_closed = false;
                if (sq) last_square = b;
                if (!sq) past_end = true;
            }
            s.expect(downward_closed, [&](std::ostream& os) {
                os << order_tag(o) << " ell=" << ell
                   << " square levels are not downward closed";
            });
            if (d.m_sup.unbounded) {
                const Splitting kind = splitting_case(o, ell).kind;
                const bool split = kind == Splitting::SplitPrimeToF ||
                                   kind == Splitting::SplitAboveF;
                s.expect(last_square == cfg.depth_square_horizon && split,
                         [&](std::ostream& os) {
                             os << order_tag(o) << " ell=" << ell
                                << " unbounded depth but squares stop at b="
                                << last_square;
                         });
            } else {
                s.expect(d.m_sup.value == last_square &&
                             d.m_sup.value < cfg.depth_square_horizon,
                         [&](std::ostream& os) {
                             os << order_tag(o) << " ell=" << ell << " sup="
                                << d.m_sup.value << " last square b=" << last_square;
                         });
            }
        }
    }
    return s.take();
}

// Shape constraints on the depth pair: m <= M, unboundedness exactly in the
// split cases, m >= 1 when ell | delta, and the closed form away from delta.
SuiteResult suite_depth_shape(const VerifyConfig& cfg) {
    Suite s("depth-shape");
    for (const Order& o : orders_up_to(cfg.depth_abs_delta)) {
        std::vector<std::int64_t> ells = primes_up_to(cfg.depth_max_ell);
        for (const auto& [p, e] : factorize(-o.delta)) {
            if (p > cfg.depth_max_ell) ells.push_back(p);
        }
        for (std::int64_t ell : ells) {
            const IsogenyDepth d = isogeny_depth(o, ell);
            const Splitting kind = splitting_case(o, ell).kind;
            const bool split = kind == Splitting::SplitPrimeToF ||
                               kind == Splitting::SplitAboveF;
            s.expect(d.m_sup.at_least(d.m), [&](std::ostream& os) {
                os << order_tag(o) << " ell=" << ell << " m=" << d.m
                   << " exceeds its supremum";
            });
            s.expect(d.m_sup.unbounded == (kind == Splitting::SplitPrimeToF ||
                                           kind == Splitting::SplitAboveF),
                     [&](std::ostream& os) {
                         os << order_tag(o) << " ell=" << ell << " unbounded="
                            << d.m_sup.unbounded << " kind="
                            << splitting_name(kind);
                     });
            if (o.delta % ell == 0) {
                s.expect(d.m >= 1, [&](std::ostream& os) {
                    os << order_tag(o) << " ell=" << ell
                       << " divides delta but m=" << d.m;
                });
            } else if (split) {
                s.expect(d.m == (ell == 2 ? 1 : 0), [&](std::ostream& os) {
                    os << order_tag(o) << " ell=" << ell << " split away from "
                       << "delta but m=" << d.m;
                });
            } else {
                const IsogenyDepth want = (o.delta == -3 && ell == 2)
                                              ? IsogenyDepth{1, DepthBound::finite(1)}
                                              : IsogenyDepth{0, DepthBound::finite(0)};
                s.expect(d == want, [&](std::ostream& os) {
                    os << order_tag(o) << " ell=" << ell
                       << " inert away from delta but (m, sup) != expected";
                });
            }
        }
    }
    return s.take();
}

// ---------------------------------------------------------------------------
// Rational-degree suites.

// Independent restatement of the prime-power doubling factor as an explicit
// table on (splitting of ell, c = ord_ell(f), b), bypassing the (m, M) ladder.
int explicit_factor(const Order& o, std::int64_t ell, int b) {
    const int c = ord_p(o.f, ell);
    if (o.delta % ell == 0) {
        const int chi_k = kronecker(o.delta_k, ell);
        if (chi_k == 0) {
            if (ell != 2) return 1;
            if (c == 0) return 1;
            if (ord_p(o.delta_k, 2) == 3) return 1;
            return b <= 2 * c ? 1 : 2;
        }
        if (ell == 2) {
            if (c == 1) return b == 1 ? 1 : 2;
            return b <= 2 * c - 2 ? 1 : 2;
        }
        if (chi_k == 1) return b <= 2 * c ? 1 : 2;
        return 1;
    }
    if (kronecker(o.delta, ell) == 1) return (ell == 2 && b == 1) ? 1 : 2;
    return 1;
}

SuiteResult suite_qf_ladder_table(const VerifyConfig& cfg) {
    Suite s("qf-ladder-table");
    for (const Order& o : orders_up_to(cfg.qf_agreement_abs_delta)) {
        std::vector<std::int64_t> ells = primes_up_to(13);
        for (const auto& [p, e] : factorize(-o.delta)) {
            if (p > 13) ells.push_back(p);
        }
        for (std::int64_t ell : ells) {
            for (int b = 1;; ++b) {
                if (checked_pow(ell, b) > cfg.qf_agreement_max_level) break;
                const int expected = explicit_factor(o, ell, b);
                const int got = t_qf_prime_power(o, ell, b).second.factor;
                s.expect(got == expected, [&](std::ostream& os) {
                    os << order_tag(o) << " ell=" << ell << " b=" << b
                       << " factor=" << got << " want=" << expected;
                });
            }
        }
    }
    return s.take();
}

// Every Q(f)-side answer is 1x or 2x the K(f)-side one, with the factor
// assembled from the prime-power parts exactly as the traces claim.
SuiteResult suite_qf_sandwich(const VerifyConfig& cfg) {
    Suite s("qf-sandwich");
    for (const Order& o : orders_up_to(cfg.max_abs_delta)) {
        for (std::int64_t n = 1; n <= cfg.max_n; ++n) {
            for (std::int64_t m = 1; m <= n; ++m) {
                if (n % m != 0) continue;
                const auto [ans, trace] = t_qf_full_traced(o, m, n);
                const DegreeAnswer kf = t_kf(o, m, n);
                const bool shape_ok =
                    (trace.factor == 1 || trace.factor == 2) &&
                    ans.value == trace.factor * kf.value &&
                    ans.base == BaseField::QF && !ans.multiples_closed;
                s.expect(shape_ok, [&](std::ostream& os) {
                    os << order_tag(o) << " m=" << m << " n=" << n
                       << " qf=" << ans.value << " kf=" << kf.value
                       << " factor=" << trace.factor;
                });

                int expected = 0;
                if (m >= 3) {
                    expected = 2;
                } else if (m == 1) {
                    expected = 1;
                    for (const auto& [p, e] : factorize(n)) {
                        if (t_qf_prime_power(o, p, e).second.factor == 2)
                            expected = 2;
                    }
                } else {
                    expected = t_qf_2_2b(o, ord_p(n, 2)).second.factor;
                    for (const auto& [p, e] : factorize(n)) {
                        if (p != 2 && t_qf_prime_power(o, p, e).second.factor == 2)
                            expected = 2;
                    }
                }
                s.expect(trace.factor == expected, [&](std::ostream& os) {
                    os << order_tag(o) << " m=" << m << " n=" << n << " factor="
                       << trace.factor << " expected=" << expected;
                });
                if (m == 2 && o.delta % 2 != 0) {
                    s.expect(trace.factor == 2, [&](std::ostream& os) {
                        os << order_tag(o) << " n=" << n
                           << " odd delta with full 2-torsion must double";
                    });
                }
            }
        }
    }
    return s.take();
}

// ---------------------------------------------------------------------------
// Field-arithmetic suites.

SuiteResult suite_class_number_recount(const VerifyConfig& cfg) {
    Suite s("class-number-recount");
    const std::pair<std::int64_t, std::int64_t> anchors[] = {
        {-3, 1}, {-4, 1}, {-23, 3}, {-47, 5}};
    for (const auto& [delta, h] : anchors) {
        s.expect(class_number(delta) == h, [&, delta = delta, h = h](std::ostream& os) {
            os << "delta=" << delta << " h=" << class_number(delta)
               << " want=" << h;
        });
    }
    for (const Order& o : orders_up_to(cfg.recount_abs_delta)) {
        const std::int64_t a = class_number(o.delta);
        const std::int64_t b = class_number_recount(o.delta);
        s.expect(a == b, [&](std::ostream& os) {
            os << "delta=" << o.delta << " count=" << a << " recount=" << b;
        });
    }
    return s.take();
}

// The relative degree [K(l*f') : K(1)] equals [K(f') : K(1)] exactly when the
// explicit coincidence rule fires.
SuiteResult suite_coincidence_degrees(const VerifyConfig& cfg) {
    Suite s("coincidence-degrees");
    for (const Order& o : orders_up_to(cfg.coincidence_abs_delta)) {
        if (o.f < 2) continue;
        for (const auto& [ell, e] : factorize(o.f)) {
            const Order base = make_order(o.delta_k, o.f / ell);
            const bool equal = ring_class_relative_degree(o) ==
                               ring_class_relative_degree(base);
            const bool rule = ring_class_coincidence(base, ell);
            s.expect(equal == rule, [&, ell = ell](std::ostream& os) {
                os << order_tag(base) << " ell=" << ell << " degrees equal="
                   << equal << " coincidence rule=" << rule;
            });
        }
    }
    return s.take();
}

// ---------------------------------------------------------------------------
// Dual-isogeny suite.

SuiteResult suite_dual_identities() {
    Suite s("dual-identities");
    auto check = [&](const TorsionModuleSpec& spec, const char* what) {
        const AbelianPair module = module_structure(spec);
        const std::int64_t kernel = kernel_intersection(spec);
        const AbelianPair image = dual_image(spec);
        const bool ok =
            module.inv1 >= 0 && module.inv1 <= module.inv2 &&
            image.inv1 >= 0 && image.inv1 <= image.inv2 &&
            kernel >= 0 && kernel <= spec.c && kernel <= module.inv1 &&
            image.order_exponent() + kernel == module.order_exponent() &&
            image.exponent() == module.exponent() &&
            image.inv1 == module.inv1 - kernel;
        s.expect(ok, [&](std::ostream& os) {
            os << what << " ell=" << spec.ell << " c=" << spec.c << " a=" << spec.a
               << " b=" << spec.b << " d=" << spec.d;
        });
    };
    for (std::int64_t ell : {std::int64_t{2}, std::int64_t{3}, std::int64_t{5}}) {
        for (std::int64_t c = 0; c <= 4; ++c) {
            for (std::int64_t b = 0; b <= 8; ++b) {
                for (std::int64_t a = 0; a <= b; ++a)
                    check(TorsionModuleSpec::split(ell, c, a, b), "split");
                check(TorsionModuleSpec::ramified(ell, c, b), "ramified");
                check(TorsionModuleSpec::inert(ell, c, b), "inert");
            }
        }
    }
    return s.take();
}

}  // namespace

std::vector<Order> orders_up_to(std::int64_t cap) {
    if (cap < 3) throw invalid_input("orders_up_to: cap must be >= 3");
    std::vector<Order> out;
    for (std::int64_t d = 3; d <= cap; ++d) {
        if (d % 4 != 0 && d % 4 != 3) continue;
        out.push_back(order_from_delta(-d, cap));
    }
    return out;
}

std::vector<SuiteResult> run_verify(const VerifyConfig& config) {
    if (config.max_abs_delta < 3 || config.max_n < 1 || config.oracle_cap < 1 ||
        config.triangle_abs_delta < 5 || config.triangle_max_n < 1 ||
        config.depth_abs_delta < 5 || config.depth_max_ell < 2 ||
        config.depth_square_horizon < 8 || config.qf_agreement_abs_delta < 3 ||
        config.qf_agreement_max_level < 2 || config.recount_abs_delta < 3 ||
        config.coincidence_abs_delta < 3) {
        throw invalid_input("run_verify: config bounds are too small");
    }
    if (config.workers < 1) {
        throw invalid_input("run_verify: workers must be >= 1");
    }

    const OrbitBank bank = build_orbit_bank(config);

    std::vector<SuiteResult> results;
    results.push_back(suite_units_count(config, bank));
    results.push_back(suite_torsion_image(config, bank));
    results.push_back(suite_free_action(bank));
    results.push_back(suite_w_scaling(bank));
    results.push_back(suite_t_tilde_oracle(bank, config.inject_fault));
    results.push_back(suite_orbit_divisibility(bank));
    results.push_back(suite_t_kf_oracle(bank));
    results.push_back(suite_crt_multiplicativity(bank));
    results.push_back(suite_ell_squared_census(bank));
    results.push_back(suite_isogeny_triangle(config));
    results.push_back(suite_isogeny_necessity(config));
    results.push_back(suite_gauss_eisenstein_sets());
    results.push_back(suite_depth_square(config));
    results.push_back(suite_depth_shape(config));
    results.push_back(suite_qf_ladder_table(config));
    results.push_back(suite_qf_sandwich(config));
    results.push_back(suite_class_number_recount(config));
    results.push_back(suite_coincidence_degrees(config));
    results.push_back(suite_dual_identities());
    return results;
}

}  // namespace cmdeg
