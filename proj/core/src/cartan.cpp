#include "cmdeg/cartan.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace cmdeg {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
    return ((a % m) + m) % m;
}

void check_oracle_cap(std::int64_t n, std::int64_t cap) {
    if (n < 1) throw invalid_input("level must be >= 1");
    if (n > cap) {
        throw cap_exceeded("oracle level " + std::to_string(n) + " exceeds cap " +
                           std::to_string(cap));
    }
}

}  // namespace

ModRing::ModRing(const Order& order, std::int64_t n) : n_(n) {
    if (n < 1) throw invalid_input("modulus must be >= 1");
    delta_mod_ = mod_pos(order.delta, n);
    // (delta^2 - delta)/4 is integral for any discriminant.
    const std::int64_t e = exact_div(checked_mul(order.delta, order.delta) - order.delta, 4);
    e_mod_ = mod_pos(e, n);
}

RingElement ModRing::add(RingElement a, RingElement b) const {
    return {(a.u + b.u) % n_, (a.v + b.v) % n_};
}

RingElement ModRing::neg(RingElement a) const {
    return {mod_pos(-a.u, n_), mod_pos(-a.v, n_)};
}

RingElement ModRing::mul(RingElement a, RingElement b) const {
    // (u1 + v1 w)(u2 + v2 w) with w^2 = delta*w - e.
    const std::int64_t vv = a.v * b.v % n_;
    const std::int64_t u = mod_pos(a.u * b.u - e_mod_ * vv, n_);
    const std::int64_t v = mod_pos(a.u * b.v + a.v * b.u + delta_mod_ * vv, n_);
    return {u, v};
}

std::int64_t ModRing::norm(RingElement a) const {
    const std::int64_t uu = a.u * a.u % n_;
    const std::int64_t uv = a.u * a.v % n_;
    const std::int64_t vv = a.v * a.v % n_;
    return mod_pos(uu + delta_mod_ * uv + e_mod_ * vv, n_);
}

bool ModRing::is_unit(RingElement a) const {
    return gcd_i64(norm(a), n_) == 1;
}

std::int64_t ModRing::additive_order(RingElement a) const {
    return n_ / gcd_i64(n_, gcd_i64(a.u, a.v));
}

std::int64_t cartan_order(const Order& order, std::int64_t n, std::int64_t max_n) {
    check_oracle_cap(n, max_n);
    std::int64_t val = checked_mul(n, n);
    for (auto [p, k] : factorize(n)) {
        (void)k;
        val = exact_div(val, p * p);
        val = checked_mul(val, (p - kronecker(order.delta, p)) * (p - 1));
    }
    return val;
}

std::vector<RingElement> enumerate_units(const Order& order, std::int64_t n,
                                         std::int64_t max_n) {
    check_oracle_cap(n, max_n);
    const ModRing ring(order, n);
    std::vector<RingElement> units;
    for (std::int64_t u = 0; u < n; ++u) {
        for (std::int64_t v = 0; v < n; ++v) {
            const RingElement x{u, v};
            if (ring.is_unit(x)) units.push_back(x);
        }
    }
    return units;
}

std::vector<RingElement> torsion_unit_image(const Order& order, std::int64_t n,
                                            std::int64_t max_n) {
    check_oracle_cap(n, max_n);
    const ModRing ring(order, n);
    const RingElement gen = (order.delta < -4)
                                ? ring.neg(ring.one())        // -1
                                : RingElement{mod_pos(2, n),  // omega + 2: i resp. zeta_6
                                              mod_pos(1, n)};
    std::vector<RingElement> group;
    RingElement x = ring.one();
    do {
        group.push_back(x);
        x = ring.mul(x, gen);
    } while (!(x == ring.one()));
    std::sort(group.begin(), group.end(), [&](RingElement a, RingElement b) {
        return ring.index_of(a) < ring.index_of(b);
    });
    return group;
}

OrbitReport pair_orbits(const Order& order, std::int64_t m, std::int64_t n,
                        std::int64_t max_n) {
    check_oracle_cap(n, max_n);
    if (m < 1 || n % m != 0) throw invalid_input("pair_orbits requires M | N");

    OrbitReport report;
    if (n == 1) {
        report.orbit_sizes = {1};
        report.reduced_orbit_sizes = {1};
        report.min_size = 1;
        report.min_reduced_size = 1;
        report.pair_count = 1;
        return report;
    }

    const ModRing ring(order, n);
    const std::int64_t sz = ring.size();  // n^2 elements

    std::vector<std::int64_t> ord(sz);
    for (std::int64_t i = 0; i < sz; ++i) ord[i] = ring.additive_order(ring.element_at(i));

    std::vector<std::int64_t> p_candidates;
    for (std::int64_t i = 0; i < sz; ++i) {
        if (ord[i] == m) p_candidates.push_back(i);
    }

    // <P,Q> has cardinality M*N iff <P> meets <Q> trivially iff (M/p)P misses
    // <Q> for every prime p | M. Precompute those scaled points per P.
    std::vector<std::int64_t> m_primes;
    for (auto [p, k] : factorize(m)) {
        (void)k;
        m_primes.push_back(p);
    }
    std::vector<std::vector<std::int64_t>> scaled(m_primes.size());
    for (std::size_t k = 0; k < m_primes.size(); ++k) {
        scaled[k].resize(p_candidates.size());
        const std::int64_t reps = m / m_primes[k];
        for (std::size_t t = 0; t < p_candidates.size(); ++t) {
            const RingElement p = ring.element_at(p_candidates[t]);
            RingElement s{0, 0};
            for (std::int64_t i = 0; i < reps; ++i) s = ring.add(s, p);
            scaled[k][t] = ring.index_of(s);
        }
    }

    std::vector<std::uint8_t> valid(sz * sz, 0);
    std::vector<std::uint8_t> in_q(sz);
    std::int64_t pair_count = 0;
    for (std::int64_t qi = 0; qi < sz; ++qi) {
        if (ord[qi] != n) continue;
        const RingElement q = ring.element_at(qi);
        std::fill(in_q.begin(), in_q.end(), 0);
        RingElement acc{0, 0};
        for (std::int64_t k = 0; k < n; ++k) {
            in_q[ring.index_of(acc)] = 1;
            acc = ring.add(acc, q);
        }
        for (std::size_t t = 0; t < p_candidates.size(); ++t) {
            bool independent = true;
            for (std::size_t k = 0; k < m_primes.size(); ++k) {
                if (in_q[scaled[k][t]]) {
                    independent = false;
                    break;
                }
            }
            if (independent) {
                valid[p_candidates[t] * sz + qi] = 1;
                ++pair_count;
            }
        }
    }
    report.pair_count = pair_count;

    const std::vector<RingElement> units = enumerate_units(order, n, max_n);
    const std::vector<RingElement> torsion = torsion_unit_image(order, n, max_n);

    // Canonical representative of a pair class under the torsion-unit image:
    // least pair index among {(tP, tQ)}.
    auto canon = [&](RingElement p, RingElement q) {
        std::int64_t best = -1;
        for (const RingElement& t : torsion) {
            const RingElement tp = ring.mul(t, p);
            const RingElement tq = ring.mul(t, q);
            const std::int64_t idx = ring.index_of(tp) * sz + ring.index_of(tq);
            if (best < 0 || idx < best) best = idx;
        }
        return best;
    };

    std::vector<std::uint8_t> visited(sz * sz, 0);
    std::vector<std::int64_t> reps;
    reps.reserve(units.size());
    std::int64_t seen = 0;
    for (std::int64_t idx = 0; idx < sz * sz && seen < pair_count; ++idx) {
        if (!valid[idx] || visited[idx]) continue;
        const RingElement p0 = ring.element_at(idx / sz);
        const RingElement q0 = ring.element_at(idx % sz);
        std::int64_t orbit = 0;
        reps.clear();
        for (const RingElement& g : units) {
            const RingElement gp = ring.mul(g, p0);
            const RingElement gq = ring.mul(g, q0);
            const std::int64_t j = ring.index_of(gp) * sz + ring.index_of(gq);
            assert(valid[j]);
            if (!visited[j]) {
                visited[j] = 1;
                ++orbit;
            }
            reps.push_back(canon(gp, gq));
        }
        seen += orbit;
        std::sort(reps.begin(), reps.end());
        const std::int64_t reduced = std::unique(reps.begin(), reps.end()) - reps.begin();
        report.orbit_sizes.push_back(orbit);
        report.reduced_orbit_sizes.push_back(reduced);
    }
    assert(seen == pair_count);

    if (report.orbit_sizes.empty()) {
        throw invalid_input("no (M,N)-pairs exist for this order and level");
    }
    std::sort(report.orbit_sizes.begin(), report.orbit_sizes.end());
    std::sort(report.reduced_orbit_sizes.begin(), report.reduced_orbit_sizes.end());
    report.min_size = report.orbit_sizes.front();
    report.min_reduced_size = report.reduced_orbit_sizes.front();
    return report;
}

MinOrbit min_orbit(const Order& order, std::int64_t m, std::int64_t n, std::int64_t max_n) {
    const OrbitReport r = pair_orbits(order, m, n, max_n);
    return {r.min_size, r.min_reduced_size};
}

}  // namespace cmdeg
