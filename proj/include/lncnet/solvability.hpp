#ifndef LNCNET_SOLVABILITY_HPP
#define LNCNET_SOLVABILITY_HPP

#include <optional>

#include "lncnet/network.hpp"
#include "lncnet/zn.hpp"

namespace lncnet {

struct SolvabilityReport {
    NetworkParams params;
    u64 q = 0;
    bool solvable = false;
    std::optional<u64> witness_divisor;            // smallest divisor satisfying the bound
    std::vector<std::pair<u64, u64>> refutation;   // (divisor, lhs) for every divisor, when unsolvable
};

/* Closed-form solvability of the general network over GF(q): solvable iff
   some divisor d of q-1 has d*(sum_i ceil(d_i/d) - omega + 1) + 2 <= q. */
inline SolvabilityReport solvable_closed_form(const NetworkParams& params, u64 q) {
    params.validate();
    if (q < 2 || !is_prime_power(q))
        throw std::invalid_argument("solvable_closed_form: q must be a prime power >= 2");
    SolvabilityReport rep;
    rep.params = params;
    rep.q = q;
    for (u64 d : divisors(q - 1)) {
        u128 acc = 0;
        for (u64 di : params.degrees) acc += detail::ceil_div(di, d);
        u128 lhs = u128(d) * (acc - params.omega + 1) + 2;
        if (!rep.solvable && lhs <= q) {
            rep.solvable = true;
            rep.witness_divisor = d;
        }
        rep.refutation.emplace_back(d, u64(std::min<u128>(lhs, ~u64(0))));
    }
    if (rep.solvable) rep.refutation.clear();
    return rep;
}

/* Independent oracle: solvable iff some subsets T_i of Z_{q-1} with |T_i| = d_i
   have a sumset that does not exhaust Z_{q-1}. */
inline bool brute_force_solvable(const NetworkParams& params, u64 q, unsigned oracle_limit = 0) {
    params.validate();
    if (q < 2 || !is_prime_power(q))
        throw std::invalid_argument("brute_force_solvable: q must be a prime power >= 2");
    u64 n = q - 1;
    for (u64 di : params.degrees)
        if (di > n) return false;  // no such subsets exist
    return brute_min_sumset(n, params.degrees, oracle_limit) < n;
}

// Smallest prime power admitting a solution. Any q >= degree_sum - omega + 3
// is solvable via d = 1, so the search is finite.
inline u64 q_min(const NetworkParams& params) {
    params.validate();
    u64 bound = params.degree_sum() - params.omega + 3;
    for (u64 q : prime_powers_upto(2 * bound + 2))
        if (solvable_closed_form(params, q).solvable) return q;
    throw std::logic_error("q_min: no solvable prime power found below the bound");
}

// Largest prime power admitting no solution, or 1 if the network is solvable
// over every field. Bounded above by degree_sum - omega + 2.
inline u64 q_star_max(const NetworkParams& params) {
    params.validate();
    u64 bound = params.degree_sum() - params.omega + 2;
    auto pps = prime_powers_upto(bound);
    for (auto it = pps.rbegin(); it != pps.rend(); ++it)
        if (!solvable_closed_form(params, *it).solvable) return *it;
    return 1;
}

struct FieldRange {
    u64 q_min;
    u64 q_star_max;
};

inline FieldRange field_range(const NetworkParams& params) {
    return FieldRange{q_min(params), q_star_max(params)};
}

/* Probe for odd characteristics: once solvable over GF(p^k), solvable over
   GF(p^k') for every larger k' in the range. Vacuously true when nothing in
   the range is solvable. */
inline bool check_odd_char_monotonicity(const NetworkParams& params, u64 p, unsigned k_lo,
                                        unsigned k_hi) {
    params.validate();
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("check_odd_char_monotonicity: p must be an odd prime");
    if (k_lo < 1 || k_lo > k_hi)
        throw std::invalid_argument("check_odd_char_monotonicity: bad exponent range");
    bool seen_solvable = false;
    u64 q = 1;
    for (unsigned k = 1; k <= k_hi; ++k) {
        if (q > (u64(1) << 62) / p) throw capacity_error("check_odd_char_monotonicity: p^k overflows");
        q *= p;
        if (k < k_lo) continue;
        bool s = solvable_closed_form(params, q).solvable;
        if (seen_solvable && !s) return false;
        seen_solvable = seen_solvable || s;
    }
    return true;
}

}  // namespace lncnet

#endif  // LNCNET_SOLVABILITY_HPP
