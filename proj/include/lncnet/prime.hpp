#ifndef LNCNET_PRIME_HPP
#define LNCNET_PRIME_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "lncnet/common.hpp"

namespace lncnet {

struct PrimePower {
    u64 p;       // prime base
    unsigned k;  // exponent >= 1
    u64 q;       // p^k
};

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

inline u64 pollard_brent(u64 n) {
    if ((n & 1) == 0) return 2;
    u64 x0 = 2, c = 1;
    while (true) {
        u64 x = x0, y = x0, q = 1, g = 1, ys = 0;
        const unsigned m = 128;
        unsigned r = 1;
        while (g == 1) {
            x = y;
            for (unsigned i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (unsigned k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (unsigned i = 0; i < std::min(m, r - k); ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
        ++c, ++x0;
    }
}

inline void factor_into(u64 n, std::vector<std::pair<u64, unsigned>>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.emplace_back(n, 1);
        return;
    }
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) n /= p, ++e;
            out.emplace_back(p, e);
            if (n == 1) return;
            factor_into(n, out);
            return;
        }
    }
    u64 d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

// Prime factorization p1^e1 * ..., sorted by prime.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<u64, unsigned>> raw;
    detail::factor_into(n, raw);
    std::sort(raw.begin(), raw.end());
    std::vector<std::pair<u64, unsigned>> out;
    for (auto& [p, e] : raw) {
        if (!out.empty() && out.back().first == p)
            out.back().second += e;
        else
            out.emplace_back(p, e);
    }
    return out;
}

// All positive divisors of n, ascending.
inline std::vector<u64> divisors(u64 n) {
    auto f = factorize(n);
    std::vector<u64> out{1};
    for (auto& [p, e] : f) {
        std::size_t m = out.size();
        u64 pw = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pw *= p;
            for (std::size_t j = 0; j < m; ++j) out.push_back(out[j] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

namespace detail {

inline u64 iroot(u64 n, unsigned k) {
    if (k == 1) return n;
    u64 r = static_cast<u64>(std::pow(double(n), 1.0 / k));
    auto pw = [&](u64 b) -> u64 {
        u128 acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= b;
            if (acc > u128(~u64(0))) return ~u64(0);
        }
        return u64(acc);
    };
    while (r > 1 && pw(r) > n) --r;
    while (pw(r + 1) <= n) ++r;
    return r;
}

}  // namespace detail

// Decomposes n as p^k with p prime, if possible.
inline std::optional<PrimePower> as_prime_power(u64 n) {
    if (n < 2) throw std::invalid_argument("as_prime_power: n must be >= 2");
    if (is_prime(n)) return PrimePower{n, 1, n};
    for (unsigned k = 2; k <= 63; ++k) {
        u64 r = detail::iroot(n, k);
        if (r < 2) break;
        u128 acc = 1;
        for (unsigned i = 0; i < k; ++i) acc *= r;
        if (acc == n && is_prime(r)) return PrimePower{r, k, n};
    }
    return std::nullopt;
}

inline bool is_prime_power(u64 n) { return n >= 2 && as_prime_power(n).has_value(); }

// Ascending prime powers in [2, bound], via a sieve.
inline std::vector<u64> prime_powers_upto(u64 bound) {
    std::vector<u64> out;
    if (bound < 2) return out;
    if (bound > runtime::scan_limit())
        throw capacity_error("prime power scan bound " + std::to_string(bound) +
                             " exceeds the configured limit");
    std::vector<bool> composite(bound + 1, false);
    for (u64 i = 2; i * i <= bound; ++i) {
        if (composite[i]) continue;
        for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
    }
    for (u64 p = 2; p <= bound; ++p) {
        if (composite[p]) continue;
        for (u128 q = p; q <= bound; q *= p) out.push_back(u64(q));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lncnet

#endif  // LNCNET_PRIME_HPP
