#ifndef LNCNET_GF_HPP
#define LNCNET_GF_HPP

#include <vector>

#include "lncnet/prime.hpp"

namespace lncnet {

namespace detail {

using poly = std::vector<unsigned>;  // coefficients, lowest degree first

inline void poly_trim(poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline poly poly_mulmod(const poly& a, const poly& b, const poly& mod, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + u64(a[i]) * b[j]) % p;
    // reduce by the monic modulus
    const std::size_t k = mod.size() - 1;
    for (std::size_t d = acc.size(); d-- > k;) {
        u64 c = acc[d] % p;
        if (c == 0) continue;
        acc[d] = 0;
        for (std::size_t i = 0; i < k; ++i) acc[d - k + i] = (acc[d - k + i] + c * (p - mod[i] % p)) % p;
    }
    poly out(acc.begin(), acc.begin() + std::min(acc.size(), k));
    poly_trim(out);
    return out;
}

inline poly poly_powmod(poly base, u64 e, const poly& mod, u64 p) {
    poly r{1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

inline poly poly_mod(poly a, const poly& m, u64 p) {
    poly_trim(a);
    while (a.size() >= m.size()) {
        u64 lead = a.back() % p;
        // m is not required monic here: scale by inverse of its leading coefficient
        u64 inv = powmod(m.back() % p, p - 2, p);
        u64 c = mulmod(lead, inv, p);
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = unsigned((a[shift + i] + c * (p - m[i] % p)) % p);
        poly_trim(a);
    }
    return a;
}

inline poly poly_gcd(poly a, poly b, u64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f monic of degree k: irreducible iff it has no factor of degree <= k/2.
inline bool poly_irreducible(const poly& f, u64 p) {
    const std::size_t k = f.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    poly x{0, 1};
    poly t = x;
    for (std::size_t i = 1; i <= k / 2; ++i) {
        t = poly_powmod(t, p, f, p);  // t = x^(p^i) mod f
        poly diff = t;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = unsigned((u64(diff[1]) + p - 1) % p);
        poly_trim(diff);
        poly g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace detail

struct Subgroup {
    u64 order;
    std::vector<u64> elements;  // ascending element codes
};

/* GF(p^k) with explicit log/exp tables over a canonical modulus.
   Elements are coefficient vectors packed as base-p integers in [0, q);
   0 encodes the zero element. The modulus is the lexicographically
   smallest (low-degree-first) monic irreducible polynomial of degree k,
   and the primitive element is the smallest element code of order q-1. */
class Field {
public:
    static constexpr u64 kTableLimit = u64(1) << 20;

    explicit Field(u64 q) {
        auto pp = as_prime_power(q);
        if (!pp) throw std::invalid_argument("Field: " + std::to_string(q) + " is not a prime power");
        if (q > kTableLimit)
            throw capacity_error("Field: " + std::to_string(q) + " exceeds the table limit");
        q_ = q;
        p_ = pp->p;
        k_ = pp->k;
        find_modulus();
        find_primitive();
        build_tables();
    }

    u64 q() const { return q_; }
    u64 p() const { return p_; }
    unsigned k() const { return k_; }
    u64 xi() const { return xi_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    u64 add(u64 a, u64 b) const {
        check(a), check(b);
        if (p_ == 2) return a ^ b;
        u64 r = 0, m = 1;
        while (a || b) {
            r += (a % p_ + b % p_) % p_ * m;
            a /= p_, b /= p_, m *= p_;
        }
        return r;
    }

    u64 neg(u64 a) const {
        check(a);
        if (p_ == 2) return a;
        u64 r = 0, m = 1;
        while (a) {
            u64 d = a % p_;
            r += (d ? p_ - d : 0) * m;
            a /= p_, m *= p_;
        }
        return r;
    }

    u64 sub(u64 a, u64 b) const { return add(a, neg(b)); }

    u64 mul(u64 a, u64 b) const {
        check(a), check(b);
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }

    u64 inv(u64 a) const {
        check(a);
        if (a == 0) throw std::domain_error("Field: inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }

    u64 pow(u64 a, i64 e) const {
        check(a);
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            throw std::domain_error("Field: zero to a negative power");
        }
        i64 n = i64(q_ - 1);
        i64 r = ((e % n) + n) % n;
        return exp_[(log_[a] * u64(r)) % (q_ - 1)];
    }

    // discrete logarithm base xi, in [0, q-2]
    u64 log(u64 x) const {
        check(x);
        if (x == 0) throw std::domain_error("Field: log of zero");
        return log_[x];
    }

    u64 exp(u64 i) const { return exp_[i % (q_ - 1)]; }

    // the unique multiplicative subgroup of order d, for d | q-1
    Subgroup subgroup_of_order(u64 d) const {
        if (d == 0 || (q_ - 1) % d != 0)
            throw std::invalid_argument("subgroup_of_order: " + std::to_string(d) +
                                        " does not divide " + std::to_string(q_ - 1));
        std::vector<u64> el;
        el.reserve(d);
        u64 step = (q_ - 1) / d;
        for (u64 j = 0; j < d; ++j) el.push_back(exp_[(j * step) % (q_ - 1)]);
        std::sort(el.begin(), el.end());
        return Subgroup{d, el};
    }

    // cosets of G partitioning the multiplicative group; the first one is G
    std::vector<std::vector<u64>> cosets(const Subgroup& g) const {
        std::vector<std::vector<u64>> out;
        std::vector<bool> seen(q_, false);
        for (u64 i = 0; i < q_ - 1; ++i) {
            u64 rep = exp_[i];
            if (seen[rep]) continue;
            std::vector<u64> c;
            c.reserve(g.order);
            for (u64 e : g.elements) {
                u64 x = mul(rep, e);
                seen[x] = true;
                c.push_back(x);
            }
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        }
        return out;
    }

private:
    void check(u64 a) const {
        if (a >= q_) throw std::invalid_argument("Field: element out of range");
    }

    void find_modulus() {
        // lexicographically smallest (low-degree-first) monic irreducible of degree k
        std::vector<unsigned> c(k_, 0);
        while (true) {
            detail::poly f(c.begin(), c.end());
            f.push_back(1);
            if (detail::poly_irreducible(f, p_)) {
                modulus_ = f;
                return;
            }
            std::size_t i = 0;
            while (i < k_ && c[i] == p_ - 1) c[i++] = 0;
            if (i == k_) throw std::logic_error("Field: no irreducible polynomial found");
            ++c[i];
        }
    }

    detail::poly decode(u64 a) const {
        detail::poly out;
        while (a) {
            out.push_back(unsigned(a % p_));
            a /= p_;
        }
        return out;
    }

    u64 encode(const detail::poly& f) const {
        u64 a = 0;
        for (std::size_t i = f.size(); i-- > 0;) a = a * p_ + f[i];
        return a;
    }

    u64 raw_mul(u64 a, u64 b) const {
        return encode(detail::poly_mulmod(decode(a), decode(b), modulus_, p_));
    }

    u64 raw_pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = raw_mul(r, a);
            a = raw_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    void find_primitive() {
        auto primes = prime_factors(q_ - 1);
        for (u64 cand = 1; cand < q_; ++cand) {
            bool ok = true;
            for (u64 r : primes) {
                if (raw_pow(cand, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                xi_ = cand;
                return;
            }
        }
        throw std::logic_error("Field: no primitive element found");
    }

    void build_tables() {
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        u64 x = 1;
        for (u64 i = 0; i < q_ - 1; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = raw_mul(x, xi_);
        }
        if (x != 1) throw std::logic_error("Field: primitive element order mismatch");
    }

    u64 q_ = 0, p_ = 0;
    unsigned k_ = 0;
    std::vector<unsigned> modulus_;
    u64 xi_ = 0;
    std::vector<u64> exp_, log_;
};

}  // namespace lncnet

#endif  // LNCNET_GF_HPP
