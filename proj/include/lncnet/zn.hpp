#ifndef LNCNET_ZN_HPP
#define LNCNET_ZN_HPP

#include <bit>
#include <future>
#include <span>
#include <thread>
#include <vector>

#include "lncnet/prime.hpp"

namespace lncnet {

// A subset of Z_n with bitset storage.
class ZnSet {
public:
    explicit ZnSet(u64 n) : n_(n), w_((n + 63) / 64, 0) {
        if (n == 0) throw std::invalid_argument("ZnSet: modulus must be positive");
    }

    ZnSet(u64 n, std::initializer_list<u64> xs) : ZnSet(n) {
        for (u64 x : xs) insert(x);
    }

    ZnSet(u64 n, const std::vector<u64>& xs) : ZnSet(n) {
        for (u64 x : xs) insert(x);
    }

    static ZnSet full(u64 n) {
        ZnSet s(n);
        for (u64 x = 0; x < n; ++x) s.insert(x);
        return s;
    }

    u64 modulus() const { return n_; }
    u64 size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(u64 x) const {
        x %= n_;
        return (w_[x >> 6] >> (x & 63)) & 1;
    }

    void insert(u64 x) {
        x %= n_;
        u64& word = w_[x >> 6];
        u64 bit = u64(1) << (x & 63);
        if (!(word & bit)) {
            word |= bit;
            ++count_;
        }
    }

    std::vector<u64> elements() const {
        std::vector<u64> out;
        out.reserve(count_);
        for (u64 x = 0; x < n_; ++x)
            if (contains(x)) out.push_back(x);
        return out;
    }

    // {x + d mod n : x in S}
    ZnSet shifted(u64 d) const {
        d %= n_;
        ZnSet r(n_);
        if (d == 0) {
            r.w_ = w_;
            r.count_ = count_;
            return r;
        }
        r.count_ = count_;
        for (u64 x = 0; x < n_; ++x)
            if (contains(x)) {
                u64 y = x + d;
                if (y >= n_) y -= n_;
                r.w_[y >> 6] |= u64(1) << (y & 63);
            }
        return r;
    }

    void merge_shifted(const ZnSet& s, u64 d) {
        d %= n_;
        for (u64 x = 0; x < n_; ++x)
            if (s.contains(x)) {
                u64 y = x + d;
                if (y >= n_) y -= n_;
                u64& word = w_[y >> 6];
                u64 bit = u64(1) << (y & 63);
                if (!(word & bit)) {
                    word |= bit;
                    ++count_;
                }
            }
    }

    bool operator==(const ZnSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const ZnSet& o) const { return !(*this == o); }

private:
    u64 n_;
    u64 count_ = 0;
    std::vector<u64> w_;
};

// {a + b mod n : a in A, b in B}; empty if either operand is empty.
inline ZnSet sumset(const ZnSet& a, const ZnSet& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("sumset: modulus mismatch");
    ZnSet r(a.modulus());
    if (a.empty() || b.empty()) return r;
    const ZnSet& small = a.size() <= b.size() ? a : b;
    const ZnSet& large = a.size() <= b.size() ? b : a;
    for (u64 x : small.elements()) r.merge_shifted(large, x);
    return r;
}

inline ZnSet iterated_sumset(std::span<const ZnSet> sets) {
    if (sets.empty()) throw std::invalid_argument("iterated_sumset: no sets");
    ZnSet acc = sets[0];
    for (std::size_t i = 1; i < sets.size(); ++i) acc = sumset(acc, sets[i]);
    return acc;
}

inline ZnSet iterated_sumset(const std::vector<ZnSet>& sets) {
    return iterated_sumset(std::span<const ZnSet>(sets));
}

// {g in Z_n : g + S = S}; a subgroup. For S empty or full this is all of Z_n.
inline ZnSet stabilizer(const ZnSet& s) {
    u64 n = s.modulus();
    ZnSet out(n);
    for (u64 g = 0; g < n; ++g)
        if (s.shifted(g) == s) out.insert(g);
    return out;
}

namespace detail {

inline u64 ceil_div(u64 a, u64 b) { return (a + b - 1) / b; }

// Per-position prefixes of the coset unions {0..ceil(c_j/d)-1} + H_d.
inline std::vector<ZnSet> coset_prefix_sets(u64 n, std::span<const u64> cards, u64 d) {
    std::vector<ZnSet> out;
    u64 step = n / d;
    for (u64 c : cards) {
        u64 blocks = ceil_div(c, d);
        std::vector<u64> u;
        u.reserve(blocks * d);
        for (u64 b = 0; b < blocks; ++b)
            for (u64 j = 0; j < d; ++j) u.push_back(b + j * step);
        std::sort(u.begin(), u.end());
        ZnSet t(n);
        for (u64 i = 0; i < c; ++i) t.insert(u[i]);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace detail

// |H| * (sum_i ceil(|A_i|/|H|) - (k-1)) with H the stabilizer of the full sumset.
inline u64 kneser_bound(std::span<const ZnSet> sets) {
    if (sets.empty()) throw std::invalid_argument("kneser_bound: no sets");
    for (const auto& s : sets)
        if (s.empty()) throw std::invalid_argument("kneser_bound: sets must be nonempty");
    ZnSet total = iterated_sumset(sets);
    u64 h = stabilizer(total).size();
    u64 acc = 0;
    for (const auto& s : sets) acc += detail::ceil_div(s.size(), h);
    return h * (acc - (sets.size() - 1));
}

inline u64 kneser_bound(const std::vector<ZnSet>& sets) {
    return kneser_bound(std::span<const ZnSet>(sets));
}

// min over divisors d of n of d * (sum_i ceil(c_i/d) - (k-1)).
inline u64 cd_bound(u64 n, std::span<const u64> cards) {
    if (n == 0) throw std::invalid_argument("cd_bound: modulus must be positive");
    if (cards.empty()) throw std::invalid_argument("cd_bound: no cardinalities");
    for (u64 c : cards)
        if (c < 1 || c > n) throw std::invalid_argument("cd_bound: cardinality out of range");
    u64 best = ~u64(0);
    for (u64 d : divisors(n)) {
        u64 acc = 0;
        for (u64 c : cards) acc += detail::ceil_div(c, d);
        best = std::min(best, d * (acc - (cards.size() - 1)));
    }
    return best;
}

inline u64 cd_bound(u64 n, const std::vector<u64>& cards) {
    return cd_bound(n, std::span<const u64>(cards));
}

struct MinSumset {
    u64 size;                  // exact minimum of |T_1 + ... + T_k|
    u64 divisor;               // smallest divisor attaining it
    std::vector<ZnSet> witness;  // sets of the requested cardinalities attaining size
};

/* Exact minimal sumset size over all subset tuples of the given cardinalities,
   with an attaining witness: per-divisor value min(n, d*(sum ceil(c_i/d)-(k-1))),
   minimized over d | n; witness sets are prefixes of coset unions
   {0..ceil(c_j/d*)-1} + H_{d*}. */
inline MinSumset exact_min_sumset(u64 n, std::span<const u64> cards) {
    if (n == 0) throw std::invalid_argument("exact_min_sumset: modulus must be positive");
    if (cards.empty()) throw std::invalid_argument("exact_min_sumset: no cardinalities");
    for (u64 c : cards)
        if (c < 1 || c > n) throw std::invalid_argument("exact_min_sumset: cardinality out of range");
    u64 best = ~u64(0), best_d = 0;
    for (u64 d : divisors(n)) {
        u64 acc = 0;
        for (u64 c : cards) acc += detail::ceil_div(c, d);
        u64 v = std::min(n, d * (acc - (cards.size() - 1)));
        if (v < best) {
            best = v;
            best_d = d;
        }
    }
    return MinSumset{best, best_d, detail::coset_prefix_sets(n, cards, best_d)};
}

inline MinSumset exact_min_sumset(u64 n, const std::vector<u64>& cards) {
    return exact_min_sumset(n, std::span<const u64>(cards));
}

namespace detail {

// --- mask machinery for the exhaustive oracle (n <= 30) ---

inline std::uint32_t mask_rot(std::uint32_t m, unsigned s, unsigned n) {
    s %= n;
    if (s == 0) return m;
    return ((m << s) | (m >> (n - s))) & ((n == 32 ? 0 : (std::uint32_t(1) << n)) - 1);
}

inline std::uint32_t mask_canon(std::uint32_t m, unsigned n) {
    std::uint32_t best = m;
    for (unsigned s = 1; s < n; ++s) best = std::min(best, mask_rot(m, s, n));
    return best;
}

inline std::uint32_t mask_sum(std::uint32_t a, std::uint32_t t, unsigned n) {
    std::uint32_t r = 0;
    while (t) {
        unsigned b = unsigned(std::countr_zero(t));
        t &= t - 1;
        r |= mask_rot(a, b, n);
    }
    return r;
}

// rotation-canonical representatives of all c-element subsets of Z_n
inline std::vector<std::uint32_t> mask_reps(unsigned n, unsigned c) {
    std::vector<std::uint32_t> out;
    const std::uint32_t limit = std::uint32_t(1) << n;
    std::uint32_t m = (c == 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << c) - 1);
    while (m < limit) {
        if (mask_canon(m, n) == m) out.push_back(m);
        // next combination with the same popcount (Gosper's hack)
        std::uint32_t lo = m & (~m + 1);
        std::uint32_t left = m + lo;
        if (left >= limit || left < m) break;
        m = left | (((m ^ left) >> 2) / lo);
    }
    return out;
}

}  // namespace detail

/* True minimum of |T_1 + ... + T_k| over all tuples with the given cardinalities,
   by exhaustive enumeration: every operand and every partial sumset is reduced to
   its translation-canonical representative, partial sumsets are memoized, and
   branches that already reach an achieved upper seed are cut. */
inline u64 brute_min_sumset(u64 n, std::span<const u64> cards, unsigned limit = 0) {
    if (limit == 0) limit = runtime::oracle_limit();
    if (n == 0) throw std::invalid_argument("brute_min_sumset: modulus must be positive");
    if (n > limit || n > 24)
        throw capacity_error("brute_min_sumset: modulus " + std::to_string(n) +
                             " exceeds the oracle limit");
    if (cards.empty()) throw std::invalid_argument("brute_min_sumset: no cardinalities");
    for (u64 c : cards)
        if (c < 1 || c > n) throw std::invalid_argument("brute_min_sumset: cardinality out of range");

    const unsigned nn = unsigned(n);
    std::vector<u64> cs(cards.begin(), cards.end());
    std::sort(cs.begin(), cs.end());

    // achieved upper seeds: interval prefixes and per-divisor coset-union prefixes
    u64 seed = ~u64(0);
    auto fold_size = [&](const std::vector<ZnSet>& sets) {
        return iterated_sumset(std::span<const ZnSet>(sets)).size();
    };
    {
        std::vector<ZnSet> ivs;
        for (u64 c : cs) {
            ZnSet t(n);
            for (u64 i = 0; i < c; ++i) t.insert(i);
            ivs.push_back(std::move(t));
        }
        seed = std::min(seed, fold_size(ivs));
    }
    for (u64 d : divisors(n))
        seed = std::min(seed, fold_size(detail::coset_prefix_sets(n, cs, d)));

    u64 best = seed;
    std::vector<std::vector<std::uint32_t>> reps;
    for (u64 c : cs) reps.push_back(detail::mask_reps(nn, unsigned(c)));

    std::vector<std::uint32_t> level = reps[0];
    for (std::size_t step = 1; step < cs.size(); ++step) {
        const auto& ts = reps[step];
        const bool last = step + 1 == cs.size();
        if (last) {
            auto scan = [&](std::size_t lo, std::size_t hi) {
                u64 local = best;
                for (std::size_t i = lo; i < hi; ++i)
                    for (std::uint32_t t : ts) {
                        u64 sz = std::popcount(detail::mask_sum(level[i], t, nn));
                        local = std::min(local, sz);
                    }
                return local;
            };
            unsigned workers = std::min<unsigned>(runtime::max_workers(),
                                                  std::max<std::size_t>(level.size() / 64, 1));
            if (workers > 1) {
                std::vector<std::future<u64>> futs;
                std::size_t chunk = (level.size() + workers - 1) / workers;
                for (unsigned w = 0; w < workers; ++w) {
                    std::size_t lo = w * chunk, hi = std::min(level.size(), lo + chunk);
                    if (lo >= hi) break;
                    futs.push_back(std::async(std::launch::async, scan, lo, hi));
                }
                for (auto& f : futs) best = std::min(best, f.get());
            } else {
                best = std::min(best, scan(0, level.size()));
            }
        } else {
            std::vector<bool> seen(std::size_t(1) << nn, false);
            std::vector<std::uint32_t> next;
            for (std::uint32_t a : level)
                for (std::uint32_t t : ts) {
                    std::uint32_t s = detail::mask_sum(a, t, nn);
                    if (u64(std::popcount(s)) >= best) continue;
                    std::uint32_t c2 = detail::mask_canon(s, nn);
                    if (!seen[c2]) {
                        seen[c2] = true;
                        next.push_back(c2);
                    }
                }
            level = std::move(next);
            if (level.empty()) break;
        }
    }
    return best;
}

inline u64 brute_min_sumset(u64 n, const std::vector<u64>& cards, unsigned limit = 0) {
    return brute_min_sumset(n, std::span<const u64>(cards), limit);
}

}  // namespace lncnet

#endif  // LNCNET_ZN_HPP
