#ifndef LNCNET_COMMON_HPP
#define LNCNET_COMMON_HPP

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lncnet {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Raised when an input is valid but exceeds a configured search/table budget.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace runtime {

struct limits {
    // Largest modulus accepted by the exhaustive sumset oracle.
    std::atomic<unsigned> oracle_modulus{16};
    // Largest prime-power bound a q_min / q*_max scan may sieve.
    std::atomic<u64> scan_bound{u64(1) << 22};
    // Largest number of candidate receiver subsets a network build may enumerate.
    std::atomic<u64> build_subsets{u64(1) << 22};
    // Worker threads the oracle may fan out to.
    std::atomic<unsigned> workers{1};
};

inline limits& config() {
    static limits l;
    return l;
}

inline unsigned oracle_limit() { return config().oracle_modulus.load(); }
inline u64 scan_limit() { return config().scan_bound.load(); }
inline u64 build_limit() { return config().build_subsets.load(); }
inline unsigned max_workers() { return config().workers.load(); }

inline void set_oracle_limit(unsigned n) { config().oracle_modulus.store(n); }
inline void set_scan_limit(u64 n) { config().scan_bound.store(n); }
inline void set_build_limit(u64 n) { config().build_subsets.store(n); }
inline void set_max_workers(unsigned n) { config().workers.store(n == 0 ? 1 : n); }

}  // namespace runtime

}  // namespace lncnet

#endif  // LNCNET_COMMON_HPP
