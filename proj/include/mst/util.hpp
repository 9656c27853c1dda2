#ifndef MST_UTIL_HPP_
#define MST_UTIL_HPP_

#include <cstdint>
#include <functional>
#include <random>

namespace mst {

/// Worker count for parallel sections: min(MST_THREADS, hardware). Defaults
/// to 1 when MST_THREADS is unset, keeping runs strictly sequential.
int worker_count();

/// Runs fn(i) for i in [0, n). Results must be written to disjoint slots;
/// the partitioning over workers is static, so output is deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

/// Deterministic random source: std::mt19937_64 seeded directly, with the
/// derivations documented in the README (raw % n for integers, top 53 bits
/// for reals) so alternate implementations can reproduce every instance.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

    double real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * real01(); }

private:
    std::mt19937_64 eng_;
};

} // namespace mst

#endif
