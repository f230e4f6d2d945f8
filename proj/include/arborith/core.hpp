#ifndef ARBORITH_CORE_HPP
#define ARBORITH_CORE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "arborith/error.hpp"

namespace arborith {

// Every natural n >= 2 has a type (1 for primes, otherwise one more than its
// count of distinct prime divisors) and an order (its 1-based rank among all
// naturals of the same type). The pair (type, order) determines n uniquely;
// the number 1 has no pair.

struct PairCode {
  uint64_t type_value = 0;
  uint64_t order_value = 0;

  friend bool operator==(const PairCode&, const PairCode&) = default;
};

inline constexpr uint64_t kDefaultMaxSieveBound = 100'000'000;  // 10^8
inline constexpr uint64_t kCheckpointInterval = 4096;
inline constexpr uint64_t kDefaultSegmentSize = uint64_t{1} << 20;

/// Ceiling on how large any internal sieve may grow.
struct Budget {
  uint64_t max_sieve_bound = kDefaultMaxSieveBound;
};

/// Type values for every n in [2, bound], plus per-type cumulative counts
/// checkpointed every kCheckpointInterval indices. Immutable once built;
/// safe to read from many threads.
class SieveTable {
 public:
  uint64_t bound() const noexcept { return bound_; }

  /// Type of n, for 2 <= n <= bound().
  uint64_t type_at(uint64_t n) const;

  /// Largest type value present in [2, bound()].
  uint64_t max_type() const noexcept { return checkpoints_.empty() ? 0 : checkpoints_.size() - 1; }

  /// |{ m : 2 <= m <= x, type(m) == t }| for x <= bound(). t may be any
  /// value >= 1; types not present in the table count zero.
  uint64_t count_leq(uint64_t t, uint64_t x) const;

  /// k-th smallest number of type t within the table, or nullopt when the
  /// table holds fewer than k of them.
  std::optional<uint64_t> kth_of_type(uint64_t t, uint64_t k) const;

  /// Raw type array, indexed by n (entries 0 and 1 are 0).
  const std::vector<uint8_t>& types() const noexcept { return types_; }

 private:
  friend SieveTable dot_sieve(uint64_t, const Budget&, unsigned, uint64_t);

  uint64_t bound_ = 0;
  std::vector<uint8_t> types_;
  // checkpoints_[t][j] = count of type-t numbers <= j * kCheckpointInterval.
  std::vector<std::vector<uint64_t>> checkpoints_;
};

/// Builds the table of type values for [2, bound]. Equivalent to the cell
/// and dot procedure: every cell starts with one dot and each cell holding a
/// single dot when examined (ascending, up to floor(bound/2)) adds a dot to
/// all of its proper multiples; the final dot count is the type. Internally
/// runs segmented with a base prime list up to sqrt(bound); the segment size
/// and thread count never affect the result.
SieveTable dot_sieve(uint64_t bound, const Budget& budget = {}, unsigned threads = 1,
                     uint64_t segment_size = kDefaultSegmentSize);

/// Grow-only holder of a SieveTable, capped by a Budget. Lets callers that
/// issue many queries (decode, verification sweeps) reuse one table instead
/// of re-sieving. Not thread-safe; share SieveTable, not SieveCache.
class SieveCache {
 public:
  explicit SieveCache(Budget budget = {}, unsigned threads = 1);

  /// Returns a table with bound() >= bound, building or growing as needed.
  /// Throws ResourceError when bound exceeds the budget.
  const SieveTable& at_least(uint64_t bound);

  const Budget& budget() const noexcept { return budget_; }
  const SieveTable* current() const noexcept { return table_ ? &*table_ : nullptr; }

 private:
  Budget budget_;
  unsigned threads_;
  std::optional<SieveTable> table_;
};

/// Type of n (n >= 2): 1 when n is prime, otherwise one more than the number
/// of distinct primes dividing n. Pure trial division; no sieve, no budget.
uint64_t type_of(uint64_t n);

/// 1-based position of n among all naturals of the same type.
uint64_t rank_within_type(uint64_t n, SieveCache& cache);
uint64_t rank_within_type(uint64_t n, const Budget& budget = {});

/// (type, order) of n, or nullopt for n == 1, which has neither.
/// n == 0 is a domain error.
std::optional<PairCode> pair_of(uint64_t n, SieveCache& cache);
std::optional<PairCode> pair_of(uint64_t n, const Budget& budget = {});

/// Number of naturals in [2, x] whose type is t.
uint64_t count_leq(uint64_t t, uint64_t x, SieveCache& cache);
uint64_t count_leq(uint64_t t, uint64_t x, const Budget& budget = {});

/// The unique n with pair (t, k): the k-th smallest number of type t.
/// Searches by doubling the sieve bound from max(64, 2k(t+1)) until the
/// count of type-t numbers reaches k; throws ResourceError (naming the bound
/// it wanted next) once the budget blocks further growth. Every (t, k) with
/// t, k >= 1 has a preimage, so failure always means "out of reach", never
/// "does not exist".
uint64_t unrank(uint64_t t, uint64_t k, SieveCache& cache);
uint64_t unrank(uint64_t t, uint64_t k, const Budget& budget = {});

}  // namespace arborith

#endif
