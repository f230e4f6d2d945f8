#include "arborith/core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

namespace arborith {

namespace {

constexpr uint64_t kMaxNatural = (uint64_t{1} << 63) - 1;

// a * b, refusing to pass 2^63-1.
uint64_t checked_mul(uint64_t a, uint64_t b, const char* what) {
  uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r) || r > kMaxNatural)
    throw OverflowError(std::string(what) + " exceeds 2^63-1");
  return r;
}

uint64_t isqrt(uint64_t n) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) r--;
  while ((r + 1) <= n / (r + 1)) r++;
  return r;
}

std::vector<uint64_t> base_primes(uint64_t limit) {
  std::vector<uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<char> composite(limit + 1, 0);
  for (uint64_t i = 2; i <= limit; i++) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

// Fills types[m] for every m in [lo, hi]. `scratch` must hold hi-lo+1 slots.
void sieve_segment(uint64_t lo, uint64_t hi, const std::vector<uint64_t>& primes,
                   std::vector<uint64_t>& scratch, std::vector<uint8_t>& types) {
  const uint64_t len = hi - lo + 1;
  for (uint64_t i = 0; i < len; i++) scratch[i] = lo + i;  // unfactored remainder
  std::fill_n(types.begin() + static_cast<ptrdiff_t>(lo), len, uint8_t{0});

  for (uint64_t p : primes) {
    if (p > hi / 2) break;  // no proper multiple of p fits below hi
    uint64_t start = ((lo + p - 1) / p) * p;
    if (start < 2 * p) start = 2 * p;  // p itself never marks its own cell
    for (uint64_t m = start; m <= hi; m += p) {
      uint64_t i = m - lo;
      types[m]++;  // counts distinct small prime divisors for now
      while (scratch[i] % p == 0) scratch[i] /= p;
    }
  }

  for (uint64_t m = lo; m <= hi; m++) {
    uint64_t rem = scratch[m - lo];
    if (rem == m) {
      types[m] = 1;  // untouched by every base prime: m is prime
    } else {
      // composite: distinct divisors = small ones marked + one leftover > sqrt
      types[m] = static_cast<uint8_t>(types[m] + (rem > 1 ? 1 : 0) + 1);
    }
  }
}

}  // namespace

uint64_t SieveTable::type_at(uint64_t n) const {
  if (n < 2 || n > bound_) throw DomainError("type_at: n=" + std::to_string(n) + " outside [2, " + std::to_string(bound_) + "]");
  return types_[n];
}

uint64_t SieveTable::count_leq(uint64_t t, uint64_t x) const {
  if (t < 1) throw DomainError("count_leq: type must be >= 1");
  if (x < 2 || x > bound_) throw DomainError("count_leq: x=" + std::to_string(x) + " outside [2, " + std::to_string(bound_) + "]");
  if (t > max_type()) return 0;
  const uint64_t block = x / kCheckpointInterval;
  uint64_t count = checkpoints_[t][block];
  for (uint64_t m = block * kCheckpointInterval + 1; m <= x; m++) count += (types_[m] == t);
  return count;
}

std::optional<uint64_t> SieveTable::kth_of_type(uint64_t t, uint64_t k) const {
  if (t < 1 || k < 1) throw DomainError("kth_of_type: type and rank must be >= 1");
  if (t > max_type()) return std::nullopt;
  const auto& cp = checkpoints_[t];
  if (cp.back() < k) return std::nullopt;
  // First checkpoint block whose cumulative count reaches k, then scan it.
  auto it = std::lower_bound(cp.begin(), cp.end(), k);
  uint64_t block = static_cast<uint64_t>(it - cp.begin());
  uint64_t count = cp[block - 1];
  for (uint64_t m = (block - 1) * kCheckpointInterval + 1; m <= bound_; m++) {
    if (types_[m] == t && ++count == k) return m;
  }
  return std::nullopt;  // unreachable: cp.back() >= k
}

SieveTable dot_sieve(uint64_t bound, const Budget& budget, unsigned threads, uint64_t segment_size) {
  if (bound < 2) throw DomainError("dot_sieve: bound must be >= 2");
  if (budget.max_sieve_bound < 2) throw DomainError("budget: max_sieve_bound must be >= 2");
  if (bound > budget.max_sieve_bound) {
    throw ResourceError("dot_sieve: bound " + std::to_string(bound) + " exceeds max_sieve_bound " +
                            std::to_string(budget.max_sieve_bound),
                        bound);
  }
  if (segment_size < 16) segment_size = 16;

  SieveTable table;
  table.bound_ = bound;
  table.types_.assign(bound + 1, 0);
  const auto primes = base_primes(isqrt(bound));

  const uint64_t first = 2;
  const uint64_t n_segments = (bound - first) / segment_size + 1;
  if (threads <= 1 || n_segments == 1) {
    std::vector<uint64_t> scratch(std::min(segment_size, bound - first + 1));
    for (uint64_t s = 0; s < n_segments; s++) {
      uint64_t lo = first + s * segment_size;
      uint64_t hi = std::min(bound, lo + segment_size - 1);
      sieve_segment(lo, hi, primes, scratch, table.types_);
    }
  } else {
    std::atomic<uint64_t> next{0};
    auto worker = [&] {
      std::vector<uint64_t> scratch(segment_size);
      for (;;) {
        uint64_t s = next.fetch_add(1);
        if (s >= n_segments) return;
        uint64_t lo = first + s * segment_size;
        uint64_t hi = std::min(bound, lo + segment_size - 1);
        sieve_segment(lo, hi, primes, scratch, table.types_);
      }
    };
    std::vector<std::thread> pool;
    unsigned n = std::min<uint64_t>(threads, n_segments);
    pool.reserve(n);
    for (unsigned i = 0; i < n; i++) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Cumulative per-type counts at every checkpoint boundary.
  uint8_t max_t = *std::max_element(table.types_.begin() + 2, table.types_.end());
  const uint64_t n_blocks = bound / kCheckpointInterval + 1;
  table.checkpoints_.assign(max_t + 1, std::vector<uint64_t>(n_blocks, 0));
  std::vector<uint64_t> running(max_t + 1, 0);
  uint64_t block = 1;
  for (uint64_t m = 2; m <= bound; m++) {
    while (m > block * kCheckpointInterval) {
      for (uint64_t t = 1; t <= max_t; t++) table.checkpoints_[t][block] = running[t];
      block++;
    }
    running[table.types_[m]]++;
  }
  for (; block < n_blocks; block++) {
    for (uint64_t t = 1; t <= max_t; t++) table.checkpoints_[t][block] = running[t];
  }
  if (bound % kCheckpointInterval != 0) {
    // Sentinel carrying the totals for the trailing partial block, so the
    // binary search in kth_of_type sees the whole table.
    for (uint64_t t = 1; t <= max_t; t++) table.checkpoints_[t].push_back(running[t]);
  }
  return table;
}

SieveCache::SieveCache(Budget budget, unsigned threads) : budget_(budget), threads_(threads) {
  if (budget_.max_sieve_bound < 2) throw DomainError("budget: max_sieve_bound must be >= 2");
}

const SieveTable& SieveCache::at_least(uint64_t bound) {
  if (bound < 2) bound = 2;
  if (table_ && table_->bound() >= bound) return *table_;
  if (bound > budget_.max_sieve_bound) {
    throw ResourceError("sieve bound " + std::to_string(bound) + " exceeds max_sieve_bound " +
                            std::to_string(budget_.max_sieve_bound),
                        bound);
  }
  // Grow geometrically so repeated small bumps do not trigger O(n) rebuilds.
  uint64_t target = bound;
  if (table_) {
    uint64_t cap = budget_.max_sieve_bound;
    uint64_t doubled = table_->bound() > cap / 2 ? cap : table_->bound() * 2;
    target = std::max(target, doubled);
  }
  table_ = dot_sieve(target, budget_, threads_);
  return *table_;
}

uint64_t type_of(uint64_t n) {
  if (n < 2) throw DomainError("type_of: n must be >= 2");
  uint64_t rest = n;
  uint64_t distinct = 0;
  for (uint64_t d = 2; d <= rest / d; d++) {
    if (rest % d != 0) continue;
    distinct++;
    while (rest % d == 0) rest /= d;
  }
  if (rest == n) return 1;  // no divisor found: prime
  if (rest > 1) distinct++;
  return distinct + 1;
}

uint64_t rank_within_type(uint64_t n, SieveCache& cache) {
  if (n < 2) throw DomainError("rank_within_type: n must be >= 2");
  const SieveTable& table = cache.at_least(n);
  return table.count_leq(table.type_at(n), n);
}

uint64_t rank_within_type(uint64_t n, const Budget& budget) {
  SieveCache cache(budget);
  return rank_within_type(n, cache);
}

std::optional<PairCode> pair_of(uint64_t n, SieveCache& cache) {
  if (n == 0) throw DomainError("pair_of: n must be >= 1");
  if (n == 1) return std::nullopt;  // 1 has neither a type nor an order
  const SieveTable& table = cache.at_least(n);
  uint64_t t = table.type_at(n);
  return PairCode{t, table.count_leq(t, n)};
}

std::optional<PairCode> pair_of(uint64_t n, const Budget& budget) {
  SieveCache cache(budget);
  return pair_of(n, cache);
}

uint64_t count_leq(uint64_t t, uint64_t x, SieveCache& cache) {
  if (t < 1) throw DomainError("count_leq: type must be >= 1");
  if (x < 2) throw DomainError("count_leq: x must be >= 2");
  return cache.at_least(x).count_leq(t, x);
}

uint64_t count_leq(uint64_t t, uint64_t x, const Budget& budget) {
  SieveCache cache(budget);
  return count_leq(t, x, cache);
}

uint64_t unrank(uint64_t t, uint64_t k, SieveCache& cache) {
  if (t < 1 || k < 1) throw DomainError("unrank: type and order must be >= 1");
  if (t == UINT64_MAX) throw OverflowError("unrank: search bound exceeds 2^63-1");
  uint64_t start = std::max<uint64_t>(64, checked_mul(checked_mul(2, k, "unrank: search bound"), t + 1,
                                                      "unrank: search bound"));

  const uint64_t cap = cache.budget().max_sieve_bound;
  uint64_t bound = std::min(start, cap);
  for (;;) {
    const SieveTable& table = cache.at_least(bound);
    if (auto n = table.kth_of_type(t, k)) return *n;
    if (table.bound() >= cap) {
      uint64_t attempted = checked_mul(table.bound(), 2, "unrank: search bound");
      throw ResourceError("unrank(" + std::to_string(t) + ", " + std::to_string(k) +
                              "): needs sieve bound " + std::to_string(attempted) +
                              ", max_sieve_bound is " + std::to_string(cap),
                          attempted);
    }
    bound = table.bound() > cap / 2 ? cap : table.bound() * 2;
  }
}

uint64_t unrank(uint64_t t, uint64_t k, const Budget& budget) {
  SieveCache cache(budget);
  return unrank(t, k, cache);
}

}  // namespace arborith
