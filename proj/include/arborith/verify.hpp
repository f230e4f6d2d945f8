#ifndef ARBORITH_VERIFY_HPP
#define ARBORITH_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "arborith/core.hpp"

namespace arborith {

// Ground-truth harness. oracle_pair is a deliberately naive second
// implementation of the (type, order) map that shares nothing with the
// sieve machinery; the loaders read the bundled reference table and OEIS
// b-files so every check runs offline.

/// One row of the reference pair table.
struct AppendixRecord {
  uint64_t n = 0;
  uint64_t type_value = 0;
  uint64_t order_value = 0;
};

struct Mismatch {
  uint64_t n = 0;  // for sequence checks this is the 1-based sequence index
  PairCode expected;
  PairCode computed;
};

struct VerificationReport {
  uint64_t total = 0;
  uint64_t matches = 0;
  std::vector<Mismatch> mismatches;
};

enum class Engine { core, oracle };

/// (type, order) of n by plain trial division and a linear scan; quadratic
/// and proud of it. Exists purely to cross-check the fast path.
PairCode oracle_pair(uint64_t n);

/// Loads the reference CSV (header "n,type,order", rows for 2..1080).
/// Throws FileError on a missing file, a malformed row, or a wrong row
/// count.
std::vector<AppendixRecord> load_appendix(const std::string& path);

/// Compares every record against the chosen engine. Mismatches are
/// reported, not adjudicated: a bad row means either the fixture or the
/// engine is wrong, and that call is for a human.
VerificationReport verify_appendix(const std::vector<AppendixRecord>& records, Engine engine,
                                   SieveCache& cache);
VerificationReport verify_appendix(const std::vector<AppendixRecord>& records, Engine engine,
                                   const Budget& budget = {});

/// Parsed "index value" line of an OEIS b-file.
struct BfileEntry {
  int64_t index = 0;
  uint64_t value = 0;
};

/// Reads a b-file: one "k a(k)" pair per line, '#' comments and blank
/// lines ignored, indices consecutive but free to start anywhere.
std::vector<BfileEntry> parse_bfile(const std::string& path);

/// Checks unrank(t, k) against the k-th b-file entry for k <= k_max
/// (clamped to the file length). Mismatch entries carry k as `n`, with the
/// expected and computed numbers in the order slots of the two pairs.
VerificationReport oeis_crosscheck(uint64_t t, uint64_t k_max, const std::string& bfile_path,
                                   SieveCache& cache);
VerificationReport oeis_crosscheck(uint64_t t, uint64_t k_max, const std::string& bfile_path,
                                   const Budget& budget = {});

/// Downloads https://oeis.org/<id>/b<digits>.txt into cache_path. The cache
/// file is replaced only after a complete successful download; on any
/// network failure it is left exactly as it was. Throws NetworkError /
/// FileError. `id` must look like "A000040". host/port exist for tests.
void fetch_bfile(const std::string& sequence_id, const std::string& cache_path,
                 const std::string& host = "oeis.org", int port = 443);

}  // namespace arborith

#endif
