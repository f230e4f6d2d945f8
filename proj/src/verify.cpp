#include "arborith/verify.hpp"

#include <charconv>
#include <fstream>

namespace arborith {

namespace {

// Naive on purpose: counts distinct divisors that happen to be prime by
// scanning every candidate divisor. No wheels, no sieves, no shortcuts.
uint64_t oracle_type(uint64_t n) {
  uint64_t rest = n;
  uint64_t distinct = 0;
  for (uint64_t d = 2; d * d <= rest; d++) {
    if (rest % d != 0) continue;
    distinct++;
    while (rest % d == 0) rest /= d;
  }
  if (rest == n) return 1;  // nothing divided it: prime
  if (rest > 1) distinct++;
  return distinct + 1;
}

uint64_t parse_natural(std::string_view field, const std::string& what, size_t line) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw FileError("malformed " + what + ": '" + std::string(field) + "'", line);
  return value;
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace

PairCode oracle_pair(uint64_t n) {
  if (n < 2) throw DomainError("oracle_pair: n must be >= 2");
  uint64_t t = oracle_type(n);
  uint64_t order = 0;
  for (uint64_t m = 2; m <= n; m++) {
    if (oracle_type(m) == t) order++;
  }
  return {t, order};
}

std::vector<AppendixRecord> load_appendix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path + "'");

  std::string line;
  size_t lineno = 1;
  if (!std::getline(in, line) || strip_cr(line) != "n,type,order")
    throw FileError("expected header 'n,type,order'", lineno);

  std::vector<AppendixRecord> records;
  while (std::getline(in, line)) {
    lineno++;
    std::string_view row = strip_cr(line);
    if (row.empty()) continue;
    size_t c1 = row.find(',');
    size_t c2 = c1 == std::string_view::npos ? std::string_view::npos : row.find(',', c1 + 1);
    if (c2 == std::string_view::npos || row.find(',', c2 + 1) != std::string_view::npos)
      throw FileError("expected 3 comma-separated fields", lineno);
    AppendixRecord rec;
    rec.n = parse_natural(row.substr(0, c1), "n", lineno);
    rec.type_value = parse_natural(row.substr(c1 + 1, c2 - c1 - 1), "type", lineno);
    rec.order_value = parse_natural(row.substr(c2 + 1), "order", lineno);
    if (!records.empty() && rec.n <= records.back().n)
      throw FileError("rows must be strictly increasing in n", lineno);
    records.push_back(rec);
  }
  if (records.size() != 1079 || records.front().n != 2 || records.back().n != 1080)
    throw FileError("expected exactly 1079 rows covering 2..1080, got " +
                    std::to_string(records.size()));
  return records;
}

VerificationReport verify_appendix(const std::vector<AppendixRecord>& records, Engine engine,
                                   SieveCache& cache) {
  VerificationReport report;
  report.total = records.size();
  for (const AppendixRecord& rec : records) {
    PairCode expected{rec.type_value, rec.order_value};
    PairCode computed = engine == Engine::core ? *pair_of(rec.n, cache) : oracle_pair(rec.n);
    if (computed == expected) {
      report.matches++;
    } else {
      report.mismatches.push_back({rec.n, expected, computed});
    }
  }
  return report;
}

VerificationReport verify_appendix(const std::vector<AppendixRecord>& records, Engine engine,
                                   const Budget& budget) {
  SieveCache cache(budget);
  return verify_appendix(records, engine, cache);
}

std::vector<BfileEntry> parse_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path + "'");

  std::vector<BfileEntry> entries;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    std::string_view row = strip_cr(line);
    size_t start = row.find_first_not_of(" \t");
    if (start == std::string_view::npos || row[start] == '#') continue;
    row = row.substr(start);
    size_t sp = row.find_first_of(" \t");
    if (sp == std::string_view::npos) throw FileError("expected 'index value'", lineno);
    std::string_view idx_field = row.substr(0, sp);
    size_t vstart = row.find_first_not_of(" \t", sp);
    if (vstart == std::string_view::npos) throw FileError("expected 'index value'", lineno);
    std::string_view val_field = row.substr(vstart);
    if (size_t extra = val_field.find_first_of(" \t"); extra != std::string_view::npos) {
      if (val_field.find_first_not_of(" \t", extra) != std::string_view::npos)
        throw FileError("trailing characters after value", lineno);
      val_field = val_field.substr(0, extra);
    }

    BfileEntry entry;
    auto [ptr, ec] = std::from_chars(idx_field.data(), idx_field.data() + idx_field.size(), entry.index);
    if (ec != std::errc{} || ptr != idx_field.data() + idx_field.size())
      throw FileError("malformed index '" + std::string(idx_field) + "'", lineno);
    entry.value = parse_natural(val_field, "value", lineno);
    if (!entries.empty() && entry.index != entries.back().index + 1)
      throw FileError("indices must be consecutive", lineno);
    entries.push_back(entry);
  }
  if (entries.empty()) throw FileError("no entries in '" + path + "'");
  return entries;
}

VerificationReport oeis_crosscheck(uint64_t t, uint64_t k_max, const std::string& bfile_path,
                                   SieveCache& cache) {
  if (t < 1 || k_max < 1) throw DomainError("oeis_crosscheck: type and k_max must be >= 1");
  auto entries = parse_bfile(bfile_path);

  VerificationReport report;
  report.total = std::min<uint64_t>(k_max, entries.size());
  for (uint64_t k = 1; k <= report.total; k++) {
    uint64_t expected = entries[k - 1].value;
    uint64_t computed = unrank(t, k, cache);
    if (computed == expected) {
      report.matches++;
    } else {
      report.mismatches.push_back({k, PairCode{t, expected}, PairCode{t, computed}});
    }
  }
  return report;
}

VerificationReport oeis_crosscheck(uint64_t t, uint64_t k_max, const std::string& bfile_path,
                                   const Budget& budget) {
  SieveCache cache(budget);
  return oeis_crosscheck(t, k_max, bfile_path, cache);
}

}  // namespace arborith
