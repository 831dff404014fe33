#pragma once

// The bigraded filtration {I^r J^s} with a shared cache of powers and
// products, and the bigraded length table lambda(R/I^r J^s).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "bhat/algebra.hpp"

namespace bhat {

using IdealPtr = std::shared_ptr<const LocalIdeal>;

class BiFiltration {
 public:
  BiFiltration(LocalIdeal i, LocalIdeal j);

  const LocalIdeal& I() const noexcept { return *i_; }
  const LocalIdeal& J() const noexcept { return *j_; }
  const AlgebraPtr& algebra() const noexcept { return i_->algebra(); }

  IdealPtr power_I(int r) const;
  IdealPtr power_J(int s) const;
  /// I^r J^s; cached, deterministic, safe to call from several threads.
  IdealPtr product(int r, int s) const;
  std::int64_t length(int r, int s) const { return colength(*product(r, s)); }

  std::size_t cache_size() const;

 private:
  IdealPtr power(int which, int n) const;

  IdealPtr i_;
  IdealPtr j_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, IdealPtr> powers_;    // (0|1, n)
  mutable std::map<std::pair<int, int>, IdealPtr> products_;  // (r, s)
};

IdealPtr power_product(const BiFiltration& f, int r, int s);

struct TableProvenance {
  std::uint32_t prime = 0;
  int truncation_order = 0;
  std::string I;
  std::string J;
};

struct BigradedLengthTable {
  std::vector<std::vector<std::int64_t>> values;  // values[r][s]
  TableProvenance provenance;

  int r_max() const { return static_cast<int>(values.size()) - 1; }
  int s_max() const { return values.empty() ? -1 : static_cast<int>(values.front().size()) - 1; }
  std::int64_t at(int r, int s) const { return values.at(r).at(s); }

  std::string to_csv() const;
  std::string to_json() const;
};

/// Cells are distributed over `threads` workers (0: hardware concurrency).
BigradedLengthTable length_table(const BiFiltration& f, int r_max, int s_max, unsigned threads = 0);

}  // namespace bhat
