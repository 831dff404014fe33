#include "bhat/filtration.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "bhat/errors.hpp"

namespace bhat {

BiFiltration::BiFiltration(LocalIdeal i, LocalIdeal j)
    : i_(std::make_shared<const LocalIdeal>(std::move(i))),
      j_(std::make_shared<const LocalIdeal>(std::move(j))) {
  if (!i_->certified() || !j_->certified()) {
    throw Error(ErrorKind::TruncationInsufficient, "filtration needs certified m-primary ideals");
  }
  if (i_->algebra() != j_->algebra()) {
    throw Error(ErrorKind::InvalidArgument, "I and J live in different truncated algebras");
  }
}

IdealPtr BiFiltration::power(int which, int n) const {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative filtration index");
  const IdealPtr& base = which == 0 ? i_ : j_;
  if (n == 0) return std::make_shared<const LocalIdeal>(unit_ideal(algebra()));
  if (n == 1) return base;
  {
    std::lock_guard lock(mutex_);
    if (auto it = powers_.find({which, n}); it != powers_.end()) return it->second;
  }
  IdealPtr prev = power(which, n - 1);
  auto result = std::make_shared<const LocalIdeal>(mul_ideals(*prev, *base));
  std::lock_guard lock(mutex_);
  return powers_.try_emplace({which, n}, result).first->second;
}

IdealPtr BiFiltration::power_I(int r) const { return power(0, r); }
IdealPtr BiFiltration::power_J(int s) const { return power(1, s); }

IdealPtr BiFiltration::product(int r, int s) const {
  if (r == 0) return power_J(s);
  if (s == 0) return power_I(r);
  {
    std::lock_guard lock(mutex_);
    if (auto it = products_.find({r, s}); it != products_.end()) return it->second;
  }
  // One generator set of I at a time keeps the multiplier small.
  auto result = std::make_shared<const LocalIdeal>(mul_ideals(*product(r - 1, s), *i_));
  std::lock_guard lock(mutex_);
  return products_.try_emplace({r, s}, result).first->second;
}

std::size_t BiFiltration::cache_size() const {
  std::lock_guard lock(mutex_);
  return powers_.size() + products_.size();
}

IdealPtr power_product(const BiFiltration& f, int r, int s) { return f.product(r, s); }

BigradedLengthTable length_table(const BiFiltration& f, int r_max, int s_max, unsigned threads) {
  if (r_max < 0 || s_max < 0) throw Error(ErrorKind::InvalidArgument, "negative table window");
  BigradedLengthTable t;
  t.values.assign(r_max + 1, std::vector<std::int64_t>(s_max + 1, 0));
  t.provenance.prime = f.I().field().modulus();
  t.provenance.truncation_order = f.algebra()->order();
  t.provenance.I = f.I().to_string();
  t.provenance.J = f.J().to_string();

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const int cells = (r_max + 1) * (s_max + 1);
  // Powers first so that workers only build products.
  for (int r = 1; r <= r_max; ++r) f.power_I(r);
  for (int s = 1; s <= s_max; ++s) f.power_J(s);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const int c = next++;
      if (c >= cells) return;
      const int r = c / (s_max + 1);
      const int s = c % (s_max + 1);
      try {
        t.values[r][s] = f.length(r, s);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cells;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < std::min<unsigned>(threads, cells); ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return t;
}

std::string BigradedLengthTable::to_csv() const {
  std::ostringstream out;
  out << "r\\s";
  for (int s = 0; s <= s_max(); ++s) out << ',' << s;
  out << '\n';
  for (int r = 0; r <= r_max(); ++r) {
    out << r;
    for (auto v : values[r]) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

std::string BigradedLengthTable::to_json() const {
  nlohmann::ordered_json j;
  j["report_version"] = 1;
  j["provenance"] = {{"prime", provenance.prime},
                     {"truncation_order", provenance.truncation_order},
                     {"I", provenance.I},
                     {"J", provenance.J}};
  j["r_max"] = r_max();
  j["s_max"] = s_max();
  j["values"] = values;
  return j.dump(2) + "\n";
}

}  // namespace bhat
