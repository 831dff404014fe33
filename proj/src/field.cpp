#include "bhat/field.hpp"

#include <algorithm>

#include "bhat/errors.hpp"

namespace bhat {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Coeff p) : p_(p) {
  if (p <= 2 || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " is not an odd prime");
  }
  // Products are formed in 64 bits; keep p below 2^31 so sums never wrap.
  if (p >= (Coeff{1} << 31)) {
    throw Error(ErrorKind::InvalidArgument, "modulus must be below 2^31");
  }
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  return pow(a, p_ - 2);
}

Coeff PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

Coeff PrimeField::from_decimal(std::string_view digits) const noexcept {
  std::uint64_t r = 0;
  for (char c : digits) {
    r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
  }
  return static_cast<Coeff>(r);
}

std::int64_t PrimeField::to_signed(Coeff a) const noexcept {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

// ---------------------------------------------------------------------------

Coeff SparseVec::at(std::uint32_t col) const noexcept {
  auto it = std::lower_bound(entries.begin(), entries.end(), col,
                             [](const Entry& e, std::uint32_t c) { return e.col < c; });
  return (it != entries.end() && it->col == col) ? it->val : 0;
}

SparseVec SparseVec::from_dense(std::span<const Coeff> dense) {
  SparseVec v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) v.entries.push_back({static_cast<std::uint32_t>(i), dense[i]});
  }
  return v;
}

std::vector<Coeff> SparseVec::to_dense(std::size_t dim) const {
  std::vector<Coeff> out(dim, 0);
  for (const auto& e : entries) out[e.col] = e.val;
  return out;
}

// ---------------------------------------------------------------------------

Subspace Subspace::full(PrimeField field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  s.rows_.reserve(ambient_dim);
  s.pivots_.reserve(ambient_dim);
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    s.rows_.push_back(SparseVec::unit(static_cast<std::uint32_t>(c)));
    s.pivots_.push_back(static_cast<std::uint32_t>(c));
  }
  return s;
}

bool Subspace::is_pivot(std::uint32_t col) const noexcept {
  return std::binary_search(pivots_.begin(), pivots_.end(), col);
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  if (v.empty() || rows_.empty()) return v;
  const Coeff p = field_.modulus();
  thread_local std::vector<std::uint64_t> acc;
  std::uint32_t lo = v.lead();
  std::uint32_t hi = v.entries.back().col;
  if (acc.size() <= hi) acc.resize(static_cast<std::size_t>(hi) + 1, 0);
  for (const auto& e : v.entries) acc[e.col] = e.val;
  // In reduced form a pivot row has no entries at other pivot columns, so
  // only the original entries of v trigger subtractions.
  for (const auto& e : v.entries) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), e.col);
    if (it == pivots_.end() || *it != e.col) continue;
    const SparseVec& row = rows_[static_cast<std::size_t>(it - pivots_.begin())];
    const std::uint64_t m = p - e.val;
    std::uint32_t row_hi = row.entries.back().col;
    if (acc.size() <= row_hi) acc.resize(static_cast<std::size_t>(row_hi) + 1, 0);
    for (const auto& re : row.entries) acc[re.col] = (acc[re.col] + m * re.val) % p;
    hi = std::max(hi, row_hi);
  }
  SparseVec out;
  for (std::uint32_t c = lo; c <= hi; ++c) {
    if (acc[c] != 0) {
      out.entries.push_back({c, static_cast<Coeff>(acc[c])});
      acc[c] = 0;
    }
  }
  return out;
}

bool Subspace::contains(const SparseVec& v) const { return reduce(v).empty(); }

Subspace Subspace::truncated(std::size_t dim) const {
  Subspace out(field_, dim);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (pivots_[i] >= dim) break;
    SparseVec r;
    for (const auto& e : rows_[i].entries) {
      if (e.col >= dim) break;
      r.entries.push_back(e);
    }
    out.rows_.push_back(std::move(r));
    out.pivots_.push_back(pivots_[i]);
  }
  return out;
}

Subspace Subspace::with_full_tail(std::size_t new_dim) const {
  if (new_dim < ambient_dim_) {
    throw Error(ErrorKind::DimensionMismatch, "with_full_tail cannot shrink a subspace");
  }
  Subspace out = *this;
  out.ambient_dim_ = new_dim;
  for (std::size_t c = ambient_dim_; c < new_dim; ++c) {
    out.rows_.push_back(SparseVec::unit(static_cast<std::uint32_t>(c)));
    out.pivots_.push_back(static_cast<std::uint32_t>(c));
  }
  return out;
}

std::vector<std::vector<Coeff>> Subspace::dense_basis() const {
  std::vector<std::vector<Coeff>> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.to_dense(ambient_dim_));
  return out;
}

// ---------------------------------------------------------------------------

EchelonBuilder::EchelonBuilder(PrimeField field, std::size_t ambient_dim)
    : field_(field), dim_(ambient_dim), pivot_row_(ambient_dim, -1), acc_(ambient_dim, 0) {}

EchelonBuilder::EchelonBuilder(const Subspace& start)
    : EchelonBuilder(start.field(), start.ambient_dim()) {
  insert_all(start);
}

void EchelonBuilder::insert_all(const Subspace& s) {
  if (s.ambient_dim() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "subspace ambient dimension differs from builder");
  }
  // A row whose lead column is still free is independent of everything
  // inserted so far and can be stored as is.
  for (std::size_t i = 0; i < s.rows_.size(); ++i) {
    const std::uint32_t piv = s.pivots_[i];
    if (pivot_row_[piv] >= 0) {
      insert(s.rows_[i]);
    } else {
      pivot_row_[piv] = static_cast<std::int32_t>(rows_.size());
      rows_.push_back(s.rows_[i]);
    }
  }
}

SparseVec EchelonBuilder::reduce_impl(const SparseVec& v, bool normalize) {
  if (v.empty()) return {};
  const Coeff p = field_.modulus();
  // For small p the accumulator takes sums of products without reducing; a
  // column is touched at most once per pivot row, far below the headroom.
  const bool lazy = p < (Coeff{1} << 20);
  const std::uint32_t lo = v.lead();
  std::uint32_t hi = v.entries.back().col;
  if (hi >= dim_) throw Error(ErrorKind::DimensionMismatch, "vector longer than ambient space");
  for (const auto& e : v.entries) acc_[e.col] = e.val;
  for (std::uint32_t c = lo; c <= hi; ++c) {
    if (acc_[c] == 0) continue;
    const std::int32_t r = pivot_row_[c];
    if (r < 0) continue;
    const std::uint64_t a = acc_[c] % p;
    if (a == 0) continue;
    const SparseVec& row = rows_[static_cast<std::size_t>(r)];
    const std::uint64_t m = p - a;
    if (lazy) {
      for (const auto& e : row.entries) acc_[e.col] += m * e.val;
    } else {
      for (const auto& e : row.entries) acc_[e.col] = (acc_[e.col] + m * e.val) % p;
    }
    hi = std::max(hi, row.entries.back().col);
  }
  SparseVec out;
  for (std::uint32_t c = lo; c <= hi; ++c) {
    if (acc_[c] == 0) continue;
    const Coeff val = static_cast<Coeff>(acc_[c] % p);
    acc_[c] = 0;
    if (val != 0) out.entries.push_back({c, val});
  }
  if (normalize && !out.empty() && out.entries.front().val != 1) {
    const Coeff s = field_.inv(out.entries.front().val);
    for (auto& e : out.entries) e.val = field_.mul(e.val, s);
  }
  return out;
}

SparseVec EchelonBuilder::reduce(const SparseVec& v) { return reduce_impl(v, false); }

bool EchelonBuilder::insert(const SparseVec& v) {
  SparseVec r = reduce_impl(v, true);
  if (r.empty()) return false;
  pivot_row_[r.lead()] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

Subspace EchelonBuilder::finish() const {
  Subspace out(field_, dim_);
  const std::size_t n = rows_.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].lead() < rows_[b].lead(); });

  std::vector<SparseVec> reduced(n);
  std::vector<std::int32_t> reduced_at(dim_, -1);
  std::vector<std::uint64_t> acc(dim_, 0);
  const Coeff p = field_.modulus();
  const bool lazy = p < (Coeff{1} << 20);
  for (std::size_t k = n; k-- > 0;) {
    const SparseVec& row = rows_[order[k]];
    const std::uint32_t lo = row.lead();
    std::uint32_t hi = row.entries.back().col;
    for (const auto& e : row.entries) acc[e.col] = e.val;
    // Fully reduced rows carry no other pivot columns, so the entries of the
    // original row are the only ones that need clearing.
    for (const auto& e : row.entries) {
      if (e.col == lo) continue;
      const std::int32_t r = reduced_at[e.col];
      if (r < 0) continue;
      const SparseVec& piv = reduced[static_cast<std::size_t>(r)];
      const std::uint64_t m = p - acc[e.col] % p;
      if (m == p) continue;
      if (lazy) {
        for (const auto& pe : piv.entries) acc[pe.col] += m * pe.val;
      } else {
        for (const auto& pe : piv.entries) acc[pe.col] = (acc[pe.col] + m * pe.val) % p;
      }
      hi = std::max(hi, piv.entries.back().col);
    }
    SparseVec clean;
    for (std::uint32_t c = lo; c <= hi; ++c) {
      if (acc[c] == 0) continue;
      const Coeff val = static_cast<Coeff>(acc[c] % p);
      acc[c] = 0;
      if (val != 0) clean.entries.push_back({c, val});
    }
    reduced_at[lo] = static_cast<std::int32_t>(k);
    reduced[k] = std::move(clean);
  }
  out.rows_ = std::move(reduced);
  out.pivots_.reserve(n);
  for (const auto& r : out.rows_) out.pivots_.push_back(r.lead());
  return out;
}

// ---------------------------------------------------------------------------

Subspace rref(const std::vector<SparseVec>& rows, std::size_t ambient_dim, PrimeField field) {
  EchelonBuilder b(field, ambient_dim);
  for (const auto& r : rows) {
    if (!r.empty() && r.entries.back().col >= ambient_dim) {
      throw Error(ErrorKind::DimensionMismatch, "row has entries beyond the ambient dimension");
    }
    b.insert(r);
  }
  return b.finish();
}

Subspace rref(const std::vector<std::vector<Coeff>>& rows, std::size_t ambient_dim,
              PrimeField field) {
  std::vector<SparseVec> sparse;
  sparse.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != ambient_dim) {
      throw Error(ErrorKind::DimensionMismatch, "row of length " + std::to_string(r.size()) +
                                                    " in ambient dimension " +
                                                    std::to_string(ambient_dim));
    }
    SparseVec v;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Coeff c = r[i] % field.modulus();
      if (c != 0) v.entries.push_back({static_cast<std::uint32_t>(i), c});
    }
    sparse.push_back(std::move(v));
  }
  return rref(sparse, ambient_dim, field);
}

namespace {

void require_same_space(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || !(u.field() == v.field())) {
    throw Error(ErrorKind::DimensionMismatch, "subspaces live in different ambient spaces");
  }
}

}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_space(u, v);
  EchelonBuilder b(u);
  for (const auto& r : v.basis()) b.insert(r);
  return b.finish();
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_space(u, v);
  const std::size_t n = u.ambient_dim();
  // Zassenhaus: rows (u | u) and (v | 0); rows whose left half vanishes span
  // the intersection in their right half.
  EchelonBuilder b(u.field(), 2 * n);
  for (const auto& r : u.basis()) {
    SparseVec w = r;
    for (const auto& e : r.entries) w.entries.push_back({static_cast<std::uint32_t>(e.col + n), e.val});
    b.insert(w);
  }
  for (const auto& r : v.basis()) b.insert(r);
  std::vector<SparseVec> inter;
  for (const auto& r : b.rows()) {
    if (r.lead() < n) continue;
    SparseVec w;
    for (const auto& e : r.entries) w.entries.push_back({static_cast<std::uint32_t>(e.col - n), e.val});
    inter.push_back(std::move(w));
  }
  return rref(inter, n, u.field());
}

bool membership(std::span<const Coeff> v, const Subspace& u) {
  if (v.size() != u.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  }
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Coeff c = v[i] % u.field().modulus();
    if (c != 0) s.entries.push_back({static_cast<std::uint32_t>(i), c});
  }
  return u.contains(s);
}

std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows, std::size_t ambient_dim,
                                   PrimeField field) {
  const std::size_t m = rows.size();
  EchelonBuilder b(field, ambient_dim + m);
  for (std::size_t i = 0; i < m; ++i) {
    SparseVec w = rows[i];
    w.entries.push_back({static_cast<std::uint32_t>(ambient_dim + i), 1});
    b.insert(w);
  }
  std::vector<SparseVec> kernel;
  for (const auto& r : b.rows()) {
    if (r.lead() < ambient_dim) continue;
    SparseVec w;
    for (const auto& e : r.entries) {
      w.entries.push_back({static_cast<std::uint32_t>(e.col - ambient_dim), e.val});
    }
    kernel.push_back(std::move(w));
  }
  return kernel;
}

}  // namespace bhat
