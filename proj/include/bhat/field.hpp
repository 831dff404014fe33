#pragma once

// Exact arithmetic over F_p and row-reduction based subspace operations.
//
// Vectors are stored sparsely (sorted column/value pairs); reduction uses a
// dense scratch accumulator. Pivots are the lowest nonzero column, so when
// columns are ordered by monomial degree the pivot of a polynomial is one of
// its lowest-degree terms.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace bhat {

using Coeff = std::uint32_t;

class PrimeField {
 public:
  static constexpr Coeff kDefaultPrime = 32003;

  explicit PrimeField(Coeff p = kDefaultPrime);

  Coeff modulus() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// Inverse of a nonzero element; throws InvalidArgument on zero.
  Coeff inv(Coeff a) const;

  Coeff from_int(std::int64_t v) const noexcept;
  /// Reduces an arbitrarily long decimal digit string (no sign) mod p.
  Coeff from_decimal(std::string_view digits) const noexcept;
  /// Symmetric lift in (-p/2, p/2], used when printing coefficients.
  std::int64_t to_signed(Coeff a) const noexcept;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  Coeff p_;
};

bool is_prime(std::uint64_t n) noexcept;

struct Entry {
  std::uint32_t col;
  Coeff val;
  bool operator==(const Entry&) const = default;
};

/// Sparse vector; entries sorted by column, no explicit zeros.
struct SparseVec {
  std::vector<Entry> entries;

  bool empty() const noexcept { return entries.empty(); }
  std::size_t size() const noexcept { return entries.size(); }
  std::uint32_t lead() const noexcept { return entries.front().col; }
  Coeff at(std::uint32_t col) const noexcept;
  bool operator==(const SparseVec&) const = default;

  static SparseVec unit(std::uint32_t col) { return SparseVec{{Entry{col, 1}}}; }
  static SparseVec from_dense(std::span<const Coeff> dense);
  std::vector<Coeff> to_dense(std::size_t dim) const;
};

/// Canonical reduced-row-echelon basis of a subspace of F_p^n.
///
/// Two subspaces with the same ambient dimension are equal iff their bases are
/// identical, so operator== is subspace equality.
class Subspace {
 public:
  Subspace(PrimeField field, std::size_t ambient_dim) : field_(field), ambient_dim_(ambient_dim) {}

  static Subspace full(PrimeField field, std::size_t ambient_dim);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<SparseVec>& basis() const noexcept { return rows_; }
  const std::vector<std::uint32_t>& pivot_columns() const noexcept { return pivots_; }
  bool is_pivot(std::uint32_t col) const noexcept;

  /// Remainder of v after subtracting its pivot-column components.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const;

  /// The projection onto the first `dim` coordinates. For bases whose pivots
  /// sit at the lowest column this stays canonical.
  Subspace truncated(std::size_t dim) const;
  /// Embedding into a larger ambient space, adding unit vectors for every
  /// column >= ambient_dim() (the "full tail").
  Subspace with_full_tail(std::size_t new_dim) const;

  std::vector<std::vector<Coeff>> dense_basis() const;

  bool operator==(const Subspace& o) const noexcept {
    return ambient_dim_ == o.ambient_dim_ && field_ == o.field_ && rows_ == o.rows_;
  }

 private:
  friend class EchelonBuilder;

  PrimeField field_;
  std::size_t ambient_dim_;
  std::vector<SparseVec> rows_;
  std::vector<std::uint32_t> pivots_;
};

/// Incremental semi-echelon elimination. Rows are inserted one by one; the
/// canonical form is produced by finish().
class EchelonBuilder {
 public:
  EchelonBuilder(PrimeField field, std::size_t ambient_dim);
  explicit EchelonBuilder(const Subspace& start);

  /// Returns true iff v was independent of the rows inserted so far.
  bool insert(const SparseVec& v);
  void insert_all(const Subspace& s);
  SparseVec reduce(const SparseVec& v);
  bool contains(const SparseVec& v) { return reduce(v).empty(); }

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return dim_; }
  bool is_pivot(std::uint32_t col) const noexcept { return pivot_row_[col] >= 0; }
  const std::vector<SparseVec>& rows() const noexcept { return rows_; }

  Subspace finish() const;

 private:
  SparseVec reduce_impl(const SparseVec& v, bool normalize);

  PrimeField field_;
  std::size_t dim_;
  std::vector<std::int32_t> pivot_row_;
  std::vector<SparseVec> rows_;
  std::vector<std::uint64_t> acc_;
};

Subspace rref(const std::vector<SparseVec>& rows, std::size_t ambient_dim, PrimeField field);
/// Dense-vector entry point; throws DimensionMismatch on a row of wrong length.
Subspace rref(const std::vector<std::vector<Coeff>>& rows, std::size_t ambient_dim,
              PrimeField field);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool membership(std::span<const Coeff> v, const Subspace& u);

/// Basis of {c : sum_i c_i rows[i] = 0}, as vectors of length rows.size().
std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows, std::size_t ambient_dim,
                                   PrimeField field);

}  // namespace bhat
