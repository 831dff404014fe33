#pragma once

// Exact arithmetic for m-primary ideals of R = k[[x,y]], k = F_p, carried out
// inside the truncation A_N = k[x,y]/m^N.
//
// Monomials are indexed degree by degree: x^i y^j sits at column
// d(d+1)/2 + j with d = i + j. The columns of A_t are therefore a prefix of
// the columns of A_N for every t <= N, and the pivot (lowest column) of a
// polynomial is one of its lowest-degree terms.
//
// An ideal K with m^t ⊆ K is stored through its image K/m^t, a subspace of
// the first t(t+1)/2 columns; its image in A_N is that subspace plus every
// column of degree >= t. With t the smallest such exponent this prefix is a
// canonical description of K as an ideal of R.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bhat/field.hpp"

namespace bhat {

inline constexpr std::size_t monomials_below(int degree) {
  return degree <= 0 ? 0 : static_cast<std::size_t>(degree) * (degree + 1) / 2;
}
inline constexpr std::uint32_t monomial_index(int xexp, int yexp) {
  const int d = xexp + yexp;
  return static_cast<std::uint32_t>(monomials_below(d) + yexp);
}
int monomial_degree(std::uint32_t index) noexcept;
std::pair<int, int> monomial_exponents(std::uint32_t index) noexcept;

class TruncatedAlgebra {
 public:
  TruncatedAlgebra(PrimeField field, int order);

  const PrimeField& field() const noexcept { return field_; }
  int order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return monomials_below(order_); }

 private:
  PrimeField field_;
  int order_;
};

using AlgebraPtr = std::shared_ptr<const TruncatedAlgebra>;

/// A polynomial in x, y over F_p; coordinates are indexed as above. The
/// representation does not depend on the truncation order, only on which
/// terms are kept.
class Poly {
 public:
  Poly() = default;
  explicit Poly(SparseVec terms) : terms_(std::move(terms)) {}

  static Poly monomial(int xexp, int yexp, Coeff c = 1);
  static Poly constant(Coeff c);

  const SparseVec& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Lowest total degree of a term; -1 for the zero polynomial.
  int order() const noexcept;
  int degree() const noexcept;

  Poly truncated(int level) const;
  Poly shifted(int xexp, int yexp, int level) const;
  Poly scaled(Coeff c, const PrimeField& f) const;

  std::string to_string(const PrimeField& f) const;
  bool operator==(const Poly&) const = default;

 private:
  SparseVec terms_;
};

Poly add(const Poly& a, const Poly& b, const PrimeField& f);
Poly mul(const Poly& a, const Poly& b, const PrimeField& f, int level);
Poly pow(const Poly& a, int e, const PrimeField& f, int level);

/// A parsed element of A_N together with its source text.
struct PolyElement {
  AlgebraPtr algebra;
  Poly poly;
  std::string source_text;
  bool truncated = false;  ///< true if terms of degree >= N were dropped
};

/// Grammar: signed sum of terms, each a '*'-product of factors; a factor is
/// an integer (any size, optionally parenthesised), x, y, x^e or y^e.
/// Whitespace is ignored. Throws ParseError with the offending position.
PolyElement parse_poly(std::string_view text, const AlgebraPtr& algebra);
/// Comma-separated generator list.
std::vector<PolyElement> parse_generators(std::string_view text, const AlgebraPtr& algebra);

class LocalIdeal {
 public:
  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const PrimeField& field() const noexcept { return algebra_->field(); }
  /// A (minimal, when certified) generating set.
  const std::vector<Poly>& generators() const noexcept { return gens_; }
  /// Smallest t with m^t ⊆ K, if it is at most N.
  std::optional<int> adequacy() const noexcept { return adequacy_; }
  bool certified() const noexcept { return adequacy_.has_value(); }
  /// Exponent of the truncation the image lives in: adequacy or N.
  int level() const noexcept { return adequacy_ ? *adequacy_ : algebra_->order(); }
  /// K / m^level.
  const Subspace& image() const noexcept { return image_; }
  /// K / m^level for level >= this->level() (certified ideals only).
  Subspace image_at(int level) const;
  bool is_monomial() const;
  bool is_unit() const noexcept { return adequacy_ && *adequacy_ == 0; }
  /// Number of minimal generators, dim K/mK.
  std::size_t minimal_generator_count() const { return gens_.size(); }

  std::string to_string() const;

 private:
  friend class IdealFactory;
  LocalIdeal(AlgebraPtr algebra, std::vector<Poly> gens, std::optional<int> adequacy,
             Subspace image)
      : algebra_(std::move(algebra)),
        gens_(std::move(gens)),
        adequacy_(adequacy),
        image_(std::move(image)) {}

  AlgebraPtr algebra_;
  std::vector<Poly> gens_;
  std::optional<int> adequacy_;
  Subspace image_;
};

/// One summand f·K of an ideal Σ f_i K_i.
struct ScaledIdeal {
  Poly multiplier;
  const LocalIdeal* ideal;
};

/// Construction entry points; these are the only ways to make a LocalIdeal.
class IdealFactory {
 public:
  static LocalIdeal from_generators(const AlgebraPtr& algebra, std::vector<Poly> gens,
                                    bool allow_uncertified);
  static LocalIdeal from_image(const AlgebraPtr& algebra, const Subspace& image, int level,
                               std::optional<int> known_bound);
  static LocalIdeal unit(const AlgebraPtr& algebra);
  static LocalIdeal sum_of_multiples(const AlgebraPtr& algebra,
                                     const std::vector<ScaledIdeal>& parts, int start_level,
                                     std::optional<int> guaranteed_level);
};

/// The image of (gens) in A_level.
Subspace ideal_image(const std::vector<Poly>& gens, int level, const PrimeField& field);
/// Smallest t < level whose degree-t columns are all pivots of `image`.
std::optional<int> detect_adequacy(const Subspace& image, int level);

LocalIdeal ideal_from_gens(const std::vector<PolyElement>& gens);
LocalIdeal ideal_from_gens(const AlgebraPtr& algebra, const std::vector<Poly>& gens);
/// Same, but keeps a non-m-primary ideal as an uncertified value.
LocalIdeal ideal_from_gens_uncertified(const AlgebraPtr& algebra, const std::vector<Poly>& gens);
LocalIdeal ideal_from_text(const AlgebraPtr& algebra, std::string_view generators);
LocalIdeal maximal_ideal(const AlgebraPtr& algebra);
LocalIdeal unit_ideal(const AlgebraPtr& algebra);

std::optional<int> adequacy_order(const LocalIdeal& k);

LocalIdeal mul_ideals(const LocalIdeal& a, const LocalIdeal& b);
LocalIdeal power_ideal(const LocalIdeal& k, int r);
LocalIdeal sum_ideals(const LocalIdeal& a, const LocalIdeal& b);
LocalIdeal intersect_ideals(const LocalIdeal& a, const LocalIdeal& b);
LocalIdeal colon_by_element(const LocalIdeal& k, const Poly& f);
LocalIdeal colon_by_ideal(const LocalIdeal& k, const LocalIdeal& l);
/// K + (f), for an arbitrary element f.
LocalIdeal add_element(const LocalIdeal& k, const Poly& f);
/// λ(R/(K : f)) computed as λ(R/K) - λ(R/(K + (f))), valid for nonzerodivisors f.
std::int64_t colon_colength(const LocalIdeal& k, const Poly& f);

bool ideal_eq(const LocalIdeal& a, const LocalIdeal& b);
bool contains(const LocalIdeal& k, const Poly& f);
/// a ⊆ b
bool ideal_subset(const LocalIdeal& a, const LocalIdeal& b);
std::int64_t colength(const LocalIdeal& k);

/// Minimal generators of K chosen among `candidates` (which must generate K).
std::vector<Poly> minimal_generators(const LocalIdeal& k, const std::vector<Poly>& candidates);

}  // namespace bhat
