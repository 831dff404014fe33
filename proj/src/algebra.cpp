#include "bhat/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "bhat/errors.hpp"

namespace bhat {

int monomial_degree(std::uint32_t index) noexcept {
  int d = static_cast<int>((std::sqrt(8.0 * index + 1.0) - 1.0) / 2.0);
  while (monomials_below(d + 1) <= index) ++d;
  while (monomials_below(d) > index) --d;
  return d;
}

std::pair<int, int> monomial_exponents(std::uint32_t index) noexcept {
  const int d = monomial_degree(index);
  const int j = static_cast<int>(index - monomials_below(d));
  return {d - j, j};
}

TruncatedAlgebra::TruncatedAlgebra(PrimeField field, int order) : field_(field), order_(order) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "truncation order must be positive");
}

// ---------------------------------------------------------------------------

Poly Poly::monomial(int xexp, int yexp, Coeff c) {
  if (c == 0) return Poly{};
  return Poly(SparseVec{{Entry{monomial_index(xexp, yexp), c}}});
}

Poly Poly::constant(Coeff c) { return monomial(0, 0, c); }

int Poly::order() const noexcept { return is_zero() ? -1 : monomial_degree(terms_.lead()); }

int Poly::degree() const noexcept {
  return is_zero() ? -1 : monomial_degree(terms_.entries.back().col);
}

Poly Poly::truncated(int level) const {
  const auto limit = static_cast<std::uint32_t>(monomials_below(level));
  SparseVec out;
  for (const auto& e : terms_.entries) {
    if (e.col >= limit) break;
    out.entries.push_back(e);
  }
  return Poly(std::move(out));
}

Poly Poly::shifted(int xexp, int yexp, int level) const {
  SparseVec out;
  out.entries.reserve(terms_.size());
  for (const auto& e : terms_.entries) {
    const auto [i, j] = monomial_exponents(e.col);
    if (i + j + xexp + yexp >= level) break;
    out.entries.push_back({monomial_index(i + xexp, j + yexp), e.val});
  }
  return Poly(std::move(out));
}

Poly Poly::scaled(Coeff c, const PrimeField& f) const {
  if (c == 0) return Poly{};
  SparseVec out = terms_;
  for (auto& e : out.entries) e.val = f.mul(e.val, c);
  return Poly(std::move(out));
}

std::string Poly::to_string(const PrimeField& f) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& e : terms_.entries) {
    const auto [i, j] = monomial_exponents(e.col);
    std::int64_t c = f.to_signed(e.val);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const std::int64_t mag = c < 0 ? -c : c;
    std::string mono;
    if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j > 0) {
      if (!mono.empty()) mono += "*";
      mono += j == 1 ? "y" : "y^" + std::to_string(j);
    }
    if (mono.empty()) {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += std::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

Poly add(const Poly& a, const Poly& b, const PrimeField& f) {
  SparseVec out;
  const auto& x = a.terms().entries;
  const auto& y = b.terms().entries;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
      out.entries.push_back(x[i++]);
    } else if (i == x.size() || y[j].col < x[i].col) {
      out.entries.push_back(y[j++]);
    } else {
      const Coeff s = f.add(x[i].val, y[j].val);
      if (s != 0) out.entries.push_back({x[i].col, s});
      ++i;
      ++j;
    }
  }
  return Poly(std::move(out));
}

Poly mul(const Poly& a, const Poly& b, const PrimeField& f, int level) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  if (a.is_monomial() || b.is_monomial()) {
    const Poly& m = a.is_monomial() ? a : b;
    const Poly& other = a.is_monomial() ? b : a;
    const auto [i, j] = monomial_exponents(m.terms().lead());
    return other.shifted(i, j, level).scaled(m.terms().entries.front().val, f);
  }
  const std::size_t dim = monomials_below(level);
  thread_local std::vector<std::uint64_t> acc;
  thread_local std::vector<std::uint8_t> touched;
  if (acc.size() < dim) {
    acc.resize(dim, 0);
    touched.resize(dim, 0);
  }
  const Coeff p = f.modulus();
  std::vector<std::uint32_t> cols;
  for (const auto& ea : a.terms().entries) {
    const auto [ai, aj] = monomial_exponents(ea.col);
    if (ai + aj >= level) break;
    for (const auto& eb : b.terms().entries) {
      const auto [bi, bj] = monomial_exponents(eb.col);
      if (ai + aj + bi + bj >= level) break;
      const std::uint32_t c = monomial_index(ai + bi, aj + bj);
      acc[c] = (acc[c] + static_cast<std::uint64_t>(ea.val) * eb.val) % p;
      if (!touched[c]) {
        touched[c] = 1;
        cols.push_back(c);
      }
    }
  }
  std::sort(cols.begin(), cols.end());
  SparseVec out;
  for (auto c : cols) {
    if (acc[c] != 0) out.entries.push_back({c, static_cast<Coeff>(acc[c])});
    acc[c] = 0;
    touched[c] = 0;
  }
  return Poly(std::move(out));
}

Poly pow(const Poly& a, int e, const PrimeField& f, int level) {
  Poly result = Poly::constant(1).truncated(level);
  Poly base = a.truncated(level);
  while (e > 0) {
    if (e & 1) result = mul(result, base, f, level);
    e >>= 1;
    if (e > 0) base = mul(base, base, f, level);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PrimeField& field, std::size_t offset)
      : text_(text), field_(field), offset_(offset) {}

  Poly parse_sum() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Poly sum;
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Poly term = parse_term();
      if (negative) term = term.scaled(field_.neg(1), field_);
      sum = add(sum, term, field_);
      skip_ws();
      if (at_end()) break;
    }
    return sum;
  }

 private:
  Poly parse_term() {
    Coeff coeff = 1;
    int xexp = 0;
    int yexp = 0;
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = field_.mul(coeff, parse_integer());
      } else if (c == '(') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected an integer after '('");
        }
        coeff = field_.mul(coeff, parse_integer());
        skip_ws();
        if (at_end() || peek() != ')') fail("expected ')'");
        ++pos_;
      } else if (c == 'x' || c == 'y') {
        ++pos_;
        const int e = parse_exponent();
        (c == 'x' ? xexp : yexp) += e;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Poly::monomial(xexp, yexp, coeff);
  }

  Coeff parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return field_.from_decimal(text_.substr(start, pos_ - start));
  }

  int parse_exponent() {
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an exponent after '^'");
    if (pos_ - start > 6) fail("exponent too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(offset_ + pos_, msg); }

  std::string_view text_;
  const PrimeField& field_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

PolyElement parse_at(std::string_view text, const AlgebraPtr& algebra, std::size_t offset) {
  PolyParser parser(text, algebra->field(), offset);
  Poly full = parser.parse_sum();
  PolyElement out;
  out.algebra = algebra;
  out.poly = full.truncated(algebra->order());
  out.truncated = out.poly.terms().size() != full.terms().size();
  out.source_text = std::string(text);
  return out;
}

}  // namespace

PolyElement parse_poly(std::string_view text, const AlgebraPtr& algebra) {
  return parse_at(text, algebra, 0);
}

std::vector<PolyElement> parse_generators(std::string_view text, const AlgebraPtr& algebra) {
  std::vector<PolyElement> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (text[i] != ',' || depth != 0) continue;
    }
    out.push_back(parse_at(text.substr(start, i - start), algebra, start));
    start = i + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Images and certification

Subspace ideal_image(const std::vector<Poly>& gens, int level, const PrimeField& field) {
  EchelonBuilder builder(field, monomials_below(level));
  for (const auto& g0 : gens) {
    const Poly g = g0.truncated(level);
    if (g.is_zero()) continue;
    const int ord = g.order();
    for (int d = 0; d + ord < level; ++d) {
      for (int j = 0; j <= d; ++j) builder.insert(g.shifted(d - j, j, level).terms());
    }
  }
  return builder.finish();
}

std::optional<int> detect_adequacy(const Subspace& image, int level) {
  const auto& piv = image.pivot_columns();
  std::size_t k = 0;
  for (int t = 0; t < level; ++t) {
    const auto lo = static_cast<std::uint32_t>(monomials_below(t));
    const auto hi = static_cast<std::uint32_t>(monomials_below(t + 1));
    while (k < piv.size() && piv[k] < lo) ++k;
    std::size_t count = 0;
    std::size_t m = k;
    while (m < piv.size() && piv[m] < hi) {
      ++count;
      ++m;
    }
    if (count == static_cast<std::size_t>(t + 1)) return t;
  }
  return std::nullopt;
}

namespace {

void require_certified(const LocalIdeal& k, const char* op) {
  if (!k.certified()) {
    throw Error(ErrorKind::TruncationInsufficient,
                std::string(op) + ": ideal " + k.to_string() +
                    " is not certified m-primary within truncation order " +
                    std::to_string(k.algebra()->order()));
  }
}

void require_same_algebra(const LocalIdeal& a, const LocalIdeal& b) {
  if (a.algebra() != b.algebra() &&
      (!(a.field() == b.field()) || a.algebra()->order() != b.algebra()->order())) {
    throw Error(ErrorKind::InvalidArgument, "ideals belong to different truncated algebras");
  }
}

std::vector<Poly> nonzero(const std::vector<Poly>& gens) {
  std::vector<Poly> out;
  for (const auto& g : gens) {
    if (!g.is_zero()) out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<Poly> minimal_generators(const LocalIdeal& k, const std::vector<Poly>& candidates) {
  require_certified(k, "minimal_generators");
  const int t = *k.adequacy();
  const PrimeField& f = k.field();
  const Subspace upper = k.image_at(t + 1);
  EchelonBuilder builder(f, monomials_below(t + 1));
  for (const auto& row : upper.basis()) {
    const Poly v(row);
    builder.insert(v.shifted(1, 0, t + 1).terms());
    builder.insert(v.shifted(0, 1, t + 1).terms());
  }
  const std::size_t target = upper.dim();
  std::vector<Poly> chosen;
  for (const auto& c : candidates) {
    if (builder.rank() == target) break;
    Poly ct = c.truncated(t + 1);
    if (ct.is_zero()) continue;
    if (builder.insert(ct.terms())) chosen.push_back(std::move(ct));
  }
  if (builder.rank() != target) {
    throw Error(ErrorKind::InternalIdentityFailure,
                "candidate generators do not generate the ideal");
  }
  return chosen;
}

Subspace LocalIdeal::image_at(int level) const {
  require_certified(*this, "image_at");
  const int t = *adequacy_;
  if (level >= t) return image_.with_full_tail(monomials_below(level));
  return image_.truncated(monomials_below(level));
}

bool LocalIdeal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_monomial(); });
}

std::string LocalIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string(field());
  }
  return out + ")";
}

LocalIdeal IdealFactory::unit(const AlgebraPtr& algebra) {
  return LocalIdeal(algebra, {Poly::constant(1)}, 0, Subspace(algebra->field(), 0));
}

LocalIdeal IdealFactory::from_image(const AlgebraPtr& algebra, const Subspace& image, int level,
                                    std::optional<int> known_bound) {
  std::optional<int> t = detect_adequacy(image, level);
  if (!t && known_bound && *known_bound <= level) t = level;
  if (!t) {
    throw Error(ErrorKind::TruncationInsufficient,
                "image at level " + std::to_string(level) + " does not certify m-primariness");
  }
  if (*t == 0) return unit(algebra);
  Subspace prefix = image.truncated(monomials_below(*t));
  std::vector<Poly> candidates;
  candidates.reserve(prefix.dim() + *t + 1);
  for (const auto& row : prefix.basis()) candidates.emplace_back(row);
  for (int j = 0; j <= *t; ++j) candidates.push_back(Poly::monomial(*t - j, j));
  LocalIdeal k(algebra, {}, t, std::move(prefix));
  k.gens_ = minimal_generators(k, candidates);
  return k;
}

LocalIdeal IdealFactory::from_generators(const AlgebraPtr& algebra, std::vector<Poly> gens,
                                         bool allow_uncertified) {
  gens = nonzero(gens);
  const int n = algebra->order();
  const PrimeField& f = algebra->field();
  if (gens.empty()) {
    if (allow_uncertified) return LocalIdeal(algebra, {}, std::nullopt, Subspace(f, algebra->dim()));
    throw Error(ErrorKind::NotMPrimary, "zero ideal");
  }
  for (auto& g : gens) g = g.truncated(n);
  int max_deg = 0;
  for (const auto& g : gens) max_deg = std::max(max_deg, g.degree());
  int level = std::min(n, std::max(4, 2 * max_deg + 2));
  while (true) {
    Subspace image = ideal_image(gens, level, f);
    if (auto t = detect_adequacy(image, level)) {
      if (*t == 0) return unit(algebra);
      LocalIdeal k(algebra, {}, t, image.truncated(monomials_below(*t)));
      k.gens_ = minimal_generators(k, gens);
      return k;
    }
    if (level == n) {
      if (allow_uncertified) return LocalIdeal(algebra, gens, std::nullopt, std::move(image));
      std::string text = "(";
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) text += ", ";
        text += gens[i].to_string(f);
      }
      throw Error(ErrorKind::NotMPrimary,
                  "ideal " + text + ") does not contain m^t for any t < " + std::to_string(n));
    }
    level = std::min(n, level + std::max(4, level / 2));
  }
}

LocalIdeal IdealFactory::sum_of_multiples(const AlgebraPtr& algebra,
                                          const std::vector<ScaledIdeal>& parts, int start_level,
                                          std::optional<int> guaranteed_level) {
  const int n = algebra->order();
  const PrimeField& f = algebra->field();
  std::vector<Poly> candidates;
  for (const auto& part : parts) {
    require_certified(*part.ideal, "sum_of_multiples");
    if (part.multiplier.is_zero()) continue;
    for (const auto& g : part.ideal->generators()) {
      candidates.push_back(mul(part.multiplier, g, f, n));
    }
  }
  int cap = n;
  if (guaranteed_level) cap = std::min(cap, *guaranteed_level);
  int level = std::clamp(start_level, 1, cap);
  while (true) {
    EchelonBuilder builder(f, monomials_below(level));
    for (const auto& part : parts) {
      const Poly mult = part.multiplier.truncated(level);
      if (mult.is_zero()) continue;
      const int ord = mult.order();
      const int inner = level - ord;
      const LocalIdeal& k = *part.ideal;
      const int t = *k.adequacy();
      // f·(K/m^inner) spans (fK + m^level)/m^level.
      const Subspace base = k.image().truncated(monomials_below(std::min(t, inner)));
      for (const auto& row : base.basis()) {
        builder.insert(mul(mult, Poly(row), f, level).terms());
      }
      for (int d = t; d < inner; ++d) {
        for (int j = 0; j <= d; ++j) builder.insert(mult.shifted(d - j, j, level).terms());
      }
    }
    Subspace image = builder.finish();
    std::optional<int> t = detect_adequacy(image, level);
    if (!t && guaranteed_level && *guaranteed_level == level) t = level;
    if (t) {
      if (*t == 0) return unit(algebra);
      LocalIdeal k(algebra, {}, t, image.truncated(monomials_below(*t)));
      k.gens_ = minimal_generators(k, candidates);
      return k;
    }
    if (level >= cap) {
      throw Error(ErrorKind::TruncationInsufficient,
                  "sum of multiples not certified m-primary below order " + std::to_string(level));
    }
    level = std::min(cap, level + std::max(2, level / 8));
  }
}

// ---------------------------------------------------------------------------
// Public operations

LocalIdeal ideal_from_gens(const AlgebraPtr& algebra, const std::vector<Poly>& gens) {
  return IdealFactory::from_generators(algebra, gens, false);
}

LocalIdeal ideal_from_gens(const std::vector<PolyElement>& gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "empty generator list");
  const AlgebraPtr& alg = gens.front().algebra;
  std::vector<Poly> polys;
  for (const auto& g : gens) {
    if (g.algebra != alg) throw Error(ErrorKind::InvalidArgument, "generators from different algebras");
    polys.push_back(g.poly);
  }
  return IdealFactory::from_generators(alg, polys, false);
}

LocalIdeal ideal_from_gens_uncertified(const AlgebraPtr& algebra, const std::vector<Poly>& gens) {
  return IdealFactory::from_generators(algebra, gens, true);
}

LocalIdeal ideal_from_text(const AlgebraPtr& algebra, std::string_view generators) {
  return ideal_from_gens(parse_generators(generators, algebra));
}

LocalIdeal maximal_ideal(const AlgebraPtr& algebra) {
  return ideal_from_gens(algebra, {Poly::monomial(1, 0), Poly::monomial(0, 1)});
}

LocalIdeal unit_ideal(const AlgebraPtr& algebra) { return IdealFactory::unit(algebra); }

std::optional<int> adequacy_order(const LocalIdeal& k) { return k.adequacy(); }

LocalIdeal mul_ideals(const LocalIdeal& a, const LocalIdeal& b) {
  require_same_algebra(a, b);
  require_certified(a, "mul_ideals");
  require_certified(b, "mul_ideals");
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  // Multiply the ideal with more generators by the generators of the other.
  const LocalIdeal& base = a.generators().size() >= b.generators().size() ? a : b;
  const LocalIdeal& other = &base == &a ? b : a;
  std::vector<ScaledIdeal> parts;
  for (const auto& g : other.generators()) parts.push_back({g, &base});
  const int bound = *a.adequacy() + *b.adequacy();
  return IdealFactory::sum_of_multiples(a.algebra(), parts, bound, bound);
}

LocalIdeal power_ideal(const LocalIdeal& k, int r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "negative power");
  require_certified(k, "power_ideal");
  LocalIdeal result = unit_ideal(k.algebra());
  LocalIdeal base = k;
  while (r > 0) {
    if (r & 1) result = mul_ideals(result, base);
    r >>= 1;
    if (r > 0) base = mul_ideals(base, base);
  }
  return result;
}

LocalIdeal sum_ideals(const LocalIdeal& a, const LocalIdeal& b) {
  require_same_algebra(a, b);
  require_certified(a, "sum_ideals");
  require_certified(b, "sum_ideals");
  const int level = std::max(*a.adequacy(), *b.adequacy());
  Subspace s = subspace_sum(a.image_at(level), b.image_at(level));
  return IdealFactory::from_image(a.algebra(), s, level, std::min(*a.adequacy(), *b.adequacy()));
}

LocalIdeal intersect_ideals(const LocalIdeal& a, const LocalIdeal& b) {
  require_same_algebra(a, b);
  require_certified(a, "intersect_ideals");
  require_certified(b, "intersect_ideals");
  const int level = std::max(*a.adequacy(), *b.adequacy());
  Subspace s = subspace_intersect(a.image_at(level), b.image_at(level));
  return IdealFactory::from_image(a.algebra(), s, level, level);
}

LocalIdeal colon_by_element(const LocalIdeal& k, const Poly& f0) {
  require_certified(k, "colon_by_element");
  const PrimeField& field = k.field();
  if (f0.is_zero()) throw Error(ErrorKind::ZeroDivisorInput, "colon by the zero element");
  const int t = *k.adequacy();
  const Poly f = f0.truncated(t);
  if (t == 0 || f.is_zero()) return unit_ideal(k.algebra());
  // f·m^(t - ord f) ⊆ m^t ⊆ K, so the colon contains m^(t - ord f).
  const int level = t - f.order();
  const Subspace& img = k.image();
  const Subspace base = img.truncated(monomials_below(level));
  // K ⊆ (K : f); it remains to find the kernel of g ↦ f·g mod K on the
  // standard monomials of K below `level`.
  std::vector<std::uint32_t> standard;
  for (std::uint32_t c = 0; c < monomials_below(level); ++c) {
    if (!base.is_pivot(c)) standard.push_back(c);
  }
  std::vector<SparseVec> images;
  images.reserve(standard.size());
  for (auto c : standard) {
    const auto [i, j] = monomial_exponents(c);
    images.push_back(img.reduce(f.shifted(i, j, t).terms()));
  }
  EchelonBuilder colon(base);
  for (const auto& combo : left_kernel(images, monomials_below(t), field)) {
    SparseVec g;
    for (const auto& e : combo.entries) g.entries.push_back({standard[e.col], e.val});
    colon.insert(g);
  }
  return IdealFactory::from_image(k.algebra(), colon.finish(), level, level);
}

LocalIdeal colon_by_ideal(const LocalIdeal& k, const LocalIdeal& l) {
  require_same_algebra(k, l);
  require_certified(k, "colon_by_ideal");
  if (l.generators().empty()) throw Error(ErrorKind::ZeroDivisorInput, "colon by the zero ideal");
  std::optional<LocalIdeal> acc;
  for (const auto& g : l.generators()) {
    LocalIdeal c = colon_by_element(k, g);
    acc = acc ? intersect_ideals(*acc, c) : std::move(c);
  }
  return *acc;
}

LocalIdeal add_element(const LocalIdeal& k, const Poly& f0) {
  require_certified(k, "add_element");
  const int t = *k.adequacy();
  const Poly f = f0.truncated(t);
  if (t == 0 || f.is_zero()) return k;
  EchelonBuilder b(k.image());
  const int ord = f.order();
  for (int d = 0; d + ord < t; ++d) {
    for (int j = 0; j <= d; ++j) b.insert(f.shifted(d - j, j, t).terms());
  }
  return IdealFactory::from_image(k.algebra(), b.finish(), t, t);
}

std::int64_t colon_colength(const LocalIdeal& k, const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroDivisorInput, "colon by the zero element");
  return colength(k) - colength(add_element(k, f));
}

bool ideal_eq(const LocalIdeal& a, const LocalIdeal& b) {
  require_same_algebra(a, b);
  require_certified(a, "ideal_eq");
  require_certified(b, "ideal_eq");
  return *a.adequacy() == *b.adequacy() && a.image() == b.image();
}

bool contains(const LocalIdeal& k, const Poly& f) {
  require_certified(k, "contains");
  const Poly ft = f.truncated(*k.adequacy());
  return k.image().contains(ft.terms());
}

bool ideal_subset(const LocalIdeal& a, const LocalIdeal& b) {
  require_same_algebra(a, b);
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Poly& g) { return contains(b, g); });
}

std::int64_t colength(const LocalIdeal& k) {
  require_certified(k, "colength");
  return static_cast<std::int64_t>(monomials_below(*k.adequacy())) -
         static_cast<std::int64_t>(k.image().dim());
}

}  // namespace bhat
