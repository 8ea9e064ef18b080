#pragma once

#include "hgb/error.hpp"
#include "hgb/monomial.hpp"
#include "hgb/ordering.hpp"
#include "hgb/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace hgb {

enum class RingKind { commutative, noncommutative };

/// Generators, their degrees and the monomial order of a polynomial ring.
/// Polynomials hold a shared pointer to their context; operations on
/// polynomials from different contexts throw RingMismatchError.
struct RingContext {
  RingKind kind = RingKind::commutative;
  std::vector<std::string> generators;
  std::vector<int> degrees;
  MonomialOrder order;

  /// Validates unique names, degrees >= 1, and rejects LEX on words.
  static std::shared_ptr<const RingContext>
  make(RingKind kind, std::vector<std::string> generators,
       OrderScheme scheme = OrderScheme::deglex, std::vector<int> degrees = {});

  std::size_t size() const noexcept { return generators.size(); }
  bool unit_degrees() const noexcept;
  std::uint64_t weighted_degree(const CommMonomial& m) const;
  std::uint64_t weighted_degree(const Word& w) const;
  /// Index of a generator name, or size() if absent.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;
};

using Ring = std::shared_ptr<const RingContext>;

inline bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b))
    throw RingMismatchError("polynomials belong to different rings");
}

template <class M>
struct Term {
  M monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

namespace detail {

inline void check_monomial(const RingContext& ring, const CommMonomial& m) {
  if (ring.kind != RingKind::commutative || m.arity() != ring.size())
    throw RingMismatchError("monomial arity does not match ring");
}

inline void check_monomial(const RingContext& ring, const Word& w) {
  if (ring.kind != RingKind::noncommutative)
    throw RingMismatchError("words require a noncommutative ring");
  for (Letter l : w)
    if (l >= ring.size())
      throw RingMismatchError("word letter outside generator range");
}

} // namespace detail

/// Finite sum of terms with exact rational coefficients. Terms are kept
/// sorted strictly decreasing under the ring's order and never carry a
/// zero coefficient, so the leading term is always terms().front().
template <class M>
class Polynomial {
public:
  using Monomial = M;

  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  /// Combines duplicate monomials and drops zero coefficients.
  Polynomial(Ring ring, std::vector<Term<M>> terms) : ring_(std::move(ring)) {
    for (const auto& t : terms)
      detail::check_monomial(*ring_, t.monomial);
    const auto& ord = ring_->order;
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
      return ord.compare(a.monomial, b.monomial) > 0;
    });
    for (auto& t : terms) {
      if (!terms_.empty() && terms_.back().monomial == t.monomial)
        terms_.back().coeff += t.coeff;
      else
        terms_.push_back(std::move(t));
    }
    std::erase_if(terms_, [](const auto& t) { return t.coeff == 0; });
  }

  static Polynomial constant(Ring ring, const Rational& c) {
    M one = unit_monomial(*ring);
    return Polynomial(std::move(ring), {Term<M>{std::move(one), c}});
  }

  static Polynomial monomial(Ring ring, M m, const Rational& c = 1) {
    return Polynomial(std::move(ring), {Term<M>{std::move(m), c}});
  }

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Term<M>> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const Term<M>& leading() const {
    if (terms_.empty())
      throw NoLeadingTermError();
    return terms_.front();
  }
  const M& leading_monomial() const { return leading().monomial; }
  const Rational& leading_coeff() const { return leading().coeff; }

  /// True for nonzero constants.
  bool is_unit() const noexcept {
    return terms_.size() == 1 && terms_.front().monomial.is_one();
  }

  /// Highest degree among the terms; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& t : terms_)
      d = std::max<std::uint64_t>(d, t.monomial.degree());
    return d;
  }

  Polynomial operator+(const Polynomial& other) const {
    return merge(other, Rational(1));
  }
  Polynomial operator-(const Polynomial& other) const {
    return merge(other, Rational(-1));
  }
  Polynomial operator-() const { return scaled(Rational(-1)); }

  Polynomial scaled(const Rational& c) const {
    Polynomial out(ring_);
    if (c == 0)
      return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      out.terms_.push_back({t.monomial, t.coeff * c});
    return out;
  }

  /// Divides by the leading coefficient. Zero stays zero.
  Polynomial monic() const {
    if (is_zero())
      return *this;
    return scaled(1 / leading_coeff());
  }

  Polynomial without_leading() const {
    Polynomial out(ring_);
    if (!terms_.empty())
      out.terms_.assign(terms_.begin() + 1, terms_.end());
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  /// Appends a term strictly smaller than every stored term. Used by
  /// reduction loops that build remainders in decreasing order.
  void push_back_smallest(Term<M> t) {
    if (t.coeff != 0)
      terms_.push_back(std::move(t));
  }

  /// Builds from terms the caller guarantees are sorted, distinct, nonzero.
  static Polynomial from_sorted(Ring ring, std::vector<Term<M>> terms) {
    Polynomial out(std::move(ring));
    out.terms_ = std::move(terms);
    return out;
  }

private:
  static M unit_monomial(const RingContext& ring) {
    if constexpr (std::is_same_v<M, CommMonomial>)
      return CommMonomial(ring.size());
    else
      return M{};
  }

  Polynomial merge(const Polynomial& other, const Rational& sign) const {
    require_same_ring(ring_, other.ring_);
    const auto& ord = ring_->order;
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
      if (b == other.terms_.end()) {
        out.terms_.push_back(*a++);
        continue;
      }
      if (a == terms_.end()) {
        out.terms_.push_back({b->monomial, b->coeff * sign});
        ++b;
        continue;
      }
      auto c = ord.compare(a->monomial, b->monomial);
      if (c > 0) {
        out.terms_.push_back(*a++);
      } else if (c < 0) {
        out.terms_.push_back({b->monomial, b->coeff * sign});
        ++b;
      } else {
        Rational sum = a->coeff + b->coeff * sign;
        if (sum != 0)
          out.terms_.push_back({a->monomial, std::move(sum)});
        ++a;
        ++b;
      }
    }
    return out;
  }

  Ring ring_;
  std::vector<Term<M>> terms_;
};

using CommPolynomial = Polynomial<CommMonomial>;
using WordPolynomial = Polynomial<Word>;

enum class Side { left, right, both };

/// c * m * p for commutative polynomials.
CommPolynomial scale_mul(const Rational& c, const CommMonomial& m,
                         const CommPolynomial& p);
/// c * left * p * right for words.
WordPolynomial scale_mul(const Rational& c, const Word& left,
                         const WordPolynomial& p, const Word& right);
/// c * m * p, c * p * m, or c * m * p * m depending on `side`.
WordPolynomial scale_mul(const Rational& c, const Word& m,
                         const WordPolynomial& p, Side side);

/// Ord-maximal term of p under an arbitrary order on p's monomial kind.
template <class M>
Term<M> leading_term(const Polynomial<M>& p, const MonomialOrder& ord) {
  if (p.is_zero())
    throw NoLeadingTermError();
  if (ord == p.ring()->order)
    return p.leading();
  const Term<M>* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (ord.compare(t.monomial, best->monomial) > 0)
      best = &t;
  return *best;
}

/// All terms of the same weighted degree.
template <class M>
bool is_homogeneous(const Polynomial<M>& p) {
  if (p.is_zero())
    return true;
  const auto& ring = *p.ring();
  auto d = ring.weighted_degree(p.terms().front().monomial);
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) {
    return ring.weighted_degree(t.monomial) == d;
  });
}

} // namespace hgb
