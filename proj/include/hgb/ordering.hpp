#pragma once

#include "hgb/monomial.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hgb {

enum class OrderScheme { lex, deglex };

std::string to_string(OrderScheme scheme);

/// An admissible monomial ordering. Generators are ranked by
/// `precedence`: precedence[0] is the greatest generator.
///
/// Commutative monomials support LEX and DEGLEX. Words support DEGLEX only:
/// shorter words are smaller, equal-length words compare letter by letter
/// from the left.
class MonomialOrder {
public:
  MonomialOrder() = default;
  /// Precedence equal to generator index order (index 0 greatest).
  MonomialOrder(OrderScheme scheme, std::size_t generators);
  /// Throws InputError unless `precedence` is a permutation.
  MonomialOrder(OrderScheme scheme, std::vector<std::size_t> precedence);

  OrderScheme scheme() const noexcept { return scheme_; }
  std::size_t generators() const noexcept { return precedence_.size(); }
  const std::vector<std::size_t>& precedence() const noexcept {
    return precedence_;
  }
  /// Position of a generator in the precedence list (0 = greatest).
  std::size_t rank(std::size_t generator) const { return rank_.at(generator); }

  std::strong_ordering compare(const CommMonomial& a,
                               const CommMonomial& b) const;
  std::strong_ordering compare(const Word& a, const Word& b) const;

  bool less(const CommMonomial& a, const CommMonomial& b) const {
    return compare(a, b) < 0;
  }
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.scheme_ == b.scheme_ && a.precedence_ == b.precedence_;
  }

private:
  OrderScheme scheme_ = OrderScheme::deglex;
  std::vector<std::size_t> precedence_;
  std::vector<std::size_t> rank_;
};

template <class M>
using Comparator = std::function<std::strong_ordering(const M&, const M&)>;

template <class M>
struct AdmissibilityViolation {
  std::string property;
  M a;
  M b;
  M c;
};

template <class M>
struct AdmissibilityReport {
  std::size_t monomials_checked = 0;
  std::optional<AdmissibilityViolation<M>> violation;
  bool passed() const noexcept { return !violation.has_value(); }
};

/// Exhaustive check over every monomial of degree <= sample_degree in
/// `generators` variables (at most 3): antisymmetry, Equal only on identity,
/// transitivity, 1 minimal, and a < b => ac < bc (plus ca < cb for words).
AdmissibilityReport<CommMonomial>
check_admissibility(const Comparator<CommMonomial>& cmp,
                    std::size_t generators, int sample_degree);
AdmissibilityReport<Word> check_admissibility(const Comparator<Word>& cmp,
                                              std::size_t generators,
                                              int sample_degree);

AdmissibilityReport<CommMonomial>
check_admissibility_commutative(const MonomialOrder& ord, int sample_degree);
AdmissibilityReport<Word> check_admissibility_words(const MonomialOrder& ord,
                                                    int sample_degree);

/// All commutative monomials in `generators` variables of total degree
/// exactly `degree`.
std::vector<CommMonomial> monomials_of_degree(std::size_t generators,
                                              std::size_t degree);
/// All words of length exactly `length` over `generators` letters.
std::vector<Word> words_of_length(std::size_t generators, std::size_t length);

} // namespace hgb
