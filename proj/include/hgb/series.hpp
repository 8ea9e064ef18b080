#pragma once

#include "hgb/groebner.hpp"
#include "hgb/noncommutative.hpp"
#include "hgb/presentation.hpp"
#include "hgb/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hgb {

/// Formal power series c_0 + c_1 t + ... + c_D t^D with integer
/// coefficients; everything above D is unknown and never read.
class TruncatedSeries {
public:
  TruncatedSeries() : coeffs_(1) {}
  /// Zero series truncated at `degree`.
  explicit TruncatedSeries(std::size_t degree) : coeffs_(degree + 1) {}
  explicit TruncatedSeries(std::vector<BigInt> coeffs);
  TruncatedSeries(std::initializer_list<long> coeffs);

  static TruncatedSeries one(std::size_t degree);
  /// Coefficients taken from `coeffs`, padded with zeros (or cut) to degree.
  static TruncatedSeries from(std::initializer_list<long> coeffs,
                              std::size_t degree);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
  BigInt& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// Same series cut (or zero-padded) to a new truncation degree.
  TruncatedSeries truncated(std::size_t degree) const;
  bool is_zero() const;
  /// Degree of the last nonzero coefficient, if any.
  std::optional<std::size_t> last_nonzero() const;

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

private:
  std::vector<BigInt> coeffs_;
};

/// Throw DegreeMismatchError on unequal truncation degrees.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Throws NonUnitError unless c_0 is +1 or -1.
TruncatedSeries series_inverse(const TruncatedSeries& a);

inline TruncatedSeries operator+(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return series_add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return series_sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return series_mul(a, b);
}

/// "1 - 2t + t^2"
std::string format_series_polynomial(const TruncatedSeries& s);

/// "1 + t + t^2" when h itself is a polynomial of degree k with 2k <= D,
/// else "1/(1 - 2t + t^2)" when its inverse is; otherwise nullopt.
std::optional<std::string> rational_form(const TruncatedSeries& h);

/// Aho-Corasick style automaton over a set of forbidden factors. Live
/// states are the prefixes of obstructions that contain no obstruction;
/// walks from the root through live states spell exactly the normal words.
class FactorAutomaton {
public:
  static constexpr std::size_t dead = static_cast<std::size_t>(-1);

  FactorAutomaton(std::span<const Word> obstructions, std::size_t generators);

  std::size_t generators() const noexcept { return generators_; }
  std::size_t states() const noexcept { return live_.size(); }
  bool live(std::size_t state) const { return live_.at(state); }
  /// Next state, or `dead` if the letter completes an obstruction.
  std::size_t step(std::size_t state, Letter letter) const;
  bool accepts(const Word& w) const;

  /// Number of accepted words by weighted degree, with letter i weighing
  /// degrees[i] (all 1 when empty).
  TruncatedSeries count(std::size_t max_degree,
                        std::span<const int> degrees = {}) const;

private:
  std::size_t generators_;
  std::vector<std::size_t> next_;
  std::vector<bool> live_;
};

/// Normal-word counts for a monomial quotient of the free algebra.
/// Obstructions longer than max_degree are ignored.
TruncatedSeries count_normal_words(std::span<const Word> obstructions,
                                   std::size_t generators,
                                   std::size_t max_degree,
                                   std::span<const int> degrees = {});

/// Monomials not divisible by any element of `leading`, by weighted degree.
TruncatedSeries count_normal_monomials(std::span<const CommMonomial> leading,
                                       std::size_t generators,
                                       std::size_t max_degree,
                                       std::span<const int> degrees = {});

/// Throws GradingError naming the first inhomogeneous relation.
void require_graded(const Presentation& p);

/// Hilbert series of a commutative quotient from its basis' leading terms.
TruncatedSeries series_from_normal_words(const Presentation& p,
                                         std::span<const CommMonomial> leading,
                                         std::size_t max_degree);
/// Hilbert series of a noncommutative quotient from its obstructions.
TruncatedSeries series_from_normal_words(const Presentation& p,
                                         std::span<const Word> obstructions,
                                         std::size_t max_degree);
/// As above, refusing with SaturationError when the completion is
/// unsaturated and shallower than max_degree.
TruncatedSeries series_from_normal_words(const Presentation& p,
                                         const CompletionResult& completion,
                                         std::size_t max_degree);
TruncatedSeries series_from_normal_words(const Presentation& p,
                                         const GroebnerBasis& basis,
                                         std::size_t max_degree);

/// prod (1 - t^d)^{-1}
TruncatedSeries polynomial_algebra_series(std::span<const int> degrees,
                                          std::size_t max_degree);
/// prod (1 + t^d)
TruncatedSeries exterior_algebra_series(std::span<const int> degrees,
                                        std::size_t max_degree);
/// (1 - sum t^d)^{-1}
TruncatedSeries free_algebra_series(std::span<const int> degrees,
                                    std::size_t max_degree);
/// (H_A^{-1} + H_B^{-1} - 1)^{-1}. Both inputs need constant term 1.
TruncatedSeries free_product_series(const TruncatedSeries& a,
                                    const TruncatedSeries& b);

} // namespace hgb
