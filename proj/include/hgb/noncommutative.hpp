#pragma once

#include "hgb/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hgb {

enum class OverlapKind { suffix_prefix, containment, self_overlap };

/// Witness lt(left) * right_cofactor == left_cofactor * lt(right), where a
/// proper suffix of lt(left) equals a proper prefix of lt(right).
/// `left` and `right` index into the polynomial list the overlap was
/// enumerated from.
struct Overlap {
  OverlapKind kind = OverlapKind::suffix_prefix;
  Word left_cofactor;
  Word right_cofactor;
  std::size_t left = 0;
  std::size_t right = 0;
  /// Length of lt(left) * right_cofactor.
  std::size_t degree = 0;

  friend bool operator==(const Overlap&, const Overlap&) = default;
};

/// Leftmost-occurrence two-sided reduction of lt(f) by lt(g).
/// Throws NotReducibleError if lt(g) is not a factor of lt(f).
WordPolynomial reduce_once_nc(const WordPolynomial& f, const WordPolynomial& g);

struct ReducerChoice {
  std::size_t index;
  std::size_t position;
};

/// Among elements whose leading word occurs in `w`: smallest leading word,
/// then earliest index; leftmost occurrence.
std::optional<ReducerChoice> select_reducer(const Word& w,
                                            std::span<const WordPolynomial> G);

WordPolynomial normal_form(const WordPolynomial& f,
                           std::span<const WordPolynomial> G);

/// Overlaps between lt(f) and lt(g) in both orders (once for f == g).
/// Participants are labelled `fi` for f and `gi` for g.
std::vector<Overlap> enumerate_overlaps(const WordPolynomial& f,
                                        const WordPolynomial& g,
                                        std::size_t fi = 0, std::size_t gi = 1);

/// Overlaps of lt(f) followed by lt(g) only.
std::vector<Overlap> directed_overlaps(const Word& f, const Word& g,
                                       std::size_t fi, std::size_t gi);

/// (1/lc(L)) L * right_cofactor - (1/lc(R)) left_cofactor * R for the
/// overlap's participants L = polys[o.left], R = polys[o.right].
/// Throws InputError if the overlap does not witness the identity.
WordPolynomial s_polynomial_nc(std::span<const WordPolynomial> polys,
                               const Overlap& o);
/// Two-polynomial form: participant index 0 is f and 1 is g.
WordPolynomial s_polynomial_nc(const WordPolynomial& f,
                               const WordPolynomial& g, const Overlap& o);

struct CompletionResult {
  /// Monic, inter-reduced, sorted by increasing leading word.
  std::vector<WordPolynomial> basis;
  std::size_t complete_to_degree = 0;
  /// No overlap of the basis exceeds the bound: the basis is a genuine
  /// Gröbner basis rather than a truncation.
  bool saturated = false;

  std::vector<Word> leading_words() const;
};

/// Degree-bounded completion. Every overlap whose word has degree at most
/// `max_degree` is processed, in order of degree then insertion.
/// Throws InputError on a zero relation or if `max_degree` is below the
/// degree of some relation.
CompletionResult complete_to_degree(std::span<const WordPolynomial> relations,
                                    std::size_t max_degree);

struct NcDiamondReport {
  std::size_t overlaps_checked = 0;
  std::vector<Overlap> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// Every overlap of G with word degree <= max_degree has normal form zero.
NcDiamondReport check_diamond_nc(std::span<const WordPolynomial> G,
                                 std::size_t max_degree);

/// Words over `generators` letters avoiding every element of `obstructions`
/// as a factor; result[d] holds the words of length d, in increasing
/// letter-index order.
std::vector<std::vector<Word>> normal_words(std::span<const Word> obstructions,
                                            std::size_t generators,
                                            std::size_t max_degree);

} // namespace hgb
