#pragma once

#include "hgb/monomial.hpp"
#include "hgb/series.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace hgb {

/// Antichain of obstruction words (no element is a factor of another)
/// over a generator alphabet. Degree-1 obstructions are folded into the
/// alphabet: the generator is removed, together with every obstruction
/// that mentions it.
class ObstructionSet {
public:
  ObstructionSet() = default;
  /// Drops empty words, duplicates and non-minimal elements.
  ObstructionSet(std::vector<Word> obstructions, std::size_t generators);

  std::size_t generators() const noexcept { return generators_; }
  /// Generators that survive degree-1 obstructions, increasing.
  const std::vector<Letter>& alphabet() const noexcept { return alphabet_; }
  /// Minimal obstructions of degree >= 2, sorted by (length, letters).
  const std::vector<Word>& words() const noexcept { return words_; }
  /// Obstructions as given after minimization, including degree 1.
  const std::vector<Word>& all_words() const noexcept { return all_; }

  /// Counts every (position, obstruction) factor occurrence in w.
  std::size_t deg_F(const Word& w) const;
  /// No obstruction (of any degree) occurs in w.
  bool is_normal(const Word& w) const;

private:
  std::size_t generators_ = 0;
  std::vector<Letter> alphabet_;
  std::vector<Word> words_;
  std::vector<Word> all_;
};

/// Occurrence count of elements of F as factors of w.
std::size_t deg_F(const Word& w, std::span<const Word> F);

struct Chain {
  Word word;
  int n = -1;
  std::size_t tail_length = 0;

  Word tail() const { return word.sub(word.size() - tail_length, tail_length); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Chains grouped by index n in [-1, n_max]; each group sorted by degree,
/// then word.
class ChainTable {
public:
  ChainTable(int n_max, std::size_t max_degree)
      : n_max_(n_max), max_degree_(max_degree),
        chains_(static_cast<std::size_t>(n_max + 2)) {}

  int n_max() const noexcept { return n_max_; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  const std::vector<Chain>& chains(int n) const {
    return chains_.at(static_cast<std::size_t>(n + 1));
  }
  std::vector<Chain>& chains(int n) {
    return chains_.at(static_cast<std::size_t>(n + 1));
  }
  /// Number of n-chains of each degree.
  std::map<std::size_t, std::size_t> counts(int n) const;

private:
  int n_max_;
  std::size_t max_degree_;
  std::vector<std::vector<Chain>> chains_;
};

/// Builds n-chains inductively: an (n-1)-chain g with tail r extends by a
/// nonempty normal word t when r*t contains exactly one obstruction,
/// occurring as its suffix.
ChainTable enumerate_chains(const ObstructionSet& F, int n_max,
                            std::size_t max_degree);

/// Coefficient d counts the n-chains of degree d.
TruncatedSeries chain_series(const ObstructionSet& F, int n,
                             std::size_t max_degree);
TruncatedSeries chain_series(const ChainTable& table, int n);

/// sum_{n >= -1} (-1)^{n+1} H_{C_n}, truncated at max_degree.
TruncatedSeries alternating_chain_sum(const ObstructionSet& F,
                                      std::size_t max_degree);

/// Inverse of the alternating chain sum.
TruncatedSeries hilbert_from_chains(const ObstructionSet& F,
                                    std::size_t max_degree);

struct EulerReport {
  /// H_A * (alternating chain sum) - 1, per degree.
  TruncatedSeries residuals;
  bool passed() const { return residuals.is_zero(); }
};

/// Checks H_A * sum (-1)^{n+1} H_{C_n} = 1 with H_A counted independently
/// from normal words.
EulerReport euler_identity_check(const ObstructionSet& F,
                                 std::size_t max_degree);

} // namespace hgb
