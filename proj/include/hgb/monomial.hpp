#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace hgb {

using Letter = std::uint32_t;

/// Commutative monomial x_1^{e_1} ... x_n^{e_n}, stored as its exponent
/// vector. The vector length equals the generator count of the ring.
class CommMonomial {
public:
  CommMonomial() = default;
  explicit CommMonomial(std::size_t arity) : exponents_(arity, 0) {}
  explicit CommMonomial(std::vector<std::uint32_t> exponents)
      : exponents_(std::move(exponents)) {}
  CommMonomial(std::initializer_list<std::uint32_t> exponents)
      : exponents_(exponents) {}

  static CommMonomial variable(std::size_t arity, std::size_t index,
                               std::uint32_t power = 1) {
    CommMonomial m(arity);
    m.exponents_.at(index) = power;
    return m;
  }

  std::size_t arity() const noexcept { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept {
    return exponents_;
  }
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  /// Requires equal arity.
  CommMonomial operator*(const CommMonomial& other) const;

  friend auto operator<=>(const CommMonomial&, const CommMonomial&) = default;
  friend bool operator==(const CommMonomial&, const CommMonomial&) = default;

private:
  std::vector<std::uint32_t> exponents_;
};

/// True iff `m1` divides `m2`; on success the quotient m2 / m1 is returned.
std::optional<CommMonomial> divides(const CommMonomial& m1,
                                    const CommMonomial& m2);
CommMonomial lcm(const CommMonomial& a, const CommMonomial& b);
bool coprime(const CommMonomial& a, const CommMonomial& b);

/// Non-commutative monomial: a word over generator indices.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word power(Letter letter, std::size_t n) {
    return Word(std::vector<Letter>(n, letter));
  }

  std::size_t size() const noexcept { return letters_.size(); }
  std::size_t degree() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_one() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Subword [pos, pos + len).
  Word sub(std::size_t pos, std::size_t len) const;
  bool starts_with(const Word& prefix) const noexcept;
  bool ends_with(const Word& suffix) const noexcept;

  Word operator*(const Word& other) const;
  Word& operator*=(const Word& other);
  Word& push_back(Letter l) {
    letters_.push_back(l);
    return *this;
  }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

/// Every start index at which `factor` occurs contiguously in `word`,
/// in increasing order. An empty factor yields no positions.
std::vector<std::size_t> find_factor(const Word& word, const Word& factor);

/// Leftmost occurrence of `factor` in `word`, if any.
std::optional<std::size_t> find_first_factor(const Word& word,
                                             const Word& factor);

bool contains_factor(const Word& word, const Word& factor);

} // namespace hgb
