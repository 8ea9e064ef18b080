#include "hgb/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hgb {

std::uint64_t CommMonomial::degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(),
                         std::uint64_t{0});
}

bool CommMonomial::is_one() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](auto e) { return e == 0; });
}

CommMonomial CommMonomial::operator*(const CommMonomial& other) const {
  if (arity() != other.arity())
    throw std::invalid_argument("monomial arity mismatch");
  CommMonomial out(*this);
  for (std::size_t i = 0; i < arity(); ++i)
    out.exponents_[i] += other.exponents_[i];
  return out;
}

std::optional<CommMonomial> divides(const CommMonomial& m1,
                                    const CommMonomial& m2) {
  if (m1.arity() != m2.arity())
    throw std::invalid_argument("monomial arity mismatch");
  std::vector<std::uint32_t> q(m1.arity());
  for (std::size_t i = 0; i < m1.arity(); ++i) {
    if (m1[i] > m2[i])
      return std::nullopt;
    q[i] = m2[i] - m1[i];
  }
  return CommMonomial(std::move(q));
}

CommMonomial lcm(const CommMonomial& a, const CommMonomial& b) {
  if (a.arity() != b.arity())
    throw std::invalid_argument("monomial arity mismatch");
  std::vector<std::uint32_t> e(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i)
    e[i] = std::max(a[i], b[i]);
  return CommMonomial(std::move(e));
}

bool coprime(const CommMonomial& a, const CommMonomial& b) {
  for (std::size_t i = 0; i < std::min(a.arity(), b.arity()); ++i)
    if (a[i] != 0 && b[i] != 0)
      return false;
  return true;
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size())
    throw std::out_of_range("subword out of range");
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

bool Word::starts_with(const Word& prefix) const noexcept {
  return prefix.size() <= size() &&
         std::equal(prefix.begin(), prefix.end(), letters_.begin());
}

bool Word::ends_with(const Word& suffix) const noexcept {
  return suffix.size() <= size() &&
         std::equal(suffix.begin(), suffix.end(),
                    letters_.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

Word Word::operator*(const Word& other) const {
  Word out(*this);
  out *= other;
  return out;
}

Word& Word::operator*=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

std::vector<std::size_t> find_factor(const Word& word, const Word& factor) {
  std::vector<std::size_t> out;
  if (factor.empty() || factor.size() > word.size())
    return out;
  auto first = word.begin();
  for (auto it = std::search(first, word.end(), factor.begin(), factor.end());
       it != word.end();
       it = std::search(it + 1, word.end(), factor.begin(), factor.end()))
    out.push_back(static_cast<std::size_t>(it - first));
  return out;
}

std::optional<std::size_t> find_first_factor(const Word& word,
                                             const Word& factor) {
  if (factor.empty() || factor.size() > word.size())
    return std::nullopt;
  auto it = std::search(word.begin(), word.end(), factor.begin(), factor.end());
  if (it == word.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - word.begin());
}

bool contains_factor(const Word& word, const Word& factor) {
  return find_first_factor(word, factor).has_value();
}

} // namespace hgb
