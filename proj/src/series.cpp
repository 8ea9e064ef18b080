#include "hgb/series.hpp"

#include <deque>

namespace hgb {

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    coeffs_.resize(1);
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> coeffs) {
  for (long c : coeffs)
    coeffs_.emplace_back(c);
  if (coeffs_.empty())
    coeffs_.resize(1);
}

TruncatedSeries TruncatedSeries::one(std::size_t degree) {
  TruncatedSeries s(degree);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from(std::initializer_list<long> coeffs,
                                      std::size_t degree) {
  TruncatedSeries s(degree);
  std::size_t i = 0;
  for (long c : coeffs) {
    if (i > degree)
      break;
    s.coeffs_[i++] = c;
  }
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t degree) const {
  std::vector<BigInt> c(degree + 1);
  for (std::size_t i = 0; i <= degree && i < coeffs_.size(); ++i)
    c[i] = coeffs_[i];
  return TruncatedSeries(std::move(c));
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0)
      return false;
  return true;
}

std::optional<std::size_t> TruncatedSeries::last_nonzero() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (coeffs_[i] != 0)
      return i;
  return std::nullopt;
}

namespace {

void require_same_degree(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatchError("series truncated at different degrees (" +
                              std::to_string(a.degree()) + " vs " +
                              std::to_string(b.degree()) + ")");
}

} // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b);
  TruncatedSeries out(a.degree());
  for (std::size_t i = 0; i <= a.degree(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b);
  TruncatedSeries out(a.degree());
  for (std::size_t i = 0; i <= a.degree(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b);
  const std::size_t D = a.degree();
  TruncatedSeries out(D);
  for (std::size_t i = 0; i <= D; ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; i + j <= D; ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  const BigInt& c0 = a[0];
  if (c0 != 1 && c0 != -1)
    throw NonUnitError("constant term " + c0.get_str() + " is not a unit");
  const std::size_t D = a.degree();
  TruncatedSeries b(D);
  b[0] = c0; // 1/c0 == c0 for c0 = +-1
  for (std::size_t n = 1; n <= D; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      acc += a[k] * b[n - k];
    b[n] = -c0 * acc;
  }
  return b;
}

std::string format_series_polynomial(const TruncatedSeries& s) {
  std::string out;
  for (std::size_t d = 0; d <= s.degree(); ++d) {
    const BigInt& c = s[d];
    if (c == 0)
      continue;
    bool negative = c < 0;
    BigInt mag = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (d == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1)
      out += mag.get_str();
    out += 't';
    if (d > 1)
      out += '^' + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

std::optional<std::string> rational_form(const TruncatedSeries& h) {
  if (h[0] != 1)
    return std::nullopt;
  auto top = h.last_nonzero().value_or(0);
  if (2 * top <= h.degree())
    return format_series_polynomial(h.truncated(top));
  auto inv = series_inverse(h);
  auto k = inv.last_nonzero().value_or(0);
  if (2 * k > h.degree())
    return std::nullopt;
  if (k == 0)
    return std::string("1");
  return "1/(" + format_series_polynomial(inv.truncated(k)) + ")";
}

FactorAutomaton::FactorAutomaton(std::span<const Word> obstructions,
                                 std::size_t generators)
    : generators_(generators) {
  const std::size_t n = generators;
  std::vector<std::size_t> child(n, dead);
  std::vector<bool> terminal{false};
  next_.assign(n, dead);

  for (const auto& w : obstructions) {
    std::size_t s = 0;
    for (Letter a : w) {
      if (a >= n)
        throw InputError("obstruction letter outside the alphabet");
      if (next_[s * n + a] == dead) {
        next_[s * n + a] = terminal.size();
        terminal.push_back(false);
        next_.insert(next_.end(), n, dead);
      }
      s = next_[s * n + a];
    }
    terminal[s] = true;
  }

  // Breadth-first failure links turn the trie into a complete DFA.
  std::vector<std::size_t> fail(terminal.size(), 0);
  std::deque<std::size_t> queue;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t& t = next_[a];
    if (t == dead) {
      t = 0;
    } else {
      fail[t] = 0;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    if (terminal[fail[s]])
      terminal[s] = true;
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t& t = next_[s * n + a];
      if (t == dead) {
        t = next_[fail[s] * n + a];
      } else {
        fail[t] = next_[fail[s] * n + a];
        queue.push_back(t);
      }
    }
  }
  live_.resize(terminal.size());
  for (std::size_t s = 0; s < terminal.size(); ++s)
    live_[s] = !terminal[s];
}

std::size_t FactorAutomaton::step(std::size_t state, Letter letter) const {
  if (state == dead || !live_.at(state) || letter >= generators_)
    return dead;
  std::size_t t = next_[state * generators_ + letter];
  return live_[t] ? t : dead;
}

bool FactorAutomaton::accepts(const Word& w) const {
  if (!live_[0])
    return false;
  std::size_t s = 0;
  for (Letter a : w)
    if ((s = step(s, a)) == dead)
      return false;
  return true;
}

TruncatedSeries FactorAutomaton::count(std::size_t max_degree,
                                       std::span<const int> degrees) const {
  const std::size_t S = states();
  std::vector<std::vector<BigInt>> walks(max_degree + 1,
                                         std::vector<BigInt>(S));
  if (live_[0])
    walks[0][0] = 1;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    for (std::size_t s = 0; s < S; ++s) {
      if (walks[d][s] == 0)
        continue;
      for (Letter a = 0; a < generators_; ++a) {
        std::size_t w = degrees.empty() ? 1 : static_cast<std::size_t>(degrees[a]);
        if (d + w > max_degree)
          continue;
        std::size_t t = step(s, a);
        if (t != dead)
          walks[d + w][t] += walks[d][s];
      }
    }
  }
  TruncatedSeries out(max_degree);
  for (std::size_t d = 0; d <= max_degree; ++d)
    for (const auto& c : walks[d])
      out[d] += c;
  return out;
}

TruncatedSeries count_normal_words(std::span<const Word> obstructions,
                                   std::size_t generators,
                                   std::size_t max_degree,
                                   std::span<const int> degrees) {
  std::vector<Word> relevant;
  for (const auto& w : obstructions)
    if (w.size() <= max_degree)
      relevant.push_back(w);
  return FactorAutomaton(relevant, generators).count(max_degree, degrees);
}

TruncatedSeries count_normal_monomials(std::span<const CommMonomial> leading,
                                       std::size_t generators,
                                       std::size_t max_degree,
                                       std::span<const int> degrees) {
  TruncatedSeries out(max_degree);
  std::vector<std::uint32_t> e(generators, 0);
  auto weight = [&](std::size_t g) {
    return degrees.empty() ? std::size_t{1} : static_cast<std::size_t>(degrees[g]);
  };
  auto visit = [&](auto& self, std::size_t g, std::size_t deg) -> void {
    if (g == generators) {
      CommMonomial m(e);
      for (const auto& l : leading)
        if (divides(l, m))
          return;
      out[deg] += 1;
      return;
    }
    for (std::uint32_t k = 0; deg + k * weight(g) <= max_degree; ++k) {
      e[g] = k;
      self(self, g + 1, deg + k * weight(g));
    }
    e[g] = 0;
  };
  visit(visit, 0, 0);
  return out;
}

void require_graded(const Presentation& p) {
  for (const auto& r : p.commutative_relations)
    if (!is_homogeneous(r))
      throw GradingError("relation is not homogeneous: " + format_polynomial(r));
  for (const auto& r : p.word_relations)
    if (!is_homogeneous(r))
      throw GradingError("relation is not homogeneous: " + format_polynomial(r));
}

TruncatedSeries series_from_normal_words(const Presentation& p,
                                         std::span<const CommMonomial> leading,
                                         std::size_t max_degree) {
  if (!p.commutative())
    throw RingMismatchError("monomial leading terms need a commutative ring");
  require_graded(p);
  return count_normal_monomials(leading, p.ring->size(), max_degree,
                                p.ring->degrees);
}

TruncatedSeries series_from_normal_words(const Presentation& p,
                                         std::span<const Word> obstructions,
                                         std::size_t max_degree) {
  if (p.commutative())
    throw RingMismatchError("obstruction words need a noncommutative ring");
  require_graded(p);
  return count_normal_words(obstructions, p.ring->size(), max_degree,
                            p.ring->degrees);
}

TruncatedSeries series_from_normal_words(const Presentation& p,
                                         const CompletionResult& completion,
                                         std::size_t max_degree) {
  if (!completion.saturated && completion.complete_to_degree < max_degree)
    throw SaturationError(
        "basis completed only to degree " +
        std::to_string(completion.complete_to_degree) +
        " and not saturated; cannot count normal words up to degree " +
        std::to_string(max_degree) + " (raise --max-degree)");
  auto lw = completion.leading_words();
  return series_from_normal_words(p, std::span<const Word>(lw), max_degree);
}

TruncatedSeries series_from_normal_words(const Presentation& p,
                                         const GroebnerBasis& basis,
                                         std::size_t max_degree) {
  auto lm = basis.leading_monomials();
  return series_from_normal_words(p, std::span<const CommMonomial>(lm),
                                  max_degree);
}

TruncatedSeries polynomial_algebra_series(std::span<const int> degrees,
                                          std::size_t max_degree) {
  auto out = TruncatedSeries::one(max_degree);
  for (int d : degrees) {
    if (d < 1)
      throw InputError("generator degrees must be positive");
    auto step = static_cast<std::size_t>(d);
    // Multiply by 1/(1 - t^d).
    for (std::size_t n = step; n <= max_degree; ++n)
      out[n] += out[n - step];
  }
  return out;
}

TruncatedSeries exterior_algebra_series(std::span<const int> degrees,
                                        std::size_t max_degree) {
  auto out = TruncatedSeries::one(max_degree);
  for (int d : degrees) {
    if (d < 1)
      throw InputError("generator degrees must be positive");
    auto step = static_cast<std::size_t>(d);
    // Multiply by 1 + t^d.
    for (std::size_t n = max_degree + 1; n-- > step;)
      out[n] += out[n - step];
  }
  return out;
}

TruncatedSeries free_algebra_series(std::span<const int> degrees,
                                    std::size_t max_degree) {
  auto denom = TruncatedSeries::one(max_degree);
  for (int d : degrees) {
    if (d < 1)
      throw InputError("generator degrees must be positive");
    if (static_cast<std::size_t>(d) <= max_degree)
      denom[static_cast<std::size_t>(d)] -= 1;
  }
  return series_inverse(denom);
}

TruncatedSeries free_product_series(const TruncatedSeries& a,
                                    const TruncatedSeries& b) {
  require_same_degree(a, b);
  if (a[0] != 1 || b[0] != 1)
    throw NonUnitError("free product needs Hilbert series with constant term 1");
  auto sum = series_inverse(a) + series_inverse(b) -
             TruncatedSeries::one(a.degree());
  return series_inverse(sum);
}

} // namespace hgb
