#include "hgb/ordering.hpp"

#include "hgb/error.hpp"

#include <algorithm>

namespace hgb {

std::string to_string(OrderScheme scheme) {
  return scheme == OrderScheme::lex ? "lex" : "deglex";
}

MonomialOrder::MonomialOrder(OrderScheme scheme, std::size_t generators)
    : scheme_(scheme), precedence_(generators), rank_(generators) {
  for (std::size_t i = 0; i < generators; ++i)
    precedence_[i] = rank_[i] = i;
}

MonomialOrder::MonomialOrder(OrderScheme scheme,
                             std::vector<std::size_t> precedence)
    : scheme_(scheme), precedence_(std::move(precedence)),
      rank_(precedence_.size(), precedence_.size()) {
  for (std::size_t pos = 0; pos < precedence_.size(); ++pos) {
    std::size_t g = precedence_[pos];
    if (g >= rank_.size() || rank_[g] != rank_.size())
      throw InputError("generator precedence is not a permutation");
    rank_[g] = pos;
  }
}

std::strong_ordering MonomialOrder::compare(const CommMonomial& a,
                                            const CommMonomial& b) const {
  if (a.arity() != precedence_.size() || b.arity() != precedence_.size())
    throw InputError("monomial arity does not match the order");
  if (scheme_ == OrderScheme::deglex) {
    if (auto c = a.degree() <=> b.degree(); c != 0)
      return c;
  }
  for (std::size_t g : precedence_)
    if (auto c = a[g] <=> b[g]; c != 0)
      return c;
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Word& a,
                                            const Word& b) const {
  if (scheme_ != OrderScheme::deglex)
    throw InputError("lex is not an admissible order on words");
  if (auto c = a.size() <=> b.size(); c != 0)
    return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i])
      continue;
    // Smaller rank means a greater letter.
    return rank(b[i]) <=> rank(a[i]);
  }
  return std::strong_ordering::equal;
}

std::vector<CommMonomial> monomials_of_degree(std::size_t generators,
                                              std::size_t degree) {
  std::vector<CommMonomial> out;
  if (generators == 0) {
    if (degree == 0)
      out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> e(generators, 0);
  // Distribute `degree` over the exponents; odometer over compositions.
  auto rec = [&](auto& self, std::size_t i, std::size_t left) -> void {
    if (i + 1 == generators) {
      e[i] = static_cast<std::uint32_t>(left);
      out.emplace_back(e);
      return;
    }
    for (std::size_t k = left + 1; k-- > 0;) {
      e[i] = static_cast<std::uint32_t>(k);
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<Word> words_of_length(std::size_t generators, std::size_t length) {
  std::vector<Word> out;
  if (generators == 0)
    return length == 0 ? std::vector<Word>{Word{}} : out;
  std::vector<Letter> w(length, 0);
  while (true) {
    out.emplace_back(w);
    std::size_t i = length;
    while (i > 0 && w[i - 1] + 1 == generators)
      w[--i] = 0;
    if (i == 0)
      break;
    ++w[i - 1];
  }
  return out;
}

namespace {

template <class M, class Mul>
AdmissibilityReport<M> check_all(const Comparator<M>& cmp,
                                 const std::vector<M>& sample, const M& one,
                                 Mul&& products) {
  AdmissibilityReport<M> report;
  report.monomials_checked = sample.size();
  auto fail = [&](std::string what, const M& a, const M& b, const M& c) {
    report.violation = AdmissibilityViolation<M>{std::move(what), a, b, c};
  };

  for (const auto& a : sample) {
    for (const auto& b : sample) {
      auto ab = cmp(a, b);
      auto ba = cmp(b, a);
      if ((ab == 0) != (a == b)) {
        fail("equal only on identical monomials", a, b, one);
        return report;
      }
      if ((ab < 0) != (ba > 0)) {
        fail("antisymmetry", a, b, one);
        return report;
      }
    }
    if (!(a == one) && cmp(one, a) >= 0) {
      fail("1 is minimal", one, a, one);
      return report;
    }
  }

  for (const auto& a : sample)
    for (const auto& b : sample) {
      if (cmp(a, b) >= 0)
        continue;
      for (const auto& c : sample) {
        if (cmp(b, c) < 0 && cmp(a, c) >= 0) {
          fail("transitivity", a, b, c);
          return report;
        }
        for (auto [ac, bc] : products(a, b, c)) {
          if (cmp(ac, bc) >= 0) {
            fail("multiplicativity", a, b, c);
            return report;
          }
        }
      }
    }
  return report;
}

} // namespace

AdmissibilityReport<CommMonomial>
check_admissibility(const Comparator<CommMonomial>& cmp,
                    std::size_t generators, int sample_degree) {
  if (sample_degree < 1)
    throw InputError("sample degree must be at least 1");
  generators = std::min<std::size_t>(generators, 3);
  std::vector<CommMonomial> sample;
  for (int d = 0; d <= sample_degree; ++d)
    for (auto& m : monomials_of_degree(generators, static_cast<std::size_t>(d)))
      sample.push_back(std::move(m));
  auto products = [](const CommMonomial& a, const CommMonomial& b,
                     const CommMonomial& c) {
    return std::vector<std::pair<CommMonomial, CommMonomial>>{{a * c, b * c}};
  };
  return check_all<CommMonomial>(cmp, sample, CommMonomial(generators),
                                 products);
}

AdmissibilityReport<Word> check_admissibility(const Comparator<Word>& cmp,
                                              std::size_t generators,
                                              int sample_degree) {
  if (sample_degree < 1)
    throw InputError("sample degree must be at least 1");
  generators = std::min<std::size_t>(generators, 3);
  std::vector<Word> sample;
  for (int d = 0; d <= sample_degree; ++d)
    for (auto& w : words_of_length(generators, static_cast<std::size_t>(d)))
      sample.push_back(std::move(w));
  auto products = [](const Word& a, const Word& b, const Word& c) {
    return std::vector<std::pair<Word, Word>>{{a * c, b * c}, {c * a, c * b}};
  };
  return check_all<Word>(cmp, sample, Word{}, products);
}

AdmissibilityReport<CommMonomial>
check_admissibility_commutative(const MonomialOrder& ord, int sample_degree) {
  auto generators = std::min<std::size_t>(ord.generators(), 3);
  MonomialOrder restricted = ord;
  if (generators < ord.generators()) {
    // Keep the relative precedence of the first three generators.
    std::vector<std::size_t> prec;
    for (auto g : ord.precedence())
      if (g < generators)
        prec.push_back(g);
    restricted = MonomialOrder(ord.scheme(), std::move(prec));
  }
  return check_admissibility(
      Comparator<CommMonomial>([&](const auto& a, const auto& b) {
        return restricted.compare(a, b);
      }),
      generators, sample_degree);
}

AdmissibilityReport<Word> check_admissibility_words(const MonomialOrder& ord,
                                                    int sample_degree) {
  auto generators = std::min<std::size_t>(ord.generators(), 3);
  return check_admissibility(
      Comparator<Word>(
          [&](const auto& a, const auto& b) { return ord.compare(a, b); }),
      generators, sample_degree);
}

} // namespace hgb
