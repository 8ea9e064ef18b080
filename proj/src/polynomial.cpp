#include "hgb/polynomial.hpp"

#include <set>

namespace hgb {

std::shared_ptr<const RingContext>
RingContext::make(RingKind kind, std::vector<std::string> generators,
                  OrderScheme scheme, std::vector<int> degrees) {
  std::set<std::string> seen;
  for (const auto& g : generators)
    if (g.empty() || !seen.insert(g).second)
      throw InputError("duplicate or empty generator name '" + g + "'");
  if (degrees.empty())
    degrees.assign(generators.size(), 1);
  if (degrees.size() != generators.size())
    throw InputError("one degree per generator required");
  for (int d : degrees)
    if (d < 1)
      throw InputError("generator degrees must be positive");
  if (kind == RingKind::noncommutative && scheme == OrderScheme::lex)
    throw InputError("lex unsupported for noncommutative rings");
  auto ring = std::make_shared<RingContext>();
  ring->kind = kind;
  ring->order = MonomialOrder(scheme, generators.size());
  ring->generators = std::move(generators);
  ring->degrees = std::move(degrees);
  return ring;
}

bool RingContext::unit_degrees() const noexcept {
  for (int d : degrees)
    if (d != 1)
      return false;
  return true;
}

std::uint64_t RingContext::weighted_degree(const CommMonomial& m) const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.arity(); ++i)
    d += std::uint64_t{m[i]} * static_cast<std::uint64_t>(degrees.at(i));
  return d;
}

std::uint64_t RingContext::weighted_degree(const Word& w) const {
  std::uint64_t d = 0;
  for (Letter l : w)
    d += static_cast<std::uint64_t>(degrees.at(l));
  return d;
}

std::size_t RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name)
      return i;
  return generators.size();
}

// Multiplying by a monomial is strictly monotone under an admissible order,
// so the product terms stay sorted and distinct.

CommPolynomial scale_mul(const Rational& c, const CommMonomial& m,
                         const CommPolynomial& p) {
  detail::check_monomial(*p.ring(), m);
  std::vector<Term<CommMonomial>> terms;
  if (c == 0)
    return CommPolynomial(p.ring());
  terms.reserve(p.size());
  for (const auto& t : p.terms())
    terms.push_back({t.monomial * m, t.coeff * c});
  return CommPolynomial::from_sorted(p.ring(), std::move(terms));
}

WordPolynomial scale_mul(const Rational& c, const Word& left,
                         const WordPolynomial& p, const Word& right) {
  detail::check_monomial(*p.ring(), left);
  detail::check_monomial(*p.ring(), right);
  if (c == 0)
    return WordPolynomial(p.ring());
  std::vector<Term<Word>> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Word w = left;
    w *= t.monomial;
    w *= right;
    terms.push_back({std::move(w), t.coeff * c});
  }
  return WordPolynomial::from_sorted(p.ring(), std::move(terms));
}

WordPolynomial scale_mul(const Rational& c, const Word& m,
                         const WordPolynomial& p, Side side) {
  switch (side) {
  case Side::left:
    return scale_mul(c, m, p, Word{});
  case Side::right:
    return scale_mul(c, Word{}, p, m);
  case Side::both:
    break;
  }
  return scale_mul(c, m, p, m);
}

} // namespace hgb
