#include "hgb/groebner.hpp"

#include <algorithm>
#include <deque>

namespace hgb {

std::vector<CommMonomial> GroebnerBasis::leading_monomials() const {
  std::vector<CommMonomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements)
    out.push_back(g.leading_monomial());
  return out;
}

CommPolynomial reduce_once(const CommPolynomial& f, const CommPolynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero())
    throw NotReducibleError("reduction needs nonzero polynomials");
  auto q = divides(g.leading_monomial(), f.leading_monomial());
  if (!q)
    throw NotReducibleError("leading monomial of g does not divide that of f");
  return f - scale_mul(f.leading_coeff() / g.leading_coeff(), *q, g);
}

std::optional<std::size_t> select_reducer(const CommMonomial& m,
                                          std::span<const CommPolynomial> G) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero())
      continue;
    const auto& lm = G[i].leading_monomial();
    if (!divides(lm, m))
      continue;
    if (!best ||
        G[i].ring()->order.compare(lm, G[*best].leading_monomial()) < 0)
      best = i;
  }
  return best;
}

CommPolynomial normal_form(const CommPolynomial& f,
                           std::span<const CommPolynomial> G) {
  for (const auto& g : G)
    require_same_ring(f.ring(), g.ring());
  CommPolynomial rest = f;
  CommPolynomial remainder(f.ring());
  while (!rest.is_zero()) {
    const auto& lead = rest.leading();
    if (auto r = select_reducer(lead.monomial, G)) {
      const auto& g = G[*r];
      auto q = *divides(g.leading_monomial(), lead.monomial);
      rest = rest - scale_mul(lead.coeff / g.leading_coeff(), q, g);
    } else {
      remainder.push_back_smallest(lead);
      rest = rest.without_leading();
    }
  }
  return remainder;
}

CommPolynomial s_polynomial(const CommPolynomial& f, const CommPolynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero())
    throw InputError("S-polynomial of a zero polynomial");
  const auto& lf = f.leading_monomial();
  const auto& lg = g.leading_monomial();
  auto L = lcm(lf, lg);
  return scale_mul(1 / f.leading_coeff(), *divides(lf, L), f) -
         scale_mul(1 / g.leading_coeff(), *divides(lg, L), g);
}

GroebnerBasis buchberger(std::span<const CommPolynomial> relations) {
  if (relations.empty())
    throw InputError("no relations given");
  for (const auto& r : relations) {
    if (r.is_zero())
      throw InputError("zero relation");
    require_same_ring(relations.front().ring(), r.ring());
  }
  const Ring& ring = relations.front().ring();
  if (!ring->unit_degrees())
    throw InputError("Gröbner computations need unit generator degrees");

  GroebnerBasis out;
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  auto& G = out.elements;

  // Returns false once the ideal is found to be the whole ring.
  auto add = [&](const CommPolynomial& h) {
    if (h.is_unit()) {
      G = {CommPolynomial::constant(ring, 1)};
      out.trivial = true;
      return false;
    }
    for (std::size_t i = 0; i < G.size(); ++i)
      pairs.emplace_back(i, G.size());
    G.push_back(h);
    return true;
  };

  for (const auto& r : relations) {
    auto h = normal_form(r, G);
    if (!h.is_zero() && !add(h))
      return out;
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(G[i].leading_monomial(), G[j].leading_monomial()))
      continue;
    auto h = normal_form(s_polynomial(G[i], G[j]), G);
    if (!h.is_zero() && !add(h))
      return out;
  }
  return out;
}

GroebnerBasis reduce_basis(const GroebnerBasis& input) {
  GroebnerBasis out;
  out.reduced = true;
  if (input.elements.empty())
    return out;
  const Ring ring = input.elements.front().ring();
  const auto& ord = ring->order;
  std::vector<CommPolynomial> G;
  for (const auto& g : input.elements) {
    if (g.is_zero())
      continue;
    if (g.is_unit()) {
      out.elements = {CommPolynomial::constant(ring, 1)};
      out.trivial = true;
      return out;
    }
    G.push_back(g);
  }

  auto by_lead = [&](const CommPolynomial& a, const CommPolynomial& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  };
  // Replace each element by its normal form modulo the others until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    std::stable_sort(G.begin(), G.end(), by_lead);
    for (std::size_t i = 0; i < G.size(); ++i) {
      std::vector<CommPolynomial> others;
      others.reserve(G.size() - 1);
      for (std::size_t j = 0; j < G.size(); ++j)
        if (j != i)
          others.push_back(G[j]);
      auto r = normal_form(G[i], others);
      if (r == G[i])
        continue;
      if (r.is_unit()) {
        out.elements = {CommPolynomial::constant(ring, 1)};
        out.trivial = true;
        return out;
      }
      if (r.is_zero())
        G.erase(G.begin() + static_cast<std::ptrdiff_t>(i));
      else
        G[i] = std::move(r);
      changed = true;
      break;
    }
  }
  for (auto& g : G)
    g = g.monic();
  std::stable_sort(G.begin(), G.end(), by_lead);
  out.elements = std::move(G);
  return out;
}

bool is_member(const CommPolynomial& f, const GroebnerBasis& G) {
  return normal_form(f, G.elements).is_zero();
}

std::vector<std::vector<CommMonomial>>
normal_monomials(std::span<const CommMonomial> leading,
                 const MonomialOrder& ord, std::size_t max_degree) {
  std::vector<std::vector<CommMonomial>> out(max_degree + 1);
  for (std::size_t d = 0; d <= max_degree; ++d) {
    for (auto& m : monomials_of_degree(ord.generators(), d))
      if (std::none_of(leading.begin(), leading.end(),
                       [&](const auto& l) { return divides(l, m); }))
        out[d].push_back(std::move(m));
    std::sort(out[d].begin(), out[d].end(),
              [&](const auto& a, const auto& b) { return ord.less(a, b); });
  }
  return out;
}

std::vector<std::vector<CommMonomial>>
normal_monomials(const GroebnerBasis& G, const Ring& ring,
                 std::size_t max_degree) {
  for (const auto& g : G.elements)
    require_same_ring(ring, g.ring());
  auto lead = G.leading_monomials();
  return normal_monomials(lead, ring->order, max_degree);
}

DiamondReport check_diamond(std::span<const CommPolynomial> G) {
  DiamondReport report;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      ++report.pairs_checked;
      if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero())
        report.failures.emplace_back(i, j);
    }
  return report;
}

} // namespace hgb
