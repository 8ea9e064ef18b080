#include "hgb/noncommutative.hpp"

#include <algorithm>
#include <queue>

namespace hgb {

std::vector<Word> CompletionResult::leading_words() const {
  std::vector<Word> out;
  out.reserve(basis.size());
  for (const auto& g : basis)
    out.push_back(g.leading_monomial());
  return out;
}

WordPolynomial reduce_once_nc(const WordPolynomial& f,
                              const WordPolynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero())
    throw NotReducibleError("reduction needs nonzero polynomials");
  const auto& lf = f.leading_monomial();
  const auto& lg = g.leading_monomial();
  auto pos = find_first_factor(lf, lg);
  if (!pos)
    throw NotReducibleError("leading word of g is not a factor of that of f");
  Word left = lf.sub(0, *pos);
  Word right = lf.sub(*pos + lg.size(), lf.size() - *pos - lg.size());
  return f - scale_mul(f.leading_coeff() / g.leading_coeff(), left, g, right);
}

std::optional<ReducerChoice> select_reducer(const Word& w,
                                            std::span<const WordPolynomial> G) {
  std::optional<ReducerChoice> best;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero())
      continue;
    const auto& lw = G[i].leading_monomial();
    if (best && G[i].ring()->order.compare(
                    lw, G[best->index].leading_monomial()) >= 0)
      continue;
    if (auto pos = find_first_factor(w, lw))
      best = ReducerChoice{i, *pos};
  }
  return best;
}

WordPolynomial normal_form(const WordPolynomial& f,
                           std::span<const WordPolynomial> G) {
  for (const auto& g : G)
    require_same_ring(f.ring(), g.ring());
  WordPolynomial rest = f;
  WordPolynomial remainder(f.ring());
  while (!rest.is_zero()) {
    const auto& lead = rest.leading();
    if (auto r = select_reducer(lead.monomial, G)) {
      const auto& g = G[r->index];
      const auto& lw = g.leading_monomial();
      const auto& w = lead.monomial;
      Word left = w.sub(0, r->position);
      Word right = w.sub(r->position + lw.size(),
                         w.size() - r->position - lw.size());
      rest = rest - scale_mul(lead.coeff / g.leading_coeff(), left, g, right);
    } else {
      remainder.push_back_smallest(lead);
      rest = rest.without_leading();
    }
  }
  return remainder;
}

std::vector<Overlap> directed_overlaps(const Word& f, const Word& g,
                                       std::size_t fi, std::size_t gi) {
  std::vector<Overlap> out;
  std::size_t max_k = std::min(f.size(), g.size());
  // k = length of the shared part; both cofactors must be nonempty.
  for (std::size_t k = 1; k < max_k + 1; ++k) {
    if (k >= f.size() || k >= g.size())
      break;
    if (!std::equal(f.end() - static_cast<std::ptrdiff_t>(k), f.end(),
                    g.begin()))
      continue;
    Overlap o;
    o.kind = fi == gi ? OverlapKind::self_overlap : OverlapKind::suffix_prefix;
    o.left_cofactor = f.sub(0, f.size() - k);
    o.right_cofactor = g.sub(k, g.size() - k);
    o.left = fi;
    o.right = gi;
    o.degree = f.size() + g.size() - k;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<Overlap> enumerate_overlaps(const WordPolynomial& f,
                                        const WordPolynomial& g,
                                        std::size_t fi, std::size_t gi) {
  require_same_ring(f.ring(), g.ring());
  const auto& lf = f.leading_monomial();
  const auto& lg = g.leading_monomial();
  if (fi == gi || &f == &g)
    return directed_overlaps(lf, lf, fi, fi);
  auto out = directed_overlaps(lf, lg, fi, gi);
  auto back = directed_overlaps(lg, lf, gi, fi);
  out.insert(out.end(), back.begin(), back.end());
  return out;
}

WordPolynomial s_polynomial_nc(std::span<const WordPolynomial> polys,
                               const Overlap& o) {
  if (o.left >= polys.size() || o.right >= polys.size())
    throw InputError("overlap participant out of range");
  const auto& L = polys[o.left];
  const auto& R = polys[o.right];
  require_same_ring(L.ring(), R.ring());
  const auto& ll = L.leading_monomial();
  const auto& lr = R.leading_monomial();
  if (o.left_cofactor.empty() || o.right_cofactor.empty() ||
      o.left_cofactor.size() >= ll.size() ||
      ll * o.right_cofactor != o.left_cofactor * lr)
    throw InputError("overlap does not witness lt(f) m2 = m1 lt(g)");
  return scale_mul(1 / L.leading_coeff(), Word{}, L, o.right_cofactor) -
         scale_mul(1 / R.leading_coeff(), o.left_cofactor, R, Word{});
}

WordPolynomial s_polynomial_nc(const WordPolynomial& f,
                               const WordPolynomial& g, const Overlap& o) {
  const WordPolynomial pair[] = {f, g};
  return s_polynomial_nc(std::span<const WordPolynomial>(pair), o);
}

namespace {

struct Scheduled {
  std::size_t degree;
  std::size_t seq;
  Overlap overlap;
};

struct LaterFirst {
  bool operator()(const Scheduled& a, const Scheduled& b) const {
    return std::tie(a.degree, a.seq) > std::tie(b.degree, b.seq);
  }
};

/// Incremental completion state. `polys` holds every element ever
/// inserted; overlaps refer to these ids and are skipped once a
/// participant has been retired by inter-reduction.
class Completion {
public:
  Completion(Ring ring, std::size_t bound)
      : ring_(std::move(ring)), bound_(bound) {}

  /// Returns false once 1 is in the ideal.
  bool insert(WordPolynomial h) {
    std::vector<WordPolynomial> work{std::move(h)};
    while (!work.empty()) {
      auto p = normal_form(work.back(), active());
      work.pop_back();
      if (p.is_zero())
        continue;
      p = p.monic();
      if (p.is_unit()) {
        unit_ = true;
        return false;
      }
      std::size_t id = polys_.size();
      const Word lead = p.leading_monomial();
      for (std::size_t e = 0; e < polys_.size(); ++e) {
        if (alive_[e] && contains_factor(polys_[e].leading_monomial(), lead)) {
          alive_[e] = false;
          work.push_back(polys_[e]);
        }
      }
      polys_.push_back(std::move(p));
      alive_.push_back(true);
      dirty_ = true;
      for (std::size_t e = 0; e <= id; ++e) {
        if (!alive_[e])
          continue;
        for (auto& o : enumerate_overlaps(polys_[id], polys_[e], id, e))
          if (o.degree <= bound_)
            queue_.push({o.degree, seq_++, std::move(o)});
      }
    }
    return true;
  }

  bool run() {
    while (!queue_.empty()) {
      Scheduled s = queue_.top();
      queue_.pop();
      if (!alive_[s.overlap.left] || !alive_[s.overlap.right])
        continue;
      if (!insert(s_polynomial_nc(polys_, s.overlap)))
        return false;
    }
    return true;
  }

  bool unit() const noexcept { return unit_; }

  /// Alive elements in insertion order.
  const std::vector<WordPolynomial>& active() {
    if (dirty_) {
      active_.clear();
      for (std::size_t e = 0; e < polys_.size(); ++e)
        if (alive_[e])
          active_.push_back(polys_[e]);
      dirty_ = false;
    }
    return active_;
  }

private:
  Ring ring_;
  std::size_t bound_;
  std::vector<WordPolynomial> polys_;
  std::vector<bool> alive_;
  std::vector<WordPolynomial> active_;
  bool dirty_ = true;
  bool unit_ = false;
  std::size_t seq_ = 0;
  std::priority_queue<Scheduled, std::vector<Scheduled>, LaterFirst> queue_;
};

} // namespace

CompletionResult complete_to_degree(std::span<const WordPolynomial> relations,
                                    std::size_t max_degree) {
  CompletionResult result;
  result.complete_to_degree = max_degree;
  if (relations.empty()) {
    result.saturated = true;
    return result;
  }
  const Ring& ring = relations.front().ring();
  if (!ring->unit_degrees())
    throw InputError("Gröbner computations need unit generator degrees");
  for (const auto& r : relations) {
    require_same_ring(ring, r.ring());
    if (r.is_zero())
      throw InputError("zero relation");
    if (r.degree() > max_degree)
      throw InputError("max_degree " + std::to_string(max_degree) +
                       " is below the degree of a relation");
  }

  Completion state(ring, max_degree);
  bool ok = true;
  for (const auto& r : relations)
    if (!(ok = state.insert(r)))
      break;
  if (ok)
    ok = state.run();
  if (!ok) {
    result.basis = {WordPolynomial::constant(ring, 1)};
    result.saturated = true;
    return result;
  }

  // Leading words form an antichain, so normal forms only touch tails.
  std::vector<WordPolynomial> G = state.active();
  for (std::size_t i = 0; i < G.size(); ++i) {
    std::vector<WordPolynomial> others;
    for (std::size_t j = 0; j < G.size(); ++j)
      if (j != i)
        others.push_back(G[j]);
    G[i] = normal_form(G[i], others).monic();
  }
  const auto& ord = ring->order;
  std::sort(G.begin(), G.end(), [&](const auto& a, const auto& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });

  result.saturated = true;
  for (std::size_t i = 0; i < G.size() && result.saturated; ++i)
    for (std::size_t j = i; j < G.size() && result.saturated; ++j)
      for (const auto& o : enumerate_overlaps(G[i], G[j], i, j))
        if (o.degree > max_degree) {
          result.saturated = false;
          break;
        }
  result.basis = std::move(G);
  return result;
}

NcDiamondReport check_diamond_nc(std::span<const WordPolynomial> G,
                                 std::size_t max_degree) {
  NcDiamondReport report;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i; j < G.size(); ++j)
      for (const auto& o : enumerate_overlaps(G[i], G[j], i, j)) {
        if (o.degree > max_degree)
          continue;
        ++report.overlaps_checked;
        if (!normal_form(s_polynomial_nc(G, o), G).is_zero())
          report.failures.push_back(o);
      }
  return report;
}

std::vector<std::vector<Word>> normal_words(std::span<const Word> obstructions,
                                            std::size_t generators,
                                            std::size_t max_degree) {
  std::vector<std::vector<Word>> out(max_degree + 1);
  for (const auto& o : obstructions)
    if (o.empty())
      return out;
  out[0].push_back(Word{});
  for (std::size_t d = 0; d < max_degree; ++d) {
    for (const auto& w : out[d]) {
      for (Letter a = 0; a < generators; ++a) {
        Word next = w;
        next.push_back(a);
        // The prefix is normal, so only suffixes can match.
        bool ok = std::none_of(
            obstructions.begin(), obstructions.end(),
            [&](const Word& o) { return next.ends_with(o); });
        if (ok)
          out[d + 1].push_back(std::move(next));
      }
    }
  }
  return out;
}

} // namespace hgb
