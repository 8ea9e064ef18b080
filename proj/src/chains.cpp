#include "hgb/chains.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hgb {
namespace {

bool shorter_first(const Word& a, const Word& b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

} // namespace

ObstructionSet::ObstructionSet(std::vector<Word> obstructions,
                               std::size_t generators)
    : generators_(generators) {
  for (const auto& w : obstructions) {
    if (w.empty())
      throw InputError("empty obstruction");
    for (Letter l : w)
      if (l >= generators)
        throw InputError("obstruction letter outside the alphabet");
  }
  std::sort(obstructions.begin(), obstructions.end(), shorter_first);
  obstructions.erase(std::unique(obstructions.begin(), obstructions.end()),
                     obstructions.end());
  for (auto& w : obstructions) {
    bool redundant = std::any_of(all_.begin(), all_.end(), [&](const Word& v) {
      return contains_factor(w, v);
    });
    if (!redundant)
      all_.push_back(std::move(w));
  }
  std::vector<bool> removed(generators, false);
  for (const auto& w : all_) {
    if (w.size() == 1)
      removed[w[0]] = true;
    else
      words_.push_back(w);
  }
  for (Letter l = 0; l < generators; ++l)
    if (!removed[l])
      alphabet_.push_back(l);
}

std::size_t ObstructionSet::deg_F(const Word& w) const {
  return hgb::deg_F(w, all_);
}

bool ObstructionSet::is_normal(const Word& w) const {
  return std::none_of(all_.begin(), all_.end(),
                      [&](const Word& o) { return contains_factor(w, o); });
}

std::size_t deg_F(const Word& w, std::span<const Word> F) {
  std::size_t count = 0;
  for (const auto& o : F)
    count += find_factor(w, o).size();
  return count;
}

std::map<std::size_t, std::size_t> ChainTable::counts(int n) const {
  std::map<std::size_t, std::size_t> out;
  if (n < -1 || n > n_max_)
    return out;
  for (const auto& c : chains(n))
    ++out[c.word.size()];
  return out;
}

ChainTable enumerate_chains(const ObstructionSet& F, int n_max,
                            std::size_t max_degree) {
  if (n_max < -1)
    throw InputError("n_max must be at least -1");
  ChainTable table(n_max, max_degree);
  table.chains(-1).push_back(Chain{Word{}, -1, 0});
  if (n_max < 0)
    return table;
  if (max_degree >= 1)
    for (Letter l : F.alphabet())
      table.chains(0).push_back(Chain{Word{l}, 0, 1});

  for (int n = 1; n <= n_max; ++n) {
    std::set<Word> seen;
    auto& out = table.chains(n);
    for (const auto& g : table.chains(n - 1)) {
      const Word r = g.tail();
      // rt ends with an obstruction that starts inside r, because t is
      // normal; so every candidate t completes some obstruction begun by
      // a suffix of r.
      for (const auto& o : F.words()) {
        for (std::size_t p = 0; p < r.size(); ++p) {
          std::size_t overlap = r.size() - p;
          if (overlap >= o.size())
            continue;
          if (!std::equal(r.begin() + static_cast<std::ptrdiff_t>(p), r.end(),
                          o.begin()))
            continue;
          Word t = o.sub(overlap, o.size() - overlap);
          if (g.word.size() + t.size() > max_degree)
            continue;
          if (!F.is_normal(t))
            continue;
          Word rt = r * t;
          if (F.deg_F(rt) != 1)
            continue;
          if (!rt.ends_with(o))
            throw std::logic_error("chain obstruction is not a suffix");
          Chain c{g.word * t, n, t.size()};
          if (c.word.size() < static_cast<std::size_t>(n + 1))
            throw std::logic_error("chain shorter than its index allows");
          if (!seen.insert(c.word).second)
            throw std::logic_error("chain produced twice: tail not unique");
          out.push_back(std::move(c));
        }
      }
    }
    std::sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) {
      return shorter_first(a.word, b.word);
    });
    if (out.empty()) {
      // No n-chains means no higher chains either.
      break;
    }
  }
  return table;
}

TruncatedSeries chain_series(const ChainTable& table, int n) {
  TruncatedSeries out(table.max_degree());
  if (n < -1 || n > table.n_max())
    return out;
  for (const auto& c : table.chains(n))
    if (c.word.size() <= table.max_degree())
      out[c.word.size()] += 1;
  return out;
}

TruncatedSeries chain_series(const ObstructionSet& F, int n,
                             std::size_t max_degree) {
  return chain_series(enumerate_chains(F, n, max_degree), n);
}

TruncatedSeries alternating_chain_sum(const ObstructionSet& F,
                                      std::size_t max_degree) {
  // An n-chain has degree >= n + 1, so n <= D - 1 suffices.
  int n_max = static_cast<int>(max_degree) - 1;
  auto table = enumerate_chains(F, std::max(n_max, -1), max_degree);
  TruncatedSeries sum(max_degree);
  for (int n = -1; n <= table.n_max(); ++n) {
    auto h = chain_series(table, n);
    sum = (n % 2 != 0) ? sum + h : sum - h; // (-1)^{n+1}
  }
  return sum;
}

TruncatedSeries hilbert_from_chains(const ObstructionSet& F,
                                    std::size_t max_degree) {
  return series_inverse(alternating_chain_sum(F, max_degree));
}

EulerReport euler_identity_check(const ObstructionSet& F,
                                 std::size_t max_degree) {
  auto h = count_normal_words(F.all_words(), F.generators(), max_degree);
  auto product = series_mul(h, alternating_chain_sum(F, max_degree));
  return EulerReport{product - TruncatedSeries::one(max_degree)};
}

} // namespace hgb
