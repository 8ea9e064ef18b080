// One line per acceptance criterion; exit status 0 iff every line passes.

#include "oracles.hpp"

#include "hgb/chains.hpp"
#include "hgb/groebner.hpp"
#include "hgb/noncommutative.hpp"
#include "hgb/presentation.hpp"
#include "hgb/series.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

using namespace hgb;
using oracle::to_longs;
using oracle::word;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Bases shared between criteria 1-3 and 9.
std::vector<CommPolynomial> basis1;
std::vector<WordPolynomial> basis2, basis3;
// Obstruction sets from criteria 7-8, reused by 10.
std::vector<std::pair<std::vector<Word>, std::size_t>> obstruction_sets;

std::vector<std::string> text(std::span<const CommPolynomial> G) {
  std::vector<std::string> out;
  for (const auto& g : G)
    out.push_back(format_polynomial(g));
  return out;
}

std::vector<std::string> text(std::span<const WordPolynomial> G) {
  std::vector<std::string> out;
  for (const auto& g : G)
    out.push_back(format_polynomial(g));
  return out;
}

void c1(Outcome& o) {
  auto p = parse_presentation("ring commutative\nvars x1 x2\norder deglex\n"
                              "rel x1^2 + x2^2\nrel x1^3 + x2^3\n");
  auto G = reduce_basis(buchberger(p.commutative_relations));
  basis1 = G.elements;
  o.require(text(G.elements) == std::vector<std::string>{"x1^2 + x2^2",
                                                         "x1*x2^2 - x2^3",
                                                         "x2^4"},
            "reduced basis differs");
}

void c2(Outcome& o) {
  auto p = parse_presentation("ring noncommutative\nvars x y\n"
                              "rel x^2 - x*y\n");
  auto c = complete_to_degree(p.word_relations, 8);
  basis2 = c.basis;
  std::vector<std::string> want{"x^2 - x*y"};
  for (int i = 2; i <= 7; ++i) {
    auto lead = i == 2 ? std::string("x*y*x")
                       : "x*y^" + std::to_string(i - 1) + "*x";
    want.push_back(lead + " - x*y^" + std::to_string(i));
  }
  o.require(text(c.basis) == want, "basis differs");
}

void c3(Outcome& o) {
  auto p = parse_presentation("ring noncommutative\nvars x y z\n"
                              "rel x^2\nrel x*y - z*x\n");
  auto c = complete_to_degree(p.word_relations, 8);
  basis3 = c.basis;
  std::set<Word> got;
  for (const auto& w : c.leading_words())
    got.insert(w);
  std::set<Word> want{word("xx", "xyz"), word("xy", "xyz")};
  for (std::size_t i = 1; i <= 6; ++i)
    want.insert(Word{0} * Word::power(2, i) * Word{0});
  o.require(got == want && c.basis.size() == want.size(),
            "leading words differ");
}

void c4(Outcome& o) {
  const std::size_t D = 10;
  auto free3 = parse_presentation("ring noncommutative\nvars x y z\n");
  auto h = series_from_normal_words(free3, std::span<const Word>{}, D);
  BigInt p = 1;
  for (std::size_t n = 0; n <= D; ++n, p *= 3)
    o.require(h[n] == p, "free algebra coefficient " + std::to_string(n));

  auto poly2 = parse_presentation("ring commutative\nvars x y\n");
  h = series_from_normal_words(poly2, GroebnerBasis{}, D);
  for (std::size_t n = 0; n <= D; ++n)
    o.require(h[n] == n + 1, "polynomial algebra coefficient " +
                                 std::to_string(n));

  auto q = parse_presentation("ring noncommutative\nvars x y\n"
                              "rel x^2 + y^2\n");
  auto c = complete_to_degree(q.word_relations, D);
  h = series_from_normal_words(q, c, D);
  for (std::size_t n = 0; n <= D; ++n)
    o.require(h[n] == n + 1, "quotient coefficient " + std::to_string(n));
}

void c5(Outcome& o) {
  for (int d = 1; d <= 4; ++d) {
    std::vector<int> ones(static_cast<std::size_t>(d), 1);
    auto p = polynomial_algebra_series(ones, 10);
    auto e = exterior_algebra_series(ones, 10);
    for (long n = 0; n <= 10; ++n) {
      auto i = static_cast<std::size_t>(n);
      o.require(p[i] == oracle::binomial(n + d - 1, d - 1),
                "polynomial series d=" + std::to_string(d));
      o.require(e[i] == (n <= d ? oracle::binomial(d, n) : BigInt(0)),
                "exterior series d=" + std::to_string(d));
    }
  }
}

void c6(Outcome& o) {
  std::mt19937 rng(6);
  std::uniform_int_distribution<std::size_t> gens(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t a = gens(rng), b = gens(rng);
    auto FA = oracle::random_antichain(rng, a, 2, 3, 3);
    auto FB = oracle::random_antichain(rng, b, 2, 3, 3);
    auto HA = count_normal_words(FA, a, 10);
    auto HB = count_normal_words(FB, b, 10);

    // The union presentation as text, so parsing is exercised too.
    std::ostringstream pres;
    pres << "ring noncommutative\nvars";
    for (std::size_t i = 0; i < a + b; ++i)
      pres << " g" << i;
    pres << '\n';
    auto rel = [&](const Word& w, std::size_t shift) {
      pres << "rel ";
      for (std::size_t i = 0; i < w.size(); ++i)
        pres << (i ? "*" : "") << 'g' << w[i] + shift;
      pres << '\n';
    };
    for (const auto& w : FA)
      rel(w, 0);
    for (const auto& w : FB)
      rel(w, a);
    auto P = parse_presentation(pres.str());
    auto c = complete_to_degree(P.word_relations, 10);
    auto union_series = series_from_normal_words(P, c, 10);
    o.require(free_product_series(HA, HB) == union_series,
              "trial " + std::to_string(trial));
  }
}

void c7(Outcome& o) {
  ObstructionSet cube({Word::power(0, 3)}, 1);
  auto t = enumerate_chains(cube, 3, 10);
  auto only = [&](int n, std::size_t deg) {
    return t.chains(n).size() == 1 && t.chains(n)[0].word.size() == deg;
  };
  o.require(only(1, 3) && only(2, 4) && only(3, 6), "x^3 chain degrees");
  for (const auto& c : t.chains(3))
    o.require(c.word != Word::power(0, 5), "x^5 accepted as a 3-chain");
  obstruction_sets.push_back({{Word::power(0, 3)}, 1});

  std::vector<Word> F{word("xx", "xy"), word("xyy", "xy")};
  auto u = enumerate_chains(ObstructionSet(F, 2), 6, 12);
  for (int n = 1; n <= 6; ++n) {
    std::set<Word> got;
    for (const auto& c : u.chains(n))
      got.insert(c.word);
    auto xn = Word::power(0, static_cast<std::size_t>(n));
    std::set<Word> want{xn * word("yy", "xy"), xn * word("x", "xy")};
    o.require(got == want, "x^n y^2 family at n=" + std::to_string(n));
  }
  obstruction_sets.push_back({F, 2});
}

void c8(Outcome& o) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::size_t> gens(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t k = gens(rng);
    auto F = oracle::random_antichain(rng, k, 2, 4, 4);
    ObstructionSet set(F, k);
    auto chains = to_longs(hilbert_from_chains(set, 8));
    auto words = to_longs(count_normal_words(F, k, 8));
    auto brute = oracle::count_words(F, k, 8);
    o.require(chains == words && words == brute,
              "trial " + std::to_string(trial));
    obstruction_sets.push_back({F, k});
  }
}

void c9(Outcome& o) {
  o.require(check_diamond(basis1).passed(), "criterion 1 basis");
  o.require(check_diamond_nc(basis2, 8).passed(), "criterion 2 basis");
  o.require(check_diamond_nc(basis3, 8).passed(), "criterion 3 basis");
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(2 + trial % 2);
    auto R = RingContext::make(RingKind::commutative, names);
    std::vector<CommPolynomial> rel;
    while (rel.size() < 2) {
      auto p = oracle::random_comm(rng, R, 3, 3);
      if (!p.is_zero())
        rel.push_back(p);
    }
    auto G = buchberger(rel);
    o.require(check_diamond(G.elements).passed(),
              "random ideal " + std::to_string(trial));
    o.require(check_diamond(reduce_basis(G).elements).passed(),
              "random reduced ideal " + std::to_string(trial));
  }
}

void c10(Outcome& o) {
  for (std::size_t i = 0; i < obstruction_sets.size(); ++i) {
    const auto& [F, k] = obstruction_sets[i];
    o.require(euler_identity_check(ObstructionSet(F, k), 10).passed(),
              "obstruction set " + std::to_string(i));
  }
  o.require(obstruction_sets.size() == 32, "expected 32 obstruction sets");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds; // 0: none
  std::function<void(Outcome&)> body;
};

} // namespace

int main() {
  std::vector<Criterion> all{
      {1, "commutative golden basis", 1, c1},
      {2, "noncommutative golden basis {x^2 - xy} to degree 8", 5, c2},
      {3, "noncommutative golden leading words {x^2, xy - zx}", 5, c3},
      {4, "series golden coefficients to degree 10", 0, c4},
      {5, "closed-form binomial identities", 0, c5},
      {6, "free-product formula on 20 random pairs", 30, c6},
      {7, "chain golden families", 0, c7},
      {8, "chains = normal words = brute force on 30 antichains", 60, c8},
      {9, "diamond lemma on produced and random bases", 0, c9},
      {10, "euler identity residuals to degree 10", 0, c10},
  };
  int failures = 0;
  for (const auto& c : all) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (o.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail = "over the time limit";
    }
    failures += !o.ok;
    std::printf("%s criterion %2d: %s (%.3f s%s%s)\n", o.ok ? "PASS" : "FAIL",
                c.id, c.name, secs, o.ok ? "" : "; ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(all.size()) - failures, all.size());
  return failures == 0 ? 0 : 1;
}
