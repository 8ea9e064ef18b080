#include "doctest.h"
#include "oracles.hpp"

#include "hgb/groebner.hpp"
#include "hgb/presentation.hpp"

#include <algorithm>
#include <random>

using namespace hgb;

namespace {

Ring ring12() {
  return RingContext::make(RingKind::commutative, {"x1", "x2"});
}

Ring ringxy() { return RingContext::make(RingKind::commutative, {"x", "y"}); }

std::vector<CommPolynomial> polys(const Ring& R,
                                  std::initializer_list<const char*> exprs) {
  std::vector<CommPolynomial> out;
  for (const char* e : exprs)
    out.push_back(parse_commutative(R, e));
  return out;
}

std::vector<std::string> text(const GroebnerBasis& G) {
  std::vector<std::string> out;
  for (const auto& g : G.elements)
    out.push_back(format_polynomial(g));
  return out;
}

} // namespace

TEST_CASE("divides") {
  auto q = divides(CommMonomial{2}, CommMonomial{3});
  REQUIRE(q);
  CHECK(*q == CommMonomial{1});
  q = divides(CommMonomial{1, 2}, CommMonomial{1, 3});
  REQUIRE(q);
  CHECK(*q == CommMonomial{0, 1});
  CHECK_FALSE(divides(CommMonomial{2, 0}, CommMonomial{1, 2}));
}

TEST_CASE("reduce_once") {
  auto R = ringxy();
  CHECK(reduce_once(parse_commutative(R, "x^3 - y^2"),
                    parse_commutative(R, "x^3 - x + 1")) ==
        parse_commutative(R, "x - y^2 - 1"));
  auto S = ring12();
  CHECK(reduce_once(parse_commutative(S, "x1^3 + x2^3"),
                    parse_commutative(S, "x1^2 + x2^2")) ==
        parse_commutative(S, "x2^3 - x1*x2^2"));
  auto f = parse_commutative(R, "3*x*y + 1");
  CHECK(reduce_once(f, f).is_zero());
  CHECK_THROWS_AS(reduce_once(parse_commutative(R, "x*y^2"),
                              parse_commutative(R, "x^2")),
                  NotReducibleError);
  CHECK_THROWS_AS(reduce_once(CommPolynomial(R), f), NotReducibleError);
}

TEST_CASE("normal_form") {
  auto R = ring12();
  auto G = polys(R, {"x1^2 + x2^2", "x1*x2^2 - x2^3", "x2^4"});
  auto f = parse_commutative(R, "x1^3 + x2^3");
  // The explicit chain: reduce by x1^2 + x2^2, then by x1*x2^2 - x2^3.
  auto step1 = reduce_once(f, G[0]);
  CHECK(step1 == parse_commutative(R, "-x1*x2^2 + x2^3"));
  CHECK(reduce_once(step1, G[1]).is_zero());
  CHECK(normal_form(f, G).is_zero());
  CHECK(normal_form(parse_commutative(R, "x2^3"), G) ==
        parse_commutative(R, "x2^3"));
  CHECK(normal_form(CommPolynomial(R), G).is_zero());
  // Tail terms are reduced too.
  CHECK(normal_form(parse_commutative(R, "x2^3 + x1^2"), G) ==
        parse_commutative(R, "x2^3 - x2^2"));
}

TEST_CASE("select_reducer tie-break") {
  auto R = ringxy();
  auto G = polys(R, {"x^2*y", "x*y", "x*y + x"});
  // Both x*y entries divide; smallest lead then earliest index.
  CHECK(select_reducer(CommMonomial{2, 1}, G) == std::optional<std::size_t>(1));
  CHECK_FALSE(select_reducer(CommMonomial{3, 0}, G));
}

TEST_CASE("s_polynomial") {
  auto R = ring12();
  auto f = parse_commutative(R, "x1^2 + x2^2");
  auto g = parse_commutative(R, "x2^3 - x1*x2^2");
  CHECK(s_polynomial(f, g) == parse_commutative(R, "x1*x2^3 + x2^4"));
  // The opposite sign convention differs only by scale.
  CHECK(s_polynomial(g, f) == parse_commutative(R, "-x1*x2^3 - x2^4"));

  auto S = ringxy();
  auto a = parse_commutative(S, "x^2 + 1");
  auto b = parse_commutative(S, "y^2 + 1");
  auto s = s_polynomial(a, b);
  CHECK(s == parse_commutative(S, "y^2 - x^2"));
  CHECK(normal_form(s, std::vector{a, b}).is_zero());
  CHECK(s_polynomial(a, a).is_zero());
}

TEST_CASE("buchberger") {
  auto R = ring12();
  auto G = buchberger(polys(R, {"x1^2 + x2^2", "x1^3 + x2^3"}));
  auto lead = G.leading_monomials();
  std::sort(lead.begin(), lead.end());
  std::vector<CommMonomial> want{{0, 4}, {1, 2}, {2, 0}};
  CHECK(lead == want);
  CHECK_FALSE(G.trivial);

  auto S = ringxy();
  G = buchberger(polys(S, {"x"}));
  CHECK(text(G) == std::vector<std::string>{"x"});
  G = buchberger(polys(S, {"x + y", "y"}));
  lead = G.leading_monomials();
  std::sort(lead.begin(), lead.end());
  CHECK(lead == std::vector<CommMonomial>{{0, 1}, {1, 0}});
}

TEST_CASE("buchberger errors and trivial ideals") {
  auto R = ringxy();
  CHECK_THROWS_AS(buchberger(std::vector<CommPolynomial>{}), InputError);
  CHECK_THROWS_AS(buchberger(std::vector{CommPolynomial(R)}), InputError);
  auto G = buchberger(polys(R, {"x*y - 1", "x"}));
  CHECK(G.trivial);
  CHECK(text(G) == std::vector<std::string>{"1"});
  auto W = RingContext::make(RingKind::commutative, {"x"},
                             OrderScheme::deglex, {2});
  CHECK_THROWS_AS(buchberger(polys(W, {"x^2"})), InputError);
}

TEST_CASE("reduce_basis") {
  auto R = ring12();
  GroebnerBasis in{polys(R, {"x1^2 + x2^2", "x2^3 - x1*x2^2", "-2*x2^4"})};
  auto G = reduce_basis(in);
  CHECK(G.reduced);
  CHECK(text(G) ==
        std::vector<std::string>{"x1^2 + x2^2", "x1*x2^2 - x2^3", "x2^4"});
  CHECK(text(reduce_basis(G)) == text(G));

  auto S = ringxy();
  GroebnerBasis xy{polys(S, {"x", "2*x + y"})};
  CHECK(text(reduce_basis(xy)) == std::vector<std::string>{"y", "x"});
}

TEST_CASE("is_member") {
  auto R = ring12();
  auto G = reduce_basis(buchberger(polys(R, {"x1^2 + x2^2", "x1^3 + x2^3"})));
  CHECK(is_member(parse_commutative(R, "x1^3 + x2^3"), G));
  CHECK_FALSE(is_member(parse_commutative(R, "x2^3"), G));
  CHECK(is_member(CommPolynomial(R), G));
}

TEST_CASE("normal_monomials") {
  auto R = ring12();
  std::vector<CommMonomial> lead{{2, 0}, {1, 2}, {0, 4}};
  auto nm = normal_monomials(lead, R->order, 3);
  std::vector<std::size_t> counts;
  for (const auto& d : nm)
    counts.push_back(d.size());
  CHECK(counts == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(nm[2] == std::vector<CommMonomial>{{0, 2}, {1, 1}});
  CHECK(nm[3] == std::vector<CommMonomial>{{0, 3}});
  auto brute = oracle::count_monomials(lead, 2, 3);
  for (std::size_t d = 0; d <= 3; ++d)
    CHECK(static_cast<long>(counts[d]) == brute[d]);

  nm = normal_monomials(std::vector<CommMonomial>{{1, 0}}, R->order, 2);
  CHECK(nm[0] == std::vector<CommMonomial>{{0, 0}});
  CHECK(nm[1] == std::vector<CommMonomial>{{0, 1}});
  CHECK(nm[2] == std::vector<CommMonomial>{{0, 2}});

  nm = normal_monomials(GroebnerBasis{}, R, 2);
  CHECK(nm[0].size() == 1);
  CHECK(nm[1].size() == 2);
  CHECK(nm[2].size() == 3);
}

TEST_CASE("check_diamond flags a non-basis") {
  auto R = ringxy();
  auto bad = polys(R, {"x^2 - y", "x*y - 1"});
  CHECK_FALSE(check_diamond(bad).passed());
  auto G = buchberger(bad);
  CHECK(check_diamond(G.elements).passed());
}

TEST_CASE("properties: random ideals") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 2;
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    auto R = RingContext::make(RingKind::commutative, names,
                               trial % 4 == 0 ? OrderScheme::lex
                                              : OrderScheme::deglex);
    std::vector<CommPolynomial> rel;
    for (int i = 0; i < 2 + trial % 2; ++i) {
      auto p = oracle::random_comm(rng, R, 3, 3);
      if (!p.is_zero())
        rel.push_back(p);
    }
    if (rel.empty())
      continue;
    auto G = buchberger(rel);
    CHECK(check_diamond(G.elements).passed());
    for (const auto& r : rel)
      CHECK(normal_form(r, G.elements).is_zero());

    auto reduced = reduce_basis(G);
    std::vector<CommPolynomial> shuffled = rel;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(text(reduce_basis(buchberger(shuffled))) == text(reduced));

    for (const auto& g : reduced.elements) {
      CHECK(g.leading_coeff() == 1);
      for (std::size_t t = 1; t < g.size(); ++t)
        for (const auto& h : reduced.elements)
          CHECK_FALSE(divides(h.leading_monomial(), g.terms()[t].monomial));
    }

    auto f = oracle::random_comm(rng, R, 4, 4);
    auto g = oracle::random_comm(rng, R, 4, 4);
    auto nf = normal_form(f, G.elements);
    CHECK(normal_form(nf, G.elements) == nf);
    CHECK(normal_form(f + g, reduced.elements) ==
          normal_form(normal_form(f, reduced.elements) +
                          normal_form(g, reduced.elements),
                      reduced.elements));
  }
}
