#include "doctest.h"
#include "oracles.hpp"

#include "hgb/polynomial.hpp"
#include "hgb/presentation.hpp"

using namespace hgb;

namespace {

Ring comm(std::vector<std::string> names) {
  return RingContext::make(RingKind::commutative, std::move(names));
}

Ring words(std::vector<std::string> names) {
  return RingContext::make(RingKind::noncommutative, std::move(names));
}

} // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational a(2, 4);
  a.canonicalize();
  CHECK(a == Rational(1, 2));
  Rational b = Rational(1, 3) + Rational(2, 3);
  CHECK(b == 1);
  CHECK(b.get_den() == 1);
  CHECK(Rational(0).get_den() == 1);
  CHECK(to_string(Rational(-2, 5)) == "-2/5");
}

TEST_CASE("monomials") {
  CommMonomial a{2, 1}, b{1, 3};
  CHECK(a.degree() == 3);
  CHECK((a * b) == CommMonomial{3, 4});
  CHECK(lcm(a, b) == CommMonomial{2, 3});
  CHECK(coprime(CommMonomial{2, 0}, CommMonomial{0, 1}));
  CHECK_FALSE(coprime(a, b));
  CHECK(CommMonomial(2).is_one());

  Word w{0, 1, 1, 0};
  CHECK(w.sub(1, 2) == Word{1, 1});
  CHECK(w.starts_with(Word{0, 1}));
  CHECK(w.ends_with(Word{1, 0}));
  CHECK((Word{0} * Word{1}) == Word{0, 1});
  CHECK(Word::power(2, 3) == Word{2, 2, 2});
}

TEST_CASE("poly_add") {
  auto R = comm({"x", "y"});
  auto p = parse_commutative(R, "x^2 + y^2");
  auto q = parse_commutative(R, "-y^2");
  CHECK(p + q == parse_commutative(R, "x^2"));
  CHECK(p + CommPolynomial(R) == p);
  CHECK((p - p).is_zero());

  auto f = parse_commutative(R, "x^3 - y^2");
  auto g = parse_commutative(R, "x^3 - x + 1");
  CHECK(f - g == parse_commutative(R, "x - y^2 - 1"));
  CHECK(f + (-g) == parse_commutative(R, "x - y^2 - 1"));
}

TEST_CASE("poly_add rejects mixed rings") {
  auto R = comm({"x", "y"});
  auto S = comm({"x", "y", "z"});
  auto p = parse_commutative(R, "x");
  auto q = parse_commutative(S, "x");
  CHECK_THROWS_AS(p + q, RingMismatchError);
  auto T = RingContext::make(RingKind::commutative, {"x", "y"},
                             OrderScheme::lex);
  CHECK_THROWS_AS(p + parse_commutative(T, "x"), RingMismatchError);
  // Structurally equal contexts are the same ring.
  CHECK_NOTHROW(p + parse_commutative(comm({"x", "y"}), "y"));
}

TEST_CASE("poly_scale_mul") {
  auto R = comm({"x", "y"});
  auto p = parse_commutative(R, "x^2 + y^2");
  CHECK(scale_mul(1, CommMonomial{1, 0}, p) ==
        parse_commutative(R, "x^3 + x*y^2"));
  auto R2 = comm({"x1", "x2"});
  CHECK(scale_mul(-2, CommMonomial{0, 0}, parse_commutative(R2, "x2^4")) ==
        parse_commutative(R2, "-2*x2^4"));
  CHECK(scale_mul(0, CommMonomial{1, 0}, p).is_zero());

  auto W = words({"x", "y"});
  auto f = parse_word_polynomial(W, "x^2 - x*y");
  CHECK(scale_mul(1, Word{0}, f, Word{1}) ==
        parse_word_polynomial(W, "x^3*y - x^2*y^2"));
  CHECK(scale_mul(1, Word{0}, f, Side::left) ==
        parse_word_polynomial(W, "x^3 - x^2*y"));
  CHECK(scale_mul(1, Word{1}, f, Side::right) ==
        parse_word_polynomial(W, "x^2*y - x*y^2"));
  CHECK(scale_mul(1, Word{1}, f, Side::both) ==
        parse_word_polynomial(W, "y*x^2*y - y*x*y^2"));
}

TEST_CASE("leading_term") {
  auto R = comm({"x", "y"});
  auto p = parse_commutative(R, "x^2 + y^2");
  auto t = leading_term(p, R->order);
  CHECK(t.monomial == CommMonomial{2, 0});
  CHECK(t.coeff == 1);

  auto R2 = comm({"x1", "x2"});
  auto h3 = parse_commutative(R2, "x2^3 - x1*x2^2");
  t = leading_term(h3, R2->order);
  CHECK(t.monomial == CommMonomial{1, 2});
  CHECK(t.coeff == -1);

  t = leading_term(parse_commutative(R, "5*x"), R->order);
  CHECK(t.monomial == CommMonomial{1, 0});
  CHECK(t.coeff == 5);

  CHECK_THROWS_AS(leading_term(CommPolynomial(R), R->order),
                  NoLeadingTermError);

  // A different order on the same monomials.
  MonomialOrder lex_yx(OrderScheme::lex, std::vector<std::size_t>{1, 0});
  t = leading_term(parse_commutative(R, "x^3 + y"), lex_yx);
  CHECK(t.monomial == CommMonomial{0, 1});
}

TEST_CASE("ring context validation") {
  CHECK_THROWS_AS(comm({"x", "x"}), InputError);
  CHECK_THROWS_AS(RingContext::make(RingKind::commutative, {"x"},
                                    OrderScheme::deglex, {0}),
                  InputError);
  CHECK_THROWS_AS(RingContext::make(RingKind::noncommutative, {"x"},
                                    OrderScheme::lex),
                  InputError);
  auto R = RingContext::make(RingKind::noncommutative, {"x", "y"},
                             OrderScheme::deglex, {1, 2});
  CHECK_FALSE(R->unit_degrees());
  CHECK(R->weighted_degree(Word{0, 1, 1}) == 5);
  CHECK(R->index_of("y") == 1);
  CHECK(R->index_of("z") == 2);
}

TEST_CASE("properties: normalization and ring axioms") {
  std::mt19937 rng(7);
  auto R = comm({"x", "y", "z"});
  auto W = words({"x", "y"});
  for (int i = 0; i < 200; ++i) {
    auto a = oracle::random_comm(rng, R, 3, 4);
    auto b = oracle::random_comm(rng, R, 3, 4);
    auto c = oracle::random_comm(rng, R, 3, 4);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    for (const auto& t : (a - b).terms())
      CHECK(t.coeff != 0);
    // leading term is the maximum of the support
    if (!a.is_zero())
      for (const auto& t : a.terms())
        CHECK((R->order.compare(t.monomial, a.leading_monomial()) <= 0));

    auto f = oracle::random_word_poly(rng, W, 3, 4);
    auto g = oracle::random_word_poly(rng, W, 3, 4);
    Word l{0, 1}, r{1};
    CHECK(scale_mul(1, l, f + g, r) ==
          scale_mul(1, l, f, r) + scale_mul(1, l, g, r));
    for (const auto& t : (f - g).terms())
      CHECK(t.coeff != 0);
  }
}
