#include "doctest.h"
#include "oracles.hpp"

#include "hgb/presentation.hpp"

#include <random>
#include <sstream>

using namespace hgb;

TEST_CASE("parse the noncommutative square example") {
  auto p = parse_presentation("ring noncommutative\nvars x y\norder deglex\n"
                              "rel x^2 - x*y\n");
  CHECK_FALSE(p.commutative());
  REQUIRE(p.word_relations.size() == 1);
  CHECK(p.ring->generators == std::vector<std::string>{"x", "y"});
  CHECK(format_polynomial(p.word_relations[0]) == "x^2 - x*y");
  CHECK(p.word_relations[0].leading_monomial() == Word{0, 0});
}

TEST_CASE("parse the sum-of-powers example") {
  auto p = parse_presentation("ring commutative\nvars x1 x2\norder deglex\n"
                              "rel x1^2 + x2^2\nrel x1^3 + x2^3\n");
  CHECK(p.commutative());
  REQUIRE(p.commutative_relations.size() == 2);
  CHECK(p.commutative_relations[0].leading_monomial() == CommMonomial{2, 0});
  CHECK(format_polynomial(p.commutative_relations[1]) == "x1^3 + x2^3");
}

TEST_CASE("comments, CRLF, defaults, degrees") {
  auto p = parse_presentation("# header\r\nring commutative  # kind\r\n"
                              "vars a b\r\ndeg b 3\r\n\r\nrel a^3 - b\r\n");
  CHECK(p.ring->order.scheme() == OrderScheme::deglex);
  CHECK(p.ring->degrees == std::vector<int>{1, 3});
  CHECK(format_polynomial(p.commutative_relations[0]) == "a^3 - b");
}

TEST_CASE("expression grammar") {
  auto R = RingContext::make(RingKind::commutative, {"x", "y"});
  CHECK(parse_commutative(R, "-3") == CommPolynomial::constant(R, -3));
  CHECK(parse_commutative(R, "2/5*x") ==
        CommPolynomial::monomial(R, CommMonomial{1, 0}, Rational(2, 5)));
  CHECK(parse_commutative(R, "y*x") == parse_commutative(R, "x*y"));
  CHECK(parse_commutative(R, " x  *  x ") == parse_commutative(R, "x^2"));
  CHECK(parse_commutative(R, "4/6*x").leading_coeff() == Rational(2, 3));
  auto W = RingContext::make(RingKind::noncommutative, {"x", "y"});
  CHECK(parse_word_polynomial(W, "x*y*y - y*y*x") ==
        parse_word_polynomial(W, "x*y^2 - y^2*x"));
  CHECK_FALSE(parse_word_polynomial(W, "x*y") ==
              parse_word_polynomial(W, "y*x"));
}

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError(0, 0, "");
}

} // namespace

TEST_CASE("parse errors carry line and column") {
  auto e = parse_error("ring commutative\nvars x y\nrel x^2 + + y\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 11);

  e = parse_error("ring commutative\nvars x y\nrel x^2 + z\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 11);
  CHECK(e.message().find("unknown variable") != std::string::npos);

  e = parse_error("ring commutative\nvars x\nrel x^0\n");
  CHECK(e.message().find("exponent") != std::string::npos);
  e = parse_error("ring commutative\nvars x\nrel x^-2\n");
  CHECK(e.message().find("negative exponent") != std::string::npos);

  e = parse_error("ring noncommutative\nvars x y\norder lex\nrel x\n");
  CHECK(e.line() == 3);
  CHECK(e.message().find("lex unsupported for noncommutative rings") !=
        std::string::npos);

  e = parse_error("ring commutative\nvars x\nrel\n");
  CHECK(e.message().find("empty relation") != std::string::npos);
  e = parse_error("ring commutative\nvars x\nrel x - x\n");
  CHECK(e.message().find("zero") != std::string::npos);
  e = parse_error("ring noncommutative\nvars x y\nrel x y\n");
  CHECK(e.message().find("missing '*'") != std::string::npos);
  e = parse_error("ring commutative\nvars x\nrel 2/0*x\n");
  CHECK(e.line() == 3);
  e = parse_error("ring commutative\nvars x\nfoo x\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 1);
  e = parse_error("ring weird\n");
  CHECK(e.line() == 1);
  e = parse_error("ring commutative\nvars x x\n");
  CHECK(e.line() == 2);
  e = parse_error("vars x\nrel x\n");
  CHECK(e.message().find("missing 'ring'") != std::string::npos);
  e = parse_error("ring commutative\nrel 1\n");
  CHECK(e.message().find("missing 'vars'") != std::string::npos);
  // Directive order is free.
  CHECK_NOTHROW(parse_presentation("rel x^2\nvars x\nring commutative\n"));
  e = parse_error("ring commutative\nvars x\ndeg x 0\n");
  CHECK(e.line() == 3);
}

TEST_CASE("format_polynomial") {
  auto R = RingContext::make(RingKind::commutative, {"x1", "x2"});
  CHECK(format_polynomial(parse_commutative(R, "x2^3 - x1*x2^2")) ==
        "-x1*x2^2 + x2^3");
  CHECK(format_polynomial(CommPolynomial(R)) == "0");
  CHECK(format_polynomial(parse_commutative(R, "-1 + 2/5*x1")) ==
        "2/5*x1 - 1");
  auto W = RingContext::make(RingKind::noncommutative, {"x", "y"});
  CHECK(format_polynomial(parse_word_polynomial(W, "x*y*y - y*y*x")) ==
        "x*y^2 - y^2*x");
  CHECK(format_word(*W, Word{}) == "1");
}

TEST_CASE("properties: format round-trips and is deterministic") {
  std::mt19937 rng(3);
  auto R = RingContext::make(RingKind::commutative, {"x", "y", "z"});
  auto W = RingContext::make(RingKind::noncommutative, {"a", "b", "c"});
  for (int i = 0; i < 300; ++i) {
    auto p = oracle::random_comm(rng, R, 5, 5);
    auto text = format_polynomial(p);
    CHECK(text == format_polynomial(p));
    CHECK(parse_commutative(R, text) == p);
    auto q = oracle::random_word_poly(rng, W, 5, 5);
    auto wtext = format_polynomial(q);
    CHECK(wtext == format_polynomial(q));
    CHECK(parse_word_polynomial(W, wtext) == q);
  }
}

TEST_CASE("format_presentation round-trips") {
  const char* text = "ring noncommutative\nvars x y z\ndeg z 2\n"
                     "rel x^2\nrel x*y - z*x\n";
  auto p = parse_presentation(text);
  auto again = parse_presentation(format_presentation(p));
  CHECK(*again.ring == *p.ring);
  CHECK(again.word_relations == p.word_relations);
  std::istringstream in(text);
  CHECK(parse_presentation(in).word_relations == p.word_relations);
}
