#pragma once

#include "hgb/polynomial.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace hgb {

/// An algebra given by generators and relations. Exactly one of the
/// relation lists is used, matching ring->kind.
struct Presentation {
  Ring ring;
  std::vector<CommPolynomial> commutative_relations;
  std::vector<WordPolynomial> word_relations;

  bool commutative() const { return ring->kind == RingKind::commutative; }
  std::size_t relation_count() const {
    return commutative() ? commutative_relations.size()
                         : word_relations.size();
  }
};

/// Parses the line-based presentation format:
///
///   # comment
///   ring commutative|noncommutative
///   vars x y z          (first declared = greatest)
///   deg x 2             (optional, default 1)
///   order lex|deglex    (optional, default deglex)
///   rel x^2 - 2/3*x*y + 1
///
/// Directives may come in any order; `ring` and `vars` are required.
/// Products need an explicit `*`. Errors throw ParseError with 1-based line and column.
Presentation parse_presentation(std::string_view text);
Presentation parse_presentation(std::istream& in);

/// Parses a single relation expression in an existing ring.
CommPolynomial parse_commutative(const Ring& ring, std::string_view expr);
WordPolynomial parse_word_polynomial(const Ring& ring, std::string_view expr);

std::string format_monomial(const RingContext& ring, const CommMonomial& m);
/// Runs of equal letters are contracted with `^`; the empty word is "1".
std::string format_word(const RingContext& ring, const Word& w);

/// Terms in strictly decreasing order, e.g. "-x1*x2^2 + x2^3"; zero is "0".
std::string format_polynomial(const CommPolynomial& p);
std::string format_polynomial(const WordPolynomial& p);

/// Renders a presentation back into the file format.
std::string format_presentation(const Presentation& p);

} // namespace hgb
