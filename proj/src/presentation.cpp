#include "hgb/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <optional>
#include <sstream>

namespace hgb {
namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column; // 1-based
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view text, std::size_t line,
                            std::size_t column_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    std::size_t col = column_offset + i + 1;
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      out.push_back({Tok::number, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j]))
        ++j;
      out.push_back({Tok::ident, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
    case '+': kind = Tok::plus; break;
    case '-': kind = Tok::minus; break;
    case '*': kind = Tok::star; break;
    case '/': kind = Tok::slash; break;
    case '^': kind = Tok::caret; break;
    default:
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::end, "", column_offset + text.size() + 1});
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::end ? std::string("end of line") : "'" + t.text + "'";
}

/// Recursive-descent parser for a flat sum of scaled monomials, for either
/// monomial kind.
template <class M>
class ExprParser {
public:
  ExprParser(const Ring& ring, std::vector<Token> tokens, std::size_t line)
      : ring_(ring), toks_(std::move(tokens)), line_(line) {}

  Polynomial<M> parse() {
    if (peek().kind == Tok::end)
      error(peek(), "empty relation");
    std::vector<Term<M>> terms;
    Rational sign = 1;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      if (next().kind == Tok::minus)
        sign = -1;
    }
    terms.push_back(term(sign));
    while (peek().kind != Tok::end) {
      const Token& op = next();
      if (op.kind == Tok::plus)
        sign = 1;
      else if (op.kind == Tok::minus)
        sign = -1;
      else
        error(op, "expected '+', '-' or '*' before " + describe(op));
      terms.push_back(term(sign));
    }
    return Polynomial<M>(ring_, std::move(terms));
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void error(const Token& t, const std::string& message) const {
    throw ParseError(line_, t.column, message);
  }

  Term<M> term(Rational coeff) {
    M mono = unit();
    factor(coeff, mono);
    while (peek().kind == Tok::star) {
      next();
      factor(coeff, mono);
    }
    const Token& t = peek();
    if (t.kind == Tok::number || t.kind == Tok::ident)
      error(t, "missing '*' between factors");
    return {std::move(mono), std::move(coeff)};
  }

  void factor(Rational& coeff, M& mono) {
    const Token& t = next();
    if (t.kind == Tok::number) {
      BigInt num(t.text);
      BigInt den(1);
      if (peek().kind == Tok::slash) {
        next();
        const Token& d = next();
        if (d.kind != Tok::number)
          error(d, "expected denominator, got " + describe(d));
        den = BigInt(d.text);
        if (den == 0)
          error(d, "zero denominator");
      }
      Rational lit(num, den);
      lit.canonicalize();
      coeff *= lit;
      return;
    }
    if (t.kind != Tok::ident)
      error(t, "expected number or variable, got " + describe(t));
    std::size_t g = ring_->index_of(t.text);
    if (g == ring_->size())
      error(t, "unknown variable '" + t.text + "'");
    std::uint32_t power = 1;
    if (peek().kind == Tok::caret) {
      next();
      const Token& e = next();
      if (e.kind == Tok::minus)
        error(e, "negative exponent");
      if (e.kind != Tok::number)
        error(e, "expected exponent, got " + describe(e));
      BigInt p(e.text);
      if (p == 0)
        error(e, "exponent must be positive");
      if (p > 4096)
        error(e, "exponent too large");
      power = static_cast<std::uint32_t>(p.get_ui());
    }
    multiply(mono, g, power);
  }

  M unit() const {
    if constexpr (std::is_same_v<M, CommMonomial>)
      return CommMonomial(ring_->size());
    else
      return Word{};
  }

  static void multiply(M& mono, std::size_t g, std::uint32_t power) {
    if constexpr (std::is_same_v<M, CommMonomial>) {
      auto e = mono.exponents();
      e[g] += power;
      mono = CommMonomial(std::move(e));
    } else {
      for (std::uint32_t k = 0; k < power; ++k)
        mono.push_back(static_cast<Letter>(g));
    }
  }

  const Ring& ring_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

struct Line {
  std::size_t number;
  std::string text; // comment and CR stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r')
      raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    out.push_back({number, std::string(raw)});
    ++number;
    if (end == text.size())
      break;
    start = end + 1;
  }
  return out;
}

struct Field {
  std::string text;
  std::size_t column;
};

std::vector<Field> split_words(const std::string& s) {
  std::vector<Field> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
      ++i;
    if (i >= s.size())
      break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t')
      ++j;
    out.push_back({s.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !ident_start(s[0]))
    return false;
  for (char c : s)
    if (!ident_char(c))
      return false;
  return true;
}

template <class M>
Polynomial<M> parse_expression(const Ring& ring, std::string_view expr,
                               std::size_t line, std::size_t column_offset) {
  return ExprParser<M>(ring, tokenize(expr, line, column_offset), line).parse();
}

} // namespace

Presentation parse_presentation(std::string_view text) {
  struct Pending {
    std::size_t line;
    std::size_t column;
    std::string value;
  };
  std::optional<Pending> ring_line, order_line, vars_line;
  std::vector<std::string> vars;
  std::vector<std::pair<Pending, std::string>> degs; // (name@pos, degree)
  std::vector<Pending> rels;

  for (const auto& ln : split_lines(text)) {
    auto words = split_words(ln.text);
    if (words.empty())
      continue;
    const auto& head = words[0];
    auto rest_column = [&](std::size_t k) {
      return k < words.size() ? words[k].column : ln.text.size() + 1;
    };
    if (head.text == "ring") {
      if (ring_line)
        throw ParseError(ln.number, head.column, "duplicate 'ring' directive");
      if (words.size() != 2)
        throw ParseError(ln.number, rest_column(words.size() > 2 ? 2 : 1),
                         "expected 'ring commutative|noncommutative'");
      if (words[1].text != "commutative" && words[1].text != "noncommutative")
        throw ParseError(ln.number, words[1].column,
                         "unknown ring kind '" + words[1].text + "'");
      ring_line = Pending{ln.number, words[1].column, words[1].text};
    } else if (head.text == "vars") {
      if (vars_line)
        throw ParseError(ln.number, head.column, "duplicate 'vars' directive");
      if (words.size() < 2)
        throw ParseError(ln.number, rest_column(1), "expected variable names");
      for (std::size_t k = 1; k < words.size(); ++k) {
        if (!valid_identifier(words[k].text))
          throw ParseError(ln.number, words[k].column,
                           "invalid variable name '" + words[k].text + "'");
        for (const auto& v : vars)
          if (v == words[k].text)
            throw ParseError(ln.number, words[k].column,
                             "duplicate variable '" + v + "'");
        vars.push_back(words[k].text);
      }
      vars_line = Pending{ln.number, head.column, ""};
    } else if (head.text == "deg") {
      if (words.size() != 3)
        throw ParseError(ln.number, rest_column(words.size() > 3 ? 3 : words.size()),
                         "expected 'deg <name> <positive integer>'");
      degs.push_back({Pending{ln.number, words[1].column, words[1].text},
                      words[2].text});
      const auto& d = words[2].text;
      bool digits = !d.empty() && d.find_first_not_of("0123456789") == std::string::npos;
      if (!digits || d.size() > 6 || std::stoi(d) < 1)
        throw ParseError(ln.number, words[2].column,
                         "degree must be a positive integer");
    } else if (head.text == "order") {
      if (order_line)
        throw ParseError(ln.number, head.column, "duplicate 'order' directive");
      if (words.size() != 2 || (words[1].text != "lex" && words[1].text != "deglex"))
        throw ParseError(ln.number, rest_column(1), "expected 'order lex|deglex'");
      order_line = Pending{ln.number, words[1].column, words[1].text};
    } else if (head.text == "rel") {
      // Expression is everything after the keyword.
      std::size_t start = head.column - 1 + head.text.size();
      rels.push_back(Pending{ln.number, start, ln.text.substr(start)});
    } else {
      throw ParseError(ln.number, head.column,
                       "unknown directive '" + head.text + "'");
    }
  }

  if (!ring_line)
    throw ParseError(1, 1, "missing 'ring' directive");
  if (!vars_line)
    throw ParseError(ring_line->line, 1, "missing 'vars' directive");

  RingKind kind = ring_line->value == "commutative" ? RingKind::commutative
                                                    : RingKind::noncommutative;
  OrderScheme scheme = OrderScheme::deglex;
  if (order_line && order_line->value == "lex") {
    if (kind == RingKind::noncommutative)
      throw ParseError(order_line->line, order_line->column,
                       "lex unsupported for noncommutative rings");
    scheme = OrderScheme::lex;
  }
  std::vector<int> degrees(vars.size(), 1);
  for (const auto& [where, value] : degs) {
    auto it = std::find(vars.begin(), vars.end(), where.value);
    if (it == vars.end())
      throw ParseError(where.line, where.column,
                       "unknown variable '" + where.value + "'");
    degrees[static_cast<std::size_t>(it - vars.begin())] = std::stoi(value);
  }

  Presentation p;
  p.ring = RingContext::make(kind, vars, scheme, degrees);
  for (const auto& r : rels) {
    if (kind == RingKind::commutative) {
      auto poly = parse_expression<CommMonomial>(p.ring, r.value, r.line, r.column);
      if (poly.is_zero())
        throw ParseError(r.line, r.column + 1, "relation is zero");
      p.commutative_relations.push_back(std::move(poly));
    } else {
      auto poly = parse_expression<Word>(p.ring, r.value, r.line, r.column);
      if (poly.is_zero())
        throw ParseError(r.line, r.column + 1, "relation is zero");
      p.word_relations.push_back(std::move(poly));
    }
  }
  return p;
}

Presentation parse_presentation(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_presentation(text);
}

CommPolynomial parse_commutative(const Ring& ring, std::string_view expr) {
  if (ring->kind != RingKind::commutative)
    throw RingMismatchError("ring is not commutative");
  return parse_expression<CommMonomial>(ring, expr, 1, 0);
}

WordPolynomial parse_word_polynomial(const Ring& ring, std::string_view expr) {
  if (ring->kind != RingKind::noncommutative)
    throw RingMismatchError("ring is not noncommutative");
  return parse_expression<Word>(ring, expr, 1, 0);
}

std::string format_monomial(const RingContext& ring, const CommMonomial& m) {
  std::string out;
  for (std::size_t g = 0; g < m.arity(); ++g) {
    if (m[g] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += ring.generators.at(g);
    if (m[g] > 1)
      out += '^' + std::to_string(m[g]);
  }
  return out.empty() ? "1" : out;
}

std::string format_word(const RingContext& ring, const Word& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i])
      ++j;
    if (!out.empty())
      out += '*';
    out += ring.generators.at(w[i]);
    if (j - i > 1)
      out += '^' + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "1" : out;
}

namespace {

template <class M, class Fmt>
std::string format_terms(const Polynomial<M>& p, Fmt&& fmt) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coeff < 0;
    Rational mag = abs(t.coeff);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1)
        out += mag.get_str() + "*";
      out += fmt(t.monomial);
    }
  }
  return out;
}

} // namespace

std::string format_polynomial(const CommPolynomial& p) {
  const auto& ring = *p.ring();
  return format_terms(p, [&](const CommMonomial& m) {
    return format_monomial(ring, m);
  });
}

std::string format_polynomial(const WordPolynomial& p) {
  const auto& ring = *p.ring();
  return format_terms(p, [&](const Word& w) { return format_word(ring, w); });
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  const auto& ring = *p.ring;
  out << "ring " << (p.commutative() ? "commutative" : "noncommutative") << '\n';
  out << "vars";
  for (const auto& g : ring.generators)
    out << ' ' << g;
  out << '\n';
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (ring.degrees[i] != 1)
      out << "deg " << ring.generators[i] << ' ' << ring.degrees[i] << '\n';
  out << "order " << to_string(ring.order.scheme()) << '\n';
  for (const auto& r : p.commutative_relations)
    out << "rel " << format_polynomial(r) << '\n';
  for (const auto& r : p.word_relations)
    out << "rel " << format_polynomial(r) << '\n';
  return out.str();
}

} // namespace hgb
