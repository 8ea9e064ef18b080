#include "hgb/chains.hpp"
#include "hgb/cli.hpp"
#include "hgb/groebner.hpp"
#include "hgb/noncommutative.hpp"
#include "hgb/presentation.hpp"
#include "hgb/series.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace hgb;

namespace {

py::list to_python(const TruncatedSeries& s) {
  py::list out;
  for (const auto& c : s.coefficients())
    out.append(py::int_(py::str(c.get_str())));
  return out;
}

TruncatedSeries from_python(const std::vector<py::int_>& coeffs) {
  if (coeffs.empty())
    throw InputError("a series needs at least one coefficient");
  std::vector<BigInt> v;
  for (const auto& c : coeffs)
    v.emplace_back(py::str(c).cast<std::string>());
  return TruncatedSeries(std::move(v));
}

std::vector<std::string> format_all(const std::vector<CommPolynomial>& G) {
  std::vector<std::string> out;
  for (const auto& g : G)
    out.push_back(format_polynomial(g));
  return out;
}

std::vector<std::string> format_all(const std::vector<WordPolynomial>& G) {
  std::vector<std::string> out;
  for (const auto& g : G)
    out.push_back(format_polynomial(g));
  return out;
}

py::dict groebner_basis(const std::string& text, std::size_t max_degree,
                        bool reduced) {
  auto p = parse_presentation(text);
  py::dict out;
  if (p.commutative()) {
    GroebnerBasis G;
    if (!p.commutative_relations.empty()) {
      G = buchberger(p.commutative_relations);
      if (reduced)
        G = reduce_basis(G);
    }
    out["basis"] = format_all(G.elements);
    out["saturated"] = true;
    out["trivial"] = G.trivial;
    return out;
  }
  auto c = complete_to_degree(p.word_relations, max_degree);
  out["basis"] = format_all(c.basis);
  out["saturated"] = c.saturated;
  out["complete_to_degree"] = c.complete_to_degree;
  return out;
}

py::list hilbert_series(const std::string& text, std::size_t max_degree,
                        const std::string& method) {
  auto p = parse_presentation(text);
  if (method != "normal-words" && method != "chains")
    throw InputError("method must be 'normal-words' or 'chains'");
  if (p.commutative()) {
    if (method == "chains")
      throw InputError("the chains method needs a noncommutative ring");
    GroebnerBasis G;
    if (!p.commutative_relations.empty())
      G = reduce_basis(buchberger(p.commutative_relations));
    return to_python(series_from_normal_words(p, G, max_degree));
  }
  require_graded(p);
  auto c = complete_to_degree(p.word_relations, max_degree);
  if (method == "normal-words")
    return to_python(series_from_normal_words(p, c, max_degree));
  ObstructionSet F(c.leading_words(), p.ring->size());
  return to_python(hilbert_from_chains(F, max_degree));
}

struct Alphabet {
  std::vector<std::string> names;

  Word parse(const std::string& w) const {
    Word out;
    for (char ch : w) {
      auto it = std::find(names.begin(), names.end(), std::string(1, ch));
      if (it == names.end())
        throw InputError(std::string("unknown letter '") + ch + "'");
      out.push_back(static_cast<Letter>(it - names.begin()));
    }
    return out;
  }

  std::string print(const Word& w) const {
    std::string out;
    for (Letter l : w)
      out += names.at(l);
    return out;
  }
};

std::vector<Word> parse_words(const Alphabet& a,
                              const std::vector<std::string>& words) {
  std::vector<Word> out;
  for (const auto& w : words)
    out.push_back(a.parse(w));
  return out;
}

Alphabet alphabet_of(const std::string& letters) {
  Alphabet a;
  for (char c : letters)
    a.names.emplace_back(1, c);
  return a;
}

py::list chains(const std::vector<std::string>& obstructions,
                const std::string& letters, int n_max,
                std::size_t max_degree) {
  auto a = alphabet_of(letters);
  ObstructionSet F(parse_words(a, obstructions), a.names.size());
  auto table = enumerate_chains(F, n_max, max_degree);
  py::list out;
  for (int n = -1; n <= table.n_max(); ++n)
    for (const auto& c : table.chains(n))
      out.append(py::make_tuple(n, a.print(c.word), a.print(c.tail())));
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Groebner bases and Hilbert series of finitely presented algebras";

  static py::exception<Error> base(m, "HgbError");
  static py::exception<ParseError> parse_error(m, "ParseError", base.ptr());
  static py::exception<GradingError> grading(m, "GradingError", base.ptr());
  static py::exception<SaturationError> saturation(m, "SaturationError",
                                                   base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const GradingError& e) {
      py::set_error(grading, e.what());
    } catch (const SaturationError& e) {
      py::set_error(saturation, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("groebner_basis", &groebner_basis, py::arg("presentation"),
        py::arg("max_degree") = 12, py::arg("reduced") = true,
        "Basis of a presentation given in the text format.");
  m.def("hilbert_series", &hilbert_series, py::arg("presentation"),
        py::arg("max_degree") = 12, py::arg("method") = "normal-words");
  m.def("chains", &chains, py::arg("obstructions"), py::arg("letters"),
        py::arg("n_max"), py::arg("max_degree"),
        "(n, word, tail) for every n-chain; words use one letter per "
        "generator.");
  m.def("normal_word_counts",
        [](const std::vector<std::string>& obstructions,
           const std::string& letters, std::size_t max_degree) {
          auto a = alphabet_of(letters);
          auto F = parse_words(a, obstructions);
          return to_python(
              count_normal_words(F, a.names.size(), max_degree));
        },
        py::arg("obstructions"), py::arg("letters"), py::arg("max_degree"));
  m.def("series_inverse",
        [](const std::vector<py::int_>& s) {
          return to_python(series_inverse(from_python(s)));
        });
  m.def("free_product_series",
        [](const std::vector<py::int_>& a, const std::vector<py::int_>& b) {
          return to_python(free_product_series(from_python(a), from_python(b)));
        });
  m.def("run",
        [](std::vector<std::string> args) {
          args.insert(args.begin(), "hgb");
          std::ostringstream out, err;
          int code = cli::main(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool; returns (code, out, err).");
}
