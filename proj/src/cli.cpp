#include "hgb/cli.hpp"

#include "hgb/chains.hpp"
#include "hgb/groebner.hpp"
#include "hgb/noncommutative.hpp"
#include "hgb/presentation.hpp"
#include "hgb/series.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hgb::cli {
namespace {

const char* method_name(Method m) {
  switch (m) {
  case Method::normal_words: return "normal-words";
  case Method::chains: return "chains";
  case Method::closed_form: return "closed-form";
  case Method::all: return "all";
  }
  return "?";
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

/// Rebuilds the relations under a different order.
Presentation with_order(const Presentation& p, OrderScheme scheme) {
  if (p.ring->order.scheme() == scheme)
    return p;
  Presentation q;
  q.ring = RingContext::make(p.ring->kind, p.ring->generators, scheme,
                             p.ring->degrees);
  for (const auto& r : p.commutative_relations)
    q.commutative_relations.emplace_back(
        q.ring, std::vector<Term<CommMonomial>>(r.terms().begin(), r.terms().end()));
  for (const auto& r : p.word_relations)
    q.word_relations.emplace_back(
        q.ring, std::vector<Term<Word>>(r.terms().begin(), r.terms().end()));
  return q;
}

GroebnerBasis commutative_basis(const Presentation& p, bool reduced) {
  if (p.commutative_relations.empty())
    return GroebnerBasis{{}, true, false};
  auto G = buchberger(p.commutative_relations);
  if (reduced)
    return reduce_basis(G);
  const auto& ord = p.ring->order;
  std::stable_sort(G.elements.begin(), G.elements.end(),
                   [&](const auto& a, const auto& b) {
                     return ord.compare(a.leading_monomial(),
                                        b.leading_monomial()) < 0;
                   });
  return G;
}

class Runner {
public:
  Runner(const RunConfig& cfg, Presentation pres, std::ostream& out)
      : cfg_(cfg), pres_(std::move(pres)), out_(out),
        records_(cfg.format == OutputFormat::records) {}

  int dispatch() {
    switch (cfg_.subcommand) {
    case Subcommand::gb: return gb();
    case Subcommand::hilbert: return hilbert();
    case Subcommand::chains: return chains();
    case Subcommand::normal_words: return normal_words_cmd();
    case Subcommand::check: return check();
    }
    return failed;
  }

private:
  std::size_t degree() const { return cfg_.max_degree; }
  std::size_t completion_bound() const {
    return cfg_.completion_degree.value_or(cfg_.max_degree);
  }

  const CompletionResult& completion() {
    if (!completion_) {
      completion_ = complete_to_degree(pres_.word_relations, completion_bound());
    }
    return *completion_;
  }

  /// Obstructions of the quotient, refusing when the completion is too
  /// shallow for the requested series degree.
  ObstructionSet obstructions() {
    const auto& c = completion();
    if (!c.saturated && c.complete_to_degree < degree())
      throw SaturationError(
          "basis completed only to degree " +
          std::to_string(c.complete_to_degree) +
          " and not saturated; raise --max-degree (or --completion-degree) "
          "to at least " + std::to_string(degree()));
    if (zero_quotient())
      throw InputError("the quotient is the zero algebra (1 is a relation "
                       "consequence); it has no obstructions");
    return ObstructionSet(c.leading_words(), pres_.ring->size());
  }

  bool zero_quotient() {
    const auto& b = completion().basis;
    return b.size() == 1 && b.front().is_unit();
  }

  void print_basis_line(std::size_t i, const std::string& poly) {
    if (records_)
      out_ << "basis " << i << ' ' << poly << '\n';
    else
      out_ << poly << '\n';
  }

  int gb() {
    if (pres_.commutative()) {
      auto G = commutative_basis(pres_, cfg_.reduced);
      for (std::size_t i = 0; i < G.elements.size(); ++i)
        print_basis_line(i, format_polynomial(G.elements[i]));
      return ok;
    }
    const auto& c = completion();
    for (std::size_t i = 0; i < c.basis.size(); ++i)
      print_basis_line(i, format_polynomial(c.basis[i]));
    if (records_) {
      out_ << "saturated " << bool_text(c.saturated) << '\n';
      out_ << "complete_to_degree " << c.complete_to_degree << '\n';
    } else {
      out_ << "saturated: " << bool_text(c.saturated) << '\n';
      out_ << "complete-to-degree: " << c.complete_to_degree << '\n';
    }
    return ok;
  }

  TruncatedSeries by_normal_words() {
    require_graded(pres_);
    if (pres_.commutative())
      return series_from_normal_words(pres_, commutative_basis(pres_, true),
                                      degree());
    if (zero_quotient())
      return TruncatedSeries(degree());
    auto F = obstructions();
    auto words = F.all_words();
    return series_from_normal_words(pres_, std::span<const Word>(words),
                                    degree());
  }

  TruncatedSeries by_chains() {
    if (pres_.commutative())
      throw InputError("the chains method needs a noncommutative ring");
    if (!pres_.ring->unit_degrees())
      throw InputError("the chains method needs unit generator degrees");
    require_graded(pres_);
    return hilbert_from_chains(obstructions(), degree());
  }

  /// Presets with a product formula: relation-free rings, and commutative
  /// rings whose relations are exactly the generator squares (the
  /// exterior-algebra series).
  std::optional<TruncatedSeries> closed_form() {
    const auto& degs = pres_.ring->degrees;
    if (pres_.relation_count() == 0)
      return pres_.commutative() ? polynomial_algebra_series(degs, degree())
                                 : free_algebra_series(degs, degree());
    if (!pres_.commutative())
      return std::nullopt;
    const std::size_t n = pres_.ring->size();
    std::vector<bool> squared(n, false);
    for (const auto& r : pres_.commutative_relations) {
      if (r.size() != 1)
        return std::nullopt;
      const auto& m = r.leading_monomial();
      std::size_t nonzero = 0, g = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] != 0) {
          ++nonzero;
          g = i;
        }
      if (nonzero != 1 || m[g] != 2)
        return std::nullopt;
      squared[g] = true;
    }
    if (std::find(squared.begin(), squared.end(), false) != squared.end())
      return std::nullopt;
    return exterior_algebra_series(degs, degree());
  }

  void print_series(const TruncatedSeries& h) {
    for (std::size_t d = 0; d <= h.degree(); ++d) {
      if (records_)
        out_ << "hilbert " << d << ' ' << h[d].get_str() << '\n';
      else
        out_ << "H[" << d << "] = " << h[d].get_str() << '\n';
    }
    if (!records_)
      if (auto form = rational_form(h))
        out_ << "H = " << *form << '\n';
  }

  int hilbert() {
    if (cfg_.method != Method::all) {
      TruncatedSeries h;
      switch (cfg_.method) {
      case Method::normal_words: h = by_normal_words(); break;
      case Method::chains: h = by_chains(); break;
      default: {
        require_graded(pres_);
        auto c = closed_form();
        if (!c)
          throw InputError("closed-form needs a relation-free presentation or "
                           "commutative generator squares");
        h = *c;
      }
      }
      print_series(h);
      return ok;
    }

    std::vector<std::pair<Method, TruncatedSeries>> results;
    results.emplace_back(Method::normal_words, by_normal_words());
    if (!pres_.commutative() && pres_.ring->unit_degrees())
      results.emplace_back(Method::chains, by_chains());
    if (auto c = closed_form())
      results.emplace_back(Method::closed_form, *c);
    bool agree = std::all_of(results.begin(), results.end(), [&](const auto& r) {
      return r.second == results.front().second;
    });
    for (const auto& [m, h] : results) {
      if (records_)
        out_ << "method " << method_name(m) << '\n';
      else
        out_ << "method: " << method_name(m) << '\n';
      print_series(h);
    }
    if (records_)
      out_ << "agreement " << bool_text(agree) << '\n';
    else if (agree)
      out_ << "agreement: " << results.size() << " methods\n";
    else
      out_ << "DISAGREEMENT: methods produced different series\n";
    return agree ? ok : failed;
  }

  int chains() {
    if (pres_.commutative())
      throw InputError("chains need a noncommutative ring");
    if (!pres_.ring->unit_degrees())
      throw InputError("chains need unit generator degrees");
    require_graded(pres_);
    auto F = obstructions();
    const std::size_t D = degree();
    int n_max = static_cast<int>(D) - 1;
    auto table = enumerate_chains(F, std::max(n_max, -1), D);
    const auto& ring = *pres_.ring;

    if (records_) {
      for (int n = 1; n <= table.n_max(); ++n)
        for (auto [deg, count] : table.counts(n))
          out_ << "chain " << n << ' ' << deg << ' ' << count << '\n';
      print_series(hilbert_from_chains(F, D));
      return ok;
    }

    out_ << "obstructions:";
    for (const auto& w : F.all_words())
      out_ << ' ' << format_word(ring, w);
    out_ << '\n';
    out_ << "chain counts (n degree count):\n";
    for (int n = -1; n <= table.n_max(); ++n)
      for (auto [deg, count] : table.counts(n))
        out_ << "  " << n << ' ' << deg << ' ' << count << '\n';
    out_ << "chains:\n";
    for (int n = 1; n <= table.n_max(); ++n) {
      const auto& cs = table.chains(n);
      if (cs.empty())
        continue;
      out_ << "  n=" << n << ':';
      std::size_t shown = 0;
      for (const auto& c : cs) {
        if (shown++ == cfg_.list_cap) {
          out_ << " ... (" << cs.size() - cfg_.list_cap << " more)";
          break;
        }
        out_ << ' ' << format_word(ring, c.word) << " [tail "
             << format_word(ring, c.tail()) << ']';
      }
      out_ << '\n';
    }
    print_series(hilbert_from_chains(F, D));
    return ok;
  }

  int normal_words_cmd() {
    const auto& ring = *pres_.ring;
    std::vector<std::vector<std::string>> per_degree(degree() + 1);
    if (pres_.commutative()) {
      auto G = commutative_basis(pres_, true);
      auto ms = normal_monomials(G, pres_.ring, degree());
      for (std::size_t d = 0; d <= degree(); ++d)
        for (auto it = ms[d].rbegin(); it != ms[d].rend(); ++it)
          per_degree[d].push_back(format_monomial(ring, *it));
    } else {
      auto F = obstructions();
      auto words = normal_words(F.all_words(), ring.size(), degree());
      for (std::size_t d = 0; d <= degree(); ++d)
        for (const auto& w : words[d])
          per_degree[d].push_back(format_word(ring, w));
    }
    for (std::size_t d = 0; d <= degree(); ++d) {
      const auto& ws = per_degree[d];
      if (records_) {
        for (const auto& w : ws)
          out_ << "normal_word " << d << ' ' << w << '\n';
        continue;
      }
      out_ << "degree " << d << " (" << ws.size() << "):";
      for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i == cfg_.list_cap) {
          out_ << " ...";
          break;
        }
        out_ << ' ' << ws[i];
      }
      out_ << '\n';
    }
    return ok;
  }

  void report(const std::string& name, const std::string& status,
              const std::string& detail = "") {
    if (records_)
      out_ << "check " << name << ' ' << status << '\n';
    else
      out_ << name << ": " << status << (detail.empty() ? "" : " (" + detail + ")")
           << '\n';
  }

  int check() {
    bool all_ok = true;
    auto verdict = [&](const std::string& name, bool pass,
                       const std::string& detail) {
      all_ok = all_ok && pass;
      report(name, pass ? "pass" : "fail", detail);
    };

    if (pres_.commutative()) {
      auto raw = commutative_basis(pres_, false);
      auto G = commutative_basis(pres_, true);
      auto d_raw = check_diamond(raw.elements);
      auto d_red = check_diamond(G.elements);
      verdict("diamond", d_raw.passed() && d_red.passed(),
              std::to_string(d_raw.pairs_checked + d_red.pairs_checked) +
                  " S-polynomials");
      bool members = std::all_of(
          pres_.commutative_relations.begin(), pres_.commutative_relations.end(),
          [&](const auto& r) { return is_member(r, G); });
      verdict("relations", members,
              std::to_string(pres_.commutative_relations.size()) + " reduce to 0");
    } else {
      const auto& c = completion();
      auto d = check_diamond_nc(c.basis, c.complete_to_degree);
      verdict("diamond", d.passed(),
              std::to_string(d.overlaps_checked) + " overlaps up to degree " +
                  std::to_string(c.complete_to_degree));
      bool members = std::all_of(
          pres_.word_relations.begin(), pres_.word_relations.end(),
          [&](const auto& r) { return normal_form(r, c.basis).is_zero(); });
      verdict("relations", members,
              std::to_string(pres_.word_relations.size()) + " reduce to 0");
    }

    bool graded = true;
    try {
      require_graded(pres_);
    } catch (const GradingError&) {
      graded = false;
    }
    if (!graded) {
      report("series", "skipped", "presentation is not graded");
    } else {
      auto h = by_normal_words();
      bool nonneg = std::all_of(h.coefficients().begin(), h.coefficients().end(),
                                [](const BigInt& c) { return c >= 0; });
      verdict("series-nonnegative", nonneg, "degree " + std::to_string(degree()));
      if (auto c = closed_form())
        verdict("closed-form", *c == h, "agrees with normal-word count");
      if (!pres_.commutative() && pres_.ring->unit_degrees()) {
        auto F = obstructions();
        verdict("chains", hilbert_from_chains(F, degree()) == h,
                "agrees with normal-word count");
        verdict("euler", euler_identity_check(F, degree()).passed(),
                "residuals up to degree " + std::to_string(degree()));
      }
    }
    return all_ok ? ok : failed;
  }

  const RunConfig& cfg_;
  Presentation pres_;
  std::ostream& out_;
  bool records_;
  std::optional<CompletionResult> completion_;
};

} // namespace

int run_text(const RunConfig& config, std::string_view presentation,
             std::ostream& out, std::ostream& err) {
  if (config.max_degree < 1) {
    err << "error: --max-degree must be at least 1\n";
    return parse_error;
  }
  try {
    auto pres = parse_presentation(presentation);
    if (config.order)
      pres = with_order(pres, *config.order);
    std::ostringstream buffer;
    int code = Runner(config, std::move(pres), buffer).dispatch();
    out << buffer.str();
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const GradingError& e) {
    err << "grading error: " << e.what() << '\n';
    return grading_error;
  } catch (const SaturationError& e) {
    err << "saturation error: " << e.what() << '\n';
    return saturation_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string text;
  if (config.input_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(config.input_path, std::ios::binary);
    if (!in) {
      err << "error: cannot open '" << config.input_path << "'\n";
      return parse_error;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return run_text(config, text, out, err);
}

int main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Gröbner bases and Hilbert series of finitely presented algebras",
               "hgb"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string order, method = "normal-words", format = "text";
  std::size_t completion = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", cfg.input_path, "presentation file ('-' for stdin)")
        ->required();
    sub->add_option("--max-degree", cfg.max_degree,
                    "truncation degree / completion bound")
        ->check(CLI::PositiveNumber);
    sub->add_option("--completion-degree", completion,
                    "completion bound for words (default: --max-degree)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--order", order, "monomial order")
        ->check(CLI::IsMember({"lex", "deglex"}));
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "records"}));
    sub->add_option("--list-cap", cfg.list_cap,
                    "words listed per group in text output");
  };

  auto* gb = app.add_subcommand("gb", "compute a Gröbner basis");
  common(gb);
  gb->add_flag("--reduced", cfg.reduced, "inter-reduce and make monic");
  auto* hilbert = app.add_subcommand("hilbert", "compute the Hilbert series");
  common(hilbert);
  hilbert->add_option("--method", method, "counting method")
      ->check(CLI::IsMember({"normal-words", "chains", "closed-form", "all"}));
  auto* chains = app.add_subcommand("chains", "enumerate chains");
  common(chains);
  auto* nw = app.add_subcommand("normal-words", "list normal words per degree");
  common(nw);
  auto* check = app.add_subcommand("check", "verify a presentation");
  common(check);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty())
    reversed.pop_back(); // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  }

  if (gb->parsed())
    cfg.subcommand = Subcommand::gb;
  else if (hilbert->parsed())
    cfg.subcommand = Subcommand::hilbert;
  else if (chains->parsed())
    cfg.subcommand = Subcommand::chains;
  else if (nw->parsed())
    cfg.subcommand = Subcommand::normal_words;
  else
    cfg.subcommand = Subcommand::check;

  if (!order.empty())
    cfg.order = order == "lex" ? OrderScheme::lex : OrderScheme::deglex;
  if (completion > 0)
    cfg.completion_degree = completion;
  cfg.format = format == "records" ? OutputFormat::records : OutputFormat::text;
  if (method == "chains")
    cfg.method = Method::chains;
  else if (method == "closed-form")
    cfg.method = Method::closed_form;
  else if (method == "all")
    cfg.method = Method::all;
  else
    cfg.method = Method::normal_words;
  return run(cfg, out, err);
}

} // namespace hgb::cli
