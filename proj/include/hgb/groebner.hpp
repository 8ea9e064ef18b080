#pragma once

#include "hgb/polynomial.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hgb {

struct GroebnerBasis {
  std::vector<CommPolynomial> elements;
  bool reduced = false;
  /// The ideal is the whole ring; elements == {1}.
  bool trivial = false;

  std::vector<CommMonomial> leading_monomials() const;
};

/// f - (lc(f)/lc(g)) * m * g where lt(f) = m * lt(g).
/// Throws NotReducibleError if lt(g) does not divide lt(f).
CommPolynomial reduce_once(const CommPolynomial& f, const CommPolynomial& g);

/// Index of the reducer used for `m`: among elements whose leading monomial
/// divides m, the one with the smallest leading monomial, then the earliest.
std::optional<std::size_t> select_reducer(const CommMonomial& m,
                                          std::span<const CommPolynomial> G);

/// Full reduction: no term of the result is divisible by any lt(g).
CommPolynomial normal_form(const CommPolynomial& f,
                           std::span<const CommPolynomial> G);

/// S-polynomial over lcm(lt(f), lt(g)); leading terms cancel.
CommPolynomial s_polynomial(const CommPolynomial& f, const CommPolynomial& g);

/// Buchberger completion with FIFO pair order and the coprime-lead skip.
/// Throws InputError on an empty list or a zero relation.
GroebnerBasis buchberger(std::span<const CommPolynomial> relations);

/// Inter-reduces, makes monic and sorts by increasing leading monomial.
GroebnerBasis reduce_basis(const GroebnerBasis& G);

bool is_member(const CommPolynomial& f, const GroebnerBasis& G);

/// result[d] lists the degree-d monomials divisible by no element of
/// `leading`, increasing under `ord`.
std::vector<std::vector<CommMonomial>>
normal_monomials(std::span<const CommMonomial> leading,
                 const MonomialOrder& ord, std::size_t max_degree);
std::vector<std::vector<CommMonomial>>
normal_monomials(const GroebnerBasis& G, const Ring& ring,
                 std::size_t max_degree);

struct DiamondReport {
  std::size_t pairs_checked = 0;
  /// Pairs (i, j) whose S-polynomial has a nonzero normal form.
  std::vector<std::pair<std::size_t, std::size_t>> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// Every pairwise S-polynomial reduces to zero modulo G.
DiamondReport check_diamond(std::span<const CommPolynomial> G);

} // namespace hgb
