#pragma once

#include <string>
#include <vector>

#include "pmf/biexp.hpp"

namespace pmf {

enum class Symmetry { symmetric, antisymmetric, mixed };

/// A degenerate Hilbert modular form: a form for the subgroup G of
/// SL2(Z) x SL2(Z) of pairs congruent mod 2, expanded in (q1, q2) on the
/// half-integer grid. The symmetry flag records behaviour under the
/// variable swap and is verified at construction.
struct GForm {
  long weight;
  BiExp expansion;
  Symmetry symmetry;
};

/// Swap behaviour of an expansion on its overlap window.
Symmetry detect_symmetry(const BiExp& x);

/// Checked constructor: detects and stores the symmetry flag.
GForm make_gform(long weight, BiExp expansion);

/// f_ij(tau1, tau2) = e_i(tau1) e_j(tau2), weight 2.
GForm f_tensor(int i, int j, const Rational& trunc);

/// The generators of M_*(G): weights 2, 4, 6, 8.
GForm X2(const Rational& trunc);
GForm X4(const Rational& trunc);
GForm Delta6(const Rational& trunc);
GForm X8(const Rational& trunc);

/// Delta6 built the second way, as eta(tau1)^12 eta(tau2)^12; must agree
/// with the f_ij product construction coefficientwise.
GForm Delta6_eta(const Rational& trunc);

/// Boundary operator: the q1^0 (which = 1) or q2^0 (which = 2) slice.
QExp phi(int which, const GForm& x);

/// Left minus right side of the quadratic relation satisfied by X8,
/// expanded to the given window; identically zero by the relation.
BiExp relation_R_residual(const Rational& trunc);

/// Coefficients of the relation as monomials in (X2, X4, Delta6, X8);
/// exposed so tests can perturb a single term.
BiExp relation_R_residual_perturbed(const Rational& trunc, const Rational& x4_4_coeff);

/// The generators of the subring A_*: five symmetric ones (weights
/// 4, 6, 6, 8, 10) followed by three antisymmetric (12, 14, 16).
std::vector<std::pair<std::string, GForm>> a_star_generators(const Rational& trunc);

/// True iff both rescaled boundary slices are level-1 modular forms.
/// Throws TruncationError when the window cannot decide.
bool a_star_membership(const GForm& x);

}  // namespace pmf
