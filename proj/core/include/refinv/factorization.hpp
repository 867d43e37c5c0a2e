#ifndef REFINV_FACTORIZATION_HPP
#define REFINV_FACTORIZATION_HPP

#include <cstdint>
#include <vector>

#include "refinv/invariants.hpp"
#include "refinv/rational.hpp"

namespace refinv {

/// Outcome of factoring the Jacobian determinant of a set of basic
/// invariants into powers of the reflecting-hyperplane forms:
/// pass holds exactly when jacobian = unit * prod_H l_H^{multiplicity}.
/// `divides` records, per hyperplane, the standalone divisibility
/// l_H^{m_H} | J (independent of the full product division).
struct HyperplaneFactor {
  Hyperplane hyperplane;
  std::uint64_t multiplicity = 0;
  bool divides = false;
};

struct FactorizationReport {
  MultiPoly jacobian;
  std::vector<HyperplaneFactor> factors;
  Scalar unit;
  bool pass = false;
};

struct RamificationTerm {
  Hyperplane hyperplane;
  std::uint64_t stabilizer_order = 1;
  std::vector<std::uint64_t> degrees;
  Rational psi_value;
  Rational contribution;
};

/// Both sides of |G| psi(F[V]^G) = sum_H |G_H| psi(F[V]^{G_H}) as exact
/// rationals; pass is strict equality.
struct RamificationReport {
  Rational lhs;
  Rational rhs;
  std::vector<RamificationTerm> terms;
  bool pass = false;
};

/// Coefficient of 1/(1-t)^{n-1} in the expansion at t = 1 of
/// prod_i 1/(1 - t^{d_i}): computed by exact Laurent expansion in s = 1 - t
/// and asserted against the closed form sum(d_i - 1) / (2 prod d_i).
/// Requires degrees.size() == n and every degree >= 1.
Rational psi(const std::vector<std::uint64_t>& degrees, std::size_t n);

/// Sum of the exponents of the pointwise stabilizer of H, from the degrees
/// of its constructed basic invariants. H must be reflecting.
std::uint64_t stabilizer_exponent_sum(const FieldSpec& f,
                                      const std::vector<Matrix>& elements,
                                      const Hyperplane& h);

/// Exact division of J by prod_H l_H^{m_H} over the reflecting arrangement;
/// pass when the quotient is a nonzero constant (recorded as the unit).
/// Throws InputError when the Jacobian vanishes.
FactorizationReport jacobian_factorization(const FieldSpec& f,
                                           const std::vector<Matrix>& elements,
                                           const std::vector<MultiPoly>& basics);

/// deg J == sum_H m_H, using degrees only (no polynomial division).
bool degree_identity_check(const FieldSpec& f,
                           const std::vector<Matrix>& elements,
                           const std::vector<MultiPoly>& basics);

/// |G| psi(F[V]^G) vs the per-hyperplane sum. By default only reflecting
/// hyperplanes are enumerated (a trivial stabilizer contributes
/// 1 * psi(degrees all 1) = 0); exhaustive mode iterates every hyperplane
/// of V as a cross-check.
RamificationReport ramification_check(const FieldSpec& f,
                                      const std::vector<Matrix>& elements,
                                      const std::vector<MultiPoly>& basics,
                                      bool exhaustive = false);

}  // namespace refinv

#endif
