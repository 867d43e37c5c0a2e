#include "refinv/factorization.hpp"

#include <algorithm>

namespace refinv {

namespace {

// Dense truncated power series with rational coefficients, enough Laurent
// machinery for the ramification formula.
using Series = std::vector<Rational>;  // coeffs[j] is the s^j coefficient

Series series_mul(const Series& a, const Series& b, std::size_t order) {
  Series r(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order && i < a.size(); ++i)
    for (std::size_t j = 0; i + j <= order && j < b.size(); ++j)
      r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

// 1/a for a series with nonzero constant term.
Series series_inv(const Series& a, std::size_t order) {
  Series r(order + 1, Rational(0));
  r[0] = Rational(1) / a[0];
  for (std::size_t j = 1; j <= order; ++j) {
    Rational acc(0);
    for (std::size_t i = 1; i <= j && i < a.size(); ++i)
      acc = acc + a[i] * r[j - i];
    r[j] = (Rational(0) - acc) / a[0];
  }
  return r;
}

Rational binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Rational(0);
  Rational r(1);
  for (std::uint64_t i = 0; i < k; ++i)
    r = r * Rational(static_cast<std::int64_t>(n - i)) /
        Rational(static_cast<std::int64_t>(i + 1));
  return r;
}

}  // namespace

Rational psi(const std::vector<std::uint64_t>& degrees, std::size_t n) {
  if (degrees.size() != n)
    throw InputError("psi expects one degree per variable");
  for (std::uint64_t d : degrees)
    if (d == 0) throw InputError("psi requires degrees >= 1");

  // Each factor 1/(1 - t^d) = 1/(d s) * g_d(s)^{-1} with
  // g_d(s) = (1 - (1-s)^d)/(d s), a unit power series in s = 1 - t.
  const std::size_t order = 2;
  Series prod(order + 1, Rational(0));
  prod[0] = Rational(1);
  Rational lead(1);
  for (std::uint64_t d : degrees) {
    lead = lead * Rational(static_cast<std::int64_t>(d));
    Series g(order + 1, Rational(0));
    for (std::size_t j = 0; j <= order; ++j) {
      // coefficient of s^{j+1} in 1-(1-s)^d is (-1)^j binom(d, j+1)
      Rational c = binomial(d, j + 1);
      if (j % 2 == 1) c = Rational(0) - c;
      g[j] = c / Rational(static_cast<std::int64_t>(d));
    }
    prod = series_mul(prod, series_inv(g, order), order);
  }
  // The product is s^{-n}/lead * prod(s); psi is the s^{-(n-1)} coefficient.
  Rational laurent = prod[1] / lead;

  Rational closed(0);
  for (std::uint64_t d : degrees)
    closed = closed + Rational(static_cast<std::int64_t>(d - 1));
  closed = closed / (Rational(2) * lead);
  if (laurent != closed)
    throw InternalError("psi: Laurent expansion disagrees with closed form");
  return laurent;
}

std::uint64_t stabilizer_exponent_sum(const FieldSpec& f,
                                      const std::vector<Matrix>& elements,
                                      const Hyperplane& h) {
  std::vector<Matrix> stab = pointwise_stabilizer(f, elements, h);
  if (stab.size() <= 1)
    throw InputError("hyperplane is not reflecting for this group");
  auto [basics, trace] = construct_hyperplane_invariants(f, stab, h);
  return basics.exponent_sum();
}

FactorizationReport jacobian_factorization(const FieldSpec& f,
                                           const std::vector<Matrix>& elements,
                                           const std::vector<MultiPoly>& basics) {
  FactorizationReport report;
  report.jacobian = jacobian(f, basics);
  report.unit = f.zero();
  if (report.jacobian.is_zero())
    throw InputError(
        "Jacobian determinant vanishes; the candidate invariants are "
        "algebraically dependent");
  std::vector<Hyperplane> arrangement = reflecting_arrangement(f, elements);
  MultiPoly quotient = report.jacobian;
  bool divided_all = true;
  for (const Hyperplane& h : arrangement) {
    HyperplaneFactor factor;
    factor.hyperplane = h;
    factor.multiplicity = stabilizer_exponent_sum(f, elements, h);
    factor.divides =
        divide_by_linear_power(f, report.jacobian, h.form, factor.multiplicity)
            .has_value();
    if (divided_all) {
      auto q = divide_by_linear_power(f, quotient, h.form, factor.multiplicity);
      if (q)
        quotient = std::move(*q);
      else
        divided_all = false;
    }
    report.factors.push_back(std::move(factor));
  }
  if (divided_all) {
    auto unit = quotient.constant_value(f);
    if (unit && !f.is_zero(*unit)) {
      report.unit = *unit;
      report.pass = true;
    }
  }
  return report;
}

bool degree_identity_check(const FieldSpec& f,
                           const std::vector<Matrix>& elements,
                           const std::vector<MultiPoly>& basics) {
  MultiPoly j = jacobian(f, basics);
  if (j.is_zero())
    throw InputError("Jacobian determinant vanishes");
  std::uint64_t sum = 0;
  for (const Hyperplane& h : reflecting_arrangement(f, elements))
    sum += stabilizer_exponent_sum(f, elements, h);
  return j.degree() == sum;
}

RamificationReport ramification_check(const FieldSpec& f,
                                      const std::vector<Matrix>& elements,
                                      const std::vector<MultiPoly>& basics,
                                      bool exhaustive) {
  if (elements.empty()) throw InputError("group must contain the identity");
  const std::size_t n = elements[0].n;
  RamificationReport report;

  std::vector<std::uint64_t> degrees;
  for (const MultiPoly& p : basics) degrees.push_back(p.degree());
  report.lhs = Rational(static_cast<std::int64_t>(elements.size())) *
               psi(degrees, n);

  std::vector<Hyperplane> hyperplanes =
      exhaustive ? all_hyperplanes(f, n) : reflecting_arrangement(f, elements);
  report.rhs = Rational(0);
  for (const Hyperplane& h : hyperplanes) {
    std::vector<Matrix> stab = pointwise_stabilizer(f, elements, h);
    RamificationTerm term;
    term.hyperplane = h;
    term.stabilizer_order = stab.size();
    if (stab.size() == 1) {
      term.degrees.assign(n, 1);  // trivial stabilizer: F[V] itself
    } else {
      auto [basics_h, trace] = construct_hyperplane_invariants(f, stab, h);
      term.degrees = basics_h.degrees;
    }
    term.psi_value = psi(term.degrees, n);
    term.contribution =
        Rational(static_cast<std::int64_t>(term.stabilizer_order)) *
        term.psi_value;
    report.rhs = report.rhs + term.contribution;
    report.terms.push_back(std::move(term));
  }
  report.pass = report.lhs == report.rhs;
  return report;
}

}  // namespace refinv
