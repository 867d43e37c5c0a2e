#ifndef REFINV_MPOLY_HPP
#define REFINV_MPOLY_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "refinv/linalg.hpp"

namespace refinv {

using Expo = std::vector<std::uint32_t>;

inline std::uint64_t expo_degree(const Expo& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

/// Graded lexicographic, descending: higher total degree first, ties broken
/// lexicographically with the larger exponent vector first. map iteration
/// therefore starts at the leading term.
struct GradedLexDesc {
  bool operator()(const Expo& x, const Expo& y) const {
    std::uint64_t dx = expo_degree(x), dy = expo_degree(y);
    if (dx != dy) return dx > dy;
    return x > y;
  }
};

/// Sparse multivariate polynomial over F_q. No zero coefficients are ever
/// stored; terms are kept in graded-lex order with the leading term first.
class MultiPoly {
public:
  using TermMap = std::map<Expo, Scalar, GradedLexDesc>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t n_vars) : n_vars_(n_vars) {}

  static MultiPoly zero(std::size_t n_vars) { return MultiPoly(n_vars); }
  static MultiPoly constant(const FieldSpec& f, std::size_t n_vars,
                            const Scalar& c);
  static MultiPoly one(const FieldSpec& f, std::size_t n_vars);
  static MultiPoly variable(const FieldSpec& f, std::size_t n_vars,
                            std::size_t j);
  static MultiPoly monomial(const FieldSpec& f, Expo e, const Scalar& c);
  /// sum_j form[j] * z_j
  static MultiPoly linear_form(const FieldSpec& f, const Vec& form);

  std::size_t n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Total degree. The degree of the zero polynomial is undefined and
  /// throws; callers must check is_zero() first.
  std::uint64_t degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Nonzero constant c such that *this == c * z_var^m, if of that shape.
  std::optional<Scalar> as_unit_power(std::size_t var, std::uint64_t m) const;
  std::optional<Scalar> constant_value(const FieldSpec& f) const;

  void add_term(const FieldSpec& f, const Expo& e, const Scalar& c);

  bool operator==(const MultiPoly& other) const {
    return n_vars_ == other.n_vars_ && terms_ == other.terms_;
  }

private:
  std::size_t n_vars_ = 0;
  TermMap terms_;
};

MultiPoly poly_add(const FieldSpec& f, const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_sub(const FieldSpec& f, const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_neg(const FieldSpec& f, const MultiPoly& a);
MultiPoly poly_mul(const FieldSpec& f, const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_scale(const FieldSpec& f, const Scalar& c, const MultiPoly& a);
MultiPoly poly_pow(const FieldSpec& f, const MultiPoly& a, std::uint64_t e);
MultiPoly derivative(const FieldSpec& f, const MultiPoly& a, std::size_t var);

/// Replaces z_j by sum_i m[j][i] * z_i, i.e. composes with the linear map m
/// (for a point argument: substitute(f, m)(v) = f(m v)). This is the
/// workhorse for basis changes; substitute(substitute(f,N), M) =
/// substitute(f, N*M).
MultiPoly substitute(const FieldSpec& f, const MultiPoly& a, const Matrix& m);

/// Left group action on polynomials: act(g, f) = f composed with g^{-1}, so
/// act(gh, f) = act(g, act(h, f)) and a polynomial is G-invariant exactly
/// when act(g, .) fixes it for every g in G.
MultiPoly act(const FieldSpec& f, const Matrix& g, const MultiPoly& a);

/// det(d fs[i] / d z_j). Requires fs.size() == n_vars; returns the zero
/// polynomial when the determinant vanishes.
MultiPoly jacobian(const FieldSpec& f, const std::vector<MultiPoly>& fs);

/// Quotient a/b when b divides a exactly, nullopt otherwise. Homogeneous
/// linear divisors are routed through an invertible substitution sending
/// the form to z_n followed by univariate division and back-substitution;
/// everything else runs leading-term cancellation in graded-lex order.
std::optional<MultiPoly> exact_divide(const FieldSpec& f, const MultiPoly& a,
                                      const MultiPoly& b);

/// a / l^m for a nonzero linear form l (as covector), nullopt when the
/// power does not divide.
std::optional<MultiPoly> divide_by_linear_power(const FieldSpec& f,
                                                const MultiPoly& a,
                                                const Vec& form,
                                                std::uint64_t m);

/// True when every term contains exactly one active variable, raised to a
/// power of the characteristic (passive variables may appear arbitrarily as
/// coefficients). This is the shape criterion for additive polynomials.
bool is_additive(const FieldSpec& f, const MultiPoly& a,
                 const std::vector<std::size_t>& active_vars);

/// Univariate polynomial in an auxiliary variable X whose coefficients are
/// MultiPolys in the base variables.
struct XPoly {
  std::size_t n_vars = 0;
  std::map<std::uint64_t, MultiPoly> coeffs;  // X-degree -> coefficient

  /// Embeds into a MultiPoly with one extra variable (X last).
  MultiPoly to_extended_poly(const FieldSpec& f) const;
};

/// h(X) = prod_{a in A} (X + a*u) for a finite additive subgroup A and a
/// monomial u. The result is additive in X: every X-exponent appearing is a
/// p-power, which is asserted. Throws InputError when A is not additively
/// closed or does not contain 0.
XPoly orbit_additive_product(const FieldSpec& f, const std::vector<Scalar>& A,
                             const MultiPoly& u);

/// h(value) for an XPoly h.
MultiPoly compose_xpoly(const FieldSpec& f, const XPoly& h,
                        const MultiPoly& value);

/// Human-readable rendering like "z1^2*z2 + [1,1]*z3" for diagnostics.
std::string poly_to_string(const FieldSpec& f, const MultiPoly& a);

}  // namespace refinv

#endif
