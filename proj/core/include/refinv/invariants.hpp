#ifndef REFINV_INVARIANTS_HPP
#define REFINV_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "refinv/group.hpp"
#include "refinv/mpoly.hpp"

namespace refinv {

/// A candidate or certified system of basic invariants: n homogeneous
/// polynomials whose degrees multiply to the group order and whose Jacobian
/// determinant is nonzero.
struct BasicInvariants {
  std::vector<MultiPoly> polys;
  std::vector<std::uint64_t> degrees;

  /// The exponents d_i - 1.
  std::vector<std::uint64_t> exponents() const;
  std::uint64_t exponent_sum() const;
  std::uint64_t degree_product() const;
};

/// One induction step of the hyperplane construction, kept for audit:
/// which polynomial was the pivot, the displacement scalars b_i, the
/// correction coefficients c_i, the additive orbit set A, and the exponent
/// of the (adapted-frame) Jacobian after the step.
struct TraceStep {
  std::size_t pivot = 0;
  MultiPoly pivot_before;          // adapted frame
  std::vector<Scalar> b;           // per non-last invariant
  std::vector<Scalar> c;
  std::vector<Scalar> additive_set;
  std::uint64_t jacobian_exponent = 0;
  std::vector<MultiPoly> polys_after;  // adapted frame
};

struct ConstructionTrace {
  Matrix basis_change;             // adapted basis vectors as columns
  std::uint64_t base_jacobian_exponent = 0;
  std::vector<TraceStep> steps;
};

struct VerifyReport {
  bool invariant = false;
  bool jacobian_nonzero = false;
  bool degree_product_matches = false;
  bool pass = false;
  std::uint64_t group_order = 0;
  std::uint64_t degree_product = 0;
  std::vector<std::uint64_t> degrees;
};

struct ConstructionOptions {
  /// Consumption order of the minimal transvections (indices into the
  /// decomposition's T); defaults to T's own order.
  std::optional<std::vector<std::size_t>> transvection_order;
};

/// Builds basic invariants for a group fixing the hyperplane pointwise, by
/// induction over a minimal transvection set: start from coordinates
/// adapted to the hyperplane (z_n the defining form, the maximal
/// diagonalizable reflection diagonal), seed with z_1,...,z_{n-1}, z_n^e,
/// and per transvection correct all non-pivot invariants and replace the
/// pivot by its orbit product h(f_1), h(X) = prod_{a in A}(X + a z_n^{d_1})
/// with A = F_p(omega) b_1. Postconditions asserted throughout: every
/// intermediate Jacobian is a unit times z_n^m, non-last degrees stay
/// p-powers, and the final system passes verify_basic_invariants. Results
/// are returned in the caller's coordinates, so the Jacobian is a unit
/// times the caller's l_H to the sum of the exponents.
std::pair<BasicInvariants, ConstructionTrace> construct_hyperplane_invariants(
    const FieldSpec& f, const std::vector<Matrix>& stabilizer,
    const Hyperplane& h, const ConstructionOptions& options = {});

/// Kemper criterion: homogeneous, invariant under the whole group, nonzero
/// Jacobian, and degree product equal to the group order.
VerifyReport verify_basic_invariants(const FieldSpec& f,
                                     const std::vector<Matrix>& elements,
                                     const std::vector<MultiPoly>& polys);

/// Size guard shared by the builtin families: n <= 3 and q^n <= 512.
void check_family_size(const FieldSpec& f, std::size_t n);

/// Dickson invariants d_{n,0},...,d_{n,n-1} of GL_n(F_q), of degree
/// q^n - q^i, computed as quotients of Moore determinants (exact division
/// asserted) and cross-checked against the subspace orbit formula for
/// (n,q) in {(2,2),(2,3),(3,2)}.
std::vector<MultiPoly> dickson_invariants(const FieldSpec& f, std::size_t n);

/// Independent route: d_{n,i} as the sum over codimension-i subspaces W of
/// the product of all nonzero covectors not vanishing on W.
MultiPoly dickson_orbit_sum(const FieldSpec& f, std::size_t n, std::size_t i);

/// Product of the normalized defining forms of all hyperplanes of F_q^n;
/// homogeneous of degree (q^n - 1)/(q - 1).
MultiPoly q_form(const FieldSpec& f, std::size_t n);

/// Basic invariants {Q, d_{n,1}, ..., d_{n,n-1}} of SL_n(F_q).
std::vector<MultiPoly> sl_invariants(const FieldSpec& f, std::size_t n);

}  // namespace refinv

#endif
