#ifndef REFINV_LINALG_HPP
#define REFINV_LINALG_HPP

#include <cstddef>
#include <vector>

#include "refinv/gf.hpp"

namespace refinv {

using Vec = std::vector<Scalar>;

/// Dimensions are capped at kMaxDim: group orders explode well before that
/// and every algorithm here is written for desk scale.
inline constexpr std::size_t kMaxDim = 6;

/// Square matrix over F_q, row-major. Matrices act on column vectors.
struct Matrix {
  std::size_t n = 0;
  std::vector<Scalar> a;  // n*n entries

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix zero(const FieldSpec& f, std::size_t n);

  const Scalar& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

  auto operator<=>(const Matrix&) const = default;
};

/// Subspace of F_q^n held as a reduced-echelon basis (pivots left to right,
/// rows ordered by pivot column), which is unique per subspace and thus
/// usable as a dictionary key.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
  auto operator<=>(const Subspace&) const = default;
};

Matrix mat_mul(const FieldSpec& f, const Matrix& x, const Matrix& y);
Matrix mat_sub(const FieldSpec& f, const Matrix& x, const Matrix& y);
Vec mat_vec(const FieldSpec& f, const Matrix& m, const Vec& v);
Matrix transpose(const Matrix& m);

Scalar det(const FieldSpec& f, const Matrix& m);
/// Throws InputError on singular input.
Matrix mat_inv(const FieldSpec& f, const Matrix& m);
bool is_invertible(const FieldSpec& f, const Matrix& m);

/// Conjugates m into the coordinates of the given basis: B^{-1} m B where
/// the basis vectors are the columns of B. Throws if the basis is singular.
Matrix change_of_basis(const FieldSpec& f, const Matrix& m,
                       const std::vector<Vec>& basis);

/// Reduced row echelon form; zero rows dropped.
std::vector<Vec> rref(const FieldSpec& f, std::vector<Vec> rows);
std::size_t rank(const FieldSpec& f, const std::vector<Vec>& rows);

/// Nullspace {v : rows . v = 0} of an r x n coefficient array, as a
/// canonical Subspace.
Subspace kernel_of_rows(const FieldSpec& f, const std::vector<Vec>& rows,
                        std::size_t n);
Subspace kernel(const FieldSpec& f, const Matrix& m);

Vec vec_add(const FieldSpec& f, const Vec& x, const Vec& y);
Vec vec_sub(const FieldSpec& f, const Vec& x, const Vec& y);
Vec vec_scale(const FieldSpec& f, const Scalar& c, const Vec& x);
Scalar dot(const FieldSpec& f, const Vec& x, const Vec& y);
bool vec_is_zero(const FieldSpec& f, const Vec& x);

/// Dimension over `sub` of the sub-linear span of the given vectors.
/// Each F_q coordinate is flattened into [F_q : sub] coordinates over the
/// subfield (basis: powers of the subfield generator times greedily chosen
/// field power-basis elements), then ordinary elimination runs with all
/// entries inside the subfield.
std::size_t subfield_span_dim(const FieldSpec& f,
                              const std::vector<Vec>& vectors,
                              const Subfield& sub);

}  // namespace refinv

#endif
