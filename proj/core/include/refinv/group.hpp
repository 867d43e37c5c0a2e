#ifndef REFINV_GROUP_HPP
#define REFINV_GROUP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "refinv/linalg.hpp"

namespace refinv {

inline constexpr std::uint64_t kDefaultOrderCap = 1ull << 20;

/// A finite matrix group given by generators over a finite field.
struct GroupSpec {
  FieldSpec field;
  std::size_t n = 0;
  std::vector<Matrix> generators;
  std::uint64_t order_cap = kDefaultOrderCap;

  GroupSpec(FieldSpec f, std::size_t dim, std::vector<Matrix> gens,
            std::uint64_t cap = kDefaultOrderCap);
};

/// Hyperplane in F_q^n, stored as its defining linear form normalized so
/// the first nonzero coordinate is 1. Two hyperplanes are equal exactly
/// when their forms are.
struct Hyperplane {
  Vec form;

  auto operator<=>(const Hyperplane&) const = default;
};

Hyperplane normalize_hyperplane(const FieldSpec& f, const Vec& covector);
/// Reduced-echelon basis of ker(form).
std::vector<Vec> hyperplane_basis(const FieldSpec& f, const Hyperplane& h);
/// All (q^n - 1)/(q - 1) hyperplanes of F_q^n in canonical order.
std::vector<Hyperplane> all_hyperplanes(const FieldSpec& f, std::size_t n);

/// A reflection g about hyperplane H = ker l, annotated with its root
/// vector alpha (relative to the normalized form): g v = v + l(v) alpha.
/// The nonidentity eigenvalue is 1 + l(alpha); transvections are exactly
/// the case l(alpha) = 0, equivalently determinant 1.
struct ReflectionInfo {
  Matrix element;
  Hyperplane hyperplane;
  Vec root;
  Scalar eigenvalue;
  bool is_transvection = false;
};

/// Structure of a group fixing a hyperplane pointwise:
/// a diagonalizable reflection sigma of maximal order (identity when there
/// is none), its determinant omega of order e, the transvection subgroup K,
/// and a minimal transvection set T whose root vectors form a basis of the
/// root space of K over F_p(omega). The order formula
/// |G_H| = e * |F_p(omega)|^d with d = |T| is asserted on construction.
struct StabilizerDecomposition {
  Matrix sigma;
  Scalar omega;
  std::uint64_t e = 1;
  std::uint64_t K_order = 1;
  std::vector<Matrix> T;
  std::vector<Vec> T_roots;
  std::size_t d = 0;
  Subfield subfield;
  std::uint64_t group_order = 1;
};

/// Breadth-first closure of the generators under multiplication, starting
/// at the identity; deterministic insertion order. Throws InputError naming
/// the cap when the closure grows past spec.order_cap.
std::vector<Matrix> enumerate_group(const GroupSpec& spec);

/// The non-identity elements fixing some hyperplane pointwise, annotated.
/// Expects `elements` to be a full group.
std::vector<ReflectionInfo> classify_reflections(const FieldSpec& f,
                                                 const std::vector<Matrix>& elements);

/// Deduplicated reflecting hyperplanes in lexicographic order.
std::vector<Hyperplane> reflecting_arrangement(const FieldSpec& f,
                                               const std::vector<Matrix>& elements);

/// {g : g v = v for all v in H}; always contains the identity.
std::vector<Matrix> pointwise_stabilizer(const FieldSpec& f,
                                         const std::vector<Matrix>& elements,
                                         const Hyperplane& h);

/// alpha with g v = v + l(v) alpha, for g != I fixing H pointwise.
Vec root_vector(const FieldSpec& f, const Matrix& g, const Hyperplane& h);

StabilizerDecomposition stabilizer_decomposition(const FieldSpec& f,
                                                 const std::vector<Matrix>& stabilizer,
                                                 const Hyperplane& h);

/// True when the subgroup generated by the reflections is the whole group
/// (trivially true for the trivial group).
bool is_reflection_generated(const FieldSpec& f,
                             const std::vector<Matrix>& elements);

/// The hyperplane fixed pointwise by every element, when one exists.
std::optional<Hyperplane> common_fixed_hyperplane(const FieldSpec& f,
                                                  const std::vector<Matrix>& elements);

}  // namespace refinv

#endif
