#include "refinv/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace refinv {

GroupSpec::GroupSpec(FieldSpec f, std::size_t dim, std::vector<Matrix> gens,
                     std::uint64_t cap)
    : field(std::move(f)), n(dim), generators(std::move(gens)), order_cap(cap) {
  if (n == 0 || n > kMaxDim)
    throw InputError("dimension must be between 1 and " +
                     std::to_string(kMaxDim));
  for (const Matrix& g : generators) {
    if (g.n != n) throw InputError("generator dimension mismatch");
    for (const Scalar& s : g.a)
      if (s.coeffs.size() != field.k())
        throw InputError("generator entries do not belong to the field");
    if (!is_invertible(field, g))
      throw InputError("generator matrix is not invertible");
  }
}

namespace {

std::vector<Coeff> matrix_key(const Matrix& m) {
  std::vector<Coeff> key;
  key.reserve(m.a.size() * (m.a.empty() ? 0 : m.a[0].coeffs.size()));
  for (const Scalar& s : m.a)
    key.insert(key.end(), s.coeffs.begin(), s.coeffs.end());
  return key;
}

std::vector<Matrix> closure(const FieldSpec& f, std::size_t n,
                            const std::vector<Matrix>& gens,
                            std::uint64_t cap) {
  std::vector<Matrix> elems;
  std::set<std::vector<Coeff>> seen;
  Matrix id = Matrix::identity(f, n);
  elems.push_back(id);
  seen.insert(matrix_key(id));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Matrix& g : gens) {
      Matrix prod = mat_mul(f, elems[i], g);
      if (seen.insert(matrix_key(prod)).second) {
        if (elems.size() + 1 > cap)
          throw InputError("group closure exceeded order cap " +
                           std::to_string(cap));
        elems.push_back(std::move(prod));
      }
    }
  }
  return elems;
}

}  // namespace

std::vector<Matrix> enumerate_group(const GroupSpec& spec) {
  return closure(spec.field, spec.n, spec.generators, spec.order_cap);
}

Hyperplane normalize_hyperplane(const FieldSpec& f, const Vec& covector) {
  std::size_t lead = covector.size();
  for (std::size_t j = 0; j < covector.size(); ++j)
    if (!f.is_zero(covector[j])) {
      lead = j;
      break;
    }
  if (lead == covector.size())
    throw InputError("hyperplane form must be nonzero");
  Scalar s = f.inv(covector[lead]);
  return Hyperplane{vec_scale(f, s, covector)};
}

std::vector<Vec> hyperplane_basis(const FieldSpec& f, const Hyperplane& h) {
  return kernel_of_rows(f, {h.form}, h.form.size()).basis;
}

std::vector<Hyperplane> all_hyperplanes(const FieldSpec& f, std::size_t n) {
  std::set<Hyperplane> set;
  std::vector<Scalar> elems = f.elements();
  std::vector<std::size_t> idx(n, 0);
  Vec covector(n, f.zero());
  // iterate all q^n covectors via mixed-radix counter
  while (true) {
    for (std::size_t j = 0; j < n; ++j) covector[j] = elems[idx[j]];
    if (!vec_is_zero(f, covector)) set.insert(normalize_hyperplane(f, covector));
    std::size_t j = 0;
    while (j < n && ++idx[j] == elems.size()) idx[j++] = 0;
    if (j == n) break;
  }
  return {set.begin(), set.end()};
}

Vec root_vector(const FieldSpec& f, const Matrix& g, const Hyperplane& h) {
  const std::size_t n = g.n;
  if (h.form.size() != n) throw InputError("hyperplane dimension mismatch");
  for (const Vec& b : hyperplane_basis(f, h))
    if (mat_vec(f, g, b) != b)
      throw InputError("element does not fix the hyperplane pointwise");
  if (g == Matrix::identity(f, n))
    throw InputError("root vector of the identity is undefined");
  std::size_t lead = 0;
  while (f.is_zero(h.form[lead])) ++lead;
  Vec v0(n, f.zero());
  v0[lead] = f.one();
  Vec gv = mat_vec(f, g, v0);
  Scalar scale = f.inv(h.form[lead]);
  return vec_scale(f, scale, vec_sub(f, gv, v0));
}

std::vector<ReflectionInfo> classify_reflections(
    const FieldSpec& f, const std::vector<Matrix>& elements) {
  std::vector<ReflectionInfo> out;
  if (elements.empty()) return out;
  const std::size_t n = elements[0].n;
  Matrix id = Matrix::identity(f, n);
  for (const Matrix& g : elements) {
    if (g == id) continue;
    Subspace fixed = kernel(f, mat_sub(f, g, id));
    if (fixed.dim() != n - 1) continue;
    // the defining form of the fixed hyperplane
    Subspace ann = kernel_of_rows(f, fixed.basis, n);
    if (ann.dim() != 1) throw InternalError("hyperplane annihilator not a line");
    Hyperplane h = normalize_hyperplane(f, ann.basis[0]);
    Vec alpha = root_vector(f, g, h);
    Scalar lambda = f.add(f.one(), dot(f, h.form, alpha));
    if (lambda != det(f, g))
      throw InternalError("reflection eigenvalue disagrees with determinant");
    out.push_back(ReflectionInfo{g, h, alpha, lambda,
                                 f.is_one(lambda)});
  }
  return out;
}

std::vector<Hyperplane> reflecting_arrangement(
    const FieldSpec& f, const std::vector<Matrix>& elements) {
  std::set<Hyperplane> set;
  for (const ReflectionInfo& r : classify_reflections(f, elements))
    set.insert(r.hyperplane);
  return {set.begin(), set.end()};
}

std::vector<Matrix> pointwise_stabilizer(const FieldSpec& f,
                                         const std::vector<Matrix>& elements,
                                         const Hyperplane& h) {
  std::vector<Vec> basis = hyperplane_basis(f, h);
  std::vector<Matrix> out;
  for (const Matrix& g : elements) {
    bool fixes = true;
    for (const Vec& b : basis)
      if (mat_vec(f, g, b) != b) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(g);
  }
  return out;
}

StabilizerDecomposition stabilizer_decomposition(
    const FieldSpec& f, const std::vector<Matrix>& stabilizer,
    const Hyperplane& h) {
  if (stabilizer.empty()) throw InputError("stabilizer must contain the identity");
  const std::size_t n = stabilizer[0].n;
  Matrix id = Matrix::identity(f, n);
  std::vector<Vec> basis = hyperplane_basis(f, h);

  std::vector<Matrix> transvections;
  std::vector<Matrix> diagonalizable;
  for (const Matrix& g : stabilizer) {
    for (const Vec& b : basis)
      if (mat_vec(f, g, b) != b)
        throw InputError("element does not fix the hyperplane pointwise");
    if (g == id) continue;
    if (f.is_one(det(f, g)))
      transvections.push_back(g);
    else
      diagonalizable.push_back(g);
  }

  StabilizerDecomposition out;
  out.group_order = stabilizer.size();
  out.sigma = id;
  out.omega = f.one();
  out.e = 1;
  if (!diagonalizable.empty()) {
    std::sort(diagonalizable.begin(), diagonalizable.end());
    std::uint64_t best = 0;
    for (const Matrix& g : diagonalizable) {
      std::uint64_t ord = f.multiplicative_order(det(f, g));
      if (ord > best) {  // ties resolved by the lexicographic sort above
        best = ord;
        out.sigma = g;
      }
    }
    out.omega = det(f, out.sigma);
    out.e = best;
  }
  out.subfield = f.subfield_generated(out.omega);
  out.K_order = transvections.size() + 1;

  // Minimal transvection set: Gaussian-style greedy over the canonical
  // matrix order, keeping those whose root enlarges the span over
  // F_p(omega).
  std::sort(transvections.begin(), transvections.end());
  std::vector<Vec> roots;
  for (const Matrix& t : transvections) {
    Vec alpha = root_vector(f, t, h);
    std::vector<Vec> trial = roots;
    trial.push_back(alpha);
    if (subfield_span_dim(f, trial, out.subfield) > roots.size()) {
      roots.push_back(alpha);
      out.T.push_back(t);
    }
  }
  out.T_roots = roots;
  out.d = out.T.size();

  std::uint64_t predicted = out.e;
  for (std::size_t i = 0; i < out.d; ++i) predicted *= out.subfield.size();
  if (predicted != out.group_order)
    throw InternalError("stabilizer order formula violated");
  std::uint64_t k_pred = 1;
  for (std::size_t i = 0; i < out.d; ++i) k_pred *= out.subfield.size();
  if (k_pred != out.K_order)
    throw InternalError("transvection subgroup size disagrees with root space");
  return out;
}

bool is_reflection_generated(const FieldSpec& f,
                             const std::vector<Matrix>& elements) {
  if (elements.empty()) return true;
  std::vector<Matrix> gens;
  for (const ReflectionInfo& r : classify_reflections(f, elements))
    gens.push_back(r.element);
  if (gens.empty()) return elements.size() == 1;
  std::vector<Matrix> sub = closure(f, elements[0].n, gens, elements.size());
  return sub.size() == elements.size();
}

std::optional<Hyperplane> common_fixed_hyperplane(
    const FieldSpec& f, const std::vector<Matrix>& elements) {
  if (elements.empty()) return std::nullopt;
  const std::size_t n = elements[0].n;
  Matrix id = Matrix::identity(f, n);
  // rows of all (g - I) stacked; the common fixed space is their kernel
  std::vector<Vec> rows;
  for (const Matrix& g : elements) {
    Matrix diff = mat_sub(f, g, id);
    for (std::size_t i = 0; i < n; ++i)
      rows.emplace_back(diff.a.begin() + i * n, diff.a.begin() + (i + 1) * n);
  }
  if (rows.empty()) return std::nullopt;
  Subspace fixed = kernel_of_rows(f, rows, n);
  if (fixed.dim() != n - 1) return std::nullopt;
  Subspace ann = kernel_of_rows(f, fixed.basis, n);
  return normalize_hyperplane(f, ann.basis[0]);
}

}  // namespace refinv
