#include "refinv/invariants.hpp"

#include <algorithm>
#include <set>

namespace refinv {

std::vector<std::uint64_t> BasicInvariants::exponents() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : degrees) out.push_back(d - 1);
  return out;
}

std::uint64_t BasicInvariants::exponent_sum() const {
  std::uint64_t s = 0;
  for (std::uint64_t d : degrees) s += d - 1;
  return s;
}

std::uint64_t BasicInvariants::degree_product() const {
  std::uint64_t prod = 1;
  for (std::uint64_t d : degrees) prod *= d;
  return prod;
}

VerifyReport verify_basic_invariants(const FieldSpec& f,
                                     const std::vector<Matrix>& elements,
                                     const std::vector<MultiPoly>& polys) {
  if (elements.empty()) throw InputError("group must contain the identity");
  const std::size_t n = elements[0].n;
  if (polys.size() != n)
    throw InputError("expected " + std::to_string(n) + " invariants");
  VerifyReport report;
  report.group_order = elements.size();
  for (const MultiPoly& p : polys) {
    if (p.is_zero() || !p.is_homogeneous())
      throw InputError("candidate invariants must be nonzero homogeneous");
    if (p.n_vars() != n) throw InputError("polynomial arity mismatch");
    report.degrees.push_back(p.degree());
  }
  report.invariant = true;
  for (const Matrix& g : elements) {
    for (const MultiPoly& p : polys)
      if (act(f, g, p) != p) {
        report.invariant = false;
        break;
      }
    if (!report.invariant) break;
  }
  report.jacobian_nonzero = !jacobian(f, polys).is_zero();
  report.degree_product = 1;
  for (std::uint64_t d : report.degrees) report.degree_product *= d;
  report.degree_product_matches = report.degree_product == report.group_order;
  report.pass = report.invariant && report.jacobian_nonzero &&
                report.degree_product_matches;
  return report;
}

namespace {

bool is_p_power(std::uint64_t v, Coeff p) {
  if (v == 0) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

// Asserts f == unit * z_var^m and returns the unit.
Scalar require_unit_power(const FieldSpec& f, const MultiPoly& poly,
                          std::size_t var, std::uint64_t m,
                          const char* what) {
  auto unit = poly.as_unit_power(var, m);
  if (!unit) throw InternalError(std::string(what) +
                                 ": expected a unit times a power of z_n");
  return *unit;
}

}  // namespace

std::pair<BasicInvariants, ConstructionTrace> construct_hyperplane_invariants(
    const FieldSpec& f, const std::vector<Matrix>& stabilizer,
    const Hyperplane& h, const ConstructionOptions& options) {
  StabilizerDecomposition dec = stabilizer_decomposition(f, stabilizer, h);
  const std::size_t n = stabilizer[0].n;
  const std::size_t last = n - 1;

  // Adapted basis: hyperplane basis first, then a vector b_n off the
  // hyperplane with l_H(b_n) = 1 (the eigenvector of sigma when sigma is
  // not the identity). In these coordinates z_n is exactly l_H.
  std::vector<Vec> basis = hyperplane_basis(f, h);
  Vec bn;
  if (dec.sigma != Matrix::identity(f, n)) {
    bn = root_vector(f, dec.sigma, h);
  } else {
    std::size_t lead = 0;
    while (f.is_zero(h.form[lead])) ++lead;
    bn = Vec(n, f.zero());
    bn[lead] = f.one();
  }
  Scalar ln = dot(f, h.form, bn);
  if (f.is_zero(ln)) throw InternalError("adapted vector lies on hyperplane");
  bn = vec_scale(f, f.inv(ln), bn);
  basis.push_back(bn);

  Matrix b = Matrix::zero(f, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) b.at(i, j) = basis[j][i];
  Matrix b_inv = mat_inv(f, b);

  auto to_adapted = [&](const Matrix& g) {
    return mat_mul(f, mat_mul(f, b_inv, g), b);
  };
  Matrix sigma_ad = to_adapted(dec.sigma);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !f.is_zero(sigma_ad.at(i, j)))
        throw InternalError("sigma is not diagonal in the adapted basis");

  std::vector<std::size_t> order(dec.d);
  for (std::size_t i = 0; i < dec.d; ++i) order[i] = i;
  if (options.transvection_order) {
    order = *options.transvection_order;
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expect(dec.d);
    for (std::size_t i = 0; i < dec.d; ++i) expect[i] = i;
    if (sorted != expect)
      throw InputError("transvection order must be a permutation");
  }

  // Base case: coordinates and z_n^e are the basic invariants of <sigma>.
  std::vector<MultiPoly> fs;
  std::vector<std::uint64_t> degs;
  for (std::size_t i = 0; i < last; ++i) {
    fs.push_back(MultiPoly::variable(f, n, i));
    degs.push_back(1);
  }
  Expo elast(n, 0);
  elast[last] = static_cast<std::uint32_t>(dec.e);
  fs.push_back(MultiPoly::monomial(f, elast, f.one()));
  degs.push_back(dec.e);

  std::uint64_t m = dec.e - 1;
  require_unit_power(f, jacobian(f, fs), last, m, "base jacobian");

  ConstructionTrace trace;
  trace.basis_change = b;
  trace.base_jacobian_exponent = m;

  for (std::size_t step = 0; step < dec.d; ++step) {
    Matrix t = to_adapted(dec.T[order[step]]);

    // Displacements t f_i - f_i = b_i z_n^{d_i} for i < n.
    std::vector<Scalar> bs(last, f.zero());
    for (std::size_t i = 0; i < last; ++i) {
      MultiPoly delta = poly_sub(f, act(f, t, fs[i]), fs[i]);
      if (delta.is_zero()) continue;
      bs[i] = require_unit_power(f, delta, last, degs[i],
                                 "transvection displacement");
    }

    std::size_t pivot = last;
    for (std::size_t i = 0; i < last; ++i) {
      if (f.is_zero(bs[i])) continue;
      if (pivot == last || degs[i] < degs[pivot]) pivot = i;
    }
    if (pivot == last)
      throw InternalError("minimal transvection left every invariant fixed");

    TraceStep rec;
    rec.pivot = pivot;
    rec.pivot_before = fs[pivot];
    rec.b = bs;
    rec.c.assign(last, f.zero());

    // Correct the other non-invariant polynomials.
    for (std::size_t i = 0; i < last; ++i) {
      if (i == pivot || f.is_zero(bs[i])) continue;
      if (degs[i] % degs[pivot] != 0)
        throw InternalError("pivot degree does not divide a corrected degree");
      std::uint64_t ratio = degs[i] / degs[pivot];
      if (!is_p_power(ratio, f.p()) && ratio != 1)
        throw InternalError("degree ratio is not a p-power");
      Scalar ci = f.neg(f.mul(bs[i], f.inv(f.pow(bs[pivot], ratio))));
      rec.c[i] = ci;
      fs[i] = poly_add(f, fs[i],
                       poly_scale(f, ci, poly_pow(f, fs[pivot], ratio)));
      if (act(f, t, fs[i]) != fs[i])
        throw InternalError("corrected invariant is not fixed by t");
    }

    // Replace the pivot by its additive orbit product.
    std::vector<Scalar> a_set;
    {
      std::set<Scalar> set;
      for (const Scalar& lam : dec.subfield.elements)
        set.insert(f.mul(lam, bs[pivot]));
      a_set.assign(set.begin(), set.end());
    }
    rec.additive_set = a_set;
    Expo ue(n, 0);
    ue[last] = static_cast<std::uint32_t>(degs[pivot]);
    XPoly hx = orbit_additive_product(f, a_set, MultiPoly::monomial(f, ue, f.one()));
    fs[pivot] = compose_xpoly(f, hx, fs[pivot]);
    std::uint64_t old_deg = degs[pivot];
    degs[pivot] *= a_set.size();

    if (act(f, t, fs[pivot]) != fs[pivot])
      throw InternalError("orbit product is not fixed by t");
    if (act(f, sigma_ad, fs[pivot]) != fs[pivot])
      throw InternalError("orbit product is not fixed by sigma");

    m += old_deg * (a_set.size() - 1);
    require_unit_power(f, jacobian(f, fs), last, m, "step jacobian");
    rec.jacobian_exponent = m;
    rec.polys_after = fs;
    trace.steps.push_back(std::move(rec));
  }

  for (std::size_t i = 0; i < last; ++i)
    if (!is_p_power(degs[i], f.p()))
      throw InternalError("non-last invariant degree is not a p-power");

  // Return to the caller's coordinates.
  BasicInvariants out;
  for (const MultiPoly& poly : fs)
    out.polys.push_back(substitute(f, poly, b_inv));
  for (std::size_t i = 0; i < n; ++i) {
    if (out.polys[i].is_zero() || out.polys[i].degree() != degs[i])
      throw InternalError("constructed invariant degree mismatch");
    out.degrees.push_back(degs[i]);
  }

  VerifyReport report = verify_basic_invariants(f, stabilizer, out.polys);
  if (!report.pass)
    throw InternalError("constructed invariants failed verification");
  return {std::move(out), std::move(trace)};
}

void check_family_size(const FieldSpec& f, std::size_t n) {
  if (n == 0 || n > 3)
    throw InputError("builtin families support 1 <= n <= 3");
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= f.q();
  if (size > 512)
    throw InputError("size guard exceeded: q^n must be at most 512");
}

namespace {

// Moore-style determinant det(z_j^{q^{rows[i]}}).
MultiPoly moore_determinant(const FieldSpec& f, std::size_t n,
                            const std::vector<std::uint64_t>& rows) {
  std::vector<std::vector<MultiPoly>> m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::uint64_t e = 1;
    for (std::uint64_t t = 0; t < rows[i]; ++t) e *= f.q();
    for (std::size_t j = 0; j < n; ++j) {
      Expo expo(n, 0);
      expo[j] = static_cast<std::uint32_t>(e);
      m[i].push_back(MultiPoly::monomial(f, expo, f.one()));
    }
  }
  // cofactor expansion
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  struct Det {
    const FieldSpec& f;
    const std::vector<std::vector<MultiPoly>>& m;
    MultiPoly run(std::vector<std::size_t> cols, std::size_t row) {
      if (cols.size() == 1) return m[row][cols[0]];
      MultiPoly acc(m[0][0].n_vars());
      bool plus = true;
      for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        std::vector<std::size_t> rest;
        for (std::size_t j : cols)
          if (j != cols[idx]) rest.push_back(j);
        MultiPoly contrib = poly_mul(f, m[row][cols[idx]], run(rest, row + 1));
        acc = plus ? poly_add(f, acc, contrib) : poly_sub(f, acc, contrib);
        plus = !plus;
      }
      return acc;
    }
  } det{f, m};
  return det.run(cols, 0);
}

std::vector<Subspace> subspaces_of_dim(const FieldSpec& f, std::size_t n,
                                       std::size_t dim) {
  std::set<Subspace> out;
  if (dim == 0) {
    out.insert(Subspace{n, {}});
    return {out.begin(), out.end()};
  }
  // span of every dim-tuple of vectors; q^n is at most 512 here
  std::vector<Vec> all;
  std::vector<Scalar> elems = f.elements();
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Vec v(n, f.zero());
    for (std::size_t j = 0; j < n; ++j) v[j] = elems[idx[j]];
    if (!vec_is_zero(f, v)) all.push_back(v);
    std::size_t j = 0;
    while (j < n && ++idx[j] == elems.size()) idx[j++] = 0;
    if (j == n) break;
  }
  std::vector<std::size_t> pick(dim, 0);
  while (true) {
    std::vector<Vec> tuple;
    for (std::size_t j : pick) tuple.push_back(all[j]);
    std::vector<Vec> red = rref(f, tuple);
    if (red.size() == dim) out.insert(Subspace{n, red});
    std::size_t j = 0;
    while (j < dim && ++pick[j] == all.size()) pick[j++] = 0;
    if (j == dim) break;
  }
  return {out.begin(), out.end()};
}

}  // namespace

MultiPoly dickson_orbit_sum(const FieldSpec& f, std::size_t n, std::size_t i) {
  check_family_size(f, n);
  if (i >= n) throw InputError("dickson index out of range");
  // Nonzero covectors grouped into scalar classes: one normalized
  // representative each, entering the product with multiplicity q - 1.
  // This normalization per class is the one realized by the Moore
  // determinant quotients.
  std::vector<Hyperplane> classes = all_hyperplanes(f, n);
  MultiPoly sum(n);
  for (const Subspace& w : subspaces_of_dim(f, n, n - i)) {
    MultiPoly prod = MultiPoly::one(f, n);
    for (const Hyperplane& h : classes) {
      bool vanishes = true;
      for (const Vec& basis_vec : w.basis)
        if (!f.is_zero(dot(f, h.form, basis_vec))) {
          vanishes = false;
          break;
        }
      if (!vanishes)
        prod = poly_mul(
            f, prod, poly_pow(f, MultiPoly::linear_form(f, h.form), f.q() - 1));
    }
    sum = poly_add(f, sum, prod);
  }
  return sum;
}

std::vector<MultiPoly> dickson_invariants(const FieldSpec& f, std::size_t n) {
  check_family_size(f, n);
  std::vector<std::uint64_t> denom_rows;
  for (std::uint64_t r = 0; r < n; ++r) denom_rows.push_back(r);
  MultiPoly delta2 = moore_determinant(f, n, denom_rows);
  std::vector<MultiPoly> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::uint64_t> rows;
    for (std::uint64_t r = 0; r <= n; ++r)
      if (r != k) rows.push_back(r);
    MultiPoly delta1 = moore_determinant(f, n, rows);
    auto d = exact_divide(f, delta1, delta2);
    if (!d) throw InternalError("Moore determinant quotient is not exact");
    // degree q^n - q^k
    std::uint64_t expect = 1;
    for (std::size_t t = 0; t < n; ++t) expect *= f.q();
    std::uint64_t qk = 1;
    for (std::size_t t = 0; t < k; ++t) qk *= f.q();
    if (d->degree() != expect - qk)
      throw InternalError("Dickson invariant degree mismatch");
    out.push_back(std::move(*d));
  }
  // Independent cross-check at the smallest parameter triples.
  if ((n == 2 && (f.q() == 2 || f.q() == 3)) || (n == 3 && f.q() == 2)) {
    for (std::size_t k = 0; k < n; ++k)
      if (dickson_orbit_sum(f, n, k) != out[k])
        throw InternalError("Dickson determinant and orbit routes disagree");
  }
  return out;
}

MultiPoly q_form(const FieldSpec& f, std::size_t n) {
  check_family_size(f, n);
  MultiPoly prod = MultiPoly::one(f, n);
  for (const Hyperplane& h : all_hyperplanes(f, n))
    prod = poly_mul(f, prod, MultiPoly::linear_form(f, h.form));
  return prod;
}

std::vector<MultiPoly> sl_invariants(const FieldSpec& f, std::size_t n) {
  check_family_size(f, n);
  std::vector<MultiPoly> dickson = dickson_invariants(f, n);
  std::vector<MultiPoly> out;
  out.push_back(q_form(f, n));
  for (std::size_t i = 1; i < n; ++i) out.push_back(std::move(dickson[i]));
  return out;
}

}  // namespace refinv
