#include "refinv/mpoly.hpp"

#include <algorithm>
#include <set>

namespace refinv {

MultiPoly MultiPoly::constant(const FieldSpec& f, std::size_t n_vars,
                              const Scalar& c) {
  MultiPoly p(n_vars);
  p.add_term(f, Expo(n_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::one(const FieldSpec& f, std::size_t n_vars) {
  return constant(f, n_vars, f.one());
}

MultiPoly MultiPoly::variable(const FieldSpec& f, std::size_t n_vars,
                              std::size_t j) {
  if (j >= n_vars) throw InputError("variable index out of range");
  Expo e(n_vars, 0);
  e[j] = 1;
  return monomial(f, std::move(e), f.one());
}

MultiPoly MultiPoly::monomial(const FieldSpec& f, Expo e, const Scalar& c) {
  MultiPoly p(e.size());
  p.add_term(f, e, c);
  return p;
}

MultiPoly MultiPoly::linear_form(const FieldSpec& f, const Vec& form) {
  MultiPoly p(form.size());
  for (std::size_t j = 0; j < form.size(); ++j) {
    Expo e(form.size(), 0);
    e[j] = 1;
    p.add_term(f, e, form[j]);
  }
  return p;
}

std::uint64_t MultiPoly::degree() const {
  if (terms_.empty())
    throw InputError("degree of the zero polynomial is undefined");
  return expo_degree(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint64_t d = expo_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (expo_degree(e) != d) return false;
  return true;
}

std::optional<Scalar> MultiPoly::as_unit_power(std::size_t var,
                                               std::uint64_t m) const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  for (std::size_t j = 0; j < n_vars_; ++j)
    if (e[j] != (j == var ? m : 0)) return std::nullopt;
  return c;
}

std::optional<Scalar> MultiPoly::constant_value(const FieldSpec& f) const {
  if (terms_.empty()) return f.zero();
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (expo_degree(e) != 0) return std::nullopt;
  return c;
}

void MultiPoly::add_term(const FieldSpec& f, const Expo& e, const Scalar& c) {
  if (e.size() != n_vars_) throw InputError("exponent vector length mismatch");
  if (f.is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  Scalar s = f.add(it->second, c);
  if (f.is_zero(s))
    terms_.erase(it);
  else
    it->second = s;
}

MultiPoly poly_add(const FieldSpec& f, const MultiPoly& a, const MultiPoly& b) {
  if (a.n_vars() != b.n_vars()) throw InputError("polynomial arity mismatch");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(f, e, c);
  return r;
}

MultiPoly poly_sub(const FieldSpec& f, const MultiPoly& a, const MultiPoly& b) {
  if (a.n_vars() != b.n_vars()) throw InputError("polynomial arity mismatch");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(f, e, f.neg(c));
  return r;
}

MultiPoly poly_neg(const FieldSpec& f, const MultiPoly& a) {
  return poly_sub(f, MultiPoly::zero(a.n_vars()), a);
}

MultiPoly poly_mul(const FieldSpec& f, const MultiPoly& a, const MultiPoly& b) {
  if (a.n_vars() != b.n_vars()) throw InputError("polynomial arity mismatch");
  MultiPoly r(a.n_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Expo e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(f, e, f.mul(ca, cb));
    }
  }
  return r;
}

MultiPoly poly_scale(const FieldSpec& f, const Scalar& c, const MultiPoly& a) {
  MultiPoly r(a.n_vars());
  for (const auto& [e, coeff] : a.terms()) r.add_term(f, e, f.mul(c, coeff));
  return r;
}

MultiPoly poly_pow(const FieldSpec& f, const MultiPoly& a, std::uint64_t e) {
  MultiPoly acc = MultiPoly::one(f, a.n_vars());
  MultiPoly base = a;
  while (e) {
    if (e & 1) acc = poly_mul(f, acc, base);
    e >>= 1;
    if (e) base = poly_mul(f, base, base);
  }
  return acc;
}

MultiPoly derivative(const FieldSpec& f, const MultiPoly& a, std::size_t var) {
  if (var >= a.n_vars()) throw InputError("variable index out of range");
  MultiPoly r(a.n_vars());
  for (const auto& [e, c] : a.terms()) {
    if (e[var] == 0) continue;
    Scalar nc = f.mul(c, f.from_int(static_cast<std::int64_t>(e[var])));
    if (f.is_zero(nc)) continue;
    Expo ne = e;
    --ne[var];
    r.add_term(f, ne, nc);
  }
  return r;
}

MultiPoly substitute(const FieldSpec& f, const MultiPoly& a, const Matrix& m) {
  if (m.n != a.n_vars()) throw InputError("substitution dimension mismatch");
  const std::size_t n = a.n_vars();
  // image of variable j is row j of m dotted with the variables
  std::vector<MultiPoly> images;
  for (std::size_t j = 0; j < n; ++j) {
    Vec row(m.a.begin() + j * n, m.a.begin() + (j + 1) * n);
    images.push_back(MultiPoly::linear_form(f, row));
  }
  // memoized powers of each image
  std::vector<std::map<std::uint32_t, MultiPoly>> powers(n);
  auto image_pow = [&](std::size_t j, std::uint32_t e) -> const MultiPoly& {
    auto it = powers[j].find(e);
    if (it != powers[j].end()) return it->second;
    MultiPoly p = poly_pow(f, images[j], e);
    return powers[j].emplace(e, std::move(p)).first->second;
  };
  MultiPoly r(n);
  for (const auto& [e, c] : a.terms()) {
    MultiPoly term = MultiPoly::constant(f, n, c);
    for (std::size_t j = 0; j < n; ++j)
      if (e[j] != 0) term = poly_mul(f, term, image_pow(j, e[j]));
    r = poly_add(f, r, term);
  }
  return r;
}

MultiPoly act(const FieldSpec& f, const Matrix& g, const MultiPoly& a) {
  return substitute(f, a, mat_inv(f, g));
}

namespace {

MultiPoly poly_det(const FieldSpec& f,
                   const std::vector<std::vector<MultiPoly>>& m,
                   std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n_vars = m[0][0].n_vars();
  if (cols.size() == 1)
    return m[row][cols[0]];
  MultiPoly acc(n_vars);
  bool plus = true;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    std::size_t col = cols[idx];
    if (!m[row][col].is_zero()) {
      std::vector<std::size_t> rest;
      for (std::size_t j : cols)
        if (j != col) rest.push_back(j);
      MultiPoly minor = poly_det(f, m, rest, row + 1);
      MultiPoly contrib = poly_mul(f, m[row][col], minor);
      acc = plus ? poly_add(f, acc, contrib) : poly_sub(f, acc, contrib);
    }
    plus = !plus;
  }
  return acc;
}

}  // namespace

MultiPoly jacobian(const FieldSpec& f, const std::vector<MultiPoly>& fs) {
  if (fs.empty()) throw InputError("jacobian of empty list");
  const std::size_t n = fs[0].n_vars();
  if (fs.size() != n)
    throw InputError("jacobian requires as many polynomials as variables");
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>());
  for (std::size_t i = 0; i < n; ++i) {
    if (fs[i].n_vars() != n) throw InputError("polynomial arity mismatch");
    for (std::size_t j = 0; j < n; ++j)
      m[i].push_back(derivative(f, fs[i], j));
  }
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  return poly_det(f, m, cols, 0);
}

namespace {

bool expo_divides(const Expo& a, const Expo& b) {  // a | b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::optional<MultiPoly> leading_term_divide(const FieldSpec& f,
                                             const MultiPoly& a,
                                             const MultiPoly& b) {
  MultiPoly rem = a;
  MultiPoly quot(a.n_vars());
  const auto& [lb, cb] = *b.terms().begin();
  Scalar cb_inv = f.inv(cb);
  while (!rem.is_zero()) {
    const auto& [lr, cr] = *rem.terms().begin();
    // If the divisor's leading term no longer divides the remainder's,
    // nothing further can cancel it: b does not divide a.
    if (!expo_divides(lb, lr)) return std::nullopt;
    Expo qe = lr;
    for (std::size_t i = 0; i < qe.size(); ++i) qe[i] -= lb[i];
    Scalar qc = f.mul(cr, cb_inv);
    quot.add_term(f, qe, qc);
    rem = poly_sub(f, rem, poly_mul(f, MultiPoly::monomial(f, qe, qc), b));
  }
  return quot;
}

// Invertible matrix whose bottom row is the given covector; substitution by
// its inverse sends the linear form to z_n. The remaining rows are standard
// covectors chosen greedily to complete the basis.
Matrix completion_matrix(const FieldSpec& f, const Vec& form) {
  const std::size_t n = form.size();
  if (vec_is_zero(f, form)) throw InputError("linear form must be nonzero");
  std::vector<Vec> rows = {form};
  for (std::size_t j = 0; j < n && rows.size() < n; ++j) {
    Vec ej(n, f.zero());
    ej[j] = f.one();
    std::vector<Vec> trial = rows;
    trial.push_back(ej);
    if (rank(f, trial) == trial.size()) rows.push_back(std::move(ej));
  }
  if (rows.size() != n) throw InternalError("covector completion failed");
  Matrix d = Matrix::zero(f, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.at(i, j) = rows[i + 1][j];
  for (std::size_t j = 0; j < n; ++j) d.at(n - 1, j) = form[j];
  return d;
}

}  // namespace

std::optional<MultiPoly> divide_by_linear_power(const FieldSpec& f,
                                                const MultiPoly& a,
                                                const Vec& form,
                                                std::uint64_t m) {
  const std::size_t n = a.n_vars();
  if (form.size() != n) throw InputError("covector dimension mismatch");
  if (m == 0) return a;
  if (a.is_zero()) return a;
  Matrix d = completion_matrix(f, form);
  Matrix c = mat_inv(f, d);
  MultiPoly moved = substitute(f, a, c);
  MultiPoly shifted(n);
  for (const auto& [e, coeff] : moved.terms()) {
    if (e[n - 1] < m) return std::nullopt;
    Expo ne = e;
    ne[n - 1] -= static_cast<std::uint32_t>(m);
    shifted.add_term(f, ne, coeff);
  }
  return substitute(f, shifted, d);
}

std::optional<MultiPoly> exact_divide(const FieldSpec& f, const MultiPoly& a,
                                      const MultiPoly& b) {
  if (a.n_vars() != b.n_vars()) throw InputError("polynomial arity mismatch");
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  if (a.is_zero()) return a;
  if (b.is_homogeneous() && b.degree() == 1) {
    Vec form(a.n_vars(), f.zero());
    for (const auto& [e, c] : b.terms())
      for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] == 1) form[j] = c;
    return divide_by_linear_power(f, a, form, 1);
  }
  return leading_term_divide(f, a, b);
}

bool is_additive(const FieldSpec& f, const MultiPoly& a,
                 const std::vector<std::size_t>& active_vars) {
  auto is_p_power = [&](std::uint64_t e) {
    if (e == 0) return false;
    while (e % f.p() == 0) e /= f.p();
    return e == 1;
  };
  for (const auto& [e, c] : a.terms()) {
    std::size_t active_count = 0;
    std::uint64_t active_exp = 0;
    for (std::size_t v : active_vars) {
      if (v >= e.size()) throw InputError("active variable out of range");
      if (e[v] != 0) {
        ++active_count;
        active_exp = e[v];
      }
    }
    if (active_count != 1) return false;
    if (!is_p_power(active_exp)) return false;
  }
  return true;
}

MultiPoly XPoly::to_extended_poly(const FieldSpec& f) const {
  MultiPoly r(n_vars + 1);
  for (const auto& [xdeg, coeff] : coeffs) {
    for (const auto& [e, c] : coeff.terms()) {
      Expo ne = e;
      ne.push_back(static_cast<std::uint32_t>(xdeg));
      r.add_term(f, ne, c);
    }
  }
  return r;
}

XPoly orbit_additive_product(const FieldSpec& f, const std::vector<Scalar>& A,
                             const MultiPoly& u) {
  if (!u.is_monomial())
    throw InputError("orbit_additive_product expects a monomial");
  std::set<Scalar> set(A.begin(), A.end());
  if (set.size() != A.size())
    throw InputError("additive set contains duplicates");
  if (!set.count(f.zero()))
    throw InputError("additive set must contain zero");
  for (const Scalar& x : A)
    for (const Scalar& y : A)
      if (!set.count(f.add(x, y)))
        throw InputError("set is not closed under addition");

  const std::size_t n = u.n_vars();
  XPoly h;
  h.n_vars = n;
  h.coeffs[0] = MultiPoly::one(f, n);
  for (const Scalar& a : A) {
    XPoly next;
    next.n_vars = n;
    MultiPoly au = poly_scale(f, a, u);
    for (const auto& [xdeg, coeff] : h.coeffs) {
      // * X
      auto itx = next.coeffs.find(xdeg + 1);
      if (itx == next.coeffs.end())
        next.coeffs.emplace(xdeg + 1, coeff);
      else
        itx->second = poly_add(f, itx->second, coeff);
      // * a*u
      if (!au.is_zero()) {
        MultiPoly prod = poly_mul(f, coeff, au);
        auto itc = next.coeffs.find(xdeg);
        if (itc == next.coeffs.end())
          next.coeffs.emplace(xdeg, std::move(prod));
        else
          itc->second = poly_add(f, itc->second, prod);
      }
    }
    for (auto it = next.coeffs.begin(); it != next.coeffs.end();)
      it = it->second.is_zero() ? next.coeffs.erase(it) : std::next(it);
    h = std::move(next);
  }
  // The product over an additive subgroup is an additive polynomial in X,
  // so only p-power exponents survive.
  for (const auto& [xdeg, coeff] : h.coeffs) {
    std::uint64_t e = xdeg;
    if (e == 0) throw InternalError("orbit product has a constant X-term");
    while (e % f.p() == 0) e /= f.p();
    if (e != 1)
      throw InternalError("orbit product has a non-p-power X-exponent");
  }
  return h;
}

MultiPoly compose_xpoly(const FieldSpec& f, const XPoly& h,
                        const MultiPoly& value) {
  MultiPoly r(h.n_vars);
  std::map<std::uint64_t, MultiPoly> powers;
  powers[0] = MultiPoly::one(f, h.n_vars);
  for (const auto& [xdeg, coeff] : h.coeffs) {
    auto it = powers.find(xdeg);
    if (it == powers.end())
      it = powers.emplace(xdeg, poly_pow(f, value, xdeg)).first;
    r = poly_add(f, r, poly_mul(f, coeff, it->second));
  }
  return r;
}

std::string poly_to_string(const FieldSpec& f, const MultiPoly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    if (!first) s += " + ";
    first = false;
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "z" + std::to_string(j + 1);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    bool coeff_is_one = f.is_one(c);
    if (mono.empty()) {
      s += f.to_string(c);
    } else if (coeff_is_one) {
      s += mono;
    } else {
      s += f.to_string(c) + "*" + mono;
    }
  }
  return s;
}

}  // namespace refinv
