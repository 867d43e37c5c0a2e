#include "refinv/linalg.hpp"

#include <algorithm>

namespace refinv {

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  if (n == 0 || n > kMaxDim) throw InputError("dimension out of range");
  Matrix m{n, std::vector<Scalar>(n * n, f.zero())};
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::zero(const FieldSpec& f, std::size_t n) {
  if (n == 0 || n > kMaxDim) throw InputError("dimension out of range");
  return Matrix{n, std::vector<Scalar>(n * n, f.zero())};
}

Matrix mat_mul(const FieldSpec& f, const Matrix& x, const Matrix& y) {
  if (x.n != y.n) throw InputError("matrix dimension mismatch");
  Matrix r = Matrix::zero(f, x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t l = 0; l < x.n; ++l) {
      if (f.is_zero(x.at(i, l))) continue;
      for (std::size_t j = 0; j < x.n; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(x.at(i, l), y.at(l, j)));
    }
  return r;
}

Matrix mat_sub(const FieldSpec& f, const Matrix& x, const Matrix& y) {
  if (x.n != y.n) throw InputError("matrix dimension mismatch");
  Matrix r = x;
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = f.sub(x.a[i], y.a[i]);
  return r;
}

Vec mat_vec(const FieldSpec& f, const Matrix& m, const Vec& v) {
  if (v.size() != m.n) throw InputError("matrix/vector dimension mismatch");
  Vec r(m.n, f.zero());
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j)
      r[i] = f.add(r[i], f.mul(m.at(i, j), v[j]));
  return r;
}

Matrix transpose(const Matrix& m) {
  Matrix r = m;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

namespace {

// Gaussian elimination on an augmented array of rows; returns the rank of
// the left n columns and leaves rows in reduced echelon form.
std::size_t reduce(const FieldSpec& f, std::vector<Vec>& rows, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (!f.is_zero(rows[i][col])) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Scalar s = f.inv(rows[r][col]);
    for (auto& x : rows[r]) x = f.mul(s, x);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || f.is_zero(rows[i][col])) continue;
      Scalar c = rows[i][col];
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<Vec> rref(const FieldSpec& f, std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  std::size_t n = rows[0].size();
  std::size_t r = reduce(f, rows, n);
  rows.resize(r);
  return rows;
}

std::size_t rank(const FieldSpec& f, const std::vector<Vec>& rows) {
  return rref(f, rows).size();
}

Scalar det(const FieldSpec& f, const Matrix& m) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.n; ++i)
    rows.emplace_back(m.a.begin() + i * m.n, m.a.begin() + (i + 1) * m.n);
  Scalar d = f.one();
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.n; ++col) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (!f.is_zero(rows[i][col])) {
        piv = i;
        break;
      }
    if (piv == rows.size()) return f.zero();
    if (piv != r) {
      std::swap(rows[r], rows[piv]);
      d = f.neg(d);
    }
    d = f.mul(d, rows[r][col]);
    Scalar s = f.inv(rows[r][col]);
    for (auto& x : rows[r]) x = f.mul(s, x);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (f.is_zero(rows[i][col])) continue;
      Scalar c = rows[i][col];
      for (std::size_t j = col; j < m.n; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[r][j]));
    }
    ++r;
  }
  return d;
}

bool is_invertible(const FieldSpec& f, const Matrix& m) {
  return !f.is_zero(det(f, m));
}

Matrix mat_inv(const FieldSpec& f, const Matrix& m) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.n; ++i) {
    Vec row(m.a.begin() + i * m.n, m.a.begin() + (i + 1) * m.n);
    for (std::size_t j = 0; j < m.n; ++j)
      row.push_back(i == j ? f.one() : f.zero());
    rows.push_back(std::move(row));
  }
  std::size_t r = reduce(f, rows, m.n);
  if (r != m.n) throw InputError("matrix is singular");
  Matrix inv = Matrix::zero(f, m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) inv.at(i, j) = rows[i][m.n + j];
  return inv;
}

Matrix change_of_basis(const FieldSpec& f, const Matrix& m,
                       const std::vector<Vec>& basis) {
  if (basis.size() != m.n) throw InputError("basis size mismatch");
  Matrix b = Matrix::zero(f, m.n);
  for (std::size_t j = 0; j < m.n; ++j) {
    if (basis[j].size() != m.n) throw InputError("basis vector length mismatch");
    for (std::size_t i = 0; i < m.n; ++i) b.at(i, j) = basis[j][i];
  }
  return mat_mul(f, mat_mul(f, mat_inv(f, b), m), b);
}

Subspace kernel_of_rows(const FieldSpec& f, const std::vector<Vec>& rows,
                        std::size_t n) {
  std::vector<Vec> red = rref(f, rows);
  std::vector<std::size_t> pivot_cols;
  for (const Vec& row : red) {
    for (std::size_t j = 0; j < n; ++j)
      if (!f.is_zero(row[j])) {
        pivot_cols.push_back(j);
        break;
      }
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t j : pivot_cols) is_pivot[j] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < red.size(); ++r)
      v[pivot_cols[r]] = f.neg(red[r][free]);
    basis.push_back(std::move(v));
  }
  return Subspace{n, rref(f, basis)};
}

Subspace kernel(const FieldSpec& f, const Matrix& m) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.n; ++i)
    rows.emplace_back(m.a.begin() + i * m.n, m.a.begin() + (i + 1) * m.n);
  return kernel_of_rows(f, rows, m.n);
}

Vec vec_add(const FieldSpec& f, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw InputError("vector dimension mismatch");
  Vec r = x;
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.add(x[i], y[i]);
  return r;
}

Vec vec_sub(const FieldSpec& f, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw InputError("vector dimension mismatch");
  Vec r = x;
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.sub(x[i], y[i]);
  return r;
}

Vec vec_scale(const FieldSpec& f, const Scalar& c, const Vec& x) {
  Vec r = x;
  for (auto& v : r) v = f.mul(c, v);
  return r;
}

Scalar dot(const FieldSpec& f, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw InputError("vector dimension mismatch");
  Scalar s = f.zero();
  for (std::size_t i = 0; i < x.size(); ++i)
    s = f.add(s, f.mul(x[i], y[i]));
  return s;
}

bool vec_is_zero(const FieldSpec& f, const Vec& x) {
  return std::all_of(x.begin(), x.end(),
                     [&](const Scalar& s) { return f.is_zero(s); });
}

namespace {

// F_p elimination helpers for the flattening basis construction.
std::size_t fp_rank(std::vector<std::vector<Coeff>> rows, Coeff p) {
  std::size_t n = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    // normalize + eliminate below
    Coeff lead = rows[r][col], e = p - 2, inv = 1, base = lead;
    while (e) {
      if (e & 1) inv = static_cast<Coeff>((std::uint64_t)inv * base % p);
      base = static_cast<Coeff>((std::uint64_t)base * base % p);
      e >>= 1;
    }
    for (auto& x : rows[r]) x = static_cast<Coeff>((std::uint64_t)x * inv % p);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      Coeff c = rows[i][col];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t sub = (std::uint64_t)c * rows[r][j] % p;
        rows[i][j] = static_cast<Coeff>((rows[i][j] + p - sub) % p);
      }
    }
    ++r;
  }
  return r;
}

// Solves M t = rhs over F_p for square M given as columns; M is invertible.
std::vector<Coeff> fp_solve(const std::vector<std::vector<Coeff>>& cols,
                            std::vector<Coeff> rhs, Coeff p) {
  std::size_t n = cols.size();
  std::vector<std::vector<Coeff>> rows(n, std::vector<Coeff>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = cols[j][i];
    rows[i][n] = rhs[i];
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < n; ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) throw InternalError("singular flattening basis");
    std::swap(rows[r], rows[piv]);
    Coeff lead = rows[r][col], e = p - 2, inv = 1, base = lead;
    while (e) {
      if (e & 1) inv = static_cast<Coeff>((std::uint64_t)inv * base % p);
      base = static_cast<Coeff>((std::uint64_t)base * base % p);
      e >>= 1;
    }
    for (auto& x : rows[r]) x = static_cast<Coeff>((std::uint64_t)x * inv % p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Coeff c = rows[i][col];
      for (std::size_t j = 0; j <= n; ++j) {
        std::uint64_t sub = (std::uint64_t)c * rows[r][j] % p;
        rows[i][j] = static_cast<Coeff>((rows[i][j] + p - sub) % p);
      }
    }
    ++r;
  }
  std::vector<Coeff> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = rows[i][n];
  return t;
}

}  // namespace

std::size_t subfield_span_dim(const FieldSpec& f,
                              const std::vector<Vec>& vectors,
                              const Subfield& sub) {
  if (vectors.empty()) return 0;
  const std::size_t k = f.k();
  const std::size_t d = sub.degree;
  if (k % d != 0) throw InputError("not a subfield of the ambient field");
  const std::size_t m = k / d;

  // Subfield power block: 1, w, ..., w^{d-1}.
  std::vector<Scalar> wpow;
  Scalar acc = f.one();
  for (std::size_t i = 0; i < d; ++i) {
    wpow.push_back(acc);
    acc = f.mul(acc, sub.generator);
  }

  // Greedily extend by field power-basis elements e so that the combined
  // set {w^i * e} stays F_p-independent; each accepted block contributes
  // exactly [sub : F_p] columns.
  std::vector<Scalar> beta;
  std::vector<std::vector<Coeff>> cols;  // F_p coordinates, one per element
  Scalar power_basis = f.one();
  Scalar x = f.k() > 1 ? f.element(f.p()) : f.one();  // class of x
  for (std::size_t t = 0; t < k && cols.size() < k; ++t) {
    std::vector<std::vector<Coeff>> trial = cols;
    for (std::size_t i = 0; i < d; ++i) {
      Scalar e = f.mul(wpow[i], power_basis);
      trial.push_back(std::vector<Coeff>(e.coeffs.begin(), e.coeffs.end()));
    }
    std::size_t r = fp_rank(trial, f.p());
    if (r == trial.size()) {
      beta.push_back(power_basis);
      cols = std::move(trial);
    }
    power_basis = f.mul(power_basis, x);
  }
  if (cols.size() != k) throw InternalError("flattening basis incomplete");

  // Flatten each F_q coordinate into m subfield coordinates.
  const std::size_t n = vectors[0].size();
  std::vector<Vec> flat;
  for (const Vec& v : vectors) {
    if (v.size() != n) throw InputError("vector dimension mismatch");
    Vec row;
    row.reserve(n * m);
    for (const Scalar& c : v) {
      std::vector<Coeff> rhs(c.coeffs.begin(), c.coeffs.end());
      std::vector<Coeff> t = fp_solve(cols, rhs, f.p());
      for (std::size_t j = 0; j < m; ++j) {
        Scalar s = f.zero();
        for (std::size_t i = 0; i < d; ++i)
          if (t[j * d + i] != 0)
            s = f.add(s, f.mul(f.from_int(t[j * d + i]), wpow[i]));
        row.push_back(s);
      }
    }
    flat.push_back(std::move(row));
  }
  // All entries now lie in the subfield; ordinary elimination stays inside
  // it because the subfield is closed under field operations.
  return rank(f, flat);
}

}  // namespace refinv
