#include "refinv/fixtures.hpp"

#include <algorithm>

namespace refinv {

namespace {

Matrix elementary_transvection(const FieldSpec& f, std::size_t n,
                               std::size_t i, std::size_t j,
                               const Scalar& c) {
  Matrix m = Matrix::identity(f, n);
  m.at(i, j) = c;
  return m;
}

std::vector<Scalar> power_basis(const FieldSpec& f) {
  std::vector<Scalar> out;
  Scalar acc = f.one();
  Scalar x = f.k() > 1 ? f.element(f.p()) : f.one();
  for (std::size_t t = 0; t < f.k(); ++t) {
    out.push_back(acc);
    acc = f.mul(acc, x);
  }
  return out;
}

std::uint64_t gl_order(std::size_t n, std::uint64_t q) {
  std::uint64_t qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  std::uint64_t order = 1, qi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Fixture fixture_gl(std::size_t n, std::uint64_t q) {
  FieldSpec f = FieldSpec::builtin(q);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const Scalar& c : power_basis(f))
        gens.push_back(elementary_transvection(f, n, i, j, c));
    }
  if (q > 2) {
    Matrix d = Matrix::identity(f, n);
    d.at(0, 0) = f.primitive_element();
    gens.push_back(d);
  }
  if (n == 1) {
    gens.clear();
    Matrix d = Matrix::identity(f, 1);
    d.at(0, 0) = f.primitive_element();
    gens.push_back(d);
  }
  return Fixture{"gl(" + std::to_string(n) + "," + std::to_string(q) + ")",
                 Fixture::Family::GL, n,
                 GroupSpec(std::move(f), n, std::move(gens)), gl_order(n, q)};
}

Fixture fixture_sl(std::size_t n, std::uint64_t q) {
  if (n < 2) throw InputError("sl fixture requires n >= 2");
  FieldSpec f = FieldSpec::builtin(q);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const Scalar& c : power_basis(f))
        gens.push_back(elementary_transvection(f, n, i, j, c));
    }
  return Fixture{"sl(" + std::to_string(n) + "," + std::to_string(q) + ")",
                 Fixture::Family::SL, n,
                 GroupSpec(std::move(f), n, std::move(gens)),
                 gl_order(n, q) / (q - 1)};
}

Fixture fixture_glstab(std::size_t n, std::uint64_t q) {
  if (n < 2) throw InputError("glstab fixture requires n >= 2");
  FieldSpec f = FieldSpec::builtin(q);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (const Scalar& c : power_basis(f))
      gens.push_back(elementary_transvection(f, n, i, n - 1, c));
  if (q > 2) {
    Matrix d = Matrix::identity(f, n);
    d.at(n - 1, n - 1) = f.primitive_element();
    gens.push_back(d);
  }
  return Fixture{"glstab(" + std::to_string(n) + "," + std::to_string(q) + ")",
                 Fixture::Family::GLStab, n,
                 GroupSpec(std::move(f), n, std::move(gens)),
                 ipow(q, n - 1) * (q - 1)};
}

Fixture fixture_slstab(std::size_t n, std::uint64_t q) {
  if (n < 2) throw InputError("slstab fixture requires n >= 2");
  FieldSpec f = FieldSpec::builtin(q);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (const Scalar& c : power_basis(f))
      gens.push_back(elementary_transvection(f, n, i, n - 1, c));
  return Fixture{"slstab(" + std::to_string(n) + "," + std::to_string(q) + ")",
                 Fixture::Family::SLStab, n,
                 GroupSpec(std::move(f), n, std::move(gens)), ipow(q, n - 1)};
}

Fixture fixture_example41(std::uint64_t q) {
  FieldSpec f = FieldSpec::builtin(q);
  if (f.k() < 2)
    throw InputError("example41 requires a proper extension field");
  Scalar c = f.element(f.p());  // the class of x generates F_q over F_p
  Matrix a = elementary_transvection(f, 3, 0, 2, f.one());
  Matrix b = elementary_transvection(f, 3, 1, 2, f.one());
  Matrix cc = Matrix::identity(f, 3);
  cc.at(0, 2) = c;
  cc.at(1, 2) = c;
  return Fixture{"example41(" + std::to_string(q) + ")",
                 Fixture::Family::Example41, 3,
                 GroupSpec(std::move(f), 3, {a, b, cc}),
                 ipow(f.p(), 3)};
}

Fixture fixture_cyclic(std::uint64_t q) {
  if (q < 3) throw InputError("cyclic fixture requires q >= 3");
  FieldSpec f = FieldSpec::builtin(q);
  Matrix d = Matrix::identity(f, 2);
  d.at(1, 1) = f.primitive_element();
  return Fixture{"cyclic(" + std::to_string(q) + ")",
                 Fixture::Family::Cyclic, 2,
                 GroupSpec(std::move(f), 2, {d}), q - 1};
}

Fixture fixture_by_name(const std::string& name,
                        const std::vector<std::uint64_t>& args) {
  auto need = [&](std::size_t count) {
    if (args.size() != count)
      throw InputError("fixture '" + name + "' expects " +
                       std::to_string(count) + " argument(s)");
  };
  if (name == "gl") {
    need(2);
    return fixture_gl(args[0], args[1]);
  }
  if (name == "sl") {
    need(2);
    return fixture_sl(args[0], args[1]);
  }
  if (name == "glstab") {
    need(2);
    return fixture_glstab(args[0], args[1]);
  }
  if (name == "slstab") {
    need(2);
    return fixture_slstab(args[0], args[1]);
  }
  if (name == "example41") {
    need(1);
    return fixture_example41(args[0]);
  }
  if (name == "cyclic") {
    need(1);
    return fixture_cyclic(args[0]);
  }
  throw InputError("unknown builtin fixture '" + name + "'");
}

std::vector<std::string> fixture_catalog() {
  return {
      "gl N Q         general linear group GL_N(F_Q)",
      "sl N Q         special linear group SL_N(F_Q)",
      "glstab N Q     pointwise stabilizer of a hyperplane in GL_N(F_Q)",
      "slstab N Q     transvection stabilizer of a hyperplane (SL_N(F_Q))",
      "example41 Q    three-transvection group over F_Q (Q a prime power, "
      "not prime)",
      "cyclic Q       cyclic group generated by diag(1, g), g primitive",
  };
}

BasicInvariants fixture_invariants(const Fixture& fixture,
                                   const std::vector<Matrix>& elements) {
  const FieldSpec& f = fixture.spec.field;
  BasicInvariants out;
  switch (fixture.family) {
    case Fixture::Family::GL:
      out.polys = dickson_invariants(f, fixture.n);
      break;
    case Fixture::Family::SL:
      out.polys = sl_invariants(f, fixture.n);
      break;
    default: {
      auto h = common_fixed_hyperplane(f, elements);
      if (!h)
        throw InputError("fixture does not fix a hyperplane pointwise");
      return construct_hyperplane_invariants(f, elements, *h).first;
    }
  }
  for (const MultiPoly& p : out.polys) out.degrees.push_back(p.degree());
  return out;
}

std::vector<MultiPoly> example41_printed_invariants(const FieldSpec& f) {
  if (f.k() < 2)
    throw InputError("example41 requires a proper extension field");
  const std::size_t n = 3;
  const Coeff p = f.p();
  Scalar c = f.element(p);
  Scalar cp1 = f.pow(c, p - 1);

  MultiPoly z1 = MultiPoly::variable(f, n, 0);
  MultiPoly z2 = MultiPoly::variable(f, n, 1);
  MultiPoly z3 = MultiPoly::variable(f, n, 2);

  // u = z1^p - z1 z3^{p-1}
  MultiPoly u = poly_sub(f, poly_pow(f, z1, p),
                         poly_mul(f, z1, poly_pow(f, z3, p - 1)));
  // f1 = u^p - [c(1 - c^{p-1})]^{p-1} u z3^{p(p-1)}; at p = 2 the
  // coefficient reduces to the published c(1 + c)
  Scalar coeff = f.pow(f.mul(c, f.sub(f.one(), cp1)), p - 1);
  MultiPoly f1 = poly_sub(
      f, poly_pow(f, u, p),
      poly_scale(f, coeff,
                 poly_mul(f, u, poly_pow(f, z3, (std::uint64_t)p * (p - 1)))));
  // f2 = (z2^p - z2 z3^{p-1}) - u   (the b/a coefficient is 1 at a = b = 1)
  MultiPoly f2 = poly_sub(f,
                          poly_sub(f, poly_pow(f, z2, p),
                                   poly_mul(f, z2, poly_pow(f, z3, p - 1))),
                          u);
  return {f1, f2, z3};
}

}  // namespace refinv
