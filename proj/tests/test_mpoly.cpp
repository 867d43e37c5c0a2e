#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "refinv/fixtures.hpp"
#include "refinv/mpoly.hpp"

using namespace refinv;

namespace {

Matrix from_ints(const FieldSpec& f, std::size_t n,
                 const std::vector<std::vector<int>>& rows) {
  Matrix m = Matrix::zero(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = f.from_int(rows[i][j]);
  return m;
}

MultiPoly random_poly(const FieldSpec& f, std::size_t n, std::mt19937& rng,
                      int terms, std::uint32_t max_exp) {
  std::uniform_int_distribution<std::uint64_t> cdist(1, f.q() - 1);
  std::uniform_int_distribution<std::uint32_t> edist(0, max_exp);
  MultiPoly p(n);
  for (int t = 0; t < terms; ++t) {
    Expo e(n);
    for (auto& x : e) x = edist(rng);
    p.add_term(f, e, f.element(cdist(rng)));
  }
  return p;
}

// All additive subgroups (F_p-subspaces) of F_q, as sorted element lists.
std::vector<std::vector<Scalar>> additive_subgroups(const FieldSpec& f) {
  std::vector<Scalar> elems = f.elements();
  std::set<std::vector<Scalar>> spans;
  std::vector<std::vector<Scalar>> gens_stack = {{}};
  for (std::size_t size = 0; size <= f.k(); ++size) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& gens : gens_stack) {
      std::set<Scalar> span = {f.zero()};
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Scalar> cur(span.begin(), span.end());
        for (const Scalar& a : cur)
          for (const Scalar& g : gens)
            if (span.insert(f.add(a, g)).second) grew = true;
      }
      spans.insert(std::vector<Scalar>(span.begin(), span.end()));
      if (gens.size() < f.k())
        for (const Scalar& e : elems) {
          auto g2 = gens;
          g2.push_back(e);
          next.push_back(std::move(g2));
        }
    }
    gens_stack = std::move(next);
  }
  return {spans.begin(), spans.end()};
}

}  // namespace

TEST_CASE("action basics") {
  FieldSpec f2 = FieldSpec::builtin(2);
  MultiPoly z1 = MultiPoly::variable(f2, 2, 0);
  MultiPoly z2 = MultiPoly::variable(f2, 2, 1);
  MultiPoly fpoly = poly_add(f2, poly_mul(f2, z1, z1), poly_mul(f2, z1, z2));

  CHECK(act(f2, Matrix::identity(f2, 2), fpoly) == fpoly);

  Matrix swap = from_ints(f2, 2, {{0, 1}, {1, 0}});
  CHECK(act(f2, swap, z1) == z2);

  // convention pin: z_1^2 + z_1 z_2 is fixed by the transvection whose
  // matrix sends e_2 to e_1 + e_2, and moved by the transposed matrix
  Matrix t = from_ints(f2, 2, {{1, 1}, {0, 1}});
  CHECK(act(f2, t, fpoly) == fpoly);
  CHECK(act(f2, transpose(t), fpoly) != fpoly);
}

TEST_CASE("action is a left group action") {
  for (int which : {0, 1}) {
    Fixture fx = which == 0 ? fixture_gl(2, 2) : fixture_sl(2, 3);
    const FieldSpec& f = fx.spec.field;
    std::vector<Matrix> elements = enumerate_group(fx.spec);
    std::vector<MultiPoly> monomials;
    for (std::size_t j = 0; j < 2; ++j)
      monomials.push_back(MultiPoly::variable(f, 2, j));
    monomials.push_back(
        poly_mul(f, monomials[0], poly_mul(f, monomials[1], monomials[1])));
    for (const Matrix& g : elements)
      for (const Matrix& h : elements)
        for (const MultiPoly& m : monomials)
          CHECK(act(f, g, act(f, h, m)) == act(f, mat_mul(f, g, h), m));
  }
}

TEST_CASE("jacobian of coordinates and p-th powers") {
  FieldSpec f3 = FieldSpec::builtin(3);
  std::vector<MultiPoly> coords;
  for (std::size_t j = 0; j < 3; ++j)
    coords.push_back(MultiPoly::variable(f3, 3, j));
  CHECK(jacobian(f3, coords) == MultiPoly::one(f3, 3));

  // d/dz of z^p vanishes
  std::vector<MultiPoly> fs = {poly_pow(f3, MultiPoly::variable(f3, 2, 0), 3),
                               MultiPoly::variable(f3, 2, 1)};
  CHECK(jacobian(f3, fs).is_zero());
}

TEST_CASE("jacobian of the two-variable Dickson system") {
  FieldSpec f = FieldSpec::builtin(2);
  MultiPoly z1 = MultiPoly::variable(f, 2, 0);
  MultiPoly z2 = MultiPoly::variable(f, 2, 1);
  // d_{2,0} = z1^2 z2 + z1 z2^2, d_{2,1} = z1^2 + z1 z2 + z2^2
  MultiPoly d0 = poly_add(f, poly_mul(f, poly_mul(f, z1, z1), z2),
                          poly_mul(f, z1, poly_mul(f, z2, z2)));
  MultiPoly d1 =
      poly_add(f, poly_add(f, poly_mul(f, z1, z1), poly_mul(f, z1, z2)),
               poly_mul(f, z2, z2));
  MultiPoly expected = poly_mul(f, poly_mul(f, z1, z2), poly_add(f, z1, z2));
  CHECK(jacobian(f, {d0, d1}) == expected);
  CHECK(jacobian(f, {d0, d1}).degree() == d0.degree() + d1.degree() - 2);
}

TEST_CASE("chain rule under invertible substitution") {
  std::mt19937 rng(2024);
  FieldSpec f = FieldSpec::builtin(3);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix s = Matrix::zero(f, 2);
    do {
      std::uniform_int_distribution<std::uint64_t> dist(0, 2);
      for (auto& x : s.a) x = f.element(dist(rng));
    } while (f.is_zero(det(f, s)));
    std::vector<MultiPoly> fs = {random_poly(f, 2, rng, 4, 3),
                                 random_poly(f, 2, rng, 4, 3)};
    MultiPoly lhs =
        jacobian(f, {substitute(f, fs[0], s), substitute(f, fs[1], s)});
    MultiPoly rhs =
        poly_scale(f, det(f, s), substitute(f, jacobian(f, fs), s));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("exact division") {
  FieldSpec f = FieldSpec::builtin(2);
  MultiPoly z1 = MultiPoly::variable(f, 2, 0);
  MultiPoly z2 = MultiPoly::variable(f, 2, 1);
  MultiPoly sum = poly_add(f, z1, z2);

  MultiPoly a = poly_add(f, poly_mul(f, poly_mul(f, z1, z1), z2),
                         poly_mul(f, z1, poly_mul(f, z2, z2)));
  auto q1 = exact_divide(f, a, z1);
  REQUIRE(q1.has_value());
  CHECK(*q1 == poly_add(f, poly_mul(f, z1, z2), poly_mul(f, z2, z2)));

  CHECK_FALSE(exact_divide(f, sum, z1).has_value());

  // Q for n=2, q=2 is z1 z2 (z1+z2)
  MultiPoly qf = poly_mul(f, poly_mul(f, z1, z2), sum);
  auto q2 = exact_divide(f, qf, sum);
  REQUIRE(q2.has_value());
  CHECK(*q2 == poly_mul(f, z1, z2));

  CHECK_THROWS_AS(exact_divide(f, a, MultiPoly::zero(2)), InputError);
}

TEST_CASE("exact division round trip on random sparse polynomials") {
  std::mt19937 rng(31337);
  for (std::uint64_t q : {2, 3, 4}) {
    FieldSpec f = FieldSpec::builtin(q);
    for (int trial = 0; trial < 40; ++trial) {
      MultiPoly a = random_poly(f, 3, rng, 4, 3);
      MultiPoly b = random_poly(f, 3, rng, 3, 2);
      if (b.is_zero()) continue;
      auto qq = exact_divide(f, poly_mul(f, a, b), b);
      REQUIRE(qq.has_value());
      CHECK(*qq == a);
    }
  }
}

TEST_CASE("divide by linear power") {
  FieldSpec f = FieldSpec::builtin(3);
  MultiPoly z1 = MultiPoly::variable(f, 2, 0);
  MultiPoly z2 = MultiPoly::variable(f, 2, 1);
  MultiPoly l = poly_add(f, z1, poly_scale(f, f.from_int(2), z2));
  MultiPoly p = poly_mul(f, poly_mul(f, l, l), z2);
  Vec form = {f.one(), f.from_int(2)};
  auto q = divide_by_linear_power(f, p, form, 2);
  REQUIRE(q.has_value());
  CHECK(*q == z2);
  CHECK_FALSE(divide_by_linear_power(f, p, form, 3).has_value());
}

TEST_CASE("additivity criterion") {
  FieldSpec f2 = FieldSpec::builtin(2);
  MultiPoly z1 = MultiPoly::variable(f2, 3, 0);
  MultiPoly z2 = MultiPoly::variable(f2, 3, 1);
  MultiPoly z3 = MultiPoly::variable(f2, 3, 2);

  MultiPoly good = poly_add(f2, poly_mul(f2, z1, z1), poly_mul(f2, z1, z3));
  CHECK(is_additive(f2, good, {0, 1}));

  CHECK_FALSE(is_additive(f2, poly_mul(f2, z1, z2), {0, 1}));
  CHECK_FALSE(is_additive(f2, poly_mul(f2, z3, z3), {0, 1}));
  CHECK(is_additive(f2, MultiPoly::zero(3), {0, 1}));

  // example41 invariants are additive in z1, z2 over F(z3)
  FieldSpec f4 = FieldSpec::builtin(4);
  std::vector<MultiPoly> printed = example41_printed_invariants(f4);
  CHECK(is_additive(f4, printed[0], {0, 1}));
  CHECK(is_additive(f4, printed[1], {0, 1}));
}

TEST_CASE("orbit additive products over small fields") {
  FieldSpec f2 = FieldSpec::builtin(2);
  XPoly h2 = orbit_additive_product(f2, f2.elements(), MultiPoly::one(f2, 1));
  MultiPoly x2 = MultiPoly::variable(f2, 2, 1);
  CHECK(h2.to_extended_poly(f2) == poly_add(f2, poly_mul(f2, x2, x2), x2));

  FieldSpec f3 = FieldSpec::builtin(3);
  XPoly h3 = orbit_additive_product(f3, f3.elements(), MultiPoly::one(f3, 1));
  MultiPoly x3 = MultiPoly::variable(f3, 2, 1);
  CHECK(h3.to_extended_poly(f3) ==
        poly_add(f3, poly_pow(f3, x3, 3), poly_scale(f3, f3.from_int(2), x3)));

  FieldSpec f4 = FieldSpec::builtin(4);
  XPoly h4 = orbit_additive_product(f4, f4.elements(), MultiPoly::one(f4, 1));
  MultiPoly x4 = MultiPoly::variable(f4, 2, 1);
  CHECK(h4.to_extended_poly(f4) == poly_add(f4, poly_pow(f4, x4, 4), x4));
}

TEST_CASE("orbit products are additive for every subgroup, q <= 16") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    FieldSpec f = FieldSpec::builtin(q);
    MultiPoly u = MultiPoly::monomial(f, Expo{2}, f.one());  // z1^2
    for (const auto& sub : additive_subgroups(f)) {
      XPoly h = orbit_additive_product(f, sub, u);
      CHECK(is_additive(f, h.to_extended_poly(f), {1}));
    }
  }
}

TEST_CASE("orbit product rejects bad sets") {
  FieldSpec f4 = FieldSpec::builtin(4);
  Scalar c = f4.from_coeffs({0, 1});
  std::vector<Scalar> bad = {f4.zero(), f4.one(), c};  // 1 + c missing
  CHECK_THROWS_AS(orbit_additive_product(f4, bad, MultiPoly::one(f4, 1)),
                  InputError);
  std::vector<Scalar> nozero = {f4.one()};
  CHECK_THROWS_AS(orbit_additive_product(f4, nozero, MultiPoly::one(f4, 1)),
                  InputError);
}

TEST_CASE("degree bookkeeping") {
  FieldSpec f = FieldSpec::builtin(2);
  CHECK_THROWS_AS(MultiPoly::zero(2).degree(), InputError);
  MultiPoly z1 = MultiPoly::variable(f, 2, 0);
  CHECK(poly_pow(f, z1, 5).degree() == 5);
  CHECK(poly_sub(f, z1, z1).is_zero());
  CHECK_FALSE(poly_add(f, z1, MultiPoly::one(f, 2)).is_homogeneous());
  CHECK(poly_mul(f, z1, z1).is_homogeneous());
}
