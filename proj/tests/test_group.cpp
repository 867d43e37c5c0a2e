#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "refinv/fixtures.hpp"
#include "refinv/group.hpp"

using namespace refinv;

namespace {

Matrix from_ints(const FieldSpec& f, std::size_t n,
                 const std::vector<std::vector<int>>& rows) {
  Matrix m = Matrix::zero(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = f.from_int(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("closure enumeration") {
  FieldSpec f2 = FieldSpec::builtin(2);
  GroupSpec trivial(f2, 2, {Matrix::identity(f2, 2)});
  CHECK(enumerate_group(trivial).size() == 1);

  GroupSpec gl22(f2, 2,
                 {from_ints(f2, 2, {{0, 1}, {1, 0}}),
                  from_ints(f2, 2, {{1, 1}, {0, 1}})});
  CHECK(enumerate_group(gl22).size() == 6);

  Fixture ex41 = fixture_example41(4);
  CHECK(enumerate_group(ex41.spec).size() == 8);  // 1 * 2^3 per the order formula
}

TEST_CASE("order cap errors") {
  FieldSpec f3 = FieldSpec::builtin(3);
  GroupSpec capped(f3, 2,
                   {from_ints(f3, 2, {{1, 1}, {0, 1}}),
                    from_ints(f3, 2, {{1, 0}, {1, 1}})},
                   10);
  CHECK_THROWS_WITH_AS(enumerate_group(capped),
                       "group closure exceeded order cap 10", InputError);
}

TEST_CASE("generator validation") {
  FieldSpec f2 = FieldSpec::builtin(2);
  CHECK_THROWS_AS(GroupSpec(f2, 2, {Matrix::zero(f2, 2)}), InputError);
  CHECK_THROWS_AS(GroupSpec(f2, 7, {}), InputError);
}

TEST_CASE("reflection census of GL_2(F_2)") {
  Fixture fx = fixture_gl(2, 2);
  std::vector<Matrix> g = enumerate_group(fx.spec);
  auto refs = classify_reflections(fx.spec.field, g);
  CHECK(refs.size() == 3);
  for (const auto& r : refs) CHECK(r.is_transvection);
  CHECK(reflecting_arrangement(fx.spec.field, g).size() == 3);
}

TEST_CASE("reflection census of GL_2(F_3)") {
  Fixture fx = fixture_gl(2, 3);
  const FieldSpec& f = fx.spec.field;
  std::vector<Matrix> g = enumerate_group(fx.spec);
  CHECK(g.size() == 48);
  auto refs = classify_reflections(f, g);
  CHECK(refs.size() == 20);
  std::size_t transvections = 0;
  for (const auto& r : refs)
    if (r.is_transvection)
      ++transvections;
    else
      CHECK(r.eigenvalue == f.from_int(2));
  CHECK(transvections == 8);
  CHECK(refs.size() - transvections == 12);
  CHECK(reflecting_arrangement(f, g).size() == 4);
}

TEST_CASE("identity is never a reflection") {
  FieldSpec f2 = FieldSpec::builtin(2);
  auto refs = classify_reflections(f2, {Matrix::identity(f2, 2)});
  CHECK(refs.empty());
}

TEST_CASE("arrangements") {
  FieldSpec f2 = FieldSpec::builtin(2);
  CHECK(reflecting_arrangement(f2, {Matrix::identity(f2, 2)}).empty());

  Fixture sl = fixture_sl(2, 3);
  std::vector<Matrix> g = enumerate_group(sl.spec);
  CHECK(g.size() == 24);
  CHECK(reflecting_arrangement(sl.spec.field, g).size() == 4);
  CHECK(all_hyperplanes(sl.spec.field, 2).size() == 4);
}

TEST_CASE("reflection info satisfies the defining identity") {
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint64_t>>{
           {2, 3}, {3, 2}}) {
    Fixture fx = fixture_gl(n, q);
    const FieldSpec& f = fx.spec.field;
    std::vector<Matrix> g = enumerate_group(fx.spec);
    for (const auto& r : classify_reflections(f, g)) {
      // g v = v + l(v) alpha on the standard basis
      for (std::size_t j = 0; j < n; ++j) {
        Vec ej(n, f.zero());
        ej[j] = f.one();
        Vec lhs = mat_vec(f, r.element, ej);
        Vec rhs = vec_add(f, ej,
                          vec_scale(f, dot(f, r.hyperplane.form, ej), r.root));
        CHECK(lhs == rhs);
      }
      CHECK(r.is_transvection ==
            f.is_zero(dot(f, r.hyperplane.form, r.root)));
      CHECK(r.eigenvalue == det(f, r.element));
    }
  }
}

TEST_CASE("pointwise stabilizers") {
  FieldSpec f2 = FieldSpec::builtin(2);
  Hyperplane h{{f2.zero(), f2.one()}};
  auto trivial = pointwise_stabilizer(f2, {Matrix::identity(f2, 2)}, h);
  CHECK(trivial.size() == 1);

  Fixture gl = fixture_gl(2, 3);
  std::vector<Matrix> g = enumerate_group(gl.spec);
  for (const Hyperplane& hh : reflecting_arrangement(gl.spec.field, g))
    CHECK(pointwise_stabilizer(gl.spec.field, g, hh).size() == 6);

  Fixture sl = fixture_sl(2, 3);
  std::vector<Matrix> sg = enumerate_group(sl.spec);
  for (const Hyperplane& hh : reflecting_arrangement(sl.spec.field, sg))
    CHECK(pointwise_stabilizer(sl.spec.field, sg, hh).size() == 3);
}

TEST_CASE("root vectors") {
  FieldSpec f2 = FieldSpec::builtin(2);
  Matrix t = from_ints(f2, 2, {{1, 1}, {0, 1}});
  Hyperplane h{{f2.zero(), f2.one()}};  // z_2
  CHECK(root_vector(f2, t, h) == Vec{f2.one(), f2.zero()});

  FieldSpec f3 = FieldSpec::builtin(3);
  Matrix d = from_ints(f3, 2, {{1, 0}, {0, 2}});
  Hyperplane h3{{f3.zero(), f3.one()}};
  CHECK(root_vector(f3, d, h3) == Vec{f3.zero(), f3.one()});
  // alpha scales inversely with the form
  Hyperplane h3s{{f3.zero(), f3.from_int(2)}};
  CHECK(root_vector(f3, d, h3s) == Vec{f3.zero(), f3.from_int(2)});

  Matrix notfix = from_ints(f3, 2, {{2, 0}, {0, 2}});
  CHECK_THROWS_AS(root_vector(f3, notfix, h3), InputError);
  CHECK_THROWS_AS(root_vector(f3, Matrix::identity(f3, 2), h3), InputError);
}

TEST_CASE("stabilizer decomposition of GL_2(F_3)") {
  Fixture fx = fixture_gl(2, 3);
  const FieldSpec& f = fx.spec.field;
  std::vector<Matrix> g = enumerate_group(fx.spec);
  for (const Hyperplane& h : reflecting_arrangement(f, g)) {
    auto stab = pointwise_stabilizer(f, g, h);
    StabilizerDecomposition dec = stabilizer_decomposition(f, stab, h);
    CHECK(dec.e == 2);
    CHECK(dec.omega == f.from_int(2));
    CHECK(dec.d == 1);
    CHECK(dec.subfield.size() == 3);
    CHECK(dec.group_order == 6);
    CHECK(dec.K_order == 3);
  }
}

TEST_CASE("stabilizer decomposition of the three-transvection group") {
  Fixture fx = fixture_example41(4);
  const FieldSpec& f = fx.spec.field;
  std::vector<Matrix> g = enumerate_group(fx.spec);
  auto h = common_fixed_hyperplane(f, g);
  REQUIRE(h.has_value());
  // fixes z_3 = 0
  CHECK(h->form == Vec{f.zero(), f.zero(), f.one()});
  StabilizerDecomposition dec = stabilizer_decomposition(f, g, *h);
  CHECK(dec.sigma == Matrix::identity(f, 3));
  CHECK(f.is_one(dec.omega));
  CHECK(dec.e == 1);
  CHECK(dec.subfield.size() == 2);  // F_2
  CHECK(dec.d == 3);                // minimal generating transvections
  CHECK(dec.group_order == 8);      // 1 * 2^3
}

TEST_CASE("stabilizer decomposition of a cyclic stabilizer") {
  Fixture fx = fixture_cyclic(4);
  const FieldSpec& f = fx.spec.field;
  std::vector<Matrix> g = enumerate_group(fx.spec);
  CHECK(g.size() == 3);
  auto h = common_fixed_hyperplane(f, g);
  REQUIRE(h.has_value());
  StabilizerDecomposition dec = stabilizer_decomposition(f, g, *h);
  CHECK(dec.K_order == 1);
  CHECK(dec.d == 0);
  CHECK(dec.e == 3);
  CHECK(dec.group_order == 3);
}

TEST_CASE("composition and conjugation laws inside every stabilizer") {
  std::vector<Fixture> fixtures = {fixture_gl(2, 2),  fixture_gl(2, 3),
                                   fixture_gl(3, 2),  fixture_sl(2, 3),
                                   fixture_glstab(2, 3), fixture_slstab(3, 2),
                                   fixture_example41(4), fixture_cyclic(4)};
  for (const Fixture& fx : fixtures) {
    const FieldSpec& f = fx.spec.field;
    std::vector<Matrix> g = enumerate_group(fx.spec);
    for (const Hyperplane& h : reflecting_arrangement(f, g)) {
      auto stab = pointwise_stabilizer(f, g, h);
      StabilizerDecomposition dec = stabilizer_decomposition(f, stab, h);
      Matrix id = Matrix::identity(f, fx.n);

      // composition law: alpha_{sr} = lambda_r alpha_s + alpha_r for all
      // pairs of reflections about h
      for (const Matrix& s : stab) {
        if (s == id) continue;
        Vec alpha_s = root_vector(f, s, h);
        for (const Matrix& r : stab) {
          if (r == id) continue;
          Vec alpha_r = root_vector(f, r, h);
          Scalar lambda_r = f.add(f.one(), dot(f, h.form, alpha_r));
          Matrix sr = mat_mul(f, s, r);
          Vec expected =
              vec_add(f, vec_scale(f, lambda_r, alpha_s), alpha_r);
          if (sr == id) {
            CHECK(vec_is_zero(f, expected));
          } else {
            CHECK(root_vector(f, sr, h) == expected);
          }
        }
      }

      // conjugation law: alpha_{sigma^-1 t sigma} = omega alpha_t for
      // every transvection t
      Matrix sigma_inv = mat_inv(f, dec.sigma);
      for (const Matrix& t : stab) {
        if (t == id || !f.is_one(det(f, t))) continue;
        Vec alpha_t = root_vector(f, t, h);
        Matrix conj = mat_mul(f, mat_mul(f, sigma_inv, t), dec.sigma);
        CHECK(root_vector(f, conj, h) == vec_scale(f, dec.omega, alpha_t));
      }

      // root space of K is closed under multiplication by F_p(omega)
      std::set<Vec> root_set;
      root_set.insert(Vec(fx.n, f.zero()));
      for (const Matrix& t : stab)
        if (t != id && f.is_one(det(f, t)))
          root_set.insert(root_vector(f, t, h));
      for (const Vec& alpha : root_set)
        for (const Scalar& lam : dec.subfield.elements)
          CHECK(root_set.count(vec_scale(f, lam, alpha)) == 1);
      CHECK(root_set.size() == dec.K_order);

      // order formula
      std::uint64_t predicted = dec.e;
      for (std::size_t i = 0; i < dec.d; ++i)
        predicted *= dec.subfield.size();
      CHECK(predicted == stab.size());
    }
  }
}

TEST_CASE("reflection-generated groups") {
  FieldSpec f2 = FieldSpec::builtin(2);
  CHECK(is_reflection_generated(f2, {Matrix::identity(f2, 2)}));

  Fixture gl = fixture_gl(2, 2);
  CHECK(is_reflection_generated(gl.spec.field, enumerate_group(gl.spec)));

  // scalar matrices fix no hyperplane pointwise
  FieldSpec f4 = FieldSpec::builtin(4);
  Scalar c = f4.from_coeffs({0, 1});
  Matrix scalar_mat = Matrix::identity(f4, 2);
  scalar_mat.at(0, 0) = c;
  scalar_mat.at(1, 1) = c;
  GroupSpec scalars(f4, 2, {scalar_mat});
  CHECK_FALSE(is_reflection_generated(f4, enumerate_group(scalars)));
}

TEST_CASE("fixture orders match the closed forms") {
  std::vector<Fixture> fixtures = {
      fixture_gl(2, 2),    fixture_gl(2, 3),    fixture_gl(3, 2),
      fixture_sl(2, 2),    fixture_sl(2, 3),    fixture_glstab(2, 3),
      fixture_glstab(3, 2), fixture_slstab(2, 3), fixture_slstab(3, 2),
      fixture_example41(4), fixture_example41(9), fixture_cyclic(4),
      fixture_cyclic(9)};
  for (const Fixture& fx : fixtures)
    CHECK(enumerate_group(fx.spec).size() == fx.expected_order);
}
