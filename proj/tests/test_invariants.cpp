#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "refinv/fixtures.hpp"
#include "refinv/invariants.hpp"

using namespace refinv;

namespace {

Matrix from_ints(const FieldSpec& f, std::size_t n,
                 const std::vector<std::vector<int>>& rows) {
  Matrix m = Matrix::zero(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = f.from_int(rows[i][j]);
  return m;
}

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// J == unit * l^m for a nonzero unit
bool jacobian_is_form_power(const FieldSpec& f,
                            const std::vector<MultiPoly>& polys,
                            const Vec& form, std::uint64_t m) {
  MultiPoly j = jacobian(f, polys);
  if (j.is_zero()) return false;
  auto q = divide_by_linear_power(f, j, form, m);
  if (!q) return false;
  auto unit = q->constant_value(f);
  return unit.has_value() && !f.is_zero(*unit);
}

}  // namespace

TEST_CASE("single transvection over F_2") {
  FieldSpec f = FieldSpec::builtin(2);
  Matrix t = from_ints(f, 2, {{1, 1}, {0, 1}});
  std::vector<Matrix> group = {Matrix::identity(f, 2), t};
  Hyperplane h{{f.zero(), f.one()}};
  auto [basics, trace] = construct_hyperplane_invariants(f, group, h);

  CHECK(sorted(basics.degrees) == std::vector<std::uint64_t>{1, 2});
  MultiPoly z1 = MultiPoly::variable(f, 2, 0);
  MultiPoly z2 = MultiPoly::variable(f, 2, 1);
  MultiPoly expected = poly_add(f, poly_mul(f, z1, z1), poly_mul(f, z1, z2));
  CHECK(basics.polys[0] == expected);
  CHECK(basics.polys[1] == z2);
  CHECK(jacobian_is_form_power(f, basics.polys, h.form, 1));
  CHECK(basics.exponent_sum() == 1);
}

TEST_CASE("cyclic base case over F_4") {
  Fixture fx = fixture_cyclic(4);
  const FieldSpec& f = fx.spec.field;
  std::vector<Matrix> group = enumerate_group(fx.spec);
  auto h = common_fixed_hyperplane(f, group);
  REQUIRE(h.has_value());
  auto [basics, trace] = construct_hyperplane_invariants(f, group, *h);
  CHECK(basics.polys[0] == MultiPoly::variable(f, 2, 0));
  CHECK(basics.polys[1] == poly_pow(f, MultiPoly::variable(f, 2, 1), 3));
  CHECK(basics.exponent_sum() == 2);
  CHECK(jacobian_is_form_power(f, basics.polys, h->form, 2));
  CHECK(trace.steps.empty());
}

TEST_CASE("example41 construction and printed invariants") {
  Fixture fx = fixture_example41(4);
  const FieldSpec& f = fx.spec.field;
  std::vector<Matrix> group = enumerate_group(fx.spec);
  CHECK(group.size() == 8);
  auto h = common_fixed_hyperplane(f, group);
  REQUIRE(h.has_value());

  auto [basics, trace] = construct_hyperplane_invariants(f, group, *h);
  CHECK(sorted(basics.degrees) == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(basics.exponent_sum() == 4);
  CHECK(jacobian_is_form_power(f, basics.polys, h->form, 4));

  // the published closed forms pass verification as well
  std::vector<MultiPoly> printed = example41_printed_invariants(f);
  VerifyReport report = verify_basic_invariants(f, group, printed);
  CHECK(report.pass);
  CHECK(report.degree_product == 8);
  CHECK(jacobian_is_form_power(f, printed, h->form, 4));
}

TEST_CASE("example41 over F_9") {
  Fixture fx = fixture_example41(9);
  const FieldSpec& f = fx.spec.field;
  std::vector<Matrix> group = enumerate_group(fx.spec);
  CHECK(group.size() == 27);
  auto h = common_fixed_hyperplane(f, group);
  REQUIRE(h.has_value());
  auto [basics, trace] = construct_hyperplane_invariants(f, group, *h);
  CHECK(basics.degree_product() == 27);
  std::vector<MultiPoly> printed = example41_printed_invariants(f);
  CHECK(verify_basic_invariants(f, group, printed).pass);
}

TEST_CASE("full hyperplane stabilizer of GL_2(F_3) matches the u-system") {
  Fixture fx = fixture_glstab(2, 3);
  const FieldSpec& f = fx.spec.field;
  std::vector<Matrix> group = enumerate_group(fx.spec);
  CHECK(group.size() == 6);
  auto h = common_fixed_hyperplane(f, group);
  REQUIRE(h.has_value());
  auto [basics, trace] = construct_hyperplane_invariants(f, group, *h);
  CHECK(sorted(basics.degrees) == std::vector<std::uint64_t>{2, 3});

  // u_1 = z_1^q - z_n^{q-1} z_1 and u_n = z_n^{q-1}
  MultiPoly z1 = MultiPoly::variable(f, 2, 0);
  MultiPoly zn = MultiPoly::variable(f, 2, 1);
  MultiPoly u1 = poly_sub(f, poly_pow(f, z1, 3),
                          poly_mul(f, poly_pow(f, zn, 2), z1));
  MultiPoly un = poly_pow(f, zn, 2);
  CHECK(basics.polys[0] == u1);
  CHECK(basics.polys[1] == un);
}

TEST_CASE("transvection stabilizer inside SL_2(F_3)") {
  Fixture fx = fixture_slstab(2, 3);
  const FieldSpec& f = fx.spec.field;
  std::vector<Matrix> group = enumerate_group(fx.spec);
  CHECK(group.size() == 3);
  auto h = common_fixed_hyperplane(f, group);
  REQUIRE(h.has_value());
  auto [basics, trace] = construct_hyperplane_invariants(f, group, *h);
  CHECK(sorted(basics.degrees) == std::vector<std::uint64_t>{1, 3});
  CHECK(basics.exponent_sum() == 2);
}

TEST_CASE("verification report") {
  Fixture gl = fixture_gl(2, 2);
  const FieldSpec& f = gl.spec.field;
  std::vector<Matrix> group = enumerate_group(gl.spec);

  std::vector<MultiPoly> dickson = dickson_invariants(f, 2);
  VerifyReport good = verify_basic_invariants(f, group, dickson);
  CHECK(good.pass);
  CHECK(good.degree_product == 6);

  std::vector<MultiPoly> coords = {MultiPoly::variable(f, 2, 0),
                                   MultiPoly::variable(f, 2, 1)};
  VerifyReport bad = verify_basic_invariants(f, group, coords);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.invariant);

  // non-homogeneous input is an error, not a failed report
  std::vector<MultiPoly> inhom = {
      poly_add(f, coords[0], MultiPoly::one(f, 2)), coords[1]};
  CHECK_THROWS_AS(verify_basic_invariants(f, group, inhom), InputError);
}

TEST_CASE("SL_2(F_3) verification with Q and the Dickson invariant") {
  Fixture sl = fixture_sl(2, 3);
  const FieldSpec& f = sl.spec.field;
  std::vector<Matrix> group = enumerate_group(sl.spec);
  std::vector<MultiPoly> basics = sl_invariants(f, 2);
  CHECK(basics[0].degree() == 4);
  CHECK(basics[1].degree() == 6);
  VerifyReport report = verify_basic_invariants(f, group, basics);
  CHECK(report.pass);
  CHECK(report.degree_product == 24);
}

TEST_CASE("Dickson invariants over F_2") {
  FieldSpec f = FieldSpec::builtin(2);
  std::vector<MultiPoly> d = dickson_invariants(f, 2);
  MultiPoly z1 = MultiPoly::variable(f, 2, 0);
  MultiPoly z2 = MultiPoly::variable(f, 2, 1);
  MultiPoly d0 = poly_add(f, poly_mul(f, poly_mul(f, z1, z1), z2),
                          poly_mul(f, z1, poly_mul(f, z2, z2)));
  MultiPoly d1 =
      poly_add(f, poly_add(f, poly_mul(f, z1, z1), poly_mul(f, z1, z2)),
               poly_mul(f, z2, z2));
  CHECK(d[0] == d0);
  CHECK(d[1] == d1);
  // d_{2,0} = Q^{q-1} = Q at q = 2
  CHECK(d[0] == q_form(f, 2));
}

TEST_CASE("Dickson degrees") {
  FieldSpec f2 = FieldSpec::builtin(2);
  std::vector<MultiPoly> d32 = dickson_invariants(f2, 3);
  CHECK(d32[0].degree() == 7);
  CHECK(d32[1].degree() == 6);
  CHECK(d32[2].degree() == 4);

  FieldSpec f3 = FieldSpec::builtin(3);
  std::vector<MultiPoly> d23 = dickson_invariants(f3, 2);
  CHECK(d23[0].degree() == 8);
  CHECK(d23[1].degree() == 6);
}

TEST_CASE("Dickson determinant route equals the orbit route") {
  // (2,2), (2,3), (3,2); the library asserts this internally as well
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint64_t>>{
           {2, 2}, {2, 3}, {3, 2}}) {
    FieldSpec f = FieldSpec::builtin(q);
    std::vector<MultiPoly> det_route = dickson_invariants(f, n);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(det_route[i] == dickson_orbit_sum(f, n, i));
  }
}

TEST_CASE("Dickson invariants are GL-invariant") {
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint64_t>>{
           {2, 2}, {2, 3}, {3, 2}}) {
    Fixture fx = fixture_gl(n, q);
    const FieldSpec& f = fx.spec.field;
    std::vector<Matrix> group = enumerate_group(fx.spec);
    CHECK(verify_basic_invariants(f, group, dickson_invariants(f, n)).pass);
  }
}

TEST_CASE("q_form") {
  FieldSpec f2 = FieldSpec::builtin(2);
  CHECK(q_form(f2, 1) == MultiPoly::variable(f2, 1, 0));
  MultiPoly z1 = MultiPoly::variable(f2, 2, 0);
  MultiPoly z2 = MultiPoly::variable(f2, 2, 1);
  CHECK(q_form(f2, 2) ==
        poly_mul(f2, poly_mul(f2, z1, z2), poly_add(f2, z1, z2)));

  FieldSpec f3 = FieldSpec::builtin(3);
  CHECK(q_form(f3, 2).degree() == 4);

  FieldSpec f9 = FieldSpec::builtin(9);
  CHECK_THROWS_AS(q_form(f9, 3), InputError);  // 729 > 512
}

TEST_CASE("sl invariants are SL-invariant") {
  Fixture fx = fixture_sl(2, 3);
  const FieldSpec& f = fx.spec.field;
  for (const MultiPoly& p : sl_invariants(f, 2))
    for (const Matrix& g : fx.spec.generators) CHECK(act(f, g, p) == p);
  // degrees at q = 2: SL = GL
  FieldSpec f2 = FieldSpec::builtin(2);
  std::vector<MultiPoly> s22 = sl_invariants(f2, 2);
  CHECK(s22[0].degree() == 3);
  CHECK(s22[1].degree() == 2);
}

TEST_CASE("degree multiset is stable under transvection orderings") {
  std::vector<Fixture> fixtures = {fixture_example41(4), fixture_glstab(3, 2),
                                   fixture_slstab(3, 3)};
  for (const Fixture& fx : fixtures) {
    const FieldSpec& f = fx.spec.field;
    std::vector<Matrix> group = enumerate_group(fx.spec);
    auto h = common_fixed_hyperplane(f, group);
    REQUIRE(h.has_value());
    StabilizerDecomposition dec = stabilizer_decomposition(f, group, *h);
    REQUIRE(dec.d <= 3);

    std::vector<std::size_t> order(dec.d);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::uint64_t> reference;
    do {
      ConstructionOptions opts;
      opts.transvection_order = order;
      auto [basics, trace] =
          construct_hyperplane_invariants(f, group, *h, opts);
      std::vector<std::uint64_t> degs = sorted(basics.degrees);
      if (reference.empty())
        reference = degs;
      else
        CHECK(degs == reference);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("per-step corrections and jacobian exponents") {
  // after each step the non-pivot polynomials differ from their
  // predecessors by at most one correction term
  Fixture fx = fixture_example41(4);
  const FieldSpec& f = fx.spec.field;
  std::vector<Matrix> group = enumerate_group(fx.spec);
  auto h = common_fixed_hyperplane(f, group);
  REQUIRE(h.has_value());
  StabilizerDecomposition dec = stabilizer_decomposition(f, group, *h);
  auto [basics, trace] = construct_hyperplane_invariants(f, group, *h);

  const std::size_t n = fx.n;
  std::vector<MultiPoly> prev;
  for (std::size_t i = 0; i + 1 < n; ++i)
    prev.push_back(MultiPoly::variable(f, n, i));
  {
    Expo e(n, 0);
    e[n - 1] = static_cast<std::uint32_t>(dec.e);
    prev.push_back(MultiPoly::monomial(f, e, f.one()));
  }
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& step = trace.steps[k];
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (i == step.pivot) continue;
      MultiPoly diff = poly_sub(f, step.polys_after[i], prev[i]);
      if (f.is_zero(step.c[i])) {
        CHECK(diff.is_zero());
      } else {
        std::uint64_t ratio =
            prev[i].degree() / step.pivot_before.degree();
        MultiPoly expected = poly_scale(
            f, step.c[i], poly_pow(f, step.pivot_before, ratio));
        CHECK(diff == expected);
      }
    }
    prev = step.polys_after;
  }

  // intermediate jacobian exponents follow m' = m + d_1 (|A| - 1)
  std::uint64_t m = trace.base_jacobian_exponent;
  for (const TraceStep& step : trace.steps) {
    std::uint64_t d1 = step.pivot_before.degree();
    m += d1 * (step.additive_set.size() - 1);
    CHECK(step.jacobian_exponent == m);
  }
  CHECK(m == basics.exponent_sum());
}

TEST_CASE("family size guards") {
  FieldSpec f9 = FieldSpec::builtin(9);
  CHECK_THROWS_AS(dickson_invariants(f9, 3), InputError);
  FieldSpec f2 = FieldSpec::builtin(2);
  CHECK_THROWS_AS(dickson_invariants(f2, 4), InputError);
  CHECK_NOTHROW(dickson_invariants(f2, 3));
}
