#include "refinv/json_io.hpp"

namespace refinv {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw InputError(std::string("malformed input: ") + what);
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  Json j = Json::array();
  for (Coeff c : s.coeffs) j.push_back(c);
  return j;
}

Scalar scalar_from_json(const FieldSpec& f, const Json& j) {
  require(j.is_array(), "scalar must be an array of residues");
  std::vector<std::int64_t> coeffs;
  for (const Json& c : j) {
    require(c.is_number_integer(), "scalar entries must be integers");
    coeffs.push_back(c.get<std::int64_t>());
  }
  require(coeffs.size() <= f.k(), "scalar has more coordinates than the field");
  return f.from_coeffs(std::move(coeffs));
}

Json field_to_json(const FieldSpec& f) {
  Json j;
  j["p"] = f.p();
  j["k"] = f.k();
  j["modulus"] = f.modulus();
  return j;
}

FieldSpec field_from_json(const Json& j) {
  require(j.is_object() && j.contains("p") && j.contains("modulus"),
          "field must carry p and modulus");
  Coeff p = j.at("p").get<Coeff>();
  std::vector<Coeff> modulus = j.at("modulus").get<std::vector<Coeff>>();
  FieldSpec f(p, std::move(modulus));
  if (j.contains("k"))
    require(j.at("k").get<std::size_t>() == f.k(),
            "field k disagrees with the modulus degree");
  return f;
}

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const Scalar& s : v) j.push_back(scalar_to_json(s));
  return j;
}

Vec vec_from_json(const FieldSpec& f, const Json& j) {
  require(j.is_array(), "vector must be an array");
  Vec v;
  for (const Json& s : j) v.push_back(scalar_from_json(f, s));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.n; ++c)
      row.push_back(scalar_to_json(m.at(i, c)));
    j.push_back(std::move(row));
  }
  return j;
}

Matrix matrix_from_json(const FieldSpec& f, const Json& j) {
  require(j.is_array() && !j.empty(), "matrix must be a non-empty array");
  const std::size_t n = j.size();
  Matrix m = Matrix::zero(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    require(j[i].is_array() && j[i].size() == n, "matrix must be square");
    for (std::size_t c = 0; c < n; ++c)
      m.at(i, c) = scalar_from_json(f, j[i][c]);
  }
  return m;
}

Json hyperplane_to_json(const Hyperplane& h) { return vec_to_json(h.form); }

Hyperplane hyperplane_from_json(const FieldSpec& f, const Json& j) {
  return normalize_hyperplane(f, vec_from_json(f, j));
}

Json poly_to_json(const MultiPoly& p) {
  Json j = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["exponents"] = e;
    term["coeff"] = scalar_to_json(c);
    j.push_back(std::move(term));
  }
  return j;
}

MultiPoly poly_from_json(const FieldSpec& f, std::size_t n_vars,
                         const Json& j) {
  require(j.is_array(), "polynomial must be an array of terms");
  MultiPoly p(n_vars);
  for (const Json& term : j) {
    require(term.is_object() && term.contains("exponents") &&
                term.contains("coeff"),
            "polynomial terms carry exponents and coeff");
    Expo e = term.at("exponents").get<Expo>();
    require(e.size() == n_vars, "exponent vector arity mismatch");
    p.add_term(f, e, scalar_from_json(f, term.at("coeff")));
  }
  return p;
}

Json group_to_json(const GroupSpec& g) {
  Json j;
  j["field"] = field_to_json(g.field);
  j["n"] = g.n;
  Json gens = Json::array();
  for (const Matrix& m : g.generators) gens.push_back(matrix_to_json(m));
  j["generators"] = std::move(gens);
  if (g.order_cap != kDefaultOrderCap) j["order_cap"] = g.order_cap;
  return j;
}

GroupSpec group_from_json(const Json& j) {
  require(j.is_object() && j.contains("field") && j.contains("n") &&
              j.contains("generators"),
          "group must carry field, n and generators");
  FieldSpec f = field_from_json(j.at("field"));
  std::size_t n = j.at("n").get<std::size_t>();
  std::vector<Matrix> gens;
  require(j.at("generators").is_array(), "generators must be an array");
  for (const Json& g : j.at("generators")) {
    Matrix m = matrix_from_json(f, g);
    require(m.n == n, "generator dimension disagrees with n");
    gens.push_back(std::move(m));
  }
  std::uint64_t cap = kDefaultOrderCap;
  if (j.contains("order_cap")) cap = j.at("order_cap").get<std::uint64_t>();
  return GroupSpec(std::move(f), n, std::move(gens), cap);
}

Json rational_to_json(const Rational& r) {
  return Json{{"num", r.num}, {"den", r.den}};
}

Rational rational_from_json(const Json& j) {
  require(j.is_object() && j.contains("num") && j.contains("den"),
          "rational carries num and den");
  return Rational(j.at("num").get<std::int64_t>(),
                  j.at("den").get<std::int64_t>());
}

Json basics_to_json(const BasicInvariants& b) {
  Json j;
  Json polys = Json::array();
  for (const MultiPoly& p : b.polys) polys.push_back(poly_to_json(p));
  j["polys"] = std::move(polys);
  j["degrees"] = b.degrees;
  return j;
}

BasicInvariants basics_from_json(const FieldSpec& f, std::size_t n_vars,
                                 const Json& j) {
  require(j.is_object() && j.contains("polys"), "basics carry polys");
  BasicInvariants b;
  for (const Json& p : j.at("polys"))
    b.polys.push_back(poly_from_json(f, n_vars, p));
  if (j.contains("degrees"))
    b.degrees = j.at("degrees").get<std::vector<std::uint64_t>>();
  else
    for (const MultiPoly& p : b.polys) b.degrees.push_back(p.degree());
  return b;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json j;
  j["invariant"] = r.invariant;
  j["jacobian_nonzero"] = r.jacobian_nonzero;
  j["degree_product_matches"] = r.degree_product_matches;
  j["pass"] = r.pass;
  j["group_order"] = r.group_order;
  j["degree_product"] = r.degree_product;
  j["degrees"] = r.degrees;
  return j;
}

VerifyReport verify_report_from_json(const Json& j) {
  VerifyReport r;
  r.invariant = j.at("invariant").get<bool>();
  r.jacobian_nonzero = j.at("jacobian_nonzero").get<bool>();
  r.degree_product_matches = j.at("degree_product_matches").get<bool>();
  r.pass = j.at("pass").get<bool>();
  r.group_order = j.at("group_order").get<std::uint64_t>();
  r.degree_product = j.at("degree_product").get<std::uint64_t>();
  r.degrees = j.at("degrees").get<std::vector<std::uint64_t>>();
  return r;
}

Json factorization_report_to_json(const FactorizationReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["unit"] = scalar_to_json(r.unit);
  j["jacobian"] = poly_to_json(r.jacobian);
  Json factors = Json::array();
  for (const HyperplaneFactor& f : r.factors) {
    Json jf;
    jf["hyperplane"] = hyperplane_to_json(f.hyperplane);
    jf["multiplicity"] = f.multiplicity;
    jf["divides"] = f.divides;
    factors.push_back(std::move(jf));
  }
  j["factors"] = std::move(factors);
  return j;
}

FactorizationReport factorization_report_from_json(const FieldSpec& f,
                                                   std::size_t n_vars,
                                                   const Json& j) {
  FactorizationReport r;
  r.pass = j.at("pass").get<bool>();
  r.unit = scalar_from_json(f, j.at("unit"));
  r.jacobian = poly_from_json(f, n_vars, j.at("jacobian"));
  for (const Json& jf : j.at("factors")) {
    HyperplaneFactor factor;
    factor.hyperplane = hyperplane_from_json(f, jf.at("hyperplane"));
    factor.multiplicity = jf.at("multiplicity").get<std::uint64_t>();
    factor.divides = jf.at("divides").get<bool>();
    r.factors.push_back(std::move(factor));
  }
  return r;
}

Json ramification_report_to_json(const RamificationReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["lhs"] = rational_to_json(r.lhs);
  j["rhs"] = rational_to_json(r.rhs);
  Json terms = Json::array();
  for (const RamificationTerm& t : r.terms) {
    Json jt;
    jt["hyperplane"] = hyperplane_to_json(t.hyperplane);
    jt["stabilizer_order"] = t.stabilizer_order;
    jt["degrees"] = t.degrees;
    jt["psi"] = rational_to_json(t.psi_value);
    jt["contribution"] = rational_to_json(t.contribution);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

RamificationReport ramification_report_from_json(const FieldSpec& f,
                                                 std::size_t n_vars,
                                                 const Json& j) {
  RamificationReport r;
  r.pass = j.at("pass").get<bool>();
  r.lhs = rational_from_json(j.at("lhs"));
  r.rhs = rational_from_json(j.at("rhs"));
  for (const Json& jt : j.at("terms")) {
    RamificationTerm t;
    t.hyperplane = hyperplane_from_json(f, jt.at("hyperplane"));
    t.stabilizer_order = jt.at("stabilizer_order").get<std::uint64_t>();
    t.degrees = jt.at("degrees").get<std::vector<std::uint64_t>>();
    t.psi_value = rational_from_json(jt.at("psi"));
    t.contribution = rational_from_json(jt.at("contribution"));
    r.terms.push_back(std::move(t));
  }
  return r;
}

Json trace_to_json(const FieldSpec& f, const ConstructionTrace& t) {
  Json j;
  j["basis_change"] = matrix_to_json(t.basis_change);
  j["base_jacobian_exponent"] = t.base_jacobian_exponent;
  Json steps = Json::array();
  for (const TraceStep& s : t.steps) {
    Json js;
    js["pivot"] = s.pivot;
    js["pivot_before"] = poly_to_json(s.pivot_before);
    js["b"] = vec_to_json(s.b);
    js["c"] = vec_to_json(s.c);
    js["additive_set"] = vec_to_json(s.additive_set);
    js["jacobian_exponent"] = s.jacobian_exponent;
    Json polys = Json::array();
    for (const MultiPoly& p : s.polys_after) polys.push_back(poly_to_json(p));
    js["polys_after"] = std::move(polys);
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  (void)f;
  return j;
}

GroupInput group_input_from_json(const Json& j) {
  GroupInput g{group_from_json(j), std::nullopt, std::nullopt};
  if (j.contains("invariants")) {
    std::vector<MultiPoly> polys;
    for (const Json& p : j.at("invariants"))
      polys.push_back(poly_from_json(g.spec.field, g.spec.n, p));
    g.invariants = std::move(polys);
  }
  if (j.contains("label")) g.label = j.at("label").get<std::string>();
  return g;
}

Json group_input_to_json(const GroupInput& g) {
  Json j = group_to_json(g.spec);
  if (g.invariants) {
    Json polys = Json::array();
    for (const MultiPoly& p : *g.invariants) polys.push_back(poly_to_json(p));
    j["invariants"] = std::move(polys);
  }
  if (g.label) j["label"] = *g.label;
  return j;
}

}  // namespace refinv
