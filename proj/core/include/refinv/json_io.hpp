#ifndef REFINV_JSON_IO_HPP
#define REFINV_JSON_IO_HPP

#include <optional>

#include <json.hpp>

#include "refinv/factorization.hpp"
#include "refinv/fixtures.hpp"

namespace refinv {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Scalars serialize as integer coefficient vectors [a_0,...,a_{k-1}];
// parsing needs the field for the expected length. Polynomials serialize
// as lists of {exponents, coeff} in graded-lex order; parsing accepts any
// order and canonicalizes.

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const Json& j);

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const FieldSpec& f, const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldSpec& f, const Json& j);

Json hyperplane_to_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const FieldSpec& f, const Json& j);

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const FieldSpec& f, std::size_t n_vars, const Json& j);

Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json basics_to_json(const BasicInvariants& b);
BasicInvariants basics_from_json(const FieldSpec& f, std::size_t n_vars,
                                 const Json& j);

Json verify_report_to_json(const VerifyReport& r);
VerifyReport verify_report_from_json(const Json& j);

Json factorization_report_to_json(const FactorizationReport& r);
FactorizationReport factorization_report_from_json(const FieldSpec& f,
                                                   std::size_t n_vars,
                                                   const Json& j);

Json ramification_report_to_json(const RamificationReport& r);
RamificationReport ramification_report_from_json(const FieldSpec& f,
                                                 std::size_t n_vars,
                                                 const Json& j);

Json trace_to_json(const FieldSpec& f, const ConstructionTrace& t);

/// A group input file: {field, n, generators, labels?, invariants?,
/// order_cap?}. User-supplied invariants are verified, never derived.
struct GroupInput {
  GroupSpec spec;
  std::optional<std::vector<MultiPoly>> invariants;
  std::optional<std::string> label;
};

GroupInput group_input_from_json(const Json& j);
Json group_input_to_json(const GroupInput& g);

}  // namespace refinv

#endif
