#ifndef REFINV_FIXTURES_HPP
#define REFINV_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "refinv/invariants.hpp"

namespace refinv {

/// Builtin group presentations, compiled in so tests and the CLI stay
/// hermetic.
struct Fixture {
  enum class Family { GL, SL, GLStab, SLStab, Example41, Cyclic };

  std::string name;
  Family family;
  std::size_t n = 0;
  GroupSpec spec;
  std::uint64_t expected_order = 0;
};

/// GL_n(F_q): elementary transvections plus a diagonal of determinant a
/// primitive element.
Fixture fixture_gl(std::size_t n, std::uint64_t q);
/// SL_n(F_q): elementary transvections with power-basis coefficients.
Fixture fixture_sl(std::size_t n, std::uint64_t q);
/// Full pointwise stabilizer of ker z_n inside GL_n(F_q).
Fixture fixture_glstab(std::size_t n, std::uint64_t q);
/// Transvections about ker z_n, i.e. the stabilizer inside SL_n(F_q).
Fixture fixture_slstab(std::size_t n, std::uint64_t q);
/// The three-generator transvection group {I + e13, I + e23, I + c(e13+e23)}
/// with c a generator of F_q over its prime field; requires q non-prime.
Fixture fixture_example41(std::uint64_t q);
/// The cyclic group generated by diag(1, g) with g primitive in F_q^*.
Fixture fixture_cyclic(std::uint64_t q);

/// Looks up "gl", "sl", "glstab", "slstab", "example41" or "cyclic" with
/// its numeric arguments. Throws InputError on unknown names or bad arity.
Fixture fixture_by_name(const std::string& name,
                        const std::vector<std::uint64_t>& args);

/// One-line usage strings for every registered fixture.
std::vector<std::string> fixture_catalog();

/// The published basic invariants of a fixture: Dickson invariants for GL,
/// {Q, d_{n,1}, ...} for SL, and the hyperplane construction for the
/// families that fix a hyperplane pointwise.
BasicInvariants fixture_invariants(const Fixture& fixture,
                                   const std::vector<Matrix>& elements);

/// Closed-form invariants of the example41 family (specialized to
/// a = b = 1): f1 = u^p - [c(1 - c^{p-1})]^{p-1} u z_3^{p(p-1)} with
/// u = z_1^p - z_1 z_3^{p-1}, f2 = (z_2^p - z_2 z_3^{p-1}) - u, f3 = z_3.
std::vector<MultiPoly> example41_printed_invariants(const FieldSpec& f);

}  // namespace refinv

#endif
