#ifndef REFINV_GF_HPP
#define REFINV_GF_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "refinv/errors.hpp"

namespace refinv {

using Coeff = std::uint32_t;

/// Element of F_q in power-basis coordinates w.r.t. the field's modulus
/// polynomial. The coefficient vector always has length k (the extension
/// degree) with entries fully reduced mod p, so equality is coordinate-wise.
/// Scalars carry no reference to their field; every operation takes the
/// FieldSpec as context, and mixing fields surfaces as a length mismatch.
struct Scalar {
  std::vector<Coeff> coeffs;

  auto operator<=>(const Scalar&) const = default;
};

struct Subfield;

/// Exact arithmetic in F_q = F_p[x]/(m(x)) for a monic irreducible m of
/// degree k. Construction validates that p is prime and m is irreducible
/// (trial factor search; fields here are desk-scale).
class FieldSpec {
public:
  /// modulus lists coefficients from the constant term up and includes the
  /// leading 1, so its length is k + 1.
  FieldSpec(Coeff p, std::vector<Coeff> modulus);

  /// Prime field F_p (modulus x).
  static FieldSpec prime(Coeff p);

  /// Canonical field of order q for q in {2,3,4,5,7,8,9,16,25,27}: the
  /// first irreducible monic modulus in lexicographic coefficient order
  /// [a_0,...,a_{k-1}].
  static FieldSpec builtin(std::uint64_t q);

  Coeff p() const { return p_; }
  std::size_t k() const { return k_; }
  std::uint64_t q() const { return q_; }
  const std::vector<Coeff>& modulus() const { return modulus_; }

  bool operator==(const FieldSpec& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

  Scalar zero() const;
  Scalar one() const;
  /// Embeds an integer via repeated 1 (i.e., the image of Z in F_q).
  Scalar from_int(std::int64_t v) const;
  /// Builds an element from power-basis coordinates, reducing mod p.
  /// Shorter vectors are zero-padded; longer ones are rejected.
  Scalar from_coeffs(std::vector<std::int64_t> coeffs) const;
  /// index in [0, q): base-p digits (a_0 least significant).
  Scalar element(std::uint64_t index) const;
  /// All q elements sorted in canonical (lexicographic coefficient) order.
  std::vector<Scalar> elements() const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  /// Throws InputError on zero input.
  Scalar inv(const Scalar& a) const;
  Scalar pow(const Scalar& a, std::uint64_t e) const;

  /// Smallest e >= 1 with a^e = 1; divides q - 1. Throws on zero input.
  std::uint64_t multiplicative_order(const Scalar& a) const;

  /// Smallest subfield F_p(omega) containing omega; omega = 0 gives the
  /// prime field.
  Subfield subfield_generated(const Scalar& omega) const;

  /// Degree of the minimal polynomial of a over F_p.
  std::size_t minimal_polynomial_degree(const Scalar& a) const;

  /// First element in canonical order whose multiplicative order is q - 1.
  Scalar primitive_element() const;

  /// "[a_0,...,a_{k-1}]" rendering for diagnostics.
  std::string to_string(const Scalar& a) const;

private:
  void check(const Scalar& a) const;

  Coeff p_ = 0;
  std::size_t k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<Coeff> modulus_;
};

/// Explicit subfield F_p(omega) of an ambient F_q: the element list is
/// closed under addition and multiplication, has size p^degree, and
/// contains 0, 1 and the generator.
struct Subfield {
  Scalar generator;
  std::size_t degree = 1;
  std::vector<Scalar> elements;  // sorted canonically

  std::uint64_t size() const { return elements.size(); }
  bool contains(const Scalar& a) const;
};

namespace fp {

// Polynomial helpers over the prime field F_p, used for modulus validation
// and reduction. Coefficients are little-endian (constant term first).

bool is_prime(Coeff p);
std::size_t poly_degree(const std::vector<Coeff>& f);
std::vector<Coeff> poly_mod(std::vector<Coeff> f, const std::vector<Coeff>& g,
                            Coeff p);
bool poly_is_irreducible(const std::vector<Coeff>& f, Coeff p);

}  // namespace fp

}  // namespace refinv

#endif
