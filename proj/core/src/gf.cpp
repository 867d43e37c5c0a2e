#include "refinv/gf.hpp"

#include <algorithm>
#include <set>

namespace refinv {

namespace fp {

bool is_prime(Coeff p) {
  if (p < 2) return false;
  for (Coeff d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t poly_degree(const std::vector<Coeff>& f) {
  std::size_t d = f.size();
  while (d > 0 && f[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;
}

static void poly_trim(std::vector<Coeff>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<Coeff> poly_mod(std::vector<Coeff> f, const std::vector<Coeff>& g,
                            Coeff p) {
  poly_trim(f);
  std::vector<Coeff> gg = g;
  poly_trim(gg);
  if (gg.empty()) throw InputError("poly_mod: division by zero polynomial");
  const std::size_t dg = gg.size() - 1;
  // make divisor monic
  Coeff lead = gg.back();
  Coeff lead_inv = 1;
  if (lead != 1) {
    // Fermat inverse mod p
    Coeff base = lead, e = p - 2, acc = 1;
    while (e) {
      if (e & 1) acc = static_cast<Coeff>((std::uint64_t)acc * base % p);
      base = static_cast<Coeff>((std::uint64_t)base * base % p);
      e >>= 1;
    }
    lead_inv = acc;
  }
  while (f.size() > dg) {
    Coeff c = static_cast<Coeff>((std::uint64_t)f.back() * lead_inv % p);
    std::size_t shift = f.size() - 1 - dg;
    if (c != 0) {
      for (std::size_t i = 0; i <= dg; ++i) {
        std::uint64_t sub = (std::uint64_t)c * gg[i] % p;
        f[shift + i] = static_cast<Coeff>((f[shift + i] + p - sub) % p);
      }
    }
    f.pop_back();
    poly_trim(f);
    if (f.size() <= dg) break;
  }
  return f;
}

bool poly_is_irreducible(const std::vector<Coeff>& f, Coeff p) {
  const std::size_t d = poly_degree(f);
  if (d == 0) return false;
  if (d == 1) return true;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (std::size_t e = 1; 2 * e <= d; ++e) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<Coeff> g(e + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < e; ++i) {
        g[i] = static_cast<Coeff>(v % p);
        v /= p;
      }
      g[e] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace fp

FieldSpec::FieldSpec(Coeff p, std::vector<Coeff> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (!fp::is_prime(p_)) throw InputError("field characteristic must be prime");
  if (modulus_.size() < 2) throw InputError("modulus must have degree >= 1");
  for (auto& c : modulus_) c %= p_;
  if (modulus_.back() != 1) throw InputError("modulus must be monic");
  if (fp::poly_degree(modulus_) + 1 != modulus_.size())
    throw InputError("modulus leading coefficient vanished mod p");
  k_ = modulus_.size() - 1;
  if (k_ > 1 && !fp::poly_is_irreducible(modulus_, p_))
    throw InputError("modulus is reducible over F_p");
  q_ = 1;
  for (std::size_t i = 0; i < k_; ++i) {
    q_ *= p_;
    if (q_ > (1ull << 32)) throw InputError("field too large for this toolkit");
  }
}

FieldSpec FieldSpec::prime(Coeff p) { return FieldSpec(p, {0, 1}); }

FieldSpec FieldSpec::builtin(std::uint64_t q) {
  static const std::uint64_t table[] = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27};
  if (std::find(std::begin(table), std::end(table), q) == std::end(table))
    throw InputError("no builtin field of order " + std::to_string(q));
  Coeff p = 0;
  for (Coeff c = 2; c <= q; ++c) {
    if (q % c == 0) {
      p = c;
      break;
    }
  }
  std::size_t k = 0;
  std::uint64_t v = q;
  while (v > 1) {
    v /= p;
    ++k;
  }
  if (k == 1) return prime(p);
  // First irreducible monic modulus in lexicographic order on the
  // serialized coefficient list [a_0,...,a_{k-1}].
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Coeff> m(k + 1, 0);
    std::uint64_t v2 = idx;
    for (std::size_t i = k; i-- > 0;) {
      m[i] = static_cast<Coeff>(v2 % p);
      v2 /= p;
    }
    m[k] = 1;
    if (fp::poly_is_irreducible(m, p)) return FieldSpec(p, m);
  }
  throw InternalError("no irreducible modulus found");  // unreachable
}

void FieldSpec::check(const Scalar& a) const {
  if (a.coeffs.size() != k_)
    throw InputError("scalar does not belong to this field (length " +
                     std::to_string(a.coeffs.size()) + ", expected " +
                     std::to_string(k_) + ")");
}

Scalar FieldSpec::zero() const { return Scalar{std::vector<Coeff>(k_, 0)}; }

Scalar FieldSpec::one() const {
  Scalar s{std::vector<Coeff>(k_, 0)};
  s.coeffs[0] = 1;
  return s;
}

Scalar FieldSpec::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  Scalar s{std::vector<Coeff>(k_, 0)};
  s.coeffs[0] = static_cast<Coeff>(r);
  return s;
}

Scalar FieldSpec::from_coeffs(std::vector<std::int64_t> coeffs) const {
  if (coeffs.size() > k_)
    throw InputError("coefficient vector longer than extension degree");
  Scalar s{std::vector<Coeff>(k_, 0)};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t r = coeffs[i] % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    s.coeffs[i] = static_cast<Coeff>(r);
  }
  return s;
}

Scalar FieldSpec::element(std::uint64_t index) const {
  Scalar s{std::vector<Coeff>(k_, 0)};
  for (std::size_t i = 0; i < k_; ++i) {
    s.coeffs[i] = static_cast<Coeff>(index % p_);
    index /= p_;
  }
  if (index != 0) throw InputError("element index out of range");
  return s;
}

std::vector<Scalar> FieldSpec::elements() const {
  std::vector<Scalar> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(element(i));
  std::sort(out.begin(), out.end());
  return out;
}

bool FieldSpec::is_zero(const Scalar& a) const {
  check(a);
  return std::all_of(a.coeffs.begin(), a.coeffs.end(),
                     [](Coeff c) { return c == 0; });
}

bool FieldSpec::is_one(const Scalar& a) const { return a == one(); }

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  Scalar r = a;
  for (std::size_t i = 0; i < k_; ++i)
    r.coeffs[i] = (r.coeffs[i] + b.coeffs[i]) % p_;
  return r;
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  Scalar r = a;
  for (std::size_t i = 0; i < k_; ++i)
    r.coeffs[i] = (r.coeffs[i] + p_ - b.coeffs[i]) % p_;
  return r;
}

Scalar FieldSpec::neg(const Scalar& a) const { return sub(zero(), a); }

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  std::vector<Coeff> prod(2 * k_ - 1, 0);
  for (std::size_t i = 0; i < k_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<Coeff>(
          (prod[i + j] + (std::uint64_t)a.coeffs[i] * b.coeffs[j]) % p_);
    }
  }
  std::vector<Coeff> red = fp::poly_mod(prod, modulus_, p_);
  red.resize(k_, 0);
  return Scalar{std::move(red)};
}

Scalar FieldSpec::pow(const Scalar& a, std::uint64_t e) const {
  check(a);
  Scalar base = a;
  Scalar acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (is_zero(a)) throw InputError("inversion of zero in F_q");
  return pow(a, q_ - 2);
}

std::uint64_t FieldSpec::multiplicative_order(const Scalar& a) const {
  if (is_zero(a)) throw InputError("multiplicative order of zero is undefined");
  Scalar acc = a;
  std::uint64_t e = 1;
  while (!is_one(acc)) {
    acc = mul(acc, a);
    ++e;
    if (e > q_) throw InternalError("multiplicative order exceeded q");
  }
  return e;
}

std::size_t FieldSpec::minimal_polynomial_degree(const Scalar& a) const {
  check(a);
  // Linear dependence of 1, a, a^2, ... over F_p via incremental
  // elimination on the power-basis coordinates.
  std::vector<std::vector<Coeff>> rows;  // reduced rows, pivot positions
  std::vector<std::size_t> pivots;
  Scalar power = one();
  for (std::size_t d = 0;; ++d) {
    std::vector<Coeff> v(power.coeffs.begin(), power.coeffs.end());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Coeff c = v[pivots[r]];
      if (c == 0) continue;
      for (std::size_t i = 0; i < k_; ++i)
        v[i] = static_cast<Coeff>(
            (v[i] + (std::uint64_t)(p_ - c) * rows[r][i]) % p_);
    }
    std::size_t piv = k_;
    for (std::size_t i = 0; i < k_; ++i)
      if (v[i] != 0) {
        piv = i;
        break;
      }
    if (piv == k_) return d;  // a^d dependent on lower powers
    // normalize pivot to 1
    Coeff c = v[piv], e = p_ - 2, accv = 1, base = c;
    while (e) {
      if (e & 1) accv = static_cast<Coeff>((std::uint64_t)accv * base % p_);
      base = static_cast<Coeff>((std::uint64_t)base * base % p_);
      e >>= 1;
    }
    for (auto& x : v) x = static_cast<Coeff>((std::uint64_t)x * accv % p_);
    rows.push_back(v);
    pivots.push_back(piv);
    power = mul(power, a);
    if (d > k_) throw InternalError("minimal polynomial degree exceeded k");
  }
}

Subfield FieldSpec::subfield_generated(const Scalar& omega) const {
  check(omega);
  std::size_t d = minimal_polynomial_degree(omega);
  if (d == 0) d = 1;  // omega = 0 generates the prime field
  // All F_p-combinations of omega^0..omega^{d-1}.
  std::vector<Scalar> powers;
  Scalar acc = one();
  for (std::size_t i = 0; i < d; ++i) {
    powers.push_back(acc);
    acc = mul(acc, omega);
  }
  std::set<Scalar> elems;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= p_;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    Scalar s = zero();
    for (std::size_t i = 0; i < d; ++i) {
      Coeff c = static_cast<Coeff>(v % p_);
      v /= p_;
      if (c != 0) s = add(s, mul(from_int(c), powers[i]));
    }
    elems.insert(s);
  }
  if (elems.size() != total)
    throw InternalError("subfield closure has wrong size");
  Subfield sub;
  sub.generator = omega;
  sub.degree = d;
  sub.elements.assign(elems.begin(), elems.end());
  return sub;
}

Scalar FieldSpec::primitive_element() const {
  for (const Scalar& a : elements()) {
    if (is_zero(a)) continue;
    if (multiplicative_order(a) == q_ - 1) return a;
  }
  throw InternalError("no primitive element found");  // unreachable
}

std::string FieldSpec::to_string(const Scalar& a) const {
  check(a);
  std::string s = "[";
  for (std::size_t i = 0; i < k_; ++i) {
    if (i) s += ",";
    s += std::to_string(a.coeffs[i]);
  }
  return s + "]";
}

bool Subfield::contains(const Scalar& a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

}  // namespace refinv
