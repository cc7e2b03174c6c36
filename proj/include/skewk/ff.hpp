#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "skewk/bigint.hpp"
#include "skewk/errors.hpp"

namespace skewk::ff {

inline constexpr std::uint64_t kDefaultMaxFieldSize = std::uint64_t(1) << 20;

bool is_prime(std::uint64_t n);

/// Smallest e >= 1 with p^e = 1 (mod m). Requires gcd(p, m) = 1.
std::uint64_t mult_order(std::uint64_t p, std::uint64_t m);

/// Largest v with l^v | n (n >= 1, l prime).
std::uint32_t l_valuation(const BigInt& n, std::uint64_t l);
std::uint32_t l_valuation(std::uint64_t n, std::uint64_t l);

class FieldDesc;
using Field = std::shared_ptr<const FieldDesc>;

/// Arithmetic context for one field, element representation is the discrete
/// log of the canonical generator ("lidx"), with q-1 as the zero sentinel.
/// All operations are table lookups for q <= 2^22; a schoolbook polynomial
/// path backs larger fields.
class FieldOps {
 public:
  using Idx = std::uint32_t;

  explicit FieldOps(const FieldDesc& fd);

  Idx zero() const { return zero_; }
  Idx one() const { return 0; }
  bool is_zero(Idx a) const { return a == zero_; }

  Idx add(Idx a, Idx b) const;
  Idx sub(Idx a, Idx b) const { return add(a, neg(b)); }
  Idx neg(Idx a) const;
  Idx mul(Idx a, Idx b) const {
    if (a == zero_ || b == zero_) return zero_;
    std::uint64_t s = std::uint64_t(a) + b;
    return Idx(s >= group_order_ ? s - group_order_ : s);
  }
  Idx inv(Idx a) const;
  Idx div(Idx a, Idx b) const { return mul(a, inv(b)); }
  Idx pow(Idx a, std::uint64_t e) const;
  Idx pow(Idx a, const BigInt& e) const;
  /// x -> x^(p^e)
  Idx frobenius(Idx a, std::uint64_t e) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Idx a) const;

  Idx from_packed(std::uint64_t packed) const;
  std::uint64_t to_packed(Idx a) const;
  Idx from_coeffs(const std::vector<std::uint32_t>& c) const;
  std::vector<std::uint32_t> to_coeffs(Idx a) const;
  Idx from_int(std::uint64_t n) const;  // n mod p as a field element

  /// Canonical generator of the multiplicative group (packed-order-first).
  Idx generator() const { return q_ > 2 ? 1 : 0; }

  std::uint64_t q() const { return q_; }
  std::uint64_t p() const { return p_; }
  std::uint32_t d() const { return d_; }

 private:
  friend class FieldDesc;
  const FieldDesc& fd_;
  std::uint64_t q_, p_;
  std::uint32_t d_;
  std::uint64_t group_order_;  // q - 1
  Idx zero_;
  bool tabled_;
  std::uint64_t gen_packed_;
  std::vector<std::uint32_t> exp_;   // lidx -> packed
  std::vector<std::uint32_t> log_;   // packed -> lidx
  std::vector<std::uint32_t> zech_;  // k -> log(g^k + 1), zero_ when g^k = -1

  // fallback (q > table limit): packed-value arithmetic
  std::uint64_t packed_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t packed_pow(std::uint64_t a, const BigInt& e) const;
};

/// A concrete finite field F_{p^d} with a deterministic modulus: the
/// lexicographically smallest monic irreducible polynomial of degree d,
/// coefficient list ordered from the constant term up.
class FieldDesc {
 public:
  std::uint64_t p;
  std::uint32_t d;
  std::vector<std::uint32_t> modulus;  // length d+1, monic
  std::uint64_t size;                  // p^d

  const FieldOps& ops() const;

 private:
  friend Field build_field(std::uint64_t, std::uint32_t, std::uint64_t);
  FieldDesc() = default;
  mutable std::once_flag ops_once_;
  mutable std::unique_ptr<FieldOps> ops_;
};

Field build_field(std::uint64_t p, std::uint32_t d,
                  std::uint64_t max_size = kDefaultMaxFieldSize);

struct FieldElement {
  Field field;
  std::vector<std::uint32_t> coeffs;  // length d, entries in [0, p)

  bool operator==(const FieldElement& o) const {
    return field->p == o.field->p && field->d == o.field->d && coeffs == o.coeffs;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

FieldElement make_element(const Field& f, const std::vector<std::uint32_t>& coeffs);
FieldElement zero_element(const Field& f);
FieldElement one_element(const Field& f);
/// The class of x in F_p[x]/(modulus); equals the scalar 0 when d = 1 and
/// the modulus is x itself.
FieldElement gen_element(const Field& f);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement field_pow(const FieldElement& a, const BigInt& e);

/// x^(p^e)
FieldElement frobenius_pow(const FieldElement& x, std::uint64_t e);

/// Field embedding determined by sending the generator of `small` to the
/// lexicographically first root of small.modulus in `big`.
class Embedding {
 public:
  Embedding(Field small, Field big, std::vector<FieldOps::Idx> gen_powers);

  FieldElement operator()(const FieldElement& x) const;
  FieldOps::Idx apply_idx(FieldOps::Idx x_small) const;

  const Field& small() const { return small_; }
  const Field& big() const { return big_; }

 private:
  Field small_, big_;
  std::vector<FieldOps::Idx> gen_powers_;  // images of 1, x, x^2, ... in big
};

Embedding embed(const Field& small, const Field& big);

/// Deterministic element of exact multiplicative order `order`
/// (requires order | q - 1).
FieldElement root_of_unity(const Field& f, std::uint64_t order);

}  // namespace skewk::ff
