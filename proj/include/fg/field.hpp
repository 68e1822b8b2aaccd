#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace fg {

/// Field elements are integers in [0, q) whose base-p digits are the
/// coefficients of a polynomial over GF(p), lowest degree first. The integer
/// order is the canonical order used everywhere downstream.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^e) with an explicit monic irreducible modulus.
///
/// The modulus is the lexicographically least monic irreducible of degree e
/// (coefficients compared from x^{e-1} down to the constant term), so every
/// build of the same field produces identical element labels. Orders above
/// 1024 are rejected. Instances are immutable and safe to share.
class Field {
 public:
  static constexpr unsigned kMaxOrder = 1024;

  unsigned p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  unsigned q() const noexcept { return q_; }

  /// Modulus coefficients c_0..c_e with c_e = 1.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws DivisionByZero for a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const noexcept;

  /// A generator of the multiplicative group.
  Elem primitive() const noexcept { return exp_[1]; }

  /// True when q = s^2 for a power s of p (even extension degree).
  bool has_conjugation() const noexcept { return e_ % 2 == 0; }
  /// s with q = s^2; throws NotSquareOrder.
  unsigned sqrt_order() const;
  /// a^s, the involutory Frobenius automorphism of a square-order field.
  Elem conjugate(Elem a) const;

  /// Base-p digits of a (length e).
  std::vector<unsigned> coefficients(Elem a) const;

 private:
  friend FieldPtr make_field(unsigned p, unsigned e);
  Field(unsigned p, unsigned e, std::vector<unsigned> modulus);

  unsigned p_, e_, q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
};

/// Builds GF(p^e). Throws NotPrime when p is composite and Unsupported when
/// p^e exceeds Field::kMaxOrder.
FieldPtr make_field(unsigned p, unsigned e);

/// Splits q into (p, e) with q = p^e; returns false when q is not a prime power.
bool split_prime_power(unsigned q, unsigned& p, unsigned& e);

/// make_field for an order given as a prime power; throws NotPrime otherwise.
FieldPtr make_field_of_order(unsigned q);

bool is_prime(unsigned n);

/// True when the monic polynomial with coefficients c_0..c_e is irreducible
/// over GF(p): root test for e <= 3, Rabin's gcd-with-Frobenius test otherwise.
bool is_irreducible(const std::vector<unsigned>& monic, unsigned p);

}  // namespace fg
