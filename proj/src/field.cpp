#include "fg/field.hpp"

#include "fg/error.hpp"

#include <algorithm>
#include <string>

namespace fg {

namespace {

// Dense polynomials over GF(p), coefficient i of x^i; trailing zeros trimmed.
using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  unsigned r = 1, b = a % p, k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const unsigned lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    unsigned c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, unsigned long long k, const Poly& m, unsigned p) {
  Poly r{1};
  base = poly_mod(base, m, p);
  while (k) {
    if (k & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly sub_x(Poly a, unsigned p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> f;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

Poly to_poly(Elem a, unsigned p) {
  Poly r;
  while (a) {
    r.push_back(a % p);
    a /= p;
  }
  return r;
}

Elem from_poly(const Poly& a, unsigned p) {
  Elem r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * p + a[i];
  return r;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool split_prime_power(unsigned q, unsigned& p, unsigned& e) {
  if (q < 2) return false;
  unsigned d = 2;
  while (q % d != 0) ++d;
  p = d;
  e = 0;
  while (q % d == 0) {
    q /= d;
    ++e;
  }
  return q == 1;
}

bool is_irreducible(const std::vector<unsigned>& monic, unsigned p) {
  Poly f(monic);
  trim(f);
  const std::size_t e = f.size() - 1;
  if (e == 1) return true;
  if (e <= 3) {
    for (unsigned x = 0; x < p; ++x) {
      unsigned v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  // Rabin: x^{p^e} = x mod f and gcd(x^{p^{e/l}} - x, f) = 1 for primes l | e.
  const Poly x{0, 1};
  auto frob = [&](unsigned times) {
    Poly r = x;
    for (unsigned i = 0; i < times; ++i) r = poly_powmod(r, p, f, p);
    return r;
  };
  if (sub_x(frob(static_cast<unsigned>(e)), p).size() != 0) return false;
  for (unsigned l : prime_factors(static_cast<unsigned>(e))) {
    Poly g = poly_gcd(f, sub_x(frob(static_cast<unsigned>(e) / l), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Field::Field(unsigned p, unsigned e, std::vector<unsigned> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < e; ++i) q_ *= p;
  add_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    for (Elem b = 0; b < q_; ++b) {
      Elem r = 0, place = 1, x = a, y = b;
      for (unsigned i = 0; i < e; ++i) {
        r += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      add_[a * q_ + b] = static_cast<std::uint16_t>(r);
    }
    Elem r = 0, place = 1, x = a;
    for (unsigned i = 0; i < e; ++i) {
      r += ((p - x % p) % p) * place;
      x /= p;
      place *= p;
    }
    neg_[a] = static_cast<std::uint16_t>(r);
  }

  // Multiplicative structure from the least primitive element.
  const Poly m(modulus_.begin(), modulus_.end());
  exp_.assign(2 * (q_ - 1) + 1, 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_[0] = exp_[1] = exp_[2] = 1;
    return;
  }
  for (Elem g = 2; g < q_; ++g) {
    Poly gp = to_poly(g, p);
    Poly cur{1};
    std::vector<char> seen(q_, 0);
    unsigned order = 0;
    do {
      Elem c = from_poly(cur, p);
      if (seen[c]) break;
      seen[c] = 1;
      exp_[order++] = static_cast<std::uint16_t>(c);
      cur = poly_mulmod(cur, gp, m, p);
    } while (order < q_ - 1);
    if (order == q_ - 1 && from_poly(cur, p) == 1) break;
  }
  for (unsigned i = 0; i < q_ - 1; ++i) {
    log_[exp_[i]] = i;
    exp_[i + q_ - 1] = exp_[i];
  }
}

Elem Field::inv(Elem a) const {
  require(a != 0, Errc::DivisionByZero, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t k) const noexcept {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1)];
}

unsigned Field::sqrt_order() const {
  require(has_conjugation(), Errc::NotSquareOrder,
          "order " + std::to_string(q_) + " is not an even power of " + std::to_string(p_));
  unsigned s = 1;
  for (unsigned i = 0; i < e_ / 2; ++i) s *= p_;
  return s;
}

Elem Field::conjugate(Elem a) const { return pow(a, sqrt_order()); }

std::vector<unsigned> Field::coefficients(Elem a) const {
  std::vector<unsigned> c(e_, 0);
  for (unsigned i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

FieldPtr make_field(unsigned p, unsigned e) {
  require(p >= 2 && is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
  require(e >= 1, Errc::Precondition, "extension degree must be >= 1");
  unsigned long long q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    require(q <= Field::kMaxOrder, Errc::Unsupported,
            "field order " + std::to_string(p) + "^" + std::to_string(e) + " exceeds 1024");
  }
  std::vector<unsigned> modulus(e + 1, 0);
  modulus[e] = 1;
  if (e > 1) {
    bool found = false;
    for (unsigned code = 0; code < q && !found; ++code) {
      unsigned c = code;
      for (unsigned i = 0; i < e; ++i) {
        modulus[i] = c % p;
        c /= p;
      }
      found = is_irreducible(modulus, p);
    }
    require(found, Errc::Unsupported, "no irreducible modulus found");
  }
  return FieldPtr(new Field(p, e, std::move(modulus)));
}

FieldPtr make_field_of_order(unsigned q) {
  unsigned p = 0, e = 0;
  require(split_prime_power(q, p, e), Errc::NotPrime, std::to_string(q) + " is not a prime power");
  return make_field(p, e);
}

}  // namespace fg
