#include "mckay/field.hpp"

#include <stdexcept>

namespace mckay {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder of f mod g over F_p, g monic
Poly poly_mod(Poly f, const Poly& g, uint32_t p) {
  trim(f);
  size_t dg = g.size() - 1;
  while (f.size() > dg) {
    uint32_t c = f.back();
    size_t shift = f.size() - 1 - dg;
    for (size_t i = 0; i <= dg; ++i)
      f[shift + i] = static_cast<uint32_t>((f[shift + i] + uint64_t(p - c) * g[i]) % p);
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
  return poly_mod(r, m, p);
}

Poly code_to_poly(uint32_t c, uint32_t p, uint32_t k) {
  Poly f(k, 0);
  for (uint32_t i = 0; i < k; ++i) {
    f[i] = c % p;
    c /= p;
  }
  trim(f);
  return f;
}

uint32_t poly_to_code(const Poly& f, uint32_t p) {
  uint32_t c = 0;
  for (size_t i = f.size(); i-- > 0;) c = c * p + f[i];
  return c;
}

}  // namespace

bool irreducible_mod_p(const Poly& f0, uint32_t p) {
  Poly f = f0;
  trim(f);
  if (f.size() < 2) return false;
  size_t n = f.size() - 1;
  if (n == 1) return true;
  // make monic
  uint32_t lead = f.back(), li = 1;
  for (uint32_t t = 1; t < p; ++t)
    if (uint64_t(lead) * t % p == 1) li = t;
  for (auto& c : f) c = static_cast<uint32_t>(uint64_t(c) * li % p);
  // trial division by all monic polynomials of degree 1..n/2
  for (size_t d = 1; 2 * d <= n; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t c = 0; c < count; ++c) {
      Poly g(d + 1, 0);
      uint64_t x = c;
      for (size_t i = 0; i < d; ++i) {
        g[i] = x % p;
        x /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field Field::make(uint32_t p, uint32_t k) {
  if (!is_prime(p)) throw std::invalid_argument("field: p is not prime");
  if (k < 1) throw std::invalid_argument("field: degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 20)) throw std::invalid_argument("field: q exceeds 2^20");
  }
  Field F;
  F.p_ = p;
  F.k_ = k;
  F.q_ = static_cast<uint32_t>(q);
  if (k == 1) {
    F.modulus_ = {0, 1};
  } else {
    uint64_t count = q;  // p^k choices for the lower coefficients
    for (uint64_t c = 0; c < count; ++c) {
      Poly g(k + 1, 0);
      uint64_t x = c;
      for (uint32_t i = 0; i < k; ++i) {
        g[i] = x % p;
        x /= p;
      }
      g[k] = 1;
      if (irreducible_mod_p(g, p)) {
        F.modulus_ = g;
        break;
      }
    }
  }
  // find a primitive element: least code whose order is q-1
  uint32_t n = F.q_ - 1;
  std::vector<uint32_t> primes;
  {
    uint32_t m = n;
    for (uint32_t d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        primes.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) primes.push_back(m);
  }
  auto powmod = [&](const Poly& a, uint64_t e) {
    Poly r{1}, b = a;
    while (e) {
      if (e & 1) r = poly_mulmod(r, b, F.modulus_, p);
      b = poly_mulmod(b, b, F.modulus_, p);
      e >>= 1;
    }
    return r;
  };
  uint32_t gen = 0;
  for (uint32_t c = 1; c < F.q_ && !gen; ++c) {
    Poly a = code_to_poly(c, p, k);
    bool ok = true;
    for (uint32_t r : primes) {
      Poly t = powmod(a, n / r);
      if (t.size() == 1 && t[0] == 1) {
        ok = false;
        break;
      }
    }
    if (ok) gen = c;
  }
  if (F.q_ == 2) gen = 1;
  F.exp_.assign(F.q_, 0);
  F.log_.assign(F.q_, 0);
  Poly g = code_to_poly(gen, p, k), cur{1};
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t c = poly_to_code(cur, p);
    F.exp_[i] = c;
    F.log_[c] = i;
    cur = poly_mulmod(cur, g, F.modulus_, p);
  }
  F.exp_[n] = 1;
  return F;
}

uint32_t Field::add_digits(uint32_t a, uint32_t b) const {
  uint32_t r = 0, base = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * base;
    base *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

uint32_t Field::neg(uint32_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  uint32_t r = 0, base = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * base;
    base *= p_;
    a /= p_;
  }
  return r;
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("field: inverse of zero");
  uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

uint32_t Field::pow(uint32_t a, int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw std::domain_error("field: negative power of zero");
    return 0;
  }
  int64_t n = q_ - 1;
  int64_t s = (int64_t(log_[a]) * (e % n)) % n;
  if (s < 0) s += n;
  return exp_[s];
}

uint32_t Field::from_int(int64_t n) const {
  int64_t r = n % int64_t(p_);
  if (r < 0) r += p_;
  return static_cast<uint32_t>(r);  // prime field codes coincide with residues
}

uint32_t Field::root_of_unity(uint32_t n) const {
  if (n == 0 || (q_ - 1) % n != 0) throw std::invalid_argument("field: no primitive root of that order");
  return exp_[(q_ - 1) / n];
}

uint32_t Field::mult_order(uint32_t a) const {
  if (a == 0) return 0;
  uint32_t n = q_ - 1, l = log_[a];
  uint32_t g = n, x = l;
  while (x) {
    uint32_t t = g % x;
    g = x;
    x = t;
  }
  return n / g;
}

std::string Field::name() const {
  return "F" + std::to_string(q_);
}

}  // namespace mckay
