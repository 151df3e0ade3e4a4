#include "mckay/modp.hpp"

#include <stdexcept>

#include "mckay/field.hpp"

namespace mckay::modp {

uint64_t powm(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invm(uint64_t a, uint64_t p) {
  if (a % p == 0) throw std::domain_error("modp: inverse of zero");
  return powm(a, p - 2, p);
}

uint64_t reduce(int64_t a, uint64_t p) {
  int64_t r = a % int64_t(p);
  return static_cast<uint64_t>(r < 0 ? r + int64_t(p) : r);
}

std::vector<size_t> rref(Mtx& m, uint64_t p) {
  std::vector<size_t> piv;
  if (m.empty()) return piv;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t s = r;
    while (s < rows && m[s][c] == 0) ++s;
    if (s == rows) continue;
    std::swap(m[s], m[r]);
    uint64_t inv = invm(m[r][c], p);
    for (size_t j = c; j < cols; ++j) m[r][j] = mulm(m[r][j], inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      uint64_t f = m[i][c];
      for (size_t j = c; j < cols; ++j)
        if (m[r][j]) m[i][j] = subm(m[i][j], mulm(f, m[r][j], p), p);
    }
    piv.push_back(c);
    ++r;
  }
  m.resize(r);
  return piv;
}

Mtx nullspace(Mtx a, size_t n, uint64_t p) {
  std::vector<size_t> piv = a.empty() ? std::vector<size_t>{} : rref(a, p);
  std::vector<int> is_piv(n, -1);
  for (size_t i = 0; i < piv.size(); ++i) is_piv[piv[i]] = static_cast<int>(i);
  Mtx basis;
  for (size_t f = 0; f < n; ++f) {
    if (is_piv[f] >= 0) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = subm(0, a[i][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec char_poly(Mtx a, uint64_t p) {
  size_t n = a.size();
  // reduce to upper Hessenberg form by similarity
  for (size_t m = 1; m + 1 < n; ++m) {
    size_t i = m;
    while (i < n && a[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(a[i], a[m]);
      for (size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][m]);
    }
    uint64_t inv = invm(a[m][m - 1], p);
    for (size_t r = m + 1; r < n; ++r) {
      uint64_t u = mulm(a[r][m - 1], inv, p);
      if (!u) continue;
      for (size_t c = 0; c < n; ++c) a[r][c] = subm(a[r][c], mulm(u, a[m][c], p), p);
      for (size_t c = 0; c < n; ++c) a[c][m] = addm(a[c][m], mulm(u, a[c][r], p), p);
    }
  }
  // recurrence on leading principal minors of the Hessenberg matrix
  std::vector<Vec> P(n + 1);
  P[0] = {1};
  for (size_t k = 1; k <= n; ++k) {
    Vec cur(k + 1, 0);
    // (x - a_kk) P_{k-1}
    const Vec& prev = P[k - 1];
    for (size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = addm(cur[i + 1], prev[i], p);
      cur[i] = subm(cur[i], mulm(a[k - 1][k - 1], prev[i], p), p);
    }
    uint64_t t = 1;
    for (size_t i = 1; i < k; ++i) {
      t = mulm(t, a[k - i][k - i - 1], p);
      uint64_t coef = mulm(t, a[k - i - 1][k - 1], p);
      if (!coef) continue;
      const Vec& q = P[k - i - 1];
      for (size_t j = 0; j < q.size(); ++j) cur[j] = subm(cur[j], mulm(coef, q[j], p), p);
    }
    P[k] = std::move(cur);
  }
  return P[n];
}

std::vector<uint64_t> roots(const Vec& f, uint64_t p) {
  std::vector<uint64_t> r;
  size_t deg = f.size() - 1;
  for (uint64_t x = 0; x < p && r.size() < deg; ++x) {
    uint64_t v = 0;
    for (size_t i = f.size(); i-- > 0;) v = addm(mulm(v, x, p), f[i], p);
    if (v == 0) r.push_back(x);
  }
  return r;
}

uint64_t prime_1_mod(uint64_t e, uint64_t bound) {
  uint64_t k = bound / e + 1;
  for (;; ++k) {
    uint64_t c = k * e + 1;
    if (c > bound && is_prime(c)) return c;
  }
}

}  // namespace mckay::modp
