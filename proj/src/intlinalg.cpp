#include "mckay/intlinalg.hpp"

#include <sstream>
#include <stdexcept>

namespace mckay {

IntMat IntMat::identity(size_t n) {
  IntMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from(const std::vector<std::vector<int64_t>>& rows) {
  size_t r = rows.size(), c = r ? rows[0].size() : 0;
  IntMat m(r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("IntMat: ragged rows");
    for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("IntMat: shape mismatch");
  IntMat c(a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t t = 0; t < a.cols; ++t) {
      const BigInt& x = a.at(i, t);
      if (x == 0) continue;
      for (size_t j = 0; j < b.cols; ++j) c.at(i, j) += x * b.at(t, j);
    }
  return c;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
  IntMat c = a;
  for (size_t i = 0; i < c.e.size(); ++i) c.e[i] -= b.e[i];
  return c;
}

IntMat scaled(const IntMat& a, const BigInt& s) {
  IntMat c = a;
  for (auto& x : c.e) x *= s;
  return c;
}

BigInt determinant(const IntMat& a0) {
  if (a0.rows != a0.cols) throw std::invalid_argument("determinant: not square");
  size_t n = a0.rows;
  if (n == 0) return 1;
  IntMat a = a0;
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t s = k + 1;
      while (s < n && a.at(s, k) == 0) ++s;
      if (s == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(s, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntMat& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntMat& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row a += f * row b
void add_row(IntMat& m, size_t a, size_t b, const BigInt& f) {
  for (size_t j = 0; j < m.cols; ++j) m.at(a, j) += f * m.at(b, j);
}
void add_col(IntMat& m, size_t a, size_t b, const BigInt& f) {
  for (size_t i = 0; i < m.rows; ++i) m.at(i, a) += f * m.at(i, b);
}
void neg_row(IntMat& m, size_t a) {
  for (size_t j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SnfResult smith_normal_form(const IntMat& a0) {
  IntMat a = a0;
  size_t m = a.rows, n = a.cols;
  IntMat L = IntMat::identity(m), R = IntMat::identity(n);
  size_t t = 0;
  while (t < m && t < n) {
    // pivot: smallest nonzero absolute value in the remaining block
    bool found = false;
    size_t pi = t, pj = t;
    BigInt best;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (a.at(i, j) != 0) {
          BigInt v = abs(a.at(i, j));
          if (!found || v < best) {
            best = v;
            pi = i;
            pj = j;
            found = true;
          }
        }
    if (!found) break;
    swap_rows(a, t, pi);
    swap_rows(L, t, pi);
    swap_cols(a, t, pj);
    swap_cols(R, t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (a.at(i, t) == 0) continue;
        BigInt q = floor_div(a.at(i, t), a.at(t, t));
        add_row(a, i, t, -q);
        add_row(L, i, t, -q);
        if (a.at(i, t) != 0) {
          swap_rows(a, t, i);
          swap_rows(L, t, i);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (a.at(t, j) == 0) continue;
        BigInt q = floor_div(a.at(t, j), a.at(t, t));
        add_col(a, j, t, -q);
        add_col(R, j, t, -q);
        if (a.at(t, j) != 0) {
          swap_cols(a, t, j);
          swap_cols(R, t, j);
          clean = false;
        }
      }
      if (clean) {
        // divisibility: pivot must divide the rest of the block
        for (size_t i = t + 1; i < m && clean; ++i)
          for (size_t j = t + 1; j < n; ++j)
            if (a.at(i, j) % a.at(t, t) != 0) {
              add_row(a, t, i, 1);
              add_row(L, t, i, 1);
              clean = false;
              break;
            }
      }
    }
    if (a.at(t, t) < 0) {
      neg_row(a, t);
      neg_row(L, t);
    }
    ++t;
  }
  SnfResult res;
  for (size_t i = 0; i < std::min(m, n); ++i) res.diagonal.push_back(a.at(i, i));
  res.left = std::move(L);
  res.right = std::move(R);
  return res;
}

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

namespace {
bool poly_divmod(IntPoly a, const IntPoly& b0, IntPoly& q) {
  IntPoly b = b0;
  trim(a);
  trim(b);
  if (b.empty()) throw std::domain_error("poly division by zero");
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const BigInt& lead = b.back();
  while (a.size() >= b.size()) {
    if (a.back() % lead != 0) return false;
    BigInt c = a.back() / lead;
    size_t s = a.size() - b.size();
    q[s] = c;
    for (size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
    trim(a);
  }
  return a.empty();
}
}  // namespace

IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!poly_divmod(a, b, q)) throw std::domain_error("poly_div_exact: not divisible");
  trim(q);
  return q;
}

bool poly_divides(const IntPoly& b, const IntPoly& a) {
  IntPoly q;
  return poly_divmod(a, b, q);
}

BigInt poly_eval(const IntPoly& f, const BigInt& x) {
  BigInt r = 0;
  for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

std::string poly_to_string(const IntPoly& f) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    BigInt c = f[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    BigInt ac = abs(c);
    if (ac != 1 || i == 0) os << ac;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

IntPoly char_poly(const IntMat& a) {
  if (a.rows != a.cols) throw std::invalid_argument("char_poly: not square");
  size_t n = a.rows;
  // c[n] = 1; M_0 = 0; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
  IntPoly c(n + 1);
  c[n] = 1;
  IntMat M(n, n);
  for (size_t k = 1; k <= n; ++k) {
    IntMat AM = a * M;
    for (size_t i = 0; i < n; ++i) AM.at(i, i) += c[n - k + 1];
    M = AM;
    IntMat AMk = a * M;
    BigInt tr = 0;
    for (size_t i = 0; i < n; ++i) tr += AMk.at(i, i);
    if (tr % BigInt(k) != 0) throw std::logic_error("char_poly: inexact division");
    c[n - k] = -tr / BigInt(k);
  }
  return c;
}

IntMat poly_eval(const IntPoly& f, const IntMat& a) {
  size_t n = a.rows;
  IntMat r(n, n);
  for (size_t i = f.size(); i-- > 0;) {
    r = r * a;
    for (size_t j = 0; j < n; ++j) r.at(j, j) += f[i];
  }
  return r;
}

IntPoly cyclotomic(uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n = 0");
  IntPoly f(n + 1);
  f[0] = -1;
  f[n] = 1;
  for (uint32_t d = 1; d < n; ++d)
    if (n % d == 0) f = poly_div_exact(f, cyclotomic(d));
  return f;
}

uint32_t cyclotomic_multiplicity(IntPoly f, uint32_t d) {
  trim(f);
  if (f.empty()) throw std::invalid_argument("cyclotomic_multiplicity: zero polynomial");
  IntPoly phi = cyclotomic(d), q;
  uint32_t m = 0;
  while (poly_divmod(f, phi, q)) {
    trim(q);
    f = q;
    ++m;
  }
  return m;
}

bool cyclotomic_factor(IntPoly f, std::vector<std::pair<uint32_t, uint32_t>>& out, uint32_t max_d) {
  out.clear();
  trim(f);
  if (f.empty()) return false;
  while (f.size() > 1 && f[0] == 0) f.erase(f.begin());
  for (uint32_t d = 1; d <= max_d && f.size() > 1; ++d) {
    IntPoly phi = cyclotomic(d), q;
    uint32_t m = 0;
    while (f.size() > 1 && poly_divmod(f, phi, q)) {
      trim(q);
      f = q;
      ++m;
    }
    if (m) out.emplace_back(d, m);
  }
  return f.size() == 1;
}

}  // namespace mckay
