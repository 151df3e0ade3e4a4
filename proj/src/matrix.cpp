#include "mckay/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace mckay {

Mat identity(uint32_t n) {
  Mat m(n);
  for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat from_ints(const Field& F, const std::vector<std::vector<int64_t>>& rows) {
  Mat m(static_cast<uint32_t>(rows.size()));
  for (uint32_t i = 0; i < m.n; ++i) {
    if (rows[i].size() != m.n) throw std::invalid_argument("from_ints: not square");
    for (uint32_t j = 0; j < m.n; ++j) m.at(i, j) = F.from_int(rows[i][j]);
  }
  return m;
}

Mat from_ints(const Field& F, std::initializer_list<std::initializer_list<int64_t>> rows) {
  std::vector<std::vector<int64_t>> r;
  for (auto& row : rows) r.emplace_back(row);
  return from_ints(F, r);
}

Mat diagonal(const std::vector<uint32_t>& d) {
  Mat m(static_cast<uint32_t>(d.size()));
  for (uint32_t i = 0; i < m.n; ++i) m.at(i, i) = d[i];
  return m;
}

Mat mul(const Field& F, const Mat& a, const Mat& b) {
  uint32_t n = a.n;
  Mat c(n);
  if (F.k() == 1) {
    uint64_t p = F.p();
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) {
        uint64_t s = 0;
        for (uint32_t t = 0; t < n; ++t) {
          s += uint64_t(a.e[size_t(i) * n + t]) * b.e[size_t(t) * n + j];
          if (s >= (uint64_t(1) << 62)) s %= p;
        }
        c.e[size_t(i) * n + j] = static_cast<uint32_t>(s % p);
      }
    return c;
  }
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t t = 0; t < n; ++t) {
      uint32_t x = a.e[size_t(i) * n + t];
      if (!x) continue;
      for (uint32_t j = 0; j < n; ++j) {
        uint32_t y = b.e[size_t(t) * n + j];
        if (y) c.e[size_t(i) * n + j] = F.add(c.e[size_t(i) * n + j], F.mul(x, y));
      }
    }
  return c;
}

namespace {

// Gaussian elimination on an augmented system; returns rank and det.
struct Elim {
  uint32_t rank = 0;
  uint32_t det = 1;
};

Elim eliminate(const Field& F, Mat& a, Mat* aug) {
  uint32_t n = a.n;
  Elim r;
  uint32_t row = 0;
  for (uint32_t col = 0; col < n && row < n; ++col) {
    uint32_t piv = row;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) {
      r.det = 0;
      continue;
    }
    if (piv != row) {
      for (uint32_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(row, j));
      if (aug)
        for (uint32_t j = 0; j < n; ++j) std::swap(aug->at(piv, j), aug->at(row, j));
      r.det = F.neg(r.det);
    }
    uint32_t pv = a.at(row, col);
    r.det = F.mul(r.det, pv);
    uint32_t pinv = F.inv(pv);
    for (uint32_t j = 0; j < n; ++j) a.at(row, j) = F.mul(a.at(row, j), pinv);
    if (aug)
      for (uint32_t j = 0; j < n; ++j) aug->at(row, j) = F.mul(aug->at(row, j), pinv);
    for (uint32_t i = 0; i < n; ++i) {
      if (i == row) continue;
      uint32_t f = a.at(i, col);
      if (!f) continue;
      uint32_t nf = F.neg(f);
      for (uint32_t j = 0; j < n; ++j) a.at(i, j) = F.add(a.at(i, j), F.mul(nf, a.at(row, j)));
      if (aug)
        for (uint32_t j = 0; j < n; ++j) aug->at(i, j) = F.add(aug->at(i, j), F.mul(nf, aug->at(row, j)));
    }
    ++row;
  }
  r.rank = row;
  if (row < n) r.det = 0;
  return r;
}

}  // namespace

Mat inverse(const Field& F, const Mat& a) {
  Mat w = a, inv = identity(a.n);
  Elim r = eliminate(F, w, &inv);
  if (r.rank != a.n) throw std::domain_error("inverse: singular matrix");
  return inv;
}

uint32_t det(const Field& F, const Mat& a) {
  Mat w = a;
  return eliminate(F, w, nullptr).det;
}

uint32_t rank(const Field& F, Mat a) {
  return eliminate(F, a, nullptr).rank;
}

Mat transpose(const Mat& a) {
  Mat t(a.n);
  for (uint32_t i = 0; i < a.n; ++i)
    for (uint32_t j = 0; j < a.n; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

Mat power(const Field& F, const Mat& a, int64_t e) {
  Mat b = e < 0 ? inverse(F, a) : a;
  if (e < 0) e = -e;
  Mat r = identity(a.n);
  while (e) {
    if (e & 1) r = mul(F, r, b);
    b = mul(F, b, b);
    e >>= 1;
  }
  return r;
}

Mat frobenius(const Field& F, const Mat& a, uint32_t j) {
  Mat b = a;
  int64_t e = 1;
  for (uint32_t i = 0; i < j; ++i) e *= F.p();
  for (auto& x : b.e) x = F.pow(x, e);
  return b;
}

bool is_diagonal(const Mat& a) {
  for (uint32_t i = 0; i < a.n; ++i)
    for (uint32_t j = 0; j < a.n; ++j)
      if (i != j && a.at(i, j)) return false;
  return true;
}

uint32_t fixed_dim(const Field& F, const Mat& a) {
  Mat b = a;
  for (uint32_t i = 0; i < a.n; ++i) b.at(i, i) = F.sub(b.at(i, i), 1);
  return a.n - rank(F, b);
}

std::string to_string(const Mat& a) {
  std::ostringstream os;
  os << "[";
  for (uint32_t i = 0; i < a.n; ++i) {
    os << (i ? ",[" : "[");
    for (uint32_t j = 0; j < a.n; ++j) os << (j ? "," : "") << a.at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat restrict_scalars(const Field& F, const Field& Fp, const Mat& g) {
  uint32_t k = F.k(), n = g.n, p = F.p();
  Mat r(n * k);
  // column (j, s): image of x^s e_j ; entry (i, t) is digit t of g_ij * x^s
  std::vector<uint32_t> xs(k);
  uint32_t base = 1;
  for (uint32_t s = 0; s < k; ++s) {
    xs[s] = base;
    base *= p;
  }
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      for (uint32_t s = 0; s < k; ++s) {
        uint32_t v = F.mul(g.at(i, j), xs[s]);
        for (uint32_t t = 0; t < k; ++t) {
          r.at(i * k + t, j * k + s) = Fp.from_int(v % p);
          v /= p;
        }
      }
  return r;
}

Mat frobenius_linear(const Field& F, const Field& Fp, uint32_t n, uint32_t j) {
  uint32_t k = F.k(), p = F.p();
  int64_t e = 1;
  for (uint32_t i = 0; i < j; ++i) e *= p;
  Mat r(n * k);
  uint32_t base = 1;
  for (uint32_t s = 0; s < k; ++s) {
    uint32_t v = F.pow(base, e);
    for (uint32_t i = 0; i < n; ++i) {
      uint32_t w = v;
      for (uint32_t t = 0; t < k; ++t) {
        r.at(i * k + t, i * k + s) = Fp.from_int(w % p);
        w /= p;
      }
    }
    base *= p;
  }
  return r;
}

}  // namespace mckay
