#include "mckay/symbols.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mckay {

int Symbol::rank() const {
  int sum = 0;
  for (int x : top) sum += x;
  for (int x : bottom) sum += x;
  int k = static_cast<int>(top.size() + bottom.size()) - 1;
  return sum - (k * k) / 4;
}

std::string Symbol::to_string() const {
  auto row = [](const std::vector<int>& r) {
    std::string s = "{";
    for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + "}";
  };
  return "(" + row(top) + " / " + row(bottom) + ")";
}

Symbol shift(const Symbol& s) {
  Symbol r;
  r.top.push_back(0);
  r.bottom.push_back(0);
  for (int x : s.top) r.top.push_back(x + 1);
  for (int x : s.bottom) r.bottom.push_back(x + 1);
  return r;
}

Symbol canonical(Symbol s) {
  for (auto* row : {&s.top, &s.bottom})
    for (size_t i = 1; i < row->size(); ++i)
      if ((*row)[i] <= (*row)[i - 1]) throw std::invalid_argument("symbol rows must be strictly increasing");
  while (!s.top.empty() && !s.bottom.empty() && s.top[0] == 0 && s.bottom[0] == 0) {
    s.top.erase(s.top.begin());
    s.bottom.erase(s.bottom.begin());
    for (int& x : s.top) --x;
    for (int& x : s.bottom) --x;
  }
  if (s.defect() < 0 || (s.defect() == 0 && s.top < s.bottom)) std::swap(s.top, s.bottom);
  return s;
}

namespace {

// strictly increasing sequences of length len, entries >= lo, with the given sum
void distinct_parts(int len, int lo, int sum, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (len == 0) {
    if (sum == 0) out.push_back(cur);
    return;
  }
  // minimal sum of len entries starting at x: len*x + len(len-1)/2
  for (int x = lo; len * x + len * (len - 1) / 2 <= sum; ++x) {
    cur.push_back(x);
    distinct_parts(len - 1, x + 1, sum - x, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> rows_with_sum(int len, int sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  distinct_parts(len, 0, sum, cur, out);
  return out;
}

}  // namespace

std::vector<Symbol> enumerate_symbols(int rank, const std::function<bool(int)>& defect_ok) {
  if (rank < 0 || rank > 12) throw std::invalid_argument("enumerate_symbols: rank must be in [0, 12]");
  std::set<Symbol> found;
  // a reduced symbol with rows of sizes a >= b has rank >= ((a-b)^2 - 1)/4 and >= b - ...;
  // the loop bound below is generous and pruned by the sum
  int bound = 2 * rank + 4;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= a; ++b) {
      if (!defect_ok(a - b)) continue;
      int k = a + b - 1;
      int target = rank + (k * k) / 4;
      // reduced: at most one row starts with 0
      auto tri = [](int n) { return n * (n - 1) / 2; };
      int min_sum = std::min(tri(a) + tri(b) + b, tri(a) + a + tri(b));
      if (a == 0 || b == 0) min_sum = tri(a) + tri(b);
      if (min_sum > target) continue;
      for (int s1 = 0; s1 <= target; ++s1) {
        auto tops = rows_with_sum(a, s1);
        if (tops.empty()) continue;
        auto bottoms = rows_with_sum(b, target - s1);
        for (const auto& t : tops)
          for (const auto& u : bottoms) {
            if (!t.empty() && !u.empty() && t[0] == 0 && u[0] == 0) continue;
            Symbol s{t, u};
            if (s.rank() != rank) throw std::logic_error("enumerate_symbols: rank mismatch");
            found.insert(canonical(s));
          }
      }
    }
  return {found.begin(), found.end()};
}

std::vector<Symbol> enumerate_symbols(int rank, int modulus, int residue) {
  return enumerate_symbols(rank, [=](int d) { return ((d % modulus) + modulus) % modulus == residue; });
}

size_t unipotent_count(const std::string& type, int l) {
  if (type == "B" || type == "C") return enumerate_symbols(l, 2, 1).size();
  if (type == "D") {
    size_t n = 0;
    for (const auto& s : enumerate_symbols(l, 4, 0)) n += s.degenerate() ? 2 : 1;
    return n;
  }
  if (type == "2D") return enumerate_symbols(l, 4, 2).size();
  throw std::invalid_argument("unipotent_count: unsupported type " + type);
}

Symbol star_bijection(const Symbol& s) {
  if (s.degenerate()) throw std::invalid_argument("star_bijection: degenerate symbol");
  std::vector<int> sym;
  std::set_symmetric_difference(s.top.begin(), s.top.end(), s.bottom.begin(), s.bottom.end(),
                                std::back_inserter(sym));
  int big = sym.back();
  Symbol r = s;
  auto move = [big](std::vector<int>& from, std::vector<int>& to) {
    from.erase(std::find(from.begin(), from.end(), big));
    to.insert(std::upper_bound(to.begin(), to.end(), big), big);
  };
  if (std::binary_search(s.top.begin(), s.top.end(), big)) move(r.top, r.bottom);
  else move(r.bottom, r.top);
  return canonical(r);
}

StarReport star_bijection_check(int max_rank) {
  StarReport rep;
  rep.max_rank = max_rank;
  for (int n = 0; n <= max_rank; ++n) {
    auto zero = enumerate_symbols(n, 4, 0), two = enumerate_symbols(n, 4, 2);
    std::set<Symbol> image, twos(two.begin(), two.end());
    for (const auto& s : zero) {
      if (s.degenerate()) continue;
      ++rep.checked;
      Symbol t = star_bijection(s);
      rep.rank_preserving = rep.rank_preserving && t.rank() == s.rank();
      rep.exchanges_classes = rep.exchanges_classes && t.defect() % 4 == 2;
      rep.involution = rep.involution && star_bijection(t) == s;
      image.insert(t);
    }
    for (const auto& s : two) {
      ++rep.checked;
      Symbol t = star_bijection(s);
      rep.rank_preserving = rep.rank_preserving && t.rank() == s.rank();
      rep.exchanges_classes = rep.exchanges_classes && t.defect() % 4 == 0 && !t.degenerate();
      rep.involution = rep.involution && star_bijection(t) == s;
    }
    rep.bijective = rep.bijective && image == twos;
  }
  return rep;
}

UnifixResult unifix_count_check(const std::string& label, int l) {
  UnifixResult r;
  r.label = label;
  if (label == "2D") {
    r.twisted = enumerate_symbols(l, 4, 2).size();
    std::set<Symbol> image;
    for (const auto& s : enumerate_symbols(l, 4, 0))
      if (!s.degenerate()) image.insert(star_bijection(s));
    // count the untwisted side through the bijection, so equality also checks surjectivity
    std::set<Symbol> twos;
    for (const auto& s : enumerate_symbols(l, 4, 2)) twos.insert(s);
    r.fixed_untwisted = image == twos ? image.size() : 0;
  } else if (label == "2A") {
    r.twisted = partition_count(l + 1);
    r.fixed_untwisted = partition_count(l + 1);
  } else {
    throw std::invalid_argument("unifix_count_check: unsupported label " + label);
  }
  return r;
}

namespace {

std::vector<int> row_partition(const std::vector<int>& row) {
  std::vector<int> p;
  for (size_t i = 0; i < row.size(); ++i)
    if (row[i] - static_cast<int>(i) > 0) p.push_back(row[i] - static_cast<int>(i));
  std::sort(p.rbegin(), p.rend());
  return p;
}

uint64_t hook_dimension(const std::vector<int>& lam) {
  int n = 0;
  for (int x : lam) n += x;
  uint64_t num = 1, den = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  for (size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      int arm = lam[i] - j - 1, leg = 0;
      for (size_t k = i + 1; k < lam.size() && lam[k] > j; ++k) ++leg;
      den *= arm + leg + 1;
    }
  return num / den;
}

uint64_t binom(int n, int k) {
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TrialityReport triality_report() {
  TrialityReport rep;
  auto syms = enumerate_symbols(4, 4, 0);
  // characters: degenerate symbols give two
  std::vector<std::pair<Symbol, int>> chars;
  for (const auto& s : syms) {
    chars.push_back({s, 0});
    if (s.degenerate()) chars.push_back({s, 1});
  }
  rep.total = chars.size();
  auto add = [&](const std::string& rule, size_t fixed) {
    rep.candidates.push_back({rule, fixed, (rep.total - fixed) % 3 == 0});
  };
  add("every symbol fixed", rep.total);
  size_t nondeg = 0;
  for (const auto& [s, _] : chars) nondeg += !s.degenerate();
  add("non-degenerate symbols fixed, degenerate pairs moved", nondeg);
  // defect-0 symbols label Irr(W(D4)); triality can only permute characters of
  // equal dimension, and moves a dimension class when its size is a multiple of 3
  std::map<uint64_t, size_t> dim_mult;
  std::vector<uint64_t> dims;
  for (const auto& [s, _] : chars) {
    uint64_t d = 0;  // cuspidal (defect 4): no Weyl character
    if (s.defect() == 0) {
      auto a = row_partition(s.top), b = row_partition(s.bottom);
      int na = 0;
      for (int x : a) na += x;
      d = binom(4, na) * hook_dimension(a) * hook_dimension(b);
      if (s.degenerate()) d /= 2;
    }
    dims.push_back(d);
    ++dim_mult[d];
  }
  size_t fixed = 0;
  for (uint64_t d : dims) fixed += d == 0 || dim_mult[d] % 3 != 0;
  add("Weyl-character dimension classes of size divisible by 3 moved", fixed);
  return rep;
}

uint64_t partition_count(int n) {
  std::vector<uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i <= n; ++i) p[i] += p[i - k];
  return p[n];
}

uint64_t bipartition_count(int n) {
  uint64_t s = 0;
  for (int k = 0; k <= n; ++k) s += partition_count(k) * partition_count(n - k);
  return s;
}

}  // namespace mckay
