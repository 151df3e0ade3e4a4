#include <algorithm>
#include <set>
#include <stdexcept>

#include "mckay/group.hpp"

namespace mckay {

std::vector<Group> all_subgroups(const Group& G, size_t max_order) {
  if (G.order() > max_order) throw std::invalid_argument("all_subgroups: group too large");
  const auto U = G.universe();
  std::set<std::vector<uint32_t>> seen;
  std::vector<Group> out;
  auto add = [&](const std::vector<uint32_t>& gens) {
    Group H = Group::generate(U, gens);
    if (seen.insert(H.sorted_elements()).second) out.push_back(H);
  };
  const auto& el = G.elements();
  add({});
  for (size_t a = 0; a < el.size(); ++a)
    for (size_t b = a; b < el.size(); ++b)
      add({el[a], el[b]});
  // three generators, starting from the 2-generated ones
  size_t n2 = out.size();
  for (size_t i = 0; i < n2; ++i)
    for (uint32_t x : el)
      if (!out[i].contains(x)) {
        std::vector<uint32_t> g = out[i].gens_universe();
        g.push_back(x);
        add(g);
      }
  std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.sorted_elements() < b.sorted_elements();
  });
  return out;
}

namespace {
bool is_prime_power_of(uint64_t n, uint64_t r) {
  while (n % r == 0) n /= r;
  return n == 1;
}

// |X cap C| * |X cap D| == |X| means X = (X cap C)(X cap D)
bool splits(const std::vector<uint32_t>& X, const Group& C, const Group& D) {
  size_t c = 0, d = 0;
  for (uint32_t x : X) {
    c += C.contains(x);
    d += D.contains(x);
  }
  return c * d == X.size();
}
}  // namespace

CdrResult cdr_decomposition_check(const Group& C, const Group& D, const Group& X) {
  const Universe& U = *C.universe();
  uint64_t r = C.order();
  if (r != 2 && r != 3) throw std::invalid_argument("cdr: |C| must be 2 or 3");
  if (!D.is_abelian()) throw std::invalid_argument("cdr: D must be abelian");
  for (uint32_t c : C.elements())
    for (uint32_t d : D.elements())
      if (!C.contains(U.conj(c, d))) throw std::invalid_argument("cdr: D does not normalize C");
  for (uint32_t x : X.elements()) {
    // x = c d has a unique decomposition; search it
    bool in = false;
    for (uint32_t c : C.elements())
      if (D.contains(U.mul(U.inv(c), x))) in = true;
    if (!in) throw std::invalid_argument("cdr: X is not inside CD");
  }
  std::vector<uint32_t> xr;
  for (uint32_t x : X.elements())
    if (is_prime_power_of(U.order_of(x), r)) xr.push_back(x);
  CdrResult res;
  if (!splits(xr, C, D)) {
    res.outcome = CdrOutcome::hypothesis_not_met;
    return res;
  }
  for (uint32_t c : C.elements()) {
    std::vector<uint32_t> cx;
    for (uint32_t x : X.elements()) cx.push_back(U.conj(x, U.inv(c)));  // c x c^-1
    if (splits(cx, C, D)) {
      res.outcome = CdrOutcome::holds;
      res.conjugator = c;
      return res;
    }
  }
  return res;
}

}  // namespace mckay
