#include "kummerws/two_point.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kws {

namespace {

// Checks the bijection hypotheses: pair count = genus and the coordinate
// multisets equal the two gap sets with no repeats.
GammaSet make_gamma(std::vector<PairPoint> pairs, GapSet left, GapSet right) {
  GammaSet g{PairSet(std::move(pairs)), std::move(left), std::move(right)};
  if (g.pairs.size() != static_cast<std::size_t>(g.left_gaps.genus()))
    throw std::logic_error("Gamma cardinality differs from the genus");
  std::vector<Int> firsts, seconds;
  firsts.reserve(g.pairs.size());
  seconds.reserve(g.pairs.size());
  for (PairPoint p : g.pairs) {
    firsts.push_back(p.a);
    seconds.push_back(p.b);
  }
  std::sort(seconds.begin(), seconds.end());
  // firsts is already sorted lexicographically; duplicates would break the bijection
  if (std::adjacent_find(firsts.begin(), firsts.end()) != firsts.end() ||
      std::adjacent_find(seconds.begin(), seconds.end()) != seconds.end())
    throw std::logic_error("Gamma coordinates repeat");
  if (firsts != g.left_gaps.values() || seconds != g.right_gaps.values())
    throw std::logic_error("Gamma coordinates do not enumerate the gap sets");
  return g;
}

}  // namespace

GammaSet gamma_same_multiplicity(const KummerCurve& c, std::size_t l1, std::size_t l2) {
  if (l1 == l2 || l1 < 1 || l2 < 1 || l1 > c.num_roots() || l2 > c.num_roots())
    throw std::invalid_argument("need two distinct ramified place indices");
  const Int m = c.m();
  if (c.lambdas()[l1 - 1] != c.lambdas()[l2 - 1])
    throw std::invalid_argument("the two places must have equal multiplicity");
  if (gcd(m, c.lambdas()[l1 - 1]) != 1)
    throw std::invalid_argument("multiplicity must be coprime to m");
  const Int lam = inverse_mod(c.lambdas()[l1 - 1], m);
  std::vector<PairPoint> pairs;
  for (Int i = 1; i <= m - 1; ++i) {
    Int budget = -1 - ceil_div(i * lam * c.lambda_sum(), m);
    for (Int l : c.lambdas())
      budget += ceil_div(i * lam * l, m);
    for (Int j1 = 0; j1 <= budget; ++j1)
      pairs.push_back({i + m * j1, i + m * (budget - j1)});
  }
  return make_gamma(std::move(pairs), gaps_at_ramified(c, l1), gaps_at_ramified(c, l2));
}

GammaSet gamma_infinity(const KummerCurve& c, std::size_t l) {
  if (l < 1 || l > c.num_roots())
    throw std::invalid_argument("place index out of range");
  if (c.lambdas()[l - 1] != 1)
    throw std::invalid_argument("gamma_infinity requires lambda_l = 1");
  const Int m = c.m();
  const Int l0 = c.lambda_sum();
  std::vector<PairPoint> pairs;
  for (Int i = 1; i <= m - 1; ++i) {
    Int total = -1;
    for (Int lk : c.lambdas())
      total += ceil_div(i * lk, m);
    for (Int j1 = ceil_div(i * l0, m); j1 <= total; ++j1)
      pairs.push_back({m * j1 - i * l0, i + m * (total - j1)});
  }
  return make_gamma(std::move(pairs), gaps_at_infinity(c), gaps_at_ramified(c, l));
}

GammaSet gamma(const KummerCurve& c, Place p1, Place p2) {
  if (p1.is_infinity && !p2.is_infinity)
    return gamma_infinity(c, p2.index);
  if (!p1.is_infinity && !p2.is_infinity)
    return gamma_same_multiplicity(c, p1.index, p2.index);
  throw std::invalid_argument("no closed form for this place pair");
}

Box default_box(const GammaSet& g) {
  const Int genus = g.left_gaps.genus();
  return {2 * genus + g.left_gaps.frobenius(), 2 * genus + g.right_gaps.frobenius()};
}

PairSet pair_semigroup(const GammaSet& g, const NumericalSemigroup& h1,
                       const NumericalSemigroup& h2, Box box) {
  std::vector<PairPoint> gen(g.pairs.begin(), g.pairs.end());
  for (Int s = 0; s <= box.b1; ++s)
    if (h1.contains(s))
      gen.push_back({s, 0});
  for (Int s = 0; s <= box.b2; ++s)
    if (h2.contains(s))
      gen.push_back({0, s});
  return lub_closure(PairSet(std::move(gen)), box);
}

PairSet pure_gaps_glb(const GammaSet& g) {
  const auto& pairs = g.pairs.points();
  std::vector<PairPoint> out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const PairPoint p = glb(pairs[i], pairs[j]);
      if (p != pairs[i] && p != pairs[j])
        out.push_back(p);
    }
  PairSet all(std::move(out));
  std::vector<PairPoint> pure;
  for (PairPoint p : all)
    if (!g.pairs.contains(p))
      pure.push_back(p);
  return PairSet(std::move(pure));
}

PairSet pure_gaps_sigma(const GammaSet& g) {
  // sigma(i) = rank (1-based) of the right partner of the i-th left gap
  const auto& left = g.left_gaps.values();
  const auto& right = g.right_gaps.values();
  const std::size_t genus = left.size();
  std::map<Int, std::size_t> right_rank;
  for (std::size_t j = 0; j < genus; ++j)
    right_rank[right[j]] = j + 1;
  std::vector<std::size_t> sigma(genus + 1, 0), sigma_inv(genus + 1, 0);
  for (PairPoint p : g.pairs) {
    const std::size_t i =
        static_cast<std::size_t>(std::lower_bound(left.begin(), left.end(), p.a) - left.begin()) + 1;
    sigma[i] = right_rank.at(p.b);
    sigma_inv[sigma[i]] = i;
  }
  std::vector<PairPoint> pure;
  for (std::size_t i = 1; i <= genus; ++i)
    for (std::size_t j = 1; j <= genus; ++j)
      if (i < sigma_inv[j] && j < sigma[i])
        pure.push_back({left[i - 1], right[j - 1]});
  return PairSet(std::move(pure));
}

bool pair_membership(PairPoint s, const GammaSet& g, const NumericalSemigroup& h1,
                     const NumericalSemigroup& h2) {
  if (s.a < 0 || s.b < 0)
    return false;
  // s = lub(x, y) needs a generator x with x.a = s.a, x.b <= s.b and a
  // generator y with y.b = s.b, y.a <= s.a.
  const auto row_ok = [&](Int first, Int second) {
    if (h1.contains(first))
      return true;  // (first, 0) is a generator
    if (first == 0)
      return false;
    for (PairPoint p : g.pairs)
      if (p.a == first)
        return p.b <= second;
    return false;
  };
  const auto col_ok = [&](Int first, Int second) {
    if (h2.contains(second))
      return true;  // (0, second) is a generator
    if (second == 0)
      return false;
    for (PairPoint p : g.pairs)
      if (p.b == second)
        return p.a <= first;
    return false;
  };
  return row_ok(s.a, s.b) && col_ok(s.a, s.b);
}

}  // namespace kws
