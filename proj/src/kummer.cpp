#include "kummerws/kummer.hpp"

#include <algorithm>
#include <stdexcept>

namespace kws {

Int gcd(Int a, Int b) {
  while (b != 0) {
    const Int t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

Int inverse_mod(Int a, Int m) {
  // extended Euclid on (a mod m, m)
  Int r0 = ((a % m) + m) % m, r1 = m;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    const Int q = r0 / r1;
    const Int r = r0 - q * r1;
    r0 = r1;
    r1 = r;
    const Int s = s0 - q * s1;
    s0 = s1;
    s1 = s;
  }
  if (r0 != 1)
    throw std::invalid_argument("inverse_mod: arguments are not coprime");
  return ((s0 % m) + m) % m;
}

Int ceil_div(Int a, Int b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

KummerCurve KummerCurve::create(Int m, std::vector<Int> lambdas) {
  if (m < 2)
    throw std::invalid_argument("kummer exponent m must be at least 2");
  if (lambdas.size() < 2)
    throw std::invalid_argument("need at least two roots (r >= 2)");
  Int sum = 0;
  for (Int l : lambdas) {
    if (l < 1 || l >= m)
      throw std::invalid_argument("multiplicities must satisfy 1 <= lambda_i < m");
    sum += l;
  }
  if (gcd(m, sum) != 1)
    throw std::invalid_argument("gcd(m, sum of multiplicities) must be 1");
  return KummerCurve(m, std::move(lambdas), sum);
}

Int KummerCurve::genus() const {
  Int gcd_sum = 0;
  for (Int l : lambdas_)
    gcd_sum += gcd(m_, l);
  const Int num = m_ * (static_cast<Int>(lambdas_.size()) - 1) + 1 - gcd_sum;
  if (num % 2 != 0)
    throw std::logic_error("genus formula produced an odd numerator");
  return num / 2;
}

namespace {

GapSet sorted_gaps(std::vector<Int> v, Int genus) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (static_cast<Int>(v.size()) != genus)
    throw std::logic_error("gap set cardinality differs from the genus");
  return GapSet(std::move(v));
}

}  // namespace

GapSet gaps_at_infinity(const KummerCurve& c) {
  const Int m = c.m();
  const Int l0 = c.lambda_sum();
  std::vector<Int> gaps;
  for (Int i = 1; i <= m - 1; ++i) {
    Int hi = -1;
    for (Int l : c.lambdas())
      hi += ceil_div(i * l, m);
    for (Int j = ceil_div(i * l0, m); j <= hi; ++j)
      gaps.push_back(m * j - i * l0);
  }
  return sorted_gaps(std::move(gaps), c.genus());
}

GapSet gaps_at_ramified(const KummerCurve& c, std::size_t ell) {
  const Int m = c.m();
  if (ell < 1 || ell > c.num_roots())
    throw std::invalid_argument("place index out of range");
  const Int l_ell = c.lambdas()[ell - 1];
  if (gcd(m, l_ell) != 1)
    throw std::invalid_argument("place is not totally ramified: gcd(m, lambda_ell) != 1");
  const Int lam = inverse_mod(l_ell, m);
  std::vector<Int> gaps;
  for (Int i = 1; i <= m - 1; ++i) {
    Int hi = -1 - ceil_div(i * lam * c.lambda_sum(), m);
    for (Int l : c.lambdas())
      hi += ceil_div(i * lam * l, m);
    for (Int j = 0; j <= hi; ++j)
      gaps.push_back(i + m * j);
  }
  return sorted_gaps(std::move(gaps), c.genus());
}

GapSet gaps_all_ones(const KummerCurve& c) {
  const Int m = c.m();
  const Int r = static_cast<Int>(c.num_roots());
  for (Int l : c.lambdas())
    if (l != 1)
      throw std::invalid_argument("gaps_all_ones requires every multiplicity to be 1");
  std::vector<Int> gaps;
  for (Int j = 1; j <= r - 1; ++j)
    for (Int i = (j * m) / r + 1; i <= m - 1; ++i)
      gaps.push_back(m * j - i);
  return sorted_gaps(std::move(gaps), c.genus());
}

bool gap_criterion(const KummerCurve& c, Place place, Int s) {
  if (!place_valid(c, place))
    throw std::invalid_argument("place is not totally ramified for this curve");
  if (s <= 0)
    return false;
  const Int m = c.m();
  Int t;
  if (place.is_infinity) {
    // s - t*lambda0 = 0 (mod m)
    t = (s % m) * inverse_mod(c.lambda_sum(), m) % m;
  } else {
    // s + t*lambda_ell = 0 (mod m)
    const Int inv = inverse_mod(c.lambdas()[place.index - 1], m);
    t = ((m - s % m) % m) * inv % m;
  }
  // sum of fractional parts {t*lambda_k/m} > ceil(s/m), scaled by m
  Int frac_sum = 0;
  for (Int l : c.lambdas())
    frac_sum += (t * l) % m;
  return frac_sum > m * ceil_div(s, m);
}

GapSet gap_set(const KummerCurve& c, Place place) {
  if (place.is_infinity)
    return gaps_at_infinity(c);
  const bool all_ones =
      std::all_of(c.lambdas().begin(), c.lambdas().end(), [](Int l) { return l == 1; });
  if (all_ones) {
    if (place.index < 1 || place.index > c.num_roots())
      throw std::invalid_argument("place index out of range");
    return gaps_all_ones(c);
  }
  return gaps_at_ramified(c, place.index);
}

bool place_valid(const KummerCurve& c, Place place) {
  if (place.is_infinity)
    return true;
  return place.index >= 1 && place.index <= c.num_roots() &&
         gcd(c.m(), c.lambdas()[place.index - 1]) == 1;
}

}  // namespace kws
