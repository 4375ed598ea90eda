#include "kummerws/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace kws {

Int exact_div(Int a, Int b) {
  if (b == 0 || a % b != 0)
    throw std::domain_error("expected an exact division");
  return a / b;
}

Int CodeParams::singleton_defect() const {
  if (!d_exact)
    throw std::domain_error("singleton defect needs an exact distance");
  return n + 1 - k - *d_exact;
}

std::pair<CodeParams, CodeParams> goppa_bounds(Int n, Int g, Int deg_g) {
  if (deg_g <= 2 * g - 2 || deg_g >= n)
    throw std::invalid_argument("goppa bounds need 2g-2 < deg G < N");
  CodeParams functional{n, deg_g + 1 - g, n - deg_g, std::nullopt, "goppa-functional"};
  CodeParams differential{n, n - deg_g - 1 + g, deg_g - (2 * g - 2), std::nullopt,
                          "goppa-differential"};
  return {functional, differential};
}

Int consecutive_gap_bound(Int n, Int deg_g, Int t) {
  return n - deg_g + t + 1;
}

CodeParams one_point_code(const KummerCurve& c, Int n_rational, Int n_split, Int a) {
  const Int m = c.m();
  const Int r = static_cast<Int>(c.num_roots());
  if (r < 3)
    throw std::invalid_argument("one-point construction needs r >= 3");
  for (Int l : c.lambdas())
    if (l != 1)
      throw std::invalid_argument("one-point construction needs a separable f (all-ones multiplicities)");
  if (a < 2 || a > r - 1)
    throw std::invalid_argument("a must lie in [2, r-1]");
  const Int n = n_rational - 1;
  const Int deg_g = a * m - (a * m) / r - 1;
  if (deg_g >= n)
    throw std::invalid_argument("deg G must stay below the code length");
  Int k = a;
  for (Int i = 1; i <= a - 1; ++i)
    k += (i * m) / r;
  CodeParams out{n, k, n - m * (a - 1), std::nullopt, "thm-one-point"};
  if (n_split >= a - 1)
    out.d_exact = out.d_lower;
  return out;
}

CodeParams one_point_code(const FamilyInstance& f, Int a) {
  CodeParams out = one_point_code(f.curve, f.n_rational, f.n_split, a);
  // the three all-ones families carry paper-certified exact distances
  switch (f.name) {
    case FamilyName::AbdonGarcia:
    case FamilyName::GeneralizedHermitian:
    case FamilyName::NormTrace:
      out.d_exact = out.d_lower;
      break;
    case FamilyName::BmSubcover:
      break;
  }
  out.provenance = std::string("thm-one-point:") + family_name_str(f.name);
  return out;
}

CodeParams corollary_closed_form(FamilyName name, const FamilyParams& params, Int a) {
  switch (name) {
    case FamilyName::AbdonGarcia: {
      const Int p = params.p, q = checked_pow(params.p, params.n);
      if (a < 2 || a > q / p - 1)
        throw std::invalid_argument("a must lie in [2, q/p-1]");
      const Int n = q * q * q / p;
      const Int k = a + p * a * (a - 1) / 2;
      const Int d = n - (q + 1) * (a - 1);
      return {n, k, d, d, "cor-abdon-garcia"};
    }
    case FamilyName::GeneralizedHermitian: {
      const Int q = params.q, nn = params.n;
      if (a < 2 || a > q - 1)
        throw std::invalid_argument("a must lie in [2, q-1]");
      const Int n = checked_pow(q, 2 * nn + 1);
      const Int k = a + a * (a - 1) * checked_pow(q, nn - 1) / 2;
      const Int d = n - (checked_pow(q, nn) + 1) * (a - 1);
      return {n, k, d, d, "cor-generalized-hermitian"};
    }
    case FamilyName::NormTrace: {
      const Int q = params.q, nn = params.n;
      const Int rr = checked_pow(q, nn - 1);
      if (a < 2 || a > rr - 1)
        throw std::invalid_argument("a must lie in [2, q^{n-1}-1]");
      const Int n = checked_pow(q, 2 * nn - 1);
      Int k = a * (a + 1) / 2;
      for (Int i = 1; i <= a - 1; ++i)
        k += i * (rr - 1) / (rr * (q - 1));
      const Int d = n - (a - 1) * (checked_pow(q, nn) - 1) / (q - 1);
      return {n, k, d, d, "cor-norm-trace"};
    }
    case FamilyName::BmSubcover:
      throw std::invalid_argument("bm-subcover one-point codes come from the km construction");
  }
  throw std::invalid_argument("unknown family");
}

CodeParams bm_one_point_code(Int q, Int n, Int m, Int k_mult) {
  const FamilyInstance f = instantiate(FamilyName::BmSubcover, {.q = q, .n = n, .m = m});
  if (k_mult < q - 1 || k_mult > f.n_split)
    throw std::invalid_argument("k must lie in [q-1, u]");
  const Int g = f.curve.genus();
  const Int len = f.n_rational - 1;
  if (k_mult * m >= len || k_mult * m <= 2 * g - 2)
    throw std::invalid_argument("deg G must satisfy 2g-2 < km < N");
  const Int k = k_mult * m + 1 - g;
  const Int d = len - k_mult * m;
  return {len, k, d, d, "prop-bm-one-point"};
}

CodeParams homma_kim_distance(Int n, Int g, const PureGapBox& box, const PairSet& pure_gaps) {
  if (box.lo.a > box.hi.a || box.lo.b > box.hi.b)
    throw std::invalid_argument("box corners must be componentwise ordered");
  for (Int x = box.lo.a; x <= box.hi.a; ++x)
    for (Int y = box.lo.b; y <= box.hi.b; ++y)
      if (!pure_gaps.contains({x, y}))
        throw std::invalid_argument("box is not certified: a lattice point is not a pure gap");
  const Int deg_g = box.lo.a + box.hi.a - 1 + box.lo.b + box.hi.b - 1;
  if (deg_g <= 2 * g - 2 || deg_g >= n)
    throw std::invalid_argument("deg G must satisfy 2g-2 < deg G < N");
  const Int k = n - deg_g - 1 + g;
  const Int d = deg_g - (2 * g - 2) + (box.hi.a - box.lo.a) + (box.hi.b - box.lo.b) + 2;
  return {n, k, d, std::nullopt, "thm-pure-gap-box"};
}

BmPureGaps pure_gap_families_bm(Int q, Int n) {
  if (q < 4 || q % 2 != 0 || n < 3 || n % 2 == 0)
    throw std::invalid_argument("pure-gap families need q >= 4 even and n >= 3 odd");
  const Int m = checked_pow(q, n) + 1;
  const Int s = exact_div(m, q + 1);
  const Int big_m = exact_div(checked_pow(q, n) - 2 * checked_pow(q, n - 1) + 1, q - 1);
  BmPureGaps out;
  // family i: ((q^n+1)(q-1) - (s-a)(q^2-q), b) at (Q_inf, Q)
  for (Int a = 0; a <= s - 2; ++a)
    for (Int b = 1; b <= s - 1 - a; ++b)
      out.at_inf.push_back({m * (q - 1) - (s - a) * (q * q - q), b});
  // family ii: (a2*M - b2, a1*M - b1) at (Q_0, Q_1)
  const auto b_minus_max = [&](Int a) {
    return (q * q - q - 2 * a) * (checked_pow(q, n - 1) - 1) / (q * q - 1);
  };
  for (Int a1 = 1; a1 <= q + 1; ++a1)
    for (Int a2 = 1; a2 <= q + 1; ++a2)
      for (Int b1 = 1; b1 <= b_minus_max(a1); ++b1)
        for (Int b2 = 1; b2 <= b_minus_max(a2); ++b2)
          out.at_01.push_back({a2 * big_m - b2, a1 * big_m - b1});
  // family iii: (a1*M + b1, a2*M - b2) and its mirror at (Q_0, Q_1)
  const auto b_plus_max = [&](Int a) {
    if (a <= q / 2)
      return 2 * a * (checked_pow(q, n - 1) - 1) / (q * q - 1);
    return (checked_pow(q, n - 1) - q) / (q - 1);
  };
  for (Int a1 = 1; a1 <= q + 1; ++a1)
    for (Int a2 = 1; a2 <= a1; ++a2)
      for (Int b1 = 0; b1 <= b_plus_max(a1); ++b1)
        for (Int b2 = 1; b2 <= b_minus_max(a2); ++b2) {
          out.at_01.push_back({a1 * big_m + b1, a2 * big_m - b2});
          out.at_01.push_back({a2 * big_m - b2, a1 * big_m + b1});
        }
  return out;
}

CodeParams two_point_code_inf(Int q, Int n, Int a) {
  if (q < 4 || q % 2 != 0 || n < 3 || n % 2 == 0)
    throw std::invalid_argument("two_point_code_inf needs q >= 4 even and n >= 3 odd");
  const Int qn = checked_pow(q, n);
  const Int a_lo =
      (checked_pow(q, n + 2) - 2 * checked_pow(q, n + 1) - q * q * q + q * q + 1) /
          (2 * q * q * q - 3 * q - 1) + 1;
  const Int a_hi = exact_div(qn - 2 * q - 1, q + 1);
  if (a < a_lo || a > a_hi)
    throw std::invalid_argument("a out of range for this construction");
  const Int len = checked_pow(q, 2 * n + 1) - checked_pow(q, n + 2) + 2 * checked_pow(q, n + 1) - 1;
  const Int k = checked_pow(q, 2 * n + 1) - checked_pow(q, n + 2) +
                exact_div(5 * checked_pow(q, n + 2) + qn - q * q * q + q * q - 2 * q + 2,
                          2 * (q + 1)) -
                a * (2 * q * q - 2 * q - 1);
  const Int d = 2 * a * (q * q - q - 1) -
                exact_div(q * q * (qn - 2 * checked_pow(q, n - 1) - checked_pow(q, n - 2) - q + 1),
                          q + 1);
  return {len, k, d, std::nullopt, "prop-two-point-inf:a=" + std::to_string(a)};
}

CodeParams two_point_code_01(Int n, Int c1, Int c2) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("two_point_code_01 needs n >= 3 odd");
  const Int u = checked_pow(2, n);
  const Int u2 = u * u;
  const Int c_lo = ceil_div(4 * u2 + 9, 5);
  if (c1 < c_lo || c1 > (11 * u2 + 4) / 12)
    throw std::invalid_argument("c1 out of range");
  if (c2 < c_lo || c2 > (5 * u2 + 4) / 6)
    throw std::invalid_argument("c2 out of range");
  const Int len = 4 * u2 * u2 - 8 * u2 - 1;
  const Int k = 4 * u2 * u2 - exact_div(33 * u2, 4) - 5 - c1 - c2;
  const Int d = exact_div(u2, 2) + 12;
  return {len, k, d, std::nullopt,
          "prop-two-point-01:c1=" + std::to_string(c1) + ",c2=" + std::to_string(c2)};
}

}  // namespace kws
