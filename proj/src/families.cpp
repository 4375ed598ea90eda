#include "kummerws/families.hpp"

#include <cmath>
#include <stdexcept>

namespace kws {

const char* family_name_str(FamilyName name) {
  switch (name) {
    case FamilyName::AbdonGarcia: return "abdon-garcia";
    case FamilyName::GeneralizedHermitian: return "generalized-hermitian";
    case FamilyName::NormTrace: return "norm-trace";
    case FamilyName::BmSubcover: return "bm-subcover";
  }
  return "?";
}

std::optional<FamilyName> family_name_parse(const std::string& s) {
  if (s == "abdon-garcia") return FamilyName::AbdonGarcia;
  if (s == "generalized-hermitian") return FamilyName::GeneralizedHermitian;
  if (s == "norm-trace") return FamilyName::NormTrace;
  if (s == "bm-subcover") return FamilyName::BmSubcover;
  return std::nullopt;
}

Int checked_pow(Int b, Int e) {
  Int out = 1;
  for (Int i = 0; i < e; ++i) {
    if (b != 0 && out > (Int{1} << 62) / (b < 0 ? -b : b))
      throw std::overflow_error("checked_pow: result exceeds 64-bit range");
    out *= b;
  }
  return out;
}

std::optional<Int> perfect_sqrt(Int n) {
  if (n < 0)
    return std::nullopt;
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r * r == n ? std::optional<Int>(r) : std::nullopt;
}

namespace {

bool is_prime(Int n) {
  if (n < 2)
    return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// Returns the prime base if q is a prime power, throws otherwise.
Int prime_base(Int q) {
  for (Int d = 2; d <= q; ++d) {
    if (q % d != 0)
      continue;
    if (!is_prime(d))
      throw std::invalid_argument("q must be a prime power");
    Int rest = q;
    while (rest % d == 0)
      rest /= d;
    if (rest != 1)
      throw std::invalid_argument("q must be a prime power");
    return d;
  }
  throw std::invalid_argument("q must be a prime power");
}

FamilyInstance abdon_garcia(const FamilyParams& params) {
  const Int p = params.p, n = params.n;
  if (p < 2 || !is_prime(p))
    throw std::invalid_argument("abdon-garcia: p must be prime");
  if (n < 2)
    throw std::invalid_argument("abdon-garcia: n must be at least 2");
  const Int q = checked_pow(p, n);
  const Int r = q / p;
  if (r < 3)
    throw std::invalid_argument("abdon-garcia: q/p must be at least 3");
  KummerCurve curve = KummerCurve::create(q + 1, std::vector<Int>(static_cast<std::size_t>(r), 1));
  const Int field = q * q;
  // the code over F_{q^2} has length N = q^3/p, i.e. q^3/p + 1 rational places
  const Int n_rational = q * q * q / p + 1;
  return {FamilyName::AbdonGarcia, params, std::move(curve), p, field, n_rational, -1};
}

FamilyInstance generalized_hermitian(const FamilyParams& params) {
  const Int q = params.q, n = params.n;
  if (q < 3)
    throw std::invalid_argument("generalized-hermitian: q must be at least 3");
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("generalized-hermitian: n must be odd");
  const Int p = prime_base(q);
  const Int m = checked_pow(q, n) + 1;
  KummerCurve curve = KummerCurve::create(m, std::vector<Int>(static_cast<std::size_t>(q), 1));
  const Int field = checked_pow(q, 2 * n);
  const Int n_rational = checked_pow(q, 2 * n + 1) + 1;  // code length q^{2n+1} plus Q itself
  return {FamilyName::GeneralizedHermitian, params, std::move(curve), p, field, n_rational, -1};
}

FamilyInstance norm_trace(const FamilyParams& params) {
  const Int q = params.q, n = params.n;
  if (q < 3)
    throw std::invalid_argument("norm-trace: q must be at least 3");
  if (n < 2)
    throw std::invalid_argument("norm-trace: n must be at least 2");
  const Int p = prime_base(q);
  const Int m = (checked_pow(q, n) - 1) / (q - 1);
  const Int r = checked_pow(q, n - 1);
  KummerCurve curve = KummerCurve::create(m, std::vector<Int>(static_cast<std::size_t>(r), 1));
  const Int field = checked_pow(q, n);
  const Int n_rational = checked_pow(q, 2 * n - 1) + 1;
  return {FamilyName::NormTrace, params, std::move(curve), p, field, n_rational, -1};
}

FamilyInstance bm_subcover(const FamilyParams& params) {
  const Int q = params.q, n = params.n, m = params.m;
  if (q < 4 || q % 2 != 0)
    throw std::invalid_argument("bm-subcover: q must be even and at least 4");
  const Int p = prime_base(q);  // = 2
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("bm-subcover: n must be odd and at least 3");
  const Int qn = checked_pow(q, n);
  if (m < 2 || (qn + 1) % m != 0)
    throw std::invalid_argument("bm-subcover: m must divide q^n + 1");
  if (m % (q + 1) != 0)
    throw std::invalid_argument("bm-subcover: q + 1 must divide m");
  // f = x (x+1) prod over the q-2 roots of (x^{q-1}+1)/(x+1), each with
  // multiplicity q+1. Exponents only matter modulo m: for m = q+1 those
  // factors are m-th powers and drop out of the Kummer data entirely.
  std::vector<Int> lambdas{1, 1};
  if ((q + 1) % m != 0)
    lambdas.insert(lambdas.end(), static_cast<std::size_t>(q - 2), (q + 1) % m);
  KummerCurve curve = KummerCurve::create(m, std::move(lambdas));
  const BmClosedForm cf = bm_closed_form(q, n, m);
  if (curve.genus() != cf.genus)
    throw std::logic_error("bm-subcover: Kummer genus differs from the closed form");
  const Int u = (qn - q * q + q) * (qn + 1) / m + checked_pow(q, n + 1) - qn;
  // second point-count expression from the splitting data
  if (cf.n_rational != 3 + (q + 1) * (q - 2) + u * m)
    throw std::logic_error("bm-subcover: point-count expressions disagree");
  return {FamilyName::BmSubcover, params, std::move(curve), p, cf.field_size, cf.n_rational, u};
}

}  // namespace

BmClosedForm bm_closed_form(Int q, Int n, Int m) {
  if (q < 4 || q % 2 != 0)
    throw std::invalid_argument("bm-subcover: q must be even and at least 4");
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("bm-subcover: n must be odd and at least 3");
  const Int qn = checked_pow(q, n);
  if (m < 2 || (qn + 1) % m != 0)
    throw std::invalid_argument("bm-subcover: m must divide q^n + 1");
  BmClosedForm cf;
  cf.genus = (m * (q - 1) - q * q + q + 1) / 2;
  cf.field_size = checked_pow(q, 2 * n);
  cf.n_rational =
      cf.field_size - checked_pow(q, n + 2) + (m + 1) * checked_pow(q, n + 1) - (m - 1) * qn + 1;
  return cf;
}

FamilyInstance instantiate(FamilyName name, const FamilyParams& params) {
  FamilyInstance f = [&] {
    switch (name) {
      case FamilyName::AbdonGarcia: return abdon_garcia(params);
      case FamilyName::GeneralizedHermitian: return generalized_hermitian(params);
      case FamilyName::NormTrace: return norm_trace(params);
      case FamilyName::BmSubcover: return bm_subcover(params);
    }
    throw std::invalid_argument("unknown family");
  }();
  if (gcd(f.p, f.curve.m()) != 1)
    throw std::logic_error("characteristic divides the Kummer exponent");
  return f;
}

bool maximality_check(const FamilyInstance& f) {
  const auto root = perfect_sqrt(f.field_size);
  if (!root)
    throw std::invalid_argument("maximality is only defined over square fields");
  return f.n_rational == f.field_size + 1 + 2 * f.curve.genus() * *root;
}

}  // namespace kws
