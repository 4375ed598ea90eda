#ifndef KUMMERWS_KUMMER_HPP
#define KUMMERWS_KUMMER_HPP

#include <cstddef>
#include <vector>

#include "kummerws/semigroup.hpp"

namespace kws {

/// The curve y^m = prod (x - alpha_i)^{lambda_i}. Only (m, lambda multiset)
/// matters; the roots alpha_i never enter any computation here.
class KummerCurve {
public:
  /// Throws std::invalid_argument unless r >= 2, 1 <= lambda_i < m and
  /// gcd(m, sum lambda_i) = 1.
  static KummerCurve create(Int m, std::vector<Int> lambdas);

  Int m() const { return m_; }
  const std::vector<Int>& lambdas() const { return lambdas_; }
  Int lambda_sum() const { return lambda_sum_; }
  std::size_t num_roots() const { return lambdas_.size(); }
  Int genus() const;

private:
  KummerCurve(Int m, std::vector<Int> lambdas, Int sum)
      : m_(m), lambdas_(std::move(lambdas)), lambda_sum_(sum) {}

  Int m_ = 0;
  std::vector<Int> lambdas_;
  Int lambda_sum_ = 0;
};

/// A totally ramified place: the place at infinity or the place over x = alpha_i.
struct Place {
  static Place infinity() { return {true, 0}; }
  static Place ramified(std::size_t index_1based) { return {false, index_1based}; }

  bool is_infinity = true;
  std::size_t index = 0;  // 1-based into the lambda list, meaningful iff !is_infinity

  bool operator==(const Place&) const = default;
};

/// Gap set at the place at infinity (always totally ramified).
GapSet gaps_at_infinity(const KummerCurve& c);

/// Gap set at Q_ell; requires gcd(m, lambda_ell) = 1.
GapSet gaps_at_ramified(const KummerCurve& c, std::size_t ell);

/// All-ones special form; requires every lambda_i = 1. Equals
/// gaps_at_ramified(c, ell) for every ell.
GapSet gaps_all_ones(const KummerCurve& c);

/// Arithmetic criterion: is s a gap at the place? Exact rational comparison
/// over denominator m; independent of the closed-form gap sets above.
bool gap_criterion(const KummerCurve& c, Place place, Int s);

/// Dispatcher over the three closed forms.
GapSet gap_set(const KummerCurve& c, Place place);

/// True iff the place is totally ramified for this curve.
bool place_valid(const KummerCurve& c, Place place);

Int gcd(Int a, Int b);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
Int inverse_mod(Int a, Int m);
/// ceil(a/b) for b > 0, any sign of a.
Int ceil_div(Int a, Int b);

}  // namespace kws

#endif
