#ifndef KUMMERWS_CODES_HPP
#define KUMMERWS_CODES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kummerws/families.hpp"
#include "kummerws/two_point.hpp"

namespace kws {

struct CodeParams {
  Int n = 0;
  Int k = 0;
  Int d_lower = 1;
  std::optional<Int> d_exact;
  std::string provenance;

  /// N + 1 - k - d for codes with known distance; throws otherwise.
  Int singleton_defect() const;
};

/// Functional and differential Goppa bounds for 2g-2 < deg G < N.
std::pair<CodeParams, CodeParams> goppa_bounds(Int n, Int g, Int deg_g);

/// d >= N - deg G + t + 1 given t+1 consecutive gaps ending at deg G.
Int consecutive_gap_bound(Int n, Int deg_g, Int t);

/// One-point code at a ramified place of an all-ones curve:
/// [N, a + sum floor(im/r), >= N - m(a-1)], exact when n_split >= a-1.
CodeParams one_point_code(const KummerCurve& c, Int n_rational, Int n_split, Int a);

/// Same through a family instance; the three all-ones families carry
/// paper-certified exact distances.
CodeParams one_point_code(const FamilyInstance& f, Int a);

/// Closed-form parameter triple of the family's corollary; must equal
/// one_point_code on the instantiated family.
CodeParams corollary_closed_form(FamilyName name, const FamilyParams& params, Int a);

/// One-point code at infinity on the BM subcover: [N, km+1-g, N-km] exactly.
CodeParams bm_one_point_code(Int q, Int n, Int m, Int k_mult);

/// Rectangle of pure gaps, inclusive corners.
struct PureGapBox {
  PairPoint lo;
  PairPoint hi;
};

/// Differential code from a certified pure-gap box with
/// G = (lo.a+hi.a-1)Q1 + (lo.b+hi.b-1)Q2. Every lattice point of the box must
/// be present in `pure_gaps`; throws std::invalid_argument otherwise, or when
/// deg G leaves (2g-2, N).
CodeParams homma_kim_distance(Int n, Int g, const PureGapBox& box, const PairSet& pure_gaps);

/// The pure-gap families on the curve y^{q^n+1} = x(x+1)((x^{q-1}+1)/(x+1))^{q+1}.
struct BmPureGaps {
  std::vector<PairPoint> at_inf;      // item i, pure gaps at (Q_inf, Q)
  std::vector<PairPoint> at_01;       // items ii and iii, pure gaps at (Q_0, Q_1)
};
BmPureGaps pure_gap_families_bm(Int q, Int n);

/// Two-point code supported on (Q_inf, Q).
CodeParams two_point_code_inf(Int q, Int n, Int a);

/// Two-point code supported on (Q_0, Q_1) for q = 4 (u = 2^n).
CodeParams two_point_code_01(Int n, Int c1, Int c2);

/// a/b asserted exact; throws std::domain_error when b does not divide a.
Int exact_div(Int a, Int b);

}  // namespace kws

#endif
