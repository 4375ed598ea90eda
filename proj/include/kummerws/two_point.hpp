#ifndef KUMMERWS_TWO_POINT_HPP
#define KUMMERWS_TWO_POINT_HPP

#include <cstddef>

#include "kummerws/kummer.hpp"
#include "kummerws/semigroup.hpp"

namespace kws {

/// Minimal generating set of H(P1,P2): the graph of the bijection between the
/// two gap sets. Construction validates |pairs| = genus and that the
/// coordinates enumerate the gap sets exactly.
struct GammaSet {
  PairSet pairs;
  GapSet left_gaps;
  GapSet right_gaps;
};

/// Gamma(Q_l1, Q_l2) for two ramified places with equal multiplicity coprime to m.
GammaSet gamma_same_multiplicity(const KummerCurve& c, std::size_t l1, std::size_t l2);

/// Gamma(Q_inf, Q_l); requires lambda_l = 1.
GammaSet gamma_infinity(const KummerCurve& c, std::size_t l);

/// Dispatcher; throws std::invalid_argument for place pairs with no closed form.
GammaSet gamma(const KummerCurve& c, Place p1, Place p2);

/// Box (2g + F1, 2g + F2); contains G(P1) x G(P2) and hence all pure gaps.
Box default_box(const GammaSet& g);

/// Boxed slice of H(P1,P2) via lub-closure of Gamma, H1 x {0} and {0} x H2.
PairSet pair_semigroup(const GammaSet& g, const NumericalSemigroup& h1,
                       const NumericalSemigroup& h2, Box box);

/// Pure gaps as pairwise glbs of Gamma minus Gamma itself.
PairSet pure_gaps_glb(const GammaSet& g);

/// Pure gaps from the permutation criterion: (beta_i, gamma_j) with
/// i < sigma^{-1}(j) and j < sigma(i). Must equal pure_gaps_glb.
PairSet pure_gaps_sigma(const GammaSet& g);

/// Membership in H(P1,P2) without materializing the closure: s is a member iff
/// some generator matches its first coordinate from below in the second, and
/// vice versa.
bool pair_membership(PairPoint s, const GammaSet& g, const NumericalSemigroup& h1,
                     const NumericalSemigroup& h2);

}  // namespace kws

#endif
