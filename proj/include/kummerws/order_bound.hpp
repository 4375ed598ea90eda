#ifndef KUMMERWS_ORDER_BOUND_HPP
#define KUMMERWS_ORDER_BOUND_HPP

#include <vector>

#include "kummerws/codes.hpp"
#include "kummerws/semigroup.hpp"

namespace kws {

struct OrderBoundReport {
  Int ell = 0;
  Int rho_ell = 0;
  Int d_ord = 0;
  std::vector<Int> nu_window;  // representation counts of rho_m, m = ell .. tail_start
  Int tail_start = 0;          // first index whose rho exceeds 2F+1; counts increase from here
};

/// nu_ell = #{ (i,j) : rho_i + rho_j = rho_{ell+1} }, ordered pairs.
Int nu(const NumericalSemigroup& h, Int ell);

/// Feng-Rao designed distance for the dual code with ell parity checks:
/// the minimum representation count over the semigroup elements >= rho_ell
/// (element-indexed, as computed by the standard numerical-semigroup
/// packages; equals min(nu_{ell-1}, min_{m >= ell} nu_m)). The minimum is
/// taken over the finite window up to the first rho beyond 2F+1; past that
/// point the count of rho_m is rho_m + 1 - 2g, strictly increasing.
OrderBoundReport d_ord(const NumericalSemigroup& h, Int ell);

/// Dual one-point code C_L(D, rho_ell P)^perp: [N, N-ell, >= d_ORD(ell)].
CodeParams dual_one_point_code(const FamilyInstance& f, Place place, Int ell);

}  // namespace kws

#endif
