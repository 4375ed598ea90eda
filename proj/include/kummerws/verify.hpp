#ifndef KUMMERWS_VERIFY_HPP
#define KUMMERWS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kummerws/semigroup.hpp"

namespace kws {

struct VerifyReport {
  Int curves = 0;        // valid curves visited
  Int places = 0;        // totally ramified places checked
  Int gamma_pairs = 0;   // place pairs with a computable Gamma
  Int failures = 0;
  std::vector<std::string> failure_messages;  // capped
};

/// Sweeps every valid curve with 2 <= m <= mmax, 2 <= r <= rmax,
/// lambda_i in [1, m-1] (as multisets; roots are irrelevant) and checks:
///   - |gap set| = genus at every totally ramified place
///   - gap sets agree with the arithmetic criterion pointwise on [0, 2g]
///   - the complement of each gap set is additively closed
///   - Gamma is a bijection between the two gap sets wherever computable
///   - glb pure gaps equal the sigma-permutation pure gaps
///   - Gamma elements are members of H(P1,P2), glb pure gaps are not
/// `threads` <= 0 means hardware concurrency.
VerifyReport verify_sweep(Int mmax, Int rmax, int threads = 0);

}  // namespace kws

#endif
