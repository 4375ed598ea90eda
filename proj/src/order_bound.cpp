#include "kummerws/order_bound.hpp"

#include <stdexcept>

namespace kws {

namespace {

// Membership bitmap on [0, limit].
std::vector<char> member_bitmap(const NumericalSemigroup& h, Int limit) {
  std::vector<char> member(static_cast<std::size_t>(limit + 1), 1);
  for (Int g : h.gap_set().values())
    if (g <= limit)
      member[static_cast<std::size_t>(g)] = 0;
  return member;
}

Int nu_of_rho(const std::vector<char>& member, Int rho) {
  Int count = 0;
  for (Int x = 0; x <= rho; ++x)
    if (member[static_cast<std::size_t>(x)] && member[static_cast<std::size_t>(rho - x)])
      ++count;
  return count;
}

}  // namespace

Int nu(const NumericalSemigroup& h, Int ell) {
  if (ell < 1)
    throw std::invalid_argument("nu: ell must be >= 1");
  const Int rho = h.enumerate(ell + 1).back();
  return nu_of_rho(member_bitmap(h, rho), rho);
}

OrderBoundReport d_ord(const NumericalSemigroup& h, Int ell) {
  if (ell < 1)
    throw std::invalid_argument("d_ord: ell must be >= 1");
  const Int g = h.genus();
  const Int f = h.frobenius();
  // The minimum runs over the representation counts of the elements rho_m,
  // m >= ell. Counts of elements beyond 2F+1 equal rho_m+1-2g and grow
  // strictly, so the window {m : rho_m <= 2F+1} plus one tail sample settles
  // the minimum.
  const Int tail_rho = 2 * f + 2 > 0 ? 2 * f + 2 : 0;
  // index of the first element > 2F+1: elements above F are consecutive,
  // rho_m = m-1+g there
  const Int tail_index = tail_rho + 1 - g > 1 ? tail_rho + 1 - g : 1;
  const auto member = member_bitmap(h, tail_rho > 0 ? tail_rho : 1);
  OrderBoundReport report;
  report.ell = ell;
  report.tail_start = tail_index > ell ? tail_index : ell;
  const auto rhos = h.enumerate(report.tail_start + 1);
  report.rho_ell = rhos[static_cast<std::size_t>(ell - 1)];
  Int best = -1;
  for (Int m = ell; m <= report.tail_start; ++m) {
    const Int rho = rhos[static_cast<std::size_t>(m - 1)];  // rho_m
    const Int v = rho > 2 * f + 1 ? rho + 1 - 2 * g : nu_of_rho(member, rho);
    report.nu_window.push_back(v);
    if (best < 0 || v < best)
      best = v;
  }
  report.d_ord = best;
  return report;
}

CodeParams dual_one_point_code(const FamilyInstance& f, Place place, Int ell) {
  const GapSet gaps = gap_set(f.curve, place);
  const NumericalSemigroup h(gaps);
  const Int n = f.n_rational - 1;
  const OrderBoundReport report = d_ord(h, ell);
  if (report.rho_ell >= n)
    throw std::invalid_argument("rho_ell must stay below the code length");
  return {n, n - ell, report.d_ord, std::nullopt, "thm-order-bound:ell=" + std::to_string(ell)};
}

}  // namespace kws
