#include "kummerws/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace kws {

GapSet::GapSet(std::vector<Int> gaps) : gaps_(std::move(gaps)) {
  for (std::size_t i = 0; i < gaps_.size(); ++i) {
    if (gaps_[i] <= 0)
      throw std::invalid_argument("gap set entries must be positive");
    if (i > 0 && gaps_[i] <= gaps_[i - 1])
      throw std::invalid_argument("gap set entries must be strictly increasing");
  }
}

bool GapSet::contains(Int s) const {
  return std::binary_search(gaps_.begin(), gaps_.end(), s);
}

bool NumericalSemigroup::validate() const {
  if (!contains(0))
    return false;
  const Int f = frobenius();
  // Membership bitmap on [0, 2F+2] so sums stay in range.
  std::vector<char> member(static_cast<std::size_t>(2 * f + 3 > 0 ? 2 * f + 3 : 1), 1);
  for (Int g : gaps_.values())
    member[static_cast<std::size_t>(g)] = 0;
  std::vector<Int> low;
  for (Int s = 0; s <= f + 1; ++s)
    if (member[static_cast<std::size_t>(s)])
      low.push_back(s);
  for (std::size_t i = 0; i < low.size(); ++i)
    for (std::size_t j = i; j < low.size(); ++j) {
      const Int sum = low[i] + low[j];
      if (sum <= f && !member[static_cast<std::size_t>(sum)])
        return false;
    }
  return true;
}

std::vector<Int> NumericalSemigroup::enumerate(Int count) const {
  if (count < 1)
    throw std::invalid_argument("enumerate: count must be >= 1");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Int s = 0; static_cast<Int>(out.size()) < count; ++s)
    if (contains(s))
      out.push_back(s);
  return out;
}

NumericalSemigroup semigroup_from_gaps(GapSet gaps) {
  return NumericalSemigroup(std::move(gaps));
}

PairSet::PairSet(std::vector<PairPoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PairSet::contains(PairPoint p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

PairSet lub_closure(const PairSet& generators, Box box) {
  std::vector<PairPoint> out;
  const auto& gen = generators.points();
  out.reserve(gen.size());
  for (std::size_t i = 0; i < gen.size(); ++i)
    for (std::size_t j = i; j < gen.size(); ++j) {
      const PairPoint p = lub(gen[i], gen[j]);
      if (box.contains(p))
        out.push_back(p);
    }
  return PairSet(std::move(out));
}

}  // namespace kws
