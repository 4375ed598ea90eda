#ifndef KUMMERWS_SEMIGROUP_HPP
#define KUMMERWS_SEMIGROUP_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace kws {

using Int = std::int64_t;

/// Finite gap set of a numerical semigroup: strictly increasing positive integers.
class GapSet {
public:
  GapSet() = default;
  explicit GapSet(std::vector<Int> gaps);  // throws std::invalid_argument if unsorted/duplicate/non-positive

  const std::vector<Int>& values() const { return gaps_; }
  Int genus() const { return static_cast<Int>(gaps_.size()); }
  /// Largest gap; -1 for the empty gap set (H = N).
  Int frobenius() const { return gaps_.empty() ? -1 : gaps_.back(); }
  bool contains(Int s) const;
  bool empty() const { return gaps_.empty(); }

  bool operator==(const GapSet&) const = default;

private:
  std::vector<Int> gaps_;
};

/// Numerical semigroup represented by its (finite) complement in N.
class NumericalSemigroup {
public:
  NumericalSemigroup() = default;
  explicit NumericalSemigroup(GapSet gaps) : gaps_(std::move(gaps)) {}

  const GapSet& gap_set() const { return gaps_; }
  Int genus() const { return gaps_.genus(); }
  Int frobenius() const { return gaps_.frobenius(); }
  bool contains(Int s) const { return s >= 0 && !gaps_.contains(s); }

  /// True iff 0 is a member and membership is closed under addition.
  /// Sums are checked on [0, F+1]^2; anything larger exceeds the Frobenius number.
  bool validate() const;

  /// First `count` elements rho_1 = 0 < rho_2 < ...
  std::vector<Int> enumerate(Int count) const;

private:
  GapSet gaps_;
};

NumericalSemigroup semigroup_from_gaps(GapSet gaps);

struct PairPoint {
  Int a = 0;
  Int b = 0;
  auto operator<=>(const PairPoint&) const = default;
};

inline PairPoint lub(PairPoint x, PairPoint y) {
  return {x.a > y.a ? x.a : y.a, x.b > y.b ? x.b : y.b};
}

inline PairPoint glb(PairPoint x, PairPoint y) {
  return {x.a < y.a ? x.a : y.a, x.b < y.b ? x.b : y.b};
}

/// Deduplicated set of lattice points, kept in lexicographic order.
class PairSet {
public:
  PairSet() = default;
  explicit PairSet(std::vector<PairPoint> points);  // sorts and dedups

  const std::vector<PairPoint>& points() const { return points_; }
  bool contains(PairPoint p) const;
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool operator==(const PairSet&) const = default;

private:
  std::vector<PairPoint> points_;
};

/// Inclusive window [0,b1] x [0,b2].
struct Box {
  Int b1 = 0;
  Int b2 = 0;
  bool contains(PairPoint p) const { return p.a >= 0 && p.b >= 0 && p.a <= b1 && p.b <= b2; }
};

/// { lub(x,y) : x,y in generators } clipped to the box. Generators inside the
/// box survive via lub(x,x) = x.
PairSet lub_closure(const PairSet& generators, Box box);

}  // namespace kws

#endif
