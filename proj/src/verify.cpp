#include "kummerws/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "kummerws/kummer.hpp"
#include "kummerws/two_point.hpp"

namespace kws {

namespace {

constexpr std::size_t kMaxMessages = 20;

struct LocalStats {
  Int curves = 0;
  Int places = 0;
  Int gamma_pairs = 0;
  Int failures = 0;
  std::vector<std::string> messages;

  void fail(const std::string& what) {
    ++failures;
    if (messages.size() < kMaxMessages)
      messages.push_back(what);
  }
};

std::string curve_key(Int m, const std::vector<Int>& lambdas) {
  std::ostringstream out;
  out << "m=" << m << " lambdas=";
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    out << (i ? "," : "") << lambdas[i];
  return out.str();
}

// O(log g) membership in H(P1,P2) using the Gamma bijection directly.
struct PairMembership {
  const GammaSet& g;
  const NumericalSemigroup& h1;
  const NumericalSemigroup& h2;
  std::vector<PairPoint> by_second;  // (b, a) sorted by b

  explicit PairMembership(const GammaSet& gamma, const NumericalSemigroup& s1,
                          const NumericalSemigroup& s2)
      : g(gamma), h1(s1), h2(s2) {
    by_second.reserve(g.pairs.size());
    for (PairPoint p : g.pairs)
      by_second.push_back({p.b, p.a});
    std::sort(by_second.begin(), by_second.end());
  }

  bool contains(PairPoint s) const {
    if (s.a < 0 || s.b < 0)
      return false;
    if (!h1.contains(s.a)) {
      // s.a is a gap: the unique Gamma pair with this first coordinate must fit
      const auto& pts = g.pairs.points();
      const auto it = std::lower_bound(pts.begin(), pts.end(), PairPoint{s.a, 0});
      if (it == pts.end() || it->a != s.a || it->b > s.b)
        return false;
    }
    if (!h2.contains(s.b)) {
      const auto it = std::lower_bound(by_second.begin(), by_second.end(), PairPoint{s.b, 0});
      if (it == by_second.end() || it->a != s.b || it->b > s.a)
        return false;
    }
    return true;
  }
};

void check_place(const KummerCurve& c, Place place, const std::string& key, LocalStats& st) {
  ++st.places;
  const GapSet gaps = gap_set(c, place);  // asserts |G| = genus internally
  const Int g = c.genus();
  if (gaps.genus() != g) {
    st.fail(key + ": gap cardinality != genus");
    return;
  }
  if (!gaps.values().empty() && gaps.values().back() > 2 * g - 1)
    st.fail(key + ": largest gap exceeds 2g-1");
  for (Int s = 0; s <= 2 * g; ++s)
    if (gaps.contains(s) != gap_criterion(c, place, s)) {
      st.fail(key + ": gap set disagrees with the arithmetic criterion at s=" + std::to_string(s));
      break;
    }
  if (!NumericalSemigroup(gaps).validate())
    st.fail(key + ": complement of the gap set is not additively closed");
}

void check_gamma(const KummerCurve& c, const GammaSet& gamma, const std::string& key,
                 LocalStats& st) {
  ++st.gamma_pairs;
  // make_gamma already enforced the bijection hypotheses; check the pure-gap routes
  const PairSet glb_gaps = pure_gaps_glb(gamma);
  if (glb_gaps != pure_gaps_sigma(gamma)) {
    st.fail(key + ": glb pure gaps differ from the sigma-criterion pure gaps");
    return;
  }
  const NumericalSemigroup h1(gamma.left_gaps), h2(gamma.right_gaps);
  const PairMembership member(gamma, h1, h2);
  for (PairPoint p : gamma.pairs)
    if (!member.contains(p)) {
      st.fail(key + ": Gamma element outside H(P1,P2)");
      break;
    }
  for (PairPoint p : glb_gaps)
    if (member.contains(p)) {
      st.fail(key + ": pure gap inside H(P1,P2)");
      break;
    }
}

void check_curve(Int m, const std::vector<Int>& lambdas, LocalStats& st) {
  KummerCurve c = KummerCurve::create(m, std::vector<Int>(lambdas));
  ++st.curves;
  const std::string key = curve_key(m, lambdas);
  try {
    check_place(c, Place::infinity(), key + " inf", st);
    // one representative index per distinct multiplicity value
    std::vector<std::size_t> first_index;
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      if (std::find(lambdas.begin(), lambdas.begin() + static_cast<long>(i), lambdas[i]) ==
          lambdas.begin() + static_cast<long>(i))
        first_index.push_back(i + 1);
    const bool all_ones = std::all_of(lambdas.begin(), lambdas.end(), [](Int l) { return l == 1; });
    for (std::size_t idx : first_index) {
      if (gcd(m, lambdas[idx - 1]) != 1)
        continue;
      check_place(c, Place::ramified(idx), key + " ram:" + std::to_string(idx), st);
      if (all_ones && gaps_all_ones(c) != gaps_at_ramified(c, idx))
        st.fail(key + ": all-ones gap formula disagrees with the general one");
      // a second place with the same multiplicity, if any
      const auto second =
          std::find(lambdas.begin() + static_cast<long>(idx), lambdas.end(), lambdas[idx - 1]);
      if (second != lambdas.end()) {
        const std::size_t idx2 = static_cast<std::size_t>(second - lambdas.begin()) + 1;
        check_gamma(c, gamma_same_multiplicity(c, idx, idx2),
                    key + " gamma(ram:" + std::to_string(idx) + ",ram:" + std::to_string(idx2) + ")",
                    st);
      }
      if (lambdas[idx - 1] == 1)
        check_gamma(c, gamma_infinity(c, idx), key + " gamma(inf,ram:" + std::to_string(idx) + ")",
                    st);
    }
  } catch (const std::exception& e) {
    st.fail(key + ": " + e.what());
  }
}

// Nondecreasing multiplicity tuples; the roots are irrelevant so multisets
// cover every curve.
void enumerate_tail(Int m, std::vector<Int>& lambdas, std::size_t depth, std::size_t r,
                    LocalStats& st) {
  if (depth == r) {
    Int sum = 0;
    for (Int l : lambdas)
      sum += l;
    if (gcd(m, sum) == 1)
      check_curve(m, lambdas, st);
    return;
  }
  for (Int l = lambdas[depth - 1]; l <= m - 1; ++l) {
    lambdas[depth] = l;
    enumerate_tail(m, lambdas, depth + 1, r, st);
  }
}

}  // namespace

VerifyReport verify_sweep(Int mmax, Int rmax, int threads) {
  if (mmax < 2 || rmax < 2)
    throw std::invalid_argument("verify_sweep needs mmax >= 2 and rmax >= 2");
  // tasks: one per (m, r, lambda_1)
  struct Task {
    Int m, first;
    std::size_t r;
  };
  std::vector<Task> tasks;
  for (Int m = 2; m <= mmax; ++m)
    for (std::size_t r = 2; r <= static_cast<std::size_t>(rmax); ++r)
      for (Int first = 1; first <= m - 1; ++first)
        tasks.push_back({m, first, r});
  std::atomic<std::size_t> next{0};
  std::mutex merge_mutex;
  VerifyReport report;
  const unsigned n_threads =
      threads > 0 ? static_cast<unsigned>(threads)
                  : std::max(1u, std::thread::hardware_concurrency());
  auto worker = [&] {
    LocalStats st;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size())
        break;
      const Task& t = tasks[i];
      std::vector<Int> lambdas(t.r);
      lambdas[0] = t.first;
      enumerate_tail(t.m, lambdas, 1, t.r, st);
    }
    const std::lock_guard<std::mutex> lock(merge_mutex);
    report.curves += st.curves;
    report.places += st.places;
    report.gamma_pairs += st.gamma_pairs;
    report.failures += st.failures;
    for (auto& msg : st.messages)
      if (report.failure_messages.size() < kMaxMessages)
        report.failure_messages.push_back(std::move(msg));
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n_threads; ++i)
    pool.emplace_back(worker);
  for (auto& t : pool)
    t.join();
  return report;
}

}  // namespace kws
