// Exercises the shared-library C interface end to end.
#include "doctest.h"
#include "kummerws.h"

#include <cstring>
#include <string>
#include <vector>

namespace {

std::vector<int64_t> to_vector(kws_intvec* v) {
  std::vector<int64_t> out;
  for (size_t i = 0; i < kws_intvec_size(v); ++i)
    out.push_back(kws_intvec_at(v, i));
  kws_intvec_destroy(v);
  return out;
}

std::vector<std::pair<int64_t, int64_t>> to_pairs(kws_pairvec* v) {
  std::vector<std::pair<int64_t, int64_t>> out;
  for (size_t i = 0; i < kws_pairvec_size(v); ++i) {
    int64_t a = 0, b = 0;
    kws_pairvec_at(v, i, &a, &b);
    out.emplace_back(a, b);
  }
  kws_pairvec_destroy(v);
  return out;
}

}  // namespace

TEST_CASE("curve lifecycle and errors") {
  const int64_t lambdas[] = {1, 1, 1};
  kws_curve* c = nullptr;
  REQUIRE(kws_curve_create(4, lambdas, 3, &c) == KWS_OK);
  CHECK(kws_curve_m(c) == 4);
  CHECK(kws_curve_r(c) == 3);
  CHECK(kws_curve_genus(c) == 3);
  kws_curve_destroy(c);

  const int64_t bad[] = {1, 1};
  kws_curve* none = nullptr;
  CHECK(kws_curve_create(4, bad, 2, &none) == KWS_EINVAL);
  CHECK(none == nullptr);
  CHECK(std::string(kws_last_error()).size() > 0);
  CHECK(std::string(kws_status_str(KWS_EINVAL)) == "invalid argument");
}

TEST_CASE("gap sets through the C interface") {
  const int64_t lambdas[] = {1, 1, 1};
  kws_curve* c = nullptr;
  REQUIRE(kws_curve_create(4, lambdas, 3, &c) == KWS_OK);

  kws_intvec* gaps = nullptr;
  REQUIRE(kws_gap_set(c, KWS_PLACE_INF, &gaps) == KWS_OK);
  CHECK(to_vector(gaps) == std::vector<int64_t>{1, 2, 5});

  REQUIRE(kws_gap_set(c, 2, &gaps) == KWS_OK);
  CHECK(to_vector(gaps) == std::vector<int64_t>{1, 2, 5});

  int is_gap = 0;
  REQUIRE(kws_is_gap(c, KWS_PLACE_INF, 5, &is_gap) == KWS_OK);
  CHECK(is_gap == 1);
  REQUIRE(kws_is_gap(c, KWS_PLACE_INF, 3, &is_gap) == KWS_OK);
  CHECK(is_gap == 0);

  CHECK(kws_gap_set(c, 7, &gaps) == KWS_EINVAL);
  kws_curve_destroy(c);
}

TEST_CASE("gamma and pure gaps through the C interface") {
  const int64_t lambdas[] = {1, 1, 1};
  kws_curve* c = nullptr;
  REQUIRE(kws_curve_create(4, lambdas, 3, &c) == KWS_OK);

  kws_pairvec* pairs = nullptr;
  REQUIRE(kws_gamma(c, KWS_PLACE_INF, 1, &pairs) == KWS_OK);
  CHECK(to_pairs(pairs) ==
        std::vector<std::pair<int64_t, int64_t>>{{1, 5}, {2, 2}, {5, 1}});

  for (kws_puregap_method m : {KWS_PUREGAPS_GLB, KWS_PUREGAPS_SIGMA, KWS_PUREGAPS_BOTH}) {
    REQUIRE(kws_pure_gaps(c, 1, 2, m, &pairs) == KWS_OK);
    CHECK(to_pairs(pairs) ==
          std::vector<std::pair<int64_t, int64_t>>{{1, 1}, {1, 2}, {2, 1}});
  }

  CHECK(kws_gamma(c, KWS_PLACE_INF, KWS_PLACE_INF, &pairs) == KWS_EINVAL);
  kws_curve_destroy(c);
}

TEST_CASE("families and codes through the C interface") {
  kws_family* f = nullptr;
  REQUIRE(kws_family_create("bm-subcover", 0, 4, 3, 65, &f) == KWS_OK);
  CHECK(kws_curve_genus(kws_family_curve(f)) == 92);
  CHECK(kws_family_field_size(f) == 4096);
  CHECK(kws_family_rational_places(f) == 15873);
  CHECK(kws_family_split_lines(f) == 244);
  int maximal = 0;
  REQUIRE(kws_family_is_maximal(f, &maximal) == KWS_OK);
  CHECK(maximal == 1);
  kws_family_destroy(f);

  kws_family* bad = nullptr;
  CHECK(kws_family_create("bm-subcover", 0, 4, 3, 13, &bad) == KWS_EINVAL);
  CHECK(kws_family_create("nope", 0, 4, 3, 13, &bad) == KWS_EINVAL);

  kws_code_params params{};
  REQUIRE(kws_family_create("norm-trace", 0, 3, 3, 0, &f) == KWS_OK);
  REQUIRE(kws_one_point_code(f, 2, &params) == KWS_OK);
  CHECK(params.n == 243);
  CHECK(params.k == 3);
  CHECK(params.has_exact == 1);
  CHECK(params.d_exact == 230);
  kws_family_destroy(f);

  REQUIRE(kws_corollary_code("norm-trace", 0, 3, 3, 2, &params) == KWS_OK);
  CHECK(params.k == 3);
  CHECK(std::string(params.provenance) == "cor-norm-trace");

  REQUIRE(kws_bm_one_point_code(4, 3, 5, 3, &params) == KWS_OK);
  CHECK(params.n == 4352);
  int64_t defect = -1;
  REQUIRE(kws_singleton_defect(&params, &defect) == KWS_OK);
  CHECK(defect == 2);

  REQUIRE(kws_two_point_code_inf(4, 3, 11, &params) == KWS_OK);
  CHECK(params.k == 15620);
  CHECK(params.d_lower == 162);
  REQUIRE(kws_two_point_code_01(3, 53, 53, &params) == KWS_OK);
  CHECK(params.k == 15745);
  CHECK(params.d_lower == 44);
  CHECK(kws_two_point_code_01(3, 60, 53, &params) == KWS_EINVAL);
}

TEST_CASE("order bound and tables through the C interface") {
  kws_family* f = nullptr;
  REQUIRE(kws_family_create("bm-subcover", 0, 4, 3, 65, &f) == KWS_OK);
  int64_t rho = 0, d = 0;
  REQUIRE(kws_order_bound(kws_family_curve(f), 1, 252, &rho, &d) == KWS_OK);
  CHECK(rho == 343);
  CHECK(d == 160);

  kws_code_params params{};
  REQUIRE(kws_dual_one_point_code(f, 1, 252, &params) == KWS_OK);
  CHECK(params.n == 15872);
  CHECK(params.k == 15620);
  CHECK(params.d_lower == 160);
  kws_family_destroy(f);

  char* csv = nullptr;
  REQUIRE(kws_table_csv(2, &csv) == KWS_OK);
  CHECK(std::strncmp(csv, "k,d_lower,provenance\n", 21) == 0);
  kws_string_destroy(csv);

  int ok = 0;
  REQUIRE(kws_table_check(2, &ok) == KWS_OK);
  CHECK(ok == 1);
  CHECK(kws_table_csv(5, &csv) == KWS_EINVAL);
}

TEST_CASE("verify sweep through the C interface") {
  kws_verify_report report{};
  char* message = nullptr;
  REQUIRE(kws_verify_sweep(8, 3, 2, &report, &message) == KWS_OK);
  CHECK(report.curves > 0);
  CHECK(report.failures == 0);
  CHECK(message == nullptr);
}
