#include "doctest.h"
#include "kummerws/families.hpp"

#include <stdexcept>

using namespace kws;

TEST_CASE("family name round trip") {
  for (FamilyName f : {FamilyName::AbdonGarcia, FamilyName::GeneralizedHermitian,
                       FamilyName::NormTrace, FamilyName::BmSubcover})
    CHECK(family_name_parse(family_name_str(f)) == f);
  CHECK_FALSE(family_name_parse("hermitian").has_value());
}

TEST_CASE("abdon-garcia") {
  const FamilyInstance f = instantiate(FamilyName::AbdonGarcia, {.p = 2, .n = 3});
  // q = 8: curve y^9 over F_64, r = q/p = 4
  CHECK(f.curve.m() == 9);
  CHECK(f.curve.num_roots() == 4);
  CHECK(f.field_size == 64);
  CHECK(f.n_rational == 257);
  // closed-form genus q(q/p - 1)/2
  CHECK(f.curve.genus() == 8 * 3 / 2);
  CHECK(maximality_check(f));

  CHECK_THROWS_AS(instantiate(FamilyName::AbdonGarcia, {.p = 4, .n = 2}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate(FamilyName::AbdonGarcia, {.p = 2, .n = 1}), std::invalid_argument);
  // q/p = 2 < 3
  CHECK_THROWS_AS(instantiate(FamilyName::AbdonGarcia, {.p = 2, .n = 2}), std::invalid_argument);
}

TEST_CASE("generalized hermitian") {
  const FamilyInstance f = instantiate(FamilyName::GeneralizedHermitian, {.q = 3, .n = 3});
  CHECK(f.curve.m() == 28);
  CHECK(f.curve.num_roots() == 3);
  CHECK(f.field_size == 729);
  CHECK(f.n_rational == 2188);
  // closed-form genus q^n (q-1)/2
  CHECK(f.curve.genus() == 27);
  CHECK(maximality_check(f));

  // n = 1 is the Hermitian curve itself
  const FamilyInstance h = instantiate(FamilyName::GeneralizedHermitian, {.q = 3, .n = 1});
  CHECK(h.curve.genus() == 3);
  CHECK(h.n_rational == 28);
  CHECK(maximality_check(h));

  CHECK_THROWS_AS(instantiate(FamilyName::GeneralizedHermitian, {.q = 3, .n = 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(instantiate(FamilyName::GeneralizedHermitian, {.q = 6, .n = 3}),
                  std::invalid_argument);
}

TEST_CASE("norm-trace") {
  const FamilyInstance f = instantiate(FamilyName::NormTrace, {.q = 3, .n = 2});
  CHECK(f.curve.m() == 4);
  CHECK(f.curve.num_roots() == 3);
  CHECK(f.curve.genus() == 3);
  CHECK(f.n_rational == 28);

  const FamilyInstance big = instantiate(FamilyName::NormTrace, {.q = 3, .n = 3});
  CHECK(big.curve.m() == 13);
  CHECK(big.curve.num_roots() == 9);
  CHECK(big.n_rational == 244);
  // closed-form genus q (q^{n-1} - 1)^2 / (2(q-1))
  CHECK(big.curve.genus() == 3 * 8 * 8 / 4);

  // norm-trace lives over F_{q^n}, not a square for odd n: no maximality notion
  CHECK_THROWS_AS(maximality_check(big), std::invalid_argument);
}

TEST_CASE("bm subcover") {
  const FamilyInstance f = instantiate(FamilyName::BmSubcover, {.q = 4, .n = 3, .m = 65});
  CHECK(f.curve.m() == 65);
  CHECK(f.curve.lambdas() == std::vector<Int>{1, 1, 5, 5});
  CHECK(f.curve.genus() == 92);
  CHECK(f.field_size == 4096);
  CHECK(f.n_rational == 15873);
  CHECK(f.n_split == 244);
  CHECK(f.n_rational == 3 + 5 * 2 + f.n_split * 65);
  CHECK(maximality_check(f));

  // m = q + 1: the (q+1)-power factors are m-th powers and drop out
  const FamilyInstance small = instantiate(FamilyName::BmSubcover, {.q = 4, .n = 3, .m = 5});
  CHECK(small.curve.lambdas() == std::vector<Int>{1, 1});
  CHECK(small.curve.genus() == 2);
  CHECK(small.n_rational == 4353);
  CHECK(maximality_check(small));

  CHECK_THROWS_AS(instantiate(FamilyName::BmSubcover, {.q = 4, .n = 3, .m = 13}),
                  std::invalid_argument);  // q+1 does not divide m
  CHECK_THROWS_AS(instantiate(FamilyName::BmSubcover, {.q = 4, .n = 3, .m = 10}),
                  std::invalid_argument);  // m does not divide q^n+1
  CHECK_THROWS_AS(instantiate(FamilyName::BmSubcover, {.q = 5, .n = 3, .m = 6}),
                  std::invalid_argument);  // q odd
  CHECK_THROWS_AS(instantiate(FamilyName::BmSubcover, {.q = 4, .n = 2, .m = 5}),
                  std::invalid_argument);  // n even
}

TEST_CASE("bm closed form covers divisors outside the instantiable range") {
  const BmClosedForm cf = bm_closed_form(4, 3, 13);
  CHECK(cf.genus == 14);
  CHECK(cf.n_rational == 5889);
  CHECK(cf.n_rational == cf.field_size + 1 + 2 * cf.genus * 64);

  const BmClosedForm big = bm_closed_form(8, 3, 9);
  CHECK(big.genus == 4);
  CHECK(big.n_rational == 266241);
  CHECK(big.n_rational == big.field_size + 1 + 2 * big.genus * 512);

  CHECK_THROWS_AS(bm_closed_form(4, 3, 10), std::invalid_argument);
}

TEST_CASE("maximality is an exact equality") {
  FamilyInstance f = instantiate(FamilyName::BmSubcover, {.q = 4, .n = 3, .m = 5});
  f.n_rational += 1;
  CHECK_FALSE(maximality_check(f));
}

TEST_CASE("point-count expressions agree across the sweep") {
  for (Int q : {Int{4}, Int{8}})
    for (Int n : {Int{3}, Int{5}}) {
      const Int qn = checked_pow(q, n);
      for (Int m = 2; m <= qn + 1; ++m) {
        if ((qn + 1) % m != 0 || m % (q + 1) != 0)
          continue;
        const FamilyInstance f = instantiate(FamilyName::BmSubcover, {.q = q, .n = n, .m = m});
        CHECK(f.n_rational == 3 + (q + 1) * (q - 2) + f.n_split * m);
        CHECK(f.curve.genus() == (m * (q - 1) - q * q + q + 1) / 2);
        CHECK(maximality_check(f));
      }
    }
}

TEST_CASE("integer helpers") {
  CHECK(checked_pow(2, 10) == 1024);
  CHECK(checked_pow(7, 0) == 1);
  CHECK_THROWS_AS(checked_pow(10, 30), std::overflow_error);
  CHECK(perfect_sqrt(4096) == 64);
  CHECK_FALSE(perfect_sqrt(4097).has_value());
  CHECK(perfect_sqrt(0) == 0);
  CHECK_FALSE(perfect_sqrt(-4).has_value());
}
