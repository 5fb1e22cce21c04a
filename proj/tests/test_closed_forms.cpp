#include <doctest.h>

#include "metafib/closed_forms.hpp"
#include "metafib/recurrence.hpp"
#include "oracles.hpp"

using namespace metafib;

TEST_CASE("parameter dispatch") {
  CHECK(classify_params({1, 1, Family::H}) == CaseTag::H11);
  CHECK(classify_params({1, 7, Family::H}) == CaseTag::H1b);
  CHECK(classify_params({2, 1, Family::H}) == CaseTag::H21);
  CHECK(classify_params({5, 1, Family::H}) == CaseTag::Ha1_a_ge3);
  CHECK(classify_params({3, 3, Family::H}) == CaseTag::Ha_b_both_ge2);
  CHECK(classify_params({4, 4, Family::G}) == CaseTag::G_a_ge_b_ge2);
  CHECK(classify_params({5, 5, Family::G}) == CaseTag::G_b_ge_a_ge2);
  CHECK(classify_params({1, 1, Family::G}) == CaseTag::G11);
  CHECK(classify_params({1, 2, Family::G}) == CaseTag::G12);
  CHECK(classify_params({2, 1, Family::G}) == CaseTag::G21);
  CHECK(classify_params({6, 1, Family::G}) == CaseTag::G_a_ge3_b1);
  CHECK(classify_params({1, 6, Family::G}) == CaseTag::G_a1_b_ge3);
  CHECK(classify_params({7, 3, Family::G}) == CaseTag::G_a_ge_b_ge2);
  CHECK(classify_params({3, 7, Family::G}) == CaseTag::G_b_ge_a_ge2);
  CHECK(to_string(CaseTag::G_b_ge_a_ge2) == "G_b_ge_a_ge2");
}

TEST_CASE("every parameter pair lands in exactly one case per family") {
  for (Index a = 1; a <= 30; ++a)
    for (Index b = 1; b <= 30; ++b) {
      const auto h = classify_params({a, b, Family::H});
      const auto g = classify_params({a, b, Family::G});
      CHECK(to_string(h)[0] == 'H');
      CHECK(to_string(g)[0] == 'G');
    }
}

TEST_CASE("closed-form values") {
  CHECK(h_fast(1, 1, 24) == 76);
  CHECK(h_fast(3, 4, 7) == 13);
  CHECK(h_fast(2, 1, 9) == 8);
  CHECK(h_fast(2, 1, 8) == 10);
  CHECK(h_fast(4, 1, 5) == 9);
  CHECK(g_fast(3, 2, 6) == 24);
  CHECK(g_fast(2, 5, 7) == 40);
  CHECK(g_fast(5, 3, 8) == 14);
  CHECK(g_fast(1, 1, 10) == 16);
}

TEST_CASE("fast values equal the literal definition") {
  for (Index a = 1; a <= 9; ++a)
    for (Index b = 1; b <= 9; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(oracle::same(h_fast_range(a, b, 1500), oracle::hg(a, b, 1500, false)));
      CHECK(oracle::same(g_fast_range(a, b, 1500), oracle::hg(a, b, 1500, true)));
    }
}

TEST_CASE("single values agree with ranges far out") {
  const auto h = h_fast_range(1, 3, 5000);
  const auto g = g_fast_range(2, 2, 3000);
  for (Index n : {0, 1, 2, 77, 1024, 4999, 5000}) CHECK(h_fast(1, 3, n) == h[n]);
  for (Index n : {0, 1, 2, 999, 3000}) CHECK(g_fast(2, 2, n) == g[n]);
}

TEST_CASE("evaluator agreement beyond the grid") {
  for (Index a : {10, 13})
    for (Index b : {1, 2, 9, 14}) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(h_fast_range(a, b, 3000) == eval_range(h_spec(a, b), 3000).values);
      CHECK(g_fast_range(a, b, 3000) == eval_range(g_spec(a, b), 3000).values);
    }
}

TEST_CASE("sporadic seeds") {
  CHECK(g_sporadic_seed(CaseTag::G11) == std::vector<long>{1, 1, 2, 2, 4, 3});
  CHECK(g_sporadic_seed(CaseTag::G12) == std::vector<long>{1, 2, 2, 4, 3});
  CHECK(g_sporadic_seed(CaseTag::G21) == std::vector<long>{2, 1, 3, 3, 4, 4, 7});
  for (auto tag : {CaseTag::G11, CaseTag::G12, CaseTag::G21}) {
    const auto& seed = g_sporadic_seed(tag);
    const Index a = seed[0], b = seed[1];
    const auto ref = oracle::hg(a, b, static_cast<long>(seed.size()) - 1, true);
    for (std::size_t i = 0; i < seed.size(); ++i) CHECK(ref[i] == seed[i]);
  }
  CHECK_THROWS_AS(g_sporadic_seed(CaseTag::H11), std::invalid_argument);
}

TEST_CASE("prefix-sum forms") {
  CHECK(h_prefix_sum_check(1, 1, 1000));
  CHECK(h_prefix_sum_check(1, 5, 1000));
  CHECK(h_prefix_sum_check(1, 1, 0));
  CHECK_THROWS_AS(h_prefix_sum_check(2, 1, 10), std::invalid_argument);
}

TEST_CASE("g shift identity") {
  CHECK(g_shift_check(5, 2, 2000));
  CHECK(g_shift_check(5, 3, 2000));
  CHECK(g_shift_check(3, 2, 0));
  CHECK_THROWS_AS(g_shift_check(2, 2, 10), std::invalid_argument);
  CHECK_THROWS_AS(g_shift_check(3, 1, 10), std::invalid_argument);
}

TEST_CASE("negative indices are rejected") {
  CHECK_THROWS_AS(h_fast(1, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(g_fast(0, 1, 3), std::invalid_argument);
}
