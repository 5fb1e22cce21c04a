#include <doctest.h>

#include <random>

#include "metafib/recurrence.hpp"
#include "oracles.hpp"

using namespace metafib;

namespace {

std::vector<BigInt> bigs(std::initializer_list<long> xs) {
  return std::vector<BigInt>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("h_{1,1} reproduces the first 26 terms") {
  const auto t = eval_range(h_spec(1, 1), 25);
  CHECK(t.complete());
  CHECK(t.values == bigs({1, 1, 2, 2, 4, 3, 6, 4, 10, 5, 13, 6, 19, 7, 23, 8, 33, 9, 38, 10,
                          51, 11, 57, 12, 76, 13}));
}

TEST_CASE("Fibonacci as a plain two-shift recurrence") {
  RecurrenceSpec s{{Shift{1}, Shift{2}}, bigs({0, 1}), NegStrict{}};
  const auto t = eval_range(s, 10);
  CHECK(t.complete());
  CHECK(t.values == bigs({0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55}));
}

TEST_CASE("g_{1,1} first terms") {
  const auto t = eval_range(g_spec(1, 1), 10);
  CHECK(t.values == bigs({1, 1, 2, 2, 4, 3, 6, 4, 10, 4, 16}));
  CHECK(std::get<BigInt>(eval(g_spec(1, 1), 10)) == 16);
}

TEST_CASE("eval picks single values") {
  CHECK(std::get<BigInt>(eval(h_spec(1, 1), 24)) == 76);
  CHECK(std::get<BigInt>(eval(h_spec(1, 1), 0)) == 1);
  CHECK_THROWS_AS(eval(h_spec(1, 1), -1), std::invalid_argument);
}

TEST_CASE("Hofstadter Q under 0-indexing") {
  RecurrenceSpec q{{Nested{0, 1}, Nested{0, 2}}, bigs({1, 1}), NegStrict{}};
  const auto t = eval_range(q, 10000);
  REQUIRE(t.complete());
  const auto ref = oracle::hofstadter_q(10001);
  for (Index n = 0; n <= 10000; ++n) CHECK(t[n] == ref[n + 1]);
  CHECK(std::get<BigInt>(eval(q, 6)) == 5);
}

TEST_CASE("strict sequences die on a negative reference") {
  // f(n) = f(n - f(n-1)) + f(n-2), f(0) = 1, f(1) = 3: f(2) = f(2-3) dies
  RecurrenceSpec s{{Nested{0, 1}, Shift{2}}, bigs({1, 3}), NegStrict{}};
  const auto t = eval_range(s, 10);
  CHECK_FALSE(t.complete());
  REQUIRE(t.failure);
  CHECK(t.failure->kind == FailureKind::Died);
  CHECK(t.failure->at == 2);
  CHECK(t.size() == 2);
  CHECK(std::get<Failure>(eval(s, 5)) == Failure{FailureKind::Died, 2});
}

TEST_CASE("a zero inner value makes the recurrence refer to itself") {
  RecurrenceSpec s{{Nested{0, 1}}, bigs({0}), NegConstant{1}};
  const auto t = eval_range(s, 3);
  REQUIRE(t.failure);
  CHECK(t.failure->kind == FailureKind::NonWellFounded);
  CHECK(t.failure->at == 1);
  CHECK(to_string(FailureKind::NonWellFounded) == "non-well-founded");
}

TEST_CASE("huge inner values read the negative-index constant") {
  // f doubles; f(n - d - f(n-1)) with f beyond 64 bits must resolve to c
  RecurrenceSpec t{{Shift{1}, Shift{1}, Nested{0, 1}}, bigs({1}), NegConstant{7}};
  const auto tab = eval_range(t, 80);
  REQUIRE(tab.complete());
  CHECK(tab[80] > BigInt(1) << 64);
}

TEST_CASE("Tanny-style offsets d") {
  // T(n) = T(n-1-T(n-1)) + T(n-2-T(n-2))
  RecurrenceSpec s{{Nested{1, 1}, Nested{2, 2}}, bigs({1, 1, 2}), NegStrict{}};
  const auto t = eval_range(s, 500);
  oracle::Meta m({{true, 1, 1}, {true, 2, 2}}, {1, 1, 2}, std::nullopt);
  const auto ref = m.run(500);
  CHECK(t.complete() == !ref.failed_at.has_value());
  CHECK(oracle::same(t.values, ref.values));
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(eval_range(RecurrenceSpec{{}, bigs({1}), NegStrict{}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(eval_range(RecurrenceSpec{{Shift{1}}, {}, NegStrict{}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(eval_range(RecurrenceSpec{{Shift{0}}, bigs({1}), NegStrict{}}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_range(RecurrenceSpec{{Nested{0, 0}}, bigs({1}), NegStrict{}}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_range(RecurrenceSpec{{Nested{-1, 1}}, bigs({1}), NegStrict{}}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_range(RecurrenceSpec{{Shift{1}}, bigs({-1}), NegStrict{}}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_range(h_spec(1, 1), -1), std::invalid_argument);
  CHECK_THROWS_AS(h_spec(0, 1), std::invalid_argument);
}

TEST_CASE("short tables hold only the initial values") {
  const auto t = eval_range(h_spec(3, 5), 0);
  CHECK(t.values == bigs({3}));
  CHECK(t.complete());
}

TEST_CASE("subsequences") {
  const auto t = eval_range(h_spec(1, 1), 25);
  CHECK(subsequence(t, 2, 1) == bigs({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}));
  CHECK(subsequence(t, 1, 0) == t.values);
  CHECK(subsequence(eval_range(g_spec(1, 1), 13), 2, 1) == bigs({1, 2, 3, 4, 4, 4, 4}));
  CHECK_THROWS_AS(subsequence(t, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(subsequence(t, 0, 0), std::invalid_argument);
}

TEST_CASE("h and g families agree with the literal definition") {
  for (long a = 1; a <= 6; ++a)
    for (long b = 1; b <= 6; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(oracle::same(eval_range(h_spec(a, b), 600).values, oracle::hg(a, b, 600, false)));
      CHECK(oracle::same(eval_range(g_spec(a, b), 600).values, oracle::hg(a, b, 600, true)));
    }
}

TEST_CASE("random recurrences match the brute-force evaluator") {
  std::mt19937_64 rng(7);
  auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  int died = 0, looped = 0;
  for (int trial = 0; trial < 400; ++trial) {
    RecurrenceSpec s;
    std::vector<oracle::Term> ot;
    std::vector<long> init;
    const long terms = uni(1, 3);
    for (long i = 0; i < terms; ++i) {
      if (uni(0, 1)) {
        const long d = uni(0, 2), u = uni(1, 4);
        s.terms.push_back(Nested{d, u});
        ot.push_back({true, d, u});
      } else {
        const long v = uni(1, 4);
        s.terms.push_back(Shift{v});
        ot.push_back({false, 0, v});
      }
    }
    for (long i = uni(1, 4); i > 0; --i) {
      init.push_back(uni(0, 5));
      s.init.emplace_back(init.back());
    }
    std::optional<long> neg;
    if (uni(0, 2)) {
      neg = uni(0, 3);
      s.neg = NegConstant{*neg};
    }
    const auto t = eval_range(s, 300);
    const auto ref = oracle::Meta(ot, init, neg).run(300);
    CAPTURE(trial);
    REQUIRE(oracle::same(t.values, ref.values));
    REQUIRE(t.death() == ref.failed_at);
    if (t.failure) {
      CHECK((t.failure->kind == FailureKind::NonWellFounded) == ref.non_well_founded);
      (t.failure->kind == FailureKind::Died ? died : looped)++;
    }
  }
  // the corpus exercises both failure kinds
  CHECK(died > 0);
  CHECK(looped > 0);
}

TEST_CASE("a positive constant never lets a sequence fail") {
  std::mt19937_64 rng(11);
  auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  for (int trial = 0; trial < 200; ++trial) {
    RecurrenceSpec s;
    s.terms.push_back(Shift{uni(1, 4)});
    for (long i = uni(0, 2); i > 0; --i) s.terms.push_back(Nested{uni(0, 4), uni(1, 4)});
    s.init = {uni(1, 6), uni(1, 6)};
    s.neg = NegConstant{uni(1, 6)};
    CAPTURE(trial);
    CHECK(eval_range(s, 2000).complete());
  }
}

TEST_CASE("with constant 0 a nested term can point at itself") {
  // f(2) = f(2 - f(2-3)) + f(0) = f(2 - 0) + ...: inner index 2 is not below 2
  const auto t = eval_range(meta_spec(3, 2, {1, 1}, NegConstant{0}), 10);
  REQUIRE(t.failure);
  CHECK(t.failure->kind == FailureKind::NonWellFounded);
  CHECK(t.failure->at == 2);
}

TEST_CASE("tables are deterministic") {
  const auto s = meta_spec(2, 3, {2, 5, 1}, NegConstant{3});
  CHECK(eval_range(s, 700).values == eval_range(s, 700).values);
}
