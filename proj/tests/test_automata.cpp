#include <doctest.h>

#include "metafib/automata.hpp"
#include "metafib/partitions.hpp"
#include "oracles.hpp"

using namespace metafib;

namespace {

std::vector<int> r_oracle(long n_max) {
  std::vector<int> r;
  for (const auto& v : oracle::hg(1, 1, n_max, false)) r.push_back(static_cast<int>(v % 2));
  return r;
}

}  // namespace

TEST_CASE("Thue-Morse automaton") {
  const Dfao d = ptm_dfao();
  CHECK_NOTHROW(d.validate());
  CHECK(d.state_count() == 2);
  CHECK(d.order == DigitOrder::MostSignificantFirst);
  for (std::size_t s = 0; s < 2; ++s) CHECK(d.transitions[s][0] == s);
  CHECK(run_dfao(d, 0) == 1);
  CHECK(run_dfao(d, 3) == 1);
  for (std::uint64_t n = 0; n < 4096; ++n) CHECK(run_dfao(d, n) == oracle::thue_morse(n));
}

TEST_CASE("r from the mod-2 relations") {
  const int listing[] = {1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1};
  for (int n = 0; n <= 25; ++n) CHECK(r_direct(n) == listing[n]);
  const auto ref = r_oracle(20000);
  for (long n = 0; n <= 20000; ++n) CHECK(r_direct(n) == ref[n]);
  for (std::uint64_t n = 0; n < 8; ++n) {
    CHECK(r_direct(8 * n + 4) == (std::vector<int>{0, 1, 1, 0})[n % 4]);
    CHECK(r_direct(16 * n + 8) == (std::vector<int>{0, 0, 1, 1})[n % 4]);
  }
  CHECK(check_r_relations(10000));
  CHECK(check_r_relations(0));
  CHECK(check_r_relations(100000));
  CHECK(check_r_periods(10000));
}

TEST_CASE("h modulo m") {
  for (std::uint32_t m : {2u, 3u, 5u, 1000u}) {
    HModTable t(m);
    const auto ref = oracle::hg(1, 1, 5000, false);
    for (long n = 5000; n >= 0; n -= 7) CHECK(t(n) == ref[n] % m);
  }
  CHECK_THROWS_AS(HModTable(0), std::invalid_argument);
}

TEST_CASE("the r(2n) automaton") {
  const Dfao d = r2n_dfao();
  CHECK_NOTHROW(d.validate());
  CHECK(d.state_count() == 14);
  CHECK(d.order == DigitOrder::LeastSignificantFirst);
  CHECK(run_dfao(d, 0) == 1);
  CHECK(run_dfao(d, 2) == 0);
  CHECK(run_dfao(d, 6) == 1);
  const auto ref = r_oracle(2 * 40000);
  for (std::uint64_t n = 0; n < 40000; ++n) CHECK(run_dfao(d, n) == ref[2 * n]);
  for (std::uint64_t n = 40000; n < (1u << 18); ++n)
    if (run_dfao(d, n) != r_direct(2 * n)) FAIL("mismatch at " << n);
}

TEST_CASE("automaton validation") {
  Dfao d = ptm_dfao();
  d.transitions[1][1] = 5;
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);
  d = ptm_dfao();
  d.outputs.pop_back();
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);
  d = ptm_dfao();
  d.base = 1;
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}

TEST_CASE("dot export") {
  const auto dot = to_dot(r2n_dfao(), "r2n");
  CHECK(dot.rfind("digraph", 0) == 0);
  std::size_t nodes = 0;
  for (auto p = dot.find("shape=circle"); p != std::string::npos; p = dot.find("shape=circle", p + 1))
    ++nodes;
  CHECK(nodes == 14);
}

TEST_CASE("kernels") {
  SUBCASE("Thue-Morse: t and -t") {
    const auto rep =
        kernel_explore([](std::uint64_t n) { return std::int64_t(ptm(Index(n)) > 0); }, 2, 4096, 16);
    CHECK(rep.closed);
    CHECK(rep.class_count() == 2);
    CHECK(rep.evidence_only);
  }
  SUBCASE("r closes") {
    const auto rep = kernel_explore([](std::uint64_t n) { return r_direct(n); }, 2, 1 << 14, 64);
    CHECK(rep.closed);
    CHECK_FALSE(rep.truncated);
    CHECK(rep.class_count() <= 64);
    CHECK(rep.classes[0][0] == KernelDescriptor{0, 0});
  }
  SUBCASE("h mod 3 runs past the budget") {
    HModTable t(3);
    const auto rep = kernel_explore([&t](std::uint64_t n) { return std::int64_t(t(n)); }, 2,
                                    1 << 14, 200);
    CHECK(rep.truncated);
    CHECK_FALSE(rep.closed);
    CHECK(rep.class_count() == 200);
  }
  SUBCASE("preconditions") {
    auto f = [](std::uint64_t) { return std::int64_t(0); };
    CHECK_THROWS_AS(kernel_explore(f, 1, 64, 4), std::invalid_argument);
    CHECK_THROWS_AS(kernel_explore(f, 2, 8, 4), std::invalid_argument);
    CHECK_THROWS_AS(kernel_explore(f, 2, 64, 0), std::invalid_argument);
    const auto rep = kernel_explore(f, 2, 64, 4);
    CHECK(rep.closed);
    CHECK(rep.class_count() == 1);
  }
}

TEST_CASE("kernel ranks") {
  // n itself is 2-regular: its kernel spans {n, 1}
  const auto lin = kernel_rank_profile([](std::uint64_t n) { return std::int64_t(n); }, 2, 256, 6);
  CHECK(lin.stabilized);
  CHECK(lin.rank_by_depth.back() == 2);
  // positions of 0s and 1s in r
  for (int bit : {0, 1}) {
    const auto pos = r_level_positions(bit, 1 << 16);
    CHECK(pos.size() == (1u << 16));
    for (std::size_t i = 0; i < 64; ++i) CHECK(r_direct(pos[i]) == bit);
    const auto prof = kernel_rank_profile(
        [&pos](std::uint64_t n) { return std::int64_t(pos[n]); }, 2, 512, 6);
    CHECK(prof.rank_by_depth.size() >= 2);
  }
}

TEST_CASE("growth against binary partitions") {
  const auto rep = growth_witness(1, 1, 4096);
  CHECK(rep.lower_bound_holds);
  CHECK_FALSE(rep.first_violation);
  REQUIRE(rep.witnesses.size() == 4);
  for (const auto& w : rep.witnesses) {
    CAPTURE(w.exponent);
    REQUIRE(w.first);
    CHECK(*w.first <= 4096);
  }
  // h(24) = 76 > 12
  CHECK(*rep.witnesses[0].first <= 12);
  const auto rb = growth_witness(1, 4, 2048);
  CHECK(rb.lower_bound_holds);
  CHECK_THROWS_AS(growth_witness(2, 1, 100), std::invalid_argument);
}
