#include <doctest.h>

#include <numeric>

#include "hodge/formulas.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hodge;
using namespace hodge::testing;

TEST_CASE("gbinom on small and negative arguments") {
  CHECK(gbinom(5, 2) == 10);
  CHECK(gbinom(2, 3) == 0);
  CHECK(gbinom(-1, 3) == -1);
  CHECK(gbinom(-2, 2) == 3);
  CHECK(gbinom(0, 0) == 1);
  CHECK(gbinom(-7, 0) == 1);
}

TEST_CASE("gbinom obeys Pascal's rule and matches the reference") {
  for (int t = -50; t <= 50; ++t)
    for (int k = 0; k <= 6; ++k) {
      REQUIRE(gbinom(t, k) == binom_ref(t, k));
      if (k > 0) REQUIRE(gbinom(t + 1, k) == gbinom(t, k) + gbinom(t, k - 1));
    }
}

TEST_CASE("fixture spectra") {
  CHECK(spectrum(make_arrangement(kA1)) == make_spectrum(4, 4, {{1, 1, 1}, {2, 1, -3}, {3, 1, 3}}));
  CHECK(spectrum(make_arrangement(kA3)) == make_spectrum(4, 5, {{1, 1, 3}, {2, 1, -6}, {3, 1, 4}}));
  CHECK(spectrum(make_arrangement(kA4)) == make_spectrum(4, 7, {{1, 1, 6}, {2, 1, -11}, {3, 1, 6}}));
  CHECK(spectrum(make_arrangement(kA2)) == make_spectrum(4, 4, {{2, 1, -2}, {3, 1, 3}}));
  CHECK(spectrum(make_arrangement(kA5)) ==
        make_spectrum(3, 4, {{3, 4, 1}, {1, 1, 3}, {3, 2, 1}, {2, 1, -3}, {9, 4, 1}}));
}

TEST_CASE("rank-3 and rank-2 entry points") {
  // Three coordinate planes: t - 2t^2, whose sum -1 matches the Euler identity.
  CHECK(spectrum_rank3(make_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) ==
        make_spectrum(3, 3, {{1, 1, 1}, {2, 1, -2}}));
  CHECK(spectrum_rank2(make_arrangement({{1, 0}, {0, 1}, {1, 1}})) ==
        make_spectrum(2, 3, {{2, 3, 1}, {1, 1, 2}, {4, 3, 1}}));
  CHECK(spectrum_rank2(make_arrangement({{1, 0}})).empty());
  CHECK(spectrum(make_arrangement({{1, 0, 0}})).empty());
  CHECK(spectrum_rank3(make_arrangement(kA2rank3)) == make_spectrum(3, 4, {{1, 1, 2}, {2, 1, -3}}));
  CHECK(spectrum(make_arrangement({{1, 0, 0, 0}, {0, 1, 0, 0}})) == make_spectrum(4, 2, {{3, 1, 1}}));
  CHECK(spectrum_rank2(make_arrangement({{1, 0}, {0, 1}})) == make_spectrum(2, 2, {{1, 1, 1}}));
  CHECK(generic_spectrum(1).empty());
}

TEST_CASE("entry points demand essential input") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code([] { spectrum_rank4(make_arrangement(kA2)); }) == ErrorCode::NotEssential);
  CHECK(code([] { spectrum_rank3(make_arrangement(kA2)); }) == ErrorCode::NotEssential);
  CHECK(code([] {
    spectrum(make_arrangement({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  }) == ErrorCode::RankTooHigh);
}

TEST_CASE("weight duality and mismatched weight vectors") {
  const auto s = lattice_summary(make_arrangement(kA3), EdgePolicy::Nnc);
  for (int i = 0; i <= s.degree; ++i)
    for (auto b : {Branch::Lower, Branch::Upper}) CHECK_NOTHROW(edge_weights(s, i, b));
  EdgeWeights w = edge_weights(s, 2, Branch::Lower);
  w.v3[0] += 1;
  CHECK_THROWS_AS(check_weight_duality(s, w), Error);
  w.u3.clear();
  CHECK_THROWS_AS(eta0(2, s, w), Error);
}

TEST_CASE("eta values at hand-checked points") {
  const auto empty = lattice_summary(make_arrangement(kA1), EdgePolicy::Dense);
  CHECK(eta0(4, empty, edge_weights(empty, 4, Branch::Lower)) == 1);
  CHECK(eta0(0, empty, edge_weights(empty, 0, Branch::Upper)) == 0);
  CHECK(eta1(1, 4, empty, edge_weights(empty, 1, Branch::Lower)) == 0);
  const auto one = lattice_summary(make_arrangement(kA3), EdgePolicy::Dense);
  const auto low = edge_weights(one, 5, Branch::Lower);
  CHECK(low.u3 == std::vector<Integer>{3});
  CHECK(low.v3 == std::vector<Integer>{0});
  CHECK(eta0(5, one, low) == 3);
  CHECK(eta1(5, 5, one, low) == -6);
  const auto up = edge_weights(one, 0, Branch::Upper);
  CHECK(up.u3 == std::vector<Integer>{0});
  CHECK(up.v3 == std::vector<Integer>{3});
  CHECK(eta1(0, 5, one, up) == 4);
}

TEST_CASE("generic closed form agrees with the general evaluation") {
  CHECK(generic_spectrum(4) == spectrum(make_arrangement(kA1)));
  const auto gen = [&](int d) {
    // d planes x1..x4 and x1 + k x2 + k^2 x3 + k^3 x4, k = 1..d-4, are generic in small degree.
    std::vector<std::vector<long>> rows = kA1;
    for (long k = 1; k <= d - 4; ++k) rows.push_back({1, k, k * k, k * k * k});
    return make_arrangement(rows);
  };
  int checked = 0;
  for (int d = 5; d <= 8; ++d) {
    const Arrangement arr = gen(d);
    const auto nnc = lattice_summary(arr, EdgePolicy::Nnc);
    if (!nnc.edges2.empty() || !nnc.edges3.empty()) continue;
    CHECK(generic_spectrum(d) == spectrum(arr));
    ++checked;
  }
  CHECK(checked >= 2);
}

TEST_CASE("edge policy does not change the spectrum") {
  for (const auto& arr : rank4_corpus(30, 21)) {
    const Spectrum base = spectrum(arr, EdgePolicy::Dense);
    REQUIRE(spectrum(arr, EdgePolicy::Nnc) == base);
    REQUIRE(spectrum(arr, EdgePolicy::All) == base);
  }
  for (const auto& arr : mixed_corpus(30, 22)) {
    const Spectrum base = spectrum(arr, EdgePolicy::Dense);
    REQUIRE(spectrum(arr, EdgePolicy::Nnc) == base);
    REQUIRE(spectrum(arr, EdgePolicy::All) == base);
  }
}

TEST_CASE("padding multiplies by -t") {
  for (const auto& arr : mixed_corpus(20, 23)) {
    REQUIRE(spectrum(pad_variables(arr, 1)) == spectrum(arr).shifted(1));
  }
}

TEST_CASE("lower ranks agree with the rank-4 closed form after padding") {
  for (const auto& arr : mixed_corpus(30, 24)) {
    const auto ess = essentialize(arr).first;
    if (ess.ambient() < 2) continue;
    const Arrangement in4 = pad_variables(ess, 4 - ess.ambient());
    for (auto policy : {EdgePolicy::Dense, EdgePolicy::Nnc, EdgePolicy::All}) {
      const Spectrum four = closed_form_rank4(lattice_summary(in4, policy));
      REQUIRE(four == spectrum(ess).shifted(4 - ess.ambient()));
    }
  }
}

TEST_CASE("decomposable 3:1 products") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 25; ++k) {
    const int d = std::uniform_int_distribution<int>(4, 8)(rng);
    const Arrangement arr = split_3_1(rng, d);
    std::vector<int> ms;
    for (const auto& v : lattice_summary(arr, EdgePolicy::Dense).edges2) ms.push_back(v.multiplicity());
    REQUIRE(spectrum(arr) == split_3_1_spectrum(d, ms));
  }
}

TEST_CASE("decomposable 2:2 products with coprime degrees") {
  std::mt19937_64 rng(32);
  for (int s1 = 1; s1 <= 5; ++s1)
    for (int s2 = 1; s2 <= 5; ++s2) {
      if (std::gcd(s1, s2) != 1) continue;
      const Spectrum sp = spectrum(split_2_2(rng, s1, s2));
      CAPTURE(s1);
      CAPTURE(s2);
      REQUIRE(sp == split_2_2_spectrum(s1, s2));
    }
}

TEST_CASE("spectrum of a reducible product is supported on integers when degrees are coprime") {
  std::mt19937_64 rng(33);
  for (int s1 : {2, 3, 4})
    for (int s2 : {3, 5}) {
      if (std::gcd(s1, s2) != 1) continue;
      const Spectrum sp = spectrum(split_2_2(rng, s1, s2));
      for (const auto& [alpha, n] : sp.entries()) REQUIRE(is_integer(alpha));
    }
}

TEST_CASE("support lies in the open interval (0, n)") {
  for (const auto& arr : rank4_corpus(25, 25)) {
    const Spectrum sp = spectrum(arr);
    for (const auto& [alpha, n] : sp.entries()) {
      REQUIRE(alpha > 0);
      REQUIRE(alpha < 4);
    }
  }
}

TEST_CASE("Euler sum over the corpus and the anchors") {
  CHECK(spectrum(make_arrangement(kA1)).total() == 1);
  CHECK(spectrum(make_arrangement(kA5)).total() == 3);
  CHECK(spectrum(make_arrangement(kA2rank3)).total() == -1);
  CHECK(expected_euler_sum(make_arrangement(kA1)) == 1);
  CHECK(expected_euler_sum(make_arrangement(kA5)) == 3);
  CHECK(expected_euler_sum(make_arrangement(kA2rank3)) == -1);
  for (const auto& arr : rank4_corpus(30, 26)) REQUIRE(euler_sum_check(arr, spectrum(arr)));
  for (const auto& arr : mixed_corpus(30, 27)) REQUIRE(euler_sum_check(arr, spectrum(arr)));
}
