#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oscdelta/ladder.hpp"

using namespace oscdelta;

TEST_SUITE_BEGIN("ladder");

TEST_CASE("zero potential: every level matched at its lattice point") {
  const auto spec = eigenvalues(build_truncated(PointPotential::single(0.0, 0.0), 64));
  const auto lad = ladder_match(spec, 0, 30);
  for (const auto& e : lad.entries) {
    CHECK(e.status == MatchStatus::Matched);
    CHECK(e.in_square);
    CHECK(std::abs(e.lambda - Complex(2.0 * e.n + 1.0, 0.0)) <= 1e-12);
  }
}

TEST_CASE("range validation") {
  const auto spec = eigenvalues(build_truncated(PointPotential::single(0.0, 0.0), 16));
  CHECK_THROWS_AS(ladder_match(spec, 0, 9), std::invalid_argument);   // n_hi > N/2
  CHECK_THROWS_AS(ladder_match(spec, 5, 2), std::invalid_argument);
  CHECK_NOTHROW(ladder_match(spec, 0, 8));
}

TEST_CASE("large PT coupling: low strips ambiguous, high strips matched") {
  const auto spec = eigenvalues(build_truncated(PointPotential::odd_pair(Complex(0.0, 4.0), 1.0), 256));
  const auto lad = ladder_match(spec, 0, 100);
  int ambiguous = 0, matched_high = 0, square_high = 0;
  for (const auto& e : lad.entries) {
    if (e.status != MatchStatus::Matched && e.n <= 20) ++ambiguous;
    if (e.status == MatchStatus::Matched && e.n >= 50) {
      ++matched_high;
      if (e.in_square) ++square_high;
    }
  }
  CHECK(ambiguous > 0);      // complex pairs leave their strips empty or doubled
  CHECK(matched_high == 51); // asymptotically one eigenvalue per strip
  CHECK(square_high == 51);  // and it is simple, inside the tighter square D_n
}

TEST_CASE("count_nonreal") {
  SUBCASE("real symmetric perturbation") {
    const auto spec = eigenvalues(build_truncated(PointPotential::even_pair(0.7, 1.0), 128));
    CHECK(count_nonreal(spec, 1e-8).count == 0);
  }
  SUBCASE("gamma = 0") {
    const auto spec = eigenvalues(build_truncated(PointPotential::odd_pair(Complex(0.0, 0.0), 1.0), 64));
    CHECK(count_nonreal(spec, 1e-8).count == 0);
  }
  SUBCASE("counts come in conjugate pairs") {
    for (double g : {3.0, 5.0, 8.0}) {
      const auto spec =
          eigenvalues(build_truncated(PointPotential::odd_pair(Complex(0.0, g), 1.0), 256));
      const auto rep = count_nonreal(spec, 1e-8);
      CHECK(rep.count % 2 == 0);
      CHECK(rep.count > 0);
    }
  }
  SUBCASE("tol must be positive") {
    const auto spec = eigenvalues(build_truncated(PointPotential::single(0.0, 0.0), 8));
    CHECK_THROWS_AS(count_nonreal(spec, 0.0), std::invalid_argument);
  }
}

TEST_CASE("truncation study") {
  SUBCASE("zero potential: all differences vanish") {
    const auto study = truncation_study(PointPotential::single(0.0, 0.0), 10, {64, 128, 256});
    for (double d : study.diffs) CHECK(d == 0.0);
    CHECK(study.cauchy);
  }
  SUBCASE("even pair is Cauchy in the truncation") {
    const auto study = truncation_study(PointPotential::even_pair(1.0, 1.0), 50, {256, 512, 1024});
    REQUIRE(study.diffs.size() == 2);
    CHECK(study.diffs[1] < study.diffs[0]);
    CHECK(study.cauchy);
  }
  SUBCASE("single delta: observed N^{-1/2} convergence (regression baseline)") {
    const auto study = truncation_study(PointPotential::single(1.0, 1.0), 20, {512, 1024});
    REQUIRE(study.diffs.size() == 1);
    // measured: |lambda_20(1024) - lambda_20(512)| ~ 3.0e-4
    CHECK(study.diffs[0] < 5e-4);
    CHECK(study.diffs[0] > 1e-5);
  }
  SUBCASE("size validation") {
    CHECK_THROWS_AS(truncation_study(PointPotential::single(1.0, 1.0), 20, {64}),
                    std::invalid_argument);
  }
}

TEST_CASE("odd potential: doubling stability of matched levels") {
  // regression baseline: observed max change 1.6e-4 over this range at 512->1024
  const PointPotential w = PointPotential::odd_pair(0.5, 1.0);
  const auto lad1 = ladder_match(eigenvalues(build_truncated(w, 512)), 20, 60);
  const auto lad2 = ladder_match(eigenvalues(build_truncated(w, 1024)), 20, 60);
  for (int n = 20; n <= 60; ++n) {
    REQUIRE(lad1.at(n).status == MatchStatus::Matched);
    REQUIRE(lad2.at(n).status == MatchStatus::Matched);
    CHECK(std::abs(lad1.at(n).lambda - lad2.at(n).lambda) <= 5e-4);
  }
}

TEST_SUITE_END();
