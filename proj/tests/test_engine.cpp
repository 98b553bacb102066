#include <doctest.h>

#include <cmath>

#include "szilard/engine.hpp"

using namespace szilard;
namespace comb = szilard::combinatorics;

namespace {

const double ln2 = std::log(2.0);

// Independent term-by-term evaluation of the N-boson low-temperature work,
// kept separate from the implementation path it checks.
double boson_work_by_hand(int n, double gamma) {
    bool odd = n % 2 != 0;
    double alpha = odd ? 1.0 : n / (n + 1.0);
    double total = alpha * std::log(n + 1.0);
    int m_max = odd ? (n - 1) / 2 : n / 2 - 1;
    for (int m = 1; m <= m_max; ++m) {
        double q = std::cbrt((n - m) / static_cast<double>(m));
        double grow = (1.0 + q) * (1.0 + q);
        double shrink = std::pow(1.0 - 1.0 / (1.0 + q), -2.0);
        total -= 2.0 * gamma / (n + 1.0) * m * (grow - shrink);
    }
    return total;
}

}  // namespace

TEST_CASE("work_general golden cases") {
    // single particle: f = (1/2, 1/2), f* = (1, 1)
    comb::ProbabilityTable f = comb::measured_table_distinguishable(1);
    comb::ProbabilityTable f_star = comb::equilibrium_table_distinguishable(1);
    CHECK(engine::work_general(f, f_star).total == doctest::Approx(ln2).epsilon(1e-12));

    // three distinguishable particles: (1/8, 3/8, 3/8, 1/8) against (1, 4/9, 4/9, 1);
    // frozen from the four-term hand sum 2*(1/8)ln8 + 2*(3/8)ln(32/27)
    double hand = 0.25 * std::log(8.0) + 0.75 * std::log(32.0 / 27.0);
    CHECK(hand == doctest::Approx(0.647284663).epsilon(1e-9));
    auto result = engine::work_general(comb::measured_table_distinguishable(3),
                                       comb::equilibrium_table_distinguishable(3));
    CHECK(result.total == doctest::Approx(hand).epsilon(1e-12));
    CHECK(result.per_branch.size() == 4);

    // identical tables extract nothing
    CHECK(engine::work_general(f, f).total == doctest::Approx(0.0).epsilon(1e-15));

    // total equals the branch sum
    double branch_sum = 0.0;
    for (const auto& branch : result.per_branch) branch_sum += branch.contribution;
    CHECK(result.total == doctest::Approx(branch_sum).epsilon(1e-12));
}

TEST_CASE("work_general singular reference") {
    comb::ProbabilityTable f = comb::measured_table_distinguishable(2);
    comb::ProbabilityTable f_star = comb::equilibrium_table_distinguishable(2);
    f_star.probs[1] = 0.0;
    CHECK_THROWS_AS(engine::work_general(f, f_star), engine::SingularReferenceError);

    // a zero-probability branch contributes nothing
    comb::ProbabilityTable sparse = f;
    sparse.probs[0] = 0.0;
    sparse.log_probs[0] = -INFINITY;
    CHECK_NOTHROW(engine::work_general(sparse, comb::equilibrium_table_distinguishable(2)));
}

TEST_CASE("work_general is non-negative when the reference dominates") {
    for (int n : {1, 2, 3, 5, 9}) {
        auto f = comb::measured_table_distinguishable(n);
        auto f_star = comb::equilibrium_table_distinguishable(n);
        bool dominates = true;
        for (int m = 0; m <= n; ++m)
            if (f.probs[m] > 0.0 && f_star.probs[m] < f.probs[m]) dominates = false;
        CHECK(dominates);
        CHECK(engine::work_general(f, f_star).total >= 0.0);
    }
}

TEST_CASE("two-boson work and binding") {
    CHECK(engine::work_two_bosons(1.0) == doctest::Approx(2.0 / 3 * std::log(3.0)).epsilon(1e-12));
    CHECK(engine::work_two_bosons(0.0) == doctest::Approx(ln2).epsilon(1e-12));
    CHECK(engine::work_two_bosons(0.5) == doctest::Approx(-0.6 * std::log(0.3)).epsilon(1e-12));
    CHECK_THROWS_AS(engine::work_two_bosons(1.5), std::domain_error);

    CHECK(engine::binding_two_bosons(0.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(engine::binding_two_bosons(1.0) ==
          doctest::Approx(2.0 / 3 * std::log(3.0) - ln2).epsilon(1e-12));

    // strictly increasing in p on a 100-point grid
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
        double value = engine::binding_two_bosons(i / 100.0);
        CHECK(value > prev);
        prev = value;
    }
}

TEST_CASE("work_biased closed form") {
    CHECK(engine::work_biased(10, 0.0) == 0.0);
    CHECK(engine::work_biased(100, 0.001) == doctest::Approx(-std::log(0.99)).epsilon(1e-12));
    CHECK_THROWS_AS(engine::work_biased(10, 0.1), std::domain_error);  // |N r| >= 1
}

TEST_CASE("work_distinguishable_exact") {
    CHECK(engine::work_distinguishable_exact(1).total == doctest::Approx(ln2).epsilon(1e-12));
    CHECK(engine::work_distinguishable_exact(3).total ==
          doctest::Approx(0.647284663).epsilon(1e-9));
    auto result = engine::work_distinguishable_exact(4);
    CHECK(result.flags.size() == 1);
    CHECK(result.flags[0] == engine::ApproximationFlag::ExactSum);

    // per-particle work decays toward the large-N zero-work limit
    double w100 = engine::work_distinguishable_exact(100).total;
    double w10000 = engine::work_distinguishable_exact(10000).total;
    CHECK(w10000 < 0.05 * 10000);
    CHECK(w10000 / 10000 < w100 / 100);
}

TEST_CASE("work_bosons_lowT") {
    CHECK(engine::work_bosons_lowT(2, 0.0) ==
          doctest::Approx(2.0 / 3 * std::log(3.0)).epsilon(1e-13));
    CHECK(engine::work_bosons_lowT(2, 0.0) ==
          doctest::Approx(engine::work_two_bosons(1.0)).epsilon(1e-13));
    CHECK(engine::work_bosons_lowT(3, 0.0) == doctest::Approx(std::log(4.0)).epsilon(1e-13));
    CHECK(engine::work_bosons_lowT(10, 0.1) ==
          doctest::Approx(boson_work_by_hand(10, 0.1)).epsilon(1e-12));
    CHECK(engine::work_bosons_lowT(10, 0.1) == doctest::Approx(1.69).epsilon(0.005));

    // gamma = 0 collapses to alpha ln(N+1), increasing within each parity class
    for (int n = 1; n <= 50; ++n) {
        bool odd = n % 2 != 0;
        double alpha = odd ? 1.0 : n / (n + 1.0);
        CHECK(engine::work_bosons_lowT(n, 0.0) == alpha * std::log(n + 1.0));
        if (n > 2)
            CHECK(engine::work_bosons_lowT(n, 0.0) > engine::work_bosons_lowT(n - 2, 0.0));
    }

    // strictly decreasing in gamma for N >= 3
    for (int n : {3, 4, 10, 25}) {
        double prev = engine::work_bosons_lowT(n, 0.0);
        for (double gamma : {0.02, 0.05, 0.1, 0.2}) {
            double value = engine::work_bosons_lowT(n, gamma);
            CHECK(value < prev);
            prev = value;
        }
    }
}

TEST_CASE("work_fermions_lowT parity") {
    CHECK(engine::work_fermions_lowT(2) == 0.0);
    CHECK(engine::work_fermions_lowT(3) == doctest::Approx(ln2).epsilon(1e-15));
    CHECK(engine::work_fermions_lowT(7) == doctest::Approx(ln2).epsilon(1e-15));
    for (int n = 1; n <= 20; ++n)
        CHECK(engine::work_fermions_lowT(n) == engine::work_fermions_lowT(n % 2 == 0 ? 2 : 1));
}

TEST_CASE("capacitive energies") {
    CHECK(engine::capacitive_energy_first(2, 0.0) ==
          doctest::Approx(std::log(4.0) - 2.0 / 3 * std::log(3.0)).epsilon(1e-12));
    CHECK(engine::capacitive_energy_first(3, 0.0) ==
          doctest::Approx(0.8 * std::log(5.0) - std::log(4.0)).epsilon(1e-12));
    CHECK_THROWS_AS(engine::capacitive_energy_second(1, 0.0), std::domain_error);

    // telescoping identity E2_c(N) = E1_c(N) - E1_c(N-1)
    for (int n = 2; n <= 40; ++n)
        CHECK(engine::capacitive_energy_second(n, 0.07) ==
              doctest::Approx(engine::capacitive_energy_first(n, 0.07) -
                              engine::capacitive_energy_first(n - 1, 0.07)).epsilon(1e-12));
}

TEST_CASE("binding energy of N bosons") {
    CHECK(engine::binding_energy_n(2, 0.0) ==
          doctest::Approx(2.0 / 3 * std::log(3.0)).epsilon(1e-12));
    CHECK(engine::binding_energy_n(3, 0.0) == doctest::Approx(ln2).epsilon(1e-12));

    // binding decreases with confinement at fixed N (N = 2 has no finite-gamma
    // correction term, so start at 3)
    for (int n = 3; n <= 30; ++n) {
        double prev = engine::binding_energy_n(n, 0.0);
        for (double gamma : {0.05, 0.1}) {
            double value = engine::binding_energy_n(n, gamma);
            CHECK(value < prev);
            prev = value;
        }
    }
}

TEST_CASE("critical boson number") {
    CHECK_FALSE(engine::critical_boson_number(0.0).has_value());

    auto n_01 = engine::critical_boson_number(0.1);
    REQUIRE(n_01.has_value());
    CHECK(engine::work_bosons_lowT(*n_01, 0.1) <= 0.0);
    CHECK(engine::work_bosons_lowT(*n_01 - 1, 0.1) > 0.0);

    // non-increasing in gamma
    auto n_005 = engine::critical_boson_number(0.05);
    auto n_02 = engine::critical_boson_number(0.2);
    REQUIRE(n_005.has_value());
    REQUIRE(n_02.has_value());
    CHECK(*n_005 >= *n_01);
    CHECK(*n_01 >= *n_02);
}

TEST_CASE("engine config validation") {
    engine::EngineConfig config;
    CHECK_NOTHROW(config.validate());
    config.bias_r = 0.5;
    CHECK_THROWS_AS(config.validate(), std::domain_error);
    config.bias_r = 0.0;
    config.purity = -0.1;
    CHECK_THROWS_AS(config.validate(), std::domain_error);
}
