#include <doctest.h>

#include "superstft/superosc.hpp"

using namespace superstft;
using namespace superstft::superosc;

TEST_SUITE("superosc") {
  TEST_CASE("coefficients sum to one") {
    for (int n : {1, 4, 9}) {
      double s = 0.0;
      for (double c : coefficients({2.0, n})) s += c;
      CHECK(s == doctest::Approx(1.0).epsilon(1e-13));
    }
  }

  TEST_CASE("coefficient examples") {
    CHECK(coefficients({3.0, 1}) == std::vector<double>{2.0, -1.0});
    CHECK(coefficients({3.0, 2}) == std::vector<double>{4.0, -4.0, 1.0});
  }

  TEST_CASE("n = 1 closed form") {
    for (double t : {-0.8, 1.9}) CHECK(std::abs(f_n({2.0, 1}, t) - Complex(std::cos(t), 2 * std::sin(t))) < 1e-14);
  }

  TEST_CASE("frequencies") {
    const auto w = frequencies(4);
    REQUIRE(w.size() == 5);
    CHECK(w.front() == 1.0);
    CHECK(w.back() == -1.0);
    CHECK(w[2] == 0.0);
  }

  TEST_CASE("polar form equals the direct sum") {
    for (double t : {-2.0, 0.0, 0.4, 3.3})
      for (int n : {1, 3, 10}) {
        const SuperoscParams p{2.5, n};
        CHECK(std::abs(f_n(p, t) - f_n_direct(p, t)) < 1e-11 * std::pow(3.5, n));
      }
    CHECK(std::abs(f_n({2.0, 5}, 0.0) - 1.0) < 1e-14);
  }

  TEST_CASE("convergence to e^{iat} on compacts") {
    const double e1 = std::abs(f_n({1.5, 20}, 0.3) - std::polar(1.0, 0.45));
    const double e2 = std::abs(f_n({1.5, 200}, 0.3) - std::polar(1.0, 0.45));
    CHECK(e2 < e1);
    CHECK(e2 < 1e-3);
  }

  TEST_CASE("generalized sequences") {
    const auto s = prototypical_sequence({2.0, 3});
    CHECK(s.sup_frequency() <= 1.0);
    CHECK(std::abs(generalized_f(s, 0.7) - f_n({2.0, 3}, 0.7)) < 1e-13);
    const GeneralizedSequence one{{1.0}, {1.5}};
    CHECK(std::abs(generalized_f(one, 0.4) - std::polar(1.0, 0.6)) < 1e-15);
    CHECK(one.sup_frequency() == 1.5);
    GeneralizedSequence bad{{1.0, 2.0}, {0.5}};
    CHECK_THROWS_AS(bad.validate(), ContractError);
    CHECK_THROWS_AS(generalized_f(bad, 0.0), ContractError);
  }

  TEST_CASE("validation") {
    CHECK_THROWS(SuperoscParams{2.0, 0}.validate());
    CHECK(SuperoscParams{2.0, 1}.superoscillatory());
    CHECK_FALSE(SuperoscParams{0.5, 1}.superoscillatory());
  }
}
