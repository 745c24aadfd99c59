#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "qgan/fit.hpp"
#include "qgan/rng.hpp"

using namespace qgan;

using Points = std::vector<std::pair<double, double>>;

TEST_CASE("exact linear recovery") {
  const Points points = {{1.0, 2.0}, {2.0, 3.0}, {3.0, 4.0}};
  const FitModel model = fit_curve(FitFamily::Linear, points);
  CHECK(model.a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(model.b == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(model.rss < 1e-18);
  CHECK(predict(model, 4.0) == doctest::Approx(5.0));
}

TEST_CASE("exact power recovery") {
  // y = 3 n^2
  const Points points = {{1.0, 3.0}, {2.0, 12.0}, {3.0, 27.0}};
  const FitModel model = fit_curve(FitFamily::Power, points);
  CHECK(std::abs(model.a - 3.0) < 1e-9);
  CHECK(std::abs(model.b - 2.0) < 1e-9);
  CHECK(predict(model, 4.0) == doctest::Approx(48.0).epsilon(1e-9));
}

TEST_CASE("exact exponential recovery") {
  // y = 2 e^n
  const Points points = {{1.0, 2.0 * std::exp(1.0)},
                         {2.0, 2.0 * std::exp(2.0)},
                         {3.0, 2.0 * std::exp(3.0)}};
  const FitModel model = fit_curve(FitFamily::Exponential, points);
  CHECK(std::abs(model.a - 2.0) < 1e-9);
  CHECK(std::abs(model.b - 1.0) < 1e-9);
  CHECK(predict(model, 4.0) == doctest::Approx(2.0 * std::exp(4.0)).epsilon(1e-9));
}

TEST_CASE("each family wins selection on data it generated") {
  const Points linear_pts = {{1.0, 3.0}, {2.0, 5.0}, {3.0, 7.0}};
  const Points power_pts = {{1.0, 3.0}, {2.0, 12.0}, {3.0, 27.0}};
  const Points exp_pts = {{1.0, 2.0 * std::exp(1.0)},
                          {2.0, 2.0 * std::exp(2.0)},
                          {3.0, 2.0 * std::exp(3.0)}};

  const auto fit_all = [](const Points& pts) {
    return std::vector<FitModel>{fit_curve(FitFamily::Linear, pts),
                                 fit_curve(FitFamily::Power, pts),
                                 fit_curve(FitFamily::Exponential, pts)};
  };

  CHECK(select_family(fit_all(linear_pts), {4.0, 9.0}).family ==
        FitFamily::Linear);
  CHECK(select_family(fit_all(power_pts), {4.0, 48.0}).family ==
        FitFamily::Power);
  CHECK(select_family(fit_all(exp_pts), {4.0, 2.0 * std::exp(4.0)}).family ==
        FitFamily::Exponential);
}

TEST_CASE("selection reports a holdout error per model") {
  const Points pts = {{1.0, 3.0}, {2.0, 12.0}, {3.0, 27.0}};
  const std::vector<FitModel> models = {fit_curve(FitFamily::Linear, pts),
                                        fit_curve(FitFamily::Power, pts)};
  const SelectionResult sel = select_family(models, {4.0, 48.0});
  REQUIRE(sel.holdout_errors.size() == 2);
  CHECK(sel.holdout_errors[0].first == FitFamily::Linear);
  CHECK(sel.holdout_errors[1].second < sel.holdout_errors[0].second);
}

TEST_CASE("residuals are invariant under point reordering") {
  const Points fwd = {{1.0, 2.2}, {2.0, 3.1}, {3.0, 5.3}};
  const Points rev = {{3.0, 5.3}, {1.0, 2.2}, {2.0, 3.1}};
  for (FitFamily family :
       {FitFamily::Linear, FitFamily::Power, FitFamily::Exponential}) {
    const FitModel a = fit_curve(family, fwd);
    const FitModel b = fit_curve(family, rev);
    CHECK(a.rss == doctest::Approx(b.rss).epsilon(1e-14));
    CHECK(a.a == doctest::Approx(b.a).epsilon(1e-14));
    CHECK(a.b == doctest::Approx(b.b).epsilon(1e-14));
  }
}

TEST_CASE("fit validation") {
  CHECK_THROWS_AS(fit_curve(FitFamily::Linear, Points{{1.0, 2.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_curve(FitFamily::Linear, Points{{2.0, 1.0}, {2.0, 3.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_curve(FitFamily::Power, Points{{1.0, -1.0}, {2.0, 3.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      fit_curve(FitFamily::Exponential, Points{{1.0, 0.0}, {2.0, 3.0}}),
      std::invalid_argument);
  CHECK_THROWS_AS(select_family({}, {4.0, 1.0}), std::invalid_argument);
}

TEST_CASE("family names round-trip") {
  for (FitFamily family :
       {FitFamily::Linear, FitFamily::Power, FitFamily::Exponential}) {
    CHECK(parse_fit_family(fit_family_name(family)) == family);
  }
  CHECK_THROWS_AS(parse_fit_family("cubic"), std::invalid_argument);
}

TEST_CASE("noisy power data still selects power over wide margins") {
  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    Points pts;
    for (double n : {1.0, 2.0, 3.0}) {
      const double noise = 1.0 + 0.02 * (rng.uniform01() - 0.5);
      pts.push_back({n, 5.0 * std::pow(n, 1.7) * noise});
    }
    const std::vector<FitModel> models = {
        fit_curve(FitFamily::Linear, pts), fit_curve(FitFamily::Power, pts),
        fit_curve(FitFamily::Exponential, pts)};
    const double y4 = 5.0 * std::pow(4.0, 1.7);
    CHECK(select_family(models, {4.0, y4}).family == FitFamily::Power);
  }
}
