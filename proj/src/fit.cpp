#include "qgan/fit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qgan {

namespace {

struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
};

// ordinary least squares of y on x
LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mean_x = sx / n, mean_y = sy / n;
  double cov = 0.0, var = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cov += (x[i] - mean_x) * (y[i] - mean_y);
    var += (x[i] - mean_x) * (x[i] - mean_x);
  }
  if (var == 0.0) {
    throw std::invalid_argument("curve fit needs at least two distinct n values");
  }
  return {mean_y - mean_x * (cov / var), cov / var};
}

}  // namespace

std::string fit_family_name(FitFamily family) {
  switch (family) {
    case FitFamily::Linear:
      return "linear";
    case FitFamily::Power:
      return "power";
    case FitFamily::Exponential:
      return "exponential";
  }
  throw std::invalid_argument("unknown fit family");
}

FitFamily parse_fit_family(const std::string& name) {
  if (name == "linear") return FitFamily::Linear;
  if (name == "power") return FitFamily::Power;
  if (name == "exponential") return FitFamily::Exponential;
  throw std::invalid_argument("unknown fit family '" + name + "'");
}

FitModel fit_curve(FitFamily family,
                   std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) {
    throw std::invalid_argument("curve fit needs at least 2 points");
  }

  std::vector<double> x, y;
  x.reserve(points.size());
  y.reserve(points.size());
  for (const auto& [n, value] : points) {
    if (!std::isfinite(n) || !std::isfinite(value)) {
      throw std::invalid_argument("curve fit points must be finite");
    }
    switch (family) {
      case FitFamily::Linear:
        x.push_back(n);
        y.push_back(value);
        break;
      case FitFamily::Power:
        if (!(n > 0.0) || !(value > 0.0)) {
          throw std::invalid_argument("power fit needs n > 0 and y > 0");
        }
        x.push_back(std::log(n));
        y.push_back(std::log(value));
        break;
      case FitFamily::Exponential:
        if (!(value > 0.0)) {
          throw std::invalid_argument("exponential fit needs y > 0");
        }
        x.push_back(n);
        y.push_back(std::log(value));
        break;
    }
  }

  const LineFit line = least_squares(x, y);
  FitModel model;
  model.family = family;
  if (family == FitFamily::Linear) {
    model.a = line.intercept;
    model.b = line.slope;
  } else {
    model.a = std::exp(line.intercept);
    model.b = line.slope;
  }

  model.rss = 0.0;
  for (const auto& [n, value] : points) {
    const double r = value - predict(model, n);
    model.rss += r * r;
  }
  return model;
}

double predict(const FitModel& model, double n) {
  switch (model.family) {
    case FitFamily::Linear:
      return model.a + model.b * n;
    case FitFamily::Power:
      return model.a * std::pow(n, model.b);
    case FitFamily::Exponential:
      return model.a * std::exp(model.b * n);
  }
  throw std::invalid_argument("unknown fit family");
}

SelectionResult select_family(std::span<const FitModel> models,
                              std::pair<double, double> holdout) {
  if (models.empty()) {
    throw std::invalid_argument("select_family needs at least one model");
  }
  SelectionResult result;
  double best = 0.0;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const double error = std::abs(predict(models[i], holdout.first) - holdout.second);
    result.holdout_errors.emplace_back(models[i].family, error);
    if (i == 0 || error < best) {
      best = error;
      result.family = models[i].family;
    }
  }
  return result;
}

}  // namespace qgan
