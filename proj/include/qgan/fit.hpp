#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qgan {

enum class FitFamily { Linear, Power, Exponential };

std::string fit_family_name(FitFamily family);
FitFamily parse_fit_family(const std::string& name);

/// Two-coefficient scaling model over (qubit count, quantity) points:
///   linear       y = a + b*n
///   power        y = a * n^b       (the "polynomial" candidate)
///   exponential  y = a * e^(b*n)
struct FitModel {
  FitFamily family = FitFamily::Linear;
  double a = 0.0;
  double b = 0.0;
  double rss = 0.0;  // sum of squared residuals in original y space
};

/// Least squares per family: ordinary for linear, log-log for power,
/// semi-log for exponential. Needs >= 2 points with distinct n; the log
/// families additionally need y > 0 (and n > 0 for power).
FitModel fit_curve(FitFamily family,
                   std::span<const std::pair<double, double>> points);

double predict(const FitModel& model, double n);

struct SelectionResult {
  FitFamily family = FitFamily::Linear;
  // |predict(model, n_holdout) - y_holdout| per model, in input order
  std::vector<std::pair<FitFamily, double>> holdout_errors;
};

/// Picks the family whose prediction lands closest to the held-out point.
SelectionResult select_family(std::span<const FitModel> models,
                              std::pair<double, double> holdout);

}  // namespace qgan
