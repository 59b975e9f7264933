#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fhr::analysis {

/// A closed-form test function on an interval.
struct ReferenceFunction {
  std::string id;
  std::function<double(double)> evaluate;
  double a = -1.0;
  double b = 1.0;

  double operator()(double x) const { return evaluate(x); }
};

/// 1/(1 + x^2)
double runge_value(double x) noexcept;
ReferenceFunction runge(double a = -5.0, double b = 5.0);

/// Piecewise polynomial with pieces [breaks[k], breaks[k+1]] and
/// coefficients in ascending powers of x. Points outside the breaks use the
/// nearest piece.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial(std::vector<double> breaks, std::vector<std::vector<double>> coefficients);

  /// A single polynomial valid everywhere.
  static PiecewisePolynomial polynomial(std::vector<double> coefficients);

  double operator()(double x) const;

 private:
  std::vector<double> breaks_;
  std::vector<std::vector<double>> coefficients_;
};

/// Maps function identifiers to evaluators. Knows "runge" and
/// "poly:c0,c1,..." out of the box; add() registers further piecewise
/// polynomials under a name.
class FunctionRegistry {
 public:
  FunctionRegistry();

  void add(const std::string& id, PiecewisePolynomial function);

  /// Throws Error(parse_error) for unknown identifiers.
  ReferenceFunction resolve(const std::string& id, double a, double b) const;

  std::vector<std::string> names() const;

 private:
  std::map<std::string, std::function<double(double)>> functions_;
};

}  // namespace fhr::analysis
