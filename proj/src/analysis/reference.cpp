#include "fhr/analysis/reference.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "fhr/error.hpp"
#include "fhr/format.hpp"

namespace fhr::analysis {

double runge_value(double x) noexcept { return 1.0 / (1.0 + x * x); }

ReferenceFunction runge(double a, double b) { return {"runge", runge_value, a, b}; }

PiecewisePolynomial::PiecewisePolynomial(std::vector<double> breaks,
                                         std::vector<std::vector<double>> coefficients)
    : breaks_(std::move(breaks)), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty() || breaks_.size() != coefficients_.size() + 1) {
    throw Error(ErrorKind::parse_error, "piecewise polynomial needs one more break than pieces");
  }
  if (!std::is_sorted(breaks_.begin(), breaks_.end())) {
    throw Error(ErrorKind::parse_error, "piecewise polynomial breaks must be increasing");
  }
}

PiecewisePolynomial PiecewisePolynomial::polynomial(std::vector<double> coefficients) {
  return PiecewisePolynomial({-std::numeric_limits<double>::infinity(),
                              std::numeric_limits<double>::infinity()},
                             {std::move(coefficients)});
}

double PiecewisePolynomial::operator()(double x) const {
  const auto it = std::upper_bound(breaks_.begin() + 1, breaks_.end() - 1, x);
  const auto& c = coefficients_[static_cast<std::size_t>(it - (breaks_.begin() + 1))];
  double acc = 0.0;
  for (auto k = c.rbegin(); k != c.rend(); ++k) acc = acc * x + *k;
  return acc;
}

FunctionRegistry::FunctionRegistry() { functions_["runge"] = runge_value; }

void FunctionRegistry::add(const std::string& id, PiecewisePolynomial function) {
  functions_[id] = std::move(function);
}

ReferenceFunction FunctionRegistry::resolve(const std::string& id, double a, double b) const {
  if (const auto it = functions_.find(id); it != functions_.end()) {
    return {id, it->second, a, b};
  }
  if (id.rfind("poly:", 0) == 0) {
    std::vector<double> coefficients;
    std::stringstream stream(id.substr(5));
    std::string token;
    while (std::getline(stream, token, ',')) coefficients.push_back(parse_double(token));
    if (coefficients.empty()) {
      throw Error(ErrorKind::parse_error, "poly: needs at least one coefficient");
    }
    return {id, PiecewisePolynomial::polynomial(std::move(coefficients)), a, b};
  }
  throw Error(ErrorKind::parse_error, "unknown function '" + id + "'");
}

std::vector<std::string> FunctionRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, fn] : functions_) out.push_back(name);
  return out;
}

}  // namespace fhr::analysis
