#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace onlinecolor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "num/den" with den > 0.
std::string rational_string(const Rational& value);
double to_double(const Rational& value);
BigInt factorial(std::size_t n);

namespace bounds {

/// Threshold on c for the random-order mean bound: 2e / (e - log2 e) ~ 4.26201.
double random_order_constant_min();
/// Default constant used in reports: the threshold rounded to three decimals.
inline constexpr double kRandomOrderConstant = 4.262;
/// 1 - log2(e)/e ~ 0.469263, the exponent factor in the factorial power bound.
double factorial_power_exponent();

/// Relative slack allowed when comparing a double parameter against a
/// domain threshold such as c >= e.
inline constexpr double kDomainSlack = 1e-12;
/// Relative slack on c for the mean bounds, so the rounded 4.262 is admissible.
inline constexpr double kConstantSlack = 5e-6;

// Tail bounds for the random-order model. Both are exact rationals.

/// P[some vertex gets color >= ell] <= n^2 / ell! for FirstFit on a tree.
Rational first_fit_tail(std::size_t n, std::size_t ell);
/// P[some vertex gets color >= ell] <= k^2 / floor((ell-3)/4)! for ParityFirstFit; ell >= 7.
Rational parity_first_fit_tail(std::size_t k, std::size_t ell);

/// sum_{l >= s} 1/l! <= 2/s!, checked with an exact partial sum plus the
/// geometric remainder bound sum_{l >= N} 1/l! <= (N+1) / (N * N!).
struct FactorialTailCheck {
  std::size_t s = 0;
  std::size_t terms = 0;
  Rational partial_sum;
  Rational remainder_bound;
  Rational limit;  // 2 / s!
  bool holds = false;
  double upper_value() const;
};
FactorialTailCheck factorial_tail_sum(std::size_t s, std::size_t terms = 40);

/// ell! >= n^(c (1 - log2 e / e)) >= n^(0.469 c) for c >= e and
/// ell >= c log n / log log n. Logs evaluated in 100-digit binary floating point.
struct FactorialPowerCheck {
  double c = 0;
  double n = 0;
  std::size_t ell = 0;
  double log2_factorial = 0;
  double log2_power = 0;          // c (1 - log2 e / e) log2 n
  double log2_power_rounded = 0;  // 0.469 c log2 n
  bool holds = false;             // exact exponent
  bool holds_rounded = false;     // displayed 0.469 exponent
};
std::size_t factorial_power_min_ell(double c, double n);
FactorialPowerCheck factorial_power(double c, double n, std::size_t ell);

// Color-count bounds; all logarithms are base 2.

double first_fit_worst_case(double n);                 // log n + 1
double first_fit_random_order_mean(double n, double c = kRandomOrderConstant);  // c log n / log log n + 3
double parity_first_fit_random_order_mean(double k, double c = kRandomOrderConstant);  // 4c log k / log log k + 71
double advice_first_fit_errors(double k);              // log k + 3, k >= 1
double advice_first_fit_size(double n);                // log n + 3 - log 3
double advice_cbip_errors(double k);                   // 2 log k + 4, k >= 1
double advice_cbip_size(double n);                     // 2 log n - 1.64, n >= 1500
double advice_cbip_size_all_n(double n);               // 2 log(n+2) + 3 - 2 log 5
double cbip_size(double n);                            // 2 log n - 1.999, n >= 5770
double cbip_size_all_n(double n);                      // 2 log(n+2) - 2

/// Named evaluation for the command line. Parameters are looked up by key
/// (n, k, ell, c, s); missing or out-of-domain parameters raise DomainError.
struct Evaluation {
  std::string kind;
  std::string formula;
  double value = 0;
  std::string exact;  // rational "num/den" where the bound is exact, else empty
  bool holds = true;  // for the self-checking kinds (factorial-tail-sum, factorial-power)
};
Evaluation evaluate(std::string_view kind, const std::map<std::string, double>& parameters);
std::vector<std::string_view> kinds();

}  // namespace bounds
}  // namespace onlinecolor
