#include "onlinecolor/bounds.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>

#include "onlinecolor/errors.hpp"

namespace onlinecolor {

using boost::multiprecision::cpp_bin_float_100;

std::string rational_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" + boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigInt factorial(std::size_t n) {
  BigInt result = 1;
  for (std::size_t i = 2; i <= n; ++i) result *= i;
  return result;
}

namespace bounds {

namespace {

constexpr double kLog2E = std::numbers::log2e;
constexpr double kE = std::numbers::e;

void require(bool condition, const std::string& what) {
  if (!condition) throw DomainError(what);
}

bool at_least(double value, double threshold) { return value >= threshold * (1.0 - kDomainSlack); }

// The constant is usually quoted rounded to 4.262, a hair below 2e/(e - log e) = 4.26201.
bool constant_admissible(double c) { return c >= random_order_constant_min() * (1.0 - kConstantSlack); }

double log2_checked(double x, const char* name) {
  require(x > 0, std::string(name) + " must be positive");
  return std::log2(x);
}

}  // namespace

double random_order_constant_min() { return 2 * kE / (kE - kLog2E); }

double factorial_power_exponent() { return 1.0 - kLog2E / kE; }

Rational first_fit_tail(std::size_t n, std::size_t ell) {
  require(n >= 1, "first-fit-tail needs n >= 1");
  require(ell >= 1, "first-fit-tail needs ell >= 1");
  return Rational(BigInt(n) * n, factorial(ell));
}

Rational parity_first_fit_tail(std::size_t k, std::size_t ell) {
  require(ell >= 7, "parity-first-fit-tail needs ell >= 7");
  return Rational(BigInt(k) * k, factorial((ell - 3) / 4));
}

double FactorialTailCheck::upper_value() const { return to_double(partial_sum + remainder_bound); }

FactorialTailCheck factorial_tail_sum(std::size_t s, std::size_t terms) {
  require(s >= 1, "factorial-tail-sum needs s >= 1");
  require(terms >= 1, "factorial-tail-sum needs at least one term");
  FactorialTailCheck check;
  check.s = s;
  check.terms = terms;
  BigInt f = factorial(s);
  for (std::size_t l = s; l < s + terms; ++l) {
    if (l > s) f *= l;
    check.partial_sum += Rational(1, f);
  }
  // Remainder from N = s + terms on: 1/N! * sum_j (N+1)^-j = (N+1) / (N * N!).
  const std::size_t first_omitted = s + terms;
  f *= first_omitted;
  check.remainder_bound = Rational(BigInt(first_omitted + 1), BigInt(first_omitted) * f);
  check.limit = Rational(2, factorial(s));
  check.holds = check.partial_sum + check.remainder_bound <= check.limit;
  return check;
}

std::size_t factorial_power_min_ell(double c, double n) {
  require(n > 2, "factorial-power needs n > 2");
  const double log_n = std::log2(n);
  return static_cast<std::size_t>(std::ceil(c * log_n / std::log2(log_n)));
}

FactorialPowerCheck factorial_power(double c, double n, std::size_t ell) {
  require(at_least(c, kE), "factorial-power needs c >= e");
  require(n > 2, "factorial-power needs n > 2");
  const double log_n = std::log2(n);
  require(static_cast<double>(ell) >= c * log_n / std::log2(log_n) * (1.0 - kDomainSlack),
          "factorial-power needs ell >= c log n / log log n");

  const cpp_bin_float_100 ln2 = boost::math::constants::ln_two<cpp_bin_float_100>();
  const cpp_bin_float_100 e = boost::math::constants::e<cpp_bin_float_100>();
  const cpp_bin_float_100 log2_fact = log(cpp_bin_float_100(factorial(ell))) / ln2;
  const cpp_bin_float_100 log2_n = log(cpp_bin_float_100(n)) / ln2;
  const cpp_bin_float_100 exponent = 1 - (1 / ln2) / e;  // 1 - log2(e) / e
  const cpp_bin_float_100 log2_power = cpp_bin_float_100(c) * exponent * log2_n;
  const cpp_bin_float_100 log2_rounded = cpp_bin_float_100(c) * cpp_bin_float_100("0.469") * log2_n;

  FactorialPowerCheck check;
  check.c = c;
  check.n = n;
  check.ell = ell;
  check.log2_factorial = log2_fact.convert_to<double>();
  check.log2_power = log2_power.convert_to<double>();
  check.log2_power_rounded = log2_rounded.convert_to<double>();
  check.holds = log2_fact >= log2_power;
  check.holds_rounded = log2_fact >= log2_rounded;
  return check;
}

double first_fit_worst_case(double n) { return log2_checked(n, "n") + 1; }

double first_fit_random_order_mean(double n, double c) {
  require(constant_admissible(c), "first-fit-random-order-mean needs c >= 2e/(e - log e)");
  require(n > 2, "first-fit-random-order-mean needs n > 2");
  const double log_n = std::log2(n);
  return c * log_n / std::log2(log_n) + 3;
}

double parity_first_fit_random_order_mean(double k, double c) {
  require(constant_admissible(c), "parity-first-fit-random-order-mean needs c >= 2e/(e - log e)");
  require(k > 2, "parity-first-fit-random-order-mean needs k > 2");
  const double log_k = std::log2(k);
  return 4 * c * log_k / std::log2(log_k) + 71;
}

double advice_first_fit_errors(double k) {
  require(k >= 1, "advice-first-fit-errors needs k >= 1");
  return std::log2(k) + 3;
}

double advice_first_fit_size(double n) { return log2_checked(n, "n") + 3 - std::log2(3.0); }

double advice_cbip_errors(double k) {
  require(k >= 1, "advice-cbip-errors needs k >= 1");
  return 2 * std::log2(k) + 4;
}

double advice_cbip_size(double n) {
  require(n >= 1500, "advice-cbip-size needs n >= 1500");
  return 2 * std::log2(n) - 1.64;
}

double advice_cbip_size_all_n(double n) {
  require(n >= 1, "advice-cbip-size-all-n needs n >= 1");
  return 2 * std::log2(n + 2) + 3 - 2 * std::log2(5.0);
}

double cbip_size(double n) {
  require(n >= 5770, "cbip-size needs n >= 5770");
  return 2 * std::log2(n) - 1.999;
}

double cbip_size_all_n(double n) {
  require(n >= 1, "cbip-size-all-n needs n >= 1");
  return 2 * std::log2(n + 2) - 2;
}

namespace {

double param(const std::map<std::string, double>& parameters, const std::string& key) {
  const auto it = parameters.find(key);
  if (it == parameters.end()) throw DomainError("missing parameter '" + key + "'");
  return it->second;
}

std::size_t count_param(const std::map<std::string, double>& parameters, const std::string& key) {
  const double value = param(parameters, key);
  require(value >= 0 && std::floor(value) == value, "parameter '" + key + "' must be a non-negative integer");
  return static_cast<std::size_t>(value);
}

double c_param(const std::map<std::string, double>& parameters, double fallback) {
  const auto it = parameters.find("c");
  return it == parameters.end() ? fallback : it->second;
}

}  // namespace

std::vector<std::string_view> kinds() {
  return {"first-fit-tail",
          "parity-first-fit-tail",
          "factorial-tail-sum",
          "factorial-power",
          "first-fit-worst-case",
          "first-fit-random-order-mean",
          "parity-first-fit-random-order-mean",
          "advice-first-fit-errors",
          "advice-first-fit-size",
          "advice-cbip-errors",
          "advice-cbip-size",
          "advice-cbip-size-all-n",
          "cbip-size",
          "cbip-size-all-n"};
}

Evaluation evaluate(std::string_view kind, const std::map<std::string, double>& p) {
  Evaluation out;
  out.kind = std::string(kind);
  if (kind == "first-fit-tail") {
    const Rational r = first_fit_tail(count_param(p, "n"), count_param(p, "ell"));
    out = {out.kind, "n^2 / ell!", to_double(r), rational_string(r), true};
  } else if (kind == "parity-first-fit-tail") {
    const Rational r = parity_first_fit_tail(count_param(p, "k"), count_param(p, "ell"));
    out = {out.kind, "k^2 / floor((ell-3)/4)!", to_double(r), rational_string(r), true};
  } else if (kind == "factorial-tail-sum") {
    const auto check = factorial_tail_sum(count_param(p, "s"));
    out = {out.kind, "sum_{l>=s} 1/l! <= 2/s!", check.upper_value(), rational_string(check.limit), check.holds};
  } else if (kind == "factorial-power") {
    const double c = c_param(p, kE);
    const double n = param(p, "n");
    const std::size_t ell = p.count("ell") ? count_param(p, "ell") : factorial_power_min_ell(c, n);
    const auto check = factorial_power(c, n, ell);
    out = {out.kind, "log2(ell!) >= c (1 - log e / e) log n", check.log2_factorial - check.log2_power, "",
           check.holds && check.holds_rounded};
  } else if (kind == "first-fit-worst-case") {
    out = {out.kind, "log n + 1", first_fit_worst_case(param(p, "n")), "", true};
  } else if (kind == "first-fit-random-order-mean") {
    out = {out.kind, "c log n / log log n + 3",
           first_fit_random_order_mean(param(p, "n"), c_param(p, kRandomOrderConstant)), "", true};
  } else if (kind == "parity-first-fit-random-order-mean") {
    out = {out.kind, "4c log k / log log k + 71",
           parity_first_fit_random_order_mean(param(p, "k"), c_param(p, kRandomOrderConstant)), "", true};
  } else if (kind == "advice-first-fit-errors") {
    out = {out.kind, "log k + 3", advice_first_fit_errors(param(p, "k")), "", true};
  } else if (kind == "advice-first-fit-size") {
    out = {out.kind, "log n + 3 - log 3", advice_first_fit_size(param(p, "n")), "", true};
  } else if (kind == "advice-cbip-errors") {
    out = {out.kind, "2 log k + 4", advice_cbip_errors(param(p, "k")), "", true};
  } else if (kind == "advice-cbip-size") {
    out = {out.kind, "2 log n - 1.64", advice_cbip_size(param(p, "n")), "", true};
  } else if (kind == "advice-cbip-size-all-n") {
    out = {out.kind, "2 log(n+2) + 3 - 2 log 5", advice_cbip_size_all_n(param(p, "n")), "", true};
  } else if (kind == "cbip-size") {
    out = {out.kind, "2 log n - 1.999", cbip_size(param(p, "n")), "", true};
  } else if (kind == "cbip-size-all-n") {
    out = {out.kind, "2 log(n+2) - 2", cbip_size_all_n(param(p, "n")), "", true};
  } else {
    throw DomainError("unknown bound kind '" + std::string(kind) + "'");
  }
  return out;
}

}  // namespace bounds
}  // namespace onlinecolor
