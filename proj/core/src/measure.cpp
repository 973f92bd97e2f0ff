#include "vcgen/measure.hpp"

#include <cmath>
#include <sstream>

namespace vcgen {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty number");
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool seen_digit = false, seen_point = false;
    for (; pos < text.size(); ++pos) {
      char c = text[pos];
      if (c == '.' && !seen_point) {
        seen_point = true;
        continue;
      }
      if (c < '0' || c > '9') throw InputError("malformed number '" + text + "'");
      if (num > (INT64_MAX - 9) / 10 || (seen_point && den > INT64_MAX / 10))
        throw InputError("number has too many digits '" + text + "'");
      num = num * 10 + (c - '0');
      if (seen_point) den *= 10;
      seen_digit = true;
    }
    if (!seen_digit) throw InputError("malformed number '" + text + "'");
    return Rational(negative ? -num : num, den);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InputError*>(&e)) throw;
    throw InputError("malformed number '" + text + "'");
  }
}

std::string format_rational(const Rational& r) {
  std::int64_t den = r.denominator();
  int digits = 0;
  std::int64_t scale = 1;
  while (den % 2 == 0 || den % 5 == 0) {
    if (den % 2 == 0) den /= 2;
    if (den % 5 == 0) den /= 5;
  }
  if (den != 1) return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  while (scale % r.denominator() != 0) {
    scale *= 10;
    ++digits;
  }
  std::int64_t scaled = r.numerator() * (scale / r.denominator());
  std::string sign = scaled < 0 ? "-" : "";
  std::uint64_t mag = scaled < 0 ? static_cast<std::uint64_t>(-scaled) : static_cast<std::uint64_t>(scaled);
  std::string body = std::to_string(mag);
  if (digits == 0) return sign + body;
  if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return sign + body;
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Measure mu1() {
  Measure m;
  m.beta3 = Rational(106, 1000);
  m.mode = MeasureMode::n_mode;
  return m;
}

Measure mu2() {
  Measure m;
  m.alpha = Rational(178, 1000);
  m.beta1 = Rational(-445, 10000);
  m.beta2 = Rational(-89, 1000);
  m.mode = MeasureMode::k_mode;
  return m;
}

Measure parse_measure(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  Measure m;
  bool have_mode = false;
  while (in >> word) {
    if (word == "measure") continue;
    if (word == "n-mode" || word == "k-mode") {
      m.mode = word == "n-mode" ? MeasureMode::n_mode : MeasureMode::k_mode;
      have_mode = true;
      continue;
    }
    if (word == "mu1" || word == "mu2") {
      m = word == "mu1" ? mu1() : mu2();
      have_mode = true;
      continue;
    }
    auto eq = word.find('=');
    if (eq == std::string::npos) throw InputError("unexpected measure token '" + word + "'");
    std::string key = word.substr(0, eq);
    Rational value = parse_rational(word.substr(eq + 1));
    if (key == "alpha" || key == "a") m.alpha = value;
    else if (key == "b1") m.beta1 = value;
    else if (key == "b2") m.beta2 = value;
    else if (key == "b3") m.beta3 = value;
    else throw InputError("unknown measure weight '" + key + "'");
  }
  if (!have_mode) throw InputError("measure needs a mode (n-mode or k-mode)");
  return m;
}

std::string to_string(const Measure& m) {
  return std::string("measure ") + (m.mode == MeasureMode::n_mode ? "n-mode" : "k-mode") +
         " alpha=" + format_rational(m.alpha) + " b1=" + format_rational(m.beta1) +
         " b2=" + format_rational(m.beta2) + " b3=" + format_rational(m.beta3);
}

Rational evaluate_counts(const Measure& m, long k, long n1, long n2, long n3) {
  return m.alpha * Rational(k) + m.beta1 * Rational(n1) + m.beta2 * Rational(n2) +
         m.beta3 * Rational(n3);
}

Rational evaluate(const Measure& m, const Instance& inst) {
  long n[4] = {0, 0, 0, 0};
  for (Vertex v : inst.graph.vertices()) {
    int d = inst.graph.degree(v);
    if (d > 3) throw InputError("measure is defined for maximum degree 3; vertex " +
                                std::to_string(v) + " has degree " + std::to_string(d));
    ++n[d];
  }
  return evaluate_counts(m, inst.budget, n[1], n[2], n[3]);
}

FeasibilityReport check_feasibility(const Measure& m) {
  FeasibilityReport report;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) {
      report.pass = false;
      report.violated.push_back(what);
    }
  };
  const Rational zero(0);
  const Rational& a = m.alpha;
  const Rational& b1 = m.beta1;
  const Rational& b2 = m.beta2;
  const Rational& b3 = m.beta3;
  if (m.mode == MeasureMode::n_mode) {
    need(a == zero, "alpha = 0");
    need(b3 >= zero, "beta3 >= 0");
    need(zero <= Rational(3, 4) * b1, "0 <= 3*beta1/4");
    need(Rational(3, 4) * b1 <= Rational(3, 4) * b2, "3*beta1/4 <= 3*beta2/4");
    need(Rational(3, 4) * b2 <= b3, "3*beta2/4 <= beta3");
    return report;
  }
  need(b1 <= zero, "beta1 <= 0");
  need(b2 <= zero, "beta2 <= 0");
  need(b3 == zero, "beta3 = 0");
  need(a > zero, "alpha > 0");
  // With no degree terms only k moves, and every rule lowers k.
  if (b1 == zero && b2 == zero && b3 == zero) return report;
  need(-a / 2 <= b2, "-alpha/2 <= beta2");
  need(b2 <= -a / 3, "beta2 <= -alpha/3");
  need(-a / 2 - b2 / 2 <= b1, "-alpha/2 - beta2/2 <= beta1");
  need(b1 <= a / 2 + Rational(3, 2) * b2, "beta1 <= alpha/2 + 3*beta2/2");
  return report;
}

double branching_number(const BranchVector& v) {
  if (v.empty()) throw InputError("branching vector is empty");
  for (auto [w, d] : v)
    if (w < 0 || d <= 0) throw InputError("branching vector needs weights >= 0 and decreases > 0");
  auto excess = [&](double x) {
    double s = 0;
    for (auto [w, d] : v) s += w * std::pow(x, -d);
    return s;
  };
  if (excess(1.0) <= 1.0) return 1.0;
  double lo = 1.0, hi = 2.0;
  while (excess(hi) > 1.0) hi *= 2;
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    (excess(mid) > 1.0 ? lo : hi) = mid;
  }
  return hi;
}

double combine_bound(double a, double b, double c) {
  if (a < 0 || b < 0 || c < 0) throw InputError("combine_bound needs a, b, c >= 0");
  if (a + 2 * c == 0) throw InputError("combine_bound: a + 2c = 0");
  return 2 * c * (a + b) / (a + 2 * c);
}

}  // namespace vcgen
