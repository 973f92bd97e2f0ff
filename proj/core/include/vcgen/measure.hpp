#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "vcgen/graph.hpp"

namespace vcgen {

using Rational = boost::rational<std::int64_t>;

// Parses "0.0445", "-1", "3/4".
Rational parse_rational(const std::string& text);
// Exact decimal when the denominator divides a power of ten, else "p/q".
std::string format_rational(const Rational& r);
double to_double(const Rational& r);

enum class MeasureMode { n_mode, k_mode };

// mu = alpha*k + beta1*n1 + beta2*n2 + beta3*n3 over degree-i vertex counts.
struct Measure {
  Rational alpha{0};
  Rational beta1{0};
  Rational beta2{0};
  Rational beta3{0};
  MeasureMode mode = MeasureMode::n_mode;

  bool operator==(const Measure&) const = default;
};

Measure mu1();  // 0.106 n3
Measure mu2();  // 0.178 k - 0.0445 n1 - 0.089 n2

// Text form: `measure <n-mode|k-mode> alpha=<r> b1=<r> b2=<r> b3=<r>`.
// The leading `measure` word is optional and missing weights default to 0;
// `a` is accepted for `alpha`.
Measure parse_measure(const std::string& text);
std::string to_string(const Measure& m);

// Throws InputError when the instance has a vertex of degree above 3.
Rational evaluate(const Measure& m, const Instance& inst);
// Degree-count form used for configurations; counts[i] = n_i.
Rational evaluate_counts(const Measure& m, long k, long n1, long n2, long n3);

struct FeasibilityReport {
  bool pass = true;
  std::vector<std::string> violated;
};

// Exact check of the mode's weight inequalities; equality passes.
FeasibilityReport check_feasibility(const Measure& m);

// Branch vector entries: (weight, measure decrease).
using BranchVector = std::vector<std::pair<double, double>>;

// Smallest x >= 1 with sum w * x^(-d) <= 1, by bisection to 1e-9.
double branching_number(const BranchVector& v);

// d = 2c(a+b)/(a+2c) for algorithms of cost e^(a*mu+b*k) and e^(c*n).
double combine_bound(double a, double b, double c);

}  // namespace vcgen
