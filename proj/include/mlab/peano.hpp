#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "mlab/observables.hpp"
#include "mlab/path.hpp"
#include "mlab/rng.hpp"

namespace mlab::peano {

// dX = (-X + sqrt(X)) dt on [0,1].  Uniqueness fails only at x = 0, where a
// solution may sit for an arbitrary delay before departing along the strictly
// positive branch.  Everything here is closed-form; the module is the exact
// ground truth the statistical machinery is validated against.

// Unique flow from x in (0,1]; the non-departing branch (identically 0) for
// x = 0.
double flow_exact(double x, double t);

// The unique solution from 0 that is positive for all t > 0.
double star_solution(double t);

// Probability law of the departure delay, on [0, +inf].  The atom at +inf is
// represented explicitly (infinite delay = never depart).
class DelayLaw {
public:
    enum class Kind { exponential, dirac, uniform, empirical };

    // rate inf -> dirac(0) (immediate departure), rate 0 -> dirac(inf)
    static DelayLaw exponential(double rate);
    static DelayLaw dirac(double a);
    static DelayLaw uniform(double lo, double hi);
    static DelayLaw empirical(std::vector<double> samples);

    Kind kind() const { return kind_; }
    // exponential family including both degenerate endpoints
    bool memoryless() const;
    double rate() const { return rate_; }

    double sample(RandomSource& rng) const;
    // nu([s, inf])
    double survival(double s) const;
    // E_nu[h(a)], with h_at_inf the value charged to the atom at +inf.
    // breakpoints lists locations where h has a kink, so quadrature panels
    // can be split there.
    double expect(const std::function<double(double)>& h, double h_at_inf,
                  std::vector<double> breakpoints = {}) const;
    // integral of h over [0, s)
    double expect_below(double s, const std::function<double(double)>& h,
                        std::vector<double> breakpoints = {}) const;

    std::string describe() const;

private:
    DelayLaw() = default;
    Kind kind_ = Kind::dirac;
    double rate_ = 0.0;      // exponential
    double atom_ = 0.0;      // dirac location, may be +inf
    double lo_ = 0.0, hi_ = 0.0;  // uniform
    std::vector<double> samples_;
};

struct SelectionFamily {
    DelayLaw delay;
};

// One trajectory of the selection: deterministic flow for x > 0, delayed star
// solution (delay drawn from the law) for x = 0.
SamplePath selection_sample(const SelectionFamily& family, double x, const TimeGrid& grid,
                            RandomSource& rng);

// Chapman-Kolmogorov defect at the singular point,
//   E[f(xi_{s+t})] - E[E^{restart at xi_s}[f(xi_t)]],
// computed by deterministic quadrature over the delay law.  Zero for every
// (s,t,f) exactly when the law is exponential (including both degenerate
// endpoints).
double markov_defect(const SelectionFamily& family, double s, double t, const Observable1D& f);

// integral of e^{-lambda s} f(X*(s)) over [0, inf), horizon-truncated with
// tail below 1e-10
double star_resolvent_integral(double lambda, const Observable1D& f);

// J_{lambda,f} of the x=0 selection with the given delay law
double j_functional(double lambda, const Observable1D& f, const DelayLaw& delay);

// gap = J(rate a) - J(rate b); formula_gap is the two-extreme-points form
//   lambda (b-a) / ((lambda+a)(lambda+b)) * [J(rate 0) - J(rate inf)]
// (rates in [0, inf], handled symbolically).
struct ExtremalityGap {
    double gap;
    double formula_gap;
    double abs_err;
};
ExtremalityGap extremality_gap(double lambda, const Observable1D& f, double rate_a, double rate_b);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace mlab::peano
