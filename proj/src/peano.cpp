#include "mlab/peano.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mlab/quadrature.hpp"

namespace mlab::peano {
namespace {

// exp(-u) quadrature horizon: mass beyond is < 3e-20
constexpr double kExpHorizon = 45.0;

// Integrate f over [a, b] with panel edges inserted at the given interior
// breakpoints (kinks of the integrand).
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       const std::vector<double>& breakpoints, int panels_per_piece, int order) {
    if (!(b > a)) return 0.0;
    std::vector<double> edges{a};
    for (double c : breakpoints)
        if (c > a && c < b) edges.push_back(c);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        total += integrate(f, edges[i], edges[i + 1], panels_per_piece, order);
    return total;
}

}  // namespace

double flow_exact(double x, double t) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("peano::flow_exact: x outside [0,1]");
    if (!(t >= 0.0)) throw std::domain_error("peano::flow_exact: t < 0");
    if (x == 0.0) return 0.0;
    const double y = 1.0 + (std::sqrt(x) - 1.0) * std::exp(-0.5 * t);
    return y * y;
}

double star_solution(double t) {
    if (!(t >= 0.0)) throw std::domain_error("peano::star_solution: t < 0");
    const double y = 1.0 - std::exp(-0.5 * t);
    return y * y;
}

DelayLaw DelayLaw::exponential(double rate) {
    if (!(rate >= 0.0)) throw std::invalid_argument("DelayLaw: rate must be in [0, inf]");
    // degenerate endpoints normalize to dirac laws
    if (rate == kInf) return dirac(0.0);
    if (rate == 0.0) return dirac(kInf);
    DelayLaw law;
    law.kind_ = Kind::exponential;
    law.rate_ = rate;
    return law;
}

DelayLaw DelayLaw::dirac(double a) {
    if (!(a >= 0.0)) throw std::invalid_argument("DelayLaw: dirac atom must be in [0, inf]");
    DelayLaw law;
    law.kind_ = Kind::dirac;
    law.atom_ = a;
    law.rate_ = (a == 0.0) ? kInf : (a == kInf ? 0.0 : std::numeric_limits<double>::quiet_NaN());
    return law;
}

DelayLaw DelayLaw::uniform(double lo, double hi) {
    if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(hi))
        throw std::invalid_argument("DelayLaw: uniform needs 0 <= lo < hi < inf");
    DelayLaw law;
    law.kind_ = Kind::uniform;
    law.lo_ = lo;
    law.hi_ = hi;
    return law;
}

DelayLaw DelayLaw::empirical(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("DelayLaw: empirical needs samples");
    for (double a : samples)
        if (!(a >= 0.0)) throw std::invalid_argument("DelayLaw: empirical sample < 0");
    DelayLaw law;
    law.kind_ = Kind::empirical;
    law.samples_ = std::move(samples);
    return law;
}

bool DelayLaw::memoryless() const {
    if (kind_ == Kind::exponential) return true;
    return kind_ == Kind::dirac && (atom_ == 0.0 || atom_ == kInf);
}

double DelayLaw::sample(RandomSource& rng) const {
    switch (kind_) {
        case Kind::exponential:
            return rng.next_exponential(rate_);
        case Kind::dirac:
            return atom_;
        case Kind::uniform:
            return lo_ + (hi_ - lo_) * rng.next_uniform();
        case Kind::empirical: {
            const std::size_t i = static_cast<std::size_t>(rng.next_uniform() * samples_.size());
            return samples_[std::min(i, samples_.size() - 1)];
        }
    }
    return 0.0;
}

double DelayLaw::survival(double s) const {
    if (s <= 0.0) return 1.0;
    switch (kind_) {
        case Kind::exponential:
            return std::exp(-rate_ * s);
        case Kind::dirac:
            return atom_ >= s ? 1.0 : 0.0;
        case Kind::uniform:
            if (s <= lo_) return 1.0;
            if (s >= hi_) return 0.0;
            return (hi_ - s) / (hi_ - lo_);
        case Kind::empirical: {
            std::size_t c = 0;
            for (double a : samples_)
                if (a >= s) ++c;
            return static_cast<double>(c) / static_cast<double>(samples_.size());
        }
    }
    return 0.0;
}

double DelayLaw::expect(const std::function<double(double)>& h, double h_at_inf,
                        std::vector<double> breakpoints) const {
    switch (kind_) {
        case Kind::exponential: {
            // substitute u = rate * a; kinks move to rate * breakpoint
            const double r = rate_;
            for (double& c : breakpoints) c *= r;
            return integrate_split([&](double u) { return h(u / r) * std::exp(-u); }, 0.0,
                                   kExpHorizon, breakpoints, 48, 32);
        }
        case Kind::dirac:
            return atom_ == kInf ? h_at_inf : h(atom_);
        case Kind::uniform:
            return integrate_split(h, lo_, hi_, breakpoints, 32, 32) / (hi_ - lo_);
        case Kind::empirical: {
            double s = 0.0;
            for (double a : samples_) s += (a == kInf) ? h_at_inf : h(a);
            return s / static_cast<double>(samples_.size());
        }
    }
    return 0.0;
}

double DelayLaw::expect_below(double s, const std::function<double(double)>& h,
                              std::vector<double> breakpoints) const {
    if (s <= 0.0) return 0.0;
    switch (kind_) {
        case Kind::exponential: {
            const double r = rate_;
            const double hi = std::min(r * s, kExpHorizon);
            if (hi <= 0.0) return 0.0;
            for (double& c : breakpoints) c *= r;
            return integrate_split([&](double u) { return h(u / r) * std::exp(-u); }, 0.0, hi,
                                   breakpoints, 48, 32);
        }
        case Kind::dirac:
            return atom_ < s ? h(atom_) : 0.0;
        case Kind::uniform: {
            const double hi = std::min(s, hi_);
            if (hi <= lo_) return 0.0;
            return integrate_split(h, lo_, hi, breakpoints, 32, 32) / (hi_ - lo_);
        }
        case Kind::empirical: {
            double sum = 0.0;
            for (double a : samples_)
                if (a < s) sum += h(a);
            return sum / static_cast<double>(samples_.size());
        }
    }
    return 0.0;
}

std::string DelayLaw::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::exponential:
            os << "exponential(" << rate_ << ")";
            break;
        case Kind::dirac:
            if (atom_ == kInf)
                os << "dirac(inf)";
            else
                os << "dirac(" << atom_ << ")";
            break;
        case Kind::uniform:
            os << "uniform(" << lo_ << "," << hi_ << ")";
            break;
        case Kind::empirical:
            os << "empirical(n=" << samples_.size() << ")";
            break;
    }
    return os.str();
}

SamplePath selection_sample(const SelectionFamily& family, double x, const TimeGrid& grid,
                            RandomSource& rng) {
    grid.validate();
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("peano: x outside [0,1]");
    SamplePath path(grid, 1);
    if (x > 0.0) {
        for (std::size_t k = 0; k < grid.n_nodes(); ++k)
            path.at(k) = flow_exact(x, grid.time(k) - grid.t0);
        return path;
    }
    const double a = family.delay.sample(rng);
    for (std::size_t k = 0; k < grid.n_nodes(); ++k) {
        const double e = grid.time(k) - grid.t0;
        path.at(k) = (e > a) ? star_solution(e - a) : 0.0;
    }
    return path;
}

double markov_defect(const SelectionFamily& family, double s, double t, const Observable1D& f) {
    if (!(s > 0.0) || !(t > 0.0)) throw std::invalid_argument("markov_defect: need s, t > 0");
    const DelayLaw& nu = family.delay;
    const auto star_at = [&](double u) { return f.f(u > 0.0 ? star_solution(u) : 0.0); };
    const double f0 = f.f(0.0);

    // E[f(xi_{s+t})]
    const double lhs = nu.expect([&](double a) { return star_at(s + t - a); }, f0);
    // restart at time s: paths that departed before s continue deterministically,
    // the rest restart the whole selection from 0
    const double departed = nu.expect_below(s, [&](double a) { return star_at(s + t - a); });
    const double mass_waiting = nu.survival(s);
    const double restart = nu.expect([&](double b) { return star_at(t - b); }, f0);
    return lhs - (departed + mass_waiting * restart);
}

double star_resolvent_integral(double lambda, const Observable1D& f) {
    if (!(lambda > 0.0)) throw std::invalid_argument("star_resolvent_integral: lambda <= 0");
    // horizon with tail bound sup|f| e^{-lambda T} / lambda < 1e-10
    const double sup = std::max(f.sup_norm, 1.0);
    const double horizon = std::log(sup / (1e-10 * lambda)) / lambda;
    const int panels = std::max(64, static_cast<int>(horizon * lambda) * 4);
    return integrate([&](double u) { return std::exp(-lambda * u) * f.f(star_solution(u)); }, 0.0,
                     horizon, panels, 32);
}

double j_functional(double lambda, const Observable1D& f, const DelayLaw& delay) {
    if (!(lambda > 0.0)) throw std::invalid_argument("j_functional: lambda <= 0");
    const double istar = star_resolvent_integral(lambda, f);
    const double f0 = f.f(0.0);
    // a-delayed path: f(0) until a, then the star solution
    const auto h = [&](double a) {
        const double e = std::exp(-lambda * a);
        return f0 * (1.0 - e) / lambda + e * istar;
    };
    return delay.expect(h, f0 / lambda);
}

ExtremalityGap extremality_gap(double lambda, const Observable1D& f, double rate_a,
                               double rate_b) {
    if (!(lambda > 0.0)) throw std::invalid_argument("extremality_gap: lambda <= 0");
    if (!(rate_a >= 0.0) || !(rate_b >= 0.0))
        throw std::invalid_argument("extremality_gap: rates must be in [0, inf]");
    ExtremalityGap out{};
    const double ja = j_functional(lambda, f, DelayLaw::exponential(rate_a));
    const double jb = j_functional(lambda, f, DelayLaw::exponential(rate_b));
    out.gap = ja - jb;

    // lambda (b-a) / ((lambda+a)(lambda+b)) = w(a) - w(b) with w(r) = lambda/(lambda+r),
    // which extends to infinite rates (w(inf) = 0)
    const auto w = [lambda](double r) { return r == kInf ? 0.0 : lambda / (lambda + r); };
    const double j_never = j_functional(lambda, f, DelayLaw::exponential(0.0));   // dirac(inf)
    const double j_now = j_functional(lambda, f, DelayLaw::exponential(kInf));    // dirac(0)
    out.formula_gap = (w(rate_a) - w(rate_b)) * (j_never - j_now);
    out.abs_err = std::abs(out.gap - out.formula_gap);
    return out;
}

}  // namespace mlab::peano
