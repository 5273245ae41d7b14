#include "mlab/martingale_test.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mlab/kernels.hpp"

namespace mlab {
namespace {

// Cholesky solve of the p x p normal equations; returns false when the
// predictor Gram matrix is singular.
bool cholesky_solve(std::vector<double>& a, std::vector<double>& b, std::size_t p,
                    std::vector<double>& inv_diag_out) {
    std::vector<double> l(p * p, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a[i * p + j];
            for (std::size_t k = 0; k < j; ++k) s -= l[i * p + k] * l[j * p + k];
            if (i == j) {
                if (s <= 0.0 || !std::isfinite(s)) return false;
                l[i * p + i] = std::sqrt(s);
            } else {
                l[i * p + j] = s / l[j * p + j];
            }
        }
    }
    // forward/back substitution for beta
    std::vector<double> y(p);
    for (std::size_t i = 0; i < p; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l[i * p + k] * y[k];
        y[i] = s / l[i * p + i];
    }
    for (std::size_t ii = p; ii-- > 0;) {
        double s = y[ii];
        for (std::size_t k = ii + 1; k < p; ++k) s -= l[k * p + ii] * b[k];
        b[ii] = s / l[ii * p + ii];
    }
    // diagonal of (X'X)^{-1} via columns of the inverse
    inv_diag_out.assign(p, 0.0);
    std::vector<double> e(p), col(p);
    for (std::size_t j = 0; j < p; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[j] = 1.0;
        for (std::size_t i = 0; i < p; ++i) {
            double s = e[i];
            for (std::size_t k = 0; k < i; ++k) s -= l[i * p + k] * col[k];
            col[i] = s / l[i * p + i];
        }
        for (std::size_t ii = p; ii-- > 0;) {
            double s = col[ii];
            for (std::size_t k = ii + 1; k < p; ++k) s -= l[k * p + ii] * col[k];
            col[ii] = s / l[ii * p + ii];
        }
        inv_diag_out[j] = col[j];
    }
    return true;
}

}  // namespace

MeanSE mean_se(std::span<const double> x) {
    MeanSE r;
    r.n = x.size();
    if (r.n == 0) return r;
    r.mean = kernels::sum(x) / static_cast<double>(r.n);
    if (r.n < 2) return r;
    double ss = 0.0;
    for (double v : x) ss += (v - r.mean) * (v - r.mean);
    r.se = std::sqrt(ss / static_cast<double>(r.n - 1) / static_cast<double>(r.n));
    return r;
}

double MartingaleReport::max_abs_z() const {
    double m = 0.0;
    for (const auto& p : pairs) {
        if (p.deterministic) continue;
        for (double z : p.z) m = std::max(m, std::abs(z));
    }
    return m;
}

bool MartingaleReport::all_z_within(double band) const {
    for (const auto& p : pairs) {
        if (p.degenerate) return false;
        if (p.deterministic) continue;
        for (double z : p.z)
            if (!(std::abs(z) <= band)) return false;
    }
    return true;
}

MartingaleReport martingale_increment_test(std::span<const SamplePath> ensemble,
                                           const NodeFunctional& functional,
                                           const PrefixStats& predictors,
                                           std::vector<std::string> predictor_names,
                                           std::span<const std::pair<double, double>> st_pairs,
                                           const std::function<double(double, double)>& qv_theory) {
    if (ensemble.empty()) throw std::invalid_argument("martingale_increment_test: empty ensemble");
    const auto& grid = ensemble.front().grid();
    MartingaleReport report;
    report.predictor_names = std::move(predictor_names);
    const std::size_t n = ensemble.size();

    for (const auto& [s, t] : st_pairs) {
        const std::size_t ks = grid.node_at(s);
        const std::size_t kt = grid.node_at(t);
        if (kt <= ks) throw std::invalid_argument("martingale_increment_test: need s < t");
        PairStat ps;
        ps.s = s;
        ps.t = t;
        ps.n_paths = n;

        std::vector<double> y(n);
        std::vector<std::vector<double>> X(n);
        std::size_t p = 0;
        for (std::size_t j = 0; j < n; ++j) {
            y[j] = functional(ensemble[j], kt) - functional(ensemble[j], ks);
            X[j] = predictors(ensemble[j], ks);
            if (j == 0)
                p = X[j].size();
            else if (X[j].size() != p)
                throw std::invalid_argument("martingale_increment_test: ragged predictor vectors");
        }
        if (p == 0 || n <= p + 1)
            throw std::invalid_argument("martingale_increment_test: too few paths for regression");

        const MeanSE inc = mean_se(y);
        ps.mean_increment = inc.mean;
        ps.se_increment = inc.se;

        // normal equations
        std::vector<double> xtx(p * p, 0.0), xty(p, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t a = 0; a < p; ++a) {
                xty[a] += X[j][a] * y[j];
                for (std::size_t b = 0; b <= a; ++b) xtx[a * p + b] += X[j][a] * X[j][b];
            }
        }
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = a + 1; b < p; ++b) xtx[a * p + b] = xtx[b * p + a];

        std::vector<double> beta = xty;
        std::vector<double> inv_diag;
        std::vector<double> xtx_copy = xtx;
        if (!cholesky_solve(xtx_copy, beta, p, inv_diag)) {
            ps.degenerate = true;
            ps.note = "degenerate predictor matrix (singular normal equations)";
            ps.z.assign(p, std::numeric_limits<double>::quiet_NaN());
            report.pairs.push_back(std::move(ps));
            continue;
        }
        ps.beta = beta;

        double rss = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double fit = 0.0;
            for (std::size_t a = 0; a < p; ++a) fit += X[j][a] * beta[a];
            rss += (y[j] - fit) * (y[j] - fit);
        }
        const double sigma2 = rss / static_cast<double>(n - p);

        // Deterministic dynamics: residuals and increments vanish; z-scores
        // are meaningless, report exact means instead.
        const double scale = std::max(std::abs(inc.mean), 1.0);
        if (sigma2 < 1e-24 * scale * scale) {
            ps.deterministic = true;
            ps.z.assign(p, 0.0);
            ps.note = "deterministic increments; see mean_increment";
        } else {
            ps.z.resize(p);
            for (std::size_t a = 0; a < p; ++a)
                ps.z[a] = beta[a] / std::sqrt(sigma2 * inv_diag[a]);
        }

        if (qv_theory) {
            const double theory = qv_theory(s, t);
            if (theory != 0.0) {
                double emp = 0.0;
                std::vector<double> m_nodes(kt - ks + 1);
                for (std::size_t j = 0; j < n; ++j) {
                    for (std::size_t k = ks; k <= kt; ++k)
                        m_nodes[k - ks] = functional(ensemble[j], k);
                    emp += kernels::increment_sq_sum(m_nodes);
                }
                ps.qv_ratio = emp / static_cast<double>(n) / theory;
            }
        }
        report.pairs.push_back(std::move(ps));
    }
    return report;
}

MartingaleReport martingale_increment_test(std::span<const SamplePath> m_paths,
                                           std::span<const std::pair<double, double>> st_pairs,
                                           const std::function<double(double, double)>& qv_theory) {
    return martingale_increment_test(
        m_paths, [](const SamplePath& p, std::size_t k) { return p.at(k); },
        [](const SamplePath& p, std::size_t k) {
            return std::vector<double>{1.0, p.at(k)};
        },
        {"1", "M_s"}, st_pairs, qv_theory);
}

OneSidedReport submartingale_increment_test(std::span<const SamplePath> z_paths,
                                            const NodeFunctional& prefix_stat,
                                            std::span<const std::pair<double, double>> st_pairs,
                                            int n_buckets) {
    if (z_paths.empty()) throw std::invalid_argument("submartingale test: empty ensemble");
    const auto& grid = z_paths.front().grid();
    OneSidedReport report;
    const std::size_t n = z_paths.size();

    for (const auto& [s, t] : st_pairs) {
        const std::size_t ks = grid.node_at(s);
        const std::size_t kt = grid.node_at(t);
        OneSidedPair op;
        op.s = s;
        op.t = t;

        std::vector<double> inc(n), pre(n);
        for (std::size_t j = 0; j < n; ++j) {
            inc[j] = z_paths[j].at(kt) - z_paths[j].at(ks);
            pre[j] = prefix_stat(z_paths[j], ks);
        }
        std::vector<double> sorted = pre;
        std::sort(sorted.begin(), sorted.end());
        for (int b = 0; b < n_buckets; ++b) {
            const double lo = sorted[static_cast<std::size_t>(b) * n / n_buckets];
            const double hi = (b == n_buckets - 1)
                                  ? sorted.back()
                                  : sorted[static_cast<std::size_t>(b + 1) * n / n_buckets];
            std::vector<double> bucket;
            for (std::size_t j = 0; j < n; ++j) {
                const bool in = (b == n_buckets - 1) ? (pre[j] >= lo) : (pre[j] >= lo && pre[j] < hi);
                if (in) bucket.push_back(inc[j]);
            }
            if (bucket.size() < 30) continue;  // too small to score
            const MeanSE m = mean_se(bucket);
            OneSidedBucket ob;
            ob.prefix_lo = lo;
            ob.prefix_hi = hi;
            ob.mean = m.mean;
            ob.se = m.se;
            ob.n = m.n;
            ob.violation_z = (m.se > 0.0) ? -m.mean / m.se : (m.mean < 0.0 ? 1e9 : 0.0);
            op.buckets.push_back(ob);
        }
        for (const auto& b : op.buckets)
            op.worst_violation_z = std::max(op.worst_violation_z, b.violation_z);
        report.worst_violation_z = std::max(report.worst_violation_z, op.worst_violation_z);
        report.pairs.push_back(std::move(op));
    }
    return report;
}

}  // namespace mlab
