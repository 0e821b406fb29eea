#include "threeterm/metric_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace threeterm {

namespace {

double radical_inverse(std::uint64_t index, std::uint64_t base) {
    double result = 0.0;
    double scale = 1.0 / static_cast<double>(base);
    while (index > 0) {
        result += static_cast<double>(index % base) * scale;
        index /= base;
        scale /= static_cast<double>(base);
    }
    return result;
}

struct Tolerances {
    double first_order = 1e-5;   // theta / dbar_K finite difference, Higgs forms
    double nested = 1e-4;        // harmonic residual
    double order_band = 0.3;     // |empirical order - 2|
    double algebraic = 1e-10;    // equivariance, conjugations
    double nilpotent = 1e-12;    // theta^2, trace, det, metric identities
};

class CheckRunner {
  public:
    explicit CheckRunner(const MetricCheckOptions& options) : options_(options) {
        if (options.single_point) {
            points_.push_back(*options.single_point);
        } else {
            if (options.grid_size < 1) throw std::invalid_argument("grid size must be positive");
            points_ = sample_grid(options.grid_size, options.seed);
        }
    }

    std::vector<MetricCheck> run() {
        metric_properties();
        equivariance("S", kS);
        equivariance("T", kT);
        equivariance("ST", compose(kS, kT));
        equivariance("TS", compose(kT, kS));
        equivariance("T2S", compose(kT, compose(kT, kS)));
        theta_vs_finite_difference();
        dbar_K_vs_finite_difference();
        harmonic_unitary();
        harmonic_inclusion();
        harmonic_order();
        nilpotency();
        conjugation_to_standard_nilpotent();
        c_star_action();
        higgs_forms();
        return std::move(checks_);
    }

  private:
    double step_or(double fallback) const { return options_.step.value_or(fallback); }
    double tol_or(double fallback) const { return options_.tolerance.value_or(fallback); }

    template <class Fn>
    void record(std::string name, double tolerance, Fn&& residual_at, std::vector<std::string> warnings = {}) {
        double worst = 0.0;
        for (const auto& p : points_) {
            double r = residual_at(p);
            if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
            worst = std::max(worst, r);
        }
        double tol = tol_or(tolerance);
        checks_.push_back({std::move(name), worst, tol, worst < tol, std::move(warnings)});
    }

    void metric_properties() {
        record("metric_symmetric", tols_.nilpotent, [](const UpperHalfPoint& p) {
            Matrix2c k = eval_metric(p);
            return max_entry(Matrix2c(k - k.adjoint()));
        });
        record("metric_det_one", tols_.nilpotent, [](const UpperHalfPoint& p) {
            return std::abs(eval_metric(p).determinant() - 1.0);
        });
        // Sylvester's criterion; a failed minor reports an infinite residual.
        record("metric_positive_definite", tols_.nilpotent, [](const UpperHalfPoint& p) {
            Matrix2c k = eval_metric(p);
            bool ok = k(0, 0).real() > 0.0 && k.determinant().real() > 0.0;
            return ok ? 0.0 : std::numeric_limits<double>::infinity();
        });
    }

    void equivariance(const std::string& label, const Modular& g) {
        record("equivariance_" + label, tols_.algebraic,
               [&g](const UpperHalfPoint& p) { return equivariance_residual(p, g); });
    }

    void theta_vs_finite_difference() {
        FiniteDiffScheme scheme{step_or(1e-4)};
        record("theta_closed_vs_fd", tols_.first_order, [&](const UpperHalfPoint& p) {
            return max_entry(Matrix2c(theta_closed_form(p).matrix - theta_finite_difference(p, scheme).matrix));
        }, scheme.warnings(false));
    }

    void dbar_K_vs_finite_difference() {
        FiniteDiffScheme scheme{step_or(1e-4)};
        record("dbar_K_closed_vs_fd", tols_.first_order, [&](const UpperHalfPoint& p) {
            return max_entry(
                Matrix2c(dbar_K_matrix_closed_form(p).matrix - dbar_K_finite_difference(p, scheme).matrix));
        }, scheme.warnings(false));
    }

    void harmonic_unitary() {
        FiniteDiffScheme scheme{step_or(1e-3)};
        MatrixField identity = [](Complex) -> Matrix2c { return Matrix2c::Identity(); };
        record("harmonic_residual_identity", tols_.nilpotent,
               [&](const UpperHalfPoint& p) { return harmonic_residual(identity, p, scheme); },
               scheme.warnings(true));
    }

    void harmonic_inclusion() {
        FiniteDiffScheme scheme{step_or(1e-3)};
        record("harmonic_residual", tols_.nested,
               [&](const UpperHalfPoint& p) { return harmonic_residual(metric_field, p, scheme); },
               scheme.warnings(true));
    }

    void harmonic_order() {
        const double fine = step_or(1e-3);
        const double coarse = std::min(10.0 * fine, 1e-2);
        FiniteDiffScheme fine_scheme{fine};
        FiniteDiffScheme coarse_scheme{coarse};
        record("harmonic_convergence_order", tols_.order_band, [&](const UpperHalfPoint& p) {
            double r_coarse = harmonic_residual(metric_field, p, coarse_scheme);
            double r_fine = harmonic_residual(metric_field, p, fine_scheme);
            double order = std::log(r_coarse / r_fine) / std::log(coarse / fine);
            return std::abs(order - 2.0);
        }, fine_scheme.warnings(true));
    }

    void nilpotency() {
        record("theta_squared", tols_.nilpotent, [](const UpperHalfPoint& p) {
            Matrix2c t = theta_closed_form(p).matrix;
            return max_entry(Matrix2c(t * t));
        });
        record("theta_trace", tols_.nilpotent,
               [](const UpperHalfPoint& p) { return std::abs(hitchin_invariants(theta_closed_form(p).matrix).first); });
        record("theta_det", tols_.nilpotent,
               [](const UpperHalfPoint& p) { return std::abs(hitchin_invariants(theta_closed_form(p).matrix).second); });
    }

    void conjugation_to_standard_nilpotent() {
        record("conjugated_higgs", tols_.algebraic, [](const UpperHalfPoint& p) {
            Matrix2c expected;
            expected << 0.0, 1.0, 0.0, 0.0;
            return max_entry(Matrix2c(conjugated_higgs(p) - expected));
        });
    }

    void c_star_action() {
        const Complex i(0.0, 1.0);
        for (auto [label, lambda] : {std::pair<const char*, Complex>{"2", 2.0}, {"i", i}}) {
            record(std::string("a_lambda_rescales_theta_") + label, tols_.algebraic,
                   [lambda](const UpperHalfPoint& p) {
                       Matrix2c a = a_lambda(p, lambda);
                       Matrix2c theta = theta_closed_form(p).matrix;
                       return max_entry(Matrix2c(a * theta * a.inverse() - lambda * theta));
                   });
        }
        record("a_lambda_identity_at_one", tols_.algebraic, [](const UpperHalfPoint& p) {
            return max_entry(Matrix2c(a_lambda(p, 1.0) - Matrix2c::Identity()));
        });
        record("a_lambda_group_law", tols_.algebraic, [i](const UpperHalfPoint& p) {
            const Complex lambda = 2.0;
            const Complex mu(0.5, -1.5);
            double worst = max_entry(Matrix2c(a_lambda(p, lambda) * a_lambda(p, mu) - a_lambda(p, lambda * mu)));
            worst = std::max(worst, max_entry(Matrix2c(a_lambda(p, i) * a_lambda(p, i) - a_lambda(p, -1.0))));
            return worst;
        });
        record("a_lambda_frame_form", tols_.algebraic, [](const UpperHalfPoint& p) {
            const Complex lambda(-0.75, 2.0);
            Matrix2c m = higgs_form_frame(p);
            Matrix2c diag = Matrix2c::Identity();
            diag(0, 0) = lambda;
            return max_entry(Matrix2c(m * diag * m.inverse() - a_lambda(p, lambda)));
        });
    }

    void higgs_forms() {
        FiniteDiffScheme scheme{step_or(1e-4)};
        struct Pair {
            ScalarField g, h;
        };
        const std::vector<Pair> pairs = {
            {[](Complex) { return Complex(1.0); }, [](Complex) { return Complex(0.0); }},
            {[](Complex) { return Complex(0.0); }, [](Complex) { return Complex(1.0); }},
            {[](Complex t) { return t * t; }, [](Complex t) { return t; }},
            {[](Complex t) { return t * t * t - 1.0; }, [](Complex t) { return 2.0 * t + Complex(0.0, 1.0); }},
        };
        record("higgs_form_dbar_K_closed", tols_.first_order, [&](const UpperHalfPoint& p) {
            double worst = 0.0;
            for (const auto& pr : pairs) worst = std::max(worst, check_higgs_form(pr.g, pr.h, p, scheme));
            return worst;
        }, scheme.warnings(false));
    }

    const MetricCheckOptions& options_;
    Tolerances tols_;
    std::vector<UpperHalfPoint> points_;
    std::vector<MetricCheck> checks_;
};

}  // namespace

std::vector<UpperHalfPoint> sample_grid(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double shift_x = unit(rng);
    const double shift_y = unit(rng);
    std::vector<UpperHalfPoint> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) {
        double u = std::fmod(radical_inverse(static_cast<std::uint64_t>(i), 2) + shift_x, 1.0);
        double v = std::fmod(radical_inverse(static_cast<std::uint64_t>(i), 3) + shift_y, 1.0);
        points.emplace_back(-1.0 + 2.0 * u, 0.5 + 2.5 * v);
    }
    return points;
}

std::vector<MetricCheck> run_metric_checks(const MetricCheckOptions& options) {
    return CheckRunner(options).run();
}

}  // namespace threeterm
