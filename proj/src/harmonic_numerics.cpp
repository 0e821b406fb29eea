#include "threeterm/harmonic_numerics.hpp"

#include <cmath>
#include <regex>
#include <stdexcept>

namespace threeterm {

UpperHalfPoint::UpperHalfPoint(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y) || y <= 0.0)
        throw std::domain_error("tau must lie in the upper half-plane, got y = " + std::to_string(y));
}

UpperHalfPoint UpperHalfPoint::parse(const std::string& text) {
    static const std::regex full(R"(\s*([+-]?[0-9.eE]+)\s*([+-])\s*([0-9.eE]*)\s*\*?\s*i\s*)");
    static const std::regex imag_only(R"(\s*\+?([0-9.eE]*)\s*\*?\s*i\s*)");
    std::smatch m;
    auto coeff = [](const std::string& s) { return s.empty() ? 1.0 : std::stod(s); };
    try {
        if (std::regex_match(text, m, full)) {
            double y = coeff(m[3].str());
            return {std::stod(m[1].str()), m[2].str() == "-" ? -y : y};
        }
        if (std::regex_match(text, m, imag_only)) return {0.0, coeff(m[1].str())};
    } catch (const std::logic_error&) {
        // stod failures fall through to the error below
    }
    throw std::invalid_argument("cannot parse tau '" + text + "', expected x+yi");
}

void FiniteDiffScheme::validate() const {
    if (!(h > 0.0) || h > 1e-2) throw std::invalid_argument("finite-difference step must be in (0, 1e-2]");
}

std::vector<std::string> FiniteDiffScheme::warnings(bool nested) const {
    std::vector<std::string> out;
    if (h < 1e-6) out.push_back("step below 1e-6: roundoff dominates first differences");
    if (nested && h < 1e-4) out.push_back("step below 1e-4 with nested second differences: ill-conditioned");
    return out;
}

Eigen::Matrix2d Modular::matrix() const {
    Eigen::Matrix2d g;
    g << a, b, c, d;
    return g;
}

Modular compose(const Modular& g, const Modular& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

Matrix2c metric_field(Complex tau) {
    const double x = tau.real();
    const double y = tau.imag();
    Matrix2c k;
    k << 1.0, -x, -x, x * x + y * y;
    return k / y;
}

Matrix2c eval_metric(const UpperHalfPoint& tau) { return metric_field(tau.tau()); }

double equivariance_residual(const UpperHalfPoint& tau, const Modular& g, double y_min) {
    if (g.a * g.d - g.b * g.c != 1) throw std::invalid_argument("modular matrix must have determinant 1");
    Complex moved = g.act(tau.tau());
    if (moved.imag() <= y_min)
        throw std::domain_error("g tau has imaginary part " + std::to_string(moved.imag()) + " below y_min");
    // The inclusion is real, so conj(rho(g))^{-1} = g^{-1}.
    Eigen::Matrix2cd g_inv = g.matrix().inverse().cast<Complex>();
    Matrix2c expected = g_inv.transpose() * eval_metric(tau) * g_inv;
    return max_entry(Matrix2c(metric_field(moved) - expected));
}

OperatorSample log_derivative(const MatrixField& field, Derivative which, const UpperHalfPoint& tau,
                              const FiniteDiffScheme& scheme) {
    auto [d, dbar] = wirtinger(field, tau.tau(), scheme);
    Matrix2c g_inv = field(tau.tau()).inverse();
    if (which == Derivative::Holomorphic) return {g_inv * d, FormType::DTau};
    return {g_inv * dbar, FormType::DTauBar};
}

OperatorSample theta_finite_difference(const UpperHalfPoint& tau, const FiniteDiffScheme& scheme) {
    MatrixField conj_metric = [](Complex t) -> Matrix2c { return metric_field(t).conjugate(); };
    auto sample = log_derivative(conj_metric, Derivative::Holomorphic, tau, scheme);
    sample.matrix *= -0.5;
    return sample;
}

OperatorSample dbar_K_finite_difference(const UpperHalfPoint& tau, const FiniteDiffScheme& scheme) {
    MatrixField conj_metric = [](Complex t) -> Matrix2c { return metric_field(t).conjugate(); };
    auto sample = log_derivative(conj_metric, Derivative::AntiHolomorphic, tau, scheme);
    sample.matrix *= 0.5;
    return sample;
}

OperatorSample theta_closed_form(const UpperHalfPoint& tau) {
    const Complex t = tau.tau();
    const Complex tb = std::conj(t);
    Matrix2c m;
    m << -tb, tb * tb, -1.0, tb;
    return {m / ((t - tb) * (t - tb)), FormType::DTau};
}

OperatorSample dbar_K_matrix_closed_form(const UpperHalfPoint& tau) {
    const Complex t = tau.tau();
    const Complex tb = std::conj(t);
    Matrix2c m;
    m << t, -t * t, 1.0, -t;
    return {m / ((t - tb) * (t - tb)), FormType::DTauBar};
}

double harmonic_residual(const MatrixField& metric, const UpperHalfPoint& tau, const FiniteDiffScheme& scheme) {
    scheme.validate();
    auto dbar_log = [&](Complex t) -> Matrix2c {
        return log_derivative(metric, Derivative::AntiHolomorphic, UpperHalfPoint(t), scheme).matrix;
    };
    Matrix2c a = dbar_log(tau.tau());
    Matrix2c b = log_derivative(metric, Derivative::Holomorphic, tau, scheme).matrix;
    Matrix2c d_of_a = wirtinger(dbar_log, tau.tau(), scheme).first;
    return max_entry(Matrix2c(d_of_a - 0.5 * (a * b - b * a)));
}

Matrix2c higgs_form_frame(const UpperHalfPoint& tau) {
    const Complex t = tau.tau();
    const Complex tb = std::conj(t);
    Matrix2c m;
    m << -tb / (t - tb), t, -1.0 / (t - tb), 1.0;
    return m;
}

double check_higgs_form(const ScalarField& g, const ScalarField& h, const UpperHalfPoint& tau,
                        const FiniteDiffScheme& scheme) {
    auto section = [&](Complex t) -> Vector2c {
        return higgs_form_frame(UpperHalfPoint(t)) * Vector2c(g(t), h(t));
    };
    Vector2c dbar_f = wirtinger(section, tau.tau(), scheme).second;
    return max_entry(Vector2c(dbar_f + dbar_K_matrix_closed_form(tau).matrix * section(tau.tau())));
}

Matrix2c conjugated_higgs(const UpperHalfPoint& tau) {
    Matrix2c m = higgs_form_frame(tau);
    return m.inverse() * theta_closed_form(tau).matrix * m;
}

Matrix2c a_lambda(const UpperHalfPoint& tau, Complex lambda) {
    if (lambda == Complex(0.0, 0.0)) throw std::invalid_argument("a_lambda needs lambda != 0");
    const Complex t = tau.tau();
    const Complex tb = std::conj(t);
    Matrix2c m;
    m << t - lambda * tb, (lambda - 1.0) * t * tb, 1.0 - lambda, lambda * t - tb;
    return m / (t - tb);
}

std::pair<Complex, Complex> hitchin_invariants(const Matrix2c& theta) {
    return {-theta.trace(), theta.determinant()};
}

double max_entry(const Matrix2c& m) { return m.cwiseAbs().maxCoeff(); }
double max_entry(const Vector2c& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace threeterm
