#pragma once

// Floating-point checks of the totally geodesic harmonic metric
//     K(tau) = (1/y) [[1, -x], [-x, x^2 + y^2]],  tau = x + i y,
// for the inclusion representation of SL_2(Z), and of the Higgs bundle it
// induces: the operators theta_K and dbar_K, the Higgs-form frame M(tau) and the
// C^* isomorphisms a_lambda.

#include <complex>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace threeterm {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;

/// tau = x + i y with y > 0. Throws std::domain_error otherwise.
class UpperHalfPoint {
  public:
    UpperHalfPoint(double x, double y);
    explicit UpperHalfPoint(Complex tau) : UpperHalfPoint(tau.real(), tau.imag()) {}

    double x() const { return x_; }
    double y() const { return y_; }
    Complex tau() const { return {x_, y_}; }

    /// Parses "x+yi", "x-yi", "yi", "i", "0.3+1.2i".
    static UpperHalfPoint parse(const std::string& text);

  private:
    double x_;
    double y_;
};

/// Central second-order differences with step h in (0, 1e-2].
struct FiniteDiffScheme {
    double h = 1e-4;

    /// Throws std::invalid_argument outside (0, 1e-2].
    void validate() const;
    /// Human-readable warnings for steps where roundoff may dominate.
    std::vector<std::string> warnings(bool nested) const;
};

enum class FormType { DTau, DTauBar };

struct OperatorSample {
    Matrix2c matrix;
    FormType form;
};

/// Integer matrix [[a, b], [c, d]] with ad - bc = 1.
struct Modular {
    int a, b, c, d;

    Complex act(Complex tau) const { return (double(a) * tau + double(b)) / (double(c) * tau + double(d)); }
    Eigen::Matrix2d matrix() const;
};

inline constexpr Modular kIdentity{1, 0, 0, 1};
inline constexpr Modular kS{0, -1, 1, 0};
inline constexpr Modular kT{1, 1, 0, 1};

Modular compose(const Modular& g, const Modular& h);

Matrix2c eval_metric(const UpperHalfPoint& tau);

/// Max-entry |K(g tau) - g^{-T} K(tau) g^{-1}|. Throws std::invalid_argument if
/// det g != 1, std::domain_error if Im(g tau) <= y_min.
double equivariance_residual(const UpperHalfPoint& tau, const Modular& g, double y_min = 0.1);

/// Wirtinger derivatives d = (d_x - i d_y)/2 and dbar = (d_x + i d_y)/2 of an
/// Eigen-valued (or complex-valued) function, entrywise central differences.
template <class Fn>
auto wirtinger(Fn&& fn, Complex tau, const FiniteDiffScheme& scheme) {
    scheme.validate();
    using Value = std::decay_t<decltype(fn(tau))>;
    const double h = scheme.h;
    const Complex ih(0.0, h);
    const Complex i(0.0, 1.0);
    // Evaluate eagerly: Eigen expressions must not outlive their operands.
    Value dx = (fn(tau + h) - fn(tau - h)) / (2.0 * h);
    Value dy = (fn(tau + ih) - fn(tau - ih)) / (2.0 * h);
    Value d = 0.5 * (dx - i * dy);
    Value dbar = 0.5 * (dx + i * dy);
    return std::pair<Value, Value>{d, dbar};
}

enum class Derivative { Holomorphic, AntiHolomorphic };

using MatrixField = std::function<Matrix2c(Complex)>;

/// G^{-1} D(G) for the selected Wirtinger derivative D.
OperatorSample log_derivative(const MatrixField& field, Derivative which, const UpperHalfPoint& tau,
                              const FiniteDiffScheme& scheme);

/// K as a field on the plane (used by the finite-difference checks).
Matrix2c metric_field(Complex tau);

/// theta_K = -1/2 d log conj(K), by finite differences.
OperatorSample theta_finite_difference(const UpperHalfPoint& tau, const FiniteDiffScheme& scheme);
/// The matrix part of dbar_K - dbar = 1/2 dbar log conj(K), by finite differences.
OperatorSample dbar_K_finite_difference(const UpperHalfPoint& tau, const FiniteDiffScheme& scheme);

/// (tau - taubar)^{-2} [[-taubar, taubar^2], [-1, taubar]] dtau.
OperatorSample theta_closed_form(const UpperHalfPoint& tau);
/// (tau - taubar)^{-2} [[tau, -tau^2], [1, -tau]] dtaubar.
OperatorSample dbar_K_matrix_closed_form(const UpperHalfPoint& tau);

/// Max-entry of d(dbar log K) - 1/2 [dbar log K, d log K], nested differences.
double harmonic_residual(const MatrixField& metric, const UpperHalfPoint& tau, const FiniteDiffScheme& scheme);

/// M(tau) = [[-taubar/(tau - taubar), tau], [-1/(tau - taubar), 1]].
Matrix2c higgs_form_frame(const UpperHalfPoint& tau);

using ScalarField = std::function<Complex(Complex)>;

/// Max-entry of dbar f + (dbar_K matrix) f for f = M(tau) (g, h)^T.
double check_higgs_form(const ScalarField& g, const ScalarField& h, const UpperHalfPoint& tau,
                        const FiniteDiffScheme& scheme);

/// M(tau)^{-1} theta_K M(tau).
Matrix2c conjugated_higgs(const UpperHalfPoint& tau);

/// a_lambda = (tau - taubar)^{-1} [[tau - lambda taubar, (lambda - 1) tau taubar],
///                                 [1 - lambda, lambda tau - taubar]].
/// Throws std::invalid_argument for lambda = 0.
Matrix2c a_lambda(const UpperHalfPoint& tau, Complex lambda);

/// Coefficients (-trace, det) of the characteristic polynomial of a 2x2 matrix.
std::pair<Complex, Complex> hitchin_invariants(const Matrix2c& theta);

double max_entry(const Matrix2c& m);
double max_entry(const Vector2c& v);

}  // namespace threeterm
