#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "grtoda/paths.hpp"

namespace grtoda {

// The stationary-phase data of the specialized Whittaker integral: linear
// oscillatory part plus a sum of decaying exponential terms over the
// m(N-m) integration variables.
struct PhaseData {
    int m = 0, N = 0;
    std::vector<VarId> vars;                 // measure order
    std::vector<double> lambda;              // length N
    double hbar = 1.0;
    double x = 0.0;                          // value of the source coordinate x_{N,1}
    std::vector<std::complex<double>> linear; // coefficient of each variable (pure imaginary)
    std::complex<double> linear_const{0.0, 0.0};

    struct ExpTerm {
        std::vector<int> exponent; // integer exponent per variable
        double shift = 0.0;        // constant added to the exponent (from the source)
    };
    std::vector<ExpTerm> terms;   // each enters F as -(1/hbar) exp(<a,t> + shift)

    std::complex<double> eval(const std::vector<double>& t) const;
    std::complex<double> eval_shifted(const std::vector<double>& t,
                                      const std::vector<double>& imag_shift) const;
};

PhaseData build_phase(int m, int N, const std::vector<double>& lambda, double hbar, double x);

// symbolic exponential part of the action sum (the bracket multiplying
// -1/hbar), used for the exact equivalence check against the graph sum
ExpPoly action_exponential_part(int m, int N);

struct ContourSpec {
    std::vector<double> half_width;  // real truncation box per variable
    std::vector<double> imag_shift;  // constant imaginary shift per variable

    // every exponential term must keep a positive real part of its decay
    // factor under the shift
    static ContourSpec validated(const PhaseData& phase, std::vector<double> half_width,
                                 std::vector<double> imag_shift);
};

struct QuadratureResult {
    std::complex<double> value{0.0, 0.0};
    double abs_error = 0.0;
    long evaluations = 0;
};

struct BudgetExceeded : std::runtime_error {
    QuadratureResult best;
    explicit BudgetExceeded(QuadratureResult b)
        : std::runtime_error("quadrature evaluation budget exceeded"), best(std::move(b)) {}
};

// refinement policies for the deterministic tensor-grid engine
struct QuadraturePolicy {
    double h0 = 1.0;          // initial spacing
    double t0 = 8.0;          // initial half-width
    bool midpoint = false;    // offset grid instead of trapezoid nodes
    int max_levels = 6;
    long max_evaluations = 400000000L;
};

QuadratureResult evaluate_whittaker(int m, int N, const std::vector<double>& lambda, double hbar,
                                    double x, double tol, const QuadraturePolicy& policy = {});

// decay diagnostics of the exponential part (exact integer arithmetic)
struct DecayCertificate {
    bool coordinate_rays_ok = false; // every +-coordinate ray is damped by some term
    bool circulation_ok = false;     // positive weights w with sum_j w_j a_j = 0
    bool full_rank = false;          // exponent vectors span the integration space
    std::vector<long> weights;       // the certificate weights (path counts)
};

DecayCertificate decay_certificate(int m, int N);

// ---------- special-function oracles ----------

// Lanczos approximation, |relative error| <= 1e-12 on the tested domain
std::complex<double> gamma_lanczos(std::complex<double> z);

// modified Bessel function of the second kind via its cosh integral
// representation, evaluated with independent quadrature settings
std::complex<double> bessel_k(std::complex<double> order, double argument);

// relative residual of the one-dimensional normalization identity
//   int e^{nu t - (1/hbar) e^{-t}} dt = hbar^{-nu} Gamma(-nu),  Re nu < 0
double gamma_identity_check(std::complex<double> nu, double hbar);

} // namespace grtoda
