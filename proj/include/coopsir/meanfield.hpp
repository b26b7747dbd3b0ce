// Numerical analysis of the symmetric mean-field system (recovery rate 1):
//   s' = -2 a s x,  q' = (a s - C a q) x,  x' = (a s + C a q) x - x
// with s(0) = 1-eps, q(0) = x(0) = eps/2. Final epidemic size R = 1 - s(inf)
// is computed two independent ways: direct adaptive integration, and the
// closed-form root T0 of
//   g(t) = t + s0 e^{-2at} + q0 e^{-kt} - s0/(C-2) (e^{-Cat} - e^{-2at}) = 1,
// R = 1 - s0 exp(-2 a T0). The published exponent of the third term is
// ambiguous; k = C*a reproduces the ODE to machine precision (and follows
// from integrating q in the T = int x dt time scale), while the literal
// k = C*beta = C^2*a reading is kept behind a switch for comparison.
#ifndef COOPSIR_MEANFIELD_HPP
#define COOPSIR_MEANFIELD_HPP

#include <optional>
#include <vector>

namespace coopsir {

struct MeanFieldState {
  double s = 0.0;
  double q = 0.0;
  double x = 0.0;
};

// right-hand side of the reduced system
MeanFieldState ode_rhs(const MeanFieldState& state, double alpha, double C);

struct StepControl {
  double tol = 1e-10;    // relative local error target
  double atol = 1e-16;   // absolute floor, keeps x >= 0 honest near extinction
  double h_init = 1e-3;
  double h_min = 1e-14;  // below this a step raises StepUnderflow
  double h_max = 10.0;
};

struct TrajectoryPoint {
  double t = 0.0;
  MeanFieldState y;
};

// Dormand-Prince 5(4) with PI-free step control; accepted states are clipped
// to the invariant region (tiny negative components to 0, s non-increasing).
std::vector<TrajectoryPoint> integrate(double alpha, double C, double eps, double t_end,
                                       const StepControl& control = {});

// integrates until x < 1e-12 and s has moved less than 1e-12 over the last
// unit of time; throws NonConvergence past t = 1e6
double final_size_ode(double alpha, double C, double eps, const StepControl& control = {});

enum class T0Variant {
  ExponentCAlpha,  // k = C*a; matches the ODE (default)
  ExponentCBeta,   // literal reading k = C*beta = C^2*a; for comparison only
};

// smallest t > 0 with g(t) = 1; throws NoRoot if none exists below t = 1e6
double t0_root(double alpha, double C, double eps,
               T0Variant variant = T0Variant::ExponentCAlpha);

double final_size_closed(double alpha, double C, double eps,
                         T0Variant variant = T0Variant::ExponentCAlpha);

struct RStarResult {
  std::vector<double> eps_values;
  std::vector<double> r_values;
  double estimate = 0.0;   // R at the smallest epsilon
  double last_diff = 0.0;  // |R(eps_last) - R(eps_prev)|, convergence signal
};

// final size along a decreasing epsilon sequence (default 1e-2 .. 1e-8);
// evaluated with the closed form (validated exponent)
RStarResult r_star(double alpha, double C, std::vector<double> eps_sequence = {});

struct PhaseScanResult {
  std::vector<double> alpha_grid;
  std::vector<double> final_sizes;
  std::vector<int> jump_flags;  // 1 on the right edge of a detected jump
  bool jump_detected = false;
  std::optional<double> alpha0_estimate;  // set iff jump_detected
  std::optional<double> jump_size;
};

// final size over an ascending alpha grid; flags a jump when one consecutive
// difference exceeds 10x its neighbours' and 0.01 absolute, then refines the
// jump location by bisection to 1e-6
PhaseScanResult scan_alpha(double C, double eps, const std::vector<double>& alpha_grid,
                           bool use_ode = false);

}  // namespace coopsir

#endif
