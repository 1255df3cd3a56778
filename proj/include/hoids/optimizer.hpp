#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace hoids {

// Smooth unconstrained objective. `value_and_grad` fills `grad` (sized `dim`)
// and returns the value; `value` alone is used by the line search.
struct Objective {
    int dim = 0;
    std::function<double(const Eigen::VectorXd&)> value;
    std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)> value_and_grad;
};

struct QNConfig {
    double epsilon = 1e-5;   // convergence tolerance on the step norm
    int max_iters = 500;
    double ls_shrink = 0.5;  // backtracking factor
    double ls_c = 1e-4;      // Armijo sufficient-decrease constant
    int ls_max_steps = 50;
};

struct QNTrace {
    int iterations = 0;
    std::vector<double> values;  // objective at w0 and after each accepted step
    bool converged = false;
    double final_step_norm = 0.0;
    std::string diagnostic;      // set when the line search gives up
};

struct MinimizeResult {
    Eigen::VectorXd w;
    QNTrace trace;
};

struct LineSearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest alpha in {1, shrink, shrink^2, ...} (at most ls_max_steps trials)
// with F(w + alpha d) <= F(w) + ls_c * alpha * g'd. Requires g'd < 0; throws
// std::invalid_argument otherwise and LineSearchError when no trial passes.
double backtrack(const Objective& obj, const Eigen::VectorXd& w, const Eigen::VectorXd& direction,
                 const Eigen::VectorXd& g, double f_w, const QNConfig& cfg);

// Inverse-Hessian BFGS update
//   S' = S + (1 + g'Sg/g'd) dd'/g'd - (dg'S + Sgd')/g'd   with d = delta, g = gamma.
// Degenerate curvature (gamma'delta below 1e-12 |delta||gamma|) resets to I.
Eigen::MatrixXd bfgs_update(const Eigen::MatrixXd& S, const Eigen::VectorXd& delta,
                            const Eigen::VectorXd& gamma);

// Quasi-Newton iteration w_{k+1} = w_k - alpha_k S_k g_k from S_0 = I; stops
// when the step norm drops below cfg.epsilon or max_iters is hit. The
// objective value never increases between iterations. A failed line search
// returns the best point so far with converged=false and a diagnostic.
MinimizeResult minimize(const Objective& obj, const Eigen::VectorXd& w0, const QNConfig& cfg);

// trace as CSV (iteration, objective, step norm omitted for row 0)
void write_trace_csv(const QNTrace& trace, const std::string& path);

}  // namespace hoids
