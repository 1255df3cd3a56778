#include "hoids/optimizer.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace hoids {

double backtrack(const Objective& obj, const Eigen::VectorXd& w, const Eigen::VectorXd& direction,
                 const Eigen::VectorXd& g, double f_w, const QNConfig& cfg) {
    const double slope = g.dot(direction);
    if (!(slope < 0.0))
        throw std::invalid_argument("backtrack: direction is not a descent direction");
    double alpha = 1.0;
    for (int trial = 0; trial < cfg.ls_max_steps; ++trial) {
        const double f_new = obj.value(w + alpha * direction);
        if (f_new <= f_w + cfg.ls_c * alpha * slope) return alpha;
        alpha *= cfg.ls_shrink;
    }
    throw LineSearchError("backtrack: no sufficient decrease within " +
                          std::to_string(cfg.ls_max_steps) + " trials");
}

Eigen::MatrixXd bfgs_update(const Eigen::MatrixXd& S, const Eigen::VectorXd& delta,
                            const Eigen::VectorXd& gamma) {
    const double curvature = gamma.dot(delta);
    const double floor = 1e-12 * delta.norm() * gamma.norm();
    if (!(curvature > floor) || !std::isfinite(curvature))
        return Eigen::MatrixXd::Identity(S.rows(), S.cols());

    const Eigen::VectorXd Sg = S * gamma;
    const double gSg = gamma.dot(Sg);
    Eigen::MatrixXd next = S;
    next += (1.0 + gSg / curvature) / curvature * (delta * delta.transpose());
    next -= (delta * Sg.transpose() + Sg * delta.transpose()) / curvature;
    // the update is symmetric in exact arithmetic; clean up rounding drift
    next = 0.5 * (next + next.transpose()).eval();
    return next;
}

MinimizeResult minimize(const Objective& obj, const Eigen::VectorXd& w0, const QNConfig& cfg) {
    if (w0.size() != obj.dim)
        throw std::invalid_argument("minimize: w0 length " + std::to_string(w0.size()) +
                                    " != objective dim " + std::to_string(obj.dim));

    MinimizeResult res;
    res.w = w0;
    Eigen::VectorXd g(obj.dim);
    double f = obj.value_and_grad(res.w, g);
    if (!std::isfinite(f) || !g.allFinite())
        throw std::invalid_argument("minimize: non-finite objective or gradient at w0");
    res.trace.values.push_back(f);

    Eigen::MatrixXd S = Eigen::MatrixXd::Identity(obj.dim, obj.dim);
    for (int k = 0; k < cfg.max_iters; ++k) {
        if (g.norm() == 0.0) {
            res.trace.converged = true;
            break;
        }
        Eigen::VectorXd d = -(S * g);
        if (!(g.dot(d) < 0.0)) {
            S.setIdentity();
            d = -g;
        }
        double alpha;
        try {
            alpha = backtrack(obj, res.w, d, g, f, cfg);
        } catch (const LineSearchError& e) {
            res.trace.diagnostic = e.what();
            break;
        }
        const Eigen::VectorXd delta = alpha * d;
        res.w += delta;
        Eigen::VectorXd g_next(obj.dim);
        f = obj.value_and_grad(res.w, g_next);
        ++res.trace.iterations;
        res.trace.values.push_back(f);
        res.trace.final_step_norm = delta.norm();
        if (!g_next.allFinite()) {
            res.trace.diagnostic = "non-finite gradient after step";
            break;
        }
        if (res.trace.final_step_norm < cfg.epsilon) {
            res.trace.converged = true;
            break;
        }
        S = bfgs_update(S, delta, g_next - g);
        g = g_next;
    }
    return res;
}

void write_trace_csv(const QNTrace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write trace file: " + path);
    out << "iteration,objective\n";
    for (size_t i = 0; i < trace.values.size(); ++i) out << i << ',' << trace.values[i] << '\n';
}

}  // namespace hoids
