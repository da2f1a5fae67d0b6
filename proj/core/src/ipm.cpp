#include "qmc/ipm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qmc {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Workspace {
    const LmiProblem& p;
    bool reduced;         // face is a proper reduction
    long n;               // moment matrix side
    int r;                // face rank
    std::vector<MatrixXd> tilde;  // reduced E_k when `reduced`

    explicit Workspace(const LmiProblem& prob) : p(prob) {
        n = p.matrix_dim;
        reduced = p.face.size() > 0 && p.face.cols() < p.face.rows();
        r = reduced ? static_cast<int>(p.face.cols()) : static_cast<int>(n);
        if (reduced) {
            tilde.resize(p.num_vars);
            for (int k = 0; k < p.num_vars; ++k) {
                MatrixXd ek = MatrixXd::Zero(n, n);
                for (auto [i, j] : p.entries[k]) {
                    ek(i, j) += 1.0;
                    if (i != j) ek(j, i) += 1.0;
                }
                tilde[k] = p.face.transpose() * ek * p.face;
            }
        }
    }

    MatrixXd form(const VectorXd& x) const {
        if (reduced) {
            MatrixXd f = MatrixXd::Zero(r, r);
            for (int k = 0; k < p.num_vars; ++k)
                if (x(k) != 0.0) f += x(k) * tilde[k];
            return f;
        }
        MatrixXd f = MatrixXd::Zero(n, n);
        for (int k = 0; k < p.num_vars; ++k) {
            double v = x(k);
            if (v == 0.0) continue;
            for (auto [i, j] : p.entries[k]) {
                f(i, j) += v;
                if (i != j) f(j, i) += v;
            }
        }
        return f;
    }

    // g_k = tr(F^{-1} E_k), H_jk = tr(E_j F^{-1} E_k F^{-1}).
    void derivatives(const MatrixXd& finv, VectorXd& g, MatrixXd& h) const {
        g.resize(p.num_vars);
        h.resize(p.num_vars, p.num_vars);
        if (reduced) {
            std::vector<MatrixXd> w(p.num_vars);
            for (int k = 0; k < p.num_vars; ++k) {
                w[k] = finv * tilde[k] * finv;
                g(k) = (finv.array() * tilde[k].array()).sum();
            }
            for (int j = 0; j < p.num_vars; ++j)
                for (int k = j; k < p.num_vars; ++k) {
                    double v = (tilde[j].array() * w[k].array()).sum();
                    h(j, k) = h(k, j) = v;
                }
            return;
        }
        // Sparse path: T_k = F^{-1} E_k F^{-1} via two skinny GEMMs, then
        // H(., k) by gathering T_k on each variable's support.
        for (int k = 0; k < p.num_vars; ++k) {
            const auto& sk = p.entries[k];
            double gk = 0;
            for (auto [i, j] : sk) gk += (i == j) ? finv(i, i) : 2.0 * finv(i, j);
            g(k) = gk;
        }
        std::vector<int> left, right;
        for (int k = 0; k < p.num_vars; ++k) {
            left.clear();
            right.clear();
            for (auto [i, j] : p.entries[k]) {
                left.push_back(i);
                right.push_back(j);
                if (i != j) {
                    left.push_back(j);
                    right.push_back(i);
                }
            }
            const int s = static_cast<int>(left.size());
            MatrixXd gl(n, s), gr(s, n);
            for (int t = 0; t < s; ++t) {
                gl.col(t) = finv.col(left[t]);
                gr.row(t) = finv.row(right[t]);
            }
            MatrixXd tk = gl * gr;
            for (int j = 0; j < p.num_vars; ++j) {
                double v = 0;
                for (auto [a, b] : p.entries[j]) v += (a == b) ? tk(a, a) : tk(a, b) + tk(b, a);
                h(j, k) = v;
            }
        }
        // Symmetrize away the accumulation roundoff.
        h = 0.5 * (h + h.transpose()).eval();
    }
};

}  // namespace

IpmResult solve_lmi(const LmiProblem& p, const IpmOptions& opt) {
    const int nv = p.num_vars;
    Workspace ws(p);
    IpmResult res;

    VectorXd c = Eigen::Map<const VectorXd>(p.objective.data(), nv);
    VectorXd x = Eigen::Map<const VectorXd>(p.start.data(), nv);

    // Null-space basis of the equality rows.
    const int m = static_cast<int>(p.equalities.size());
    MatrixXd at = MatrixXd::Zero(nv, m);
    VectorXd b(m);
    for (int rrow = 0; rrow < m; ++rrow) {
        for (auto [k, v] : p.equalities[rrow].coeffs) at(k, rrow) += v;
        b(rrow) = p.equalities[rrow].rhs;
    }
    MatrixXd z;  // nv x free
    if (m > 0) {
        Eigen::ColPivHouseholderQR<MatrixXd> qr(at);
        long rank = qr.rank();
        MatrixXd q = qr.householderQ();
        z = q.rightCols(nv - rank);
    } else {
        z = MatrixXd::Identity(nv, nv);
    }

    auto primal_residual = [&]() {
        double worst = 0;
        for (int rrow = 0; rrow < m; ++rrow) {
            double v = -b(rrow);
            for (auto [k, w] : p.equalities[rrow].coeffs) v += w * x(k);
            worst = std::max(worst, std::abs(v));
        }
        return worst;
    };

    MatrixXd f = ws.form(x);
    Eigen::LLT<MatrixXd> llt(f);
    if (llt.info() != Eigen::Success) {
        res.status = IpmStatus::infeasible;
        res.primal_residual = primal_residual();
        return res;
    }

    const double mu_final = opt.gap_tol / (2.0 * ws.r);
    double mu = std::max(1.0, std::abs(c.dot(x)) / ws.r);
    int steps = 0;
    double decrement = 0;
    VectorXd g;
    MatrixXd h;

    auto barrier_value = [&](const MatrixXd& form) {
        Eigen::LLT<MatrixXd> ch(form);
        if (ch.info() != Eigen::Success) return -std::numeric_limits<double>::infinity();
        MatrixXd l = ch.matrixL();
        double logdet = 0;
        for (int i = 0; i < form.rows(); ++i) logdet += std::log(l(i, i));
        return 2.0 * logdet;
    };

    bool converged = false;
    while (true) {
        // Newton-center at the current mu.
        for (;;) {
            if (steps >= opt.max_newton || z.cols() == 0) break;
            MatrixXd finv = llt.solve(MatrixXd::Identity(ws.r, ws.r));
            finv = 0.5 * (finv + finv.transpose()).eval();
            ws.derivatives(finv, g, h);
            VectorXd grad = z.transpose() * (c + mu * g);
            MatrixXd hess = mu * (z.transpose() * h * z);
            hess.diagonal().array() += 1e-12 * std::max(1.0, hess.trace() / hess.rows());
            Eigen::LDLT<MatrixXd> hs(hess);
            VectorXd du = hs.solve(grad);
            decrement = grad.dot(du);
            if (!(decrement > 0)) decrement = 0;
            if (decrement <= opt.newton_tol * std::max(1.0, mu)) break;
            ++steps;
            VectorXd dx = z * du;
            double alpha = 1.0;
            double base = c.dot(x) + mu * barrier_value(f);
            for (int ls = 0; ls < 60; ++ls) {
                VectorXd xn = x + alpha * dx;
                MatrixXd fn = ws.form(xn);
                Eigen::LLT<MatrixXd> ln(fn);
                if (ln.info() == Eigen::Success) {
                    double val = c.dot(xn) + mu * barrier_value(fn);
                    if (val >= base - 1e-12 * std::max(1.0, std::abs(base))) {
                        x = xn;
                        f = fn;
                        llt = ln;
                        break;
                    }
                }
                alpha *= 0.5;
                if (ls == 59) alpha = 0;  // stuck; will exit on decrement test
            }
            if (alpha == 0) break;
        }
        if (steps >= opt.max_newton) break;
        if (mu <= mu_final) {
            converged = true;
            break;
        }
        mu = std::max(mu * opt.mu_shrink, mu_final);
    }

    res.value = c.dot(x);
    res.gap = mu * ws.r + decrement;
    res.primal_residual = primal_residual();
    {
        MatrixXd finv = llt.solve(MatrixXd::Identity(ws.r, ws.r));
        VectorXd gfin(nv);
        if (ws.reduced) {
            for (int k = 0; k < nv; ++k) gfin(k) = (finv.array() * ws.tilde[k].array()).sum();
        } else {
            for (int k = 0; k < nv; ++k) {
                double s = 0;
                for (auto [i, j] : p.entries[k]) s += (i == j) ? finv(i, i) : 2.0 * finv(i, j);
                gfin(k) = s;
            }
        }
        res.dual_residual =
            z.cols() == 0 ? 0.0 : (z.transpose() * (c + mu * gfin)).cwiseAbs().maxCoeff();
    }
    res.x.assign(x.data(), x.data() + nv);
    res.newton_steps = steps;
    res.status = converged ? IpmStatus::optimal : IpmStatus::max_iterations;
    return res;
}

}  // namespace qmc
