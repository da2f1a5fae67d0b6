#include "qmc/tensor_oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qmc/young.hpp"

namespace qmc {

Eigen::VectorXd symmetric_eigenvalues(Eigen::MatrixXd a) {
    const int n = static_cast<int>(a.rows());
    Eigen::VectorXd w(n);
    int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, w.data());
    if (info != 0) throw std::runtime_error("dsyevd failed with info " + std::to_string(info));
    return w;
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> symmetric_eigensystem(Eigen::MatrixXd a) {
    const int n = static_cast<int>(a.rows());
    Eigen::VectorXd w(n);
    int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n, w.data());
    if (info != 0) throw std::runtime_error("dsyevd failed with info " + std::to_string(info));
    return {w, a};
}

namespace {

long power_long(int base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1L << 40)) throw std::invalid_argument("tensor space dimension too large");
        r *= base;
    }
    return r;
}

}  // namespace

void apply_permutation(const Permutation& pi, const std::vector<double>& in,
                       std::vector<double>& out, int d) {
    const int n = pi.n();
    const long dim = power_long(d, n);
    if (static_cast<long>(in.size()) != dim)
        throw std::invalid_argument("state vector has wrong length");
    out.assign(dim, 0.0);
    // Strides in big-endian digit order: position 0 is the most significant.
    std::vector<long> stride(n);
    long s = 1;
    for (int i = n - 1; i >= 0; --i) {
        stride[i] = s;
        s *= d;
    }
    std::vector<long> moved(n);
    for (int i = 0; i < n; ++i) moved[i] = stride[pi.apply(i)];
    std::vector<int> digits(n, 0);
    for (long x = 0; x < dim; ++x) {
        long y = 0;
        for (int i = 0; i < n; ++i) y += digits[i] * moved[i];
        out[y] = in[x];
        for (int i = n - 1; i >= 0; --i) {
            if (++digits[i] < d) break;
            digits[i] = 0;
        }
    }
}

std::vector<double> apply_permutation(const Permutation& pi, const std::vector<double>& in, int d) {
    std::vector<double> out;
    apply_permutation(pi, in, out, d);
    return out;
}

TensorOperator::TensorOperator(int n, int d) : n_(n), d_(d), dim_(power_long(d, n)) {
    if (n < 1 || d < 1) throw std::invalid_argument("tensor operator needs n, d >= 1");
}

Eigen::MatrixXd TensorOperator::dense(long cap) const {
    if (dim_ > cap)
        throw std::invalid_argument("dense cap exceeded: dim " + std::to_string(dim_) + " > " +
                                    std::to_string(cap));
    Eigen::MatrixXd m(dim_, dim_);
    std::vector<double> e(dim_, 0.0), col(dim_);
    for (long j = 0; j < dim_; ++j) {
        e[j] = 1.0;
        apply(e, col);
        for (long i = 0; i < dim_; ++i) m(i, j) = col[i];
        e[j] = 0.0;
    }
    return m;
}

PermutationOperator::PermutationOperator(Permutation pi, int d)
    : TensorOperator(pi.n(), d), pi_(std::move(pi)) {}

void PermutationOperator::apply(const std::vector<double>& in, std::vector<double>& out) const {
    apply_permutation(pi_, in, out, d_);
}

HamiltonianOperator::HamiltonianOperator(GraphSpec g, int d)
    : TensorOperator(g.n(), d), graph_(std::move(g)) {
    diag_ = 2.0 * graph_.total_weight();
}

void HamiltonianOperator::apply(const std::vector<double>& in, std::vector<double>& out) const {
    if (static_cast<long>(in.size()) != dim_) throw std::invalid_argument("state length mismatch");
    out.resize(dim_);
    for (long x = 0; x < dim_; ++x) out[x] = diag_ * in[x];
    std::vector<long> stride(n_);
    long s = 1;
    for (int i = n_ - 1; i >= 0; --i) {
        stride[i] = s;
        s *= d_;
    }
    for (const auto& e : graph_.edges()) {
        const long su = stride[e.u], sv = stride[e.v];
        const double w2 = 2.0 * e.w;
        for (long x = 0; x < dim_; ++x) {
            int a = static_cast<int>(x / su) % d_;
            int b = static_cast<int>(x / sv) % d_;
            long y = x + (b - a) * su + (a - b) * sv;
            out[y] -= w2 * in[x];
        }
    }
}

Eigen::MatrixXd HamiltonianOperator::dense_direct(long cap) const {
    if (dim_ > cap)
        throw std::invalid_argument("dense cap exceeded: dim " + std::to_string(dim_) + " > " +
                                    std::to_string(cap));
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
    m.diagonal().setConstant(diag_);
    std::vector<long> stride(n_);
    long s = 1;
    for (int i = n_ - 1; i >= 0; --i) {
        stride[i] = s;
        s *= d_;
    }
    for (const auto& e : graph_.edges()) {
        const long su = stride[e.u], sv = stride[e.v];
        const double w2 = 2.0 * e.w;
        for (long x = 0; x < dim_; ++x) {
            int a = static_cast<int>(x / su) % d_;
            int b = static_cast<int>(x / sv) % d_;
            long y = x + (b - a) * su + (a - b) * sv;
            m(y, x) -= w2;
        }
    }
    return m;
}

IsotypicProjector::IsotypicProjector(const Partition& lambda, int d, int projector_cap)
    : TensorOperator(lambda.weight(), d), lambda_(lambda) {
    const int n = lambda.weight();
    if (n > projector_cap)
        throw std::invalid_argument("projector cap exceeded: n = " + std::to_string(n) + " > " +
                                    std::to_string(projector_cap));
    const double scale = Rat(dim_sn(lambda), factorial(n)).get_d();
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::map<Partition, double> chi_of_type;
    do {
        Permutation pi{std::vector<int>(img)};
        Partition type = pi.cycle_type();
        auto it = chi_of_type.find(type);
        if (it == chi_of_type.end())
            it = chi_of_type.emplace(type, Rat(chi(lambda, ConjugacyClass{type})).get_d()).first;
        weighted_.emplace_back(std::move(pi), scale * it->second);
    } while (std::next_permutation(img.begin(), img.end()));
}

void IsotypicProjector::apply(const std::vector<double>& in, std::vector<double>& out) const {
    out.assign(dim_, 0.0);
    std::vector<double> tmp(dim_);
    for (const auto& [pi, coeff] : weighted_) {
        if (coeff == 0.0) continue;
        apply_permutation(pi, in, tmp, d_);
        for (long i = 0; i < dim_; ++i) out[i] += coeff * tmp[i];
    }
}

namespace {

double lanczos_max_eigenvalue(const TensorOperator& op, const EigOptions& opts) {
    const long dim = op.dim();
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss;
    std::vector<double> start(dim);
    for (double& v : start) v = gauss(rng);

    const int m = static_cast<int>(std::min<long>(opts.krylov, dim));
    double theta = 0.0;
    std::vector<std::vector<double>> basis;
    std::vector<double> w(dim), ritz(dim);

    auto norm = [](const std::vector<double>& v) {
        double s = 0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    };
    auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };

    double last_residual = std::numeric_limits<double>::quiet_NaN();
    for (int restart = 0; restart < opts.max_restarts; ++restart) {
        basis.clear();
        double nv = norm(start);
        if (nv == 0.0) {
            start.assign(dim, 0.0);
            start[0] = 1.0;
            nv = 1.0;
        }
        for (double& v : start) v /= nv;
        basis.push_back(start);

        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        int built = 1;
        for (int j = 0; j < m; ++j) {
            op.apply(basis[j], w);
            for (int i = 0; i <= j; ++i) {
                double h = dot(w, basis[i]);
                t(i, j) = t(j, i) = h;
                for (long x = 0; x < dim; ++x) w[x] -= h * basis[i][x];
            }
            // Second orthogonalization pass keeps the small basis numerically sound.
            for (int i = 0; i <= j; ++i) {
                double c = dot(w, basis[i]);
                for (long x = 0; x < dim; ++x) w[x] -= c * basis[i][x];
            }
            if (j + 1 == m) break;
            double beta = norm(w);
            if (beta < 1e-13) break;
            for (double& v : w) v /= beta;
            basis.push_back(w);
            ++built;
        }

        int k = built;
        auto [evals, evecs] = symmetric_eigensystem(t.topLeftCorner(k, k));
        theta = evals(k - 1);
        ritz.assign(dim, 0.0);
        for (int i = 0; i < k; ++i) {
            double c = evecs(i, k - 1);
            for (long x = 0; x < dim; ++x) ritz[x] += c * basis[i][x];
        }
        double rn = norm(ritz);
        for (double& v : ritz) v /= rn;
        op.apply(ritz, w);
        double resid = 0;
        for (long x = 0; x < dim; ++x) {
            double r = w[x] - theta * ritz[x];
            resid += r * r;
        }
        resid = std::sqrt(resid);
        last_residual = resid;
        if (resid <= opts.iterative_tol * std::max(1.0, std::abs(theta))) return theta;
        start = ritz;
    }
    throw std::runtime_error("iterative eigensolver did not converge after " +
                             std::to_string(opts.max_restarts) +
                             " restarts; last residual " + std::to_string(last_residual));
}

}  // namespace

double max_eigenvalue(const TensorOperator& op, const EigOptions& opts) {
    if (opts.method == EigMethod::dense) {
        Eigen::VectorXd w = dense_spectrum(op, opts.dense_cap);
        return w(w.size() - 1);
    }
    return lanczos_max_eigenvalue(op, opts);
}

Eigen::VectorXd dense_spectrum(const TensorOperator& op, long cap) {
    const auto* ham = dynamic_cast<const HamiltonianOperator*>(&op);
    Eigen::MatrixXd m = ham ? ham->dense_direct(cap) : op.dense(cap);
    return symmetric_eigenvalues(std::move(m));
}

std::vector<Eigen::MatrixXcd> gellmann_basis(int d) {
    if (d < 2) throw std::invalid_argument("gellmann_basis needs d >= 2");
    using Mat = Eigen::MatrixXcd;
    const std::complex<double> i01(0.0, 1.0);
    std::vector<Mat> out;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            Mat sym = Mat::Zero(d, d);
            sym(a, b) = sym(b, a) = 1.0;
            out.push_back(sym);
        }
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            Mat asym = Mat::Zero(d, d);
            asym(b, a) = i01;
            asym(a, b) = -i01;
            out.push_back(asym);
        }
    for (int k = 2; k <= d; ++k) {
        Mat diag = Mat::Zero(d, d);
        double c = std::sqrt(2.0 / (k * (k - 1.0)));
        for (int j = 0; j < k - 1; ++j) diag(j, j) = c;
        diag(k - 1, k - 1) = c * (1.0 - k);
        out.push_back(diag);
    }
    return out;
}

double swap_gellmann_residual(int d) {
    const int dim = d * d;
    Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(d);
    for (const auto& lam : gellmann_basis(d)) {
        Eigen::MatrixXcd kron(dim, dim);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                kron.block(a * d, b * d, d, d) = lam(a, b) * lam;
        rhs += 0.5 * kron;
    }
    Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(dim, dim);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) swap(q * d + p, p * d + q) = 1.0;
    return (swap - rhs).cwiseAbs().maxCoeff();
}

bool verify_swap_gellmann(int d, double tol) { return swap_gellmann_residual(d) < tol; }

double degree_relation_residual(int d) {
    const int n = d + 1;
    const long dim = power_long(d, n);
    std::vector<double> acc(dim * dim, 0.0), col(dim), e(dim, 0.0);
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation>group;
    do {
        group.emplace_back(std::vector<int>(img));
    } while (std::next_permutation(img.begin(), img.end()));
    for (long j = 0; j < dim; ++j) {
        e[j] = 1.0;
        for (const Permutation& pi : group) {
            apply_permutation(pi, e, col, d);
            double s = pi.sign();
            for (long i = 0; i < dim; ++i) acc[j * dim + i] += s * col[i];
        }
        e[j] = 0.0;
    }
    double mx = 0;
    for (double v : acc) mx = std::max(mx, std::abs(v));
    return mx;
}

Eigen::MatrixXd element_dense(const AlgebraElement& x, int d, long cap) {
    const int n = x.n();
    const long dim = power_long(d, n);
    if (dim > cap) throw std::invalid_argument("dense cap exceeded for algebra element");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    std::vector<double> e(dim, 0.0), col(dim);
    for (long j = 0; j < dim; ++j) {
        e[j] = 1.0;
        for (const auto& [pi, coeff] : x.terms()) {
            apply_permutation(pi, e, col, d);
            double c = coeff.get_d();
            for (long i = 0; i < dim; ++i) m(i, j) += c * col[i];
        }
        e[j] = 0.0;
    }
    return m;
}

Eigen::MatrixXd irrep_element_matrix(const YoungOrthogonal& rep, const AlgebraElement& x) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rep.dim(), rep.dim());
    for (const auto& [pi, coeff] : x.terms()) m += coeff.get_d() * rep.permutation(pi);
    return m;
}

Eigen::VectorXd irrep_hamiltonian_spectrum(const Partition& lambda, const GraphSpec& g,
                                           long dim_cap) {
    YoungOrthogonal rep(lambda, dim_cap);
    return symmetric_eigenvalues(irrep_element_matrix(rep, hamiltonian_element(g)));
}

bool verify_degree_relation(int d, double tol) {
    if (degree_relation_residual(d) >= tol) return false;
    // The sign representation has height d+1 and evaluates the antisymmetrizer
    // to (d+1)! != 0.
    const int n = d + 1;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    double sign_value = 0;
    do {
        Permutation pi{std::vector<int>(img)};
        sign_value += pi.sign() * pi.sign();
    } while (std::next_permutation(img.begin(), img.end()));
    return sign_value > 0.5;
}

}  // namespace qmc
