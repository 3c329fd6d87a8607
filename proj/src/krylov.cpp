#include "tracefem/krylov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

namespace tracefem {

namespace {

void check_finite(std::span<const double> v, const char* where, int iter) {
  for (double x : v)
    if (!std::isfinite(x))
      throw std::runtime_error(std::string(where) + ": nonfinite value at iteration " +
                               std::to_string(iter));
}

// SSOR(1) preconditioner application: z = (D+U)^-1 D (D+L)^-1 r
std::vector<double> ssor_apply(const SparseMatrix& M,
                               std::span<const double> diag,
                               std::span<const double> r) {
  std::vector<double> z(r.begin(), r.end());
  M.lower_solve(z);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] *= diag[i];
  M.upper_solve(z);
  return z;
}

Eigen::SparseMatrix<double> to_eigen(const SparseMatrix& m) {
  Eigen::SparseMatrix<double> e(m.rows(), m.cols());
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(m.nnz());
  const auto off = m.row_offsets();
  const auto cols = m.col_indices();
  const auto vals = m.values();
  for (int r = 0; r < m.rows(); ++r)
    for (int k = off[r]; k < off[r + 1]; ++k)
      trip.emplace_back(r, cols[k], vals[k]);
  e.setFromTriplets(trip.begin(), trip.end());
  return e;
}

LinearOp make_inner_cg_op(const SparseMatrix& mat,
                          std::shared_ptr<InnerSolveStats> stats,
                          double reduction, int max_iters) {
  return [&mat, stats, reduction, max_iters](std::span<const double> x,
                                             std::span<double> y) {
    auto [sol, report] = ssor_cg_solve(mat, x, reduction, max_iters);
    stats->total_iterations += report.iterations;
    stats->applications += 1;
    std::copy(sol.begin(), sol.end(), y.begin());
  };
}

LinearOp make_direct_op(const SparseMatrix& mat) {
  auto solver = std::make_shared<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>>();
  solver->compute(to_eigen(mat));
  if (solver->info() != Eigen::Success)
    throw std::runtime_error("make_block_preconditioner: factorization failed");
  return [solver](std::span<const double> x, std::span<double> y) {
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), x.size());
    Eigen::VectorXd sol = solver->solve(xv);
    std::copy(sol.data(), sol.data() + sol.size(), y.begin());
  };
}

}  // namespace

std::pair<std::vector<double>, KrylovReport> ssor_cg_solve(
    const SparseMatrix& M, std::span<const double> b, double reduction,
    int max_iters) {
  const int n = M.rows();
  std::vector<double> x(n, 0.0);
  std::vector<double> r(b.begin(), b.end());
  KrylovReport report;

  const double bnorm = norm2(r);
  const double target = bnorm / reduction;
  report.residual_history.push_back(bnorm);
  if (bnorm == 0.0) {
    report.converged = true;
    return {std::move(x), std::move(report)};
  }

  const auto diag = M.diagonal();
  std::vector<double> z = ssor_apply(M, diag, r);
  std::vector<double> p = z;
  double rz = dot(r, z);
  std::vector<double> Ap(n);

  for (int it = 1; it <= max_iters; ++it) {
    M.multiply(p, Ap);
    const double pAp = dot(p, Ap);
    if (!std::isfinite(pAp))
      throw std::runtime_error("ssor_cg_solve: nonfinite value at iteration " +
                               std::to_string(it));
    const double alpha = rz / pAp;
    axpy(alpha, p, x);
    axpy(-alpha, Ap, r);
    check_finite(r, "ssor_cg_solve", it);

    const double rnorm = norm2(r);
    report.iterations = it;
    report.residual_history.push_back(rnorm);
    report.final_residual = rnorm;
    if (rnorm <= target) {
      report.converged = true;
      break;
    }
    z = ssor_apply(M, diag, r);
    const double rz_new = dot(r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  return {std::move(x), std::move(report)};
}

BlockPreconditioner make_block_preconditioner(const SaddleSystem& system,
                                              PrecondModeA mode_A,
                                              PrecondModeS mode_S) {
  BlockPreconditioner pc;
  if (mode_A == PrecondModeA::inner_cg)
    pc.apply_QA = make_inner_cg_op(system.A, pc.stats_A, pc.inner_reduction,
                                   pc.inner_max_iters);
  else
    pc.apply_QA = make_direct_op(system.A);

  switch (mode_S) {
    case PrecondModeS::SQ_inner_cg:
      pc.apply_QS = make_inner_cg_op(system.S_Q, pc.stats_S,
                                     pc.inner_reduction, pc.inner_max_iters);
      break;
    case PrecondModeS::Mp_inner_cg:
      pc.apply_QS = make_inner_cg_op(system.M_p, pc.stats_S,
                                     pc.inner_reduction, pc.inner_max_iters);
      break;
    case PrecondModeS::direct:
      pc.apply_QS = make_direct_op(system.S_Q);
      break;
  }
  return pc;
}

std::tuple<std::vector<double>, std::vector<double>, KrylovReport> minres_solve(
    const SaddleSystem& system, const BlockPreconditioner& precond, double tol,
    int max_iters) {
  const int n = system.n();
  const int m = system.m();
  const int dim = n + m;

  std::vector<double> b(dim);
  std::copy(system.rhs_u.begin(), system.rhs_u.end(), b.begin());
  std::copy(system.rhs_p.begin(), system.rhs_p.end(), b.begin() + n);
  // remove the component along the constant-pressure kernel vector (0, 1)
  double mean = 0.0;
  for (int i = 0; i < m; ++i) mean += b[n + i];
  mean /= m;
  for (int i = 0; i < m; ++i) b[n + i] -= mean;

  auto apply_op = [&](std::span<const double> x, std::span<double> y) {
    system.apply_block(x, y);
  };
  auto apply_pc = [&](std::span<const double> x, std::span<double> y) {
    precond.apply_QA(x.subspan(0, n), y.subspan(0, n));
    precond.apply_QS(x.subspan(n, m), y.subspan(n, m));
  };

  KrylovReport report;
  std::vector<double> x(dim, 0.0);

  std::vector<double> r1 = b;
  std::vector<double> y(dim);
  apply_pc(r1, y);
  double beta1 = dot(r1, y);
  if (beta1 < 0.0)
    throw std::runtime_error("minres_solve: preconditioner is not positive definite");
  beta1 = std::sqrt(beta1);
  report.residual_history.push_back(beta1);
  report.final_residual = norm2(b);
  if (report.final_residual <= tol) {
    report.converged = true;
    std::vector<double> u(n, 0.0), p(m, 0.0);
    return {std::move(u), std::move(p), std::move(report)};
  }

  std::vector<double> r2 = r1;
  std::vector<double> v(dim), w(dim, 0.0), w1(dim, 0.0), w2(dim, 0.0);
  std::vector<double> tmp(dim);
  double oldb = 0.0, beta = beta1, dbar = 0.0, epsln = 0.0;
  double phibar = beta1, cs = -1.0, sn = 0.0;

  for (int it = 1; it <= max_iters; ++it) {
    const double inv_beta = 1.0 / beta;
    for (int i = 0; i < dim; ++i) v[i] = y[i] * inv_beta;
    apply_op(v, tmp);
    y = tmp;
    if (it >= 2) axpy(-beta / oldb, r1, y);
    const double alfa = dot(v, y);
    axpy(-alfa / beta, r2, y);
    r1 = r2;
    r2 = y;
    apply_pc(r2, y);
    oldb = beta;
    const double betasq = dot(r2, y);
    if (betasq < 0.0)
      throw std::runtime_error("minres_solve: preconditioner application failed (indefinite)");
    beta = std::sqrt(betasq);

    const double oldeps = epsln;
    const double delta = cs * dbar + sn * alfa;
    const double gbar = sn * dbar - cs * alfa;
    epsln = sn * beta;
    dbar = -cs * beta;
    double gamma = std::sqrt(gbar * gbar + beta * beta);
    gamma = std::max(gamma, 1e-300);
    cs = gbar / gamma;
    sn = beta / gamma;
    const double phi = cs * phibar;
    phibar = sn * phibar;

    w1 = w2;
    w2 = w;
    for (int i = 0; i < dim; ++i)
      w[i] = (v[i] - oldeps * w1[i] - delta * w2[i]) / gamma;
    axpy(phi, w, x);
    check_finite(x, "minres_solve", it);

    report.iterations = it;
    report.residual_history.push_back(phibar);

    // true Euclidean residual for the stopping criterion
    apply_op(x, tmp);
    for (int i = 0; i < dim; ++i) tmp[i] = b[i] - tmp[i];
    report.final_residual = norm2(tmp);
    if (report.final_residual <= tol) {
      report.converged = true;
      break;
    }
  }

  std::vector<double> u(x.begin(), x.begin() + n);
  std::vector<double> p(x.begin() + n, x.end());

  // shift to zero mean on the discrete surface: 1^T Ms_p p = 0
  std::vector<double> ones(m, 1.0);
  const std::vector<double> Ms1 = system.Ms_p.multiply(ones);
  const double area = dot(ones, Ms1);
  if (area > 0.0) {
    const double shift = dot(Ms1, p) / area;
    for (double& pi : p) pi -= shift;
  }
  return {std::move(u), std::move(p), std::move(report)};
}

std::pair<double, double> lanczos_extreme_eigs(const LinearOp& op, int dim,
                                               int steps, unsigned seed,
                                               std::span<const double> kernel) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  auto deflate = [&kernel](std::span<double> v) {
    if (kernel.empty()) return;
    const double c = dot(kernel, v) / dot(kernel, kernel);
    axpy(-c, kernel, v);
  };

  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<std::vector<double>> basis;
    std::vector<double> alpha_c, beta_c;
    std::vector<double> q(dim);
    for (double& qi : q) qi = gauss(rng);
    deflate(q);
    double qn = norm2(q);
    for (double& qi : q) qi /= qn;

    std::vector<double> z(dim);
    bool breakdown = false;
    const int nsteps = std::min(steps, dim);
    for (int k = 0; k < nsteps; ++k) {
      basis.push_back(q);
      op(q, z);
      const double alpha = dot(q, z);
      alpha_c.push_back(alpha);
      deflate(z);
      // full reorthogonalization, twice
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& u : basis) axpy(-dot(u, z), u, z);
      const double beta = norm2(z);
      if (k + 1 == nsteps) break;
      if (beta < 1e-13) {
        breakdown = basis.size() < 2;
        break;
      }
      beta_c.push_back(beta);
      for (int i = 0; i < dim; ++i) q[i] = z[i] / beta;
    }
    if (breakdown) continue;  // restart with a new random vector

    const int k = static_cast<int>(alpha_c.size());
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
      T(i, i) = alpha_c[i];
      if (i + 1 < k) T(i, i + 1) = T(i + 1, i) = beta_c[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T, Eigen::EigenvaluesOnly);
    return {es.eigenvalues()(0), es.eigenvalues()(k - 1)};
  }
  throw std::runtime_error("lanczos_extreme_eigs: repeated breakdown");
}

double estimate_condition_number(const LinearOp& op, int dim, int steps,
                                 std::span<const double> kernel) {
  // deflate the known null direction by sandwiching the operator between
  // projections onto its orthogonal complement
  std::vector<double> k;
  if (!kernel.empty()) {
    k.assign(kernel.begin(), kernel.end());
    const double kn = norm2(k);
    if (kn == 0.0)
      throw std::invalid_argument("estimate_condition_number: zero kernel");
    for (double& ki : k) ki /= kn;
  }
  auto project = [&k](std::span<double> v) {
    if (k.empty()) return;
    const double c = dot(k, v);
    axpy(-c, k, v);
  };
  std::vector<double> xbuf(dim);
  LinearOp deflated = [&](std::span<const double> xin, std::span<double> yout) {
    std::copy(xin.begin(), xin.end(), xbuf.begin());
    project(xbuf);
    op(xbuf, yout);
    project(yout);
  };
  const LinearOp& eff = k.empty() ? op : deflated;

  if (dim <= 5000) {
    Eigen::MatrixXd dense(dim, dim);
    std::vector<double> e(dim, 0.0), col(dim);
    for (int j = 0; j < dim; ++j) {
      e[j] = 1.0;
      eff(e, col);
      e[j] = 0.0;
      for (int i = 0; i < dim; ++i) dense(i, j) = col[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    std::vector<double> mags(dim);
    for (int i = 0; i < dim; ++i) mags[i] = std::abs(ev(i));
    std::sort(mags.begin(), mags.end());
    // the deflated direction contributes exactly one zero eigenvalue
    const double amin = mags[k.empty() ? 0 : 1];
    return mags.back() / amin;
  }

  auto [lo, hi] = lanczos_extreme_eigs(eff, dim, steps, 1234, k);
  const double amax = std::max(std::abs(lo), std::abs(hi));

  std::vector<double> mid(dim);
  LinearOp squared = [&eff, &mid](std::span<const double> xin,
                                  std::span<double> yout) {
    eff(xin, mid);
    eff(mid, yout);
  };
  auto [sq_lo, sq_hi] = lanczos_extreme_eigs(squared, dim, steps, 4321, k);
  (void)sq_hi;
  const double amin = std::sqrt(std::max(sq_lo, 0.0));
  return amax / amin;
}

}  // namespace tracefem
