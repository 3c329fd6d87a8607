#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "tracefem/assembly.hpp"
#include "tracefem/sparse.hpp"

namespace tracefem {

using LinearOp = std::function<void(std::span<const double>, std::span<double>)>;

struct KrylovReport {
  int iterations = 0;
  double final_residual = 0.0;  // Euclidean norm
  bool converged = false;
  std::vector<double> residual_history;
};

/// SSOR(omega=1)-preconditioned conjugate gradients.  Stops when the
/// Euclidean residual has dropped by the given factor relative to the initial
/// residual, or reports converged=false after max_iters.  Throws on nonfinite
/// values.
std::pair<std::vector<double>, KrylovReport> ssor_cg_solve(
    const SparseMatrix& M, std::span<const double> b, double reduction,
    int max_iters);

struct InnerSolveStats {
  long long total_iterations = 0;
  long long applications = 0;
  double average() const {
    return applications ? static_cast<double>(total_iterations) / applications
                        : 0.0;
  }
};

/// Block-diagonal preconditioner diag(Q_A, Q_S) applied through inner solves.
struct BlockPreconditioner {
  LinearOp apply_QA;  // n -> n
  LinearOp apply_QS;  // m -> m
  double inner_reduction = 1e4;
  int inner_max_iters = 2000;
  std::shared_ptr<InnerSolveStats> stats_A = std::make_shared<InnerSolveStats>();
  std::shared_ptr<InnerSolveStats> stats_S = std::make_shared<InnerSolveStats>();
};

enum class PrecondModeA { inner_cg, direct };
enum class PrecondModeS { SQ_inner_cg, Mp_inner_cg, direct };

/// Q_A: inner SSOR-CG with A to relative reduction 1e4, or a sparse direct
/// factorization.  Q_S: same with S_Q (default) or M_p.  The returned object
/// keeps references into the system; the system must outlive it.
BlockPreconditioner make_block_preconditioner(const SaddleSystem& system,
                                              PrecondModeA mode_A,
                                              PrecondModeS mode_S);

/// Preconditioned MINRES on [[A,B^T],[B,-C]] (u,p) = (rhs_u, rhs_p) with zero
/// initial guess and an absolute Euclidean-residual stopping tolerance.  The
/// constant component of rhs_p (the known kernel of the pressure operator) is
/// projected out before iterating; afterwards p is shifted to zero Ms_p-mean.
/// residual_history records the preconditioner-norm residual recurrence.
std::tuple<std::vector<double>, std::vector<double>, KrylovReport> minres_solve(
    const SaddleSystem& system, const BlockPreconditioner& precond, double tol,
    int max_iters);

/// Extreme Ritz values of a symmetric operator after `steps` Lanczos steps
/// with full reorthogonalization.  Restarts with a fresh random vector on
/// breakdown, at most 3 times.  When a kernel vector is given, the start
/// vector and every Lanczos vector are kept orthogonal to it, so the Ritz
/// values sample the spectrum on its orthogonal complement.
std::pair<double, double> lanczos_extreme_eigs(const LinearOp& op, int dim,
                                               int steps, unsigned seed = 1234,
                                               std::span<const double> kernel = {});

/// Spectral condition number |lambda|_max / |lambda|_min of a symmetric
/// operator.  Small operators (dim <= 5000) go through a dense eigensolve;
/// larger ones use Lanczos on the operator for |lambda|_max and on its square
/// for |lambda|_min.  A known one-dimensional kernel (for the saddle system,
/// the constant-pressure direction) can be passed to deflate it: the estimate
/// is then taken on the orthogonal complement of that vector.
double estimate_condition_number(const LinearOp& op, int dim, int steps,
                                 std::span<const double> kernel = {});

}  // namespace tracefem
