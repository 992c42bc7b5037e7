#include "implicit.hpp"

#include <Eigen/Sparse>
#include <unsupported/Eigen/IterativeSolvers>

#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "errors.hpp"

namespace lowmach {

void EllipticSystem::matvec(const std::vector<double>& x,
                            std::vector<double>& y) const {
  y.assign(n(), 0.0);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * nx + i;
      double v = diag[k] * x[k];
      if (cw[k] != 0.0) {
        const int iw = i > 0 ? i - 1 : nx - 1;
        v += cw[k] * x[static_cast<std::size_t>(j) * nx + iw];
      }
      if (ce[k] != 0.0) {
        const int ie = i < nx - 1 ? i + 1 : 0;
        v += ce[k] * x[static_cast<std::size_t>(j) * nx + ie];
      }
      if (cs[k] != 0.0) {
        const int js = j > 0 ? j - 1 : ny - 1;
        v += cs[k] * x[static_cast<std::size_t>(js) * nx + i];
      }
      if (cn[k] != 0.0) {
        const int jn = j < ny - 1 ? j + 1 : 0;
        v += cn[k] * x[static_cast<std::size_t>(jn) * nx + i];
      }
      y[k] = v;
    }
  }
}

double EllipticSystem::relative_residual(const std::vector<double>& x) const {
  std::vector<double> ax;
  matvec(x, ax);
  double rr = 0.0, bb = 0.0;
  for (std::size_t k = 0; k < n(); ++k) {
    const double d = ax[k] - rhs[k];
    rr += d * d;
    bb += rhs[k] * rhs[k];
  }
  return bb > 0.0 ? std::sqrt(rr / bb) : std::sqrt(rr);
}

void EllipticSystem::dump(std::ostream& os) const {
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * nx + i;
      os << k << ' ' << k << ' ' << diag[k] << '\n';
      if (cw[k] != 0.0)
        os << k << ' ' << static_cast<std::size_t>(j) * nx + (i > 0 ? i - 1 : nx - 1)
           << ' ' << cw[k] << '\n';
      if (ce[k] != 0.0)
        os << k << ' ' << static_cast<std::size_t>(j) * nx + (i < nx - 1 ? i + 1 : 0)
           << ' ' << ce[k] << '\n';
      if (cs[k] != 0.0)
        os << k << ' ' << static_cast<std::size_t>(j > 0 ? j - 1 : ny - 1) * nx + i
           << ' ' << cs[k] << '\n';
      if (cn[k] != 0.0)
        os << k << ' ' << static_cast<std::size_t>(j < ny - 1 ? j + 1 : 0) * nx + i
           << ' ' << cn[k] << '\n';
    }
  os << "rhs";
  for (std::size_t k = 0; k < n(); ++k) os << ' ' << rhs[k];
  os << '\n';
}

EllipticSystem assemble_psi_system(const ConservedField& w,
                                   const RelaxationField& r, const Grid& g,
                                   double mach, double a, double dt) {
  ConservedField wg = w;
  fill_ghosts(g, wg);
  RelaxationField rg = r;
  fill_ghosts(g, rg);

  EllipticSystem sys;
  sys.nx = g.nx;
  sys.ny = g.dim == 2 ? g.ny : 1;
  sys.bcx = g.bcx;
  sys.bcy = g.bcy;
  const std::size_t n = g.interior_count();
  sys.diag.assign(n, 0.0);
  sys.cw.assign(n, 0.0);
  sys.ce.assign(n, 0.0);
  sys.cs.assign(n, 0.0);
  sys.cn.assign(n, 0.0);
  sys.rhs.assign(n, 0.0);

  // beta in one expression; tau from ghost-filled density
  const double bx = (dt * a / (mach * g.dx)) * (dt * a / (mach * g.dx));
  const double by =
      g.dim == 2 ? (dt * a / (mach * g.dy)) * (dt * a / (mach * g.dy)) : 0.0;

  auto tau = [&](std::size_t k) { return 1.0 / wg.rho[k]; };

  for (int j = g.jlo(); j < g.jhi(); ++j) {
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
      const std::size_t k = g.idx(i, j);
      if (!(wg.rho[k] > 0.0))
        throw AdmissibilityError("assemble_psi_system: rho <= 0",
                                 static_cast<long>(k));
      const std::size_t row =
          static_cast<std::size_t>(j - g.jlo()) * g.nx + (i - Grid::ng);
      const double ti = tau(k);
      const double tw = 0.5 * (ti + tau(k - 1));
      const double te = 0.5 * (ti + tau(k + 1));
      sys.cw[row] = -bx * ti * tw;
      sys.ce[row] = -bx * ti * te;
      double d = 1.0 + bx * ti * (tw + te);
      double rhs = rg.psi[k] -
                   dt * a * a * ti *
                       (wg.mx[k + 1] / wg.rho[k + 1] -
                        wg.mx[k - 1] / wg.rho[k - 1]) /
                       (2.0 * g.dx);
      if (g.dim == 2) {
        const std::size_t kn = g.idx(i, j + 1), ks = g.idx(i, j - 1);
        const double ts = 0.5 * (ti + tau(ks));
        const double tn = 0.5 * (ti + tau(kn));
        sys.cs[row] = -by * ti * ts;
        sys.cn[row] = -by * ti * tn;
        d += by * ti * (ts + tn);
        rhs -= dt * a * a * ti *
               (wg.my[kn] / wg.rho[kn] - wg.my[ks] / wg.rho[ks]) / (2.0 * g.dy);
      }
      sys.diag[row] = d;
      sys.rhs[row] = rhs;

      // zero-gradient: ghost psi equals the interior neighbour, fold into diag
      if (g.bcx == BoundaryKind::ZeroGradient) {
        if (i == Grid::ng) {
          sys.diag[row] += sys.cw[row];
          sys.cw[row] = 0.0;
        }
        if (i == Grid::ng + g.nx - 1) {
          sys.diag[row] += sys.ce[row];
          sys.ce[row] = 0.0;
        }
      }
      if (g.dim == 2 && g.bcy == BoundaryKind::ZeroGradient) {
        if (j == g.jlo()) {
          sys.diag[row] += sys.cs[row];
          sys.cs[row] = 0.0;
        }
        if (j == g.jhi() - 1) {
          sys.diag[row] += sys.cn[row];
          sys.cn[row] = 0.0;
        }
      }
    }
  }
  return sys;
}

namespace {

// tridiagonal solve, rhs overwritten with the solution
void thomas(const std::vector<double>& lo, const std::vector<double>& di,
            const std::vector<double>& up, std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> cp(n);
  double piv = di[0];
  cp[0] = up[0] / piv;
  x[0] /= piv;
  for (std::size_t k = 1; k < n; ++k) {
    piv = di[k] - lo[k] * cp[k - 1];
    cp[k] = up[k] / piv;
    x[k] = (x[k] - lo[k] * x[k - 1]) / piv;
  }
  for (std::size_t k = n - 1; k-- > 0;) x[k] -= cp[k] * x[k + 1];
}

void solve_1d(const EllipticSystem& sys, std::vector<double>& b,
              std::vector<double>& x) {
  const std::size_t n = sys.n();
  x = b;
  if (sys.bcx == BoundaryKind::ZeroGradient) {
    thomas(sys.cw, sys.diag, sys.ce, x);
    return;
  }
  // cyclic tridiagonal via Sherman-Morrison
  const double beta = sys.cw[0];      // top-right corner entry
  const double alpha = sys.ce[n - 1]; // bottom-left corner entry
  std::vector<double> di = sys.diag;
  const double gamma = -di[0];
  di[0] -= gamma;
  di[n - 1] -= alpha * beta / gamma;
  thomas(sys.cw, di, sys.ce, x);
  std::vector<double> z(n, 0.0);
  z[0] = gamma;
  z[n - 1] = alpha;
  thomas(sys.cw, di, sys.ce, z);
  const double fact = (x[0] + beta * x[n - 1] / gamma) /
                      (1.0 + z[0] + beta * z[n - 1] / gamma);
  for (std::size_t k = 0; k < n; ++k) x[k] -= fact * z[k];
}

int solve_2d(const EllipticSystem& sys, std::vector<double>& b,
             std::vector<double>& x, double tol, int max_iter) {
  using SpMat = Eigen::SparseMatrix<double>;
  const std::size_t n = sys.n();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(5 * n);
  for (int j = 0; j < sys.ny; ++j)
    for (int i = 0; i < sys.nx; ++i) {
      const int k = j * sys.nx + i;
      trip.emplace_back(k, k, sys.diag[k]);
      if (sys.cw[k] != 0.0)
        trip.emplace_back(k, j * sys.nx + (i > 0 ? i - 1 : sys.nx - 1),
                          sys.cw[k]);
      if (sys.ce[k] != 0.0)
        trip.emplace_back(k, j * sys.nx + (i < sys.nx - 1 ? i + 1 : 0),
                          sys.ce[k]);
      if (sys.cs[k] != 0.0)
        trip.emplace_back(k, (j > 0 ? j - 1 : sys.ny - 1) * sys.nx + i,
                          sys.cs[k]);
      if (sys.cn[k] != 0.0)
        trip.emplace_back(k, (j < sys.ny - 1 ? j + 1 : 0) * sys.nx + i,
                          sys.cn[k]);
    }
  SpMat A(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  A.setFromTriplets(trip.begin(), trip.end());

  Eigen::GMRES<SpMat, Eigen::IncompleteLUT<double>> gmres;
  gmres.set_restart(30);
  gmres.setTolerance(tol);
  gmres.setMaxIterations(max_iter);
  gmres.compute(A);
  Eigen::Map<Eigen::VectorXd> bv(b.data(), static_cast<Eigen::Index>(n));
  Eigen::VectorXd xv = gmres.solve(bv);
  x.assign(xv.data(), xv.data() + n);
  return static_cast<int>(gmres.iterations());
}

} // namespace

LinearSolveReport solve_psi_system(const EllipticSystem& sys,
                                   std::vector<double>& psi, double tol,
                                   int max_iter) {
  const std::size_t n = sys.n();
  // Constants are fixed points of the operator (row sums are 1), so split off
  // the mean and solve for the small deviation. This keeps the O(M^2)
  // structure of psi resolvable at small Mach numbers.
  const double mean =
      std::accumulate(sys.rhs.begin(), sys.rhs.end(), 0.0) / double(n);
  std::vector<double> b(n);
  double bnorm = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    b[k] = sys.rhs[k] - mean;
    bnorm = std::max(bnorm, std::fabs(b[k]));
  }

  LinearSolveReport rep;
  std::vector<double> d(n, 0.0);
  if (bnorm > 0.0) {
    if (sys.ny == 1)
      solve_1d(sys, b, d);
    else
      rep.iterations = solve_2d(sys, b, d, tol, max_iter);
  }
  psi.assign(n, mean);
  for (std::size_t k = 0; k < n; ++k) psi[k] += d[k];

  rep.residual = sys.relative_residual(psi);
  if (!(rep.residual <= 10.0 * tol) && bnorm > 0.0 && sys.ny > 1) {
    char msg[96];
    std::snprintf(msg, sizeof msg,
                  "implicit psi solve did not converge (residual %.3e)",
                  rep.residual);
    throw SolverError(msg, rep.residual);
  }
  return rep;
}

RelaxationField implicit_step(const ConservedField& w, const RelaxationField& r,
                              const Grid& g, double mach, double a, double dt,
                              double tol, int max_iter,
                              LinearSolveReport* report) {
  EllipticSystem sys = assemble_psi_system(w, r, g, mach, a, dt);
  std::vector<double> psi;
  LinearSolveReport rep = solve_psi_system(sys, psi, tol, max_iter);
  if (report) *report = rep;

  RelaxationField out = r;
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i)
      out.psi[g.idx(i, j)] =
          psi[static_cast<std::size_t>(j - g.jlo()) * g.nx + (i - Grid::ng)];
  apply_boundary(g, out.psi);
  return out;
}

} // namespace lowmach
