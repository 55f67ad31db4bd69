#include "laxmilgram/fem1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace laxmilgram::fem1d {

Mesh1D::Mesh1D(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw Error(ErrorCode::MeshInvalid, "a mesh needs at least one cell");
  if (nodes_.front() != 0.0 || nodes_.back() != 1.0) {
    throw Error(ErrorCode::MeshInvalid, "mesh must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i] > nodes_[i - 1])) {
      std::ostringstream os;
      os << "nodes " << i - 1 << " and " << i << " are not strictly increasing";
      throw Error(ErrorCode::MeshInvalid, os.str());
    }
  }
}

Mesh1D Mesh1D::uniform(std::size_t n_cells) {
  if (n_cells == 0) throw Error(ErrorCode::MeshInvalid, "a mesh needs at least one cell");
  std::vector<double> nodes(n_cells + 1);
  // i / n rather than i * h: nested uniform meshes then share nodes bitwise.
  for (std::size_t i = 0; i <= n_cells; ++i) {
    nodes[i] = static_cast<double>(i) / static_cast<double>(n_cells);
  }
  return Mesh1D(std::move(nodes));
}

double Mesh1D::h_max() const noexcept {
  double h = 0.0;
  for (std::size_t i = 1; i < nodes_.size(); ++i) h = std::max(h, nodes_[i] - nodes_[i - 1]);
  return h;
}

GaussRule gauss_legendre(int n_points) {
  switch (n_points) {
    case 1: return {{0.0}, {2.0}};
    case 2: {
      const double p = 1.0 / std::sqrt(3.0);
      return {{-p, p}, {1.0, 1.0}};
    }
    case 3: {
      const double p = std::sqrt(0.6);
      return {{-p, 0.0, p}, {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0}};
    }
    case 4: {
      const double a = std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
      const double b = std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
      const double wa = (18.0 + std::sqrt(30.0)) / 36.0;
      const double wb = (18.0 - std::sqrt(30.0)) / 36.0;
      return {{-b, -a, a, b}, {wb, wa, wa, wb}};
    }
    default: throw Error(ErrorCode::InvalidArgument, "Gauss rules have 1 to 4 points");
  }
}

namespace {

void require_interior(const Mesh1D& mesh) {
  if (mesh.n_interior() == 0) {
    throw Error(ErrorCode::MeshInvalid, "mesh has no interior node, the discrete space is empty");
  }
}

/// Adds a 2x2 element matrix for cell [x_k, x_{k+1}]; boundary rows and
/// columns are dropped.
void scatter(Matrix& global, std::size_t cell, std::size_t n_interior, const double (&local)[2][2]) {
  const std::ptrdiff_t idx[2] = {static_cast<std::ptrdiff_t>(cell) - 1,
                                 static_cast<std::ptrdiff_t>(cell)};
  for (int a = 0; a < 2; ++a) {
    if (idx[a] < 0 || idx[a] >= static_cast<std::ptrdiff_t>(n_interior)) continue;
    for (int b = 0; b < 2; ++b) {
      if (idx[b] < 0 || idx[b] >= static_cast<std::ptrdiff_t>(n_interior)) continue;
      global(idx[a], idx[b]) += local[a][b];
    }
  }
}

}  // namespace

Vector load_vector(const ScalarFunction& rhs, const Mesh1D& mesh, int gauss_points) {
  require_interior(mesh);
  const GaussRule rule = gauss_legendre(gauss_points);
  const auto& x = mesh.nodes();
  const std::size_t n_int = mesh.n_interior();
  Vector load = Vector::Zero(static_cast<Eigen::Index>(n_int));
  for (std::size_t k = 0; k < mesh.n_cells(); ++k) {
    const double h = x[k + 1] - x[k];
    double left = 0.0;
    double right = 0.0;
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const double t = 0.5 * (rule.points[q] + 1.0);
      const double w = 0.5 * h * rule.weights[q];
      const double fx = rhs(x[k] + t * h);
      left += w * fx * (1.0 - t);
      right += w * fx * t;
    }
    if (k >= 1) load(static_cast<Eigen::Index>(k - 1)) += left;
    if (k + 1 <= n_int) load(static_cast<Eigen::Index>(k)) += right;
  }
  return load;
}

Assembly assemble_matrices(const Pde1D& pde, const Mesh1D& mesh) {
  require_interior(mesh);
  const auto n = static_cast<Eigen::Index>(mesh.n_interior());
  Assembly out{Matrix::Zero(n, n), Matrix::Zero(n, n), Matrix::Zero(n, n), Vector()};
  const auto& x = mesh.nodes();
  for (std::size_t k = 0; k < mesh.n_cells(); ++k) {
    const double h = x[k + 1] - x[k];
    const double stiff[2][2] = {{1.0 / h, -1.0 / h}, {-1.0 / h, 1.0 / h}};
    const double mass[2][2] = {{h / 3.0, h / 6.0}, {h / 6.0, h / 3.0}};
    // int phi_a' phi_b: phi_a' = -+1/h times int phi_b = h/2.
    const double adv[2][2] = {{-0.5, -0.5}, {0.5, 0.5}};
    scatter(out.stiffness, k, mesh.n_interior(), stiff);
    scatter(out.mass, k, mesh.n_interior(), mass);
    scatter(out.advection, k, mesh.n_interior(), adv);
  }
  if (pde.rhs) {
    out.load = load_vector(pde.rhs, mesh, 2);
  } else {
    out.load = Vector::Zero(n);
  }
  return out;
}

VariationalProblem assemble(const Pde1D& pde, const Mesh1D& mesh) {
  Assembly parts = assemble_matrices(pde, mesh);
  Matrix m = parts.stiffness;
  if (pde.beta != 0.0) m += pde.beta * parts.advection;
  if (pde.reaction != 0.0) m += pde.reaction * parts.mass;
  return make_problem(HilbertSpace(std::move(parts.stiffness)), BilinearForm{std::move(m)},
                      LinearForm{std::move(parts.load)});
}

std::vector<std::string> manufactured_case_ids() { return {"poisson-parabola", "poisson-sine"}; }

ManufacturedCase manufactured(const std::string& case_id, double beta, double reaction) {
  using std::numbers::pi;
  ScalarFunction u;
  ScalarFunction du;
  ScalarFunction d2u;
  double seminorm = 0.0;
  if (case_id == "poisson-parabola") {
    u = [](double x) { return 0.5 * x * (1.0 - x); };
    du = [](double x) { return 0.5 - x; };
    d2u = [](double) { return -1.0; };
    seminorm = std::sqrt(1.0 / 12.0);
  } else if (case_id == "poisson-sine") {
    u = [](double x) { return std::sin(pi * x); };
    du = [](double x) { return pi * std::cos(pi * x); };
    d2u = [](double x) { return -pi * pi * std::sin(pi * x); };
    seminorm = pi / std::sqrt(2.0);
  } else {
    throw Error(ErrorCode::UnknownCase, "unknown manufactured case '" + case_id + "'");
  }
  ManufacturedCase out;
  out.id = case_id;
  out.pde.beta = beta;
  out.pde.reaction = reaction;
  out.pde.rhs = [u, du, d2u, beta, reaction](double x) {
    return -d2u(x) + beta * du(x) + reaction * u(x);
  };
  out.exact = std::move(u);
  out.exact_derivative = std::move(du);
  out.exact_h1_seminorm = seminorm;
  return out;
}

std::vector<double> with_boundary(const Vector& interior) {
  std::vector<double> values(static_cast<std::size_t>(interior.size()) + 2, 0.0);
  for (Eigen::Index i = 0; i < interior.size(); ++i) {
    values[static_cast<std::size_t>(i) + 1] = interior(i);
  }
  return values;
}

double h1_seminorm_error(const ScalarFunction& exact_derivative, const Mesh1D& mesh,
                         const Vector& interior) {
  require_dim(static_cast<std::size_t>(interior.size()), mesh.n_interior(), "nodal values");
  const GaussRule rule = gauss_legendre(3);
  const auto& x = mesh.nodes();
  const std::vector<double> values = with_boundary(interior);
  double sum = 0.0;
  for (std::size_t k = 0; k < mesh.n_cells(); ++k) {
    const double h = x[k + 1] - x[k];
    const double slope = (values[k + 1] - values[k]) / h;
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const double xq = x[k] + 0.5 * (rule.points[q] + 1.0) * h;
      const double diff = exact_derivative(xq) - slope;
      sum += 0.5 * h * rule.weights[q] * diff * diff;
    }
  }
  return std::sqrt(sum);
}

std::vector<LevelResult> convergence_study(const std::string& case_id,
                                           const std::vector<std::size_t>& levels, double beta,
                                           double reaction, double tol) {
  if (levels.empty()) throw Error(ErrorCode::InvalidArgument, "no levels given");
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i] <= levels[i - 1]) {
      throw Error(ErrorCode::InvalidArgument, "levels must be strictly increasing");
    }
  }
  const ManufacturedCase mc = manufactured(case_id, beta, reaction);
  std::vector<LevelResult> table;
  for (std::size_t n_cells : levels) {
    const Mesh1D mesh = Mesh1D::uniform(n_cells);
    const VariationalProblem problem = assemble(mc.pde, mesh);
    SolveOptions options;
    options.tol = tol;
    const SolveReport report = solve(problem, options);

    Vector interpolant(static_cast<Eigen::Index>(mesh.n_interior()));
    double nodal = 0.0;
    for (std::size_t i = 0; i < mesh.n_interior(); ++i) {
      const auto row = static_cast<Eigen::Index>(i);
      interpolant(row) = mc.exact(mesh.nodes()[i + 1]);
      nodal = std::max(nodal, std::abs(interpolant(row) - report.solution(row)));
    }

    LevelResult level;
    level.n_cells = n_cells;
    level.h = mesh.h_max();
    level.h1_error = h1_seminorm_error(mc.exact_derivative, mesh, report.solution);
    level.nodal_error = nodal;
    level.interpolant_error = h1_seminorm_error(mc.exact_derivative, mesh, interpolant);
    level.alpha = problem.constants.coercivity_alpha;
    level.continuity = problem.constants.continuity_C;
    level.contraction_k = report.contraction_k;
    level.iterations = report.iterations;
    if (!table.empty()) {
      const LevelResult& prev = table.back();
      level.rate = std::log(prev.h1_error / level.h1_error) / std::log(prev.h / level.h);
    }
    table.push_back(level);
  }
  return table;
}

void write_csv(std::ostream& out, const std::vector<LevelResult>& table) {
  const auto old_precision = out.precision(17);
  out << "n_cells,h,h1_error,rate\n";
  for (const LevelResult& row : table) {
    out << row.n_cells << ',' << row.h << ',' << row.h1_error << ',';
    if (row.rate) out << *row.rate;
    out << '\n';
  }
  out.precision(old_precision);
}

Matrix prolongation(const Mesh1D& coarse, const Mesh1D& fine) {
  const auto& xc = coarse.nodes();
  const auto& xf = fine.nodes();
  Matrix p = Matrix::Zero(static_cast<Eigen::Index>(fine.n_interior()),
                          static_cast<Eigen::Index>(coarse.n_interior()));
  std::size_t f = 0;
  for (std::size_t c = 0; c < xc.size(); ++c) {
    while (f < xf.size() && xf[f] < xc[c]) ++f;
    if (f == xf.size() || xf[f] != xc[c]) {
      throw Error(ErrorCode::MeshInvalid, "fine mesh does not contain every coarse node");
    }
  }
  for (std::size_t i = 1; i + 1 < xc.size(); ++i) {
    const double left = xc[i - 1];
    const double mid = xc[i];
    const double right = xc[i + 1];
    for (std::size_t j = 1; j + 1 < xf.size(); ++j) {
      const double y = xf[j];
      double value = 0.0;
      if (y > left && y <= mid) value = (y - left) / (mid - left);
      else if (y > mid && y < right) value = (right - y) / (right - mid);
      p(static_cast<Eigen::Index>(j - 1), static_cast<Eigen::Index>(i - 1)) = value;
    }
  }
  return p;
}

GalerkinReport nested_galerkin(const std::string& case_id, std::size_t n_cells,
                               std::size_t refinement, double beta, double reaction) {
  if (refinement < 1) throw Error(ErrorCode::InvalidArgument, "refinement must be >= 1");
  const ManufacturedCase mc = manufactured(case_id, beta, reaction);
  const Mesh1D coarse = Mesh1D::uniform(n_cells);
  const Mesh1D fine = Mesh1D::uniform(n_cells * refinement);
  const VariationalProblem problem = assemble(mc.pde, fine);
  const Subspace sub(problem.space, prolongation(coarse, fine));
  return galerkin_solve(problem, sub);
}

}  // namespace laxmilgram::fem1d
