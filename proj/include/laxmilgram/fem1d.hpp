#pragma once

#include "laxmilgram/solver.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace laxmilgram::fem1d {

using ScalarFunction = std::function<double(double)>;

/// A partition 0 = x_0 < x_1 < ... < x_n = 1 of the unit interval.
class Mesh1D {
public:
  /// Throws MeshInvalid unless nodes are strictly increasing from 0 to 1.
  explicit Mesh1D(std::vector<double> nodes);
  static Mesh1D uniform(std::size_t n_cells);

  [[nodiscard]] const std::vector<double>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::size_t n_cells() const noexcept { return nodes_.size() - 1; }
  [[nodiscard]] std::size_t n_interior() const noexcept { return nodes_.size() - 2; }
  [[nodiscard]] double h_max() const noexcept;

private:
  std::vector<double> nodes_;
};

/// -u'' + beta u' + reaction u = rhs on (0, 1), u(0) = u(1) = 0. Weak form
/// a(u, v) = int u'v' + beta int u'v + reaction int uv.
struct Pde1D {
  double beta = 0.0;
  double reaction = 0.0;
  ScalarFunction rhs;
};

/// Gauss-Legendre rule on [-1, 1]; 1 to 4 points.
struct GaussRule {
  std::vector<double> points;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n_points);

/// int rhs * phi_i over the mesh, phi_i the hat of interior node i, with an
/// n-point Gauss rule per cell.
Vector load_vector(const ScalarFunction& rhs, const Mesh1D& mesh, int gauss_points = 2);

struct Assembly {
  /// int phi_i' phi_j', the Gram matrix of the H^1_0 inner product.
  Matrix stiffness;
  /// int phi_i phi_j.
  Matrix mass;
  /// int phi_i' phi_j, so that beta int u'v has matrix beta * advection.
  Matrix advection;
  Vector load;
};

/// Exact element integrals for the matrices, 2-point Gauss for the load.
Assembly assemble_matrices(const Pde1D& pde, const Mesh1D& mesh);

/**
 * The weak problem on interior-node coefficients: space with Gram = stiffness,
 * bilinear matrix stiffness + beta advection + reaction mass. For beta =
 * reaction = 0 the bilinear matrix is the Gram matrix itself.
 */
VariationalProblem assemble(const Pde1D& pde, const Mesh1D& mesh);

struct ManufacturedCase {
  std::string id;
  Pde1D pde;
  ScalarFunction exact;
  ScalarFunction exact_derivative;
  /// |u|_{H^1} = sqrt(int u'^2).
  double exact_h1_seminorm = 0.0;
};

/// Known cases: "poisson-parabola" (u = x(1-x)/2) and "poisson-sine"
/// (u = sin(pi x)). The right-hand side is -u'' + beta u' + reaction u, so
/// both carry over to advection-diffusion-reaction. Throws UnknownCase.
ManufacturedCase manufactured(const std::string& case_id, double beta = 0.0,
                              double reaction = 0.0);

std::vector<std::string> manufactured_case_ids();

/// Nodal values of a P1 function: zero at both ends, `interior` in between.
std::vector<double> with_boundary(const Vector& interior);

/// |u - u_h|_{H^1} with a 3-point Gauss rule per cell.
double h1_seminorm_error(const ScalarFunction& exact_derivative, const Mesh1D& mesh,
                         const Vector& interior);

struct LevelResult {
  std::size_t n_cells = 0;
  double h = 0.0;
  double h1_error = 0.0;
  /// log2(e_coarse / e_fine); empty on the first level.
  std::optional<double> rate;
  /// max |u(x_i) - u_h(x_i)| over the nodes.
  double nodal_error = 0.0;
  /// |u - I_h u|_{H^1} for the nodal interpolant I_h u.
  double interpolant_error = 0.0;
  double alpha = 0.0;
  double continuity = 0.0;
  double contraction_k = 0.0;
  std::size_t iterations = 0;
};

/// Uniform-mesh study, one row per level, each solved with the iterative
/// Lax-Milgram solver. Levels must be strictly increasing.
std::vector<LevelResult> convergence_study(const std::string& case_id,
                                           const std::vector<std::size_t>& levels,
                                           double beta = 0.0, double reaction = 0.0,
                                           double tol = 1e-12);

/// CSV with header n_cells,h,h1_error,rate; rate blank on the first row.
void write_csv(std::ostream& out, const std::vector<LevelResult>& table);

/// Coefficients, on the fine interior nodes, of each coarse interior hat.
/// The fine mesh must contain every coarse node.
Matrix prolongation(const Mesh1D& coarse, const Mesh1D& fine);

/**
 * Galerkin solve of the problem posed on a `refinement`-times finer uniform
 * mesh, restricted to the coarse P1 space embedded by prolongation. The
 * report's reference solution is the fine-mesh solution.
 */
GalerkinReport nested_galerkin(const std::string& case_id, std::size_t n_cells,
                               std::size_t refinement = 4, double beta = 0.0,
                               double reaction = 0.0);

}  // namespace laxmilgram::fem1d
