#include "laxmilgram/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace laxmilgram::io {

namespace {

void dump_number(std::ostream& out, double x) {
  if (!std::isfinite(x)) {
    out << "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out << buf;
}

void dump_value(std::ostream& out, const Json& v, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out << ',';
        first = false;
        newline(depth + 1);
        out << Json(it.key()).dump() << (indent < 0 ? ":" : ": ");
        dump_value(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out << '}';
      return;
    }
    case Json::value_t::array: {
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(v.begin(), v.end(), [](const Json& e) {
        return e.is_structured();
      });
      out << '[';
      bool first = true;
      for (const Json& e : v) {
        if (!first) out << (flat ? ", " : ",");
        first = false;
        if (!flat) newline(depth + 1);
        dump_value(out, e, indent, depth + 1);
      }
      if (!flat && !v.empty()) newline(depth);
      out << ']';
      return;
    }
    case Json::value_t::number_float:
      dump_number(out, v.get<double>());
      return;
    default:
      out << v.dump();
  }
}

[[noreturn]] void bad(const std::string& message) {
  throw Error(ErrorCode::InvalidArgument, message);
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad(std::string("missing field '") + key + "'");
  return obj.at(key);
}

}  // namespace

std::string dump(const Json& value, int indent) {
  std::ostringstream os;
  dump_value(os, value, indent, 0);
  return os.str();
}

void write(std::ostream& out, const Json& value) { out << dump(value) << '\n'; }

Json parse(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse(text);
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Vector vector_from_json(const Json& value, const char* what) {
  if (!value.is_array()) bad(std::string(what) + " must be an array of numbers");
  Vector v(static_cast<Eigen::Index>(value.size()));
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number()) bad(std::string(what) + " must be an array of numbers");
    v(static_cast<Eigen::Index>(i)) = value[i].get<double>();
  }
  return v;
}

Matrix matrix_from_json(const Json& value, const char* what) {
  if (!value.is_array() || value.empty()) bad(std::string(what) + " must be a nonempty array of rows");
  const std::size_t rows = value.size();
  if (!value[0].is_array()) bad(std::string(what) + " must be an array of rows");
  const std::size_t cols = value[0].size();
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const Vector row = vector_from_json(value[i], what);
    if (static_cast<std::size_t>(row.size()) != cols) bad(std::string(what) + " has ragged rows");
    m.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return m;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(Vector(m.row(i).transpose())));
  return out;
}

Json space_to_json(const HilbertSpace& space) {
  return {{"dim", space.dim()}, {"gram", to_json(space.gram())}};
}

HilbertSpace space_from_json(const Json& value) {
  HilbertSpace space(matrix_from_json(field(value, "gram"), "gram"));
  if (value.contains("dim") && value.at("dim") != space.dim()) bad("'dim' disagrees with 'gram'");
  return space;
}

Json form_to_json(const LinearForm& form) { return {{"covector", to_json(form.covector)}}; }
Json form_to_json(const BilinearForm& form) { return {{"matrix", to_json(form.matrix)}}; }

VariationalProblem problem_from_json(const Json& value) {
  HilbertSpace space = space_from_json(value);
  BilinearForm a{matrix_from_json(field(value, "a"), "a")};
  LinearForm f{vector_from_json(field(value, "f"), "f")};
  std::optional<double> alpha;
  std::optional<double> continuity;
  if (value.contains("alpha") && !value.at("alpha").is_null()) {
    if (!value.at("alpha").is_number()) bad("'alpha' must be a number");
    alpha = value.at("alpha").get<double>();
  }
  if (value.contains("C") && !value.at("C").is_null()) {
    if (!value.at("C").is_number()) bad("'C' must be a number");
    continuity = value.at("C").get<double>();
  }
  return make_problem(std::move(space), std::move(a), std::move(f), alpha, continuity);
}

Subspace subspace_from_json(const HilbertSpace& space, const Json& value) {
  const Matrix rows = matrix_from_json(field(value, "basis"), "basis");
  return Subspace(space, rows.transpose());
}

Json report_to_json(const FixedPointReport& report) {
  Json steps = Json::array();
  for (double s : report.step_norms) steps.push_back(s);
  return {{"fixed_point", to_json(report.fixed_point)},
          {"iterations", report.iterations},
          {"step_norms", std::move(steps)},
          {"a_priori_bound_at_stop", report.a_priori_bound_at_stop},
          {"residual", report.residual}};
}

Json report_to_json(const SolveReport& report) {
  return {{"solution", to_json(report.solution)},
          {"rho", report.rho},
          {"contraction_k", report.contraction_k},
          {"iterations", report.iterations},
          {"estimate_lhs", report.estimate_lhs},
          {"estimate_rhs", report.estimate_rhs},
          {"residual", report.residual}};
}

Json report_to_json(const GalerkinReport& report) {
  Json checks = Json::array();
  for (const CeaCheck& c : report.cea_checks) {
    checks.push_back({{"v_h", to_json(c.v_h)}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  return {{"u_h", to_json(report.u_h)},
          {"u", to_json(report.u)},
          {"subspace_basis", to_json(Matrix(report.subspace.basis().transpose()))},
          {"orthogonality_residual", report.orthogonality_residual},
          {"cea_constant", report.cea_constant},
          {"cea_checks", std::move(checks)},
          {"cea_holds", report.cea_holds()},
          {"iterations", report.reduced.iterations}};
}

Json report_to_json(const MinSeqReport& report) {
  Json distances = Json::array();
  for (double d : report.distances) distances.push_back(d);
  return {{"limit", to_json(report.limit)},
          {"delta", report.delta},
          {"steps", report.iterates.size() - 1},
          {"distances", std::move(distances)}};
}

}  // namespace laxmilgram::io
