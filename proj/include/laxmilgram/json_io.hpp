#pragma once

#include "laxmilgram/fixed_point.hpp"
#include "laxmilgram/projection.hpp"
#include "laxmilgram/solver.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace laxmilgram::io {

using Json = nlohmann::json;

/// Serializes with every floating-point number printed as %.17g so that
/// doubles round-trip exactly. Key order is sorted, output is deterministic.
std::string dump(const Json& value, int indent = 2);
void write(std::ostream& out, const Json& value);

/// Parses, throwing Error(InvalidArgument) on malformed text.
Json parse(std::istream& in);
Json parse(const std::string& text);

Vector vector_from_json(const Json& value, const char* what);
/// Rows of equal length.
Matrix matrix_from_json(const Json& value, const char* what);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);

/// {"dim": n, "gram": [[...]]}
Json space_to_json(const HilbertSpace& space);
HilbertSpace space_from_json(const Json& value);

Json form_to_json(const LinearForm& form);
Json form_to_json(const BilinearForm& form);

/// {"gram", "a", "f", optional "alpha", optional "C"}.
VariationalProblem problem_from_json(const Json& value);
/// "basis": list of m spanning vectors, each with dim coefficients.
Subspace subspace_from_json(const HilbertSpace& space, const Json& value);

Json report_to_json(const FixedPointReport& report);
Json report_to_json(const SolveReport& report);
Json report_to_json(const GalerkinReport& report);
Json report_to_json(const MinSeqReport& report);

}  // namespace laxmilgram::io
