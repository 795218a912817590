#ifndef MATASYM_IO_HPP
#define MATASYM_IO_HPP

#include <string>

#include "matasym/expansions.hpp"
#include "matasym/matrix.hpp"
#include "matasym/oracle.hpp"

namespace matasym {

// Matrix wire format: {"dim": n, "entries": [[re, im], ...]} row-major,
// one [re, im] pair per entry. Doubles are written with shortest
// round-trip precision, so write -> read is bitwise.
std::string matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const std::string& text);

ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& a);

// Families: {"kind": ..., "dim": ..., "radius": [lo, hi], "max_angle": ...,
// "target_np": ..., "seed": ...}.
std::string family_to_json(const MatrixFamily& family);
MatrixFamily family_from_json(const std::string& text);

// Watson/Laplace problems serialize their coefficient ladders, scalar
// parameters and a built-in evaluator id; arbitrary callables do not
// round-trip and are rebuilt from the id.
std::string watson_to_json(const WatsonInput& input);
WatsonInput watson_from_json(const std::string& text);

std::string laplace_to_json(const LaplaceProblem& problem);
LaplaceProblem laplace_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace matasym

#endif  // MATASYM_IO_HPP
