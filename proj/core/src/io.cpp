#include "matasym/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "matasym/errors.hpp"

namespace matasym {

namespace {

using nlohmann::json;

json complex_list(const std::vector<Complex>& values) {
  json out = json::array();
  for (const Complex& v : values) out.push_back({v.real(), v.imag()});
  return out;
}

std::vector<Complex> complex_list_from(const json& j) {
  std::vector<Complex> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) {
      raise(ErrorCode::invalid_argument, "complex entries must be [re, im] pairs");
    }
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

}  // namespace

std::string matrix_to_json(const ComplexMatrix& a) {
  json j;
  j["dim"] = a.rows();
  json entries = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      entries.push_back({a(i, k).real(), a(i, k).imag()});
    }
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

ComplexMatrix matrix_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorCode::invalid_argument, std::string("matrix JSON: ") + e.what());
  }
  if (!j.contains("dim") || !j.contains("entries")) {
    raise(ErrorCode::invalid_argument, "matrix JSON needs 'dim' and 'entries'");
  }
  const auto dim = j["dim"].get<Eigen::Index>();
  if (dim < 1) raise(ErrorCode::invalid_argument, "dim must be positive");
  const auto& entries = j["entries"];
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(dim * dim)) {
    raise(ErrorCode::invalid_argument, "entries must hold dim*dim [re, im] pairs");
  }
  ComplexMatrix a(dim, dim);
  std::size_t idx = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index k = 0; k < dim; ++k, ++idx) {
      const auto& pair = entries[idx];
      if (!pair.is_array() || pair.size() != 2) {
        raise(ErrorCode::invalid_argument, "entries must be [re, im] pairs");
      }
      a(i, k) = Complex(pair[0].get<double>(), pair[1].get<double>());
      if (!std::isfinite(a(i, k).real()) || !std::isfinite(a(i, k).imag())) {
        raise(ErrorCode::invalid_argument, "matrix entries must be finite");
      }
    }
  }
  return a;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::invalid_argument, "cannot write '" + path + "'");
  out << text;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  return matrix_from_json(read_text_file(path));
}

void write_matrix_file(const std::string& path, const ComplexMatrix& a) {
  write_text_file(path, matrix_to_json(a) + "\n");
}

std::string family_to_json(const MatrixFamily& family) {
  json j;
  switch (family.kind) {
    case FamilyKind::hermitian_pd: j["kind"] = "hermitian_pd"; break;
    case FamilyKind::normal_sectorial: j["kind"] = "normal_sectorial"; break;
    case FamilyKind::diagonalizable_conditioned:
      j["kind"] = "diagonalizable_conditioned";
      break;
  }
  j["dim"] = family.dim;
  j["radius"] = {family.radius_min, family.radius_max};
  j["max_angle"] = family.max_angle;
  j["target_np"] = family.target_np;
  j["seed"] = family.seed;
  return j.dump();
}

MatrixFamily family_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorCode::invalid_argument, std::string("family JSON: ") + e.what());
  }
  MatrixFamily family;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "hermitian_pd") {
    family.kind = FamilyKind::hermitian_pd;
  } else if (kind == "normal_sectorial") {
    family.kind = FamilyKind::normal_sectorial;
  } else if (kind == "diagonalizable_conditioned") {
    family.kind = FamilyKind::diagonalizable_conditioned;
  } else {
    raise(ErrorCode::invalid_argument, "unknown family kind '" + kind + "'");
  }
  family.dim = j.at("dim").get<int>();
  family.radius_min = j.at("radius").at(0).get<double>();
  family.radius_max = j.at("radius").at(1).get<double>();
  family.max_angle = j.value("max_angle", 0.0);
  family.target_np = j.value("target_np", 1.0);
  family.seed = j.value("seed", std::uint64_t{1});
  return family;
}

std::string watson_to_json(const WatsonInput& input) {
  json j;
  j["coefficients"] = complex_list(input.coefficients);
  j["scale"] = input.scale;
  j["radius"] = input.radius;
  j["growth_m0"] = input.growth_m0;
  j["growth_b"] = input.growth_b;
  j["evaluator"] = input.evaluator_id;
  return j.dump();
}

WatsonInput watson_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorCode::invalid_argument, std::string("watson JSON: ") + e.what());
  }
  const std::string id = j.value("evaluator", std::string{});
  WatsonInput input;
  if (!id.empty()) input = builtin_watson_input(id);
  if (j.contains("coefficients")) {
    input.coefficients = complex_list_from(j["coefficients"]);
  }
  input.scale = j.value("scale", input.scale);
  input.radius = j.value("radius", input.radius);
  input.growth_m0 = j.value("growth_m0", input.growth_m0);
  input.growth_b = j.value("growth_b", input.growth_b);
  return input;
}

std::string laplace_to_json(const LaplaceProblem& problem) {
  json j;
  j["h_coefficients"] = problem.h_coefficients;
  j["h_order"] = problem.h_order;
  j["h_at_a"] = problem.h_at_a;
  j["phi_coefficients"] = complex_list(problem.phi_coefficients);
  j["phi_order"] = problem.phi_order;
  j["interval"] = {problem.interval_a,
                   problem.interval_infinite()
                       ? std::numeric_limits<double>::infinity()
                       : problem.interval_b};
  j["evaluator"] = problem.evaluator_id;
  return j.dump();
}

LaplaceProblem laplace_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorCode::invalid_argument, std::string("laplace JSON: ") + e.what());
  }
  const std::string id = j.value("evaluator", std::string{});
  LaplaceProblem problem;
  if (!id.empty()) problem = builtin_laplace_problem(id);
  if (j.contains("h_coefficients")) {
    problem.h_coefficients = j["h_coefficients"].get<std::vector<double>>();
  }
  problem.h_order = j.value("h_order", problem.h_order);
  problem.h_at_a = j.value("h_at_a", problem.h_at_a);
  if (j.contains("phi_coefficients")) {
    problem.phi_coefficients = complex_list_from(j["phi_coefficients"]);
  }
  problem.phi_order = j.value("phi_order", problem.phi_order);
  if (j.contains("interval")) {
    problem.interval_a = j["interval"].at(0).get<double>();
    const double b = j["interval"].at(1).get<double>();
    problem.interval_b = std::isfinite(b) ? b : problem.interval_a - 1.0;
  }
  return problem;
}

}  // namespace matasym
