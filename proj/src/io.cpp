#include "troprank/io.hpp"

#include <cctype>
#include <cmath>

#include "troprank/errors.hpp"

namespace troprank::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Matrix parse_csv(std::string_view text, Semifield field) {
  std::vector<std::vector<Scalar>> rows;
  std::size_t line_no = 0;
  std::size_t first_line = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<Scalar> row;
    std::size_t col = 0;
    while (true) {
      ++col;
      const auto comma = line.find(',');
      const std::string_view cell = trim(line.substr(0, comma));
      try {
        row.push_back(Scalar::parse(field, cell));
      } catch (const std::exception& e) {
        throw ParseError("column " + std::to_string(col) + ": " + e.what(),
                         line_no);
      }
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("ragged row: " + std::to_string(row.size()) +
                           " entries, expected " +
                           std::to_string(rows.front().size()) +
                           " (as on line " + std::to_string(first_line) + ")",
                       line_no);
    }
    if (rows.empty()) first_line = line_no;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  return Matrix::from_rows(field, std::move(rows));
}

std::string index_label(const std::vector<std::string>& labels,
                        std::size_t i) {
  return i < labels.size() ? labels[i] : "alt" + std::to_string(i + 1);
}

}  // namespace

Matrix parse_matrix(std::string_view text, Semifield field) {
  const std::string_view body = trim(text);
  if (!body.empty() && (body.front() == '{' || body.front() == '[')) {
    Json j;
    try {
      j = Json::parse(body);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(j, field);
  }
  return parse_csv(text, field);
}

std::string matrix_to_csv(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

Json scalar_to_json(const Scalar& s) {
  if (s.field().exact()) return s.to_string();
  const double v = s.to_double();
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  return v;
}

Scalar scalar_from_json(const Json& j, Semifield field) {
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  if (j.is_number_integer()) {
    return Scalar::from_int(field, j.get<long>());
  }
  if (j.is_number()) {
    if (field.exact()) {
      // Decimal text preserves the written value rather than the binary one.
      return Scalar::parse(field, j.dump());
    }
    return Scalar::from_double(field, j.get<double>());
  }
  throw ParseError("scalar must be a string or number, got " + j.dump());
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"tag", m.field().name()},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j, Semifield field) {
  const Json* entries = &j;
  if (j.is_object()) {
    if (j.contains("tag") &&
        parse_semifield_kind(j.at("tag").get<std::string>()) != field.kind) {
      throw UsageError("matrix tag '" + j.at("tag").get<std::string>() +
                       "' does not match scale " + field.name());
    }
    if (!j.contains("entries")) throw ParseError("matrix JSON needs \"entries\"");
    entries = &j.at("entries");
  }
  if (!entries->is_array() || entries->empty()) {
    throw ParseError("matrix entries must be a non-empty array of rows");
  }
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < entries->size(); ++i) {
    const Json& r = (*entries)[i];
    if (!r.is_array()) throw ParseError("row " + std::to_string(i + 1) + " is not an array");
    auto& row = rows.emplace_back();
    for (const auto& e : r) row.push_back(scalar_from_json(e, field));
    if (row.size() != rows.front().size()) {
      throw ParseError("ragged row " + std::to_string(i + 1) + ": " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(rows.front().size()));
    }
  }
  Matrix m = Matrix::from_rows(field, std::move(rows));
  if (j.is_object()) {
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows()) {
      throw ParseError("\"rows\" disagrees with the number of entry rows");
    }
    if (j.contains("cols") && j.at("cols").get<std::size_t>() != m.cols()) {
      throw ParseError("\"cols\" disagrees with the row length");
    }
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& e : v.entries()) out.push_back(scalar_to_json(e));
  return out;
}

RatingProblem problem_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("problem must be a JSON object");
  RatingProblem p;
  try {
    const SemifieldKind kind = parse_semifield_kind(j.value("scale", "max-times"));
    const Backend backend = parse_backend(j.value("backend", "exact"));
    p.field = Semifield{kind, backend};
    if (j.contains("labels") && !j.at("labels").is_null()) {
      p.labels = j.at("labels").get<std::vector<std::string>>();
    }
    if (!j.contains("matrices") || !j.at("matrices").is_array()) {
      throw ParseError("problem needs a \"matrices\" array");
    }
    for (const auto& m : j.at("matrices")) {
      p.matrices.push_back(matrix_from_json(m, p.field));
    }
    if (j.contains("constraints") && !j.at("constraints").is_null()) {
      p.constraints = matrix_from_json(j.at("constraints"), p.field);
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed problem JSON: ") + e.what());
  }
  p.validate();
  return p;
}

Json problem_to_json(const RatingProblem& p) {
  Json matrices = Json::array();
  for (const auto& m : p.matrices) matrices.push_back(matrix_to_json(m));
  return {{"scale", p.field.name()},
          {"backend", p.field.backend_name()},
          {"labels", effective_labels(p)},
          {"matrices", std::move(matrices)},
          {"constraints", p.constraints ? matrix_to_json(*p.constraints) : Json(nullptr)}};
}

std::vector<std::string> effective_labels(const RatingProblem& p) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < p.order(); ++i) out.push_back(index_label(p.labels, i));
  return out;
}

Json consistency_to_json(const ConsistencyReport& r) {
  return {{"is_reciprocal", r.is_reciprocal},
          {"max_reciprocity_defect", scalar_to_json(r.max_reciprocity_defect)},
          {"worst_pair", {r.worst_pair.first + 1, r.worst_pair.second + 1}},
          {"is_consistent", r.is_consistent},
          {"max_transitivity_defect", scalar_to_json(r.max_transitivity_defect)},
          {"worst_triple",
           {r.worst_triple[0] + 1, r.worst_triple[1] + 1, r.worst_triple[2] + 1}}};
}

Json result_to_json(const RatingResult& r, const RatingProblem& p) {
  const auto labels = effective_labels(p);
  Json candidates = Json::array();
  for (const auto& c : r.candidates) {
    Json ranking = Json::array();
    for (const auto& group : c.ranking) {
      Json g = Json::array();
      for (auto idx : group) g.push_back(index_label(labels, idx));
      ranking.push_back(std::move(g));
    }
    Json columns = Json::array();
    for (auto col : c.columns) columns.push_back(col + 1);
    candidates.push_back(
        {{"column", vector_to_json(c.column)},
         {"scores", vector_to_json(c.scores)},
         {"uniform", c.uniform},
         {"generator_columns", std::move(columns)},
         {"sum_to_one", c.sum_to_one ? vector_to_json(*c.sum_to_one) : Json(nullptr)},
         {"sum_to_one_exact", c.sum_to_one_exact},
         {"ranking", std::move(ranking)}});
  }
  Json diagnostics = Json::array();
  for (const auto& d : r.diagnostics) diagnostics.push_back(consistency_to_json(d));
  Json terms = Json::array();
  for (const auto& t : r.solution_space.term_maxima) terms.push_back(scalar_to_json(t));
  return {
      {"scale", p.field.name()},
      {"backend", p.field.backend_name()},
      {"mode", to_string(r.mode)},
      {"minimum", scalar_to_json(r.minimum)},
      {"labels", labels},
      {"candidates", std::move(candidates)},
      {"consistency", std::move(diagnostics)},
      {"warnings", r.warnings},
      {"combined", matrix_to_json(r.combined)},
      {"solution_space",
       {{"optimum", scalar_to_json(r.solution_space.optimum)},
        {"kind", r.solution_space.kind == ObjectiveKind::Constrained
                     ? "constrained"
                     : "unconstrained"},
        {"generator", matrix_to_json(r.solution_space.generator)},
        {"term_maxima", std::move(terms)}}},
  };
}

std::string format_ranking(const Ranking& ranking,
                           const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t g = 0; g < ranking.size(); ++g) {
    if (g) out += " > ";
    for (std::size_t t = 0; t < ranking[g].size(); ++t) {
      if (t) out += " = ";
      out += index_label(labels, ranking[g][t]);
    }
  }
  return out;
}

}  // namespace troprank::io
