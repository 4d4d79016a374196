#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "natgame/analytic.hpp"
#include "natgame/domain.hpp"

namespace natgame {

/// Outcome/cross-loss description of the general game: event j yields q_j and
/// leaves losses r_ij from phenomenon i when i != j (r_jj = 0: event j fully
/// neutralizes phenomenon j).
template <class T>
class ScenarioT {
 public:
  ScenarioT(std::vector<std::string> names, std::vector<T> outcomes,
            std::vector<std::vector<T>> cross_losses)
      : names_(std::move(names)), q_(std::move(outcomes)), r_(std::move(cross_losses)) {
    const std::size_t n = q_.size();
    if (n == 0) throw DimensionError("scenario must have at least one program");
    if (names_.size() != n)
      throw ValidationError("programs", "expected " + std::to_string(n) + " names");
    for (std::size_t j = 0; j < n; ++j)
      if (q_[j] < T(0))
        throw ValidationError("q[" + std::to_string(j + 1) + "]",
                              "outcome must be non-negative");
    if (r_.size() != n) throw ValidationError("r", "cross-loss matrix must be square");
    for (std::size_t i = 0; i < n; ++i) {
      if (r_[i].size() != n)
        throw ValidationError("r[" + std::to_string(i + 1) + "]",
                              "cross-loss matrix must be square");
      for (std::size_t j = 0; j < n; ++j) {
        const std::string field =
            "r[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
        if (r_[i][j] < T(0)) throw ValidationError(field, "cross-loss must be non-negative");
        if (i == j && r_[i][j] != T(0))
          throw ValidationError(field, "diagonal cross-loss must be zero");
      }
    }
  }

  int size() const { return static_cast<int>(q_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<T>& outcomes() const { return q_; }
  const std::vector<std::vector<T>>& cross_losses() const { return r_; }

 private:
  std::vector<std::string> names_;
  std::vector<T> q_;
  std::vector<std::vector<T>> r_;
};

using Scenario = ScenarioT<double>;
using ScenarioQ = ScenarioT<Rational>;

/// One parsed input document: either a bare loss vector or a full scenario.
template <class T>
struct ScenarioDocumentT {
  std::vector<std::string> programs;
  std::string unit;  // empty when unspecified
  bool relaxed = false;
  std::optional<LossVectorT<T>> losses;
  std::optional<ScenarioT<T>> scenario;

  bool is_losses() const { return losses.has_value(); }
};

enum class ScenarioFormat { json, csv };

/// H[i][j] = q_j on the diagonal, r_ij + q_j elsewhere.
template <class T>
GameMatrixT<T> build_matrix(const ScenarioT<T>& s) {
  const int n = s.size();
  GameMatrixT<T> H = GameMatrixT<T>::filled(n, n, T(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      H.at(i, j) = s.outcomes()[static_cast<std::size_t>(j)];
      if (i != j) H.at(i, j) += s.cross_losses()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  return H;
}

template <class T>
struct DiagonalPatternT {
  std::vector<T> losses;
  bool sorted;  // strictly decreasing as-is; otherwise the sort wrapper applies
};

/// Recognizes the fast-path structure: zero diagonal and a constant positive
/// loss across each row (within 1e-12 relative in float mode). A 1x1 zero
/// matrix matches with an arbitrary unit loss, since a single-strategy game
/// carries no information about its loss scale.
template <class T>
std::optional<DiagonalPatternT<T>> detect_diagonal(const GameMatrixT<T>& H) {
  const int n = H.rows();
  if (H.cols() != n) return std::nullopt;

  if (n == 1) {
    if (!approx_zero(H.at(0, 0), T(1))) return std::nullopt;
    return DiagonalPatternT<T>{{T(1)}, true};
  }

  std::vector<T> losses;
  losses.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const T& reference = H.at(i, i == 0 ? 1 : 0);
    if (!(reference > T(0))) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      if (j == i) {
        if (!approx_zero(H.at(i, j), reference)) return std::nullopt;
      } else if (!approx_equal(H.at(i, j), reference)) {
        return std::nullopt;
      }
    }
    losses.push_back(reference);
  }

  bool sorted = true;
  for (int i = 1; i < n; ++i)
    if (!(losses[static_cast<std::size_t>(i)] < losses[static_cast<std::size_t>(i - 1)]))
      sorted = false;
  return DiagonalPatternT<T>{std::move(losses), sorted};
}

namespace detail {

// SAX builder that keeps every JSON number as its source text, so the exact
// mode can evaluate decimals without a detour through binary floating point.
// Numbers become {"$num": "<literal>"} marker objects.
class RawNumberJsonBuilder : public nlohmann::json_sax<nlohmann::json> {
 public:
  nlohmann::json root;
  std::size_t error_position = 0;
  std::string error_message;

  bool null() override { return emit(nullptr); }
  bool boolean(bool v) override { return emit(v); }
  bool number_integer(number_integer_t v) override { return emit_number(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return emit_number(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& raw) override { return emit_number(raw); }
  bool string(string_t& v) override { return emit(v); }
  bool binary(binary_t&) override { return false; }

  bool start_object(std::size_t) override {
    stack_.push_back(nlohmann::json::object());
    keys_.push_back(pending_key_);
    return true;
  }
  bool key(string_t& k) override {
    pending_key_ = k;
    return true;
  }
  bool end_object() override { return pop(); }
  bool start_array(std::size_t) override {
    stack_.push_back(nlohmann::json::array());
    keys_.push_back(pending_key_);
    return true;
  }
  bool end_array() override { return pop(); }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    error_position = position;
    error_message = ex.what();
    return false;
  }

  static bool is_number_marker(const nlohmann::json& j) {
    return j.is_object() && j.size() == 1 && j.contains("$num");
  }

 private:
  bool emit_number(const std::string& raw) {
    nlohmann::json marker = nlohmann::json::object();
    marker["$num"] = raw;
    return emit(std::move(marker));
  }

  bool emit(nlohmann::json value) {
    if (stack_.empty()) {
      root = std::move(value);
      return true;
    }
    attach(stack_.back(), std::move(value));
    return true;
  }

  void attach(nlohmann::json& container, nlohmann::json value) {
    if (container.is_array()) {
      container.push_back(std::move(value));
    } else {
      container[pending_key_] = std::move(value);
    }
  }

  bool pop() {
    nlohmann::json done = std::move(stack_.back());
    stack_.pop_back();
    pending_key_ = keys_.back();
    keys_.pop_back();
    if (stack_.empty()) {
      root = std::move(done);
    } else {
      attach(stack_.back(), std::move(done));
    }
    return true;
  }

  std::vector<nlohmann::json> stack_;
  std::vector<std::string> keys_;
  std::string pending_key_;
};

inline std::pair<int, int> line_column_of(const std::string& text, std::size_t byte_pos) {
  int line = 1;
  int col = 1;
  const std::size_t stop = byte_pos > text.size() ? text.size() : byte_pos;
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline nlohmann::json parse_json_raw(const std::string& text) {
  RawNumberJsonBuilder builder;
  if (!nlohmann::json::sax_parse(text, &builder)) {
    auto [line, col] = line_column_of(text, builder.error_position);
    throw ParseError(builder.error_message, line, col);
  }
  return std::move(builder.root);
}

template <class T>
T number_from(const nlohmann::json& j, const std::string& field) {
  std::string text;
  if (RawNumberJsonBuilder::is_number_marker(j)) {
    text = j.at("$num").get<std::string>();
  } else if (j.is_string()) {
    text = j.get<std::string>();
  } else {
    throw ValidationError(field, "expected a number or a fraction string");
  }
  try {
    return parse_number<T>(text);
  } catch (const ArgumentError& e) {
    throw ValidationError(field, e.what());
  }
}

inline std::string trim_copy(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

std::string json_escape(const std::string& s);

}  // namespace detail

template <class T>
ScenarioDocumentT<T> parse_scenario_json(const std::string& text, bool relaxed) {
  const nlohmann::json doc = detail::parse_json_raw(text);
  if (!doc.is_object() || detail::RawNumberJsonBuilder::is_number_marker(doc))
    throw ValidationError("document", "top level must be a JSON object");

  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    if (key != "programs" && key != "unit" && key != "relaxed" && key != "t" && key != "q" &&
        key != "r")
      throw ValidationError(key, "unknown key");
  }

  ScenarioDocumentT<T> out;
  out.relaxed = relaxed;
  if (doc.contains("relaxed")) {
    const auto& r = doc.at("relaxed");
    if (!r.is_boolean()) throw ValidationError("relaxed", "must be true or false");
    out.relaxed = out.relaxed || r.get<bool>();
  }
  if (doc.contains("unit")) {
    const auto& u = doc.at("unit");
    if (!u.is_string()) throw ValidationError("unit", "must be a string");
    out.unit = u.get<std::string>();
  }

  const bool has_t = doc.contains("t");
  const bool has_q = doc.contains("q");
  const bool has_r = doc.contains("r");
  if (has_t && (has_q || has_r))
    throw ValidationError("t", "document cannot combine t with q/r");
  if (!has_t && !(has_q && has_r))
    throw ValidationError("t", "document needs either t or both q and r");

  std::size_t n = 0;
  if (has_t) {
    const auto& tj = doc.at("t");
    if (!tj.is_array() || tj.empty()) throw ValidationError("t", "must be a non-empty array");
    std::vector<T> values;
    values.reserve(tj.size());
    for (std::size_t i = 0; i < tj.size(); ++i)
      values.push_back(detail::number_from<T>(tj[i], "t[" + std::to_string(i + 1) + "]"));
    n = values.size();
    out.losses.emplace(std::move(values), out.relaxed);
  } else {
    const auto& qj = doc.at("q");
    const auto& rj = doc.at("r");
    if (!qj.is_array() || qj.empty()) throw ValidationError("q", "must be a non-empty array");
    if (!rj.is_array()) throw ValidationError("r", "must be an array of arrays");
    n = qj.size();
    std::vector<T> q;
    q.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
      q.push_back(detail::number_from<T>(qj[j], "q[" + std::to_string(j + 1) + "]"));
    std::vector<std::vector<T>> r;
    r.reserve(rj.size());
    for (std::size_t i = 0; i < rj.size(); ++i) {
      const auto& row = rj[i];
      if (!row.is_array())
        throw ValidationError("r[" + std::to_string(i + 1) + "]", "must be an array");
      std::vector<T> out_row;
      out_row.reserve(row.size());
      for (std::size_t j = 0; j < row.size(); ++j)
        out_row.push_back(detail::number_from<T>(
            row[j], "r[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"));
      r.push_back(std::move(out_row));
    }

    std::vector<std::string> names;
    // names resolved below; scenario construction wants them up front
    if (doc.contains("programs")) {
      const auto& pj = doc.at("programs");
      if (!pj.is_array()) throw ValidationError("programs", "must be an array of strings");
      for (const auto& p : pj) {
        if (!p.is_string()) throw ValidationError("programs", "must be an array of strings");
        names.push_back(p.get<std::string>());
      }
    } else {
      for (std::size_t j = 0; j < n; ++j) names.push_back("program_" + std::to_string(j + 1));
    }
    out.programs = names;
    out.scenario.emplace(std::move(names), std::move(q), std::move(r));
    return out;
  }

  if (doc.contains("programs")) {
    const auto& pj = doc.at("programs");
    if (!pj.is_array()) throw ValidationError("programs", "must be an array of strings");
    for (const auto& p : pj) {
      if (!p.is_string()) throw ValidationError("programs", "must be an array of strings");
      out.programs.push_back(p.get<std::string>());
    }
    if (out.programs.size() != n)
      throw ValidationError("programs", "expected " + std::to_string(n) + " names");
  } else {
    for (std::size_t j = 0; j < n; ++j) out.programs.push_back("program_" + std::to_string(j + 1));
  }
  return out;
}

/// CSV carries only the bare-loss shape: a "name,t" header then one
/// label/value row per program.
template <class T>
ScenarioDocumentT<T> parse_scenario_csv(const std::string& text, bool relaxed) {
  ScenarioDocumentT<T> out;
  out.relaxed = relaxed;

  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);

  int line_no = 0;
  bool header_seen = false;
  std::vector<T> values;
  for (const std::string& raw : lines) {
    ++line_no;
    const std::string line = detail::trim_copy(raw);
    if (line.empty()) continue;
    if (!header_seen) {
      std::string squashed;
      for (char c : line)
        if (c != ' ' && c != '\t') squashed.push_back(c);
      if (squashed != "name,t")
        throw ParseError("expected header 'name,t'", line_no, 1);
      header_seen = true;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw ParseError("expected 'name,value'", line_no, static_cast<int>(line.size()) + 1);
    if (line.find(',', comma + 1) != std::string::npos)
      throw ParseError("expected exactly one comma", line_no,
                       static_cast<int>(line.find(',', comma + 1)) + 1);
    const std::string name = detail::trim_copy(line.substr(0, comma));
    const std::string number = detail::trim_copy(line.substr(comma + 1));
    if (name.empty()) throw ParseError("empty program name", line_no, 1);
    try {
      values.push_back(parse_number<T>(number));
    } catch (const ArgumentError& e) {
      throw ParseError(e.what(), line_no, static_cast<int>(comma) + 2);
    }
    out.programs.push_back(name);
  }
  if (!header_seen) throw ParseError("missing header 'name,t'", 1, 1);
  if (values.empty()) throw ParseError("no data rows", line_no == 0 ? 1 : line_no, 1);

  out.losses.emplace(std::move(values), out.relaxed);
  return out;
}

template <class T>
ScenarioDocumentT<T> parse_scenario(const std::string& text, ScenarioFormat format,
                                    bool relaxed = false) {
  return format == ScenarioFormat::json ? parse_scenario_json<T>(text, relaxed)
                                        : parse_scenario_csv<T>(text, relaxed);
}

/// Matrix document for certification: either an explicit "H" array of rows,
/// a bare "t" (interpreted literally as a diagonal game, order-free), or a
/// full q/r scenario.
template <class T>
struct MatrixDocumentT {
  GameMatrixT<T> matrix;
  std::vector<std::string> names;
  std::string unit;
};

template <class T>
MatrixDocumentT<T> parse_matrix(const std::string& text) {
  const nlohmann::json doc = detail::parse_json_raw(text);
  if (!doc.is_object() || detail::RawNumberJsonBuilder::is_number_marker(doc))
    throw ValidationError("document", "top level must be a JSON object");

  if (doc.contains("H")) {
    for (const auto& item : doc.items()) {
      const std::string& key = item.key();
      if (key != "H" && key != "programs" && key != "unit")
        throw ValidationError(key, "unknown key");
    }
    const auto& hj = doc.at("H");
    if (!hj.is_array() || hj.empty()) throw ValidationError("H", "must be a non-empty array of rows");
    std::vector<std::vector<T>> rows;
    rows.reserve(hj.size());
    for (std::size_t i = 0; i < hj.size(); ++i) {
      const auto& row = hj[i];
      if (!row.is_array())
        throw ValidationError("H[" + std::to_string(i + 1) + "]", "must be an array");
      std::vector<T> out_row;
      out_row.reserve(row.size());
      for (std::size_t j = 0; j < row.size(); ++j)
        out_row.push_back(detail::number_from<T>(
            row[j], "H[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"));
      rows.push_back(std::move(out_row));
    }
    MatrixDocumentT<T> out{GameMatrixT<T>(rows), {}, ""};
    if (doc.contains("unit")) {
      if (!doc.at("unit").is_string()) throw ValidationError("unit", "must be a string");
      out.unit = doc.at("unit").get<std::string>();
    }
    const int n = out.matrix.cols();
    if (doc.contains("programs")) {
      const auto& pj = doc.at("programs");
      if (!pj.is_array()) throw ValidationError("programs", "must be an array of strings");
      for (const auto& p : pj) {
        if (!p.is_string()) throw ValidationError("programs", "must be an array of strings");
        out.names.push_back(p.get<std::string>());
      }
      if (static_cast<int>(out.names.size()) != n)
        throw ValidationError("programs", "expected " + std::to_string(n) + " names");
    } else {
      for (int j = 0; j < n; ++j) out.names.push_back("program_" + std::to_string(j + 1));
    }
    return out;
  }

  if (doc.contains("t")) {
    // matrix shorthand: losses are taken literally, no ordering requirement
    const auto& tj = doc.at("t");
    if (!tj.is_array() || tj.empty()) throw ValidationError("t", "must be a non-empty array");
    std::vector<T> losses;
    losses.reserve(tj.size());
    for (std::size_t i = 0; i < tj.size(); ++i) {
      const std::string field = "t[" + std::to_string(i + 1) + "]";
      T v = detail::number_from<T>(tj[i], field);
      if (!(v > T(0))) throw ValidationError(field, "loss must be positive");
      losses.push_back(std::move(v));
    }
    const int n = static_cast<int>(losses.size());
    GameMatrixT<T> H = GameMatrixT<T>::filled(n, n, T(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) H.at(i, j) = losses[static_cast<std::size_t>(i)];
    std::vector<std::string> names;
    std::string unit;
    if (doc.contains("unit") && doc.at("unit").is_string()) unit = doc.at("unit").get<std::string>();
    if (doc.contains("programs") && doc.at("programs").is_array()) {
      for (const auto& p : doc.at("programs"))
        if (p.is_string()) names.push_back(p.get<std::string>());
    }
    if (static_cast<int>(names.size()) != n) {
      names.clear();
      for (int j = 0; j < n; ++j) names.push_back("program_" + std::to_string(j + 1));
    }
    return MatrixDocumentT<T>{std::move(H), std::move(names), std::move(unit)};
  }

  ScenarioDocumentT<T> scenario_doc = parse_scenario_json<T>(text, true);
  return MatrixDocumentT<T>{build_matrix(*scenario_doc.scenario), scenario_doc.programs,
                            scenario_doc.unit};
}

/// {"x": [...], "y": [...], "value": v} — a solution offered for checking.
template <class T>
struct ProposedSolutionT {
  MixedStrategyT<T> x;
  MixedStrategyT<T> y;
  T value;
};

template <class T>
ProposedSolutionT<T> parse_solution(const std::string& text) {
  const nlohmann::json doc = detail::parse_json_raw(text);
  if (!doc.is_object() || detail::RawNumberJsonBuilder::is_number_marker(doc))
    throw ValidationError("document", "top level must be a JSON object");
  for (const char* key : {"x", "y", "value"})
    if (!doc.contains(key)) throw ValidationError(key, "missing required key");

  const auto strategy = [&](const char* key) {
    const auto& arr = doc.at(key);
    if (!arr.is_array() || arr.empty())
      throw ValidationError(key, "must be a non-empty array");
    std::vector<T> p;
    p.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
      p.push_back(detail::number_from<T>(
          arr[i], std::string(key) + "[" + std::to_string(i + 1) + "]"));
    return MixedStrategyT<T>(std::move(p));
  };

  MixedStrategyT<T> x = strategy("x");
  MixedStrategyT<T> y = strategy("y");
  T value = detail::number_from<T>(doc.at("value"), "value");
  return ProposedSolutionT<T>{std::move(x), std::move(y), std::move(value)};
}

namespace detail {

template <class T>
std::string scenario_number(const T& v) {
  if constexpr (scalar_traits<T>::exact) {
    return "\"" + format_rational(v) + "\"";
  } else {
    return format_roundtrip(v);
  }
}

template <class T>
std::string report_number(const T& v) {
  if constexpr (scalar_traits<T>::exact) {
    return "\"" + format_rational(v) + "\"";
  } else {
    return format_significant(v, 12);
  }
}

template <class T, class Fmt>
std::string number_array(const std::vector<T>& values, Fmt&& fmt) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += fmt(values[i]);
  }
  out += "]";
  return out;
}

inline std::string string_array(const std::vector<std::string>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + json_escape(values[i]) + "\"";
  }
  out += "]";
  return out;
}

}  // namespace detail

/// Deterministic scenario serialization; parse_scenario of the result
/// reproduces the document exactly.
template <class T>
std::string emit_scenario(const ScenarioDocumentT<T>& doc) {
  std::string out = "{\n";
  out += "  \"programs\": " + detail::string_array(doc.programs);
  if (!doc.unit.empty()) out += ",\n  \"unit\": \"" + detail::json_escape(doc.unit) + "\"";
  if (doc.relaxed) out += ",\n  \"relaxed\": true";
  if (doc.is_losses()) {
    out += ",\n  \"t\": " +
           detail::number_array(doc.losses->values(), detail::scenario_number<T>);
  } else {
    out += ",\n  \"q\": " +
           detail::number_array(doc.scenario->outcomes(), detail::scenario_number<T>);
    out += ",\n  \"r\": [";
    const auto& r = doc.scenario->cross_losses();
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ",";
      out += "\n    " + detail::number_array(r[i], detail::scenario_number<T>);
    }
    out += "\n  ]";
  }
  out += "\n}\n";
  return out;
}

/// The user-facing result document: allocation shares, the adversarial mix,
/// the value, and the full certificate. Key order is fixed and floats carry
/// 12 significant digits, so output is byte-deterministic.
template <class T>
std::string emit_report(const GameSolutionT<T>& sol, const SaddleCertificateT<T>& cert,
                        const std::vector<std::string>& names, const std::string& unit) {
  if (static_cast<int>(names.size()) != sol.y.size())
    throw DimensionError("name count does not match strategy dimension");

  const auto num = [](const T& v) { return detail::report_number<T>(v); };

  std::vector<T> row_slack;
  row_slack.reserve(cert.row_payoffs.size());
  for (const T& p : cert.row_payoffs) row_slack.push_back(T(cert.value - p));
  std::vector<T> col_slack;
  col_slack.reserve(cert.col_payoffs.size());
  for (const T& p : cert.col_payoffs) col_slack.push_back(T(p - cert.value));

  std::string out = "{\n";
  out += "  \"method\": \"" + std::string(method_name(sol.method)) + "\",\n";
  out += "  \"mode\": \"" + std::string(scalar_traits<T>::mode_name()) + "\",\n";
  out += "  \"support\": " + std::to_string(sol.support) + ",\n";
  out += "  \"value\": " + num(sol.value) + ",\n";
  out += "  \"unit\": \"" + detail::json_escape(unit) + "\",\n";
  out += "  \"programs\": " + detail::string_array(names) + ",\n";
  out += "  \"allocation\": " + detail::number_array(sol.y.probabilities(), num) + ",\n";
  out += "  \"worst_case_mix\": " + detail::number_array(sol.x.probabilities(), num) + ",\n";
  out += "  \"certificate\": {\n";
  out += "    \"tolerance\": " + num(cert.tolerance) + ",\n";
  out += "    \"valid\": " + std::string(cert.valid ? "true" : "false") + ",\n";
  out += "    \"mixed_payoff\": " + num(cert.mixed_payoff) + ",\n";
  out += "    \"row_payoffs\": " + detail::number_array(cert.row_payoffs, num) + ",\n";
  out += "    \"col_payoffs\": " + detail::number_array(cert.col_payoffs, num) + ",\n";
  out += "    \"row_slack\": " + detail::number_array(row_slack, num) + ",\n";
  out += "    \"col_slack\": " + detail::number_array(col_slack, num) + ",\n";
  out += "    \"max_row_violation\": " + num(cert.max_row_violation) + ",\n";
  out += "    \"max_col_violation\": " + num(cert.max_col_violation) + "\n";
  out += "  }\n";
  out += "}\n";
  return out;
}

/// Standalone certificate document for the certify command.
template <class T>
std::string emit_certificate(const SaddleCertificateT<T>& cert) {
  const auto num = [](const T& v) { return detail::report_number<T>(v); };
  std::string out = "{\n";
  out += "  \"mode\": \"" + std::string(scalar_traits<T>::mode_name()) + "\",\n";
  out += "  \"valid\": " + std::string(cert.valid ? "true" : "false") + ",\n";
  out += "  \"value\": " + num(cert.value) + ",\n";
  out += "  \"tolerance\": " + num(cert.tolerance) + ",\n";
  out += "  \"mixed_payoff\": " + num(cert.mixed_payoff) + ",\n";
  out += "  \"row_payoffs\": " + detail::number_array(cert.row_payoffs, num) + ",\n";
  out += "  \"col_payoffs\": " + detail::number_array(cert.col_payoffs, num) + ",\n";
  out += "  \"max_row_violation\": " + num(cert.max_row_violation) + ",\n";
  out += "  \"max_col_violation\": " + num(cert.max_col_violation) + "\n";
  out += "}\n";
  return out;
}

}  // namespace natgame
