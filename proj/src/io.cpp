#include "sqgt/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sqgt {

SchemeFilePair scheme_paths(const std::string& prefix) {
  return {prefix + ".matrix", prefix + ".json"};
}

void save_matrix(const BinaryMatrix& m, const std::string& path) {
  if (m.rows() < 1) throw ParameterError("save_matrix: matrix has no rows");
  std::ofstream out(path);
  if (!out) throw ParseError("save_matrix: cannot open " + path, 0);
  out << m.rows() << ' ' << m.cols() << '\n';
  for (long long r = 0; r < m.rows(); ++r) {
    for (long long c = 0; c < m.cols(); ++c) out.put(m.at(r, c) ? '1' : '0');
    out.put('\n');
  }
  if (!out) throw ParseError("save_matrix: write failed for " + path, 0);
}

BinaryMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("load_matrix: cannot open " + path, 0);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("load_matrix: missing header", 1);
  long long rows = 0, cols = 0;
  {
    std::istringstream hdr(line);
    std::string extra;
    if (!(hdr >> rows >> cols) || (hdr >> extra) || rows < 1 || cols < 1)
      throw ParseError("load_matrix: malformed header '" + line + "'", 1);
  }
  BinaryMatrix m(rows, cols);
  for (long long r = 0; r < rows; ++r) {
    const int lineno = static_cast<int>(r) + 2;
    if (!std::getline(in, line)) throw ParseError("load_matrix: unexpected end of file", lineno);
    if (static_cast<long long>(line.size()) != cols)
      throw ParseError("load_matrix: row length " + std::to_string(line.size()) +
                           " != cols " + std::to_string(cols),
                       lineno);
    for (long long c = 0; c < cols; ++c) {
      char ch = line[static_cast<std::size_t>(c)];
      if (ch != '0' && ch != '1')
        throw ParseError(std::string("load_matrix: non-0/1 character '") + ch + "'", lineno);
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

void save_scheme(const Scheme& scheme, const SchemeFilePair& paths) {
  scheme.validate();
  save_matrix(scheme.matrix, paths.matrix_path);
  nlohmann::json j;
  j["model"] = scheme.mode.kind == Mode::Kind::Fixed ? "fixed" : "bounded";
  j["n"] = scheme.n;
  j["ell"] = scheme.mode.ell;
  j["thresholds"] = scheme.thresholds.values();
  j["components"] = nlohmann::json::array();
  for (const auto& c : scheme.components)
    j["components"].push_back({{"name", c.name}, {"rows", {c.begin, c.end}}});
  j["notes"] = scheme.notes;
  std::ofstream out(paths.metadata_path);
  if (!out) throw ParseError("save_scheme: cannot open " + paths.metadata_path, 0);
  out << j.dump(2) << '\n';
}

Scheme load_scheme(const SchemeFilePair& paths) {
  BinaryMatrix m = load_matrix(paths.matrix_path);
  std::ifstream in(paths.metadata_path);
  if (!in) throw ParseError("load_scheme: cannot open " + paths.metadata_path, 0);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("load_scheme: ") + e.what(), 0);
  }
  try {
    std::string model = j.at("model").get<std::string>();
    if (model != "fixed" && model != "bounded")
      throw ParseError("load_scheme: unknown model '" + model + "'", 0);
    Mode mode = model == "fixed" ? Mode::fixed(j.at("ell").get<long long>())
                                 : Mode::bounded(j.at("ell").get<long long>());
    Thresholds eta(j.at("thresholds").get<std::vector<long long>>());
    Scheme scheme{std::move(m), std::move(eta), j.at("n").get<long long>(), mode, {}, {}};
    for (const auto& c : j.at("components")) {
      auto rows = c.at("rows");
      scheme.components.push_back({c.at("name").get<std::string>(),
                                   rows.at(0).get<long long>(), rows.at(1).get<long long>()});
    }
    if (j.contains("notes")) scheme.notes = j["notes"].get<std::vector<std::string>>();
    try {
      scheme.validate();
    } catch (const ParameterError& e) {
      throw ParseError(std::string("load_scheme: metadata inconsistent: ") + e.what(), 0);
    }
    return scheme;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("load_scheme: ") + e.what(), 0);
  }
}

}  // namespace sqgt
