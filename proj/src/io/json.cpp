#include "mb/io/json.hpp"

#include <sstream>

namespace mb {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

Ground ground_from(const Json& j) {
  const std::string g = j.contains("ground") ? field<std::string>(j, "ground") : "Q";
  if (g == "Q") return Ground::Q;
  if (g == "Z") return Ground::Z;
  throw InputError("ground must be Q or Z, got '" + g + "'");
}

Json map_json(const ChainMap& f) {
  Json out = Json::array();
  for (const auto& m : f.components()) out.push_back(to_json(m));
  return out;
}

ChainMap map_from(const Json& j, const ChainComplex& src, const ChainComplex& tgt) {
  if (!j.is_array()) throw InputError("a chain map is a list of matrices");
  std::vector<SparseMatrix> comps;
  for (const auto& m : j) comps.push_back(matrix_from_json(m));
  try {
    return ChainMap(src, tgt, comps);
  } catch (const std::exception& e) {
    throw InputError(std::string("chain map: ") + e.what());
  }
}

}  // namespace

Json to_json(const SparseMatrix& m) {
  Json entries = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, v] : m.column(j)) entries.push_back(Json::array({i, j, to_string(v)}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

SparseMatrix matrix_from_json(const Json& j) {
  const auto rows = field<std::size_t>(j, "rows"), cols = field<std::size_t>(j, "cols");
  SparseMatrix m(rows, cols);
  if (!j.contains("entries")) return m;
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw InputError("matrix entry must be [row, col, value]");
    const auto r = e[0].get<std::size_t>(), c = e[1].get<std::size_t>();
    if (r >= rows || c >= cols) throw InputError("matrix entry out of range");
    Rational v;
    try {
      v = e[2].is_string() ? parse_rational(e[2].get<std::string>()) : Rational(e[2].get<long>());
    } catch (const std::exception& ex) {
      throw InputError(std::string("matrix entry: ") + ex.what());
    }
    m.set(r, c, v);
  }
  return m;
}

Json to_json(const ChainComplex& c) {
  Json d = Json::array();
  for (std::size_t n = 1; n < c.length(); ++n) d.push_back(to_json(c.d(n)));
  return Json{{"ground", to_string(c.ground())}, {"dims", c.dims()}, {"d", d}};
}

ChainComplex complex_from_json(const Json& j) {
  const Ground g = ground_from(j);
  auto dims = field<std::vector<std::size_t>>(j, "dims");
  std::vector<SparseMatrix> d;
  if (j.contains("d"))
    for (const auto& m : j.at("d")) d.push_back(matrix_from_json(m));
  try {
    return ChainComplex(g, dims, d);
  } catch (const std::exception& e) {
    throw InputError(std::string("chain complex: ") + e.what());
  }
}

Json to_json(const SimplicialChainComplex& x) {
  Json levels = Json::array(), faces = Json::array(), degens = Json::array();
  for (const auto& l : x.levels) levels.push_back(to_json(l));
  for (std::size_t n = 1; n <= x.N; ++n) {
    Json row = Json::array();
    for (const auto& f : x.faces[n]) row.push_back(map_json(f));
    faces.push_back(row);
  }
  for (std::size_t n = 0; n < x.N; ++n) {
    Json row = Json::array();
    for (const auto& s : x.degens[n]) row.push_back(map_json(s));
    degens.push_back(row);
  }
  return Json{{"ground", to_string(x.ground)}, {"N", x.N}, {"levels", levels}, {"faces", faces}, {"degens", degens}};
}

SimplicialChainComplex simplicial_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("simplicial object must be a JSON object");
  const auto n = field<std::size_t>(j, "N");
  if (j.contains("constant")) return constant_simplicial(complex_from_json(j.at("constant")), n);
  SimplicialChainComplex x;
  x.ground = ground_from(j);
  x.N = n;
  const Json& levels = j.at("levels");
  if (!levels.is_array() || levels.size() != n + 1) throw InputError("need N+1 levels");
  for (const auto& l : levels) x.levels.push_back(complex_from_json(l));
  for (const auto& l : x.levels)
    if (l.ground() != x.ground) throw InputError("levels over different grounds");
  const Json& faces = j.at("faces");
  const Json& degens = j.at("degens");
  if (!faces.is_array() || faces.size() != n || !degens.is_array() || degens.size() != n) throw InputError("need N rows of faces and degeneracies");
  x.faces.resize(n + 1);
  x.degens.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (faces[k - 1].size() != k + 1) throw InputError("level " + std::to_string(k) + " needs " + std::to_string(k + 1) + " faces");
    for (const auto& f : faces[k - 1]) x.faces[k].push_back(map_from(f, x.levels[k], x.levels[k - 1]));
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (degens[k].size() != k + 1) throw InputError("level " + std::to_string(k) + " needs " + std::to_string(k + 1) + " degeneracies");
    for (const auto& s : degens[k]) x.degens[k].push_back(map_from(s, x.levels[k], x.levels[k + 1]));
  }
  if (auto v = simplicial_violation(x)) throw InputError("simplicial identities: " + *v);
  return x;
}

Json to_json(const CheckRecord& r) {
  return Json{{"check", r.check}, {"anchor", r.anchor}, {"instance", r.instance}, {"bound", r.bound}, {"pass", r.pass}, {"witness", r.witness}};
}

std::string report_jsonl(const std::string& suite, const CheckReport& rep, const Json& footer_extra) {
  std::ostringstream os;
  for (const auto& r : rep.records) {
    Json line{{"suite", suite}};
    line.update(to_json(r));
    os << line.dump() << '\n';
  }
  Json summary{{"suite", suite}, {"records", rep.records.size()}, {"passed", rep.records.size() - rep.failures()}, {"failed", rep.failures()}};
  summary.update(footer_extra);
  os << Json{{"summary", summary}}.dump() << '\n';
  return os.str();
}

}  // namespace mb
