#include "skewlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "skewlab/subbrace.hpp"

namespace skewlab {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

std::vector<std::vector<int>> table_from_json(const Json& j, int n,
                                              const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw ParseError(std::string("missing table '") + field + "'");
  const Json& rows = j[field];
  if ((int)rows.size() != n)
    throw ParseError(std::string("table '") + field + "' has " +
                     std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(n));
  std::vector<std::vector<int>> out;
  for (const Json& row : rows) {
    if (!row.is_array() || (int)row.size() != n)
      throw ParseError(std::string("table '") + field +
                       "' has a row of wrong width");
    std::vector<int> r;
    for (const Json& v : row) {
      if (!v.is_number_integer())
        throw ParseError(std::string("table '") + field +
                         "' has a non-integer entry");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

Json table_to_json(const std::vector<int>& flat, int n) {
  Json rows = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(flat[i * n + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

int find_identity(const std::vector<std::vector<int>>& t) {
  int n = (int)t.size();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = t[e][j] == j && t[j][e] == j;
    if (ok) return e;
  }
  return -1;
}

std::vector<std::vector<int>> relabel_table(
    const std::vector<std::vector<int>>& t, const std::vector<int>& perm) {
  int n = (int)t.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out[perm[a]][perm[b]] = perm[t[a][b]];
  return out;
}

}  // namespace

AnalysisReport analyze(const FiniteSkewBrace& b) {
  AnalysisReport r;
  r.order = b.order;
  r.ker_lambda_size = ker_lambda(b).count();
  r.fix_size = fix_set(b).count();
  r.center_add_size = center_add(b).count();
  r.center_mul_size = center_mul(b).count();
  r.soc_size = soc(b).count();
  r.ann_size = ann(b).count();
  r.b2_size = star_span(b).count();
  r.b2_op_size = b2_op(b).count();
  r.commutator_size = commutator_ideal(b).count();
  r.two_sided = is_two_sided(b);
  for (int x = 0; x < b.order; ++x) {
    r.lambda_orbit_sizes.push_back(lambda_orbit(b, x).count());
    r.theta_orbit_sizes.push_back(theta_orbit(b, x).count());
  }
  std::sort(r.lambda_orbit_sizes.begin(), r.lambda_orbit_sizes.end());
  std::sort(r.theta_orbit_sizes.begin(), r.theta_orbit_sizes.end());
  std::vector<SubBraceHandle> subs = enumerate_subbraces(b);
  r.subbrace_count = (int)subs.size();
  r.index_equality_verified = true;
  for (const SubBraceHandle& s : subs)
    if (index_add(b, s) != index_mul(b, s)) r.index_equality_verified = false;
  return r;
}

std::string report_to_json(const AnalysisReport& r) {
  Json j;
  j["schema"] = "skewlab.report.v1";
  j["order"] = r.order;
  j["ker_lambda"] = r.ker_lambda_size;
  j["fix"] = r.fix_size;
  j["center_add"] = r.center_add_size;
  j["center_mul"] = r.center_mul_size;
  j["soc"] = r.soc_size;
  j["ann"] = r.ann_size;
  j["b2"] = r.b2_size;
  j["b2_op"] = r.b2_op_size;
  j["commutator"] = r.commutator_size;
  j["two_sided"] = r.two_sided;
  j["lambda_orbit_sizes"] = r.lambda_orbit_sizes;
  j["theta_orbit_sizes"] = r.theta_orbit_sizes;
  j["subbrace_count"] = r.subbrace_count;
  j["index_equality_verified"] = r.index_equality_verified;
  return j.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "order                " << r.order << "\n"
     << "|ker lambda|         " << r.ker_lambda_size << "\n"
     << "|Fix|                " << r.fix_size << "\n"
     << "|Z(B,+)|             " << r.center_add_size << "\n"
     << "|Z(B,o)|             " << r.center_mul_size << "\n"
     << "|Soc|                " << r.soc_size << "\n"
     << "|Ann|                " << r.ann_size << "\n"
     << "|B^2|                " << r.b2_size << "\n"
     << "|B^2_op|             " << r.b2_op_size << "\n"
     << "|B'|                 " << r.commutator_size << "\n"
     << "two-sided            " << (r.two_sided ? "yes" : "no") << "\n";
  os << "lambda orbit sizes   ";
  for (int v : r.lambda_orbit_sizes) os << v << " ";
  os << "\ntheta orbit sizes    ";
  for (int v : r.theta_orbit_sizes) os << v << " ";
  os << "\nsubbraces            " << r.subbrace_count << "\n"
     << "index equality       "
     << (r.index_equality_verified ? "verified" : "FAILED") << "\n";
  return os.str();
}

LoadedBrace parse_brace_json_text(const std::string& text) {
  Json j = parse_json(text);
  if (!j.contains("order") || !j["order"].is_number_integer())
    throw ParseError("missing integer field 'order'");
  int n = j["order"].get<int>();
  if (n <= 0) throw ParseError("'order' must be positive");
  auto add = table_from_json(j, n, "add");
  auto mul = table_from_json(j, n, "mul");
  for (auto* t : {&add, &mul})
    for (auto& row : *t)
      for (int v : row)
        if (v < 0 || v >= n) throw ParseError("table entry out of range");

  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array() || (int)j["names"].size() != n)
      throw ParseError("'names' must list one name per element");
    for (const Json& v : j["names"]) names.push_back(v.get<std::string>());
  }

  // relabel the shared identity to index 0 (transposition with the old 0)
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  int e = find_identity(add);
  if (e > 0) {
    std::swap(perm[0], perm[e]);
    add = relabel_table(add, perm);
    mul = relabel_table(mul, perm);
    if (!names.empty()) std::swap(names[0], names[e]);
  }

  LoadedBrace out;
  out.brace = validate_brace(add, mul);
  out.relabeling = std::move(perm);
  out.names = std::move(names);
  return out;
}

LoadedBrace load_brace(const std::string& path) {
  return parse_brace_json_text(read_file(path));
}

std::string brace_to_json_text(const FiniteSkewBrace& b,
                               const std::vector<std::string>* names) {
  Json j;
  j["order"] = b.order;
  j["add"] = table_to_json(b.add.table, b.order);
  j["mul"] = table_to_json(b.mul.table, b.order);
  if (names && !names->empty()) j["names"] = *names;
  return j.dump(2) + "\n";
}

void save_brace(const FiniteSkewBrace& b, const std::string& path,
                const std::vector<std::string>* names) {
  write_file(path, brace_to_json_text(b, names));
}

FiniteSolution parse_solution_json_text(const std::string& text) {
  Json j = parse_json(text);
  if (!j.contains("size") || !j["size"].is_number_integer())
    throw ParseError("missing integer field 'size'");
  int n = j["size"].get<int>();
  if (n <= 0) throw ParseError("'size' must be positive");
  auto lam = table_from_json(j, n, "lambda");
  auto rho = table_from_json(j, n, "rho");
  for (auto* t : {&lam, &rho})
    for (auto& row : *t)
      for (int v : row)
        if (v < 0 || v >= n) throw ParseError("table entry out of range");
  return validate_solution(lam, rho);
}

FiniteSolution load_solution(const std::string& path) {
  return parse_solution_json_text(read_file(path));
}

std::string solution_to_json_text(const FiniteSolution& s) {
  Json j;
  j["size"] = s.size;
  j["lambda"] = table_to_json(s.lam, s.size);
  j["rho"] = table_to_json(s.rho, s.size);
  return j.dump(2) + "\n";
}

void save_solution(const FiniteSolution& s, const std::string& path) {
  write_file(path, solution_to_json_text(s));
}

}  // namespace skewlab
