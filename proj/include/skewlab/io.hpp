#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewlab/brace.hpp"
#include "skewlab/solution.hpp"

namespace skewlab {

// Structured record of the computed invariants of a brace.
struct AnalysisReport {
  int order = 0;
  int ker_lambda_size = 0;
  int fix_size = 0;
  int center_add_size = 0;
  int center_mul_size = 0;
  int soc_size = 0;
  int ann_size = 0;
  int b2_size = 0;
  int b2_op_size = 0;
  int commutator_size = 0;
  bool two_sided = false;
  std::vector<int> lambda_orbit_sizes;  // sorted multisets
  std::vector<int> theta_orbit_sizes;
  int subbrace_count = 0;
  bool index_equality_verified = false;
};

AnalysisReport analyze(const FiniteSkewBrace& b);
std::string report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

struct LoadedBrace {
  FiniteSkewBrace brace;
  std::vector<int> relabeling;  // original index -> loaded index
  std::vector<std::string> names;
};

// JSON interchange: {"order": n, "add": [[..]], "mul": [[..]],
// "names": optional}. The shared identity is relabelled to index 0 on load
// and the permutation recorded. ParseError for malformed files,
// ValidationError from the table validators.
LoadedBrace load_brace(const std::string& path);
void save_brace(const FiniteSkewBrace& b, const std::string& path,
                const std::vector<std::string>* names = nullptr);
std::string brace_to_json_text(const FiniteSkewBrace& b,
                               const std::vector<std::string>* names = nullptr);
LoadedBrace parse_brace_json_text(const std::string& text);

// {"size": n, "lambda": [[..]], "rho": [[..]]} with lam[x][y] = λ_x(y),
// rho[x][y] = ρ_x(y).
FiniteSolution load_solution(const std::string& path);
void save_solution(const FiniteSolution& s, const std::string& path);
std::string solution_to_json_text(const FiniteSolution& s);
FiniteSolution parse_solution_json_text(const std::string& text);

}  // namespace skewlab
