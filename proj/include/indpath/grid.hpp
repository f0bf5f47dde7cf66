// grid.hpp
// Certified grid maximization of a multilinear objective over box-bounded
// variables with unit-coefficient linear constraints. Fifteen named
// variables i_j, o_j, n_j (j in 1..5, indices wrap mod 5): the i/o variables
// are free or pinned to zero per case; each n_j is derived as the residual
// n_j = max(0, cap - i_j - o_j). Grid points are exact rationals k*cap/R for
// k = 0..R (endpoint-inclusive, step cap/R); all evaluation is in scaled
// integer units, so sampled maxima and certificates are exact.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indpath/numbers.hpp"

namespace indpath {

// ----- problem -----

enum class VarKind { I, O, N };
enum class VarRole { Free, Zero, Derived };

struct GridVar {
  VarKind kind;
  int j;  // 1..5
  VarRole role;
  std::string name() const;  // "i1".."n5"
};

struct Monomial {
  std::vector<int> factors;  // variable indices, degree 1..3
};

struct LinearConstraint {
  std::vector<int> vars;  // unit coefficients
  bool is_lower;          // lower: sum >= bound, upper: sum <= bound
  Rat bound;
};

struct GridProblem {
  std::vector<GridVar> vars;
  std::vector<Monomial> objective;
  std::vector<LinearConstraint> constraints;
  Rat box = Rat(21, 100);  // every variable ranges over [0, box]
  std::string label;       // "standard", "case 1", ...

  std::vector<int> free_indices() const;
  int find_var(VarKind kind, int j) const;  // -1 if absent
};

// ----- case definitions -----

struct CaseDef {
  int id = 0;
  std::vector<std::string> free_vars;
  std::vector<std::string> zero_vars;
};

// text format: blocks of "case <id>" / "free: <names>" / "zero: <names>",
// '#' comments and blank lines ignored; free+zero must partition the ten
// i/o variables
std::vector<CaseDef> parse_cases(const std::string& text);

// built-in case table (mirrored verbatim in data/grid_cases.txt)
const std::vector<CaseDef>& builtin_cases();
std::string builtin_cases_text();

// full problem: ten free i/o variables, five derived n's
GridProblem standard_problem();

// four-variable restriction; throws UnknownCase
GridProblem restricted_case(int id);
GridProblem restricted_case(int id, const std::vector<CaseDef>& cases);

// ----- evaluation -----

struct PointEval {
  bool feasible = false;            // exact, no slack
  Rat objective;                    // always evaluated
  std::vector<std::string> violated;  // constraint descriptions
};

// values keys are free-variable names (all required, nothing else allowed)
PointEval evaluate_point(const GridProblem& problem,
                         const std::map<std::string, Rat>& values);

// ----- certificates -----

struct GridCertificate {
  std::string label;
  int resolution = 0;   // grid step is box/resolution; R+1 samples per axis
  int slack_steps = 0;  // per-constraint slack, in grid steps
  Rat slack_value;      // slack_steps * step
  int d = 0;            // free-variable count
  std::vector<std::string> free_names;
  std::vector<int> argmax_units;  // lexicographically least maximizer
  std::vector<Rat> argmax;
  Rat sampled;          // exact maximum over slack-feasible grid points
  std::uint64_t feasible_points = 0;
  Rat lipschitz;        // L, set by certify
  Rat certified;        // sampled + d * L * step, set by certify
  bool has_bound = false;
};

// sampled maximum over the slack-feasible grid; R >= 2, 1 <= d <= 6,
// (R+1)^d within budget (default 1e9 evaluations)
GridCertificate grid_search(const GridProblem& problem, int resolution,
                            int slack_steps = 1, int threads = 0,
                            std::uint64_t budget = 1000000000ULL);

// largest symbolic bound on any first partial of the objective after the
// derived-variable substitution: box^2 * max monomial multiplicity
Rat symbolic_partial_bound(const GridProblem& problem);

// grid_search plus the certified bound sampled + d*L*step. L defaults to
// 63/25; tight = true uses symbolic_partial_bound instead. L below the
// symbolic bound is rejected (InvalidSpec).
GridCertificate certify(const GridProblem& problem, int resolution,
                        int slack_steps = 1,
                        std::optional<Rat> lipschitz = std::nullopt,
                        bool tight = false, int threads = 0,
                        std::uint64_t budget = 1000000000ULL);

// certificate block: every field as exact rationals
std::string format_certificate(const GridCertificate& cert);
std::string format_certificates(const std::vector<GridCertificate>& certs);

}  // namespace indpath
