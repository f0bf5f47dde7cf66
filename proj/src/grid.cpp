// grid.cpp

#include "indpath/grid.hpp"

#include <algorithm>
#include <sstream>

#include "indpath/error.hpp"
#include "indpath/parallel.hpp"

namespace indpath {

namespace {

int wrap5(int j) { return (j - 1) % 5 + 1; }

char kind_char(VarKind k) {
  return k == VarKind::I ? 'i' : (k == VarKind::O ? 'o' : 'n');
}

bool parse_var_name(const std::string& s, VarKind& kind, int& j) {
  if (s.size() != 2) return false;
  if (s[0] == 'i')
    kind = VarKind::I;
  else if (s[0] == 'o')
    kind = VarKind::O;
  else if (s[0] == 'n')
    kind = VarKind::N;
  else
    return false;
  if (s[1] < '1' || s[1] > '5') return false;
  j = s[1] - '0';
  return true;
}

Int rat_floor(const Rat& r) {
  Int p = numerator(r), q = denominator(r);
  if (p >= 0) return p / q;
  return -((-p + q - 1) / q);
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

// the one upper constraint defining a derived variable, plus its partners
struct DerivedRule {
  int var = -1;
  int constraint = -1;
  std::vector<int> partners;  // non-derived variable indices
};

std::vector<DerivedRule> derived_rules(const GridProblem& p) {
  std::vector<DerivedRule> rules;
  for (int v = 0; v < (int)p.vars.size(); ++v) {
    if (p.vars[v].role != VarRole::Derived) continue;
    DerivedRule r;
    r.var = v;
    for (int c = 0; c < (int)p.constraints.size(); ++c) {
      const auto& con = p.constraints[c];
      if (con.is_lower) continue;
      if (std::find(con.vars.begin(), con.vars.end(), v) == con.vars.end())
        continue;
      if (r.constraint != -1)
        throw Error(Errc::InvalidSpec, "derived variable " + p.vars[v].name() +
                                           " appears in several upper caps");
      r.constraint = c;
      for (int w : con.vars) {
        if (w == v) continue;
        if (p.vars[w].role == VarRole::Derived)
          throw Error(Errc::InvalidSpec,
                      "derived variables " + p.vars[v].name() + " and " +
                          p.vars[w].name() + " share an upper cap");
        r.partners.push_back(w);
      }
    }
    if (r.constraint == -1)
      throw Error(Errc::InvalidSpec, "derived variable " + p.vars[v].name() +
                                         " has no defining upper cap");
    rules.push_back(std::move(r));
  }
  return rules;
}

void validate_problem(const GridProblem& p) {
  if (p.box <= 0) throw Error(Errc::InvalidSpec, "box bound must be positive");
  const int nv = (int)p.vars.size();
  for (const auto& m : p.objective) {
    if (m.factors.empty() || m.factors.size() > 3)
      throw Error(Errc::InvalidSpec, "monomial degree must be 1..3");
    for (int f : m.factors)
      if (f < 0 || f >= nv)
        throw Error(Errc::InvalidSpec, "monomial references unknown variable");
  }
  for (const auto& c : p.constraints) {
    if (c.vars.empty())
      throw Error(Errc::InvalidSpec, "constraint without variables");
    for (int v : c.vars)
      if (v < 0 || v >= nv)
        throw Error(Errc::InvalidSpec, "constraint references unknown variable");
  }
}

std::string joined_names(const GridProblem& p, const std::vector<int>& vars) {
  std::string s;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) s += "+";
    s += p.vars[vars[i]].name();
  }
  return s;
}

// ----- compiled integer-unit form -----

struct Compiled {
  int nv = 0;
  int R = 0;
  std::vector<int> axis_of_var;  // -1 unless free
  std::vector<int> free_vars;    // axis -> var
  struct Drv {
    int var;
    long long cap;
    std::vector<int> partners;
  };
  std::vector<Drv> derived;
  struct Con {
    std::vector<int> vars;
    bool lower;
    long long threshold;
  };
  std::vector<Con> cons;
  std::vector<std::vector<int>> monos;
  std::vector<int> degrees;
  bool uniform3 = true;
  Int inv_step;  // 1/step = R * box_den / box_num, for mixed-degree keys
  Int box_num;
};

Compiled compile(const GridProblem& p, int R, int S) {
  validate_problem(p);
  Compiled c;
  c.nv = (int)p.vars.size();
  c.R = R;
  c.axis_of_var.assign(c.nv, -1);
  for (int v = 0; v < c.nv; ++v)
    if (p.vars[v].role == VarRole::Free) {
      c.axis_of_var[v] = (int)c.free_vars.size();
      c.free_vars.push_back(v);
    }

  Int max_unit = R;
  for (const auto& r : derived_rules(p)) {
    const auto& con = p.constraints[r.constraint];
    Rat cap_r = con.bound * R / p.box;
    if (denominator(cap_r) != 1)
      throw Error(Errc::InvalidSpec,
                  "derived cap for " + p.vars[r.var].name() +
                      " is not a whole number of grid steps at resolution " +
                      std::to_string(R));
    Int cap = numerator(cap_r);
    if (cap < 0) cap = 0;
    if (cap > max_unit) max_unit = cap;
    c.derived.push_back({r.var, (long long)cap, r.partners});
  }
  // int64 safety: objective sums stay below 2^62
  Int worst = Int(p.objective.size()) * max_unit * max_unit * max_unit;
  if (worst >= (Int(1) << 62))
    throw Error(Errc::ResourceLimit,
                "objective units overflow 64-bit at this resolution");

  for (const auto& con : p.constraints) {
    Int sum_max = 0;
    for (int v : con.vars) {
      if (p.vars[v].role == VarRole::Zero) continue;
      if (p.vars[v].role == VarRole::Free) {
        sum_max += R;
        continue;
      }
      for (const auto& d : c.derived)
        if (d.var == v) sum_max += Int(d.cap);
    }
    Rat scaled = con.bound * R / p.box;
    Int thr = con.is_lower ? rat_ceil(scaled - S) : rat_floor(scaled + S);
    if (con.is_lower) {
      if (thr < 0) thr = 0;                        // always satisfied
      if (thr > sum_max) thr = sum_max + 1;        // never satisfied
    } else {
      if (thr > sum_max) thr = sum_max;            // always satisfied
      if (thr < 0) thr = -1;                       // never satisfied
    }
    c.cons.push_back({con.vars, con.is_lower, (long long)thr});
  }

  for (const auto& m : p.objective) {
    c.monos.push_back(m.factors);
    c.degrees.push_back((int)m.factors.size());
    if (m.factors.size() != 3) c.uniform3 = false;
  }
  // ordering key for mixed degrees: value / step^3 scaled by box_num^2 is
  // box_num^2*s3 + box_num*inv*s2 + inv^2*s1 with inv = 1/step, all integral
  c.box_num = numerator(p.box);
  c.inv_step = Int(R) * denominator(p.box);
  return c;
}

// one slab: axis 0 fixed, remaining axes swept in lex order (last fastest)
struct SlabBest {
  bool any = false;
  long long key64 = 0;
  Int key;                 // only used on the mixed-degree path
  long long s1 = 0, s2 = 0, s3 = 0;
  std::vector<int> arg;
  std::uint64_t feasible = 0;
};

SlabBest scan_slab(const Compiled& c, int d, int slab) {
  SlabBest best;
  std::vector<int> u(d, 0);
  u[0] = slab;
  std::vector<long long> units(c.nv, 0);
  const int R = c.R;
  for (;;) {
    for (int a = 0; a < d; ++a) units[c.free_vars[a]] = u[a];
    for (const auto& dr : c.derived) {
      long long s = dr.cap;
      for (int w : dr.partners) s -= units[w];
      units[dr.var] = s > 0 ? s : 0;
    }
    bool feasible = true;
    for (const auto& con : c.cons) {
      long long s = 0;
      for (int v : con.vars) s += units[v];
      if (con.lower ? s < con.threshold : s > con.threshold) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      ++best.feasible;
      long long s1 = 0, s2 = 0, s3 = 0;
      for (const auto& m : c.monos) {
        long long prod = 1;
        for (int v : m) prod *= units[v];
        if (m.size() == 3)
          s3 += prod;
        else if (m.size() == 2)
          s2 += prod;
        else
          s1 += prod;
      }
      bool better;
      if (c.uniform3) {
        better = !best.any || s3 > best.key64;
        if (better) best.key64 = s3;
      } else {
        Int key = c.box_num * c.box_num * s3 + c.box_num * c.inv_step * s2 +
                  c.inv_step * c.inv_step * s1;
        better = !best.any || key > best.key;
        if (better) best.key = key;
      }
      if (better) {
        best.any = true;
        best.s1 = s1;
        best.s2 = s2;
        best.s3 = s3;
        best.arg = u;
      }
    }
    // lex successor over axes 1..d-1
    int a = d - 1;
    while (a >= 1 && u[a] == R) u[a--] = 0;
    if (a < 1) break;
    ++u[a];
  }
  return best;
}

}  // namespace

// ----- names, cases, builtin problems -----

std::string GridVar::name() const {
  return std::string(1, kind_char(kind)) + std::to_string(j);
}

std::vector<int> GridProblem::free_indices() const {
  std::vector<int> out;
  for (int v = 0; v < (int)vars.size(); ++v)
    if (vars[v].role == VarRole::Free) out.push_back(v);
  return out;
}

int GridProblem::find_var(VarKind kind, int j) const {
  for (int v = 0; v < (int)vars.size(); ++v)
    if (vars[v].kind == kind && vars[v].j == j) return v;
  return -1;
}

std::vector<CaseDef> parse_cases(const std::string& text) {
  std::vector<CaseDef> cases;
  std::istringstream in(text);
  std::string line;
  CaseDef cur;
  bool open = false;
  auto flush = [&]() {
    if (!open) return;
    if (cur.free_vars.empty() || cur.zero_vars.empty())
      throw Error(Errc::InvalidSpec, "case " + std::to_string(cur.id) +
                                         " needs both free and zero lists");
    std::vector<std::string> all = cur.free_vars;
    all.insert(all.end(), cur.zero_vars.begin(), cur.zero_vars.end());
    std::sort(all.begin(), all.end());
    std::vector<std::string> want;
    for (char k : {'i', 'o'})
      for (int j = 1; j <= 5; ++j)
        want.push_back(std::string(1, k) + std::to_string(j));
    std::sort(want.begin(), want.end());
    if (all != want)
      throw Error(Errc::InvalidSpec,
                  "case " + std::to_string(cur.id) +
                      ": free and zero must partition the ten i/o variables");
    for (const auto& c : cases)
      if (c.id == cur.id)
        throw Error(Errc::InvalidSpec,
                    "duplicate case id " + std::to_string(cur.id));
    cases.push_back(cur);
    cur = CaseDef{};
    open = false;
  };
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "case") {
      flush();
      if (tok.size() != 2)
        throw Error(Errc::ParseError, "malformed case header");
      try {
        cur.id = std::stoi(tok[1]);
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, "bad case id '" + tok[1] + "'");
      }
      if (cur.id <= 0) throw Error(Errc::InvalidSpec, "case ids are positive");
      open = true;
      continue;
    }
    if (tok[0] == "free:" || tok[0] == "zero:") {
      if (!open) throw Error(Errc::ParseError, "variable list outside a case");
      auto& dst = tok[0][0] == 'f' ? cur.free_vars : cur.zero_vars;
      if (!dst.empty())
        throw Error(Errc::ParseError, "repeated " + tok[0] + " list");
      for (size_t i = 1; i < tok.size(); ++i) {
        VarKind k;
        int j;
        if (!parse_var_name(tok[i], k, j) || k == VarKind::N)
          throw Error(Errc::InvalidSpec,
                      "'" + tok[i] + "' is not an i/o variable");
        dst.push_back(tok[i]);
      }
      if (dst.empty())
        throw Error(Errc::ParseError, tok[0] + " list is empty");
      continue;
    }
    throw Error(Errc::ParseError, "unrecognized line '" + tok[0] + " ...'");
  }
  flush();
  if (cases.empty()) throw Error(Errc::ParseError, "no cases in text");
  return cases;
}

std::string builtin_cases_text() {
  return
      "# Maximal support patterns for the restricted grid kernels.\n"
      "# free + zero partition the ten i/o variables; every n_j is derived\n"
      "# as n_j = max(0, 21/100 - i_j - o_j).\n"
      "\n"
      "case 1\n"
      "free: o1 i2 i4 o4\n"
      "zero: i1 o2 i3 o3 i5 o5\n"
      "\n"
      "case 2\n"
      "free: o1 i1 i3 o3\n"
      "zero: i2 o2 i4 o4 i5 o5\n"
      "\n"
      "case 3\n"
      "free: o1 i1 o3 i4\n"
      "zero: i2 o2 i3 o4 i5 o5\n"
      "\n"
      "case 4\n"
      "free: o1 i1 i4 o4\n"
      "zero: i2 o2 i3 o3 i5 o5\n";
}

const std::vector<CaseDef>& builtin_cases() {
  static const std::vector<CaseDef> cases = parse_cases(builtin_cases_text());
  return cases;
}

namespace {

// vars come first in the given (name, role) order, then the five derived n's
GridProblem assemble_problem(
    const std::vector<std::pair<std::string, VarRole>>& io_vars,
    const std::string& label) {
  GridProblem p;
  p.label = label;
  for (const auto& [name, role] : io_vars) {
    VarKind k;
    int j;
    parse_var_name(name, k, j);
    p.vars.push_back({k, j, role});
  }
  for (int j = 1; j <= 5; ++j)
    p.vars.push_back({VarKind::N, j, VarRole::Derived});

  auto at = [&](VarKind k, int j) {
    int v = p.find_var(k, j);
    if (v < 0) throw Error(Errc::InvalidSpec, "incomplete variable set");
    return v;
  };
  for (int j = 1; j <= 5; ++j) {
    p.objective.push_back(
        {{at(VarKind::O, j), at(VarKind::N, wrap5(j + 1)),
          at(VarKind::N, wrap5(j + 2))}});
    p.objective.push_back(
        {{at(VarKind::I, j), at(VarKind::O, wrap5(j + 2)),
          at(VarKind::N, wrap5(j + 3))}});
    p.objective.push_back(
        {{at(VarKind::N, j), at(VarKind::I, wrap5(j + 1)),
          at(VarKind::O, wrap5(j + 3))}});
    p.objective.push_back(
        {{at(VarKind::N, j), at(VarKind::N, wrap5(j + 1)),
          at(VarKind::I, wrap5(j + 3))}});
  }
  for (int j = 1; j <= 5; ++j)
    p.constraints.push_back(
        {{at(VarKind::I, j), at(VarKind::O, j), at(VarKind::N, j)},
         false,
         Rat(21, 100)});
  for (int j = 1; j <= 5; ++j)
    p.constraints.push_back({{at(VarKind::O, j), at(VarKind::I, j),
                              at(VarKind::N, wrap5(j + 1)),
                              at(VarKind::I, wrap5(j + 1)),
                              at(VarKind::I, wrap5(j + 2)),
                              at(VarKind::O, wrap5(j + 2)),
                              at(VarKind::I, wrap5(j + 3)),
                              at(VarKind::O, wrap5(j + 3)),
                              at(VarKind::N, wrap5(j + 4)),
                              at(VarKind::O, wrap5(j + 4))},
                             true,
                             Rat(17, 100)});
  return p;
}

}  // namespace

GridProblem standard_problem() {
  std::vector<std::pair<std::string, VarRole>> io;
  for (int j = 1; j <= 5; ++j) io.push_back({"i" + std::to_string(j), VarRole::Free});
  for (int j = 1; j <= 5; ++j) io.push_back({"o" + std::to_string(j), VarRole::Free});
  return assemble_problem(io, "standard");
}

GridProblem restricted_case(int id) { return restricted_case(id, builtin_cases()); }

GridProblem restricted_case(int id, const std::vector<CaseDef>& cases) {
  for (const auto& c : cases) {
    if (c.id != id) continue;
    std::vector<std::pair<std::string, VarRole>> io;
    for (const auto& name : c.free_vars) io.push_back({name, VarRole::Free});
    for (const auto& name : c.zero_vars) io.push_back({name, VarRole::Zero});
    return assemble_problem(io, "case " + std::to_string(id));
  }
  throw Error(Errc::UnknownCase, "no case with id " + std::to_string(id));
}

// ----- exact point evaluation -----

PointEval evaluate_point(const GridProblem& problem,
                         const std::map<std::string, Rat>& values) {
  validate_problem(problem);
  const int nv = (int)problem.vars.size();
  std::vector<Rat> val(nv, Rat(0));
  size_t used = 0;
  for (int v = 0; v < nv; ++v) {
    const auto& gv = problem.vars[v];
    auto it = values.find(gv.name());
    if (gv.role == VarRole::Free) {
      if (it == values.end())
        throw Error(Errc::InvalidSpec,
                    "missing value for free variable " + gv.name());
      val[v] = it->second;
      ++used;
    } else if (it != values.end()) {
      throw Error(Errc::InvalidSpec,
                  gv.name() + " is not free and cannot be assigned");
    }
  }
  if (used != values.size())
    throw Error(Errc::InvalidSpec, "values contain unknown variable names");

  for (const auto& r : derived_rules(problem)) {
    Rat s = problem.constraints[r.constraint].bound;
    for (int w : r.partners) s -= val[w];
    val[r.var] = s > 0 ? s : Rat(0);
  }

  PointEval ev;
  ev.feasible = true;
  for (int v = 0; v < nv; ++v) {
    if (problem.vars[v].role != VarRole::Free) continue;
    if (val[v] < 0 || val[v] > problem.box) {
      ev.feasible = false;
      ev.violated.push_back("0 <= " + problem.vars[v].name() +
                            " <= " + rat_str(problem.box) + " got " +
                            rat_str(val[v]));
    }
  }
  for (const auto& con : problem.constraints) {
    Rat lhs = 0;
    for (int v : con.vars) lhs += val[v];
    bool ok = con.is_lower ? lhs >= con.bound : lhs <= con.bound;
    if (!ok) {
      ev.feasible = false;
      ev.violated.push_back(joined_names(problem, con.vars) +
                            (con.is_lower ? " >= " : " <= ") +
                            rat_str(con.bound) + " got " + rat_str(lhs));
    }
  }
  ev.objective = 0;
  for (const auto& m : problem.objective) {
    Rat prod = 1;
    for (int f : m.factors) prod *= val[f];
    ev.objective += prod;
  }
  return ev;
}

// ----- grid search and certification -----

GridCertificate grid_search(const GridProblem& problem, int resolution,
                            int slack_steps, int threads,
                            std::uint64_t budget) {
  if (resolution < 2)
    throw Error(Errc::InvalidSpec, "resolution must be at least 2");
  if (slack_steps < 0)
    throw Error(Errc::InvalidSpec, "slack steps cannot be negative");
  Compiled c = compile(problem, resolution, slack_steps);
  const int d = (int)c.free_vars.size();
  if (d < 1 || d > 6)
    throw Error(Errc::Unsupported,
                "grid kernels support 1..6 free variables, problem has " +
                    std::to_string(d));
  Int points = ipow(Int(resolution + 1), d);
  if (points > Int(budget))
    throw Error(Errc::ResourceLimit,
                "grid has " + points.str() + " points, budget is " +
                    std::to_string(budget));

  const int nw = resolve_threads(threads);
  auto slabs = parallel_blocks<SlabBest>(
      resolution + 1, nw, [&](int slab) { return scan_slab(c, d, slab); });

  GridCertificate cert;
  cert.label = problem.label;
  cert.resolution = resolution;
  cert.slack_steps = slack_steps;
  const Rat step = problem.box / resolution;
  cert.slack_value = Rat(slack_steps) * step;
  cert.d = d;
  for (int a = 0; a < d; ++a)
    cert.free_names.push_back(problem.vars[c.free_vars[a]].name());

  const SlabBest* best = nullptr;
  for (const auto& sb : slabs) {
    cert.feasible_points += sb.feasible;
    if (!sb.any) continue;
    if (!best || (c.uniform3 ? sb.key64 > best->key64 : sb.key > best->key))
      best = &sb;
  }
  if (!best)
    throw Error(Errc::InvalidSpec,
                "no grid point satisfies the slack-relaxed constraints");
  cert.argmax_units = best->arg;
  for (int a = 0; a < d; ++a) cert.argmax.push_back(Rat(best->arg[a]) * step);
  cert.sampled = Rat(best->s3) * step * step * step +
                 Rat(best->s2) * step * step + Rat(best->s1) * step;
  return cert;
}

Rat symbolic_partial_bound(const GridProblem& problem) {
  validate_problem(problem);
  auto mult = [&](int v) {
    int m = 0;
    for (const auto& mono : problem.objective)
      for (int f : mono.factors) m += (f == v);
    return m;
  };
  auto rules = derived_rules(problem);
  int worst = 0;
  for (int v = 0; v < (int)problem.vars.size(); ++v) {
    if (problem.vars[v].role != VarRole::Free) continue;
    int m = mult(v);
    for (const auto& r : rules)
      if (std::find(r.partners.begin(), r.partners.end(), v) !=
          r.partners.end())
        m = std::max(m, mult(r.var));
    worst = std::max(worst, m);
  }
  return Rat(worst) * problem.box * problem.box;
}

GridCertificate certify(const GridProblem& problem, int resolution,
                        int slack_steps, std::optional<Rat> lipschitz,
                        bool tight, int threads, std::uint64_t budget) {
  GridCertificate cert =
      grid_search(problem, resolution, slack_steps, threads, budget);
  const Rat sym = symbolic_partial_bound(problem);
  Rat L = lipschitz ? *lipschitz : (tight ? sym : Rat(63, 25));
  if (L < sym)
    throw Error(Errc::InvalidSpec,
                "step bound " + rat_str(L) +
                    " is below the symbolic partial bound " + rat_str(sym));
  const Rat step = problem.box / resolution;
  cert.lipschitz = L;
  cert.certified = cert.sampled + Rat(cert.d) * L * step;
  cert.has_bound = true;
  return cert;
}

std::string format_certificate(const GridCertificate& cert) {
  std::ostringstream out;
  out << "label: " << cert.label << "\n";
  out << "resolution: " << cert.resolution << "\n";
  out << "slack-steps: " << cert.slack_steps << "\n";
  out << "slack: " << rat_str(cert.slack_value) << "\n";
  out << "free:";
  for (const auto& n : cert.free_names) out << " " << n;
  out << "\n";
  out << "argmax-units:";
  for (int u : cert.argmax_units) out << " " << u;
  out << "\n";
  out << "argmax:";
  for (const auto& r : cert.argmax) out << " " << rat_str(r);
  out << "\n";
  out << "sampled: " << rat_str(cert.sampled) << "\n";
  out << "feasible-points: " << cert.feasible_points << "\n";
  if (cert.has_bound) {
    out << "lipschitz: " << rat_str(cert.lipschitz) << "\n";
    out << "certified: " << rat_str(cert.certified) << "\n";
  }
  return out.str();
}

std::string format_certificates(const std::vector<GridCertificate>& certs) {
  std::string out;
  for (size_t i = 0; i < certs.size(); ++i) {
    if (i) out += "\n";
    out += format_certificate(certs[i]);
  }
  return out;
}

}  // namespace indpath
