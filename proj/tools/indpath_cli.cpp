// indpath_cli.cpp
// Command-line front end for the indpath library: counting, densities,
// enumeration, constructions, extremal search, certified grid maximization,
// bounds tables and flag-algebra SDP export/verification. Counts and
// densities print as exact rationals; human-readable lines add a
// 6-significant-digit decimal. Exit codes: 0 success, 2 bad input, 1
// computational failure (unsupported size, exhausted budget, failed
// verification).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "indpath/bounds.hpp"
#include "indpath/canonical.hpp"
#include "indpath/constructions.hpp"
#include "indpath/counting.hpp"
#include "indpath/enumerate.hpp"
#include "indpath/error.hpp"
#include "indpath/flags.hpp"
#include "indpath/graph.hpp"
#include "indpath/grid.hpp"
#include "indpath/numbers.hpp"
#include "indpath/search.hpp"

using namespace indpath;

namespace {

// ----- small helpers -----

std::string lower(std::string s) {
  for (auto& c : s) c = (char)std::tolower((unsigned char)c);
  return s;
}

// "<prefix><digits>" -> k
bool named_int(const std::string& s, const std::string& prefix, int& k) {
  if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0)
    return false;
  k = 0;
  for (size_t i = prefix.size(); i < s.size(); ++i) {
    if (!std::isdigit((unsigned char)s[i])) return false;
    k = k * 10 + (s[i] - '0');
    if (k > 1000000) return false;
  }
  return true;
}

// a graph argument is a named construction (p<k>, c<k>, tt<k>, t3), an
// inline compact literal "n:<digits>", or a file path
OrientedGraph resolve_graph(const std::string& spec) {
  std::string low = lower(spec);
  int k = 0;
  if (low == "t3") return transitive_tournament(3);
  if (named_int(low, "p", k)) return directed_path(k);
  if (named_int(low, "c", k)) return directed_cycle(k);
  if (named_int(low, "tt", k)) return transitive_tournament(k);
  auto colon = spec.find(':');
  if (colon != std::string::npos && colon > 0) {
    bool digits = true;
    for (size_t i = 0; i < colon; ++i)
      digits = digits && std::isdigit((unsigned char)spec[i]);
    if (digits) return parse_graph_compact(spec);
  }
  return read_graph_file(spec);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad integer '" + item + "'");
    }
    if (pos != item.size())
      throw Error(Errc::ParseError, "bad integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(Errc::ParseError, "empty integer list");
  return out;
}

// "a..b" or a single "k"
std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int k = std::stoi(text);
      return {k, k};
    }
    int a = std::stoi(text.substr(0, dots));
    int b = std::stoi(text.substr(dots + 2));
    return {a, b};
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad range '" + text + "'");
  }
}

std::string human_rat(const Rat& r) {
  return rat_str(r) + " (~" + rat_decimal(r) + ")";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot write '" + path + "'");
  out << content;
  if (!out.good()) throw Error(Errc::IoError, "write failed for '" + path + "'");
}

// friendly class label for a canonical compact code: a named construction
// when the class matches one, otherwise the code itself
std::string iso_label(const std::string& code) {
  OrientedGraph g = parse_graph_compact(code);
  int n = g.n;
  if (n > kMaxCanonicalN) return "-";
  if (n >= 3 && canonical_form(directed_cycle(n)).code == code)
    return "C" + std::to_string(n);
  if (n >= 1 && canonical_form(directed_path(n)).code == code)
    return "P" + std::to_string(n);
  if (n >= 1 && canonical_form(transitive_tournament(n)).code == code)
    return "TT" + std::to_string(n);
  return code;
}

// ----- count / density -----

struct CountOpts {
  std::string graph, pattern = "p4", through, format = "text";
};

int run_count(const CountOpts& o) {
  OrientedGraph g = resolve_graph(o.graph);
  Int c;
  OrientedGraph h;
  if (!o.through.empty()) {
    if (lower(o.pattern) != "p4")
      throw Error(Errc::InvalidSpec, "--through only counts p4 copies");
    h = directed_path(4);
    c = count_p4_through(g, VertexSet(parse_int_list(o.through)));
  } else {
    h = resolve_graph(o.pattern);
    c = count_induced(g, h);
  }
  if (o.format == "csv") {
    std::cout << "graph,pattern,through,count\n"
              << format_graph_compact(g) << "," << format_graph_compact(h)
              << ",";
    std::string sep;
    for (int v : o.through.empty() ? std::vector<int>{}
                                   : parse_int_list(o.through)) {
      std::cout << sep << v;
      sep = ";";
    }
    std::cout << "," << c << "\n";
  } else {
    std::cout << c << "\n";
  }
  return 0;
}

struct DensityOpts {
  std::string graph, pattern = "p4", format = "text";
};

int run_density(const DensityOpts& o) {
  OrientedGraph g = resolve_graph(o.graph);
  OrientedGraph h = resolve_graph(o.pattern);
  Rat d = density(g, h);
  if (o.format == "csv") {
    std::cout << "graph,pattern,density\n"
              << format_graph_compact(g) << "," << format_graph_compact(h)
              << "," << rat_str(d) << "\n";
  } else {
    std::cout << rat_str(d) << "\n";
  }
  return 0;
}

// ----- enumerate -----

struct EnumerateOpts {
  int n = 0;
  bool t3_free = false;
  std::string format = "compact", backend = "auto";
  int threads = 0;
};

EnumBackend enum_backend(const std::string& s) {
  if (s == "sweep") return EnumBackend::Sweep;
  if (s == "orderly") return EnumBackend::Orderly;
  return EnumBackend::Auto;
}

int run_enumerate(const EnumerateOpts& o) {
  Family fam = o.t3_free ? Family::T3Free : Family::AllOriented;
  GraphFamily f = enumerate_family(o.n, fam, enum_backend(o.backend), o.threads);
  if (o.format == "csv") {
    std::cout << "code,aut_order\n";
    for (int i = 0; i < f.size(); ++i)
      std::cout << f.codes[i] << "," << f.aut_orders[i] << "\n";
  } else if (o.format == "arcs") {
    for (int i = 0; i < f.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << format_graph_arcs(f.members[i]);
    }
    std::cout << "# count=" << f.size() << "\n";
  } else {
    for (const auto& code : f.codes) std::cout << code << "\n";
    std::cout << "# count=" << f.size() << "\n";
  }
  return 0;
}

// ----- construct -----

struct ConstructOpts {
  std::string base;
  int n = 0;
  bool iterated = false;
  std::string sizes, format = "arcs", out;
};

OrientedGraph resolve_base(const std::string& spec) {
  std::string low = lower(spec);
  int k = 0;
  if (low == "c5") return directed_cycle(5);
  if (named_int(low, "ck:", k)) return directed_cycle(k);
  if (named_int(low, "path:", k)) return directed_path(k);
  throw Error(Errc::InvalidSpec,
              "unknown base '" + spec + "' (want c5, ck:<k> or path:<k>)");
}

int run_construct(const ConstructOpts& o) {
  OrientedGraph base = resolve_base(o.base);
  OrientedGraph g;
  if (!o.sizes.empty()) {
    if (o.iterated)
      throw Error(Errc::InvalidSpec, "--sizes and --iterated are exclusive");
    std::vector<int> sizes = parse_int_list(o.sizes);
    int total = 0;
    for (int s : sizes) total += s;
    if (o.n > 0 && o.n != total)
      throw Error(Errc::InvalidSpec, "--n disagrees with --sizes total");
    g = blow_up({base, sizes});
  } else if (o.iterated) {
    g = iterated_balanced_blow_up({base, o.n});
  } else if (o.n > 0) {
    g = balanced_blow_up(base, o.n);
  } else {
    g = base;
  }
  std::string text =
      o.format == "compact" ? format_graph_compact(g) + "\n" : format_graph_arcs(g);
  if (!o.out.empty())
    write_text_file(o.out, text);
  else
    std::cout << text;
  return 0;
}

// ----- search -----

struct SearchOpts {
  int n = 0;
  bool t3_free = false, exhaustive = false;
  std::string local_start, pattern = "p4", backend = "auto", out_dir,
              format = "text";
  std::uint64_t budget = 1000000;
  int threads = 0;
};

SearchBackend search_backend(const std::string& s) {
  if (s == "sweep") return SearchBackend::Sweep;
  if (s == "orderly") return SearchBackend::Orderly;
  return SearchBackend::Auto;
}

void print_search_text(const SearchReport& rep, const std::string& backend) {
  std::cout << "max=" << rep.max_count << " maximizers="
            << rep.maximizers.size() << " iso=";
  std::string sep;
  for (const auto& code : rep.maximizer_codes) {
    std::cout << sep << iso_label(code);
    sep = ",";
  }
  std::cout << "\n";
  std::cout << "n=" << rep.n << " constraint=" << family_name(rep.constraint)
            << " exhaustive=" << (rep.exhaustive ? "yes" : "no")
            << " examined=" << rep.labeled_examined << "\n";
  std::cout << "backend=" << backend << "\n";
  for (const auto& code : rep.maximizer_codes)
    std::cout << "maximizer " << code << "\n";
}

void print_search_csv(const SearchReport& rep) {
  std::cout << "n,constraint,exhaustive,examined,max,code,iso\n";
  for (const auto& code : rep.maximizer_codes)
    std::cout << rep.n << "," << family_name(rep.constraint) << ","
              << (rep.exhaustive ? "yes" : "no") << "," << rep.labeled_examined
              << "," << rep.max_count << "," << code << "," << iso_label(code)
              << "\n";
}

int run_search(const SearchOpts& o) {
  if (o.exhaustive != o.local_start.empty())
    throw Error(Errc::InvalidSpec, "choose exactly one of --exhaustive, --local");
  Family fam = o.t3_free ? Family::T3Free : Family::AllOriented;
  SearchReport rep;
  std::string backend;
  if (o.exhaustive) {
    if (o.n < 1) throw Error(Errc::InvalidSpec, "--exhaustive needs --n");
    OrientedGraph target = resolve_graph(o.pattern);
    rep = exhaustive_max(o.n, fam, target, search_backend(o.backend), o.threads);
    backend = o.backend != "auto" ? o.backend : (o.n <= 6 ? "sweep" : "orderly");
  } else {
    OrientedGraph g0 = resolve_graph(o.local_start);
    rep = local_search(g0, fam, MoveSet{}, o.budget);
    backend = "local";
  }
  if (o.format == "csv")
    print_search_csv(rep);
  else
    print_search_text(rep, backend);
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    for (size_t i = 0; i < rep.maximizers.size(); ++i) {
      auto path = std::filesystem::path(o.out_dir) /
                  ("maximizer_" + std::to_string(i + 1) + ".txt");
      write_text_file(path.string(), format_graph_arcs(rep.maximizers[i]));
    }
  }
  return 0;
}

// ----- certify-grid -----

struct GridOpts {
  std::string which, cases_file, emit, lipschitz, format = "text";
  int resolution = 0, slack = 1, threads = 0;
  bool tight = false;
  std::uint64_t budget = 1000000000ULL;
};

int run_certify_grid(const GridOpts& o) {
  std::optional<Rat> lips;
  if (!o.lipschitz.empty()) lips = parse_rat(o.lipschitz);
  std::vector<GridProblem> problems;
  if (o.which == "standard") {
    problems.push_back(standard_problem());
  } else {
    std::vector<CaseDef> cases;
    if (!o.cases_file.empty()) {
      std::ifstream in(o.cases_file);
      if (!in) throw Error(Errc::IoError, "cannot read '" + o.cases_file + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      cases = parse_cases(buf.str());
    } else {
      cases = builtin_cases();
    }
    if (o.which == "all") {
      for (const auto& c : cases) problems.push_back(restricted_case(c.id, cases));
    } else {
      problems.push_back(restricted_case(std::stoi(o.which), cases));
    }
  }
  std::vector<GridCertificate> certs;
  certs.reserve(problems.size());
  for (const auto& p : problems)
    certs.push_back(
        certify(p, o.resolution, o.slack, lips, o.tight, o.threads, o.budget));
  if (o.format == "csv") {
    std::cout << "label,resolution,slack_steps,d,sampled,certified\n";
    for (const auto& c : certs)
      std::cout << c.label << "," << c.resolution << "," << c.slack_steps << ","
                << c.d << "," << rat_str(c.sampled) << ","
                << rat_str(c.certified) << "\n";
  } else {
    for (const auto& c : certs)
      std::cout << c.label << ": sampled=" << human_rat(c.sampled)
                << " certified=" << human_rat(c.certified) << "\n";
  }
  if (!o.emit.empty()) write_text_file(o.emit, format_certificates(certs));
  return 0;
}

// ----- bounds -----

struct BoundsOpts {
  std::string k_range, format = "table";
};

int run_bounds(const BoundsOpts& o) {
  auto [a, b] = parse_range(o.k_range);
  if (a > b) throw Error(Errc::InvalidSpec, "empty range");
  if (b - a >= 1000) throw Error(Errc::InvalidSpec, "range too large");
  std::vector<BoundsRow> rows;
  rows.reserve(b - a + 1);
  for (int k = a; k <= b; ++k) rows.push_back(bounds_row(k));
  std::cout << (o.format == "csv" ? bounds_csv(rows) : bounds_table(rows));
  return 0;
}

// ----- flag -----

struct FlagExportOpts {
  std::string out, bound = "24/125";
  int threads = 0;
};

int run_flag_export(const FlagExportOpts& o) {
  FlagBasis basis = build_basis(o.threads);
  export_sdp(basis, o.out, parse_rat(o.bound));
  int vars = 1;
  std::ostringstream blocks, flags;
  for (int t = 0; t < basis.type_count(); ++t) {
    int s = basis.flag_count(t);
    vars += s * (s + 1) / 2;
    blocks << s << ",";
    flags << (t ? "," : "") << s;
  }
  blocks << "-" << basis.family6.size();
  std::cout << "types=" << basis.type_count() << " flags=" << flags.str()
            << " classes=" << basis.family6.size() << "\n";
  std::cout << "mdim=" << vars << " blockstruct=" << blocks.str() << "\n";
  std::cout << "wrote " << o.out << "\n";
  return 0;
}

struct FlagVerifyOpts {
  std::string cert, bound;
  int threads = 0;
};

int run_flag_verify(const FlagVerifyOpts& o) {
  FlagBasis basis = build_basis(o.threads);
  SdpCertificate cert = load_certificate_dir(o.cert);
  Rat bound = parse_rat(o.bound);
  Verdict v = verify_certificate(basis, cert, bound);
  switch (v.kind) {
    case Verdict::ProvesBound:
      std::cout << "verdict=proves-bound bound=" << rat_str(bound)
                << " max-lhs=" << human_rat(v.max_lhs)
                << " tight=" << v.tight_classes.size() << "\n";
      for (const auto& code : v.tight_classes)
        std::cout << "tight " << code << "\n";
      return 0;
    case Verdict::FailsAtClass:
      std::cout << "verdict=fails-at-class class=" << v.detail
                << " max-lhs=" << human_rat(v.max_lhs) << "\n";
      return 1;
    case Verdict::NotPsd:
      std::cout << "verdict=not-psd detail=" << v.detail << "\n";
      return 1;
  }
  return 1;
}

}  // namespace

// ----- main -----

int main(int argc, char** argv) {
  CLI::App app{"exact induced-subgraph density toolkit for small oriented graphs"};
  app.require_subcommand(1);

  const std::string graph_help =
      "graph: file path, inline compact 'n:<digits>', or named p<k>/c<k>/tt<k>/t3";

  CountOpts co;
  auto* count_cmd = app.add_subcommand("count", "count induced copies of a pattern");
  count_cmd->add_option("--graph", co.graph, graph_help)->required();
  count_cmd->add_option("--pattern", co.pattern, "pattern graph (default p4)");
  count_cmd->add_option("--through", co.through,
                        "comma-separated vertices every counted p4 must contain");
  count_cmd->add_option("--format", co.format, "output format")
      ->check(CLI::IsMember({"text", "csv"}));

  DensityOpts dn;
  auto* density_cmd =
      app.add_subcommand("density", "induced density of a pattern, exact rational");
  density_cmd->add_option("--graph", dn.graph, graph_help)->required();
  density_cmd->add_option("--pattern", dn.pattern, "pattern graph (default p4)");
  density_cmd->add_option("--format", dn.format, "output format")
      ->check(CLI::IsMember({"text", "csv"}));

  EnumerateOpts en;
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "list all isomorphism classes on n vertices");
  enum_cmd->add_option("--n", en.n, "vertex count")->required();
  enum_cmd->add_flag("--t3-free", en.t3_free,
                     "restrict to graphs with no transitive triangle");
  enum_cmd->add_option("--format", en.format, "output format")
      ->check(CLI::IsMember({"compact", "arcs", "csv"}));
  enum_cmd->add_option("--backend", en.backend, "generation backend")
      ->check(CLI::IsMember({"auto", "sweep", "orderly"}));
  enum_cmd->add_option("--threads", en.threads,
                       "worker count (0 = INDPATH_THREADS or hardware)");

  ConstructOpts cn;
  auto* construct_cmd =
      app.add_subcommand("construct", "emit blow-up constructions as graph files");
  construct_cmd->add_option("--base", cn.base, "base graph: c5, ck:<k> or path:<k>")
      ->required();
  construct_cmd->add_option("--n", cn.n, "total vertices of the blow-up");
  construct_cmd->add_flag("--iterated", cn.iterated,
                          "recurse the balanced blow-up inside every class");
  construct_cmd->add_option("--sizes", cn.sizes,
                            "explicit part sizes, comma-separated");
  construct_cmd->add_option("--format", cn.format, "output format")
      ->check(CLI::IsMember({"arcs", "compact"}));
  construct_cmd->add_option("--out", cn.out, "write to file instead of stdout");

  SearchOpts se;
  auto* search_cmd = app.add_subcommand(
      "search", "maximize induced-copy counts over a graph family");
  search_cmd->add_option("--n", se.n, "vertex count (exhaustive mode)");
  search_cmd->add_flag("--t3-free", se.t3_free,
                       "restrict to graphs with no transitive triangle");
  search_cmd->add_flag("--exhaustive", se.exhaustive,
                       "exact maximum over the whole family");
  search_cmd->add_option("--local", se.local_start,
                         "hill-climb from this start graph");
  search_cmd->add_option("--pattern", se.pattern,
                         "pattern to maximize (default p4)");
  search_cmd->add_option("--budget", se.budget,
                         "move-evaluation budget for --local");
  search_cmd->add_option("--backend", se.backend, "exhaustive backend")
      ->check(CLI::IsMember({"auto", "sweep", "orderly"}));
  search_cmd->add_option("--out-dir", se.out_dir,
                         "write maximizer graph files into this directory");
  search_cmd->add_option("--format", se.format, "output format")
      ->check(CLI::IsMember({"text", "csv"}));
  search_cmd->add_option("--threads", se.threads,
                         "worker count (0 = INDPATH_THREADS or hardware)");

  GridOpts gr;
  auto* grid_cmd = app.add_subcommand(
      "certify-grid", "certified grid maximization of the kernel programs");
  grid_cmd->add_option("--case", gr.which, "kernel to certify")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "4", "all", "standard"}));
  grid_cmd->add_option("--resolution", gr.resolution, "grid steps per axis")
      ->required();
  grid_cmd->add_option("--slack", gr.slack,
                       "per-constraint slack in grid steps (default 1)");
  grid_cmd->add_option("--lipschitz", gr.lipschitz,
                       "override the derivative bound L (rational)");
  grid_cmd->add_flag("--tight", gr.tight,
                     "use the symbolic per-problem derivative bound");
  grid_cmd->add_option("--cases-file", gr.cases_file,
                       "read case definitions from this file");
  grid_cmd->add_option("--emit-certificate", gr.emit,
                       "write the full certificate blocks to this file");
  grid_cmd->add_option("--budget", gr.budget,
                       "max grid evaluations (default 1e9)");
  grid_cmd->add_option("--format", gr.format, "output format")
      ->check(CLI::IsMember({"text", "csv"}));
  grid_cmd->add_option("--threads", gr.threads,
                       "worker count (0 = INDPATH_THREADS or hardware)");

  BoundsOpts bo;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "closed-form bound table for directed k-paths");
  bounds_cmd->add_option("--k-range", bo.k_range, "k range 'a..b' or single k")
      ->required();
  bounds_cmd->add_option("--format", bo.format, "output format")
      ->check(CLI::IsMember({"table", "csv"}));

  auto* flag_cmd =
      app.add_subcommand("flag", "flag-algebra SDP export and verification");
  flag_cmd->require_subcommand(1);
  FlagExportOpts fe;
  auto* flag_export_cmd =
      flag_cmd->add_subcommand("export", "write the SDP in sparse block format");
  flag_export_cmd->add_option("--out", fe.out, "output path")->required();
  flag_export_cmd->add_option("--bound", fe.bound,
                              "claimed bound for the header comment");
  flag_export_cmd->add_option("--threads", fe.threads,
                              "worker count (0 = INDPATH_THREADS or hardware)");
  FlagVerifyOpts fv;
  auto* flag_verify_cmd = flag_cmd->add_subcommand(
      "verify", "check a rational certificate against a claimed bound");
  flag_verify_cmd->add_option("--cert", fv.cert, "certificate directory")
      ->required();
  flag_verify_cmd->add_option("--bound", fv.bound, "claimed bound (rational)")
      ->required();
  flag_verify_cmd->add_option("--threads", fv.threads,
                              "worker count (0 = INDPATH_THREADS or hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*count_cmd) return run_count(co);
    if (*density_cmd) return run_density(dn);
    if (*enum_cmd) return run_enumerate(en);
    if (*construct_cmd) return run_construct(cn);
    if (*search_cmd) return run_search(se);
    if (*grid_cmd) return run_certify_grid(gr);
    if (*bounds_cmd) return run_bounds(bo);
    if (*flag_export_cmd) return run_flag_export(fe);
    if (*flag_verify_cmd) return run_flag_verify(fv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_validation_error(e.code) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
