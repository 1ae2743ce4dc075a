#include "oaparity/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "oaparity/classes.hpp"
#include "oaparity/constructions.hpp"
#include "oaparity/ensemble.hpp"
#include "oaparity/graphs.hpp"
#include "oaparity/io.hpp"
#include "oaparity/search.hpp"

namespace oaparity::cli {

namespace {

constexpr const char* kBudgetEnv = "OAPARITY_ORBIT_BUDGET";

OrbitOptions orbit_options() {
  OrbitOptions o;
  if (const char* env = std::getenv(kBudgetEnv)) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw DomainError(std::string(kBudgetEnv) + " must be a positive byte count");
    o.memory_budget_bytes = static_cast<std::size_t>(v);
  }
  return o;
}

std::string join(const std::vector<int>& v, int shift = 1, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i] + shift);
  return s;
}

std::string shape(const OrthogonalArray& a) {
  return "OA(" + std::to_string(a.columns()) + "," + std::to_string(a.order()) + ")";
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// validate ---------------------------------------------------------------

void cmd_validate(const std::string& file, bool json, std::ostream& out) {
  const ArrayInput in = read_array(file);
  const auto& a = in.array;
  if (json) {
    Json j{{"valid", true}, {"k", a.columns()}, {"n", a.order()}};
    if (in.from_latin_square) j["latin_square"] = true;
    print_json(out, j);
    return;
  }
  if (in.from_latin_square) out << "LS(" << a.order() << ") valid\n";
  else out << shape(a) << " valid\n";
}

// parity -----------------------------------------------------------------

void cmd_parity(const std::string& file, bool json, std::ostream& out) {
  const OrthogonalArray a = read_array(file).array;
  const TauVector t = tau_parity(a);
  if (json) {
    print_json(out, parity_report_json(t));
    return;
  }
  const int k = a.columns();
  const auto report = check_plausible(t);
  out << shape(a) << '\n' << "tau:\n";
  for (int c = 0; c < k; ++c) {
    out << "  c=" << c + 1 << ':';
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (i != c && j != c) out << " (" << i + 1 << ',' << j + 1 << ")=" << int{t.get(c, i, j)};
    out << '\n';
  }
  if (report.plausible) {
    const StandardSigma s = sigma_from_tau(t);
    out << "sigma_standard:\n";
    for (int i = 0; i < k; ++i) {
      out << "  " << std::setw(2) << i + 1 << ':';
      for (int j = 0; j < k; ++j) out << ' ' << (j <= i ? "." : std::to_string(s.upper(i, j)));
      out << '\n';
    }
  }
  out << "plausible: " << (report.plausible ? "yes" : "no") << '\n';
  out << "pp_plausible: " << to_string(report.pp_plausible) << '\n';
}

// graphs -----------------------------------------------------------------

void cmd_graphs(const std::string& file, bool json, bool dot, std::ostream& out) {
  const OrthogonalArray a = read_array(file).array;
  const TauVector t = tau_parity(a);
  const SigmaMatrix sigma = standard_form(sigma_parity(a)).to_matrix();
  if (dot) {
    for (int c = 0; c < t.columns(); ++c) out << to_dot(tau_graph(t, c), "G" + std::to_string(c + 1));
    out << to_dot(stack_graph(t), "stack");
    out << to_dot(sigma_graph_of(sigma), "sigma");
    return;
  }
  const auto decomposition = tau_graphs(t);
  const auto st = stack(t);
  const auto sg = sigma_graph(sigma);
  const char* stack_kind = st.shape == StackShape::CompleteBipartite ? "complete-bipartite" : "union-of-cliques";
  if (json) {
    Json tau = Json::array();
    for (const auto& d : decomposition) {
      std::vector<int> s1, s2;
      for (int v : d.side1) s1.push_back(v + 1);
      for (int v : d.side2) s2.push_back(v + 1);
      tau.push_back(Json{{"column", d.isolated + 1}, {"side1", s1}, {"side2", s2}});
    }
    std::vector<int> p1, p2;
    for (int v : st.part1) p1.push_back(v + 1);
    for (int v : st.part2) p2.push_back(v + 1);
    Json stack_json{{"shape", stack_kind}, {"part1", p1}, {"part2", p2}};
    if (st.plane_shape) stack_json["plane_shape"] = *st.plane_shape == PlaneStackShape::Empty ? "empty" : "complete";
    Json sigma_json{{"oriented", sg.oriented},
                    {"out_degrees", sg.out_degrees},
                    {"in_degrees", sg.in_degrees},
                    {"out_parity", to_string(sg.out_parity)},
                    {"in_parity", to_string(sg.in_parity)}};
    if (sg.plane_degree_law) sigma_json["plane_degree_law"] = *sg.plane_degree_law;
    print_json(out, Json{{"tau_graphs", tau}, {"stack", stack_json}, {"sigma_graph", sigma_json}});
    return;
  }
  out << shape(a) << '\n';
  for (const auto& d : decomposition) {
    out << "G_" << d.isolated + 1 << ": K1 + K(" << d.side1.size() << ',' << d.side2.size() << ") {" << join(d.side1)
        << "} {" << join(d.side2) << "}\n";
  }
  out << "stack: " << stack_kind << " {" << join(st.part1) << "} {" << join(st.part2) << "}";
  if (st.plane_shape) out << ", " << (*st.plane_shape == PlaneStackShape::Empty ? "empty" : "complete");
  out << '\n';
  out << "sigma graph: " << (sg.oriented ? "tournament" : "graph") << ", out-degrees " << join(sg.out_degrees, 0, " ")
      << " (" << to_string(sg.out_parity) << "), in-degrees " << join(sg.in_degrees, 0, " ") << " ("
      << to_string(sg.in_parity) << ")";
  if (sg.plane_degree_law) out << ", degree law " << (*sg.plane_degree_law ? "holds" : "fails");
  out << '\n';
}

// class / enumerate ------------------------------------------------------

void cmd_class(const std::string& file, bool json, std::ostream& out) {
  const OrthogonalArray a = read_array(file).array;
  const OrbitSummary o = class_of_oa(a, orbit_options());
  const std::uint64_t group = switching_group_order(a.columns(), mod4(a.order()));
  if (json) {
    Json j = orbit_to_json(o);
    j["group_order"] = group;
    print_json(out, j);
    return;
  }
  out << shape(a) << '\n'
      << "orbit size " << o.size << " (group order " << group << ")\n"
      << "canonical state " << hex(o.canonical.bits) << '\n';
}

void cmd_enumerate(int k, int nmod4, bool json, std::ostream& out) {
  const ClassTable t = enumerate_classes(k, nmod4);
  if (json) {
    print_json(out, class_table_to_json(t));
    return;
  }
  out << t.total_classes << " classes: ";
  for (std::size_t i = 0; i < t.entries.size(); ++i) out << (i ? ", " : "") << t.entries[i].first;
  out << '\n' << std::setw(10) << "size" << std::setw(10) << "count" << '\n';
  for (const auto& [size, count] : t.entries) out << std::setw(10) << size << std::setw(10) << count << '\n';
}

// construct --------------------------------------------------------------

void emit_oa(const OrthogonalArray& a, int base, bool json, Json extra, const std::string& comment, std::ostream& out) {
  if (json) {
    Json j = oa_to_json(a, base);
    for (auto& [key, value] : extra.items()) j[key] = value;
    print_json(out, j);
    return;
  }
  if (!comment.empty()) out << "# " << comment << '\n';
  out << format_oa_text(a, base);
}

void cmd_desarguesian(int q, bool emit_mols, int base, bool json, std::ostream& out) {
  if (emit_mols) {
    const CatalogueEntry e{"desarguesian-" + std::to_string(q), linear_mols_squares(q), "GF(" + std::to_string(q) + ")"};
    if (json) {
      Json squares = Json::array();
      for (const auto& s : e.squares) squares.push_back(ls_to_json(s, base));
      print_json(out, Json{{"format", "molsset"}, {"label", e.label}, {"n", q}, {"squares", squares}});
    } else {
      out << format_catalogue_entry(e, base);
    }
    return;
  }
  emit_oa(linear_mols(q), base, json, Json::object(), "", out);
}

void cmd_thm45(int n, const std::string& pattern_name, int a, int base, bool json, std::ostream& out) {
  const ResiduePattern pattern = residue_pattern_from_string(pattern_name);
  if (a < 0) a = qualifying_offsets(n, pattern).front();
  const OrthogonalArray oa = thm45_oa(n, pattern, a);
  emit_oa(oa, base, json, Json{{"pattern", to_string(pattern)}, {"a", a}},
          "pattern " + to_string(pattern) + ", a = " + std::to_string(a), out);
}

void cmd_sigma(const std::string& kind, int n, int k, std::uint64_t seed, bool json, std::ostream& out) {
  SigmaMatrix m(2, 2);
  std::string comment;
  if (kind == "block") {
    m = block_sigma(n);
  } else if (kind == "circulant") {
    m = circulant_sigma(n).to_matrix();
  } else if (kind == "lower-triangular") {
    m = lower_triangular_sigma(k > 0 ? k : n + 1, n);
  } else if (kind == "pp-random") {
    std::mt19937_64 rng(seed);
    std::vector<Bit> bits(static_cast<std::size_t>(pp_free_bit_count(n)));
    for (auto& b : bits) b = static_cast<Bit>(rng() & 1);
    m = pp_plausible_sigma(n, bits).to_matrix();
    comment = "seed " + std::to_string(seed);
  } else {
    throw CLI::ValidationError("--kind", "must be block, circulant, lower-triangular or pp-random");
  }
  if (json) {
    Json j = sigma_to_json(m);
    j["kind"] = kind;
    if (kind == "pp-random") j["seed"] = seed;
    print_json(out, j);
    return;
  }
  if (!comment.empty()) out << "# " << comment << '\n';
  out << format_sigma_text(m);
}

// ensemble ---------------------------------------------------------------

void cmd_ensemble(const std::string& file, bool tau_input, bool json, std::ostream& out) {
  EnsembleCensus c = tau_input ? ensemble_census(parse_parity(read_file(file))) : ensemble_census(read_array(file).array);
  const Section6Report r = check_section6(c);
  if (json) {
    Json j = census_to_json(c);
    j["checks"] = section6_to_json(r);
    print_json(out, j);
    return;
  }
  out << "k " << c.k << ", n " << c.n << '\n' << "types:";
  for (int code = 0; code < 8; ++code) {
    if (c.type_counts[static_cast<std::size_t>(code)]) out << ' ' << ParityTriple::from_code(code).label() << '=' << c.type_counts[static_cast<std::size_t>(code)];
  }
  out << '\n' << "x " << c.x << ", T " << c.T << '\n' << "mu " << join(c.mu, 0, " ") << '\n';
  for (const auto& check : r.checks) out << (check.passed ? "pass " : "FAIL ") << check.name << ": " << check.detail << '\n';
}

// search -----------------------------------------------------------------

void cmd_search_latin(int n, const std::string& type, bool json, std::ostream& out) {
  std::array<std::uint64_t, 8> counts{};
  const std::uint64_t total = enumerate_latin_squares(n, [&](const LatinSquare& s) {
    ++counts[static_cast<std::size_t>(latin_square_parities(s).code())];
    return true;
  });
  std::optional<ParityTriple> wanted;
  if (!type.empty()) wanted = ParityTriple::from_label(type);
  if (json) {
    Json by_type = Json::object();
    for (int code = 0; code < 8; ++code)
      if (counts[static_cast<std::size_t>(code)]) by_type[ParityTriple::from_code(code).label()] = counts[static_cast<std::size_t>(code)];
    Json j{{"n", n}, {"squares", total}, {"types", by_type}};
    if (wanted) j["matching"] = counts[static_cast<std::size_t>(wanted->code())];
    print_json(out, j);
    return;
  }
  out << "n " << n << ": " << total << " Latin squares\n";
  for (int code = 0; code < 8; ++code)
    if (counts[static_cast<std::size_t>(code)]) out << "  " << ParityTriple::from_code(code).label() << ' ' << counts[static_cast<std::size_t>(code)] << '\n';
  if (wanted) out << "type " << wanted->label() << ": " << counts[static_cast<std::size_t>(wanted->code())] << '\n';
}

struct OaSearchArgs {
  int k = 3, n = 2;
  std::string target_file, type;
  bool exhaustive = false;
  std::optional<std::uint64_t> seed;
  int restarts = 8;
  std::uint64_t budget = 50'000'000;
};

void cmd_search_oa(const OaSearchArgs& args, bool json, std::ostream& out) {
  SearchSpec spec;
  spec.k = args.k;
  spec.n = args.n;
  if (!args.target_file.empty()) spec.target = parse_parity(read_file(args.target_file));
  if (!args.type.empty()) spec.target_types.push_back(ParityTriple::from_label(args.type));
  spec.node_budget = args.budget;
  spec.restarts = args.restarts;
  if (args.exhaustive) spec.mode = SearchMode::Exhaustive;
  else if (args.seed) {
    spec.mode = SearchMode::Randomized;
    spec.seed = *args.seed;
  }
  const SearchResult r = find_oa_with_parity(spec);
  if (json) {
    Json j{{"outcome", to_string(r.outcome)}, {"nodes", r.nodes}};
    if (args.seed) j["seed"] = *args.seed;
    if (r.array) j["array"] = oa_to_json(*r.array);
    print_json(out, j);
  } else {
    out << "# outcome " << to_string(r.outcome) << ", nodes " << r.nodes;
    if (args.seed) out << ", seed " << *args.seed;
    out << '\n';
    if (r.array) out << format_oa_text(*r.array);
  }
  if (r.outcome == SearchOutcome::BudgetExceeded) throw ResourceError("search budget exhausted without a result");
}

// ingest -----------------------------------------------------------------

void cmd_ingest(const std::string& file, bool json, std::ostream& out) {
  const auto entries = ingest_catalogue(file);
  Json list = Json::array();
  for (const auto& e : entries) {
    const OrthogonalArray a = mols_to_oa(e.squares);
    Json j{{"label", e.label}, {"n", a.order()}, {"squares", e.squares.size()}};
    if (!e.note.empty()) j["note"] = e.note;
    if (a.columns() <= kMaxStateColumns) j["class_size"] = class_of_oa(a, orbit_options()).size;
    j["equiparity"] = ensemble_census(a).x;
    list.push_back(std::move(j));
  }
  if (json) {
    print_json(out, Json{{"entries", list}});
    return;
  }
  out << list.size() << (list.size() == 1 ? " entry" : " entries") << '\n';
  for (const auto& j : list) {
    out << "set " << j["label"].get<std::string>() << ": n " << j["n"] << ", " << j["squares"] << " squares";
    if (j.contains("class_size")) out << ", class size " << j["class_size"];
    out << ", equiparity " << j["equiparity"] << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parity of orthogonal arrays and mutually orthogonal Latin squares", "oaparity"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON");

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check an OA or Latin square file");
  validate->add_option("file", file)->required();
  auto* parity = app.add_subcommand("parity", "tau and standardised sigma parity of an OA");
  parity->add_option("file", file)->required();
  bool dot = false;
  auto* graphs = app.add_subcommand("graphs", "tau graphs, stack and sigma graph");
  graphs->add_option("file", file)->required();
  graphs->add_flag("--dot", dot, "Emit Graphviz DOT");
  auto* klass = app.add_subcommand("class", "Switching class of an OA");
  klass->add_option("file", file)->required();

  int k = 0, nmod4 = 0;
  auto* enumerate = app.add_subcommand("enumerate", "All switching classes for k and n mod 4");
  enumerate->add_option("--k", k)->required()->check(CLI::Range(3, 8));
  enumerate->add_option("--nmod4", nmod4)->required()->check(CLI::Range(0, 3));

  auto* construct = app.add_subcommand("construct", "Explicit constructions");
  construct->require_subcommand(1);
  int q = 0, n = 0, a = -1, base = 0, sigma_k = 0;
  bool emit_mols = false;
  std::string pattern, kind;
  std::uint64_t seed = 0;
  auto* desarguesian = construct->add_subcommand("desarguesian", "OA(q+1,q) over GF(q)");
  desarguesian->add_option("--q", q)->required();
  desarguesian->add_flag("--emit-mols", emit_mols, "Emit the squares as a catalogue entry");
  desarguesian->add_option("--base", base)->check(CLI::Range(0, 1));
  auto* thm45 = construct->add_subcommand("thm45", "OA(5,n) from L_a, L_a^2, L_a^3");
  thm45->add_option("--n", n)->required();
  thm45->add_option("--pattern", pattern)->required()->check(CLI::IsMember({"nnn", "rnr"}, CLI::ignore_case));
  thm45->add_option("--a", a, "Offset (default: least qualifying)");
  thm45->add_option("--base", base)->check(CLI::Range(0, 1));
  auto* sigma = construct->add_subcommand("sigma", "Special sigma matrices");
  sigma->add_option("--kind", kind)->required()->check(CLI::IsMember({"block", "circulant", "lower-triangular", "pp-random"}));
  sigma->add_option("--n", n)->required();
  sigma->add_option("--seed", seed);
  sigma->add_option("--k", sigma_k, "Columns for lower-triangular (default n+1)");

  bool tau_input = false;
  auto* ensemble = app.add_subcommand("ensemble", "Parity census of the ensemble");
  ensemble->add_option("file", file)->required();
  ensemble->add_flag("--tau", tau_input, "Input is a sigma or tau parity rather than an OA");

  auto* search = app.add_subcommand("search", "Exhaustive and backtracking searches");
  search->require_subcommand(1);
  std::string type;
  auto* latin = search->add_subcommand("latin", "Parity types of all Latin squares of order n");
  latin->add_option("--n", n)->required()->check(CLI::Range(1, kMaxEnumerationOrder));
  latin->add_option("--type", type);
  OaSearchArgs sargs;
  auto* oa = search->add_subcommand("oa", "OA(k,n) with a prescribed parity");
  oa->add_option("--k", sargs.k)->required();
  oa->add_option("--n", sargs.n)->required();
  auto* target_opt = oa->add_option("--target", sargs.target_file, "tau or sigma JSON");
  auto* type_opt = oa->add_option("--type", sargs.type, "Parity type for k = 3");
  target_opt->excludes(type_opt);
  oa->add_flag("--exhaustive", sargs.exhaustive);
  auto* seed_opt = oa->add_option("--seed", sargs.seed, "Randomized search with this seed");
  oa->add_option("--restarts", sargs.restarts);
  oa->add_option("--budget", sargs.budget, "Node budget");
  seed_opt->excludes("--exhaustive");

  auto* ingest = app.add_subcommand("ingest", "Validate and classify a MOLS catalogue");
  ingest->add_option("file", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) cmd_validate(file, json, out);
    else if (*parity) cmd_parity(file, json, out);
    else if (*graphs) cmd_graphs(file, json, dot, out);
    else if (*klass) cmd_class(file, json, out);
    else if (*enumerate) cmd_enumerate(k, nmod4, json, out);
    else if (*desarguesian) cmd_desarguesian(q, emit_mols, base, json, out);
    else if (*thm45) cmd_thm45(n, pattern, a, base, json, out);
    else if (*sigma) cmd_sigma(kind, n, sigma_k, seed, json, out);
    else if (*ensemble) cmd_ensemble(file, tau_input, json, out);
    else if (*latin) cmd_search_latin(n, type, json, out);
    else if (*oa) cmd_search_oa(sargs, json, out);
    else if (*ingest) cmd_ingest(file, json, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace oaparity::cli
