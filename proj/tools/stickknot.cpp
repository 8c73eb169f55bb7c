// stickknot: knotted Hamiltonian cycles of linearly embedded K6 / K7.
//
// Exit codes: 0 success, 2 usage or parse error, 3 invalid geometry,
// 4 bound violation.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stickknot/stickknot.hpp"

namespace {

using namespace stickknot;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitBound = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Configuration load(const std::string& path) {
  const ConfigFile file = parse_config_text(read_file(path));
  return Configuration(file.points);
}

std::vector<Verdict> all_verdicts(const CensusReport& r) {
  auto vs = verify_bounds(r);
  auto cs = verify_consistency(r);
  vs.insert(vs.end(), cs.begin(), cs.end());
  if (r.n == 7) {
    auto ls = verify_lemma_bounds(r);
    vs.insert(vs.end(), ls.begin(), ls.end());
  }
  return vs;
}

int cmd_check(const std::string& path, const std::string& format) {
  const Configuration c = load(path);
  const CensusReport r = run_census(c);
  const auto verdicts = all_verdicts(r);
  const bool ok = all_passed(verdicts);
  if (format == "json")
    std::cout << report_json(r, verdicts).dump(2) << "\n";
  else
    std::cout << report_text(r, verdicts);
  if (!ok) {
    std::cerr << "bound violation; counterexample configuration:\n" << format_config(c);
    return kExitBound;
  }
  return kExitOk;
}

int cmd_tables(const std::string& path, const std::string& cycle_text, const std::string& format) {
  const Configuration c = load(path);
  if (c.size() != 7) throw UsageError("tables needs a 7-point configuration");
  Cycle cycle;
  try {
    cycle = Cycle::parse(cycle_text);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("malformed cycle: ") + e.what());
  }
  const auto& seq = cycle.vertices();
  if (seq.size() != 7 || *std::max_element(seq.begin(), seq.end()) != 7)
    throw UsageError("cycle must be a Hamiltonian cycle on labels 1..7");

  const EpsilonCache eps(c);
  const auto matches = all_table_matches(eps, cycle);
  const long long det = knot_determinant(project(c, cycle, generic_direction(c, cycle)));

  if (format == "json") {
    ordered_json j;
    j["cycle"] = cycle.to_string();
    j["determinant"] = det;
    j["class"] = to_string(class_from_determinant(det));
    ordered_json arr = ordered_json::array();
    for (const auto& m : matches) {
      const EpsilonTable t = build_table(eps, m.labeling);
      std::string cells;
      for (Sign s : t.cells) cells += sign_char(s);
      arr.push_back({{"labeling", labeling_string(m.labeling)},
                     {"type", to_string(m.type)},
                     {"s", std::string(1, sign_char(m.s))},
                     {"cells", cells}});
    }
    j["matches"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "cycle <" << cycle.to_string() << "> determinant " << det << " ("
            << to_string(class_from_determinant(det)) << ")\n";
  if (matches.empty()) {
    std::cout << "no match\n";
    return kExitOk;
  }
  for (const auto& m : matches) {
    std::cout << "\n" << format_table(build_table(eps, m.labeling));
    std::cout << "type " << to_string(m.type) << " s=" << sign_char(m.s) << "\n";
  }
  return kExitOk;
}

int cmd_triples(const std::string& path) {
  const Configuration c = load(path);
  for (const auto& t : trivial_triples(c)) {
    const auto& v = t.vertices();
    std::cout << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  }
  return kExitOk;
}

int cmd_search(const SearchParams& params, const std::string& out_path, const std::string& format) {
  const SearchResult res = search_max_fig8(params);
  const CensusReport r = run_census(res.best);
  std::vector<std::string> header{
      "witness produced by: stickknot search",
      "seed " + std::to_string(params.seed) + " budget " + std::to_string(params.budget) + " bound " +
          std::to_string(params.bound),
      "evaluations " + std::to_string(res.evaluations) + " restarts " + std::to_string(res.restarts),
      "figure8 " + std::to_string(r.figure8) + " trefoil " + std::to_string(r.trefoil)};
  std::string f8;
  for (const auto* rec : r.of_class(KnotClass::FigureEight)) f8 += " <" + rec->cycle.to_string() + ">";
  if (!f8.empty()) header.push_back("figure8 cycles" + f8);
  if (!out_path.empty()) write_file(out_path, format_config(res.best, header));

  if (format == "json") {
    ordered_json j;
    j["seed"] = params.seed;
    j["budget"] = params.budget;
    j["bound"] = params.bound;
    j["evaluations"] = res.evaluations;
    j["restarts"] = res.restarts;
    j["figure8"] = r.figure8;
    j["trefoil"] = r.trefoil;
    ordered_json cycles = ordered_json::array();
    for (const auto* rec : r.of_class(KnotClass::FigureEight)) cycles.push_back(rec->cycle.to_string());
    j["figure8_cycles"] = std::move(cycles);
    j["configuration"] = format_config(res.best);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& line : header) std::cout << line << "\n";
    std::cout << format_config(res.best);
  }
  return all_passed(verify_bounds(r)) ? kExitOk : kExitBound;
}

int cmd_batch(std::size_t count, std::uint64_t seed, long long bound, std::size_t n, const std::string& format) {
  if (n != 6 && n != 7) throw UsageError("--n must be 6 or 7");
  bool ok = true;
  ordered_json rows = ordered_json::array();
  if (format == "csv") std::cout << csv_header() << "\n";
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(seed, i);
    const CensusReport r = run_census(random_configuration(s, bound, n));
    const auto verdicts = all_verdicts(r);
    ok = ok && all_passed(verdicts);
    if (format == "csv")
      std::cout << csv_row(i, s, r, verdicts) << "\n";
    else
      rows.push_back({{"index", i}, {"seed", s}, {"report", report_json(r, verdicts)}});
  }
  if (format != "csv") std::cout << rows.dump(2) << "\n";
  return ok ? kExitOk : kExitBound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knotted Hamiltonian cycles in linear embeddings of K6 and K7"};
  app.require_subcommand(1);

  std::string path, cycle_text, out_path;
  std::string format = "text";
  SearchParams sp;
  std::size_t count = 1000, n = 7;
  std::uint64_t batch_seed = 1;
  long long batch_bound = 100;

  auto* check = app.add_subcommand("check", "classify every Hamiltonian cycle and verify the bounds");
  check->add_option("path", path, "configuration file")->required();
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* tables = app.add_subcommand("tables", "epsilon tables of a heptagon and its matched type");
  tables->add_option("path", path, "configuration file")->required();
  tables->add_option("cycle", cycle_text, "cycle such as 1234567")->required();
  tables->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* triples = app.add_subcommand("triples", "list trivial triples");
  triples->add_option("path", path, "configuration file")->required();

  auto* search = app.add_subcommand("search", "hill-climb for configurations with three figure-8 cycles");
  search->add_option("--budget", sp.budget, "census evaluations")->check(CLI::PositiveNumber);
  search->add_option("--seed", sp.seed);
  search->add_option("--bound", sp.bound, "coordinate bound")->check(CLI::Range(4LL, 1LL << 20));
  search->add_option("--out", out_path, "witness file to write");
  search->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* batch = app.add_subcommand("batch", "census summary for many random configurations");
  batch->add_option("--count", count);
  batch->add_option("--seed", batch_seed);
  batch->add_option("--bound", batch_bound)->check(CLI::Range(4LL, 1LL << 20));
  batch->add_option("--n", n, "6 or 7");
  std::string batch_format = "csv";
  batch->add_option("--format", batch_format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_check(path, format);
    if (*tables) return cmd_tables(path, cycle_text, format);
    if (*triples) return cmd_triples(path);
    if (*search) return cmd_search(sp, out_path, format);
    if (*batch) return cmd_batch(count, batch_seed, batch_bound, n, batch_format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegeneracyError& e) {
    std::cerr << "invalid geometry: " << e.what() << "\n";
    return kExitGeometry;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InconsistencyError& e) {
    std::cerr << "bound violation: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
