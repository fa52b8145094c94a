// dissoc: command-line front end for dissociation set counting on trees.
//
// Exit codes: 0 success / verified, 1 violation found, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dissoc/dissoc.hpp"
#include "dissoc/report_json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_analyze(const std::string& file, bool profiles) {
  const dissoc::Tree t = dissoc::parse_edge_list(read_input(file));
  const dissoc::DpTable table = dissoc::dp_rooted(t, 0);
  nlohmann::json out{{"n", t.order()}, {"psi", table.psi()}, {"phi", table.phi()}};
  if (profiles) {
    out["profiles"] = nlohmann::json::array();
    for (const auto& p : dissoc::all_vertex_profiles(t)) {
      out["profiles"].push_back({{"phi_in", p.phi_in},
                                 {"phi_out", p.phi_out},
                                 {"phi_in_deg0", p.phi_in_deg0},
                                 {"phi_in_deg1", p.phi_in_deg1}});
    }
  }
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int run_enumerate(const std::string& file, std::optional<std::size_t> limit) {
  const dissoc::Tree t = dissoc::parse_edge_list(read_input(file));
  const auto result = dissoc::enumerate_max_dissoc(t, limit);
  for (const auto& s : result.sets) {
    const auto& m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i) std::cout << (i ? " " : "") << m[i];
    std::cout << '\n';
  }
  if (result.truncated) std::cout << "# truncated\n";
  return kExitOk;
}

int run_gen_trees(int n, int max_order) {
  bool first = true;
  dissoc::for_each_free_tree(
      n,
      [&](const dissoc::Tree& t) {
        if (!first) std::cout << '\n';
        first = false;
        std::cout << dissoc::serialize_edge_list(t) << '\n';
      },
      max_order);
  return kExitOk;
}

void print_summary(const dissoc::VerificationReport& r) {
  std::cout << r.check_name << ":";
  for (const auto& [k, v] : r.params) std::cout << ' ' << k << '=' << v;
  std::cout << '\n'
            << "  instances checked:  " << r.instances_checked << '\n'
            << "  violations:         " << r.violations.size() << '\n'
            << "  equality witnesses: " << r.equality_witnesses.size() << '\n';
  for (const auto& m : r.remarks) {
    std::cout << "  " << m.label << ':';
    for (const auto& [k, v] : m.values) std::cout << ' ' << k << '=' << v;
    std::cout << '\n';
  }
  constexpr std::size_t kShown = 5;
  for (std::size_t i = 0; i < r.violations.size() && i < kShown; ++i) {
    const auto& v = r.violations[i];
    std::cout << "  violated " << v.assertion << " on tree:\n";
    std::istringstream lines(v.tree);
    for (std::string line; std::getline(lines, line);) std::cout << "    " << line << '\n';
  }
  if (r.violations.size() > kShown) std::cout << "  ... " << r.violations.size() - kShown << " more\n";
  std::cout << "  elapsed: " << r.elapsed.count() << " ms\n"
            << "  result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
}

int finish_verify(const dissoc::VerificationReport& r, const std::string& json_path) {
  print_summary(r);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw InputError("cannot write " + json_path);
    out << dissoc::to_json(r).dump(2) << '\n';
  }
  return r.passed() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum dissociation sets in trees: counting, enumeration and exhaustive verification"};
  app.require_subcommand(1);

  std::string file;
  bool profiles = false;
  std::optional<std::size_t> limit;
  int k = 0, centers = 0, j = 0, n = 0;
  int max_order = dissoc::kDefaultMaxTreeOrder;
  int max_n = 10, max_k = 5, max_j = 5, max_x = 60;
  unsigned workers = 0;
  std::string json_path;

  auto* analyze = app.add_subcommand("analyze", "psi, Phi and optional per-vertex profiles as JSON");
  analyze->add_option("FILE", file, "edge-list file, or - for stdin")->required();
  analyze->add_flag("--profiles", profiles, "include per-vertex counts");

  auto* enumerate = app.add_subcommand("enumerate", "list all maximum dissociation sets");
  enumerate->add_option("FILE", file, "edge-list file, or - for stdin")->required();
  enumerate->add_option("--limit", limit, "stop after L sets");

  auto* gen_family = app.add_subcommand("gen-family", "emit a member of T1 or T2 (distinguished vertex 0)");
  gen_family->require_subcommand(1);
  auto* t1 = gen_family->add_subcommand("t1", "T1(k, centers), order 3k+4");
  t1->add_option("--k", k, "attached P3 copies")->required();
  t1->add_option("--centers", centers, "copies joined at their middle vertex")->default_val(0);
  auto* t2 = gen_family->add_subcommand("t2", "T2(j), order 3j+3");
  t2->add_option("--j", j, "attached P3 copies")->required();

  auto* gen_trees = app.add_subcommand("gen-trees", "all free trees of order N as blank-line separated edge lists");
  gen_trees->add_option("--n", n, "tree order")->required();
  gen_trees->add_option("--max-order", max_order, "override the generation cap")->default_val(max_order);

  auto* verify = app.add_subcommand("verify", "exhaustive checks; exit 1 if a violation is found");
  verify->require_subcommand(1);
  verify->add_option("--json", json_path, "write the full report as JSON");
  verify->add_option("--workers", workers, "worker threads (0: all cores)")->default_val(0);
  auto* v_theorem = verify->add_subcommand("theorem", "Phi <= f(psi) with equality exactly on T1/T2");
  auto* v_phibar = verify->add_subcommand("phibar", "Phi_v-bar <= g(psi) for every vertex");
  auto* v_families = verify->add_subcommand("families", "family statistics for T1(k, c) and T2(j)");
  auto* v_fmono = verify->add_subcommand("fmono", "f(x) < f(x+m) for m >= 2");
  auto* v_duality = verify->add_subcommand("duality", "dissociation sets vs 3-path vertex covers");
  for (auto* sub : {v_theorem, v_phibar, v_duality}) {
    sub->add_option("--max-n", max_n, "largest tree order")->default_val(max_n);
    sub->add_option("--json", json_path, "write the full report as JSON");
  }
  v_families->add_option("--max-k", max_k)->default_val(max_k);
  v_families->add_option("--max-j", max_j)->default_val(max_j);
  v_families->add_option("--json", json_path, "write the full report as JSON");
  v_fmono->add_option("--max-x", max_x)->default_val(max_x);
  v_fmono->add_option("--json", json_path, "write the full report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*analyze) return run_analyze(file, profiles);
    if (*enumerate) return run_enumerate(file, limit);
    if (*t1) {
      std::cout << dissoc::serialize_edge_list(dissoc::gen_T1(k, centers).tree) << '\n';
      return kExitOk;
    }
    if (*t2) {
      std::cout << dissoc::serialize_edge_list(dissoc::gen_T2(j).tree) << '\n';
      return kExitOk;
    }
    if (*gen_trees) return run_gen_trees(n, max_order);

    dissoc::VerifyOptions opt;
    opt.workers = workers;
    if (*v_theorem) return finish_verify(dissoc::verify_theorem(max_n, opt), json_path);
    if (*v_phibar) return finish_verify(dissoc::verify_phibar_bound(max_n, opt), json_path);
    if (*v_families) return finish_verify(dissoc::verify_families(max_k, max_j), json_path);
    if (*v_fmono) return finish_verify(dissoc::verify_f_monotone(max_x), json_path);
    if (*v_duality) return finish_verify(dissoc::verify_duality(max_n, opt), json_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
