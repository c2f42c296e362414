// slatt: build slim rectangular lattices from grid+fork recipes, compute
// their join-irreducible congruence order, decide edge relations via the
// Swing Lemma machinery, verify the congruence-order properties against the
// brute-force oracle, and draw C1 diagrams.
//
// Exit codes: 0 success (including invalid-input-with-diagnosis for check),
// 1 verification failure, 2 usage or parse error, 3 theorem property failing
// on a valid input (witness file preserved).

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "slatt/checks.hpp"
#include "slatt/io.hpp"
#include "slatt/render.hpp"

namespace {

using namespace slatt;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return read_file(path);
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-")
    std::cout << content;
  else
    write_file(path, content);
}

LoadedInput load(const std::string& path) {
  return input_from_json(parse_json_text(read_input(path)));
}

Edge parse_edge(const std::string& name) {
  const auto dash = name.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == name.size())
    throw ParseError("edge must be written bottom-top, got " + name);
  return {std::stoi(name.substr(0, dash)), std::stoi(name.substr(dash + 1))};
}

int cmd_gen(const std::string& grid_arg, const std::string& forks_arg, uint64_t seed,
            const std::string& out) {
  const auto x = grid_arg.find('x');
  if (x == std::string::npos)
    throw CLI::ValidationError("--grid", "expected MxN, got " + grid_arg);
  Recipe r;
  r.grid_m = std::stoi(grid_arg.substr(0, x));
  r.grid_n = std::stoi(grid_arg.substr(x + 1));
  if (r.grid_m < 2 || r.grid_n < 2)
    throw CLI::ValidationError("--grid", "dimensions must be at least 2x2");

  if (forks_arg.rfind("auto:", 0) == 0) {
    const int count = std::stoi(forks_arg.substr(5));
    r = random_forks(r.grid_m, r.grid_n, count, seed);
  } else if (!forks_arg.empty()) {
    std::stringstream ss(forks_arg);
    std::string item;
    while (std::getline(ss, item, ',')) r.forks.push_back(std::stoi(item));
    apply_recipe(r);  // throws on a dangling cell reference
  }
  write_output(out, recipe_to_json(r).dump(2) + "\n");
  return 0;
}

int cmd_check(const std::string& input, const std::string& out) {
  const LoadedInput in = load(input);
  const CheckResult res = check_lattice(in.lattice);
  const Json report = check_to_json(res, in.recipe ? &*in.recipe : nullptr);
  write_output(out, report.dump(2) + "\n");
  if (!res.valid()) return 0;  // diagnosed invalid input
  if (!res.theorem_ok()) {
    const std::string wpath = out == "-" ? "slatt.witness.json" : out + ".witness.json";
    write_file(wpath, report.dump(2) + "\n");
    std::cerr << "THEOREM PROPERTY FAILED on a valid slim rectangular lattice.\n"
              << "Implementation bug or discovery; witness preserved at " << wpath << "\n";
    return 3;
  }
  return res.machinery_ok() ? 0 : 1;
}

int cmd_congruences(const std::string& input, const std::string& out) {
  const LoadedInput in = load(input);
  const JiPoset P = ji_poset(in.lattice);
  write_output(out, ji_poset_to_json(in.lattice, P).dump(2) + "\n");
  return 0;
}

int cmd_swing(const std::string& input, std::vector<std::string> pair, bool verify,
              bool witness) {
  const LoadedInput in = load(input);
  const Lattice& K = in.lattice;
  {
    const CheckResult pre = check_lattice(K);
    if (!pre.valid()) {
      std::cerr << pre.diagnosis << "\n";
      return 1;
    }
  }
  const SwingIndex S(K);
  if (verify) {
    const JiPoset P = ji_poset(K);
    const auto M = all_pair_patterns(S);
    int mismatches = 0;
    for (int u = 0; u < S.edge_count(); ++u)
      for (int v = 0; v < S.edge_count(); ++v)
        if (static_cast<bool>(M.swing_leq[u][v]) !=
            P.poset.leq(P.edge_color[v], P.edge_color[u]))
          ++mismatches;
    std::cout << "edges " << S.edge_count() << ", ordered pairs "
              << S.edge_count() * S.edge_count() << ", mismatches " << mismatches << "\n";
    return mismatches == 0 ? 0 : 1;
  }
  const Edge u = parse_edge(pair.at(0)), v = parse_edge(pair.at(1));
  SwingWitness w;
  const bool leq = swing_leq(S, u, v, witness ? &w : nullptr);
  std::cout << "col " << edge_name(v) << " <= col " << edge_name(u) << ": "
            << (leq ? "true" : "false") << "\n";
  if (witness && leq) std::cout << "witness: " << to_string(w) << "\n";
  return 0;
}

int cmd_render(const std::string& input, const std::string& format, bool colors,
               bool trajectories, const std::string& out) {
  const LoadedInput in = load(input);
  const Lattice& K = in.lattice;
  {
    const CheckResult pre = check_lattice(K);
    if (!pre.valid()) {
      std::cerr << pre.diagnosis << "\n";
      return 1;
    }
  }
  const SwingIndex S(K);
  const JiPoset P = ji_poset(K);
  const Layout lay = coordinates(K);
  RenderOptions opt;
  opt.colors = colors;
  opt.trajectories = trajectories;
  const std::string doc = format == "tikz" ? render_tikz(K, lay, S, P, opt)
                                           : render_svg(K, lay, S, P, opt);
  write_output(out, doc);
  return 0;
}

int cmd_survey(const SurveyOptions& opt, const std::string& out) {
  const SurveyReport report = run_survey(opt);
  write_output(out, survey_to_json(report).dump(2) + "\n");
  std::cerr << "surveyed " << report.records.size() << " recipes, " << report.failures
            << " failures, " << static_cast<long>(report.total_ms) << " ms\n";
  if (report.any_theorem_failure()) {
    const std::string wpath = out == "-" ? "slatt.witness.json" : out + ".witness.json";
    write_file(wpath, survey_to_json(report).dump(2) + "\n");
    std::cerr << "THEOREM PROPERTY FAILED on a valid slim rectangular lattice.\n"
              << "Implementation bug or discovery; witness preserved at " << wpath << "\n";
    return 3;
  }
  return report.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slim rectangular lattice congruence toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "write a grid+forks recipe");
  std::string gen_grid, gen_forks, gen_out = "-";
  uint64_t gen_seed = 0;
  gen->add_option("--grid", gen_grid, "grid dimensions MxN, each at least 2")->required();
  gen->add_option("--forks", gen_forks, "comma list of cell bottoms, or auto:K");
  gen->add_option("--seed", gen_seed, "seed for auto fork choice");
  gen->add_option("-o,--out", gen_out, "output path, - for stdout");

  // check
  auto* check = app.add_subcommand("check", "validate and verify one lattice or recipe");
  std::string check_in, check_out = "-";
  check->add_option("input", check_in, "recipe or lattice JSON, - for stdin")->required();
  check->add_option("-o,--out", check_out, "report path, - for stdout");

  // congruences
  auto* cong = app.add_subcommand("congruences", "emit the join-irreducible congruence order");
  std::string cong_in, cong_out = "-";
  cong->add_option("input", cong_in, "recipe or lattice JSON, - for stdin")->required();
  cong->add_option("-o,--out", cong_out, "output path, - for stdout");

  // swing
  auto* swing = app.add_subcommand("swing", "Swing Lemma decision procedure");
  std::string swing_in;
  std::vector<std::string> swing_pair;
  bool swing_verify = false, swing_witness = false;
  swing->add_option("input", swing_in, "recipe or lattice JSON, - for stdin")->required();
  swing->add_option("--pair", swing_pair, "edges U V as bottom-top")->expected(2);
  swing->add_flag("--verify-oracle", swing_verify,
                  "compare swing_leq with the congruence oracle over all pairs");
  swing->add_flag("--witness", swing_witness, "print the normal-form path");

  // render
  auto* render = app.add_subcommand("render", "draw the C1 diagram");
  std::string render_in, render_format = "svg", render_out = "-";
  bool render_colors = false, render_traj = false;
  render->add_option("input", render_in, "recipe or lattice JSON, - for stdin")->required();
  render->add_option("--format", render_format, "svg or tikz")
      ->check(CLI::IsMember({"svg", "tikz"}));
  render->add_flag("--colors", render_colors, "tint edges by congruence color");
  render->add_flag("--trajectories", render_traj, "overlay trajectories");
  render->add_option("-o,--out", render_out, "output path, - for stdout");

  // survey
  auto* survey = app.add_subcommand("survey", "sweep a recipe corpus");
  SurveyOptions sopt;
  if (const char* env = std::getenv("SLATT_JOBS")) sopt.jobs = std::atoi(env);
  if (sopt.jobs < 1) sopt.jobs = 1;
  std::string survey_out = "-";
  survey->add_option("--max-m", sopt.max_m, "largest grid height");
  survey->add_option("--max-n", sopt.max_n, "largest grid width");
  survey->add_option("--max-forks", sopt.max_forks, "longest fork sequence");
  survey->add_option("--random", sopt.random_count, "number of seeded random recipes");
  survey->add_option("--random-max-m", sopt.random_max_m);
  survey->add_option("--random-max-n", sopt.random_max_n);
  survey->add_option("--random-max-forks", sopt.random_max_forks);
  survey->add_option("--seed-base", sopt.random_seed_base, "first random seed");
  survey->add_option("--jobs", sopt.jobs, "worker threads (default $SLATT_JOBS)");
  survey->add_flag("--timing", sopt.timing, "include per-record timing in the report");
  survey->add_option("-o,--out", survey_out, "report path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) return cmd_gen(gen_grid, gen_forks, gen_seed, gen_out);
    if (*check) return cmd_check(check_in, check_out);
    if (*cong) return cmd_congruences(cong_in, cong_out);
    if (*swing) {
      if (!swing_verify && swing_pair.size() != 2) {
        std::cerr << "swing needs --pair U V or --verify-oracle\n";
        return 2;
      }
      return cmd_swing(swing_in, swing_pair, swing_verify, swing_witness);
    }
    if (*render)
      return cmd_render(render_in, render_format, render_colors, render_traj, render_out);
    if (*survey) return cmd_survey(sopt, survey_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BuildError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConstructError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
