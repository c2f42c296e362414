#pragma once

// The per-lattice verification bundle (validators, oracle equivalence,
// corollary patterns, lemma sweeps, theorem properties, layout) and the
// corpus survey that fans it out over recipes.

#include <atomic>
#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include "slatt/congruence.hpp"
#include "slatt/construct.hpp"
#include "slatt/io.hpp"
#include "slatt/lattice.hpp"
#include "slatt/layout.hpp"
#include "slatt/poset_props.hpp"
#include "slatt/swing.hpp"

namespace slatt {

struct CheckResult {
  int n = 0;

  // Validators.
  std::optional<std::pair<int, int>> semimodular_witness;
  std::optional<SlimWitness> slim_witness;
  RectangularResult rect;
  std::string diagnosis;  // set when the input is not slim rectangular

  bool valid() const {
    return !semimodular_witness && !slim_witness && rect.ok() && diagnosis.empty();
  }

  // Machinery checks, computed for valid inputs.
  int p_size = 0;
  std::vector<int> p_maximal;
  bool structure_ok = false;
  bool oracle_equivalence = false;
  bool equal_iff = false;
  bool cover_iff = false;
  bool upper_max = false;
  bool covnew_ok = false;
  bool lemma_application = false;
  bool lemma_disj = false;
  bool lemma_disjoint = false;
  bool layout_c1 = false;
  bool classification_ok = false;

  // Theorem properties of P.
  PartitionResult partition;
  MaximalCoverResult maximal_cover;
  NoChildResult no_child;
  FourCrownResult four_crown;

  std::string failure;  // first failing check, empty when everything passed

  bool machinery_ok() const {
    return structure_ok && oracle_equivalence && equal_iff && cover_iff && upper_max &&
           covnew_ok && lemma_application && lemma_disj && lemma_disjoint && layout_c1 &&
           classification_ok;
  }
  bool theorem_ok() const {
    return partition.ok && maximal_cover.ok && no_child.ok && four_crown.ok;
  }
  bool all_ok() const { return valid() && machinery_ok() && theorem_ok(); }
};

inline CheckResult check_lattice(const Lattice& K) {
  CheckResult res;
  res.n = K.size();

  res.semimodular_witness = validate_semimodular(K);
  if (res.semimodular_witness) {
    res.diagnosis = "not semimodular: witness pair (" +
                    std::to_string(res.semimodular_witness->first) + ", " +
                    std::to_string(res.semimodular_witness->second) + ")";
    return res;
  }
  res.slim_witness = validate_slim(K);
  if (res.slim_witness) {
    res.diagnosis = "not slim: witness {" + std::to_string(res.slim_witness->elems[0]) +
                    ", " + std::to_string(res.slim_witness->elems[1]) + ", " +
                    std::to_string(res.slim_witness->elems[2]) + "}";
    return res;
  }
  res.rect = validate_rectangular(K);
  if (!res.rect.ok()) {
    res.diagnosis = "not rectangular: " + res.rect.reason;
    return res;
  }

  auto fail = [&](const std::string& what) {
    if (res.failure.empty()) res.failure = what;
  };

  try {
    const auto cells = four_cells(K);
    const SwingIndex S(K);
    const JiPoset P = ji_poset(K);
    const auto peaks = peak_s7_find(K);
    res.p_size = P.poset.size();
    res.p_maximal = P.poset.maximal();

    // Structural invariants: cover degrees, cell counts per top, constant
    // colors along trajectories.
    res.structure_ok = true;
    for (int e = 0; e < K.size() && res.structure_ok; ++e) {
      if (K.upper_covers(e).size() > 2) res.structure_ok = false;
      if (e != K.bottom()) {
        int cells_with_top = 0;
        for (const auto& c : cells)
          if (c.top == e) ++cells_with_top;
        if (static_cast<int>(K.lower_covers(e).size()) != 1 + cells_with_top)
          res.structure_ok = false;
      }
    }
    for (const auto& t : S.trajectories()) {
      const int col = P.edge_color[t.edges.front()];
      for (int e : t.edges)
        if (P.edge_color[e] != col) res.structure_ok = false;
    }
    if (!res.structure_ok) fail("structure");

    const auto M = all_pair_patterns(S);
    const int E = S.edge_count();
    res.oracle_equivalence = true;
    res.equal_iff = true;
    res.cover_iff = true;
    for (int u = 0; u < E; ++u)
      for (int v = 0; v < E; ++v) {
        const int cu = P.edge_color[u], cv = P.edge_color[v];
        const bool leq = M.swing_leq[u][v], leq_rev = M.swing_leq[v][u];
        if (leq != P.poset.leq(cv, cu)) res.oracle_equivalence = false;
        if (static_cast<bool>(M.equal_pattern[u][v]) != (cu == cv)) res.equal_iff = false;
        const bool oracle_cover = P.poset.covers(cv, cu);
        if (static_cast<bool>(M.cover[u][v]) != oracle_cover) res.cover_iff = false;
        // Sound directions of the literal covering pattern: every oracle
        // cover is witnessed, and a witness always implies strict order.
        if (oracle_cover && !M.cover_exists[u][v]) res.cover_iff = false;
        if (M.cover_exists[u][v] && !(leq && !leq_rev)) res.cover_iff = false;
      }
    if (!res.oracle_equivalence) fail("oracle equivalence");
    if (!res.equal_iff) fail("equal pattern");
    if (!res.cover_iff) fail("cover pattern");

    res.upper_max = upper_boundary_max_check(S, P);
    if (!res.upper_max) fail("upper boundary colors");

    res.covnew_ok = true;
    for (const Edge& u : S.chains().upper_left)
      if (!validate_covnew(S, P, u).ok) res.covnew_ok = false;
    if (!res.covnew_ok) fail("covnew equations");

    res.lemma_application = lemma_application_check(S);
    if (!res.lemma_application) fail("lemma: up-perspectivity application");
    res.lemma_disj = lemma_disj_check(S);
    if (!res.lemma_disj) fail("lemma: steep trajectories disjoint");
    res.lemma_disjoint = lemma_disjoint_check(S, P);
    if (!res.lemma_disjoint) fail("lemma: no common lower cover on a boundary");

    res.classification_ok = classification_cross_check(S, peaks);
    if (!res.classification_ok) fail("steep edges vs peak middles");

    const Layout lay = coordinates(K);
    res.layout_c1 = !validate_c1(K, lay, peaks).has_value();
    // Slope classification must agree with the trajectory classification.
    for (int e = 0; e < E && res.layout_c1; ++e) {
      const Edge ed = S.edge(e);
      const long long dx = lay.x[ed.top] - lay.x[ed.bottom];
      const long long dy = lay.y[ed.top] - lay.y[ed.bottom];
      const EdgeClass geom = std::abs(dx) < dy ? EdgeClass::steep
                             : dx > 0          ? EdgeClass::normal_up
                                               : EdgeClass::normal_down;
      if (geom != S.classify(e)) res.layout_c1 = false;
    }
    if (!res.layout_c1) fail("C1 layout");

    res.partition = partition_property(P.poset);
    res.maximal_cover = maximal_cover_property(P.poset);
    res.no_child = no_child_property(P.poset);
    res.four_crown = four_crown_two_pendant(P.poset);
    if (!res.theorem_ok()) fail("theorem property");
  } catch (const std::exception& ex) {
    fail(std::string("exception: ") + ex.what());
  }

  return res;
}

inline Json check_to_json(const CheckResult& r, const Recipe* recipe = nullptr) {
  Json j;
  j["schema"] = 1;
  if (recipe) j["recipe"] = recipe_to_json(*recipe);
  j["n"] = r.n;
  j["valid"] = {
      {"lattice", true},
      {"semimodular", !r.semimodular_witness.has_value()},
      {"slim", !r.slim_witness.has_value()},
      {"rectangular", r.rect.ok()},
  };
  if (!r.valid()) {
    j["diagnosis"] = r.diagnosis;
    return j;
  }
  j["p"] = {{"size", r.p_size}, {"maximal", r.p_maximal}};
  j["properties"] = {
      {"partition", r.partition.ok},
      {"maximal_cover", r.maximal_cover.ok},
      {"no_child", r.no_child.ok},
      {"four_crown", r.four_crown.ok},
  };
  j["checks"] = {
      {"structure", r.structure_ok},
      {"oracle_equivalence", r.oracle_equivalence},
      {"equal_pattern_iff", r.equal_iff},
      {"cover_pattern_iff", r.cover_iff},
      {"upper_boundary_max", r.upper_max},
      {"covnew", r.covnew_ok},
      {"lemma_application", r.lemma_application},
      {"lemma_disj", r.lemma_disj},
      {"lemma_disjoint", r.lemma_disjoint},
      {"classification", r.classification_ok},
      {"layout_c1", r.layout_c1},
  };
  Json witnesses = Json::object();
  if (r.partition.ok)
    witnesses["partition"] = {r.partition.class0, r.partition.class1};
  if (!r.maximal_cover.ok) witnesses["maximal_cover"] = {{"v", r.maximal_cover.witness_v}};
  if (!r.no_child.ok)
    witnesses["no_child"] = {{"x", r.no_child.witness[0]},
                             {"y", r.no_child.witness[1]},
                             {"z", r.no_child.witness[2]},
                             {"u", r.no_child.witness[3]}};
  if (!r.four_crown.ok) witnesses["four_crown"] = {{"embedding", r.four_crown.embedding}};
  j["witnesses"] = witnesses;
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

struct SurveyOptions {
  int max_m = 4;
  int max_n = 4;
  int max_forks = 2;
  int random_count = 0;
  int random_max_m = 6;
  int random_max_n = 6;
  int random_max_forks = 4;
  uint64_t random_seed_base = 1;
  int jobs = 1;
  bool timing = false;  // include per-record wall time in the JSON report
};

struct SurveyRecord {
  Recipe recipe;
  CheckResult check;
  std::string error;  // construction failure, normally empty
  double ms = 0;
  bool ok() const { return error.empty() && check.all_ok(); }
};

struct SurveyReport {
  SurveyOptions options;
  std::vector<SurveyRecord> records;
  int failures = 0;
  double total_ms = 0;

  bool any_theorem_failure() const {
    for (const auto& r : records)
      if (r.error.empty() && r.check.valid() && !r.check.theorem_ok()) return true;
    return false;
  }
};

// Deterministic regardless of the worker count: the recipe list is fixed and
// each worker writes into its record slot.
inline SurveyReport run_survey(const SurveyOptions& opt) {
  SurveyReport report;
  report.options = opt;

  std::vector<Recipe> recipes = enumerate_corpus(opt.max_m, opt.max_n, opt.max_forks);
  for (int i = 0; i < opt.random_count; ++i)
    recipes.push_back(random_recipe(opt.random_seed_base + i, opt.random_max_m,
                                    opt.random_max_n, opt.random_max_forks));

  report.records.resize(recipes.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= recipes.size()) return;
      auto& rec = report.records[i];
      rec.recipe = recipes[i];
      const auto start = std::chrono::steady_clock::now();
      try {
        const Lattice K = apply_recipe(recipes[i], {.validate_steps = true});
        rec.check = check_lattice(K);
      } catch (const std::exception& ex) {
        rec.error = ex.what();
      }
      rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
                   .count();
    }
  };

  const auto t0 = std::chrono::steady_clock::now();
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  report.total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();

  for (const auto& r : report.records)
    if (!r.ok()) ++report.failures;
  return report;
}

inline Json survey_to_json(const SurveyReport& report) {
  const auto& opt = report.options;
  Json j;
  j["schema"] = 1;
  j["bounds"] = {{"max_m", opt.max_m},
                 {"max_n", opt.max_n},
                 {"max_forks", opt.max_forks},
                 {"random_count", opt.random_count},
                 {"random_max_m", opt.random_max_m},
                 {"random_max_n", opt.random_max_n},
                 {"random_max_forks", opt.random_max_forks},
                 {"random_seed_base", opt.random_seed_base}};
  Json records = Json::array();
  for (const auto& r : report.records) {
    Json rec = check_to_json(r.check, &r.recipe);
    rec["ok"] = r.ok();
    if (!r.error.empty()) rec["error"] = r.error;
    if (opt.timing) rec["ms"] = r.ms;
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  j["summary"] = {{"recipes", report.records.size()}, {"failures", report.failures}};
  return j;
}

}  // namespace slatt
