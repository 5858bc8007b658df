// hardclust: instance generation, reductions, exact and approximate solvers,
// and certificate checks from the command line.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hardclust/approx.hpp"
#include "hardclust/brute_force.hpp"
#include "hardclust/coverage.hpp"
#include "hardclust/error.hpp"
#include "hardclust/girth_lift.hpp"
#include "hardclust/graph.hpp"
#include "hardclust/johnson.hpp"
#include "hardclust/json_io.hpp"
#include "hardclust/kernels.hpp"
#include "hardclust/linf_gadget.hpp"
#include "hardclust/minsum.hpp"
#include "hardclust/report.hpp"
#include "hardclust/rng.hpp"

using namespace hardclust;

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  BruteForceOptions caps;
  double subsetCap = 1e8;
};

Globals g;

std::uint64_t requireSeed() {
  if (g.seed) return *g.seed;
  if (const char* env = std::getenv("HARDCLUST_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("HARDCLUST_SEED is not an unsigned integer");
  }
  throw UsageError("this command needs --seed (or HARDCLUST_SEED)");
}

std::string seedText() {
  if (g.seed) return std::to_string(*g.seed);
  if (std::getenv("HARDCLUST_SEED")) return std::to_string(requireSeed());
  return "none";
}

std::string versionString() {
  return std::string("hardclust ") + HARDCLUST_VERSION + " (kernels " +
         std::string(kernels::isaName(kernels::active().isa)) + ")";
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    io::writeFile(path, text);
  }
}

void emitReport(TsvReport& report, const std::string& path) {
  report.setMeta("seed", seedText());
  report.setMeta("version", HARDCLUST_VERSION);
  report.setMeta("caps", "partition=" + std::to_string(g.caps.partitionCap) +
                             ",tuple=" + std::to_string(g.caps.tupleCap) +
                             ",subset=" + num(g.subsetCap));
  emit(path, report.str());
}

std::string joinIndices(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

IndexList randomSubset(Rng& rng, std::size_t n, std::size_t size) {
  IndexList pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  rng.shuffle(std::span<std::size_t>(pool));
  IndexList s(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
  std::sort(s.begin(), s.end());
  return s;
}

const io::SetSystemInstance& needSetSystem(const io::Document& d, const std::string& path) {
  if (!d.setSystem) throw io::ParseError(path + ": expected a setsystem document", 0, 0);
  return *d.setSystem;
}

const GadgetInstance& needGadget(const io::Document& d, const std::string& path) {
  if (!d.gadget) throw io::ParseError(path + ": expected a gadget points document", 0, 0);
  return *d.gadget;
}

// gen

struct GenArgs {
  std::string out;
  std::size_t n = 10, q = 2, m = 10, r = 3, z = 2, dim = 2, k = 2;
  double eps = 0.0, p = 0.5, alpha = 0.34;
  std::string metric = "linf";
};

void genYes(const GenArgs& a) {
  const auto y = generateYesGraph(a.q, a.eps, a.n, requireSeed(), a.p);
  emit(a.out, io::toJson(y.graph, y.independentSets));
}

void genNo(const GenArgs& a) {
  emit(a.out, io::toJson(generateNoGraph(a.n, a.alpha, requireSeed(), a.p)));
}

void genSetSystem(const GenArgs& a) {
  if (a.r == 0 || a.r > a.n) throw UsageError("--r must be in [1, n]");
  Rng rng(requireSeed());
  std::vector<IndexList> sets;
  for (std::size_t i = 0; i < a.m; ++i) sets.push_back(randomSubset(rng, a.n, a.r));
  emit(a.out, io::toJson(SetSystem(a.n, sets), a.k));
}

void genPoints(const GenArgs& a) {
  const MetricTag metric = parseMetric(a.metric);
  Rng rng(requireSeed());
  PointSet ps(a.dim, metric);
  Vector p(a.dim);
  for (std::size_t i = 0; i < a.n; ++i) {
    for (auto& x : p) {
      x = metric == MetricTag::Hamming ? static_cast<double>(rng.below(2))
                                       : std::round(rng.uniform(-8.0, 8.0) * 16.0) / 16.0;
    }
    ps.add(p);
  }
  emit(a.out, io::toJson(ps, a.k));
}

void genJohnson(const GenArgs& a) {
  if (a.z < 2 || a.z > a.n) throw UsageError("--z must be in [2, n]");
  Rng rng(requireSeed());
  JohnsonInstance inst;
  inst.n = a.n;
  inst.z = a.z;
  inst.k = a.k;
  std::set<IndexList> seen;
  for (std::size_t attempt = 0; attempt < 20 * a.m && seen.size() < a.m; ++attempt) {
    seen.insert(randomSubset(rng, a.n, a.z));
  }
  inst.sets.assign(seen.begin(), seen.end());
  inst.validate();
  emit(a.out, io::toJson(inst));
}

// reduce

struct ReduceArgs {
  std::string in, out, variant = "standard", yesCert, norm = "l2";
  std::optional<std::size_t> k;
};

void reduceLinf(const ReduceArgs& a) {
  const auto doc = io::readDocument(a.in);
  if (!doc.graph) throw io::ParseError(a.in + ": expected a graph document", 0, 0);
  auto gadget = buildGadget(doc.graph->graph, parseVariant(a.variant));
  gadget.independentSets = doc.graph->independentSets;
  if (!a.yesCert.empty()) {
    gadget.independentSets = io::parseIndependentSets(io::readFile(a.yesCert), a.yesCert);
  }
  std::size_t k = a.k.value_or(gadget.independentSets ? gadget.independentSets->size() : 2);
  emit(a.out, io::toJson(gadget, k));
}

void reduceJohnson(const ReduceArgs& a) {
  const auto doc = io::readDocument(a.in);
  if (!doc.johnson) throw io::ParseError(a.in + ": expected a johnson document", 0, 0);
  const MetricTag metric = parseLemmaNorm(a.norm) == LemmaNorm::L1 ? MetricTag::L1 : MetricTag::L2;
  emit(a.out, io::toJson(indicatorEmbed(*doc.johnson, metric), a.k.value_or(doc.johnson->k)));
}

void reduceMinsum(const ReduceArgs& a) {
  const auto doc = io::readDocument(a.in);
  const auto& s = needSetSystem(doc, a.in);
  emit(a.out, io::toJson(buildMinsumInstance(s.system).metric, a.k.value_or(s.k)));
}

void reduceFrechet(const ReduceArgs& a) {
  const auto doc = io::readDocument(a.in);
  if (!doc.metric) throw io::ParseError(a.in + ": expected a finite_metric document", 0, 0);
  emit(a.out, io::toJson(frechetEmbed(doc.metric->metric), a.k.value_or(doc.metric->k)));
}

// lift

struct LiftArgs {
  std::string in, out, report;
  std::size_t B = 4, a = 2, t = 6;
};

void runLift(const LiftArgs& a) {
  const auto doc = io::readDocument(a.in);
  const auto& s = needSetSystem(doc, a.in);
  LiftParams p;
  p.B = a.B;
  p.a = a.a;
  p.t = a.t;
  p.seed = requireSeed();
  const SetSystem h = s.system.uniformity()
                          ? s.system
                          : SetSystem(s.system.universeSize(), s.system.sets(),
                                      s.system.setCount() ? std::optional<std::size_t>(
                                                                s.system.set(0).size())
                                                          : std::nullopt);
  const auto r = lift(h, p);
  if (!a.out.empty()) io::writeFile(a.out, io::toJson(r.lifted, s.k * a.B));
  TsvReport rep({"vertices", "hyperedges_before", "deleted", "hyperedges_after", "deletion_bound",
                 "min_degree_before", "max_degree_before", "girth", "girth_achieved"});
  rep.addRow({std::to_string(r.lifted.universeSize()), std::to_string(r.preDeletionHyperedges),
              std::to_string(r.deletedHyperedges), std::to_string(r.lifted.setCount()),
              num(r.deletionBound), std::to_string(r.minDegreeBefore),
              std::to_string(r.maxDegreeBefore), r.girth ? std::to_string(*r.girth) : "none",
              r.girthAchieved ? "1" : "0"});
  rep.setMeta("params", "B=" + std::to_string(a.B) + ",a=" + std::to_string(a.a) +
                            ",t=" + std::to_string(a.t));
  emitReport(rep, a.report);
}

// solve

struct SolveArgs {
  std::string in, report, algo = "exact", objective = "median";
  std::optional<std::size_t> k;
  double eps = 0.5;
};

void runSolve(const SolveArgs& a) {
  const auto doc = io::readDocument(a.in);
  const Objective obj = parseObjective(a.objective);
  BruteForceOptions opts = g.caps;
  opts.jobs = g.jobs;

  Clustering clustering;
  double cost = 0.0;
  std::size_t k = 0, n = 0;
  if (doc.metric) {
    k = a.k.value_or(doc.metric->k);
    n = doc.metric->metric.size();
    if (a.algo != "exact" && a.algo != "datapoints") {
      throw UsageError("finite metrics support --algo exact or datapoints");
    }
    const auto mode = a.algo == "exact" ? CenterMode::Continuous : CenterMode::DataPoints;
    const auto res = bruteForceCluster(doc.metric->metric, k, obj, mode, opts);
    clustering = res.clustering;
    cost = res.cost;
  } else if (doc.points) {
    const auto& ps = doc.points->points;
    k = a.k.value_or(doc.points->k);
    n = ps.size();
    if (a.algo == "exact" || a.algo == "datapoints") {
      const auto mode = a.algo == "exact" ? CenterMode::Continuous : CenterMode::DataPoints;
      const auto res = bruteForceCluster(ps, k, obj, mode, opts);
      clustering = res.clustering;
      cost = res.cost;
    } else {
      DiscreteSolution sol;
      if (a.algo == "2approx") {
        sol = twoApproxEnumerate(ps, k, obj);
      } else if (a.algo == "eps-net") {
        sol = pipelineOnePlusEps(ps, k, a.eps, obj, g.jobs);
      } else if (a.algo == "coreset") {
        sol = pipelineBelow2(ps, k, a.eps, obj, requireSeed());
      } else {
        throw UsageError("unknown --algo '" + a.algo + "'");
      }
      clustering = sol.clustering;
      cost = sol.cost;
    }
  } else {
    throw io::ParseError(a.in + ": expected a points or finite_metric document", 0, 0);
  }
  TsvReport rep({"algo", "objective", "n", "k", "cost"});
  rep.addRow({a.algo, std::string(objectiveName(obj)), std::to_string(n), std::to_string(k),
              num(cost)});
  rep.setMeta("assignment", joinIndices(clustering.assignment));
  if (a.algo == "eps-net" || a.algo == "coreset") rep.setMeta("eps", num(a.eps));
  emitReport(rep, a.report);
}

// verify

struct VerifyArgs {
  std::string in, report, objective = "means", norm = "l2";
  std::size_t r = 2, trials = 10000;
  std::optional<std::size_t> k;
};

int verifyGap(const VerifyArgs& a) {
  const auto doc = io::readDocument(a.in);
  const auto& gadget = needGadget(doc, a.in);
  const Objective obj = parseObjective(a.objective);
  BruteForceOptions opts = g.caps;
  opts.jobs = g.jobs;
  const auto s = globalSoundnessLB(gadget, a.r, obj, true, opts);
  const bool holds = s.lowerBound <= *s.exactOptimum + 1e-7 * std::max(1.0, *s.exactOptimum);
  std::string completeness = "none";
  if (gadget.independentSets && gadget.independentSets->size() <= a.r &&
      !gadget.independentSets->empty()) {
    completeness = num(completenessCertificate(gadget, *gadget.independentSets, obj).cost);
  }
  TsvReport rep({"variant", "objective", "r", "lower_bound", "exact_optimum", "completeness",
                 "holds"});
  rep.addRow({std::string(variantName(gadget.variant)), std::string(objectiveName(obj)),
              std::to_string(a.r), num(s.lowerBound), num(*s.exactOptimum), completeness,
              holds ? "1" : "0"});
  rep.setMeta("argmin", joinIndices(s.argmin.assignment));
  emitReport(rep, a.report);
  return holds ? 0 : 1;
}

int verifyGadget(const VerifyArgs& a) {
  const auto doc = io::readDocument(a.in);
  const auto& gadget = needGadget(doc, a.in);
  const bool lattice = gadget.variant == GadgetVariant::Lattice;
  const double adjacentDist = lattice ? 2.0 : 4.0;
  const double coveredDist = lattice ? 0.5 : 1.0;
  const double farDist = lattice ? 1.5 : 3.0;

  std::size_t checks = 0, violations = 0;
  for (const auto& [u, v] : gadget.graph.arcs()) {
    ++checks;
    violations += gadget.points.distance(u, v) != adjacentDist;
  }
  std::string certificate = "none";
  if (gadget.independentSets) {
    const auto& sets = *gadget.independentSets;
    bool valid = true;
    for (const auto& S : sets) {
      bool inRange = std::all_of(S.begin(), S.end(),
                                 [&](std::size_t v) { return v < gadget.graph.vertexCount(); });
      valid = valid && inRange && gadget.graph.isIndependent(S);
    }
    certificate = valid ? "independent" : "not-independent";
    if (!valid) {
      ++violations;
    } else {
      const auto centers = buildCenters(gadget, sets);
      for (std::size_t i = 0; i < centers.size(); ++i) {
        std::vector<char> in(gadget.points.size(), 0);
        for (std::size_t v : sets[i]) in[v] = 1;
        // With no arc touching the set, its center is the origin.
        const bool touched = std::any_of(gadget.graph.arcs().begin(), gadget.graph.arcs().end(),
                                         [&](const Arc& e) { return in[e.first] || in[e.second]; });
        const double expected = touched || lattice ? coveredDist : 0.0;
        for (std::size_t v = 0; v < gadget.points.size(); ++v) {
          const double d = gadget.points.distanceTo(v, centers[i]);
          ++checks;
          violations += in[v] ? d != expected : d > farDist;
        }
      }
    }
  }
  TsvReport rep({"variant", "checks", "violations", "certificate"});
  rep.addRow({std::string(variantName(gadget.variant)), std::to_string(checks),
              std::to_string(violations), certificate});
  emitReport(rep, a.report);
  return violations == 0 ? 0 : 1;
}

int verifyLemma(const VerifyArgs& a) {
  const auto norm = parseLemmaNorm(a.norm);
  const auto s = lemmaSearch(a.trials, requireSeed(), norm);
  TsvReport rep({"norm", "trials", "premise_satisfying", "violations", "max_edges_satisfying"});
  rep.addRow({a.norm, std::to_string(s.trials), std::to_string(s.premiseSatisfying),
              std::to_string(s.violations), std::to_string(s.maxEdgesSatisfying)});
  emitReport(rep, a.report);
  return s.violations == 0 ? 0 : 1;
}

int verifyMinsum(const VerifyArgs& a) {
  const auto doc = io::readDocument(a.in);
  const auto& s = needSetSystem(doc, a.in);
  BruteForceOptions opts = g.caps;
  opts.jobs = g.jobs;
  const auto rep0 = minsumGapExperiment(s.system, a.k.value_or(s.k), std::nullopt, opts);
  const bool holds = rep0.caseOne.bound <= rep0.soundnessLB + 1e-9;
  TsvReport rep({"k", "optimum", "case_one_bound", "acyclic_clusters", "f_formula", "holds"});
  rep.addRow({std::to_string(a.k.value_or(s.k)), num(rep0.soundnessLB), num(rep0.caseOne.bound),
              std::to_string(rep0.caseOne.acyclicClusters), num(rep0.fFormula),
              holds ? "1" : "0"});
  rep.setMeta("assignment", joinIndices(rep0.optimal.assignment));
  emitReport(rep, a.report);
  return holds ? 0 : 1;
}

// analyze

struct AnalyzeArgs {
  std::string in, report;
  double tol = 1e-12;
  std::optional<std::size_t> k;
};

void analyzeMinsumConstants(const AnalyzeArgs& a) {
  const auto c = minsumConstants(a.tol);
  TsvReport rep({"c", "d1", "d2", "mass", "integral", "ratio", "residual", "integral_closed_form"});
  rep.addRow({num(c.c), num(c.d1), num(c.d2), num(c.massCheck), num(c.integralValue),
              num(c.gapRatio), num(c.residual), num(c.integralClosedForm)});
  emitReport(rep, a.report);
}

void analyzeGapConstants(const AnalyzeArgs& a) {
  TsvReport rep({"name", "formula", "value"});
  for (const auto& c : gapConstants()) rep.addRow({c.name, c.formula, num(c.value)});
  emitReport(rep, a.report);
}

void analyzeCoverage(const AnalyzeArgs& a) {
  const auto doc = io::readDocument(a.in);
  const auto& s = needSetSystem(doc, a.in);
  const std::size_t k = a.k.value_or(s.k);
  const auto greedy = greedyMaxCoverage(s.system, k);
  const auto opt = bruteForceMaxCoverage(s.system, k, g.subsetCap);
  const auto st = structureStats(s.system);
  TsvReport rep({"k", "greedy", "optimum", "ratio", "max_degree", "max_set_size",
                 "max_intersection", "girth"});
  rep.addRow({std::to_string(k), std::to_string(greedy.coverage), std::to_string(opt.coverage),
              num(opt.coverage ? static_cast<double>(greedy.coverage) / opt.coverage : 1.0),
              std::to_string(st.maxElementDegree), std::to_string(st.maxSetSize),
              std::to_string(st.maxPairwiseIntersection),
              st.girth ? std::to_string(*st.girth) : "none"});
  rep.setMeta("greedy_sets", joinIndices(greedy.chosen));
  rep.setMeta("optimal_sets", joinIndices(opt.chosen));
  emitReport(rep, a.report);
}

template <typename T>
void optionalIndex(CLI::App* app, const std::string& name, std::optional<T>& target,
                   const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustering hardness instances, reductions and solvers", "hardclust"};
  app.set_version_flag("--version", versionString());
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option_function<std::uint64_t>(
      "--seed", [](const std::uint64_t& v) { g.seed = v; },
      "seed for randomized commands (falls back to HARDCLUST_SEED)");
  app.add_option("--jobs", g.jobs, "worker threads; results do not depend on it")
      ->check(CLI::PositiveNumber);
  app.add_option("--partition-cap", g.caps.partitionCap, "largest n for partition enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--tuple-cap", g.caps.tupleCap, "largest n for center subset enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--subset-cap", g.subsetCap, "largest number of subsets searched")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<int()> fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto plain = [](auto fn) {
    return [fn] {
      fn();
      return 0;
    };
  };

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  {
    auto* s = leaf(gen, "yes", "graph with planted independent sets", plain([&] { genYes(ga); }));
    s->add_option("--n", ga.n, "vertices");
    s->add_option("--q", ga.q, "planted independent sets");
    s->add_option("--eps", ga.eps, "fraction of vertices left outside the sets");
    s->add_option("--p", ga.p, "edge probability");
    s->add_option("--out", ga.out, "output path");
    s = leaf(gen, "no", "random graph with small independence number", plain([&] { genNo(ga); }));
    s->add_option("--n", ga.n, "vertices");
    s->add_option("--alpha", ga.alpha, "largest independence number as a fraction of n");
    s->add_option("--p", ga.p, "edge probability");
    s->add_option("--out", ga.out, "output path");
    s = leaf(gen, "setsystem", "random r-uniform set system", plain([&] { genSetSystem(ga); }));
    s->add_option("--n", ga.n, "universe size");
    s->add_option("--m", ga.m, "sets");
    s->add_option("--r", ga.r, "set size");
    s->add_option("--k", ga.k, "budget");
    s->add_option("--out", ga.out, "output path");
    s = leaf(gen, "points", "random points", plain([&] { genPoints(ga); }));
    s->add_option("--n", ga.n, "points");
    s->add_option("--dim", ga.dim, "dimension");
    s->add_option("--metric", ga.metric, "linf, l1, l2, l2sq or hamming");
    s->add_option("--k", ga.k, "clusters");
    s->add_option("--out", ga.out, "output path");
    s = leaf(gen, "johnson", "random z-subsets", plain([&] { genJohnson(ga); }));
    s->add_option("--n", ga.n, "ground set size");
    s->add_option("--z", ga.z, "subset size");
    s->add_option("--m", ga.m, "subsets");
    s->add_option("--k", ga.k, "budget");
    s->add_option("--out", ga.out, "output path");
  }

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "map an instance to a clustering instance");
  reduce->require_subcommand(1);
  {
    auto* s = leaf(reduce, "linf", "graph to L-infinity points", plain([&] { reduceLinf(ra); }));
    s->add_option("--graph", ra.in, "graph document")->required();
    s->add_option("--variant", ra.variant, "standard or lattice");
    s->add_option("--yes-cert", ra.yesCert, "independent sets to embed");
    optionalIndex(s, "--k", ra.k, "clusters (default: number of independent sets)");
    s->add_option("--out", ra.out, "output path");
    s = leaf(reduce, "johnson", "z-subsets to indicator points", plain([&] { reduceJohnson(ra); }));
    s->add_option("--in", ra.in, "johnson document")->required();
    s->add_option("--norm", ra.norm, "l1 or l2");
    optionalIndex(s, "--k", ra.k, "clusters");
    s->add_option("--out", ra.out, "output path");
    s = leaf(reduce, "minsum", "set system to a {1,2}-metric", plain([&] { reduceMinsum(ra); }));
    s->add_option("--in", ra.in, "setsystem document")->required();
    optionalIndex(s, "--k", ra.k, "clusters");
    s->add_option("--out", ra.out, "output path");
    s = leaf(reduce, "frechet", "finite metric to L-infinity points",
             plain([&] { reduceFrechet(ra); }));
    s->add_option("--in", ra.in, "finite_metric document")->required();
    optionalIndex(s, "--k", ra.k, "clusters");
    s->add_option("--out", ra.out, "output path");
  }

  LiftArgs la;
  {
    auto* s = leaf(&app, "lift", "girth lift of a uniform set system", plain([&] { runLift(la); }));
    s->add_option("--in", la.in, "setsystem document")->required();
    s->add_option("--B", la.B, "cloud size")->check(CLI::PositiveNumber);
    s->add_option("--a", la.a, "copies per hyperedge and cloud vertex")->check(CLI::PositiveNumber);
    s->add_option("--t", la.t, "required girth");
    s->add_option("--out", la.out, "lifted setsystem path");
    s->add_option("--report", la.report, "report path");
  }

  SolveArgs sa;
  {
    auto* s = leaf(&app, "solve", "cluster points or a finite metric", plain([&] { runSolve(sa); }));
    s->add_option("--in", sa.in, "points or finite_metric document")->required();
    s->add_option("--algo", sa.algo, "exact, datapoints, 2approx, eps-net or coreset");
    s->add_option("--objective", sa.objective, "median, means or minsum");
    optionalIndex(s, "--k", sa.k, "clusters (default: from the document)");
    s->add_option("--eps", sa.eps, "accuracy for eps-net and coreset");
    s->add_option("--report", sa.report, "report path");
  }

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check certificates and identities");
  verify->require_subcommand(1);
  {
    auto* s = leaf(verify, "gap", "matching lower bound against the exact optimum",
                   [&] { return verifyGap(va); });
    s->add_option("--in", va.in, "gadget points document")->required();
    s->add_option("--objective", va.objective, "median or means");
    s->add_option("--r", va.r, "clusters");
    s->add_option("--report", va.report, "report path");
    s = leaf(verify, "gadget", "distance identities of a gadget and its certificate",
             [&] { return verifyGadget(va); });
    s->add_option("--in", va.in, "gadget points document")->required();
    s->add_option("--report", va.report, "report path");
    s = leaf(verify, "lemma", "random search for hypergraph lemma violations",
             [&] { return verifyLemma(va); });
    s->add_option("--norm", va.norm, "l1 or l2");
    s->add_option("--trials", va.trials, "trials");
    s->add_option("--report", va.report, "report path");
    s = leaf(verify, "minsum", "acyclic-cluster bound against the exact minsum optimum",
             [&] { return verifyMinsum(va); });
    s->add_option("--in", va.in, "setsystem document")->required();
    optionalIndex(s, "--k", va.k, "clusters");
    s->add_option("--report", va.report, "report path");
  }

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "constants and instance statistics");
  analyze->require_subcommand(1);
  {
    auto* s = leaf(analyze, "minsum-constants", "soundness constant and integral",
                   plain([&] { analyzeMinsumConstants(aa); }));
    s->add_option("--tol", aa.tol, "residual tolerance for the constant");
    s->add_option("--report", aa.report, "report path");
    s = leaf(analyze, "gap-constants", "table of gap constants",
             plain([&] { analyzeGapConstants(aa); }));
    s->add_option("--report", aa.report, "report path");
    s = leaf(analyze, "coverage", "greedy and optimal coverage with structure statistics",
             plain([&] { analyzeCoverage(aa); }));
    s->add_option("--in", aa.in, "setsystem document")->required();
    optionalIndex(s, "--k", aa.k, "budget");
    s->add_option("--report", aa.report, "report path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    std::cerr << "hardclust: " << e.what() << "\n";
    return 2;
  } catch (const io::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "hardclust: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hardclust: " << e.what() << "\n";
    return 2;
  }
}
