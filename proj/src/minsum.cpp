#include "hardclust/minsum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hardclust/error.hpp"

namespace hardclust {

MinsumInstance buildMinsumInstance(const SetSystem& system) {
  const std::size_t n = system.universeSize();
  std::vector<double> dist(n * n, 2.0);
  for (std::size_t i = 0; i < n; ++i) dist[i * n + i] = 0.0;
  for (const auto& s : system.sets()) {
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        dist[s[a] * n + s[b]] = 1.0;
        dist[s[b] * n + s[a]] = 1.0;
      }
    }
  }
  MinsumInstance out;
  const auto deg = system.elementDegrees();
  for (std::size_t i = 0; i < n; ++i) {
    if (deg[i] == 0) out.isolated.push_back(i);
  }
  out.metric = FiniteMetric(n, std::move(dist), n > 1);
  return out;
}

double treeChargeBound(double nPrime, double rPrime) {
  if (rPrime < 0.0 || rPrime > nPrime) {
    throw InvalidInput("treeChargeBound: need 0 <= r' <= n'");
  }
  const double rest = nPrime - rPrime;
  return std::min(rPrime * nPrime / 2.0, rPrime * rPrime / 2.0 + rest * rest / 2.0);
}

FValues fFunctions(double n, double r) {
  const double f1 = n * n - r * n / 2.0;
  const double f2 = n * n / 2.0 + n * r - r * r;
  return {f1, f2, std::max(f1, f2)};
}

double soundnessResidual(double c) {
  return std::exp(-c) * (std::log(9.0 / 7.0) - c) - std::exp(-1.0) / 4.0;
}

double solveSoundnessConstant(double tol) {
  if (!(tol > 0.0)) throw InvalidInput("solveSoundnessConstant: tol must be positive");
  double lo = 0.0, hi = std::log(9.0 / 7.0);
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double h = soundnessResidual(mid);
    if (std::abs(h) <= tol || hi - lo < 1e-300) break;
    // The residual decreases on the bracket.
    if (h > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

SoundnessProfile::SoundnessProfile(double c)
    : c_(c), d1_(std::log(1.5) + c), d2_(std::log(1.75) + c) {}

double SoundnessProfile::r(double alpha) const { return std::exp(-alpha); }

double SoundnessProfile::n(double alpha) const {
  const double r = std::exp(-alpha);
  if (alpha <= c_) return r;
  if (alpha <= d1_) return 2.0 * std::exp(-c_) - r;
  if (alpha <= d2_) return 2.0 * r;
  return std::exp(-c_) + r / 4.0;
}

double SoundnessProfile::massClosedForm() const {
  return 1.0 - std::exp(-1.0) / 4.0 + std::exp(-c_) * (std::log(9.0 / 7.0) - c_);
}

namespace {

double simpsonStep(const std::function<double(double)>& f, double a, double fa, double b,
                   double fb, double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpsonStep(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
         simpsonStep(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

}  // namespace

double adaptiveSimpson(const std::function<double(double)>& f, double a, double b, double tol) {
  if (b == a) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpsonStep(f, a, fa, b, fb, m, fm, whole, tol, 50);
}

SoundnessIntegral soundnessIntegral(double c, double tol) {
  const SoundnessProfile profile(c);
  const double d1 = profile.d1(), d2 = profile.d2();
  const double breaks[] = {0.0, c, d1, d2, 1.0};

  SoundnessIntegral out;
  const auto integrand = [&](double alpha) {
    return fFunctions(profile.n(alpha), profile.r(alpha)).f;
  };
  const auto mass = [&](double alpha) { return profile.n(alpha); };
  for (int i = 0; i < 4; ++i) {
    out.quadrature += adaptiveSimpson(integrand, breaks[i], breaks[i + 1], tol / 4.0);
    out.massQuadrature += adaptiveSimpson(mass, breaks[i], breaks[i + 1], tol / 4.0);
  }

  // With r = e^{-alpha}: r^2/2 on [0,c]; T^2/2 - 1.5 r^2 on [c,d1] (T = 2e^{-c});
  // 3 r^2 on [d1,d2]; E^2 - r^2/16 on [d2,1] (E = e^{-c}).
  const auto sq = [](double x) { return std::exp(-2.0 * x); };
  const double T = 2.0 * std::exp(-c), E = std::exp(-c);
  out.closedForm = (1.0 - sq(c)) / 4.0 + (T * T / 2.0) * (d1 - c) - 0.75 * (sq(c) - sq(d1)) +
                   1.5 * (sq(d1) - sq(d2)) + E * E * (1.0 - d2) - (sq(d2) - sq(1.0)) / 32.0;
  out.massClosedForm = profile.massClosedForm();
  out.gapRatio = out.quadrature / 0.5;
  return out;
}

MinsumConstants minsumConstants(double tol) {
  MinsumConstants k;
  k.c = solveSoundnessConstant(tol);
  k.residual = soundnessResidual(k.c);
  const SoundnessProfile profile(k.c);
  k.d1 = profile.d1();
  k.d2 = profile.d2();
  const auto integral = soundnessIntegral(k.c);
  k.integralValue = integral.quadrature;
  k.integralClosedForm = integral.closedForm;
  k.gapRatio = integral.gapRatio;
  k.massCheck = integral.massClosedForm;
  return k;
}

CaseOneBound caseOneBound(const SetSystem& system, const Clustering& partition) {
  partition.validate(system.universeSize());
  CaseOneBound out;
  std::vector<std::size_t> parent(system.universeSize());
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& members : partition.clusters()) {
    if (members.empty()) continue;
    std::vector<char> inCluster(system.universeSize(), 0);
    for (std::size_t v : members) {
      inCluster[v] = 1;
      parent[v] = v;
    }
    std::size_t rMax = 1;
    bool acyclic = true;
    for (const auto& s : system.sets()) {
      IndexList trace;
      for (std::size_t e : s) {
        if (inCluster[e]) trace.push_back(e);
      }
      rMax = std::max(rMax, trace.size());
      for (std::size_t i = 1; i < trace.size() && acyclic; ++i) {
        const std::size_t a = find(trace[0]), b = find(trace[i]);
        if (a == b) {
          acyclic = false;
        } else {
          parent[b] = a;
        }
      }
    }
    if (!acyclic) {
      ++out.skippedClusters;
      continue;
    }
    ++out.acyclicClusters;
    const auto n = static_cast<double>(members.size());
    const double all = n * (n - 1.0);  // 2 C(n, 2)
    out.bound += std::max(0.0, all - treeChargeBound(n, static_cast<double>(rMax)));
  }
  return out;
}

MinsumGapReport minsumGapExperiment(const SetSystem& system, std::size_t k,
                                    const std::optional<Clustering>& certificate,
                                    const BruteForceOptions& options) {
  const auto instance = buildMinsumInstance(system);
  const auto exact =
      bruteForceCluster(instance.metric, k, Objective::Minsum, CenterMode::Continuous, options);

  MinsumGapReport out;
  out.soundnessLB = exact.cost;
  out.optimal = exact.clustering;
  if (certificate) {
    out.completenessUB = minsumCost(instance.metric, *certificate);
    out.usedCertificate = true;
  } else {
    out.completenessUB = exact.cost;
  }
  out.ratio = out.completenessUB > 0.0 ? out.soundnessLB / out.completenessUB : 1.0;

  std::vector<char> inCluster(system.universeSize());
  for (const auto& members : out.optimal.clusters()) {
    if (members.empty()) continue;
    std::fill(inCluster.begin(), inCluster.end(), 0);
    for (std::size_t v : members) inCluster[v] = 1;
    std::size_t rMax = 0;
    for (const auto& s : system.sets()) {
      rMax = std::max<std::size_t>(
          rMax, std::count_if(s.begin(), s.end(), [&](std::size_t e) { return inCluster[e] != 0; }));
    }
    out.fFormula += fFunctions(static_cast<double>(members.size()), static_cast<double>(rMax)).f;
  }
  out.caseOne = caseOneBound(system, out.optimal);
  return out;
}

}  // namespace hardclust
