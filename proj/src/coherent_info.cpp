#include "qchan/coherent_info.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace qchan {

namespace {

constexpr double kGolden = 0.61803398874989485;

// Golden-section maximization on [lo, hi]; returns best point and value.
std::pair<double, double> golden_refine(const std::function<double(double)>& f,
                                        double lo, double hi, double tolerance,
                                        std::int64_t& evals) {
  double a = lo, b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  evals += 2;
  while (b - a > tolerance) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    }
    ++evals;
  }
  return f1 > f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace

Scan1DResult maximize_scalar(const std::function<double(double)>& f, double lo,
                             double hi, const OptimizerConfig& cfg) {
  if (!(hi > lo)) throw std::invalid_argument("maximize_scalar: empty interval");
  if (cfg.coarse_grid_points < 3)
    throw std::invalid_argument("maximize_scalar: need at least 3 grid points");
  const double width = hi - lo;
  std::vector<double> xs;
  xs.reserve(cfg.coarse_grid_points + 32);
  for (int i = 0; i < cfg.coarse_grid_points; ++i)
    xs.push_back(lo + width * i / (cfg.coarse_grid_points - 1));
  // Geometric ladders at both endpoints catch spikes far below grid spacing.
  for (double eps = 1e-4; eps > 0.5e-13; eps *= 0.1) {
    xs.push_back(lo + width * eps);
    xs.push_back(hi - width * eps);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  Scan1DResult result;
  size_t best = 0;
  double best_f = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < xs.size(); ++i) {
    double v = f(xs[i]);
    ++result.evaluations;
    if (v > best_f) {
      best_f = v;
      best = i;
    }
  }
  double a = best > 0 ? xs[best - 1] : xs[best];
  double b = best + 1 < xs.size() ? xs[best + 1] : xs[best];
  result.best_x = xs[best];
  result.best_f = best_f;
  if (b - a > cfg.refine_tol) {
    auto [x, v] = golden_refine(f, a, b, cfg.refine_tol, result.evaluations);
    if (v > result.best_f) {
      result.best_x = x;
      result.best_f = v;
    }
  }
  return result;
}

double entropy_bias_fast(const ChannelPair& pair, const Matrix& rho) {
  const Matrix big = pair.iso.j * rho * pair.iso.j.adjoint();
  const DimSplit split{pair.iso.d_b, pair.iso.d_c};
  Eigen::SelfAdjointEigenSolver<Matrix> sb(partial_trace(big, split, Side::right),
                                           Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Matrix> sc(partial_trace(big, split, Side::left),
                                           Eigen::EigenvaluesOnly);
  return entropy_of_eigenvalues(sb.eigenvalues()) -
         entropy_of_eigenvalues(sc.eigenvalues());
}

CoherentInfoResult q1_amplitude_glued(double p, double lambda,
                                      const OptimizerConfig& cfg) {
  const ChannelPair pair =
      generalized_erasure(amplitude_damping_iso(p), lambda).assembled;
  auto bias_at = [&](double z) {
    return entropy_bias_fast(pair, bloch_to_rho({0.0, 0.0, z}));
  };
  CoherentInfoResult res;
  Scan1DResult top = maximize_scalar(bias_at, -1.0, 1.0, cfg);
  Scan1DResult bot =
      maximize_scalar([&](double z) { return -bias_at(z); }, -1.0, 1.0, cfg);
  res.q1_b = top.best_f;
  res.q1_c = bot.best_f;
  res.argmax_param = top.best_x;
  res.argmin_param = bot.best_x;
  res.argmax_state = bloch_to_rho({0.0, 0.0, top.best_x});
  res.argmin_state = bloch_to_rho({0.0, 0.0, bot.best_x});
  res.evaluations = top.evaluations + bot.evaluations;
  res.method = "z-axis scan";
  res.seed = cfg.seed;
  return res;
}

CoherentInfoResult q1_dephrasure(double p, double lambda,
                                 const OptimizerConfig& cfg) {
  if (p < 0.0 || p > 0.5)
    throw std::invalid_argument("q1_dephrasure: requires p in [0, 1/2]");
  const ChannelPair pair = generalized_erasure(dephasing_iso(p), lambda).assembled;
  // Bias is even in z at fixed (x, y) and even in x on the equator, so the
  // scans cover [0, 1] only.
  Scan1DResult top = maximize_scalar(
      [&](double z) { return entropy_bias_fast(pair, bloch_to_rho({0.0, 0.0, z})); },
      0.0, 1.0, cfg);
  Scan1DResult bot = maximize_scalar(
      [&](double x) { return -entropy_bias_fast(pair, bloch_to_rho({x, 0.0, 0.0})); },
      0.0, 1.0, cfg);
  CoherentInfoResult res;
  res.q1_b = top.best_f;
  res.q1_c = bot.best_f;
  res.argmax_param = top.best_x;
  res.argmin_param = bot.best_x;
  res.argmax_state = bloch_to_rho({0.0, 0.0, top.best_x});
  res.argmin_state = bloch_to_rho({bot.best_x, 0.0, 0.0});
  res.evaluations = top.evaluations + bot.evaluations;
  res.method = "axis scans";
  res.seed = cfg.seed;
  return res;
}

namespace {

// Minimal adaptive Nelder-Mead over n real parameters.
struct NelderMead {
  std::function<double(const std::vector<double>&)> f;
  std::int64_t evaluations = 0;

  std::pair<std::vector<double>, double> run(std::vector<double> x0, double step,
                                             int max_iter) {
    const size_t n = x0.size();
    const double alpha = 1.0, beta = 1.0 + 2.0 / n, gamma = 0.75 - 0.5 / n,
                 delta = 1.0 - 1.0 / n;
    std::vector<std::vector<double>> pts(n + 1, x0);
    std::vector<double> vals(n + 1);
    for (size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    for (size_t i = 0; i <= n; ++i) {
      vals[i] = f(pts[i]);
      ++evaluations;
    }
    std::vector<size_t> order(n + 1);
    for (int iter = 0; iter < max_iter; ++iter) {
      for (size_t i = 0; i <= n; ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](size_t a, size_t b) { return vals[a] < vals[b]; });
      if (vals[order[n]] - vals[order[0]] < 1e-13 * (1.0 + std::abs(vals[order[0]])))
        break;
      std::vector<double> centroid(n, 0.0);
      for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) centroid[k] += pts[order[i]][k] / n;
      const std::vector<double>& worst = pts[order[n]];
      auto blend = [&](double t) {
        std::vector<double> x(n);
        for (size_t k = 0; k < n; ++k) x[k] = centroid[k] + t * (centroid[k] - worst[k]);
        return x;
      };
      std::vector<double> xr = blend(alpha);
      double fr = f(xr);
      ++evaluations;
      if (fr < vals[order[0]]) {
        std::vector<double> xe = blend(alpha * beta);
        double fe = f(xe);
        ++evaluations;
        if (fe < fr) {
          pts[order[n]] = std::move(xe);
          vals[order[n]] = fe;
        } else {
          pts[order[n]] = std::move(xr);
          vals[order[n]] = fr;
        }
      } else if (fr < vals[order[n - 1]]) {
        pts[order[n]] = std::move(xr);
        vals[order[n]] = fr;
      } else {
        bool outside = fr < vals[order[n]];
        std::vector<double> xc = blend(outside ? alpha * gamma : -gamma);
        double fc = f(xc);
        ++evaluations;
        if (fc < std::min(fr, vals[order[n]])) {
          pts[order[n]] = std::move(xc);
          vals[order[n]] = fc;
        } else {  // shrink toward the best vertex
          for (size_t i = 1; i <= n; ++i) {
            size_t id = order[i];
            for (size_t k = 0; k < n; ++k)
              pts[id][k] = pts[order[0]][k] + delta * (pts[id][k] - pts[order[0]][k]);
            vals[id] = f(pts[id]);
            ++evaluations;
          }
        }
      }
    }
    size_t best = 0;
    for (size_t i = 1; i <= n; ++i)
      if (vals[i] < vals[best]) best = i;
    return {pts[best], vals[best]};
  }
};

Matrix params_to_state(const std::vector<double>& x, Index d) {
  Matrix m(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      m(i, j) = Complex(x[2 * (i * d + j)], x[2 * (i * d + j) + 1]);
  Matrix rho = m * m.adjoint();
  double tr = rho.trace().real();
  if (!(tr > 1e-300)) return Matrix::Identity(d, d) / static_cast<double>(d);
  return rho / tr;
}

}  // namespace

CoherentInfoResult q1_generic(const ChannelPair& pair, const OptimizerConfig& cfg) {
  const Index d = pair.iso.d_a;
  const size_t n = static_cast<size_t>(2 * d * d);
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  CoherentInfoResult res;
  res.method = "multistart simplex";
  res.seed = cfg.seed;

  for (int direction = 0; direction < 2; ++direction) {
    const double sign = direction == 0 ? -1.0 : 1.0;  // minimize sign * bias
    NelderMead nm;
    nm.f = [&](const std::vector<double>& x) {
      return sign * entropy_bias_fast(pair, params_to_state(x, d));
    };
    std::vector<double> best_x;
    double best_f = std::numeric_limits<double>::infinity();
    const int max_iter = 200 * static_cast<int>(n);
    for (int s = 0; s < cfg.multistart_count; ++s) {
      std::vector<double> x0(n);
      if (s == 0) {  // deterministic start at the maximally mixed state
        for (Index i = 0; i < d; ++i) x0[2 * (i * d + i)] = 1.0;
      } else {
        for (double& v : x0) v = gauss(rng);
      }
      auto first = nm.run(std::move(x0), 0.5, max_iter);
      auto second = nm.run(first.first, 0.05, max_iter);  // restart tighter
      auto& better = second.second <= first.second ? second : first;
      if (better.second < best_f) {
        best_f = better.second;
        best_x = std::move(better.first);
      }
    }
    Matrix state = params_to_state(best_x, d);
    if (direction == 0) {
      res.q1_b = -best_f;
      res.argmax_state = state;
    } else {
      res.q1_c = -best_f;
      res.argmin_state = state;
    }
    res.evaluations += nm.evaluations;
  }
  return res;
}

double boundary_scan_lambda0(double p, const OptimizerConfig& cfg) {
  if (p < 0.0 || p >= 0.5)
    throw std::invalid_argument("boundary_scan_lambda0: requires p in [0, 1/2)");
  auto positive = [&](double lambda) {
    return q1_amplitude_glued(p, lambda, cfg).q1_b > cfg.pos_threshold;
  };
  double lo = 0.0, hi = 0.5;
  if (!positive(lo)) return lo;
  while (hi - lo > 1e-4) {
    double mid = 0.5 * (lo + hi);
    (positive(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace qchan
