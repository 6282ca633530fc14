#include "qchan/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <thread>

#include "qchan/asymptotics.hpp"
#include "qchan/nonadditivity.hpp"

namespace qchan {

SweepModel parse_model(const std::string& text) {
  if (text == "amplitude") return SweepModel::amplitude;
  if (text == "dephrasure") return SweepModel::dephrasure;
  throw std::invalid_argument("unknown model '" + text +
                              "' (expected amplitude or dephrasure)");
}

SweepQuantity parse_quantity(const std::string& text) {
  if (text == "q1B") return SweepQuantity::q1B;
  if (text == "q1C") return SweepQuantity::q1C;
  if (text == "delta2") return SweepQuantity::delta2;
  if (text == "delta2star") return SweepQuantity::delta2star;
  if (text == "boundaries") return SweepQuantity::boundaries;
  if (text == "asym-compare" || text == "asym_compare")
    return SweepQuantity::asym_compare;
  throw std::invalid_argument("unknown quantity '" + text + "'");
}

namespace {

double parse_number(const std::string& text) {
  size_t used = 0;
  double v;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number '" + text + "'");
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used])))
    ++used;
  if (used != text.size())
    throw std::invalid_argument("bad number '" + text + "'");
  return v;
}

}  // namespace

GridSpec GridSpec::parse(const std::string& text) {
  GridSpec g;
  if (text.empty()) return g;
  if (text.find(':') != std::string::npos) {
    const size_t c1 = text.find(':');
    const size_t c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
      throw std::invalid_argument("grid '" + text + "' must be lo:hi:step");
    const double lo = parse_number(text.substr(0, c1));
    const double hi = parse_number(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_number(text.substr(c2 + 1));
    if (!(step > 0.0) || hi < lo)
      throw std::invalid_argument("grid '" + text + "' needs hi >= lo, step > 0");
    const long n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long k = 0; k <= n; ++k) g.values.push_back(lo + step * k);
  } else {
    size_t pos = 0;
    while (pos <= text.size()) {
      const size_t comma = text.find(',', pos);
      const std::string item =
          text.substr(pos, comma == std::string::npos ? std::string::npos
                                                      : comma - pos);
      g.values.push_back(parse_number(item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return g;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Row {
  std::string text;
  bool ok = true;
};

struct Point {
  double p = 0.0;
  double second = 0.0;  // lambda or delta-lambda, quantity dependent
  bool has_second = false;
};

const char* header_for(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::q1B:
    case SweepQuantity::q1C:
      return "p,lambda,q1,argopt_param,evaluations,status";
    case SweepQuantity::delta2:
    case SweepQuantity::delta2star:
      return "p,lambda,delta_lambda,delta2,best_ansatz_param,status";
    case SweepQuantity::boundaries:
      return "p,lambda0,lambda1,status";
    case SweepQuantity::asym_compare:
      return "p,delta_lambda,numeric,asymptote,log_ratio,status";
  }
  return "";
}

Row q1_row(const SweepRequest& req, const Point& pt) {
  const bool want_b = req.quantity == SweepQuantity::q1B;
  const CoherentInfoResult res =
      req.model == SweepModel::amplitude
          ? q1_amplitude_glued(pt.p, pt.second, req.optimizer)
          : q1_dephrasure(pt.p, pt.second, req.optimizer);
  const double q1 = want_b ? res.q1_b : res.q1_c;
  const double arg = want_b ? res.argmax_param : res.argmin_param;
  return {fmt(pt.p) + "," + fmt(pt.second) + "," + fmt(q1) + "," + fmt(arg) +
              "," + std::to_string(res.evaluations) + ",ok",
          true};
}

Row delta2_row(const SweepRequest& req, const Point& pt) {
  double lambda, delta_lambda;
  NonAddResult res;
  if (req.quantity == SweepQuantity::delta2) {
    delta_lambda = pt.second;
    lambda = lambda0(pt.p) - delta_lambda;
    res = delta2_amplitude(pt.p, lambda, req.optimizer);
  } else {
    lambda = pt.has_second ? g_curve(pt.p) - pt.second : j_curve(pt.p);
    delta_lambda = g_curve(pt.p) - lambda;
    const NonAddResult zeta = delta2_star_dephrasure(
        pt.p, lambda, req.optimizer, AnsatzFamily::zeta_mix);
    const NonAddResult rep = delta2_star_dephrasure(
        pt.p, lambda, req.optimizer, AnsatzFamily::repetition_eta);
    res = zeta.delta2 >= rep.delta2 ? zeta : rep;
  }
  return {fmt(pt.p) + "," + fmt(lambda) + "," + fmt(delta_lambda) + "," +
              fmt(res.delta2) + "," + fmt(res.best_ansatz_param) + ",ok",
          true};
}

Row boundaries_row(const SweepRequest& req, const Point& pt) {
  double top, bottom;
  if (req.model == SweepModel::amplitude) {
    top = lambda0(pt.p);
    bottom = boundary_scan_lambda1(pt.p, req.optimizer);
  } else {
    top = g_curve(pt.p);
    bottom = boundary_scan_lambda1_dephrasure(pt.p, req.optimizer);
  }
  return {fmt(pt.p) + "," + fmt(top) + "," + fmt(bottom) + ",ok", true};
}

Row asym_row(const SweepRequest& req, const Point& pt) {
  const InnerKind kind = req.model == SweepModel::amplitude
                             ? InnerKind::amplitude
                             : InnerKind::dephasing;
  const double top =
      kind == InnerKind::amplitude ? lambda0(pt.p) : g_curve(pt.p);
  const double lambda = top - pt.second;
  const CoherentInfoResult res =
      kind == InnerKind::amplitude
          ? q1_amplitude_glued(pt.p, lambda, req.optimizer)
          : q1_dephrasure(pt.p, lambda, req.optimizer);
  const double asym = q1B_asymptote(kind, pt.p, pt.second);
  const bool defined = res.q1_b > 0.0 && asym > 0.0;
  const double log_ratio =
      defined ? std::log(res.q1_b / asym) : std::nan("");
  return {fmt(pt.p) + "," + fmt(pt.second) + "," + fmt(res.q1_b) + "," +
              fmt(asym) + "," + fmt(log_ratio) +
              (defined ? ",ok" : ",failed"),
          defined};
}

Row failed_row(SweepQuantity q, const Point& pt) {
  const std::string nan = fmt(std::nan(""));
  switch (q) {
    case SweepQuantity::q1B:
    case SweepQuantity::q1C:
      return {fmt(pt.p) + "," + fmt(pt.second) + "," + nan + "," + nan +
                  ",0,failed",
              false};
    case SweepQuantity::delta2:
    case SweepQuantity::delta2star:
      return {fmt(pt.p) + "," + nan + "," + fmt(pt.second) + "," + nan + "," +
                  nan + ",failed",
              false};
    case SweepQuantity::boundaries:
      return {fmt(pt.p) + "," + nan + "," + nan + ",failed", false};
    case SweepQuantity::asym_compare:
      return {fmt(pt.p) + "," + fmt(pt.second) + "," + nan + "," + nan + "," +
                  nan + ",failed",
              false};
  }
  return {"", false};
}

}  // namespace

SweepOutcome run_sweep(const SweepRequest& req) {
  SweepOutcome out;
  auto usage = [&](const std::string& msg) {
    out.exit_code = 2;
    out.message = msg;
    return out;
  };
  if (req.output_path.empty()) return usage("output path is required");
  if (req.p_grid.values.empty()) return usage("p grid is empty");
  const bool lambda_optional = req.quantity == SweepQuantity::boundaries ||
                               req.quantity == SweepQuantity::delta2star;
  if (req.lambda_grid.values.empty() && !lambda_optional)
    return usage("lambda grid is empty");
  for (double v : req.p_grid.values)
    if (!(v >= 0.0 && v <= 1.0)) return usage("p grid value outside [0, 1]");
  for (double v : req.lambda_grid.values)
    if (!(v >= 0.0 && v <= 1.0))
      return usage("lambda grid value outside [0, 1]");
  if (req.quantity == SweepQuantity::delta2 && req.model != SweepModel::amplitude)
    return usage("quantity delta2 requires model amplitude");
  if (req.quantity == SweepQuantity::delta2star &&
      req.model != SweepModel::dephrasure)
    return usage("quantity delta2star requires model dephrasure");

  std::vector<double> ps = req.p_grid.values;
  std::vector<double> seconds = req.lambda_grid.values;
  std::sort(ps.begin(), ps.end());
  std::sort(seconds.begin(), seconds.end());

  std::vector<Point> points;
  const bool per_p_only =
      req.quantity == SweepQuantity::boundaries || seconds.empty();
  for (double p : ps) {
    if (per_p_only)
      points.push_back({p, 0.0, false});
    else
      for (double s : seconds) points.push_back({p, s, true});
  }

  std::vector<Row> rows(points.size());
  auto eval_one = [&](size_t i) {
    try {
      switch (req.quantity) {
        case SweepQuantity::q1B:
        case SweepQuantity::q1C:
          rows[i] = q1_row(req, points[i]);
          break;
        case SweepQuantity::delta2:
        case SweepQuantity::delta2star:
          rows[i] = delta2_row(req, points[i]);
          break;
        case SweepQuantity::boundaries:
          rows[i] = boundaries_row(req, points[i]);
          break;
        case SweepQuantity::asym_compare:
          rows[i] = asym_row(req, points[i]);
          break;
      }
    } catch (const std::exception&) {
      rows[i] = failed_row(req.quantity, points[i]);
    }
  };

  int workers = req.parallelism > 0
                    ? req.parallelism
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp<int>(workers, 1, static_cast<int>(points.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < points.size(); ++i) eval_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> crew;
    for (int w = 0; w < workers; ++w)
      crew.emplace_back([&] {
        for (size_t i; (i = next.fetch_add(1)) < points.size();) eval_one(i);
      });
    for (auto& t : crew) t.join();
  }

  const std::string tmp = req.output_path + ".tmp";
  {
    std::ofstream file(tmp, std::ios::trunc);
    if (!file) return usage("cannot open output path '" + tmp + "'");
    file << header_for(req.quantity) << "\n";
    for (const Row& r : rows) file << r.text << "\n";
    if (!file.good()) return usage("write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), req.output_path.c_str()) != 0)
    return usage("cannot move output into place at '" + req.output_path + "'");

  out.rows = static_cast<int>(rows.size());
  for (const Row& r : rows)
    if (!r.ok) ++out.failed;
  out.exit_code = out.failed > 0 ? 1 : 0;
  return out;
}

}  // namespace qchan
