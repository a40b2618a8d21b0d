// lipsel: command-line front end.
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lipsel/constants.hpp"
#include "lipsel/generate.hpp"
#include "lipsel/json_io.hpp"
#include "lipsel/oracle.hpp"
#include "lipsel/refine.hpp"
#include "lipsel/select.hpp"

using namespace lipsel;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInternal = 2;

struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Loads and validates; validation problems are user errors.
Instance load_checked(const std::string& path) {
  Instance inst;
  try {
    inst = load_instance(path);
  } catch (const std::exception& e) {
    throw UserError(std::string("cannot read instance: ") + e.what());
  }
  const ValidationReport rep = validate(inst);
  if (!rep.ok()) {
    std::string msg = "invalid instance:";
    for (const std::string& v : rep.violations) msg += "\n  " + v;
    throw UserError(msg);
  }
  return inst;
}

Json ids_of(const Instance& inst, const std::vector<std::size_t>& idx) {
  Json j = Json::array();
  for (std::size_t i : idx) j.push_back(inst.elements[i]);
  return j;
}

Json polyline(const Rect& r) {
  Json j = Json::array();
  if (r.empty()) return j;
  const double x0 = r.ix.lo, x1 = r.ix.hi, y0 = r.iy.lo, y1 = r.iy.hi;
  for (Point p : {Point{x0, y0}, Point{x1, y0}, Point{x1, y1}, Point{x0, y1}, Point{x0, y0}})
    j.push_back(Json::array({ext_to_json(p.x1), ext_to_json(p.x2)}));
  return j;
}

// Boundary of s clipped to the box [-b, b]^2, counter-clockwise, closed.
Json clipped_outline(const SetExpr& s, double b) {
  SetExpr c = s;
  c.add(Rect::square({0.0, 0.0}, b));
  const std::optional<ConvexPoly> p = materialize(c);
  Json j = Json::array();
  if (!p) return j;
  std::vector<Point> v = vertices(*p);
  if (v.empty()) return j;
  Point mid{0.0, 0.0};
  for (Point q : v) mid = {mid.x1 + q.x1 / v.size(), mid.x2 + q.x2 / v.size()};
  std::sort(v.begin(), v.end(), [&](Point a, Point c2) {
    return std::atan2(a.x2 - mid.x2, a.x1 - mid.x1) < std::atan2(c2.x2 - mid.x2, c2.x1 - mid.x1);
  });
  for (Point q : v) j.push_back(point_to_json(q));
  j.push_back(point_to_json(v.front()));
  return j;
}

Json plot_data(const Instance& inst, const Outcome& o, double lambda1) {
  const double box = 2.0 * coordinate_scale(inst) + 2.0;
  Json j = Json::object();
  const std::vector<SetSpec> tt = tight_targets(inst);
  const bool with_f1 = std::isfinite(lambda1);
  const std::vector<SetExpr> f1s = with_f1 ? f1_all(inst, lambda1) : std::vector<SetExpr>{};
  for (std::size_t x = 0; x < inst.size(); ++x) {
    Json e;
    e["target"] = clipped_outline(SetExpr(tt[x]), box);
    if (with_f1) e["f1_hull"] = polyline(rect_hull(f1s[x]));
    if (o.selection) e["point"] = point_to_json(o.selection->values[x]);
    j[inst.elements[x]] = std::move(e);
  }
  return j;
}

Json outcome_json(const Instance& inst, const Outcome& o) {
  Json j;
  j["algorithm"] = o.algorithm;
  Json params = Json::object();
  for (const auto& [k, v] : o.params) params[k] = ext_to_json(v);
  j["params"] = std::move(params);
  j["seminorm_bound"] = ext_to_json(o.seminorm_bound);
  if (o.success()) {
    j["status"] = "success";
    j["selection"] = selection_to_json(inst, *o.selection);
    j["seminorm"] = ext_to_json(o.selection->seminorm);
  } else {
    j["status"] = "nogo";
    Json n;
    n["stage"] = to_string(o.nogo->stage);
    n["element"] = o.nogo->element ? Json(inst.elements[*o.nogo->element]) : Json(nullptr);
    j["nogo"] = std::move(n);
  }
  return j;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lipschitz selections of polyhedral set-valued mappings in the l_inf plane"};
  app.require_subcommand(1);

  std::string path;
  auto* validate_cmd = app.add_subcommand("validate", "check an instance file");
  validate_cmd->add_option("instance", path, "instance JSON")->required();

  std::string method = "R";
  auto* lambda_cmd = app.add_subcommand("lambda", "compute a constant");
  lambda_cmd->add_option("instance", path, "instance JSON")->required();
  lambda_cmd->add_option("--method", method, "R, R3, FP or W")
      ->check(CLI::IsMember({"R", "R3", "FP", "W"}));

  std::string algo = "driverR";
  double lambda1 = NAN, lambda2 = NAN, lambda = NAN, gamma = 1.0, m = NAN;
  std::string center = "auto", variant = "clipped";
  bool plot = false;
  auto* select_cmd = app.add_subcommand("select", "run a selection algorithm");
  select_cmd->add_option("instance", path, "instance JSON")->required();
  select_cmd->add_option("--algo", algo, "projection, iterative, driverR, driverFP or polygon")
      ->check(CLI::IsMember({"projection", "iterative", "driverR", "driverFP", "polygon"}));
  select_cmd->add_option("--lambda1", lambda1, "projection: first refinement parameter");
  select_cmd->add_option("--lambda2", lambda2, "projection: second refinement parameter");
  select_cmd->add_option("--lambda", lambda, "iterative: parameter");
  select_cmd->add_option("--gamma", gamma, "drivers: factor >= 1");
  select_cmd->add_option("--M", m, "polygon: parameter");
  select_cmd->add_option("--center", center, "projection: auto, origin or plain")
      ->check(CLI::IsMember({"auto", "origin", "plain"}));
  select_cmd->add_option("--variant", variant, "iterative: clipped or bounded")
      ->check(CLI::IsMember({"clipped", "bounded"}));
  select_cmd->add_flag("--emit-plot-data", plot, "add per-element outlines for plotting");

  auto* oracle_cmd = app.add_subcommand("oracle", "exact optimal selection by LP");
  oracle_cmd->add_option("instance", path, "instance JSON")->required();

  std::string sel_path;
  double eps = 1e-7;
  auto* verify_cmd = app.add_subcommand("verify", "check a selection against an instance");
  verify_cmd->add_option("instance", path, "instance JSON")->required();
  verify_cmd->add_option("selection", sel_path, "selection JSON (default: oracle output)");
  verify_cmd->add_option("--eps", eps, "membership tolerance");

  std::string kind = "halfplanes";
  std::size_t n = 5;
  std::uint64_t seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--kind", kind, "halfplanes, polygons, rects or line1d");
  gen_cmd->add_option("--n", n, "number of elements")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFail;
  }

  try {
    if (*validate_cmd) {
      Instance inst;
      try {
        inst = load_instance(path);
      } catch (const std::exception& e) {
        print(Json{{"valid", false}, {"violations", Json::array({e.what()})}});
        return kFail;
      }
      const ValidationReport rep = validate(inst);
      print(Json{{"valid", rep.ok()}, {"violations", rep.violations}});
      return rep.ok() ? kOk : kFail;
    }
    if (*gen_cmd) {
      Instance inst;
      try {
        inst = generate(corpus_kind_from_string(kind), n, seed);
      } catch (const std::invalid_argument& e) {
        throw UserError(e.what());
      }
      print(instance_to_json(inst));
      return kOk;
    }

    const Instance inst = load_checked(path);
    if (*lambda_cmd) {
      LambdaReport r;
      if (method == "R") r = lambda_R(inst);
      else if (method == "R3") {
        if (!inst.all_halfplanes()) throw UserError("method R3 needs half-plane targets");
        r = lambda_R_3var(inst);
      } else if (method == "FP") r = lambda_FP(inst);
      else r = lambda_W(inst);
      Json j{{"method", r.method}, {"value", ext_to_json(r.value)}, {"witness", ids_of(inst, r.witness)}};
      if (r.axis >= 0) j["axis"] = r.axis;
      print(j);
      return kOk;
    }
    if (*select_cmd) {
      Outcome o;
      double plot_lambda = NAN;
      try {
        if (algo == "projection") {
          if (std::isnan(lambda1) || std::isnan(lambda2)) throw UserError("projection needs --lambda1 and --lambda2");
          ProjectionOptions opt;
          opt.rule = center == "plain" ? CenterRule::Plain : center == "origin" ? CenterRule::Origin : CenterRule::Auto;
          o = projection_algorithm(inst, lambda1, lambda2, opt);
          plot_lambda = lambda1;
        } else if (algo == "iterative") {
          if (std::isnan(lambda)) lambda = lambda_FP(inst).value;
          if (std::isinf(lambda)) {
            o.algorithm = "iterative";
            o.params = {{"lambda", lambda}};
            o.nogo = NoGo{NoGoStage::Lambda, std::nullopt};
          } else {
            o = iterative_algorithm(inst, lambda, variant == "bounded" ? IterativeVariant::Bounded : IterativeVariant::Clipped);
            plot_lambda = lambda;
          }
        } else if (algo == "driverR") {
          o = driver_lambdaR(inst, gamma);
        } else if (algo == "driverFP") {
          o = driver_lambdaFP(inst, gamma);
        } else {
          if (std::isnan(m)) throw UserError("polygon needs --M");
          o = polygon_driver(inst, m);
        }
      } catch (const std::invalid_argument& e) {
        throw UserError(e.what());
      }
      Json j = outcome_json(inst, o);
      if (plot) j["plot"] = plot_data(inst, o, plot_lambda);
      print(j);
      return o.success() ? kOk : kFail;
    }
    if (*oracle_cmd) {
      const OracleResult r = optimal_selection(inst);
      Json j{{"lambda", ext_to_json(r.lambda)}};
      if (r.selection) j["selection"] = selection_to_json(inst, *r.selection);
      print(j);
      return r.selection ? kOk : kFail;
    }
    if (*verify_cmd) {
      Selection sel;
      if (sel_path.empty()) {
        const OracleResult r = optimal_selection(inst);
        if (!r.selection) throw UserError("no selection with finite seminorm exists");
        sel = *r.selection;
      } else {
        try {
          std::ifstream in(sel_path);
          if (!in) throw std::invalid_argument("cannot open " + sel_path);
          std::stringstream ss;
          ss << in.rdbuf();
          sel = selection_from_json(inst, Json::parse(ss.str()));
        } catch (const std::exception& e) {
          throw UserError(std::string("cannot read selection: ") + e.what());
        }
      }
      const VerifyReport rep = verify_selection(inst, sel, eps);
      Json v = Json::array();
      for (const auto& [x, d] : rep.violations) v.push_back(Json{{"element", inst.elements[x]}, {"distance", d}});
      print(Json{{"pass", rep.pass},
                 {"claimed_seminorm", ext_to_json(sel.seminorm)},
                 {"recomputed_seminorm", ext_to_json(rep.recomputed_seminorm)},
                 {"violations", std::move(v)}});
      return rep.pass ? kOk : kFail;
    }
  } catch (const UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
