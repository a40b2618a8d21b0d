#include <fstream>
#include <sstream>

#include "lipsel/json_io.hpp"

namespace lipsel {

double ext_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw std::invalid_argument("expected a number or \"inf\", got " + j.dump());
}

Json ext_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? Json("inf") : Json("-inf");
  return Json(v);
}

namespace {

HalfPlane halfplane_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("alpha")) throw std::invalid_argument("half-plane needs \"n\" and \"alpha\"");
  const Json& n = j.at("n");
  if (!n.is_array() || n.size() != 2) throw std::invalid_argument("half-plane normal must have two entries");
  return HalfPlane{n[0].get<double>(), n[1].get<double>(), j.at("alpha").get<double>()};
}

Json halfplane_to_json(const HalfPlane& h) {
  Json j;
  j["type"] = "halfplane";
  j["n"] = {h.n1, h.n2};
  j["alpha"] = h.alpha;
  return j;
}

Interval interval_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("interval must be [lo, hi]");
  const double lo = ext_from_json(j[0]), hi = ext_from_json(j[1]);
  return Interval::make(lo, hi);
}

Json interval_to_json(const Interval& i) { return Json::array({ext_to_json(i.lo), ext_to_json(i.hi)}); }

SetSpec target_from_json(const Json& j) {
  const std::string type = j.value("type", "");
  if (type == "halfplane") return halfplane_from_json(j);
  if (type == "rect") return Rect{interval_from_json(j.at("x")), interval_from_json(j.at("y"))};
  if (type == "polygon") {
    ConvexPoly p;
    for (const Json& e : j.at("edges")) p.edges.push_back(halfplane_from_json(e));
    return p;
  }
  throw std::invalid_argument("unknown target type: \"" + type + "\"");
}

Json target_to_json(const SetSpec& s) {
  if (const auto* h = std::get_if<HalfPlane>(&s)) return halfplane_to_json(*h);
  if (const auto* r = std::get_if<Rect>(&s)) {
    Json j;
    j["type"] = "rect";
    j["x"] = interval_to_json(r->ix);
    j["y"] = interval_to_json(r->iy);
    return j;
  }
  const auto& p = std::get<ConvexPoly>(s);
  Json j;
  j["type"] = "polygon";
  j["edges"] = Json::array();
  for (const HalfPlane& h : p.edges) j["edges"].push_back(halfplane_to_json(h));
  return j;
}

}  // namespace

Instance instance_from_json(const Json& j) {
  Instance inst;
  for (const Json& e : j.at("elements")) inst.elements.push_back(e.is_string() ? e.get<std::string>() : e.dump());
  const Json& rho = j.at("rho");
  if (rho.contains("matrix")) {
    std::vector<std::vector<double>> m;
    for (const Json& row : rho.at("matrix")) {
      std::vector<double> r;
      for (const Json& v : row) r.push_back(ext_from_json(v));
      m.push_back(std::move(r));
    }
    inst.rho = PseudoMetric::from_matrix(m);
  } else if (rho.contains("points")) {
    std::vector<Point> pts;
    for (const Json& p : rho.at("points")) {
      if (!p.is_array() || p.size() != 2) throw std::invalid_argument("points must be [x, y]");
      pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    const std::string norm = rho.value("norm", "linf");
    if (norm != "linf" && norm != "l2") throw std::invalid_argument("unknown norm: " + norm);
    inst.rho = PseudoMetric::from_points(pts, norm == "linf" ? PseudoMetric::Norm::Linf : PseudoMetric::Norm::L2);
  } else {
    throw std::invalid_argument("rho needs \"matrix\" or \"points\"");
  }
  for (const Json& t : j.at("targets")) inst.targets.push_back(target_from_json(t));
  return inst;
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["elements"] = inst.elements;
  Json m = Json::array();
  for (std::size_t i = 0; i < inst.rho.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < inst.rho.size(); ++k) row.push_back(ext_to_json(inst.rho(i, k)));
    m.push_back(std::move(row));
  }
  j["rho"] = {{"matrix", std::move(m)}};
  j["targets"] = Json::array();
  for (const SetSpec& s : inst.targets) j["targets"].push_back(target_to_json(s));
  return j;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return instance_from_json(Json::parse(ss.str()));
}

Json point_to_json(Point p) { return Json::array({p.x1, p.x2}); }

Json rect_to_json(const Rect& r) {
  if (r.empty()) return Json(nullptr);
  return Json{{"x", interval_to_json(r.ix)}, {"y", interval_to_json(r.iy)}};
}

Json selection_to_json(const Instance& inst, const Selection& sel) {
  Json values = Json::object();
  for (std::size_t i = 0; i < sel.values.size(); ++i) values[inst.elements[i]] = point_to_json(sel.values[i]);
  return Json{{"values", std::move(values)}, {"seminorm", ext_to_json(sel.seminorm)}};
}

Selection selection_from_json(const Instance& inst, const Json& j) {
  const Json* body = &j;
  if (j.contains("selection") && j.at("selection").is_object()) body = &j.at("selection");
  const Json& values = body->at("values");
  Selection sel;
  sel.values.resize(inst.size());
  std::vector<bool> seen(inst.size(), false);
  for (auto it = values.begin(); it != values.end(); ++it) {
    const std::size_t i = inst.index_of(it.key());
    const Json& p = it.value();
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("selection value must be [x, y]");
    sel.values[i] = {p[0].get<double>(), p[1].get<double>()};
    seen[i] = true;
  }
  for (std::size_t i = 0; i < inst.size(); ++i)
    if (!seen[i]) throw std::invalid_argument("selection misses element " + inst.elements[i]);
  sel.seminorm = body->contains("seminorm") ? ext_from_json(body->at("seminorm")) : kInf;
  return sel;
}

}  // namespace lipsel
