#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lipsel/constants.hpp"
#include "lipsel/generate.hpp"
#include "lipsel/json_io.hpp"
#include "lipsel/oracle.hpp"
#include "lipsel/select.hpp"

namespace py = pybind11;
using namespace lipsel;

// Instances cross the boundary as JSON text; the Python wrapper handles dicts.
namespace {

Instance parse(const std::string& text) { return instance_from_json(Json::parse(text)); }

std::string outcome_text(const Instance& inst, const Outcome& o) {
  Json j;
  j["algorithm"] = o.algorithm;
  Json params = Json::object();
  for (const auto& [k, v] : o.params) params[k] = ext_to_json(v);
  j["params"] = std::move(params);
  j["seminorm_bound"] = ext_to_json(o.seminorm_bound);
  if (o.success()) {
    j["status"] = "success";
    j["selection"] = selection_to_json(inst, *o.selection);
  } else {
    j["status"] = "nogo";
    j["nogo"] = {{"stage", to_string(o.nogo->stage)},
                 {"element", o.nogo->element ? Json(inst.elements[*o.nogo->element]) : Json(nullptr)}};
  }
  return j.dump();
}

std::string lambda_text(const Instance& inst, const LambdaReport& r) {
  Json w = Json::array();
  for (std::size_t i : r.witness) w.push_back(inst.elements[i]);
  return Json{{"method", r.method}, {"value", ext_to_json(r.value)}, {"witness", std::move(w)}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lipschitz selections in the l_inf plane";

  m.def("validate", [](const std::string& text) { return validate(parse(text)).violations; });

  m.def("generate", [](const std::string& kind, std::size_t n, std::uint64_t seed) {
    return instance_to_json(generate(corpus_kind_from_string(kind), n, seed)).dump();
  });

  m.def("oracle", [](const std::string& text) {
    const Instance inst = parse(text);
    const OracleResult r = optimal_selection(inst);
    Json j{{"lambda", ext_to_json(r.lambda)}};
    if (r.selection) j["selection"] = selection_to_json(inst, *r.selection);
    return j.dump();
  });

  m.def("lambda_constant", [](const std::string& text, const std::string& method) {
    const Instance inst = parse(text);
    if (method == "R") return lambda_text(inst, lambda_R(inst));
    if (method == "R3") return lambda_text(inst, lambda_R_3var(inst));
    if (method == "FP") return lambda_text(inst, lambda_FP(inst));
    if (method == "W") return lambda_text(inst, lambda_W(inst));
    throw std::invalid_argument("unknown method: " + method);
  });

  m.def(
      "select",
      [](const std::string& text, const std::string& algo, double a, double b) {
        const Instance inst = parse(text);
        Outcome o;
        if (algo == "projection") o = projection_algorithm(inst, a, b);
        else if (algo == "iterative") o = iterative_algorithm(inst, a);
        else if (algo == "driverR") o = driver_lambdaR(inst, a);
        else if (algo == "driverFP") o = driver_lambdaFP(inst, a);
        else if (algo == "polygon") o = polygon_driver(inst, a);
        else throw std::invalid_argument("unknown algorithm: " + algo);
        return outcome_text(inst, o);
      },
      py::arg("instance"), py::arg("algo"), py::arg("a") = 1.0, py::arg("b") = 1.0);

  m.def("verify", [](const std::string& text, const std::string& selection, double eps) {
    const Instance inst = parse(text);
    const VerifyReport r = verify_selection(inst, selection_from_json(inst, Json::parse(selection)), eps);
    return py::make_tuple(r.pass, r.recomputed_seminorm);
  });
}
