#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gray16/catalog.hpp"
#include "gray16/cli.hpp"
#include "gray16/extension.hpp"
#include "gray16/io.hpp"

namespace py = pybind11;
using namespace gray16;

namespace {

std::vector<std::string> words_of(const GrayMapTable& map) {
  std::vector<std::string> out;
  for (const auto& w : map.words) out.push_back(w.str());
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  auto condition = [](const ConditionResult& c) {
    py::dict d;
    d["pass"] = c.pass;
    d["detail"] = c.detail;
    return d;
  };
  py::dict d;
  d["pass"] = r.pass();
  d["c1"] = condition(r.c1);
  d["c2"] = condition(r.c2);
  d["c3"] = condition(r.c3);
  d["c4"] = condition(r.c4);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gray maps over 2-groups of order up to 16";

  py::class_<GroupTable>(m, "GroupTable")
      .def_property_readonly("order", &GroupTable::order)
      .def_property_readonly("labels", &GroupTable::labels)
      .def("mul", &GroupTable::mul)
      .def("inverse_of", &GroupTable::inverse_of)
      .def("element_order", &GroupTable::element_order)
      .def("label", &GroupTable::label)
      .def("index_of", [](const GroupTable& g, const std::string& l) {
        return g.index_of(l);
      })
      .def("__len__", &GroupTable::order)
      .def("__repr__", [](const GroupTable& g) {
        return "<GroupTable order=" + std::to_string(g.order()) + ">";
      });

  py::class_<Automorphism>(m, "Automorphism")
      .def_readonly("map", &Automorphism::map)
      .def_property_readonly("order", &automorphism_order)
      .def("apply", &Automorphism::apply);

  py::class_<GrayMapTable>(m, "GrayMapTable")
      .def_readonly("group", &GrayMapTable::group)
      .def_readonly("length", &GrayMapTable::length)
      .def_property_readonly("words", &words_of)
      .def("word", [](const GrayMapTable& t, int i) { return t.word(i).str(); })
      .def("__repr__", [](const GrayMapTable& t) {
        return "<GrayMapTable order=" + std::to_string(t.group.order()) +
               " length=" + std::to_string(t.length) + ">";
      });

  py::class_<SurveyRow>(m, "SurveyRow")
      .def_readonly("group", &SurveyRow::group)
      .def_readonly("decomposition", &SurveyRow::decomposition)
      .def_readonly("construction", &SurveyRow::construction)
      .def_readonly("verdict", &SurveyRow::verdict)
      .def_readonly("witness", &SurveyRow::witness)
      .def_readonly("paper_section", &SurveyRow::paper_section)
      .def_readonly("valid", &SurveyRow::valid)
      .def_readonly("map", &SurveyRow::map);

  m.def("builtin_names", [] { return builtin_names(); });
  m.def("build_builtin", [](const std::string& n) { return build_builtin(n); });
  m.def("direct_product", &direct_product);
  m.def("is_isomorphic", [](const GroupTable& a, const GroupTable& b) {
    auto iso = is_isomorphic(a, b);
    return iso ? py::cast(iso->map) : py::object(py::none());
  });
  m.def("subgroups", &subgroups);
  m.def("count_involutions", &count_involutions);
  m.def("contains_subgroup_isomorphic_to", &contains_subgroup_isomorphic_to);

  m.def("automorphism_group", &automorphism_group);
  m.def("aut_order", [](const GroupTable& g) {
    return automorphism_group(g).size();
  });
  m.def("inner_automorphism", &inner_automorphism);

  m.def("classify_order16", [] {
    py::list out;
    for (const auto& g : classify_order16()) {
      py::dict d;
      d["name"] = g.name;
      d["group"] = g.group;
      d["description"] = g.description;
      d["extension_type"] = g.extension_literal;
      out.append(std::move(d));
    }
    return out;
  });

  m.def("hamming_weight", [](const std::string& w) {
    return hamming_weight(BinaryWord::parse(w));
  });
  m.def("hamming_distance", [](const std::string& u, const std::string& v) {
    return hamming_distance(BinaryWord::parse(u), BinaryWord::parse(v));
  });

  m.def("base_gray_map", [](const std::string& n) { return base_gray_map(n); });
  m.def("standard_type1", [](const std::string& n) { return standard_type1(n); });
  m.def("type1_catalog", [] {
    py::dict out;
    for (const auto& [name, map] : type1_catalog()) out[name.c_str()] = map;
    return out;
  });
  m.def("verify_gray_map", [](const GrayMapTable& t) {
    return report_dict(verify_gray_map(t));
  });
  m.def("weight_parity_feasible", [](const GroupTable& g, int n) {
    const ParityFeasibility p = weight_parity_feasible(g, n);
    py::dict d;
    d["feasible"] = p.feasible;
    d["involutions"] = p.involutions;
    d["odd_weight_classes"] = p.odd_weight_classes;
    d["reason"] = p.reason;
    return d;
  });
  m.def("type2_survey", [](bool exhaustive) { return type2_survey(exhaustive); },
        py::arg("exhaustive") = false);
  m.def("canonical_type2", [](const std::string& n) { return canonical_type2(n); });
  m.def("graymap_to_text", &graymap_to_text);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  });
}
