#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "torsionlab/catcore/generators.hpp"
#include "torsionlab/cli/cli.hpp"
#include "torsionlab/cli/text_format.hpp"
#include "torsionlab/error.hpp"
#include "torsionlab/topo/topology.hpp"
#include "torsionlab/torsion/torsion.hpp"

namespace py = pybind11;
using namespace torsionlab;

namespace {

  // pybind11 holders cannot point to const; the core takes CategoryPtr.
  using PyCat = std::shared_ptr<Category>;

  // Objects cross the boundary by name, morphisms by label.
  std::size_t object_of(Category const& cat, std::string const& name) {
    return cat.object_index(name);
  }

  std::vector<std::size_t> objects_of(Category const& cat, std::vector<std::string> const& names) {
    std::vector<std::size_t> out;
    for (auto const& n : names) {
      out.push_back(object_of(cat, n));
    }
    return out;
  }

  PyCat category_from_text(std::string const& text) {
    return std::make_shared<Category>(compile_quiver(parse_category(text)));
  }

  PyCat generated(GeneratedCategory g) {
    return std::make_shared<Category>(std::move(g.category));
  }

  Field field_of(std::string const& text) {
    return Field::parse(text);
  }

  py::dict result_dict(AxiomResult const& r) {
    py::dict d;
    d["verdict"]        = to_string(r.verdict);
    d["note"]           = r.note;
    d["counterexample"] = r.counterexample;
    return d;
  }

  py::dict axioms_dict(AxiomReport const& r) {
    py::dict d;
    d["T1"]      = result_dict(r.t1);
    d["T2"]      = result_dict(r.t2);
    d["T3"]      = result_dict(r.t3);
    d["T4"]      = result_dict(r.t4);
    d["linear"]  = r.linear();
    d["gabriel"] = r.gabriel();
    return d;
  }

  py::dict topo_check_dict(TopoCheck const& c) {
    py::dict d;
    d["verdict"] = to_string(c.verdict);
    d["note"]    = c.note;
    d["witness"] = c.witness;
    return d;
  }

  py::dict closure_dict(ClosureResult const& c) {
    py::dict d;
    d["closed"]  = c.closed;
    d["checked"] = c.checked;
    d["witness"] = c.witness;
    return d;
  }

  ModuleClassSpec class_spec(Category const& cat, py::object const& spec) {
    if (py::isinstance<FilterFamily>(spec)) {
      return FilterInduced{spec.cast<FilterFamily>()};
    }
    if (py::isinstance<Module>(spec)) {
      return SigmaOf{spec.cast<Module>()};
    }
    return VanishingAt{objects_of(cat, spec.cast<std::vector<std::string>>())};
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact torsion-theory checks on finite-dimensional module categories";

  // Later registrations are tried first, so the base class goes first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<CeilingExceeded>(m, "CeilingExceeded", base);
  py::register_exception<NotAFilter>(m, "NotAFilter", base);

  py::class_<Category, PyCat>(m, "Category")
      .def_static("parse", &category_from_text, py::arg("text"))
      .def_static("linear", [](std::size_t n, std::string const& f) { return generated(gen_linear(n, field_of(f))); },
                  py::arg("n"), py::arg("field") = "GF(2)")
      .def_static("loop", [](std::size_t b, std::string const& f) { return generated(gen_loop(b, field_of(f))); },
                  py::arg("bound"), py::arg("field") = "GF(2)")
      .def_static(
          "mesh",
          [](std::size_t n, std::size_t w, std::string const& f) { return generated(gen_mesh_window(n, w, field_of(f))); },
          py::arg("n"), py::arg("window"), py::arg("field") = "GF(2)")
      .def_static(
          "tube",
          [](std::size_t r, std::size_t d, std::string const& f) { return generated(gen_stable_tube(r, d, field_of(f))); },
          py::arg("rank"), py::arg("depth"), py::arg("field") = "GF(2)")
      .def_property_readonly("objects", &Category::objects)
      .def_property_readonly("field", [](Category const& c) { return c.field().to_string(); })
      .def("hom_dim",
           [](Category const& c, std::string const& a, std::string const& b) {
             return c.hom_dim(object_of(c, a), object_of(c, b));
           })
      .def("total_hom_dim", &Category::total_hom_dim)
      .def("morphisms", [](Category const& c, std::string const& a, std::string const& b) {
        std::vector<std::string> out;
        for (auto const& f : c.all_morphisms(object_of(c, a), object_of(c, b))) {
          out.push_back(morphism_label(c, f));
        }
        return out;
      });

  py::class_<Module>(m, "Module")
      .def_static("parse", [](std::string const& t, PyCat const& c) { return parse_module(t, c); }, py::arg("text"), py::arg("category"))
      .def_static("representable",
                  [](PyCat const& c, std::string const& x) { return representable(c, object_of(*c, x)); })
      .def_static("dual_corepresentable",
                  [](PyCat const& c, std::string const& x) { return dual_corepresentable(c, object_of(*c, x)); })
      .def_property_readonly("dims", &Module::dims)
      .def("serialize", &serialize_module)
      .def("is_isomorphic", [](Module const& a, Module const& b) { return is_isomorphic(a, b); })
      .def("__repr__", &Module::to_string);

  py::class_<RightIdeal>(m, "RightIdeal")
      .def_static("parse", [](std::string const& t, PyCat const& c) { return parse_ideal(t, c); }, py::arg("text"), py::arg("category"))
      .def_property_readonly("target", [](RightIdeal const& i) { return i.cat().object_name(i.target()); })
      .def_property_readonly("total_dim", &RightIdeal::total_dim)
      .def("contains", py::overload_cast<RightIdeal const&>(&RightIdeal::contains, py::const_))
      .def("residuate",
           [](RightIdeal const& i, std::string const& h) {
             auto f = parse_morphism(h, i.cat(), i.target());
             return f ? residuate(i, *f) : RightIdeal::whole(i.category_ptr(), i.target());
           })
      .def("serialize", &serialize_ideal)
      .def("__eq__", [](RightIdeal const& a, RightIdeal const& b) { return a == b; });

  py::class_<FilterFamily>(m, "FilterFamily")
      .def_static("parse", [](std::string const& t, PyCat const& c) { return parse_filter(t, c); }, py::arg("text"), py::arg("category"))
      .def_static("improper", [](PyCat const& c) { return FilterFamily::improper(c); })
      .def_static("full", [](PyCat const& c) { return FilterFamily::full(c); })
      .def_static("vanishing",
                  [](PyCat const& c, std::vector<std::string> const& objs) {
                    return vanishing_filter(c, objects_of(*c, objs));
                  })
      .def("contains", [](FilterFamily const& f, RightIdeal const& i) { return filter_member(f, i); })
      .def("serialize", &serialize_filter)
      .def("__repr__", &FilterFamily::to_string);

  py::class_<Universe>(m, "Universe")
      .def_property_readonly("size", &Universe::size)
      .def_property_readonly("modules", [](Universe const& u) { return u.modules; })
      .def("index_of", &Universe::index_of);

  m.def(
      "enumerate_universe",
      [](PyCat const& c, std::size_t bound, double ceiling) { return enumerate_universe(c, bound, ceiling); },
      py::arg("category"), py::arg("dim_bound"),
        py::arg("ceiling") = 0.0);
  m.def(
      "right_ideals",
      [](PyCat const& c, std::string const& x, double ceiling) {
        return enumerate_right_ideals(c, object_of(*c, x), ceiling);
      },
      py::arg("category"), py::arg("object"), py::arg("ceiling") = 0.0);
  m.def(
      "filter_families", [](PyCat const& c, double ceiling) { return enumerate_filter_families(c, ceiling); },
      py::arg("category"), py::arg("ceiling") = 0.0);

  m.def(
      "check_axioms", [](FilterFamily const& f, double ceiling) { return axioms_dict(check_axioms(f, ceiling)); },
      py::arg("filter"), py::arg("ceiling") = 0.0);
  m.def("torsion_member", &torsion_member, py::arg("filter"), py::arg("module"));
  m.def(
      "filter_from_class",
      [](Universe const& u, py::object const& spec) { return filter_from_class(u, class_spec(*u.cat, spec)); },
      py::arg("universe"), py::arg("cls"), "cls: a FilterFamily, a generator Module, or a list of object names.");
  m.def(
      "roundtrip",
      [](Universe const& u, FilterFamily const& f) {
        auto     r = roundtrip_filter(u, f);
        py::dict d;
        d["ideal_level"]      = r.ideal_level;
        d["class_level"]      = r.class_level;
        d["ideal_mismatches"] = r.ideal_mismatches;
        d["class_mismatches"] = r.class_mismatches;
        d["error"]            = r.error;
        return d;
      },
      py::arg("universe"), py::arg("filter"));
  m.def(
      "closure",
      [](Universe const& u, py::object const& spec) {
        auto     r = closure_report(u, class_spec(*u.cat, spec));
        py::dict d;
        d["subobjects"] = closure_dict(r.subobjects);
        d["quotients"]  = closure_dict(r.quotients);
        d["coproducts"] = closure_dict(r.coproducts);
        d["extensions"] = closure_dict(r.extensions);
        return d;
      },
      py::arg("universe"), py::arg("cls"));
  m.def(
      "sigma_member",
      [](Module const& gen, Module const& n, std::size_t max_copies) {
        auto r = sigma_member(gen, n, SigmaOptions{max_copies});
        return py::make_tuple(to_string(r.verdict), r.witness);
      },
      py::arg("generator"), py::arg("module"), py::arg("max_copies") = 24);
  m.def(
      "cogenerator_check",
      [](Module const& e, FilterFamily const& f, Universe const& u) {
        auto     r = cogenerator_check(e, f, u);
        py::dict d;
        d["injective"]     = r.injective;
        d["ok"]            = r.ok();
        d["checked"]       = r.checked;
        d["discrepancies"] = r.discrepancies;
        return d;
      },
      py::arg("module"), py::arg("filter"), py::arg("universe"));
  m.def(
      "dense_filter",
      [](PyCat const& c, bool strict) {
        auto     r = dense_filter(c, strict ? DensityMode::strict : DensityMode::literal);
        py::dict d;
        d["filter"] = r.family;
        d["axioms"] = axioms_dict(r.report);
        return d;
      },
      py::arg("category"), py::arg("strict") = false);
  m.def(
      "verify_topology",
      [](FilterFamily const& f) {
        py::list out;
        auto const& cat = f.cat();
        for (auto const& r : verify_topology_all(f)) {
          py::dict d;
          d["a"]                = cat.object_name(r.a);
          d["b"]                = cat.object_name(r.b);
          d["c"]                = cat.object_name(r.c);
          d["topology"]         = topo_check_dict(r.topology);
          d["addition"]         = topo_check_dict(r.addition);
          d["composition"]      = topo_check_dict(r.composition);
          d["translation"]      = topo_check_dict(r.translation);
          d["basis_level_only"] = r.basis_level_only;
          d["open_sets"]        = r.open_sets;
          d["ok"]               = r.ok();
          out.append(d);
        }
        return out;
      },
      py::arg("filter"));

  m.def(
      "run",
      [](std::vector<std::string> const& args) {
        std::ostringstream out, err;
        int                code = run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one command line; returns (exit code, stdout, stderr).");
}
