#include "torsionlab/cli/cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "torsionlab/catcore/generators.hpp"
#include "torsionlab/cli/text_format.hpp"
#include "torsionlab/error.hpp"
#include "torsionlab/topo/topology.hpp"

namespace torsionlab {

  namespace {
    class UsageError : public Error {
     public:
      using Error::Error;
    };

    struct Options {
      std::string cat, module, filter, generator, ideal, cls, objects, through, object;
      std::string a, b, c;
      std::string format = "text";
      std::string field  = "GF(2)";
      std::size_t dim_bound = 1;
      std::size_t n = 1, window = 1, rank = 1, depth = 1;
      double      ceiling = 0;
      bool        strict  = false;
    };

    //! One line per check in text mode, one JSON record per check otherwise.
    class Report {
     public:
      Report(std::ostream& out, bool records) : _out(out), _records(records) {}

      void info(std::string const& line) {
        if (!_records) {
          _out << line << "\n";
        }
      }
      void check(std::string const& check, std::string const& object, std::string const& verdict,
                 std::string const& witness = "") {
        if (verdict == "fail") {
          _failed = true;
        }
        if (verdict == "not checked") {
          _refused = true;
        }
        if (_records) {
          nlohmann::json j = {{"check", check}, {"object", object}, {"verdict", verdict}, {"witness", witness}};
          _out << j.dump() << "\n";
        } else {
          _out << check << (object.empty() ? "" : " " + object) << ": " << verdict << "\n";
          if (!witness.empty()) {
            _out << "  witness: " << witness << "\n";
          }
        }
      }
      bool records() const {
        return _records;
      }
      int exit_code() const {
        return _failed ? exit_failure : _refused ? exit_ceiling : exit_pass;
      }

     private:
      std::ostream& _out;
      bool          _records;
      bool          _failed  = false;
      bool          _refused = false;
    };

    std::string verdict_of(bool ok) {
      return ok ? "pass" : "fail";
    }

    std::string join(std::vector<std::string> const& xs, std::string const& sep = "; ") {
      std::string s;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        s += (k ? sep : "") + xs[k];
      }
      return s;
    }

    std::string dims_text(Module const& m) {
      std::string s = "(";
      for (std::size_t c = 0; c < m.dims().size(); ++c) {
        s += (c ? "," : "") + std::to_string(m.dim(c));
      }
      return s + ")";
    }

    std::string need(std::string const& value, std::string const& flag) {
      if (value.empty()) {
        throw UsageError("missing " + flag);
      }
      return value;
    }

    struct Session {
      Options const&       o;
      Report&              rep;
      CategoryPresentation pres;
      CategoryPtr          cat;

      void load_category() {
        pres = parse_category(read_text_file(need(o.cat, "--cat")));
        cat  = std::make_shared<Category const>(compile_quiver(pres));
      }
      Module load_module(std::string const& path, std::string const& flag) {
        return parse_module(read_text_file(need(path, flag)), cat);
      }
      FilterFamily load_filter() {
        return parse_filter(read_text_file(need(o.filter, "--filter")), cat);
      }
      std::vector<std::size_t> object_list(std::string const& text) {
        std::vector<std::size_t> out;
        std::stringstream        s(text);
        std::string              name;
        while (std::getline(s, name, ',')) {
          if (!name.empty()) {
            out.push_back(cat->object_index(name));
          }
        }
        return out;
      }
      Universe universe() {
        auto u = enumerate_universe(cat, o.dim_bound, o.ceiling);
        rep.info("universe: " + std::to_string(u.size()) + " module(s) with dims <= "
                 + std::to_string(o.dim_bound));
        return u;
      }

      ModuleClassSpec class_spec() {
        auto        spec  = need(o.cls, "--class");
        auto        colon = spec.find(':');
        std::string kind  = spec.substr(0, colon);
        std::string arg   = colon == std::string::npos ? "" : spec.substr(colon + 1);
        if (kind == "filter") {
          return FilterInduced{load_filter()};
        }
        if (kind == "vanishing") {
          return VanishingAt{object_list(arg)};
        }
        if (kind == "sigma") {
          return SigmaOf{load_module(o.generator, "--generator")};
        }
        if (kind == "extensional") {
          std::vector<std::size_t> idx;
          std::stringstream        s(arg);
          std::string              k;
          while (std::getline(s, k, ',')) {
            if (!k.empty()) {
              idx.push_back(std::stoul(k));
            }
          }
          return Extensional{idx};
        }
        throw UsageError("unknown class '" + kind + "' (filter, vanishing:OBJS, sigma, extensional:IDX)");
      }

      void axioms(AxiomReport const& r, bool with_t4) {
        std::vector<std::pair<std::string, AxiomResult const*>> rows = {
            {"T1", &r.t1}, {"T2", &r.t2}, {"T3", &r.t3}};
        if (with_t4) {
          rows.push_back({"T4", &r.t4});
        }
        for (auto const& [name, a] : rows) {
          rep.check(name, "", to_string(a->verdict), a->counterexample);
        }
      }

      // ------------------------------------------------------ subcommands

      void cat_compile() {
        load_category();
        auto broken = cat->verify_laws();
        rep.info("objects: " + std::to_string(cat->object_count()) + ", arrows: "
                 + std::to_string(cat->arrows().size()) + ", bound: " + std::to_string(pres.nilpotency_bound));
        for (std::size_t a = 0; a < cat->object_count(); ++a) {
          std::string row = "Hom(" + cat->object_name(a) + ", -):";
          for (std::size_t b = 0; b < cat->object_count(); ++b) {
            row += " " + std::to_string(cat->hom_dim(a, b));
          }
          rep.info(row);
        }
        rep.info("total hom dimension: " + std::to_string(cat->total_hom_dim()));
        rep.check("laws", "", verdict_of(broken.empty()), broken.empty() ? "" : broken.front());
      }

      void cat_show() {
        load_category();
        rep.info(serialize_category(pres));
        for (std::size_t a = 0; a < cat->object_count(); ++a) {
          for (std::size_t b = 0; b < cat->object_count(); ++b) {
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < cat->hom_dim(a, b); ++i) {
              labels.push_back(cat->basis_label(a, b, i));
            }
            if (!labels.empty()) {
              rep.check("hom", cat->object_name(a) + " -> " + cat->object_name(b), "listed", join(labels, ", "));
            }
          }
        }
      }

      void gen(GeneratedCategory const& g) {
        rep.info("# " + g.description);
        if (!g.mouth.empty()) {
          std::string m = "# mouth:";
          for (auto x : g.mouth) {
            m += " " + g.category.object_name(x);
          }
          rep.info(m);
        }
        rep.info(serialize_category(g.presentation));
        if (rep.records()) {
          rep.check("generate", g.description, "listed", serialize_category(g.presentation));
        }
      }

      void ideals_enumerate() {
        load_category();
        std::vector<std::size_t> objs = o.object.empty() ? std::vector<std::size_t>{} : object_list(o.object);
        if (objs.empty()) {
          for (std::size_t x = 0; x < cat->object_count(); ++x) {
            objs.push_back(x);
          }
        }
        for (auto x : objs) {
          auto all = enumerate_right_ideals(cat, x, o.ceiling);
          rep.info("into " + cat->object_name(x) + ": " + std::to_string(all.size()) + " ideal(s)");
          for (std::size_t k = 0; k < all.size(); ++k) {
            std::vector<std::string> gens;
            for (auto const& g : minimal_generators(all[k])) {
              gens.push_back(morphism_label(*cat, g));
            }
            rep.check("ideal", cat->object_name(x) + " #" + std::to_string(k), "listed",
                      all[k].to_string() + " gen: " + (gens.empty() ? "0" : join(gens, ", ")));
          }
        }
      }

      std::string density_witness(DensityReport const& d) {
        if (!d.dense) {
          return "g = " + morphism_label(*cat, *d.failing) + " : " + cat->object_name(d.failing->source) + " -> "
                 + cat->object_name(d.failing->target) + " has no h with g*h in I";
        }
        std::vector<std::string> ws;
        for (auto const& w : d.witnesses) {
          ws.push_back("g=" + morphism_label(*cat, w.g) + " h=" + morphism_label(*cat, w.h) + " ("
                       + cat->object_name(w.h.source) + ")");
        }
        return join(ws);
      }

      void ideals_dense() {
        load_category();
        auto mode = o.strict ? DensityMode::strict : DensityMode::literal;
        if (!o.ideal.empty()) {
          auto i = parse_ideal(read_text_file(o.ideal), cat);
          auto d = is_dense(i, mode);
          rep.check("dense", i.to_string(), verdict_of(d.dense), density_witness(d));
          return;
        }
        for (std::size_t x = 0; x < cat->object_count(); ++x) {
          for (auto const& i : enumerate_right_ideals(cat, x, o.ceiling)) {
            auto d = is_dense(i, mode);
            rep.check("dense", cat->object_name(x) + " " + i.to_string(), d.dense ? "dense" : "not dense",
                      d.dense ? "" : density_witness(d));
          }
        }
      }

      void filter_check() {
        load_category();
        auto f = load_filter();
        auto r = check_axioms(f, o.ceiling);
        axioms(r, true);
        rep.info("T4 reading: " + r.t4_reading);
        rep.info(r.gabriel() ? "T1-T4 pass" : r.linear() ? "T1-T3 pass" : "not a linear filter");
      }

      void filter_roundtrip() {
        load_category();
        auto u = universe();
        auto one = [&](FilterFamily const& f, std::string const& label) {
          try {
            auto r = roundtrip_filter(u, f, o.ceiling);
            rep.check("roundtrip ideals", label, verdict_of(r.ideal_level), join(r.ideal_mismatches));
            rep.check("roundtrip classes", label, verdict_of(r.class_level), join(r.class_mismatches));
            auto c = class_roundtrip(u, FilterInduced{f}, o.ceiling);
            rep.check("class roundtrip", label, verdict_of(c.exact()),
                      c.error.empty() ? join(c.class_mismatches) : c.error);
          } catch (NotAFilter const& e) {
            rep.check("roundtrip ideals", label, "fail", e.what());
          }
        };
        if (!o.filter.empty()) {
          one(load_filter(), o.filter);
          return;
        }
        auto all = enumerate_filter_families(cat, o.ceiling);
        for (std::size_t k = 0; k < all.size(); ++k) {
          auto a = check_axioms(all[k], o.ceiling);
          if (!a.linear()) {
            continue;
          }
          one(all[k], "#" + std::to_string(k) + (a.gabriel() ? " (Gabriel) " : " (linear) ") + all[k].to_string());
        }
      }

      void filter_dense() {
        load_category();
        auto d = dense_filter(cat, o.strict ? DensityMode::strict : DensityMode::literal, o.ceiling);
        for (std::size_t x = 0; x < cat->object_count(); ++x) {
          std::vector<std::string> names;
          for (auto const& i : d.dense[x]) {
            names.push_back(i.to_string());
          }
          rep.info("dense into " + cat->object_name(x) + ": " + join(names, ", "));
        }
        rep.info(serialize_filter(d.family));
        axioms(d.report, false);
        rep.info("T4: " + to_string(d.report.t4.verdict));
      }

      void filter_vanishing() {
        load_category();
        auto objs = object_list(o.objects);
        auto f    = vanishing_filter(cat, objs);
        rep.info(serialize_filter(f));
        axioms(check_axioms(f, o.ceiling), true);
        auto u = universe();
        auto g = filter_from_class(u, VanishingAt{objs}, o.ceiling);
        bool same = true;
        for (std::size_t x = 0; x < cat->object_count(); ++x) {
          same = same && f.meet(x) == g.meet(x);
        }
        rep.check("matches class filter", "", verdict_of(same), same ? "" : g.to_string());
      }

      void torsion_member_cmd() {
        load_category();
        auto f = load_filter();
        auto m = load_module(o.module, "--module");
        for (std::size_t x = 0; x < cat->object_count(); ++x) {
          for (std::size_t t = 0; t < m.dim(x); ++t) {
            Vector v   = unit_vector(m.field(), m.dim(x), t);
            auto   ann = annihilator(m, x, v);
            if (!filter_member(f, ann)) {
              rep.check("torsion member", dims_text(m), "fail",
                        "x = " + to_string(v) + " in M(" + cat->object_name(x) + "): Ann(x,-) = " + ann.to_string()
                            + " not in F_" + cat->object_name(x));
              return;
            }
          }
        }
        rep.check("torsion member", dims_text(m), "pass");
      }

      void torsion_closure() {
        load_category();
        auto u   = universe();
        auto cls = class_spec();
        auto r   = closure_report(u, cls);
        auto row = [&](std::string const& name, ClosureResult const& c) {
          rep.check(name, std::to_string(c.checked) + " checked", verdict_of(c.closed), c.witness.value_or(""));
        };
        row("subobjects", r.subobjects);
        row("quotients", r.quotients);
        row("coproducts", r.coproducts);
        row("extensions", r.extensions);
      }

      void torsion_sigma() {
        load_category();
        if (!o.through.empty() || o.generator.empty()) {
          auto i = two_sided_from_objects(cat, object_list(need(o.through, "--through or --generator")));
          auto u = universe();
          auto r = sigma_ideal_check(i, u);
          rep.check("sigma vs IN=0", std::to_string(r.checked) + " checked", verdict_of(r.discrepancies.empty()),
                    join(r.discrepancies));
          if (r.exhausted > 0) {
            rep.check("sigma search", "", "not checked", std::to_string(r.exhausted) + " undecided");
          }
          return;
        }
        auto g = load_module(o.generator, "--generator");
        auto n = load_module(o.module, "--module");
        auto r = sigma_member(g, n);
        std::string verdict = r.verdict == SigmaVerdict::member ? "pass"
                              : r.verdict == SigmaVerdict::not_member ? "fail"
                                                                      : "not checked";
        rep.check("sigma member", dims_text(n), verdict, r.witness);
      }

      void torsion_cogenerator() {
        load_category();
        auto f = load_filter();
        auto e = load_module(o.module, "--module");
        auto u = universe();
        auto r = cogenerator_check(e, f, u);
        rep.check("injective", dims_text(e), verdict_of(r.injective));
        rep.check("cogenerates", std::to_string(r.checked) + " checked", verdict_of(r.ok()), join(r.discrepancies));
      }

      void topo_verify() {
        load_category();
        auto f = load_filter();
        std::vector<TopologyReport> rs;
        if (!o.a.empty() || !o.b.empty() || !o.c.empty()) {
          rs.push_back(verify_topology(f, cat->object_index(need(o.a, "--a")), cat->object_index(need(o.b, "--b")),
                                       cat->object_index(need(o.c, "--c"))));
        } else {
          rs = verify_topology_all(f);
        }
        for (auto const& r : rs) {
          std::string t = "(" + cat->object_name(r.a) + "," + cat->object_name(r.b) + "," + cat->object_name(r.c) + ")";
          rep.check("topology", t, to_string(r.topology.verdict),
                    r.topology.witness.empty() && r.basis_level_only ? "basis level only" : r.topology.witness);
          rep.check("addition", t, to_string(r.addition.verdict), r.addition.witness);
          rep.check("composition", t, to_string(r.composition.verdict), r.composition.witness);
          if (r.translation.verdict != Verdict::not_checked) {
            rep.check("translation", t, to_string(r.translation.verdict), r.translation.witness);
          }
        }
      }

      void universe_enumerate() {
        load_category();
        auto u = universe();
        for (std::size_t k = 0; k < u.size(); ++k) {
          rep.check("module", "#" + std::to_string(k), "listed", dims_text(u.modules[k]));
          rep.info(serialize_module(u.modules[k]));
        }
      }
    };
  }  // namespace

  int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options               o;
    std::function<void()> action;
    CLI::App              app{"Exact checks of filters, torsion classes and topologies over finite categories",
                 "torsionlab"};
    app.require_subcommand(1);

    auto cat_opt = [&](CLI::App* s) { s->add_option("--cat", o.cat, "category file"); };
    auto common  = [&](CLI::App* s) {
      s->add_option("--ceiling", o.ceiling, "enumeration ceiling (0 = default)");
      s->add_option("--format", o.format, "text or records")->check(CLI::IsMember({"text", "records"}));
    };
    auto bound_opt = [&](CLI::App* s) {
      s->add_option("--dim-bound", o.dim_bound, "universe dimension bound per object");
    };
    auto filter_opt = [&](CLI::App* s) { s->add_option("--filter", o.filter, "filter file"); };
    auto module_opt = [&](CLI::App* s) { s->add_option("--module", o.module, "module file"); };

    std::unique_ptr<Report>  report;
    std::unique_ptr<Session> session;
    auto bind = [&](CLI::App* s, void (Session::*fn)()) {
      common(s);
      s->callback([&, fn] { action = [&, fn] { (session.get()->*fn)(); }; });
    };

    auto* cat = app.add_subcommand("cat", "category presentations")->require_subcommand(1);
    for (auto [name, help, fn] : {std::tuple{"compile", "validate and print the canonical form", &Session::cat_compile},
                                  std::tuple{"show", "Hom bases and dimensions", &Session::cat_show}}) {
      auto* s = cat->add_subcommand(name, help);
      cat_opt(s);
      bind(s, fn);
    }

    auto* gen    = app.add_subcommand("gen", "generated categories")->require_subcommand(1);
    auto* mesh   = gen->add_subcommand("mesh", "window of the mesh category of ZA_inf");
    mesh->add_option("--n", o.n, "sectional levels")->required();
    mesh->add_option("--window", o.window, "tau steps")->required();
    mesh->add_option("--field", o.field, "GF(p) or Q");
    common(mesh);
    mesh->callback([&] {
      action = [&] { session->gen(gen_mesh_window(o.n, o.window, Field::parse(o.field))); };
    });
    auto* tube = gen->add_subcommand("tube", "truncated stable tube");
    tube->add_option("--rank", o.rank, "rank")->required();
    tube->add_option("--depth", o.depth, "largest quasi-length")->required();
    tube->add_option("--field", o.field, "GF(p) or Q");
    common(tube);
    tube->callback([&] {
      action = [&] { session->gen(gen_stable_tube(o.rank, o.depth, Field::parse(o.field))); };
    });

    auto* ideals = app.add_subcommand("ideals", "right ideals")->require_subcommand(1);
    auto* ienum  = ideals->add_subcommand("enumerate", "all right ideals into each object");
    cat_opt(ienum);
    ienum->add_option("--object", o.object, "comma-separated objects (default: all)");
    bind(ienum, &Session::ideals_enumerate);
    auto* idense = ideals->add_subcommand("dense", "dense ideals, with witnesses");
    cat_opt(idense);
    idense->add_option("--ideal", o.ideal, "check one ideal file instead of all ideals");
    idense->add_flag("--strict-dense", o.strict, "require nonzero witnesses");
    bind(idense, &Session::ideals_dense);

    auto* filter = app.add_subcommand("filter", "filters of right ideals")->require_subcommand(1);
    auto* fcheck = filter->add_subcommand("check", "axioms T1-T4 with counterexamples");
    cat_opt(fcheck);
    filter_opt(fcheck);
    bind(fcheck, &Session::filter_check);
    auto* fround = filter->add_subcommand("roundtrip", "filter -> class -> filter on a universe");
    cat_opt(fround);
    filter_opt(fround);
    bound_opt(fround);
    bind(fround, &Session::filter_roundtrip);
    auto* fdense = filter->add_subcommand("dense-filter", "the filter of dense ideals");
    cat_opt(fdense);
    fdense->add_flag("--strict-dense", o.strict, "require nonzero witnesses");
    bind(fdense, &Session::filter_dense);
    auto* fvan = filter->add_subcommand("vanishing", "filter of modules vanishing at given objects");
    cat_opt(fvan);
    fvan->add_option("--objects", o.objects, "comma-separated objects");
    bound_opt(fvan);
    bind(fvan, &Session::filter_vanishing);

    auto* torsion = app.add_subcommand("torsion", "torsion classes")->require_subcommand(1);
    auto* tmem    = torsion->add_subcommand("member", "is a module torsion for a filter");
    cat_opt(tmem);
    filter_opt(tmem);
    module_opt(tmem);
    bind(tmem, &Session::torsion_member_cmd);
    auto* tclo = torsion->add_subcommand("closure", "closure properties of a class on a universe");
    cat_opt(tclo);
    bound_opt(tclo);
    filter_opt(tclo);
    tclo->add_option("--class", o.cls, "filter | vanishing:OBJS | sigma | extensional:IDX");
    tclo->add_option("--generator", o.generator, "generator module for sigma classes");
    bind(tclo, &Session::torsion_closure);
    auto* tsig = torsion->add_subcommand("sigma", "subgeneration by a module, or IN = 0 for a trace ideal");
    cat_opt(tsig);
    bound_opt(tsig);
    module_opt(tsig);
    tsig->add_option("--generator", o.generator, "generator module");
    tsig->add_option("--through", o.through, "objects of the two-sided ideal for the IN=0 check");
    bind(tsig, &Session::torsion_sigma);
    auto* tcog = torsion->add_subcommand("cogenerator", "Hom(M, E) = 0 iff M torsion");
    cat_opt(tcog);
    bound_opt(tcog);
    filter_opt(tcog);
    module_opt(tcog);
    bind(tcog, &Session::torsion_cogenerator);

    auto* topo = app.add_subcommand("topo", "linear topologies")->require_subcommand(1);
    auto* tver = topo->add_subcommand("verify", "continuity of addition and composition");
    cat_opt(tver);
    filter_opt(tver);
    tver->add_option("--a", o.a, "object A");
    tver->add_option("--b", o.b, "object B");
    tver->add_option("--c", o.c, "object C");
    bind(tver, &Session::topo_verify);

    auto* uni  = app.add_subcommand("universe", "module universes")->require_subcommand(1);
    auto* uenm = uni->add_subcommand("enumerate", "modules up to isomorphism within a dimension bound");
    cat_opt(uenm);
    bound_opt(uenm);
    bind(uenm, &Session::universe_enumerate);

    std::vector<std::string> argv_store{"torsionlab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) {
      argv.push_back(s.data());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return exit_pass;
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return exit_usage;
    }

    report  = std::make_unique<Report>(out, o.format == "records");
    session = std::make_unique<Session>(Session{o, *report, {}, nullptr});
    try {
      action();
    } catch (CeilingExceeded const& e) {
      err << "ceiling: " << e.what() << "\n";
      return exit_ceiling;
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << "\n";
      return exit_usage;
    } catch (NotAFilter const& e) {
      err << "not a filter: " << e.what() << "\n";
      return exit_failure;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }
    return report->exit_code();
  }

}  // namespace torsionlab
