#ifndef TORSIONLAB_TORSION_TORSION_HPP_
#define TORSIONLAB_TORSION_TORSION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torsionlab/ideals/ideals.hpp"
#include "torsionlab/modfun/universe.hpp"

namespace torsionlab {

  //! A filter presented by a finite base per object: I ∈ F_C iff the meet of
  //! base[C] is contained in I. Every F_C contains the whole representable.
  class FilterFamily {
   public:
    //! Throws if some base is empty or an ideal has the wrong target.
    FilterFamily(CategoryPtr cat, std::vector<std::vector<RightIdeal>> base);

    //! One principal generator per object.
    static FilterFamily principal(CategoryPtr const& cat, std::vector<RightIdeal> gens);
    //! base[C] = {whole}: only improper ideals; T = {0}.
    static FilterFamily improper(CategoryPtr const& cat);
    //! base[C] = {0}: every ideal; T = all modules.
    static FilterFamily full(CategoryPtr const& cat);

    Category const& cat() const noexcept {
      return *_cat;
    }
    CategoryPtr const& category_ptr() const noexcept {
      return _cat;
    }
    std::vector<RightIdeal> const& base(std::size_t c) const {
      return _base.at(c);
    }
    RightIdeal const& meet(std::size_t c) const {
      return _meet.at(c);
    }

    std::string to_string() const;

   private:
    CategoryPtr                          _cat;
    std::vector<std::vector<RightIdeal>> _base;
    std::vector<RightIdeal>              _meet;
  };

  bool filter_member(FilterFamily const& f, RightIdeal const& i);

  //! Every family given by one principal generator per object, in the
  //! product order of enumerate_right_ideals. On a finite lattice these are
  //! all the families satisfying T1 and T2.
  std::vector<FilterFamily> enumerate_filter_families(CategoryPtr const& cat, double ceiling = 0);

  enum class Verdict { pass, fail, not_checked };
  std::string to_string(Verdict v);

  struct AxiomResult {
    Verdict     verdict = Verdict::not_checked;
    std::string note;
    std::string counterexample;
  };

  struct AxiomReport {
    AxiomResult t1, t2, t3, t4;
    //! How the T4 quantifier over J was read.
    std::string t4_reading = "existential: some J in F_C with (I:h) in F_B for all B, h in J(B)";

    bool linear() const {
      return t1.verdict == Verdict::pass && t2.verdict == Verdict::pass && t3.verdict == Verdict::pass;
    }
    bool gabriel() const {
      return linear() && t4.verdict == Verdict::pass;
    }
  };

  //! T1/T2 hold by construction. T3 is checked for every base ideal and the
  //! meet, every B and every h (all vectors when Hom(B, C) is small, else a
  //! basis). T4 enumerates all ideals I into C and tests them against the
  //! meet, the weakest choice of J; a ceiling refusal leaves T4 not_checked.
  AxiomReport check_axioms(FilterFamily const& f, double ceiling = 0);

  //! Direct T3 oracle: every I in F_C (enumerated), every B, every h.
  bool t3_oracle(FilterFamily const& f, double ceiling = 0);

  //! Ann(x, -) ∈ F_C for all basis vectors x of every M(C).
  bool torsion_member(FilterFamily const& f, Module const& m);
  //! Same, over every vector of every M(C).
  bool torsion_member_all_vectors(FilterFamily const& f, Module const& m);

  //! A class of modules over one category.
  struct FilterInduced {
    FilterFamily filter;
  };
  struct VanishingAt {
    std::vector<std::size_t> objects;
  };
  struct SigmaOf {
    Module generator;
  };
  //! Members of a universe by index, closed up to isomorphism.
  struct Extensional {
    std::vector<std::size_t> indices;
  };
  using ModuleClassSpec = std::variant<FilterInduced, VanishingAt, SigmaOf, Extensional>;

  using ClassPredicate = std::function<bool(Module const&)>;
  //! Decision procedure for cls; the universe is used by Extensional.
  ClassPredicate class_predicate(Universe const& u, ModuleClassSpec const& cls);

  //! F_C = {I : C(-, C)/I ∈ cls}; T1 and T2 are checked extensionally and a
  //! violation throws NotAFilter. The base is the single minimal member.
  FilterFamily filter_from_class(Universe const& u, ModuleClassSpec const& cls, double ceiling = 0);

  struct RoundtripReport {
    bool                     ideal_level = false;
    std::vector<std::string> ideal_mismatches;
    bool                     class_level = false;
    std::vector<std::string> class_mismatches;
    std::optional<FilterFamily> recovered;
    std::string              error;

    bool exact() const {
      return ideal_level && class_level;
    }
  };

  //! F' = F_{T_F}; compares membership of F and F' on every ideal and of T_F
  //! and T_F' on every universe member.
  RoundtripReport roundtrip_filter(Universe const& u, FilterFamily const& f, double ceiling = 0);

  //! T' = T_{F_T}; compares cls and T' on every universe member.
  RoundtripReport class_roundtrip(Universe const& u, ModuleClassSpec const& cls, double ceiling = 0);

  struct ClosureResult {
    bool                       closed  = true;
    std::size_t                checked = 0;
    std::optional<std::string> witness;
  };

  struct ClosureReport {
    ClosureResult subobjects, quotients, coproducts, extensions;

    bool hereditary_pretorsion() const {
      return subobjects.closed && quotients.closed && coproducts.closed;
    }
  };

  //! Tests closure under submodules, quotients, pairwise coproducts within
  //! the universe bound, and extensions K ⊆ L with K, L/K in the class.
  ClosureReport closure_report(Universe const& u, ClassPredicate const& in_class);
  ClosureReport closure_report(Universe const& u, ModuleClassSpec const& cls);

  enum class SigmaVerdict { member, not_member, exhausted };
  std::string to_string(SigmaVerdict v);

  struct SigmaResult {
    SigmaVerdict verdict = SigmaVerdict::exhausted;
    std::string  witness;
  };

  struct SigmaOptions {
    //! Largest number of copies of the generator in the constructed cover.
    std::size_t max_copies = 24;
  };

  //! Decides whether n is a submodule of a quotient of a finite coproduct of
  //! copies of gen. Membership is certified by an explicit surjection from a
  //! submodule S ⊆ gen^m onto n (then n ≅ S/K ⊆ gen^m/K); non-membership by
  //! a morphism f with gen(f) = 0 and n(f) ≠ 0.
  SigmaResult sigma_member(Module const& gen, Module const& n, SigmaOptions const& opts = {});

  struct SigmaIdealReport {
    std::vector<std::string> discrepancies;
    std::size_t              exhausted = 0;
    std::size_t              checked   = 0;

    bool ok() const {
      return discrepancies.empty() && exhausted == 0;
    }
  };

  //! For every N in the universe: sigma_member(∐ C(-,C)/I(-,C), N) ⟺ IN = 0.
  SigmaIdealReport sigma_ideal_check(TwoSidedIdeal const& i, Universe const& u);

  //! base[C] = smallest right ideal containing all of Hom(C_λ, C).
  FilterFamily vanishing_filter(CategoryPtr const& cat, std::vector<std::size_t> const& objs);

  struct CogeneratorReport {
    bool                     injective = false;
    std::vector<std::string> discrepancies;
    std::size_t              checked = 0;

    bool ok() const {
      return discrepancies.empty();
    }
  };

  //! For every M in the universe: M ∈ T_F ⟺ Hom(M, e) = 0.
  CogeneratorReport cogenerator_check(Module const& e, FilterFamily const& f, Universe const& u);

  struct DenseFilterResult {
    std::vector<std::vector<RightIdeal>> dense;  // all dense ideals per object
    FilterFamily                         family;
    AxiomReport                          report;
  };

  //! F_C = all dense ideals into C, presented by their meet. T1/T2 are
  //! checked extensionally on the enumerated dense sets and reported in
  //! report.t1/t2 with a counterexample when they fail.
  DenseFilterResult dense_filter(CategoryPtr const& cat,
                                 DensityMode        mode    = DensityMode::literal,
                                 double             ceiling = 0);

}  // namespace torsionlab

#endif  // TORSIONLAB_TORSION_TORSION_HPP_
