#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradalg/gmod.hpp"

namespace gradalg {

/// Ind x = (x (x) A, id (x) mu) with x in module grade 0.
struct InducedModule {
  HostObject base;
  Module module;
};

InducedModule induce(const GradedAlgebra& a, const HostObject& x);
// f (x) id_A : Ind x -> Ind y.
Matrix induce(const GradedAlgebra& a, const Matrix& f);

// Homogeneous component A_i as a host object with its inclusion into A.
struct Component {
  HostObject object;
  Matrix inclusion;  // A_i -> A
};
Component component(const GradedAlgebra& a, int i);

struct HomInduced {
  std::vector<Matrix> basis;  // homogeneous module morphisms Ind x -> Ind y
  std::vector<int> grades;
  std::map<int, std::size_t> dims_by_grade;  // via Hom(x, y (x) A_d)
  std::map<int, std::size_t> counit_route;   // via Hom(x (x) A_{-d}, y)
  std::map<int, std::size_t> direct_route;   // solution space of the module-morphism equations
  bool routes_agree = false;
  std::size_t dim() const { return basis.size(); }
};
HomInduced hom_A_induced(const GradedAlgebra& a, const HostObject& x, const HostObject& y);

enum class Gauge { FirstPivot, LastPivot };

struct StabilizerData {
  std::vector<int> elements;                 // sorted subgroup of Gamma
  std::vector<Matrix> varphi;                // x -> x (x) A_s
  std::vector<Matrix> phi;                   // grade-s module endomorphisms of Ind x
  std::vector<Cyclotomic> sigma;             // row-major over elements
  bool sigma_cocycle = false;
  bool sigma_symmetric = false;              // class trivial iff symmetric
  std::optional<std::vector<Cyclotomic>> trivializer;  // tau with sigma = d tau, root-of-unity case
  std::size_t index(int g) const;
  const Cyclotomic& sigma_at(int s, int t) const { return sigma[index(s) * elements.size() + index(t)]; }
  std::string sigma_class() const { return sigma_symmetric ? "trivial" : "nontrivial"; }
};
// Elements only, plus the chosen varphi in the given gauge.
StabilizerData stabilizer(const HostObject& x, const GradedAlgebra& a, Gauge gauge = Gauge::FirstPivot);
// Fills phi and sigma.
void sigma_cocycle(StabilizerData& st, const HostObject& x, const GradedAlgebra& a);

struct SchurReport {
  HomInduced hom;
  std::map<int, std::size_t> end_dims;
  bool zero_or_graded_iso = false;
  bool homogeneous_invertible = false;
  bool components_at_most_one = false;
  std::string pattern;           // from the dimensions of Hom
  std::string expected_pattern;  // from isomorphism tests on x, y, A_i
  bool ok() const {
    return zero_or_graded_iso && homogeneous_invertible && components_at_most_one && pattern == expected_pattern;
  }
};
SchurReport graded_schur_report(const HostObject& x, const HostObject& y, const GradedAlgebra& a);

struct InducedSimplicity {
  bool simple = true;
  std::optional<std::size_t> witness;  // candidate index giving a proper induced quotient
};
// Searches epimorphisms Ind x -> Ind y onto non-isomorphic, nonzero Ind y with y among candidates.
InducedSimplicity induced_simple(const HostObject& x, const GradedAlgebra& a, const std::vector<HostObject>& candidates);

std::string group_name(const FinAbGroup& g);

}  // namespace gradalg
