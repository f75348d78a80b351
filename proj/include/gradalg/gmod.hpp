#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gradalg/galg.hpp"

namespace gradalg {

/// Gamma-graded module over a graded algebra.  A right module carries
/// right: m (x) A -> m (index v*dA + a), a left module left: A (x) m -> m
/// (index a*dm + v); a bimodule carries both.
struct Module {
  GradedAlgebra algebra;
  GradedObject carrier;
  std::optional<Matrix> left;
  std::optional<Matrix> right;

  std::size_t dim() const { return carrier.dim(); }
  const HostObject& obj() const { return carrier.obj; }
  bool is_left() const { return left.has_value(); }
  bool is_right() const { return right.has_value(); }
};

Module regular_module(const GradedAlgebra& a, bool left, bool right);
// (x (x) A, id (x) mu) with x placed in module grade `shift` (per basis vector of x).
Module induced_right_module(const GradedAlgebra& a, const HostObject& x, const std::vector<int>& xgrades);
// (A (x) y, mu (x) id).
Module induced_left_module(const GradedAlgebra& a, const HostObject& y, const std::vector<int>& ygrades);
Module shift_grading(const Module& m, int d);
// Transports the module structure along an even host isomorphism t: m -> m'.
Module transport(const Module& m, const Matrix& t, const HostObject& target);

struct ModuleReport {
  bool host_morphisms = true;
  bool assoc = true;
  bool unit = true;
  bool even = true;
  bool commute = true;  // only meaningful for bimodules
  std::vector<Violation> violations;
  bool ok() const { return host_morphisms && assoc && unit && even && commute; }
};
ModuleReport check_module(const Module& m);

// Twisted action kappa(i,j) rho_{i,j}, a module over twist_algebra(A, kappa).
Module twist_module(const Module& m, const Cochain2& kappa);

struct SideSwitch {
  Module module;            // m with both actions
  ModuleReport bimodule;    // commuting-actions check of the pair
};
// Left action kappa(i,j)^{-1} rho_{j,i} o c_{A_i,m_j} next to the given right action.
SideSwitch left_from_right_braided(const Module& m, const Cochain2& kappa);
// Right action kappa(i,j)^{-1} lambda_{j,i} o c_{m_i,A_j} next to the given left action.
SideSwitch right_from_left_braided(const Module& m, const Cochain2& kappa);

enum class TensorMethod { Coequalizer, Idempotent };

struct IdempotentChecks {
  bool idempotent = true;  // p o p = p
  bool balanced = true;    // p o (rho (x) id) = p o (id (x) lambda)
  bool factors = true;     // r o p = r
  std::vector<Violation> violations;
  bool ok() const { return idempotent && balanced && factors; }
};

struct TensorOverA {
  GradedObject object;
  Matrix projection;  // m (x) n -> object
  Matrix section;     // object -> m (x) n
  std::optional<Matrix> idempotent;
  std::optional<IdempotentChecks> checks;
  // Isomorphisms object <-> coequalizer object when the idempotent method was used.
  std::optional<Matrix> to_coequalizer, from_coequalizer;
  std::optional<Module> module;  // bimodule / one-sided structure inherited from the outer actions
};

// Balancing idempotent (rho_m (x) lambda_n) o (id (x) Delta eta (x) id).
Matrix balancing_idempotent(const Module& m, const Module& n, const FrobeniusData& f);
IdempotentChecks check_balancing_idempotent(const Module& m, const Module& n, const Matrix& p, const Matrix& r);

TensorOverA tensor_over_A(const Module& m, const Module& n, TensorMethod method = TensorMethod::Coequalizer,
                          const std::optional<FrobeniusData>& f = std::nullopt);

struct GradedTensor {
  Module module;  // right module m (x)~ n
  TensorOverA data;
  std::optional<Matrix> twisted_idempotent;  // p^[kappa] when Frobenius data were given
  std::optional<IdempotentChecks> checks;
  std::optional<bool> image_agrees;
};
GradedTensor graded_tensor(const Module& m, const Module& n, const Cochain2& kappa,
                           const std::optional<FrobeniusData>& f = std::nullopt);

// (m (x)~ n) (x)~ k -> m (x)~ (n (x)~ k) induced by the identity of m (x) n (x) k.
struct AssociatorCheck {
  Matrix map;
  bool invertible = false;
  bool module_morphism = false;
};
AssociatorCheck graded_tensor_associator(const Module& m, const Module& n, const Module& k, const Cochain2& kappa);
// m (x)~ A -> m induced by the action.
AssociatorCheck graded_tensor_right_unitor(const Module& m, const Cochain2& kappa);

bool is_right_module_morphism(const Module& m, const Module& m2, const Matrix& f);
bool is_left_module_morphism(const Module& n, const Module& n2, const Matrix& g);

struct TensorMorphism {
  Matrix map;               // (m (x)_A n) -> (m' (x)_A n')
  bool interchange = true;  // p' o (f (x) g) = (f (x) g) o p
};
TensorMorphism tensor_morphisms_over_A(const Module& m, const Module& m2, const Matrix& f, const Module& n,
                                       const Module& n2, const Matrix& g, const FrobeniusData& frob);

bool same_algebra(const GradedAlgebra& a, const GradedAlgebra& b);
std::map<int, std::size_t> graded_dimensions(const GradedObject& x);

}  // namespace gradalg
