#pragma once

#include <optional>
#include <vector>

#include "gradalg/cohomology.hpp"
#include "gradalg/host.hpp"
#include "gradalg/report.hpp"

namespace gradalg {

/// Gamma-graded algebra in a host.  carrier.mgrades holds the Gamma-grade of
/// each basis vector; mul: A (x) A -> A with basis index a*dim + b; unit: 1 -> A.
struct GradedAlgebra {
  Host host;
  FinAbGroup gamma;
  GradedObject carrier;
  Matrix mul;
  Matrix unit;

  std::size_t dim() const { return carrier.dim(); }
  const HostObject& obj() const { return carrier.obj; }
};

struct FrobeniusData {
  Matrix comul;   // A -> A (x) A
  Matrix counit;  // A -> 1
};

struct AlgebraReport {
  bool host_morphisms = true;
  bool assoc = true;
  bool unit = true;
  bool even = true;
  std::vector<Violation> violations;
  bool ok() const { return host_morphisms && assoc && unit && even; }
};
AlgebraReport check_algebra(const GradedAlgebra& a);

GradedAlgebra twist_algebra(const GradedAlgebra& a, const Cochain2& kappa);

// Grade-preserving algebra isomorphism a -> b, scalar on each grade.
std::optional<Matrix> algebra_iso_even(const GradedAlgebra& a, const GradedAlgebra& b);

struct FrobeniusReport {
  bool host_morphisms = true;
  bool coassoc = true;
  bool counit = true;
  bool frobenius_left = true;
  bool frobenius_right = true;
  bool comul_even = true;
  std::vector<Violation> violations;
  bool ok() const { return host_morphisms && coassoc && counit && frobenius_left && frobenius_right; }
};
FrobeniusReport check_frobenius(const GradedAlgebra& a, const FrobeniusData& f);

struct SeparabilityReport {
  bool delta_separable = false;
  bool separable = false;
  std::optional<Matrix> zeta;
};
SeparabilityReport check_separability(const GradedAlgebra& a, const FrobeniusData& f);

std::pair<GradedAlgebra, FrobeniusData> twist_frobenius(const GradedAlgebra& a, const FrobeniusData& f,
                                                        const Cochain2& kappa);

struct GradedCommReport {
  bool ok = true;
  std::vector<Violation> violations;
  // kappa-hat(i, j) with mu o c = kappa-hat * mu on the (i, j) block; present
  // when every mu_{i,j} block has rank <= 1, entries absent where undefined.
  std::optional<std::vector<std::optional<Cyclotomic>>> defect;
};
GradedCommReport check_graded_commutative(const GradedAlgebra& a, const Cochain2& kappa);

GradedAlgebra opposite_algebra(const GradedAlgebra& a);

// omega with omega(i,j) omega(i+j,k) = omega(j,k) omega(i,j+k) psi(i,j,k), or none.
std::optional<Cochain2> solve_pointed_obstruction(const FinAbGroup& gamma, const Cochain3& psi);

// Twisted group algebra on invertible one-dimensional components L_i with
// L_i (x) L_j == L_{i+j} exactly.  Default components for a GradedVec host
// whose group is gamma: L_i at host grade i.
std::pair<GradedAlgebra, FrobeniusData> build_twisted_group_algebra(const Host& host, const FinAbGroup& gamma,
                                                                    const Cochain2& omega,
                                                                    std::vector<HostObject> components = {});

/// Scalar model of a pointed algebra in a category with associator psi on Gamma.
struct PointedAlgebraModel {
  FinAbGroup gamma;
  Cochain3 psi;
  Cochain2 omega;
};
struct PointedModelReport {
  bool associative = true;  // omega(i,j) omega(i+j,k) = omega(j,k) omega(i,j+k) psi(i,j,k)
  bool normalized = true;
  bool coassociative = true;
  bool counit = true;
  bool delta_separable = true;
  std::vector<Violation> violations;
  bool ok() const { return associative && normalized && coassociative && counit && delta_separable; }
};
PointedModelReport check_pointed_model(const PointedAlgebraModel& m);

// Module grade of a basis index of A (x) A.
inline int pair_grade(const GradedAlgebra& a, std::size_t idx) {
  const std::size_t d = a.dim();
  return a.gamma.add(a.carrier.mgrades[idx / d], a.carrier.mgrades[idx % d]);
}

}  // namespace gradalg
