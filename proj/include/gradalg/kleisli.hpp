#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gradalg/gmod.hpp"

namespace gradalg {

/// Morphism x -> y in the Kleisli category of - (x) A: a host morphism x -> y (x) A.
struct KleisliMorphism {
  HostObject source;
  HostObject target;
  Matrix map;
};

KleisliMorphism kleisli_identity(const GradedAlgebra& a, const HostObject& x);
// (id_z (x) mu) o (g (x) id_A) o f
KleisliMorphism kleisli_compose(const GradedAlgebra& a, const KleisliMorphism& g, const KleisliMorphism& f);
// f = sum_i f_i with f_i : x -> y (x) A_i
std::map<int, KleisliMorphism> kleisli_components(const GradedAlgebra& a, const KleisliMorphism& f);
bool is_kleisli_homogeneous(const GradedAlgebra& a, const KleisliMorphism& f, int grade);

// t2_{x,y} = (id_x (x) id_y (x) mu) o (id_x (x) c_{A,y} (x) id_A)
Matrix t2(const GradedAlgebra& a, const HostObject& x, const HostObject& y);
// s2_{x,y} = (id_x (x) c^{-1}_{A,y} (x) id_A) o (id_x (x) id_y (x) Delta)
Matrix s2(const GradedAlgebra& a, const FrobeniusData& f, const HostObject& x, const HostObject& y);
// t2_{x',y'} o (f (x) g)
KleisliMorphism kleisli_tensor(const GradedAlgebra& a, const KleisliMorphism& f, const KleisliMorphism& g);

struct Quadruple {
  KleisliMorphism f, g, fp, gp;  // f: x -> x', g: y -> y', fp: x' -> x'', gp: y' -> y''
};

struct InterchangeSampling {
  std::size_t samples = 64;
  std::uint64_t seed = 0;
  std::size_t exhaustive_dim = 4;
};

struct InterchangeReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t max_residual = 0;  // nonzero entries of lhs - rhs
  std::optional<Quadruple> failure;
  std::size_t untwisted_failures = 0;
  std::optional<Quadruple> untwisted_witness;
  bool exhaustive = true;
  bool ok() const { return checked > 0 && failures == 0; }
};

// Both sides of the kappa-twisted interchange law for one quadruple:
// (f' o f) (x)_K (g' o g) and sum_{i,j} kappa(i,j)^{-1} (f' (x)_K g'_j) o (f_i (x)_K g),
// where mu_{j,i} o c_{A_i,A_j} = kappa(i,j) mu_{i,j}.
std::pair<Matrix, Matrix> twisted_interchange_sides(const GradedAlgebra& a, const Cochain2& kappa, const Quadruple& q);
Matrix untwisted_interchange_rhs(const GradedAlgebra& a, const Quadruple& q);
InterchangeReport check_twisted_interchange(const GradedAlgebra& a, const Cochain2& kappa,
                                            const std::vector<HostObject>& objects,
                                            const InterchangeSampling& sampling = {});

struct MonoidalMonadReport {
  bool unit_monoidal = true;
  bool mul_monoidal = true;
  bool naturality = true;
  bool algebra_criterion = true;  // mu (mu (x) mu)(id (x) c (x) id) = mu (mu (x) mu)
  bool commutative = true;        // mu o c = mu
  std::optional<bool> s2_t2_is_p;
  std::optional<bool> t2_s2_is_id;
  std::vector<Violation> violations;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // object indices where mul-monoidality fails
};
MonoidalMonadReport check_monoidal_monad(const GradedAlgebra& a, const std::vector<HostObject>& objects,
                                         const std::optional<FrobeniusData>& f = std::nullopt);

struct FrobeniusMonadReport {
  bool monad = true;
  bool comonad = true;
  bool frobenius = true;
  bool separable = true;
  bool ok() const { return monad && comonad && frobenius; }
};
FrobeniusMonadReport check_frobenius_monad(const GradedAlgebra& a, const FrobeniusData& f,
                                           const std::vector<HostObject>& objects);

// f |-> (id_y (x) mu) o (f (x) id_A) and g |-> g o (id_x (x) eta).
Matrix kleisli_to_induced(const GradedAlgebra& a, const KleisliMorphism& f);
KleisliMorphism induced_to_kleisli(const GradedAlgebra& a, const HostObject& x, const HostObject& y, const Matrix& g);

/// theta: Ind(x (x) y) -> Ind x (x)~ Ind y, induced by id_x (x) eta (x) id_{y (x) A}.
struct KleisliTildeIso {
  GradedTensor tilde;
  Module kleisli_side;  // Ind(x (x) y)
  Matrix theta;
  bool invertible = false;
  bool module_morphism = false;
  bool even = false;
  bool ok() const { return invertible && module_morphism && even; }
};
KleisliTildeIso kleisli_tilde_iso(const GradedAlgebra& a, const Cochain2& kappa, const HostObject& x,
                                  const HostObject& y);
// theta' o Ind(f (x)_K g) == (F (x)~ G) o theta for even f, g.
bool even_morphisms_correspond(const GradedAlgebra& a, const Cochain2& kappa, const KleisliMorphism& f,
                               const KleisliMorphism& g);

}  // namespace gradalg
