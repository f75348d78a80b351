#pragma once

#include "gradalg/galg.hpp"
#include "gradalg/host.hpp"

// Small standard hosts shared by the tests, the acceptance suite and the bindings.
namespace gradalg::fixtures {

// Dihedral group of order 2n with elements r^a s^b at index a + n*b.
std::vector<std::vector<int>> dihedral_table(int n);

Host super_host();                        // GradedVec(Z/2), beta(1,1) = -1
Host graded_host(std::vector<int> orders);  // GradedVec with trivial braiding
Host z4_host();                           // GradedVec(Z/4), beta(a,b) = zeta_4^{ab}
Host d4_host();                           // RepCat(D4), generators r, s
Host s3_host();                           // RepCat(S3), generators r, s

// D4 linear characters chi with chi(r) = (-1)^a, chi(s) = (-1)^b.
HostObject d4_character(const HostContext& h, int a, int b);
HostObject d4_irrep2(const HostContext& h);
HostObject s3_sign(const HostContext& h);
HostObject s3_irrep2(const HostContext& h);

// X = 1 + x graded by Z/2 with X_0 = 1, X_1 = x and x.x = 0.
GradedAlgebra degenerate_algebra(const Host& h, const HostObject& x);
// Comultiplication with the same matrix representation on X (coalgebra, not Frobenius).
FrobeniusData degenerate_coalgebra(const GradedAlgebra& x);

// Exterior algebra on u (host grade 1) and u' (host grade 3) in z4_host(),
// Z/2-graded by parity; graded-commutative w.r.t. kappa(1,1) = zeta_4.
GradedAlgebra exterior_toy_algebra();

}  // namespace gradalg::fixtures
