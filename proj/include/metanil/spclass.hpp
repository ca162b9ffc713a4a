#pragma once

#include <optional>

#include "metanil/autnil.hpp"
#include "metanil/exact.hpp"
#include "metanil/nilspace.hpp"

namespace metanil {

// Element a + b sqrt(d) of Q(sqrt(d)), d squarefree, d != 0, 1.
struct QuadElem {
  Rat a, b;
  Int d;
};

QuadElem quad_add(const QuadElem& x, const QuadElem& y);
QuadElem quad_sub(const QuadElem& x, const QuadElem& y);
QuadElem quad_mul(const QuadElem& x, const QuadElem& y);
QuadElem quad_conj(const QuadElem& x);
bool quad_is_zero(const QuadElem& x);

// sgn of a decomposable element of Sp(2; Q) = SL(2; Q).
struct SgnValue {
  enum class Kind { Full, Class } kind;
  Int d;   // squarefree discriminant class (Class only)
  Int c;   // squarefree representative of det(Xi)/(lambda - conj) mod norms
  Rat c_raw;  // the ratio before squarefree reduction
};

// Throws for non-symplectic input or trace +-2 (non-decomposable).
SgnValue sgn(const QMat& a);
// Equality modulo norms of Q(sqrt(d)), decided by Hilbert symbols.
bool sgn_equal(const SgnValue& s1, const SgnValue& s2);

// classical Hilbert symbol (a, b)_v over Q; place = 0 means the real place
int hilbert_symbol(const Rat& a, const Rat& b, const Int& place);
// c is a norm from Q(sqrt(d)) iff (c, d)_v = 1 at every place
bool is_norm_of(const Rat& c, const Int& d);

// ((1-g) b + h a, h^{-1} g h) -- the conjugation formula on V x| Sp
std::pair<QVec, QMat> conj_semidirect(const std::pair<QVec, QMat>& elem,
                                      const std::pair<QVec, QMat>& by);

struct CoinvariantSpace {
  int ambient_dim = 0;
  int relation_rank = 0;
  int quotient_dim = 0;
  QMat projection;        // quotient_dim x ambient
  QMat relation_rows;     // rref rows of the relation span
  std::vector<int> relation_pivots;
  QVec project(const QVec& v) const;
};

// quotient of Q^dim by span{(1-M)e_j : M in gens} plus any extra relation rows
CoinvariantSpace coinvariant(int dim, const std::vector<QMat>& action_gens,
                             const std::vector<QVec>& extra_relations = {});

struct Psi2Result {
  QVec class_vector;      // coinvariant class of the f-component
  QMat a;                 // the symplectic level-1 part
  int quotient_dim = 0;
  int v_dim = 0;          // dim Hom(H, L^2 H)/Im(lambda2)
  std::vector<std::string> subgroup;  // description of the generators used
};

// phi must be an Out-representative with symplectic A; extra generators are
// validated to centralize A.  The coinvariant is taken under the subgroup
// generated by A and the supplied centralizer elements (the full centralizer
// is not finitely presented here; see the report metadata).
Psi2Result psi2_invariant(const NilSpace& s, const AutN2& phi,
                          const std::vector<QMat>& extra_centralizer_gens = {});

// Eigenvalue separation: lambda_i^{n_i} != lambda_j^{n_j} for i != j and
// exponents 1..3, decided exactly through characteristic polynomials of
// powers, squarefreeness and pairwise gcds.
bool spectral_genericity(const QMat& a);

struct H1Result {
  std::vector<CoinvariantSpace> levels;  // Q_1, then Q_2 when requested
  bool ybar_relations_used = false;
};

// Q_1 = coker(1 - A) on H; Q_2 = coker(1 - L^2 A) on L^2 H, further cut by
// the delta-images 2 f(y) of a basis y of ker(1 - A).  When ker(1 - A) != 0
// the level-2 automorphism data (f) is required.
H1Result h1_cyclic(const NilSpace& s, const QMat& a,
                   const std::optional<AutN2>& level2, int levels);

// Experimental level-3 coinvariant: coker(1 - A on t) cut by 2 Upsilon_f(y)
// over a basis y of ker(1 - L^2 A).  The lift normalization at this depth
// is not settled; outputs are labeled accordingly.
CoinvariantSpace h1_level3_experimental(const NilSpace& s, const AutN3& phi);

}  // namespace metanil
