#pragma once

#include "metanil/freelie.hpp"
#include "metanil/nilgrp.hpp"
#include "metanil/nilspace.hpp"

namespace metanil {

// Automorphism of N_2 (x) Z_(p) in the coordinates (f, A):
// f : H -> Lambda^2 H as a wedge_dim x n matrix, A in GL(H).
struct AutN2 {
  QMat f;
  QMat A;
};

// Automorphism of N_3 (x) Z_(p): (F, f, A) with F : H -> t (t_dim x n).
struct AutN3 {
  QMat F;
  QMat f;
  QMat A;
};

AutN2 autn2_identity(const NilSpace& s);
AutN3 autn3_identity(const NilSpace& s);
bool autn2_equal(const AutN2& x, const AutN2& y);
bool autn3_equal(const AutN3& x, const AutN3& y);
void require_invertible_unit(const NilSpace& s, const QMat& a);

// (f,A)(xi,u) = (2 f(Au) + A xi, Au)
N2Element autn2_apply(const NilSpace& s, const AutN2& phi, const N2Element& x);
// (F,f,A).(alpha,a,v) = (2F(Av) + A alpha + Upsilon_f(2f(Av) + 2Aa),
//                        2f(Av) + Aa, Av)
N3Element autn3_apply(const NilSpace& s, const AutN3& phi, const N3Element& x);

AutN2 autn2_compose(const NilSpace& s, const AutN2& lhs, const AutN2& rhs);
AutN2 autn2_inverse(const NilSpace& s, const AutN2& phi);
// (F',f',A')(F,f,A) = (F' + A'F + Upsilon_{f'}(A'f(.)) - Upsilon_{A'f}(f'(.)),
//                      f' + A'f, A'A)
AutN3 autn3_compose(const NilSpace& s, const AutN3& lhs, const AutN3& rhs);
AutN3 autn3_inverse(const NilSpace& s, const AutN3& phi);
AutN2 autn3_project(const AutN3& phi);

// the GL action (A.f)(u) = A f(A^{-1} u) on Hom(H, Lambda^2 H) and Hom(H, t)
QMat act_on_hom_l2(const NilSpace& s, const QMat& a, const QMat& f);
QMat act_on_hom_t(const NilSpace& s, const QMat& a, const QMat& F);

// inner automorphisms: conjugation by a group element
AutN2 inner_autn2(const NilSpace& s, const N2Element& by);
AutN3 inner_autn3(const NilSpace& s, const N3Element& by);

// lambda_k(b) : h |-> [b, h].  k = 2 takes b in H and yields f : H -> Lambda^2;
// k = 3 takes b in Lambda^2 and yields F : H -> t (through L_3 ~ t, where the
// degree-3 class [u, v^w] has t-coordinates nu(u, v^w)).
QMat lambda_map_k2(const NilSpace& s, const QVec& b);
QMat lambda_map_k3(const NilSpace& s, const QVec& b);

// t-coordinates of a degree-3 Lie element (the L_3 ~ t identification)
QVec theta(const NilSpace& s, const LieAlgebra& lie, const LieElement& x);
// inverse direction: Hall coordinates of degree 3 from t-coordinates
LieElement theta_inverse(const NilSpace& s, const LieAlgebra& lie, const QVec& tc);

bool is_symplectic(const NilSpace& s, const QMat& a);
// symplectic transvection v |-> v + a <v,w> w
QMat transvection(const NilSpace& s, const Rat& a, const QVec& w);

// Equivariance of the form-dualized lambda element
//   Lambda(b) = sum_i J e_i (x) [e_i, b]  in  H (x) L_{k}:
// true iff (h (x) h).Lambda(b) = Lambda(h.b) for every Hall basis b of
// degree k-1.  A theorem for symplectic h; fails for generic GL h.
bool sp_equivariance_check(const LieAlgebra& lie, const NilSpace& s, const QMat& h, int k);

// canonical coset representatives modulo Inn
AutN2 out_representative_k2(const NilSpace& s, const AutN2& phi);
AutN3 out_representative_k3(const NilSpace& s, const AutN3& phi);

// conjugate of phi by (0, (1-A)^{-1} f, id) -- kills the f-component.
// Throws when 1 - (action of A) is singular on Hom(H, Lambda^2 H).
AutN3 normalize_k3(const NilSpace& s, const AutN3& phi);
// the operator f |-> f - A.f on vec'd Hom(H, Lambda^2 H)
QMat one_minus_hom_l2_action(const NilSpace& s, const QMat& a);

// zeta = [x1,x2][x3,x4]...[x_{2g-1},x_{2g}]
GroupWord boundary_word(int g);
bool fixes_boundary(const NilSpace& s, const AutN3& phi);

}  // namespace metanil
