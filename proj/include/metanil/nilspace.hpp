#pragma once

#include "metanil/exact.hpp"

namespace metanil {

// Coordinate tables shared by the N_2/N_3 group laws and their automorphism
// groups, for a fixed genus g (rank 2g).  Everything is precomputed in the
// constructor; instances are immutable.
//
// Conventions fixed here once:
//  - Lambda^2 H has basis {e_i ^ e_j : i < j}, lex-ordered.
//  - H (x) Lambda^2 H is indexed by i * dim(Lambda^2) + wedge position.
//  - the symplectic form is <v,w> = v^T J w with J the block sum of
//    [[0,-1],[1,0]]; e_1,e_2,...,e_{2g-1},e_{2g} is a symplectic basis.
//  - t-coordinates are read off a deterministic reduced echelon basis of the
//    span of u(x)(v^w) - v(x)(w^u).
class NilSpace {
 public:
  explicit NilSpace(int g, Locality loc = Locality());

  int g() const { return g_; }
  int n() const { return n_; }  // 2g
  const Locality& locality() const { return loc_; }

  // ---- Lambda^2 ----
  int wedge_dim() const { return wdim_; }
  int wedge_pos(int i, int j) const;   // i < j
  QVec wedge(const QVec& v, const QVec& w) const;
  QVec wedge_basis_vec(int i, int j) const;  // e_i ^ e_j for any i != j
  QMat wedge_square(const QMat& a) const;    // induced matrix on Lambda^2

  // ---- H (x) Lambda^2 and the subspace t ----
  int ambient_dim() const { return n_ * wdim_; }
  int t_dim() const { return tdim_; }
  // u (x) b as an ambient vector
  QVec tensor_wedge(const QVec& u, const QVec& b) const;
  bool in_t(const QVec& ambient) const;
  QVec t_coords(const QVec& ambient) const;   // throws if not in t
  QVec t_to_ambient(const QVec& tc) const;
  // induced action of a on H (x) Lambda^2, restricted to t (closure asserted)
  QMat t_action(const QMat& a) const;

  // nu(u, v^w) = 2/3 u(x)(v^w) - 1/3 v(x)(w^u) - 1/3 w(x)(u^v), in t-coords
  QVec nu(const QVec& u, const QVec& b) const;
  QVec nu_ambient(const QVec& u, const QVec& b) const;

  // Upsilon_f(u^v) = nu(u, f(v)) - nu(v, f(u)); f is wdim x n,
  // returns the t_dim x wdim matrix on Lambda^2
  QMat upsilon(const QMat& f) const;

  // gamma_{s,t}-span R_3 in Hom(H, t): vec layout i * t_dim + coord
  int hom_ht_dim() const { return n_ * tdim_; }
  QVec vec_hom_ht(const QMat& f) const;   // f is t_dim x n
  QMat unvec_hom_ht(const QVec& v) const;
  QMat gamma_map(int s, int t) const;     // e_x |-> nu(e_x, e_s ^ e_t), s<t
  QVec reduce_mod_r3(const QVec& hom_ht_vec) const;

  // Hom(H, Lambda^2): vec layout i * wdim + coord
  int hom_hl2_dim() const { return n_ * wdim_; }
  QVec vec_hom_l2(const QMat& f) const;   // f is wdim x n
  QMat unvec_hom_l2(const QVec& v) const;
  QMat lambda2_map(const QVec& b) const;  // h |-> b ^ h, as wdim x n matrix
  QVec reduce_mod_lambda2(const QVec& hom_l2_vec) const;
  // complement coordinates of Hom(H,Lambda^2)/Im(lambda2), deterministic
  int lambda2_coker_dim() const { return int(l2_free_.size()); }
  int lambda2_free_coord(int i) const { return l2_free_[i]; }
  QVec lambda2_coker_coords(const QVec& hom_l2_vec) const;

  // ---- symplectic structure ----
  const QMat& form() const { return j_; }  // J
  Rat pairing(const QVec& v, const QVec& w) const;
  bool is_symplectic(const QMat& a) const;

  // ---- Lambda^3 and I_3 ----
  int wedge3_dim() const { return w3dim_; }
  int wedge3_pos(int i, int j, int k) const;  // i < j < k
  // I_3(v^w^u)(z) = <z,w> u^v + <z,u> v^w + <z,v> w^u
  QMat i3_embed(const QVec& w3) const;        // wdim x n matrix

  // duality H^* ~ H used to view Hom(H, Lambda^2) inside H (x) Lambda^2:
  // e_i^* corresponds to its pairing partner (e_{2l-1} <-> e_{2l})
  QVec hom_l2_to_ambient(const QMat& f) const;

 private:
  int g_, n_, wdim_, tdim_, w3dim_;
  Locality loc_;
  QMat j_;
  QMat t_rows_;                 // rref rows spanning t (t_dim x ambient)
  std::vector<int> t_pivots_;
  QMat r3_rows_;                // rref rows spanning R_3 in hom_ht coords
  std::vector<int> r3_pivots_;
  QMat l2_rows_;                // rref rows spanning Im(lambda2) in hom_l2 coords
  std::vector<int> l2_pivots_;
  std::vector<int> l2_free_;    // non-pivot coordinates (complement basis)
};

}  // namespace metanil
