#include "metanil/autnil.hpp"

#include <functional>

namespace metanil {

AutN2 autn2_identity(const NilSpace& s) {
  return AutN2{QMat(s.wedge_dim(), s.n()), QMat::identity(s.n())};
}

AutN3 autn3_identity(const NilSpace& s) {
  return AutN3{QMat(s.t_dim(), s.n()), QMat(s.wedge_dim(), s.n()), QMat::identity(s.n())};
}

bool autn2_equal(const AutN2& x, const AutN2& y) { return x.f == y.f && x.A == y.A; }

bool autn3_equal(const AutN3& x, const AutN3& y) {
  return x.F == y.F && x.f == y.f && x.A == y.A;
}

void require_invertible_unit(const NilSpace& s, const QMat& a) {
  Rat d = det(a);
  if (!is_p_unit(d, s.locality()))
    throw std::domain_error("matrix determinant is not a unit in Z_(p)");
}

N2Element autn2_apply(const NilSpace& s, const AutN2& phi, const N2Element& x) {
  QVec au = phi.A * x.v;
  N2Element r;
  r.v = au;
  r.a = Rat(2) * (phi.f * au) + s.wedge_square(phi.A) * x.a;
  return r;
}

N3Element autn3_apply(const NilSpace& s, const AutN3& phi, const N3Element& x) {
  require_n3_locality(s);
  QVec av = phi.A * x.v;
  QVec aa = s.wedge_square(phi.A) * x.a;
  QVec fav = phi.f * av;
  N3Element r;
  r.v = av;
  r.a = Rat(2) * fav + aa;
  QMat ups = s.upsilon(phi.f);
  r.alpha = Rat(2) * (phi.F * av) + s.t_action(phi.A) * x.alpha +
            ups * (Rat(2) * fav + Rat(2) * aa);
  return r;
}

QMat act_on_hom_l2(const NilSpace& s, const QMat& a, const QMat& f) {
  return s.wedge_square(a) * f * inverse(a);
}

QMat act_on_hom_t(const NilSpace& s, const QMat& a, const QMat& bigf) {
  return s.t_action(a) * bigf * inverse(a);
}

AutN2 autn2_compose(const NilSpace& s, const AutN2& lhs, const AutN2& rhs) {
  return AutN2{lhs.f + act_on_hom_l2(s, lhs.A, rhs.f), lhs.A * rhs.A};
}

AutN2 autn2_inverse(const NilSpace& s, const AutN2& phi) {
  QMat ainv = inverse(phi.A);
  return AutN2{Rat(-1) * act_on_hom_l2(s, ainv, phi.f), ainv};
}

AutN3 autn3_compose(const NilSpace& s, const AutN3& lhs, const AutN3& rhs) {
  QMat af = act_on_hom_l2(s, lhs.A, rhs.f);
  AutN3 r;
  r.A = lhs.A * rhs.A;
  r.f = lhs.f + af;
  r.F = lhs.F + act_on_hom_t(s, lhs.A, rhs.F) + s.upsilon(lhs.f) * af -
        s.upsilon(af) * lhs.f;
  return r;
}

AutN3 autn3_inverse(const NilSpace& s, const AutN3& phi) {
  QMat ainv = inverse(phi.A);
  AutN3 r;
  r.A = ainv;
  r.f = Rat(-1) * act_on_hom_l2(s, ainv, phi.f);
  r.F = Rat(-1) * act_on_hom_t(s, ainv, phi.F);
  return r;
}

AutN2 autn3_project(const AutN3& phi) { return AutN2{phi.f, phi.A}; }

AutN2 inner_autn2(const NilSpace& s, const N2Element& by) {
  // conj by (b, w): (a, v) |-> (a + w^v, v), so f = lambda2(w)/2
  return AutN2{Rat(1, 2) * s.lambda2_map(by.v), QMat::identity(s.n())};
}

AutN3 inner_autn3(const NilSpace& s, const N3Element& by) {
  // computed through the group law itself
  AutN3 r = autn3_identity(s);
  N3Element inv = n3_inverse(s, by);
  for (int i = 0; i < s.n(); ++i) {
    N3Element e = n3_identity(s);
    e.v[i] = 1;
    N3Element c = n3_mul(s, n3_mul(s, by, e), inv);
    // conjugate of a pure generator: read off the coordinate equations
    // c = (2F(v') + Ups_f(2f(v')), 2f(v'), v') with v' = e_i here (A = id)
    for (int w = 0; w < s.wedge_dim(); ++w) r.f(w, i) = c.a[w] / 2;
  }
  QMat ups = s.upsilon(r.f);
  for (int i = 0; i < s.n(); ++i) {
    N3Element e = n3_identity(s);
    e.v[i] = 1;
    N3Element c = n3_mul(s, n3_mul(s, by, e), inv);
    QVec corr = ups * (Rat(2) * r.f.col(i));
    for (int t = 0; t < s.t_dim(); ++t) r.F(t, i) = (c.alpha[t] - corr[t]) / 2;
  }
  return r;
}

QMat lambda_map_k2(const NilSpace& s, const QVec& b) { return s.lambda2_map(b); }

QMat lambda_map_k3(const NilSpace& s, const QVec& b) {
  // [b, h] = -[h, b] has t-coordinates -nu(h, b)
  QMat f(s.t_dim(), s.n());
  for (int h = 0; h < s.n(); ++h) {
    QVec eh(s.n(), Rat(0));
    eh[h] = 1;
    QVec val = Rat(-1) * s.nu(eh, b);
    for (int t = 0; t < s.t_dim(); ++t) f(t, h) = val[t];
  }
  return f;
}

QVec theta(const NilSpace& s, const LieAlgebra& lie, const LieElement& x) {
  if (!x.is_zero() && x.degree != 3) throw std::invalid_argument("theta needs degree 3");
  QVec out(s.t_dim(), Rat(0));
  for (const auto& [idx, c] : x.coords) {
    const HallWord& w = lie.word(idx);
    // Hall words of degree 3 are [[e_j, e_i], e_k]; [v^w, u] |-> -nu(u, v^w)
    const HallWord& l = lie.word(w.left);
    QVec u(s.n(), Rat(0));
    u[lie.word(w.right).gen] = 1;
    QVec b = s.wedge_basis_vec(lie.word(l.left).gen, lie.word(l.right).gen);
    out = out + (-c) * s.nu(u, b);
  }
  return out;
}

LieElement theta_inverse(const NilSpace& s, const LieAlgebra& lie, const QVec& tc) {
  const auto& basis = lie.hall_basis(3);
  QMat m(s.t_dim(), int(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) {
    QVec col = theta(s, lie, lie.from_word(basis[j]));
    for (int i = 0; i < s.t_dim(); ++i) m(i, int(j)) = col[i];
  }
  auto sol = solve(m, tc);
  if (!sol) throw std::logic_error("theta is not onto t");
  LieElement x;
  x.degree = 3;
  for (size_t j = 0; j < basis.size(); ++j)
    if ((*sol)[j] != 0) x.coords[basis[j]] = (*sol)[j];
  return x;
}

bool is_symplectic(const NilSpace& s, const QMat& a) { return s.is_symplectic(a); }

QMat transvection(const NilSpace& s, const Rat& a, const QVec& w) {
  QMat m = QMat::identity(s.n());
  for (int j = 0; j < s.n(); ++j) {
    QVec ej(s.n(), Rat(0));
    ej[j] = 1;
    Rat c = a * s.pairing(ej, w);
    for (int i = 0; i < s.n(); ++i) m(i, j) += c * w[i];
  }
  return m;
}

bool sp_equivariance_check(const LieAlgebra& lie, const NilSpace& s, const QMat& h, int k) {
  if (k < 2 || k > lie.max_degree()) throw std::domain_error("level outside configured bound");
  int n = s.n();
  if (h.rows() != n || h.cols() != n) throw std::invalid_argument("shape mismatch");
  // degree-(k-1) action of h on L_{k-1}: columns = brackets of images
  const auto& src = lie.hall_basis(k - 1);
  std::vector<LieElement> himg(n);
  for (int i = 0; i < n; ++i) {
    LieElement e;
    e.degree = 1;
    for (int r = 0; r < n; ++r)
      if (h(r, i) != 0) e.coords[r] = h(r, i);
    himg[i] = e;
  }
  auto act = [&](const LieElement& x) {
    // extend h multiplicatively over Hall trees
    LieElement out;
    out.degree = x.degree;
    for (const auto& [idx, c] : x.coords) {
      // expand the Hall tree of idx
      std::function<LieElement(int)> rec = [&](int widx) -> LieElement {
        const HallWord& w = lie.word(widx);
        if (w.gen >= 0) return himg[w.gen];
        return lie.bracket(rec(w.left), rec(w.right));
      };
      out = out + c * rec(idx);
    }
    return out;
  };
  QMat j = s.form();
  for (int b : src) {
    LieElement eb = lie.from_word(b);
    LieElement hb = act(eb);
    // Lambda(b) = sum_i J e_i (x) [e_i, b]
    // (h (x) h) Lambda(b) = sum_i (h J e_i) (x) [h e_i, h b]
    // compare coefficients in H (x) L_k
    std::map<std::pair<int, int>, Rat> lhs, rhs;
    for (int i = 0; i < n; ++i) {
      // rhs: J e_i (x) [e_i, hb]
      LieElement br = lie.bracket(lie.gen(i), hb);
      for (int r = 0; r < n; ++r) {
        if (j(r, i) == 0) continue;
        for (const auto& [wi, c] : br.coords) {
          auto key = std::make_pair(r, wi);
          rhs[key] += j(r, i) * c;
          if (rhs[key] == 0) rhs.erase(key);
        }
      }
      // lhs: (h J e_i) (x) [h e_i, h b]
      LieElement brh = lie.bracket(himg[i], hb);
      QVec hje = h * j.col(i);
      for (int r = 0; r < n; ++r) {
        if (hje[r] == 0) continue;
        for (const auto& [wi, c] : brh.coords) {
          auto key = std::make_pair(r, wi);
          lhs[key] += hje[r] * c;
          if (lhs[key] == 0) lhs.erase(key);
        }
      }
    }
    if (lhs != rhs) return false;
  }
  return true;
}

AutN2 out_representative_k2(const NilSpace& s, const AutN2& phi) {
  QVec red = s.reduce_mod_lambda2(s.vec_hom_l2(phi.f));
  return AutN2{s.unvec_hom_l2(red), phi.A};
}

AutN3 out_representative_k3(const NilSpace& s, const AutN3& phi) {
  QVec fred = s.reduce_mod_lambda2(s.vec_hom_l2(phi.f));
  QVec bfred = s.reduce_mod_r3(s.vec_hom_ht(phi.F));
  return AutN3{s.unvec_hom_ht(bfred), s.unvec_hom_l2(fred), phi.A};
}

QMat one_minus_hom_l2_action(const NilSpace& s, const QMat& a) {
  // vec(f) blocks are the columns f(e_i); (A.f)(e_i) = sum_j (A^{-1})_{ji} L2A f(e_j)
  QMat k = kron(inverse(a).transpose(), s.wedge_square(a));
  QMat m = QMat::identity(s.hom_hl2_dim()) - k;
  return m;
}

AutN3 normalize_k3(const NilSpace& s, const AutN3& phi) {
  QMat m = one_minus_hom_l2_action(s, phi.A);
  if (det(m) == 0)
    throw std::domain_error("1 - A is singular on Hom(H, Lambda^2 H)");
  QVec fv = s.vec_hom_l2(phi.f);
  QMat h = s.unvec_hom_l2(*solve(m, fv));
  AutN3 psi{QMat(s.t_dim(), s.n()), h, QMat::identity(s.n())};
  AutN3 out = autn3_compose(s, autn3_compose(s, autn3_inverse(s, psi), phi), psi);
  // the conjugate's f-component vanishes by the choice of h
  if (!(out.f == QMat(s.wedge_dim(), s.n())))
    throw std::logic_error("normalization failed to kill the f-component");
  return out;
}

GroupWord boundary_word(int g) {
  GroupWord z;
  for (int l = 0; l < g; ++l) {
    GroupWord a, b;
    a.letters.emplace_back(2 * l + 1, 1);
    b.letters.emplace_back(2 * l + 2, 1);
    z = word_concat(z, word_commutator(a, b));
  }
  return z;
}

bool fixes_boundary(const NilSpace& s, const AutN3& phi) {
  N3Element z = word_to_n3(s, boundary_word(s.g()));
  return n3_equal(autn3_apply(s, phi, z), z);
}

}  // namespace metanil
