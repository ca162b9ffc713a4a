#include "metanil/nilspace.hpp"

#include <algorithm>

namespace metanil {

namespace {

// reduce v against rref rows in place, returning the residual
QVec residual(const QMat& rows, const std::vector<int>& pivots, QVec v) {
  for (int i = 0; i < rows.rows(); ++i) {
    const Rat& c = v[pivots[i]];
    if (c == 0) continue;
    Rat f = c;  // rows are rref: pivot entry is 1
    for (int j = 0; j < rows.cols(); ++j)
      if (rows(i, j) != 0) v[j] -= f * rows(i, j);
  }
  return v;
}

QVec span_coords(const QMat& rows, const std::vector<int>& pivots, const QVec& v,
                 const char* what) {
  QVec coords(rows.rows(), Rat(0));
  for (int i = 0; i < rows.rows(); ++i) coords[i] = v[pivots[i]];
  // verify membership exactly
  QVec rec(rows.cols(), Rat(0));
  for (int i = 0; i < rows.rows(); ++i)
    if (coords[i] != 0)
      for (int j = 0; j < rows.cols(); ++j)
        if (rows(i, j) != 0) rec[j] += coords[i] * rows(i, j);
  if (!(rec == v)) throw std::domain_error(std::string("vector not in ") + what);
  return coords;
}

}  // namespace

NilSpace::NilSpace(int g, Locality loc) : g_(g), n_(2 * g), loc_(loc) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  wdim_ = n_ * (n_ - 1) / 2;
  w3dim_ = n_ * (n_ - 1) * (n_ - 2) / 6;

  j_ = QMat(n_, n_);
  for (int l = 0; l < g_; ++l) {
    j_(2 * l, 2 * l + 1) = -1;
    j_(2 * l + 1, 2 * l) = 1;
  }

  // span of nu-values over all basis triples equals t
  std::vector<QVec> gens;
  for (int u = 0; u < n_; ++u)
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        QVec eu(n_, Rat(0)), b(wdim_, Rat(0));
        eu[u] = 1;
        b[wedge_pos(i, j)] = 1;
        gens.push_back(nu_ambient(eu, b));
      }
  Rref r = rref(QMat::from_rows(gens));
  tdim_ = r.rank;
  t_rows_ = QMat(r.rank, ambient_dim());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < ambient_dim(); ++j) t_rows_(i, j) = r.mat(i, j);
  t_pivots_ = r.pivots;
  long expect = (8L * g_ * g_ * g_ - 2L * g_) / 3;
  if (tdim_ != expect) throw std::logic_error("dim t disagrees with (8g^3-2g)/3");

  // R_3 = span of gamma_{s,t}
  std::vector<QVec> gamma;
  for (int s = 0; s < n_; ++s)
    for (int t = s + 1; t < n_; ++t) gamma.push_back(vec_hom_ht(gamma_map(s, t)));
  Rref rr3 = rref(QMat::from_rows(gamma));
  r3_rows_ = QMat(rr3.rank, hom_ht_dim());
  for (int i = 0; i < rr3.rank; ++i)
    for (int j = 0; j < hom_ht_dim(); ++j) r3_rows_(i, j) = rr3.mat(i, j);
  r3_pivots_ = rr3.pivots;
  if (rr3.rank != wdim_) throw std::logic_error("R_3 is not isomorphic to Lambda^2 H");

  // Im(lambda2) = {h |-> b ^ h}
  std::vector<QVec> lam;
  for (int b = 0; b < n_; ++b) {
    QVec eb(n_, Rat(0));
    eb[b] = 1;
    lam.push_back(vec_hom_l2(lambda2_map(eb)));
  }
  Rref rl = rref(QMat::from_rows(lam));
  l2_rows_ = QMat(rl.rank, hom_hl2_dim());
  for (int i = 0; i < rl.rank; ++i)
    for (int j = 0; j < hom_hl2_dim(); ++j) l2_rows_(i, j) = rl.mat(i, j);
  l2_pivots_ = rl.pivots;
  std::vector<bool> isp(hom_hl2_dim(), false);
  for (int p : l2_pivots_) isp[p] = true;
  for (int j = 0; j < hom_hl2_dim(); ++j)
    if (!isp[j]) l2_free_.push_back(j);
}

int NilSpace::wedge_pos(int i, int j) const {
  if (!(0 <= i && i < j && j < n_)) throw std::invalid_argument("bad wedge index");
  // lex position of (i, j) with i < j
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

QVec NilSpace::wedge_basis_vec(int i, int j) const {
  QVec v(wdim_, Rat(0));
  if (i == j) return v;
  if (i < j)
    v[wedge_pos(i, j)] = 1;
  else
    v[wedge_pos(j, i)] = -1;
  return v;
}

QVec NilSpace::wedge(const QVec& v, const QVec& w) const {
  QVec r(wdim_, Rat(0));
  for (int i = 0; i < n_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (w[j] == 0 || i == j) continue;
      Rat c = v[i] * w[j];
      if (i < j)
        r[wedge_pos(i, j)] += c;
      else
        r[wedge_pos(j, i)] -= c;
    }
  }
  return r;
}

QMat NilSpace::wedge_square(const QMat& a) const {
  QMat m(wdim_, wdim_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      QVec img = wedge(a.col(i), a.col(j));
      int c = wedge_pos(i, j);
      for (int r = 0; r < wdim_; ++r) m(r, c) = img[r];
    }
  return m;
}

QVec NilSpace::tensor_wedge(const QVec& u, const QVec& b) const {
  QVec r(ambient_dim(), Rat(0));
  for (int i = 0; i < n_; ++i) {
    if (u[i] == 0) continue;
    for (int w = 0; w < wdim_; ++w)
      if (b[w] != 0) r[i * wdim_ + w] += u[i] * b[w];
  }
  return r;
}

bool NilSpace::in_t(const QVec& ambient) const {
  return is_zero(residual(t_rows_, t_pivots_, ambient));
}

QVec NilSpace::t_coords(const QVec& ambient) const {
  return span_coords(t_rows_, t_pivots_, ambient, "t");
}

QVec NilSpace::t_to_ambient(const QVec& tc) const {
  QVec r(ambient_dim(), Rat(0));
  for (int i = 0; i < tdim_; ++i)
    if (tc[i] != 0)
      for (int j = 0; j < ambient_dim(); ++j)
        if (t_rows_(i, j) != 0) r[j] += tc[i] * t_rows_(i, j);
  return r;
}

QMat NilSpace::t_action(const QMat& a) const {
  QMat big = kron(a, wedge_square(a));
  QMat m(tdim_, tdim_);
  for (int c = 0; c < tdim_; ++c) {
    QVec img = big * t_rows_.row(c);
    QVec tc = t_coords(img);  // throws if the action does not preserve t
    for (int r = 0; r < tdim_; ++r) m(r, c) = tc[r];
  }
  return m;
}

QVec NilSpace::nu_ambient(const QVec& u, const QVec& b) const {
  QVec r(ambient_dim(), Rat(0));
  const Rat two_thirds(2, 3), third(1, 3);
  for (int w = 0; w < wdim_; ++w) {
    if (b[w] == 0) continue;
    // recover (i, j) with i < j from the wedge position
    int i = 0, rem = w;
    while (rem >= n_ - 1 - i) {
      rem -= n_ - 1 - i;
      ++i;
    }
    int j = i + 1 + rem;
    QVec ei(n_, Rat(0)), ej(n_, Rat(0));
    ei[i] = 1;
    ej[j] = 1;
    // nu(u, e_i ^ e_j) with u expanded linearly
    QVec t1 = tensor_wedge(u, wedge_basis_vec(i, j));
    QVec t2 = tensor_wedge(ei, wedge(ej, u));
    QVec t3 = tensor_wedge(ej, wedge(u, ei));
    for (int k = 0; k < ambient_dim(); ++k)
      r[k] += b[w] * (two_thirds * t1[k] - third * t2[k] - third * t3[k]);
  }
  return r;
}

QVec NilSpace::nu(const QVec& u, const QVec& b) const { return t_coords(nu_ambient(u, b)); }

QMat NilSpace::upsilon(const QMat& f) const {
  QMat m(tdim_, wdim_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      QVec ei(n_, Rat(0)), ej(n_, Rat(0));
      ei[i] = 1;
      ej[j] = 1;
      QVec val = nu(ei, f.col(j)) - nu(ej, f.col(i));
      int c = wedge_pos(i, j);
      for (int r = 0; r < tdim_; ++r) m(r, c) = val[r];
    }
  return m;
}

QVec NilSpace::vec_hom_ht(const QMat& f) const {
  QVec v(hom_ht_dim(), Rat(0));
  for (int i = 0; i < n_; ++i)
    for (int r = 0; r < tdim_; ++r) v[i * tdim_ + r] = f(r, i);
  return v;
}

QMat NilSpace::unvec_hom_ht(const QVec& v) const {
  QMat f(tdim_, n_);
  for (int i = 0; i < n_; ++i)
    for (int r = 0; r < tdim_; ++r) f(r, i) = v[i * tdim_ + r];
  return f;
}

QMat NilSpace::gamma_map(int s, int t) const {
  QMat f(tdim_, n_);
  QVec b = wedge_basis_vec(s, t);
  for (int x = 0; x < n_; ++x) {
    QVec ex(n_, Rat(0));
    ex[x] = 1;
    QVec val = nu(ex, b);
    for (int r = 0; r < tdim_; ++r) f(r, x) = val[r];
  }
  return f;
}

QVec NilSpace::reduce_mod_r3(const QVec& v) const { return residual(r3_rows_, r3_pivots_, v); }

QVec NilSpace::vec_hom_l2(const QMat& f) const {
  QVec v(hom_hl2_dim(), Rat(0));
  for (int i = 0; i < n_; ++i)
    for (int r = 0; r < wdim_; ++r) v[i * wdim_ + r] = f(r, i);
  return v;
}

QMat NilSpace::unvec_hom_l2(const QVec& v) const {
  QMat f(wdim_, n_);
  for (int i = 0; i < n_; ++i)
    for (int r = 0; r < wdim_; ++r) f(r, i) = v[i * wdim_ + r];
  return f;
}

QMat NilSpace::lambda2_map(const QVec& b) const {
  QMat f(wdim_, n_);
  for (int h = 0; h < n_; ++h) {
    QVec eh(n_, Rat(0));
    eh[h] = 1;
    QVec val = wedge(b, eh);
    for (int r = 0; r < wdim_; ++r) f(r, h) = val[r];
  }
  return f;
}

QVec NilSpace::reduce_mod_lambda2(const QVec& v) const {
  return residual(l2_rows_, l2_pivots_, v);
}

QVec NilSpace::lambda2_coker_coords(const QVec& v) const {
  QVec red = reduce_mod_lambda2(v);
  QVec out(l2_free_.size(), Rat(0));
  for (size_t i = 0; i < l2_free_.size(); ++i) out[i] = red[l2_free_[i]];
  return out;
}

Rat NilSpace::pairing(const QVec& v, const QVec& w) const {
  // <v,w> = v^T J w with J = block sum of [[0,-1],[1,0]]
  Rat r(0);
  for (int l = 0; l < g_; ++l)
    r += v[2 * l + 1] * w[2 * l] - v[2 * l] * w[2 * l + 1];
  return r;
}

bool NilSpace::is_symplectic(const QMat& a) const {
  if (a.rows() != n_ || a.cols() != n_) throw std::invalid_argument("shape mismatch");
  return a.transpose() * j_ * a == j_;
}

int NilSpace::wedge3_pos(int i, int j, int k) const {
  if (!(0 <= i && i < j && j < k && k < n_)) throw std::invalid_argument("bad wedge3 index");
  int pos = 0;
  for (int a = 0; a < i; ++a) pos += (n_ - 1 - a) * (n_ - 2 - a) / 2;
  for (int b = i + 1; b < j; ++b) pos += n_ - 1 - b;
  return pos + (k - j - 1);
}

QMat NilSpace::i3_embed(const QVec& w3) const {
  QMat f(wdim_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k) {
        const Rat& c = w3[wedge3_pos(i, j, k)];
        if (c == 0) continue;
        // v ^ w ^ u with v = e_i, w = e_j, u = e_k
        QVec ev(n_, Rat(0)), ew(n_, Rat(0)), eu(n_, Rat(0));
        ev[i] = 1;
        ew[j] = 1;
        eu[k] = 1;
        for (int z = 0; z < n_; ++z) {
          QVec ez(n_, Rat(0));
          ez[z] = 1;
          QVec val = pairing(ez, ew) * wedge(eu, ev) + pairing(ez, eu) * wedge(ev, ew) +
                     pairing(ez, ev) * wedge(ew, eu);
          for (int r = 0; r < wdim_; ++r) f(r, z) += c * val[r];
        }
      }
  return f;
}

QVec NilSpace::hom_l2_to_ambient(const QMat& f) const {
  QVec r(ambient_dim(), Rat(0));
  for (int i = 0; i < n_; ++i) {
    int partner = (i % 2 == 0) ? i + 1 : i - 1;  // e_{2l-1} <-> e_{2l}
    for (int w = 0; w < wdim_; ++w)
      if (f(w, i) != 0) r[partner * wdim_ + w] += f(w, i);
  }
  return r;
}

}  // namespace metanil
