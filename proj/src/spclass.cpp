#include "metanil/spclass.hpp"

#include <algorithm>

namespace metanil {

QuadElem quad_add(const QuadElem& x, const QuadElem& y) {
  return QuadElem{x.a + y.a, x.b + y.b, x.d};
}

QuadElem quad_sub(const QuadElem& x, const QuadElem& y) {
  return QuadElem{x.a - y.a, x.b - y.b, x.d};
}

QuadElem quad_mul(const QuadElem& x, const QuadElem& y) {
  return QuadElem{x.a * y.a + Rat(x.d) * x.b * y.b, x.a * y.b + x.b * y.a, x.d};
}

QuadElem quad_conj(const QuadElem& x) { return QuadElem{x.a, -x.b, x.d}; }

bool quad_is_zero(const QuadElem& x) { return x.a == 0 && x.b == 0; }

SgnValue sgn(const QMat& a) {
  if (a.rows() != 2 || a.cols() != 2) throw std::invalid_argument("sgn needs a 2x2 matrix");
  if (det(a) != 1) throw std::domain_error("sgn needs an element of SL(2, Q)");
  Rat tr = a(0, 0) + a(1, 1);
  Rat disc = tr * tr - 4;
  if (disc == 0) throw std::domain_error("non-decomposable: trace is +-2");
  Int d = squarefree_part(disc);
  if (d == 1) return SgnValue{SgnValue::Kind::Full, Int(1), Int(1), Rat(1)};
  // disc = s^2 d, lambda = tr/2 + (s/2) sqrt(d)
  Rat s2 = disc / Rat(d);  // a rational square
  Rat s(0);
  {
    // exact rational square root
    Int num = s2.get_num(), den = s2.get_den(), rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (rn * rn != num || rd * rd != den) throw std::logic_error("square class error");
    s = Rat(rn) / Rat(rd);
  }
  QuadElem lambda{tr / 2, s / 2, d};
  // eigenvector: (a12, lambda - a11) when a12 != 0, else (lambda - a22, a21)
  QuadElem x, y;
  if (a(0, 1) != 0) {
    x = QuadElem{a(0, 1), Rat(0), d};
    y = quad_sub(lambda, QuadElem{a(0, 0), Rat(0), d});
  } else {
    x = quad_sub(lambda, QuadElem{a(1, 1), Rat(0), d});
    y = QuadElem{a(1, 0), Rat(0), d};
  }
  // det Xi = x conj(y) - conj(x) y, a pure sqrt(d) multiple
  QuadElem detxi = quad_sub(quad_mul(x, quad_conj(y)), quad_mul(quad_conj(x), y));
  if (detxi.a != 0) throw std::logic_error("det Xi is not trace-free");
  if (quad_is_zero(detxi)) throw std::logic_error("eigenvector degenerated");
  // lambda - conj(lambda) = s sqrt(d)
  Rat ratio = detxi.b / s;
  return SgnValue{SgnValue::Kind::Class, d, squarefree_part(ratio), ratio};
}

int hilbert_symbol(const Rat& a, const Rat& b, const Int& place) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol needs nonzero arguments");
  // square-class representatives as integers
  Int m = a.get_num() * a.get_den();
  Int n = b.get_num() * b.get_den();
  if (place == 0) return (m < 0 && n < 0) ? -1 : 1;  // real place
  Int p = place;
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("place must be 0 (real) or a prime");
  auto val_unit = [&](Int x) {
    int v = 0;
    while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
      x /= p;
      ++v;
    }
    return std::pair<int, Int>(v, x);
  };
  auto [alpha, u] = val_unit(m);
  auto [beta, w] = val_unit(n);
  if (p == 2) {
    auto eps = [](const Int& x) { return int(((x - 1) / 2) % 2 != 0); };
    auto omega = [](const Int& x) { return int(((x * x - 1) / 8) % 2 != 0); };
    int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return (e % 2) ? -1 : 1;
  }
  int exp = (alpha % 2) * (beta % 2) * int(((p - 1) / 2) % 2 != 0);
  int s = (exp % 2) ? -1 : 1;
  if (beta % 2) s *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2) s *= mpz_legendre(w.get_mpz_t(), p.get_mpz_t());
  return s;
}

bool is_norm_of(const Rat& c, const Int& d) {
  if (c == 0) throw std::invalid_argument("norm test needs nonzero argument");
  if (hilbert_symbol(c, Rat(d), Int(0)) != 1) return false;
  if (hilbert_symbol(c, Rat(d), Int(2)) != 1) return false;
  Int support = abs(c.get_num() * c.get_den() * d);
  for (const auto& [p, e] : factorize(support)) {
    if (p == 2) continue;
    if (hilbert_symbol(c, Rat(d), p) != 1) return false;
  }
  return true;
}

bool sgn_equal(const SgnValue& s1, const SgnValue& s2) {
  if (s1.kind != s2.kind) return false;
  if (s1.kind == SgnValue::Kind::Full) return true;
  if (s1.d != s2.d) return false;
  // c1/c2 is a norm iff c1 c2 is (c2^2 is a norm)
  return is_norm_of(Rat(s1.c) * Rat(s2.c), s1.d);
}

std::pair<QVec, QMat> conj_semidirect(const std::pair<QVec, QMat>& elem,
                                      const std::pair<QVec, QMat>& by) {
  const auto& [a, g] = elem;
  const auto& [b, h] = by;
  if (g.rows() != int(a.size()) || h.rows() != int(b.size()) || g.rows() != h.rows())
    throw std::invalid_argument("dimension mismatch");
  QMat hinv = inverse(h);
  QVec v = (b - g * b) + h * a;
  return {v, hinv * g * h};
}

QVec CoinvariantSpace::project(const QVec& v) const {
  if (int(v.size()) != ambient_dim) throw std::invalid_argument("dimension mismatch");
  QVec red = v;
  for (int i = 0; i < relation_rows.rows(); ++i) {
    Rat f = red[relation_pivots[i]];
    if (f == 0) continue;
    for (int j = 0; j < ambient_dim; ++j)
      if (relation_rows(i, j) != 0) red[j] -= f * relation_rows(i, j);
  }
  QVec out(quotient_dim, Rat(0));
  int k = 0;
  std::vector<bool> isp(ambient_dim, false);
  for (int p : relation_pivots) isp[p] = true;
  for (int j = 0; j < ambient_dim; ++j)
    if (!isp[j]) out[k++] = red[j];
  return out;
}

CoinvariantSpace coinvariant(int dim, const std::vector<QMat>& action_gens,
                             const std::vector<QVec>& extra_relations) {
  std::vector<QVec> rel;
  for (const QMat& m : action_gens) {
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("generator size mismatch");
    QMat r = QMat::identity(dim) - m;
    for (int j = 0; j < dim; ++j) rel.push_back(r.col(j));
  }
  for (const QVec& v : extra_relations) {
    if (int(v.size()) != dim) throw std::invalid_argument("relation size mismatch");
    rel.push_back(v);
  }
  CoinvariantSpace out;
  out.ambient_dim = dim;
  if (rel.empty()) {
    out.relation_rank = 0;
    out.quotient_dim = dim;
    out.projection = QMat::identity(dim);
    out.relation_rows = QMat(0, dim);
    return out;
  }
  Rref r = rref(QMat::from_rows(rel));
  out.relation_rank = r.rank;
  out.quotient_dim = dim - r.rank;
  out.relation_rows = QMat(r.rank, dim);
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < dim; ++j) out.relation_rows(i, j) = r.mat(i, j);
  out.relation_pivots = r.pivots;
  out.projection = QMat(out.quotient_dim, dim);
  for (int m = 0; m < dim; ++m) {
    QVec em(dim, Rat(0));
    em[m] = 1;
    QVec pm = out.project(em);
    for (int i = 0; i < out.quotient_dim; ++i) out.projection(i, m) = pm[i];
  }
  return out;
}

Psi2Result psi2_invariant(const NilSpace& s, const AutN2& phi,
                          const std::vector<QMat>& extra_centralizer_gens) {
  if (!s.is_symplectic(phi.A)) throw std::domain_error("psi2 needs a symplectic level-1 part");
  int vdim = s.lambda2_coker_dim();
  // induced action of a matrix on Hom(H, L^2 H)/Im(lambda2)
  auto induced = [&](const QMat& m) {
    QMat out(vdim, vdim);
    QMat k = kron(inverse(m).transpose(), s.wedge_square(m));
    for (int c = 0; c < vdim; ++c) {
      // complement basis vector = unit at the c-th free coordinate
      QVec unit(s.hom_hl2_dim(), Rat(0));
      unit[s.lambda2_free_coord(c)] = 1;
      QVec img = k * unit;
      QVec cc = s.lambda2_coker_coords(img);
      for (int r = 0; r < vdim; ++r) out(r, c) = cc[r];
    }
    return out;
  };
  std::vector<QMat> gens;
  std::vector<std::string> desc;
  gens.push_back(induced(phi.A));
  desc.push_back("A");
  QMat ainv = inverse(phi.A);
  for (size_t i = 0; i < extra_centralizer_gens.size(); ++i) {
    const QMat& h = extra_centralizer_gens[i];
    if (!(ainv * h * phi.A == h))
      throw std::invalid_argument("supplied generator does not centralize A");
    gens.push_back(induced(h));
    desc.push_back("extra[" + std::to_string(i) + "]");
  }
  CoinvariantSpace co = coinvariant(vdim, gens);
  Psi2Result out;
  out.v_dim = vdim;
  out.quotient_dim = co.quotient_dim;
  out.class_vector = co.project(s.lambda2_coker_coords(s.vec_hom_l2(phi.f)));
  out.a = phi.A;
  out.subgroup = desc;
  return out;
}

bool spectral_genericity(const QMat& a) {
  Poly p1 = char_poly(a);
  QMat a2 = a * a, a3 = a2 * a;
  Poly p2 = char_poly(a2), p3 = char_poly(a3);
  // lambda_i^n = lambda_j^n for some i != j  <=>  p_n not squarefree
  if (!poly_squarefree(p1) || !poly_squarefree(p2) || !poly_squarefree(p3)) return false;
  // lambda_i^n = lambda_j^m with n != m; +-1 eigenvalues would force a
  // repeated root of p1 (symplectic spectra are reciprocal), handled above
  if (poly_gcd(p1, p2).degree() > 0) return false;
  if (poly_gcd(p1, p3).degree() > 0) return false;
  if (poly_gcd(p2, p3).degree() > 0) return false;
  return true;
}

H1Result h1_cyclic(const NilSpace& s, const QMat& a, const std::optional<AutN2>& level2,
                   int levels) {
  if (levels < 1 || levels > 2) throw std::invalid_argument("levels must be 1 or 2");
  if (det(a) == 0) throw std::domain_error("singular level-1 action");
  H1Result out;
  out.levels.push_back(coinvariant(s.n(), {a}));
  if (levels == 1) return out;
  std::vector<QVec> extra;
  auto ker = kernel_basis(QMat::identity(s.n()) - a);
  if (!ker.empty()) {
    if (!level2)
      throw std::domain_error("ker(1-A) != 0: the ybar relations need level-2 data");
    for (const QVec& y : ker) extra.push_back(Rat(2) * (level2->f * y));
    out.ybar_relations_used = true;
  }
  out.levels.push_back(coinvariant(s.wedge_dim(), {s.wedge_square(a)}, extra));
  return out;
}

CoinvariantSpace h1_level3_experimental(const NilSpace& s, const AutN3& phi) {
  std::vector<QVec> extra;
  auto ker = kernel_basis(QMat::identity(s.wedge_dim()) - s.wedge_square(phi.A));
  QMat ups = s.upsilon(phi.f);
  for (const QVec& y : ker) extra.push_back(Rat(2) * (ups * y));
  return coinvariant(s.t_dim(), {s.t_action(phi.A)}, extra);
}

}  // namespace metanil
