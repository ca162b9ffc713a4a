// Acceptance suite: one pass/fail line per criterion, exact checks only.
// Exits nonzero if any criterion fails.

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "metanil/knotpipe.hpp"
#include "test_util.hpp"

using namespace metanil;
using metanil::testutil::rand_invertible;
using metanil::testutil::rand_mat;
using metanil::testutil::rand_rat;
using metanil::testutil::rand_unimodular;
using metanil::testutil::rand_vec;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& run) {
  bool ok = false;
  std::string note;
  try {
    ok = run();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << number << "] " << what << note << "\n";
  if (!ok) ++failures;
}

N3Element rand_n3(std::mt19937_64& rng, const NilSpace& s) {
  return N3Element{rand_vec(rng, s.t_dim(), 3, 2), rand_vec(rng, s.wedge_dim(), 3, 2),
                   rand_vec(rng, s.n(), 3, 2)};
}

N2Element rand_n2(std::mt19937_64& rng, const NilSpace& s) {
  return N2Element{rand_vec(rng, s.wedge_dim(), 3, 2), rand_vec(rng, s.n(), 3, 2)};
}

AutN3 rand_autn3(std::mt19937_64& rng, const NilSpace& s) {
  return AutN3{rand_mat(rng, s.t_dim(), s.n(), 3, 2),
               rand_mat(rng, s.wedge_dim(), s.n(), 3, 2), rand_invertible(rng, s.n())};
}

GroupWord rand_word(std::mt19937_64& rng, int rank, int len) {
  GroupWord w;
  std::uniform_int_distribution<int> gen(1, rank), sgn01(0, 1);
  for (int i = 0; i < len; ++i) w.letters.emplace_back(gen(rng), sgn01(rng) ? 1 : -1);
  return w;
}

QMat rand_sl2(std::mt19937_64& rng) {
  QMat m = QMat::identity(2);
  std::uniform_int_distribution<int> c(-3, 3), pick(0, 1);
  for (int t = 0; t < 6; ++t) {
    QMat e = QMat::identity(2);
    if (pick(rng))
      e(0, 1) = Rat(c(rng));
    else
      e(1, 0) = Rat(c(rng));
    m = m * e;
  }
  return m;
}

QMat mat2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  QMat m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

std::vector<IMat> corpus_seifert;
std::vector<FiberedInput> corpus_fibered;

void load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  InputFile f = parse_input_file(ss.str());
  for (const KnotInput& k : f.knots) {
    if (k.seifert) corpus_seifert.push_back(*k.seifert);
    if (k.fibered) corpus_fibered.push_back(*k.fibered);
  }
}

bool c1_dimensions() {
  if (NilSpace(1).t_dim() != 2 || NilSpace(2).t_dim() != 20 || NilSpace(3).t_dim() != 70)
    return false;
  for (int rank : {2, 4}) {
    LieAlgebra lie(rank, 5);
    for (int k = 1; k <= 5; ++k)
      if (lie.dim(k) != int(LieAlgebra::witt_dimension(rank, k))) return false;
  }
  NilSpace s(2);
  if (s.hom_hl2_dim() != 24 || s.wedge3_dim() + s.t_dim() != 24) return false;
  std::vector<QVec> rows;
  for (int c = 0; c < s.wedge3_dim(); ++c) {
    QVec unit(s.wedge3_dim(), Rat(0));
    unit[c] = 1;
    rows.push_back(s.hom_l2_to_ambient(s.i3_embed(unit)));
  }
  for (int i = 0; i < s.t_dim(); ++i) {
    QVec tc(s.t_dim(), Rat(0));
    tc[i] = 1;
    rows.push_back(s.t_to_ambient(tc));
  }
  return rank(QMat::from_rows(rows)) == 24;
}

bool c2_group_laws() {
  for (int g : {1, 2}) {
    NilSpace s(g);
    std::mt19937_64 rng(211 + g);
    for (int t = 0; t < 200; ++t) {
      N3Element x = rand_n3(rng, s), y = rand_n3(rng, s), z = rand_n3(rng, s);
      if (!n3_equal(n3_mul(s, n3_mul(s, x, y), z), n3_mul(s, x, n3_mul(s, y, z)))) return false;
      if (!n3_equal(n3_mul(s, x, n3_identity(s)), x)) return false;
      if (!n3_equal(n3_mul(s, x, n3_inverse(s, x)), n3_identity(s))) return false;
      N2Element a = rand_n2(rng, s), b = rand_n2(rng, s), c = rand_n2(rng, s);
      if (!n2_equal(n2_mul(s, n2_mul(s, a, b), c), n2_mul(s, a, n2_mul(s, b, c)))) return false;
      if (!n2_equal(n2_mul(s, a, n2_inverse(s, a)), n2_identity(s))) return false;
      if (!n2_equal(n3_project(n3_mul(s, x, y)), n2_mul(s, n3_project(x), n3_project(y))))
        return false;
    }
  }
  return true;
}

bool c3_oracle_equivalence() {
  for (int rank : {2, 4}) {
    NilSpace s(rank / 2);
    std::mt19937_64 rng(311 + rank);
    for (int t = 0; t < 500; ++t) {
      GroupWord u = rand_word(rng, rank, 1 + int(rng() % 8));
      GroupWord w = rand_word(rng, rank, 1 + int(rng() % 8));
      bool coords = n3_equal(word_to_n3(s, u), word_to_n3(s, w));
      bool magnus = magnus_equal(magnus_expand(u, rank, 3), magnus_expand(w, rank, 3));
      if (coords != magnus) return false;
      // a pair that must collide: u against u * (cancelling pair)
      GroupWord u2 =
          word_concat(u, word_concat(parse_word("x2", rank), parse_word("x2^-1", rank)));
      if (!n3_equal(word_to_n3(s, u), word_to_n3(s, u2))) return false;
      if (!magnus_equal(magnus_expand(u, rank, 3), magnus_expand(u2, rank, 3))) return false;
    }
  }
  return true;
}

bool c4_automorphism_laws() {
  for (int g : {1, 2}) {
    NilSpace s(g);
    std::mt19937_64 rng(411 + g);
    for (int t = 0; t < 200; ++t) {
      AutN3 p1 = rand_autn3(rng, s), p2 = rand_autn3(rng, s);
      N3Element x = rand_n3(rng, s);
      N3Element lhs = autn3_apply(s, autn3_compose(s, p1, p2), x);
      N3Element rhs = autn3_apply(s, p1, autn3_apply(s, p2, x));
      if (!n3_equal(lhs, rhs)) return false;
    }
  }
  return true;
}

bool c5_sp_equivariance() {
  for (int g : {1, 2}) {
    NilSpace s(g);
    LieAlgebra lie(s.n(), 4);
    std::mt19937_64 rng(511 + g);
    int done = 0;
    while (done < 50) {
      QVec w = rand_vec(rng, s.n(), 2, 1);
      Rat a = rand_rat(rng, 2, 1);
      if (is_zero(w) || a == 0) continue;
      QMat h = transvection(s, a, w);
      if (!sp_equivariance_check(lie, s, h, 2)) return false;
      if (!sp_equivariance_check(lie, s, h, 3)) return false;
      ++done;
    }
  }
  NilSpace s2(2);
  LieAlgebra lie4(4, 4);
  QMat bad = QMat::identity(4);
  bad(0, 0) = 2;
  return !sp_equivariance_check(lie4, s2, bad, 2);
}

bool c6_trace_vanishing() {
  for (int g : {1, 2, 3}) {
    LieAlgebra lie(2 * g, 4);
    for (int k : {2, 3})
      for (int b : lie.hall_basis(k))
        if (!es_trace(lie, k, hom_matrix_of_lambda(lie, k, b)).is_zero()) return false;
  }
  return true;
}

bool c7_upsilon_identity() {
  for (int g : {1, 2}) {
    NilSpace s(g);
    int n = s.n();
    for (int sv = 0; sv < n; ++sv)
      for (int tv = sv + 1; tv < n; ++tv) {
        QMat fs(s.wedge_dim(), n), ft(s.wedge_dim(), n);
        for (int i = 0; i < n; ++i) {
          QVec ei(n, Rat(0));
          ei[i] = 1;
          QVec es(n, Rat(0)), et(n, Rat(0));
          es[sv] = 1;
          et[tv] = 1;
          QVec ws = s.wedge(ei, es), wt = s.wedge(ei, et);
          for (int r = 0; r < s.wedge_dim(); ++r) {
            fs(r, i) = ws[r];
            ft(r, i) = wt[r];
          }
        }
        QMat ups_ft = s.upsilon(ft), ups_fs = s.upsilon(fs);
        for (int x = 0; x < n; ++x) {
          QVec ex(n, Rat(0)), es(n, Rat(0)), et(n, Rat(0));
          ex[x] = 1;
          es[sv] = 1;
          et[tv] = 1;
          QVec lhs = ups_ft * fs.col(x) - ups_fs * ft.col(x);
          if (!(lhs == s.nu(ex, s.wedge(es, et)))) return false;
        }
      }
  }
  return true;
}

bool c8_torsion_free() {
  for (int r : {2, 4}) {
    LieAlgebra lie(r, 4);
    for (int k : {2, 3})
      for (const Int& d : smith_normal_form(lie.lambda_integral_matrix(k)))
        if (d != 0 && d != 1) return false;
  }
  return true;
}

bool c9_pipeline() {
  IMat trefoil(2, 2), seven4(2, 2);
  trefoil(0, 0) = -1;
  trefoil(0, 1) = 1;
  trefoil(1, 1) = -1;
  seven4(0, 0) = 2;
  seven4(0, 1) = 1;
  seven4(1, 1) = 2;
  if (!(alexander(trefoil) == Poly({Rat(1), Rat(-1), Rat(1)}))) return false;
  if (!(alexander(seven4) == Poly({Rat(4), Rat(-7), Rat(4)}))) return false;
  for (const IMat& a : corpus_seifert) {
    Poly delta = alexander(a);
    Level1 l1 = level1_monodromy(a, Locality(0));
    auto eig = reciprocal_normalize(char_poly(l1.tau));
    if (!(eig.poly == delta)) return false;
    if (!eig.symmetric) return false;
    if (!NilSpace(a.rows() / 2).is_symplectic(l1.tau)) return false;
  }
  return true;
}

bool c10_sgn_anchor() {
  // tabulated rational monodromies of 7_4 and 9_2
  QMat tab74 = mat2(1, Rat(1, 2), Rat(-1, 2), Rat(3, 4));
  QMat tab92 = mat2(1, Rat(1, 4), -1, Rat(3, 4));
  if (sgn_equal(sgn(tab74), sgn(tab92))) return false;
  IMat seven4(2, 2);
  seven4(0, 0) = 2;
  seven4(0, 1) = 1;
  seven4(1, 1) = 2;
  Level1 l1 = level1_monodromy(seven4, Locality(0));
  if (!(l1.tau(0, 0) + l1.tau(1, 1) == Rat(7, 4))) return false;
  return sgn_equal(sgn(l1.tau), sgn(tab74));
}

bool c11_basis_stability() {
  std::mt19937_64 rng(1111);
  for (const IMat& a : corpus_seifert) {
    int n = a.rows();
    KnotInput base;
    base.name = "base";
    base.seifert = a;
    InvariantReport rb = report(base, Locality(0));
    for (int t = 0; t < 20; ++t) {
      QMat p = rand_unimodular(rng, n);
      QMat m = p.transpose() * a.to_q() * p;
      IMat moved(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (m(i, j).get_den() != 1) return false;
          moved(i, j) = m(i, j).get_num();
        }
      KnotInput k;
      k.name = "moved";
      k.seifert = moved;
      InvariantReport rm = report(k, Locality(0));
      if (!(rm.eigen_polynomial == rb.eigen_polynomial)) return false;
      if (rm.symmetric != rb.symmetric) return false;
      if (rm.genericity != rb.genericity) return false;
      if (rm.h1_dims != rb.h1_dims) return false;
      if (n == 2) {
        if (rb.sgn_value.has_value() != rm.sgn_value.has_value()) return false;
        if (rb.sgn_value && !sgn_equal(*rb.sgn_value, *rm.sgn_value)) return false;
      }
    }
  }
  return true;
}

bool c12_hilbert_and_sgn_invariance() {
  std::mt19937_64 rng(1212);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  int done = 0;
  while (done < 100) {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng));
    if (a == 0 || b == 0) continue;
    a.canonicalize();
    b.canonicalize();
    int prod = hilbert_symbol(a, b, Int(0)) * hilbert_symbol(a, b, Int(2));
    for (const auto& [p, e] : factorize(abs(a.get_num() * a.get_den() * b.get_num() *
                                            b.get_den()))) {
      if (p == 2) continue;
      prod *= hilbert_symbol(a, b, p);
    }
    if (prod != 1) return false;
    ++done;
  }
  std::vector<QMat> tests = {mat2(1, 1, -1, 0), mat2(1, Rat(1, 2), Rat(-1, 2), Rat(3, 4)),
                             mat2(3, 4, 2, 3)};
  for (int t = 0; t < 50; ++t) {
    QMat g = rand_sl2(rng);
    for (const QMat& a2 : tests)
      if (!sgn_equal(sgn(a2), sgn(inverse(g) * a2 * g))) return false;
  }
  return true;
}

bool c13_h1_structure() {
  for (const IMat& a : corpus_seifert) {
    NilSpace s(a.rows() / 2);
    Level1 l1 = level1_monodromy(a, Locality(0));
    H1Result h = h1_cyclic(s, l1.tau, std::nullopt, 2);
    if (h.levels[0].quotient_dim != 0) return false;  // Delta(1) = +-1
  }
  for (const FiberedInput& f : corpus_fibered) {
    KnotInput k;
    k.name = "fibered";
    k.fibered = f;
    InvariantReport r = report(k, Locality(0));
    if (r.h1_dims.empty() || r.h1_dims[0] != 0) return false;
  }
  NilSpace s1(1);
  QMat trefoil_tau = mat2(0, 1, -1, 1);
  H1Result h = h1_cyclic(s1, trefoil_tau, std::nullopt, 2);
  return h.levels[1].quotient_dim == 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::string corpus = argc > 1 ? argv[1] : "data/knots.json";
  try {
    load_corpus(corpus);
  } catch (const std::exception& e) {
    std::cerr << "cannot load corpus: " << e.what() << "\n";
    return 2;
  }

  criterion(1, "dimension formulas (dim t, Witt sizes, 24 = 4 + 20 split)", c1_dimensions);
  criterion(2, "N2/N3 group laws on 200 random triples, projection homomorphism",
            c2_group_laws);
  criterion(3, "coordinate model vs truncated Magnus on 500 word pairs per rank", c3_oracle_equivalence);
  criterion(4, "composition law matches functional composition (200 samples per genus)",
            c4_automorphism_laws);
  criterion(5, "Sp-equivariance of lambda for 50 transvections per genus + GL witness",
            c5_sp_equivariance);
  criterion(6, "trace vanishes on every inner image, k in {2,3}, g in {1,2,3}",
            c6_trace_vanishing);
  criterion(7, "Upsilon interchange identity for all s < t, g in {1,2}", c7_upsilon_identity);
  criterion(8, "Smith invariant factors of lambda matrices lie in {0,1}", c8_torsion_free);
  criterion(9, "Seifert pipeline: Delta values, char poly = Delta, symplectic, reciprocal",
            c9_pipeline);
  criterion(10, "sgn separates the tabulated 7_4/9_2 pair; Seifert-derived 7_4 matches",
            c10_sgn_anchor);
  criterion(11, "20 random Seifert-basis changes leave all report fields alone",
            c11_basis_stability);
  criterion(12, "Hilbert product formula (100 pairs); sgn conjugation invariance (50)",
            c12_hilbert_and_sgn_invariance);
  criterion(13, "Q1 = 0 across the corpus; trefoil Q2 has dimension 1", c13_h1_structure);

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 13 criteria passed\n";
  return 0;
}
