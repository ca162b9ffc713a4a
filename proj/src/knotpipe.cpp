#include "metanil/knotpipe.hpp"

#include <json.hpp>

#include <sstream>

namespace metanil {

using nlohmann::json;

void validate(const KnotInput& k) {
  if (k.seifert.has_value() == k.fibered.has_value())
    throw std::invalid_argument("knot input needs exactly one of seifert/fibered: " + k.name);
  if (k.seifert) {
    const IMat& a = *k.seifert;
    if (a.rows() != a.cols() || a.rows() == 0 || a.rows() % 2)
      throw std::invalid_argument("Seifert matrix must be square of even size: " + k.name);
    QMat s = a.to_q() - a.to_q().transpose();
    Rat d = det(s);
    if (d != 1 && d != -1)
      throw std::invalid_argument("det(A - A^T) must be +-1: " + k.name);
  } else {
    const FiberedInput& f = *k.fibered;
    if (f.rank < 2 || f.rank % 2) throw std::invalid_argument("rank must be even: " + k.name);
    if (int(f.images.size()) != f.rank)
      throw std::invalid_argument("need one image word per generator: " + k.name);
    QMat a(f.rank, f.rank);
    for (int i = 0; i < f.rank; ++i) {
      QVec col = word_abelianization(f.images[i], f.rank);
      for (int r = 0; r < f.rank; ++r) a(r, i) = col[r];
    }
    if (det(a) == 0)
      throw std::invalid_argument("images do not induce a level-1 automorphism: " + k.name);
  }
}

namespace {

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  Poly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    Poly term = Poly::constant(ys[i]);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      Poly lin({-xs[j], Rat(1)});
      term = (Rat(1) / (xs[i] - xs[j])) * (term * lin);
    }
    acc = acc + term;
  }
  return acc;
}

Poly seifert_det_poly(const IMat& a) {
  int n = a.rows();
  QMat aq = a.to_q(), at = aq.transpose();
  std::vector<Rat> xs, ys;
  for (int t = 0; t <= n; ++t) {
    xs.emplace_back(t);
    ys.push_back(det(aq - Rat(t) * at));
  }
  return interpolate(xs, ys);
}

}  // namespace

Poly alexander(const IMat& seifert) {
  KnotInput k;
  k.name = "(anonymous)";
  k.seifert = seifert;
  validate(k);
  return reciprocal_normalize(seifert_det_poly(seifert)).poly;
}

bool admissible(const Locality& p, const Poly& delta) {
  if (p.is_q()) return true;
  Rat lead = delta.leading();
  return !mpz_divisible_ui_p(Int(lead.get_num()).get_mpz_t(), p.p);
}

namespace {

// P with P^T S P = J, pivoting on the first pair with a unit pairing
QMat symplectic_gram_schmidt(const QMat& s, const Locality& loc) {
  int n = s.rows();
  std::vector<QVec> residual;
  for (int i = 0; i < n; ++i) {
    QVec e(n, Rat(0));
    e[i] = 1;
    residual.push_back(e);
  }
  auto pair_s = [&](const QVec& x, const QVec& y) {
    QVec sy = s * y;
    Rat r(0);
    for (int i = 0; i < n; ++i) r += x[i] * sy[i];
    return r;
  };
  std::vector<QVec> cols;
  while (!residual.empty()) {
    int pi = -1, pj = -1;
    for (size_t i = 0; i < residual.size() && pi < 0; ++i)
      for (size_t j = i + 1; j < residual.size(); ++j) {
        Rat c = pair_s(residual[i], residual[j]);
        if (is_p_unit(c, loc)) {
          pi = int(i);
          pj = int(j);
          break;
        }
      }
    if (pi < 0) throw std::domain_error("pairing is degenerate over Z_(p)");
    Rat c = pair_s(residual[pi], residual[pj]);
    QVec p1 = residual[pi];
    QVec p2 = (Rat(-1) / c) * residual[pj];  // S(p1, p2) = -1, matching J
    cols.push_back(p1);
    cols.push_back(p2);
    std::vector<QVec> next;
    for (size_t k = 0; k < residual.size(); ++k) {
      if (int(k) == pi || int(k) == pj) continue;
      const QVec& v = residual[k];
      next.push_back(v + pair_s(v, p2) * p1 - pair_s(v, p1) * p2);
    }
    residual = std::move(next);
  }
  QMat p(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) p(i, j) = cols[j][i];
  return p;
}

}  // namespace

Level1 level1_monodromy(const IMat& seifert, const Locality& p) {
  Poly delta = alexander(seifert);
  if (!admissible(p, delta))
    throw std::domain_error("inadmissible locality: p divides l-coef of Delta");
  QMat a = seifert.to_q();
  Rat da = det(a);
  if (da == 0)
    throw std::domain_error("Seifert matrix singular over Q: deg Delta < matrix size");
  if (!is_p_unit(da, p)) throw std::domain_error("Seifert matrix not invertible over Z_(p)");
  QMat s = a - a.transpose();
  QMat tau_raw = inverse(a) * a.transpose();
  if (!(tau_raw.transpose() * s * tau_raw == s))
    throw std::logic_error("monodromy convention guard: Milnor pairing not preserved");
  QMat bc = symplectic_gram_schmidt(s, p);
  QMat tau = inverse(bc) * tau_raw * bc;
  NilSpace space(seifert.rows() / 2);
  if (!space.is_symplectic(tau)) throw std::logic_error("monodromy is not symplectic");
  return Level1{tau, bc, tau_raw};
}

AutN3 fibered_monodromy_k3(const NilSpace& s, const FiberedInput& input) {
  if (input.rank != s.n()) throw std::invalid_argument("rank mismatch");
  int n = s.n();
  std::vector<N3Element> z(n);
  QMat a(n, n), amat(s.wedge_dim(), n), alpham(s.t_dim(), n);
  for (int i = 0; i < n; ++i) {
    z[i] = word_to_n3(s, input.images[i]);
    for (int r = 0; r < n; ++r) a(r, i) = z[i].v[r];
    for (int r = 0; r < s.wedge_dim(); ++r) amat(r, i) = z[i].a[r];
    for (int r = 0; r < s.t_dim(); ++r) alpham(r, i) = z[i].alpha[r];
  }
  if (!is_p_unit(det(a), s.locality()))
    throw std::domain_error("level-1 matrix is singular over Z_(p)");
  QMat ainv = inverse(a);
  QMat f = Rat(1, 2) * (amat * ainv);
  QMat bigf = Rat(1, 2) * ((alpham - s.upsilon(f) * amat) * ainv);
  AutN3 phi{bigf, f, a};
  for (int i = 0; i < n; ++i) {
    N3Element e = n3_identity(s);
    e.v[i] = 1;
    if (!n3_equal(autn3_apply(s, phi, e), z[i]))
      throw std::logic_error("coordinate extraction failed to reproduce generator images");
  }
  return phi;
}

namespace {

const char* kConvention = "tau = A^{-1} A^T conjugated by P with P^T (A - A^T) P = J";

void fill_level1_derived(InvariantReport& r, const QMat& tau) {
  int g = tau.rows() / 2;
  r.level1 = tau;
  ReciprocalNormal eig = reciprocal_normalize(char_poly(tau));
  r.eigen_polynomial = eig.poly;
  r.symmetric = eig.symmetric;
  r.genericity = spectral_genericity(tau);
  if (g == 1) {
    try {
      r.sgn_value = sgn(tau);
    } catch (const std::domain_error& e) {
      r.sgn_note = e.what();
    }
  } else {
    r.sgn_note = "sgn is defined for g = 1 only";
  }
}

}  // namespace

InvariantReport report(const KnotInput& input, const Locality& p, const ReportOptions& options) {
  validate(input);
  InvariantReport r;
  r.name = input.name;
  r.locality = p.p;

  if (input.seifert) {
    r.input_kind = "seifert";
    const IMat& a = *input.seifert;
    int g = a.rows() / 2;
    r.alexander = alexander(a);
    r.admissible = admissible(p, r.alexander);
    r.convention = kConvention;
    if (!r.admissible) {
      // the p-localized monodromy is defined to be 1 in this case
      r.level1 = QMat::identity(a.rows());
      ReciprocalNormal eig = reciprocal_normalize(char_poly(*r.level1));
      r.eigen_polynomial = eig.poly;
      r.symmetric = eig.symmetric;
      r.sgn_note = "inadmissible locality";
      return r;
    }
    Level1 l1 = level1_monodromy(a, p);
    fill_level1_derived(r, l1.tau);
    r.level1_raw = l1.tau_raw;
    NilSpace space(g, p);
    H1Result h1 = h1_cyclic(space, l1.tau, std::nullopt, 2);
    for (const auto& c : h1.levels) r.h1_dims.push_back(c.quotient_dim);
    return r;
  }

  r.input_kind = "fibered";
  const FiberedInput& fi = *input.fibered;
  int g = fi.rank / 2;
  NilSpace space(g, p);
  if (p.p == 2 || p.p == 3) {
    // the depth-3 coordinates need 2 and 3 invertible; only the level-1
    // part of the report can be produced at these localities
    QMat a(fi.rank, fi.rank);
    for (int i = 0; i < fi.rank; ++i) {
      QVec col = word_abelianization(fi.images[i], fi.rank);
      for (int rr = 0; rr < fi.rank; ++rr) a(rr, i) = col[rr];
    }
    r.convention = "level-1 abelianization of the generator images";
    ReciprocalNormal eig0 = reciprocal_normalize(char_poly(a));
    r.alexander = eig0.poly;
    r.admissible = admissible(p, r.alexander);
    if (!is_p_unit(det(a), p))
      throw std::domain_error("level-1 matrix is singular over Z_(p)");
    fill_level1_derived(r, a);
    H1Result h10 = h1_cyclic(space, a, std::nullopt, 2);
    for (const auto& c : h10.levels) r.h1_dims.push_back(c.quotient_dim);
    r.sgn_note = r.sgn_note.empty()
                     ? "level-2/3 data skipped: p in {2,3} is not invertible"
                     : r.sgn_note;
    return r;
  }
  AutN3 phi = fibered_monodromy_k3(space, fi);
  r.convention = "level-1 part of the induced automorphism of F/F_3 (x) Z_(p)";
  ReciprocalNormal eig = reciprocal_normalize(char_poly(phi.A));
  r.alexander = eig.poly;
  r.admissible = admissible(p, r.alexander);
  fill_level1_derived(r, phi.A);
  AutN2 l2 = autn3_project(phi);
  H1Result h1 = h1_cyclic(space, phi.A, l2, 2);
  for (const auto& c : h1.levels) r.h1_dims.push_back(c.quotient_dim);
  AutN3 rep = out_representative_k3(space, phi);
  r.level3 = rep;
  r.boundary_fixed = fixes_boundary(space, phi);
  if (space.is_symplectic(phi.A)) {
    Psi2Result psi = psi2_invariant(space, out_representative_k2(space, l2),
                                    options.extra_centralizer_gens);
    Psi2Report pr;
    pr.v_dim = psi.v_dim;
    pr.quotient_dim = psi.quotient_dim;
    pr.subgroup = psi.subgroup;
    pr.class_vector = psi.class_vector;
    r.psi2 = pr;
  } else {
    r.sgn_note = r.sgn_note.empty() ? "level-1 part is not symplectic" : r.sgn_note;
  }
  // C_{2g}(2) ~ S^2 H, so the abelianized trace of the degree-3 part loses nothing
  LieAlgebra lie(fi.rank, 3);
  QMat fmat(lie.dim(3), fi.rank);
  for (int i = 0; i < fi.rank; ++i) {
    LieElement li = theta_inverse(space, lie, rep.F.col(i));
    for (const auto& [w, c] : li.coords) fmat(lie.position_in_degree(w), i) = c;
  }
  r.es_trace_k2 = morita_trace(lie, 2, fmat);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

json rat_json(const Rat& r) { return rat_to_string(r); }

json vec_json(const QVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_json(x));
  return a;
}

json mat_json(const QMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json poly_json(const Poly& p) {
  json a = json::array();
  for (const Rat& c : p.c) a.push_back(rat_json(c));
  return a;
}

json sym_json(const SymTensor& t) {
  json o = json::object();
  for (const auto& [w, c] : t.coords) {
    std::string key;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) key += "*";
      key += "e" + std::to_string(w[i] + 1);
    }
    o[key.empty() ? "1" : key] = rat_json(c);
  }
  return o;
}

}  // namespace

InputFile parse_input_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  InputFile out;
  if (j.contains("locality")) {
    long p = j.at("locality").get<long>();
    if (p < 0) throw std::invalid_argument("locality must be >= 0");
    out.locality = static_cast<unsigned long>(p);
  }
  if (!j.contains("knots") || !j["knots"].is_array())
    throw std::invalid_argument("input needs a \"knots\" array");
  try {
    for (const json& k : j["knots"]) {
      KnotInput ki;
      ki.name = k.value("name", "(unnamed)");
      if (k.contains("seifert")) {
        const json& m = k["seifert"];
        int rows = int(m.size());
        if (rows == 0) throw std::invalid_argument("empty seifert matrix: " + ki.name);
        int cols = int(m[0].size());
        IMat a(rows, cols);
        for (int i = 0; i < rows; ++i) {
          if (int(m[i].size()) != cols)
            throw std::invalid_argument("ragged seifert matrix: " + ki.name);
          for (int jj = 0; jj < cols; ++jj) a(i, jj) = Int(m[i][jj].get<long>());
        }
        ki.seifert = a;
      }
      if (k.contains("fibered")) {
        FiberedInput f;
        f.rank = k["fibered"].at("rank").get<int>();
        for (const json& w : k["fibered"].at("images"))
          f.images.push_back(parse_word(w.get<std::string>(), f.rank));
        ki.fibered = f;
      }
      validate(ki);
      out.knots.push_back(std::move(ki));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad input document: ") + e.what());
  }
  return out;
}

std::string report_to_json(const InvariantReport& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["name"] = r.name;
  j["locality"] = r.locality;
  j["input_kind"] = r.input_kind;
  j["alexander"] = poly_json(r.alexander);
  j["admissible"] = r.admissible;
  if (r.level1) j["level1"] = mat_json(*r.level1);
  if (r.level1_raw) j["level1_unreduced"] = mat_json(*r.level1_raw);
  j["convention"] = r.convention;
  j["eigen_polynomial"] = poly_json(r.eigen_polynomial);
  j["symmetric"] = r.symmetric;
  if (r.sgn_value) {
    json s;
    s["kind"] = r.sgn_value->kind == SgnValue::Kind::Full ? "full" : "class";
    if (r.sgn_value->kind == SgnValue::Kind::Class) {
      s["d"] = r.sgn_value->d.get_str();
      s["c"] = r.sgn_value->c.get_str();
    }
    j["sgn"] = s;
  }
  if (!r.sgn_note.empty()) j["sgn_note"] = r.sgn_note;
  j["genericity"] = r.genericity;
  j["h1_dims"] = r.h1_dims;
  if (r.psi2) {
    json p;
    p["v_dim"] = r.psi2->v_dim;
    p["quotient_dim"] = r.psi2->quotient_dim;
    p["subgroup"] = r.psi2->subgroup;
    p["class_vector"] = vec_json(r.psi2->class_vector);
    j["psi2"] = p;
  }
  if (r.level3) {
    json l;
    l["F"] = mat_json(r.level3->F);
    l["f"] = mat_json(r.level3->f);
    l["A"] = mat_json(r.level3->A);
    j["level3_out_representative"] = l;
  }
  if (r.boundary_fixed) j["fixes_boundary"] = *r.boundary_fixed;
  if (r.es_trace_k2) j["es_trace_k2"] = sym_json(*r.es_trace_k2);
  return j.dump(2);
}

std::string reports_to_json(const std::vector<InvariantReport>& rs) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(json::parse(report_to_json(r)));
  return arr.dump(2);
}

std::string report_to_text(const InvariantReport& r) {
  std::ostringstream o;
  o << r.name << " (" << r.input_kind << ", p=" << r.locality << ")\n";
  o << "  alexander:   " << poly_to_string(r.alexander) << "\n";
  o << "  admissible:  " << (r.admissible ? "yes" : "no") << "\n";
  o << "  eigen poly:  " << poly_to_string(r.eigen_polynomial)
    << (r.symmetric ? "  (reciprocal)" : "  (NOT reciprocal)") << "\n";
  if (r.level1) {
    o << "  level1 tau:  [";
    for (int i = 0; i < r.level1->rows(); ++i) {
      if (i) o << "; ";
      for (int jj = 0; jj < r.level1->cols(); ++jj) {
        if (jj) o << " ";
        o << rat_to_string((*r.level1)(i, jj));
      }
    }
    o << "]\n";
  }
  if (r.sgn_value) {
    if (r.sgn_value->kind == SgnValue::Kind::Full)
      o << "  sgn:         full square-class group\n";
    else
      o << "  sgn:         class(d=" << r.sgn_value->d.get_str() << ", c="
        << r.sgn_value->c.get_str() << ")\n";
  } else if (!r.sgn_note.empty()) {
    o << "  sgn:         - (" << r.sgn_note << ")\n";
  }
  o << "  genericity:  " << (r.genericity ? "yes" : "no") << "\n";
  o << "  h1 dims:     ";
  for (size_t i = 0; i < r.h1_dims.size(); ++i)
    o << "Q" << (i + 1) << "=" << r.h1_dims[i] << (i + 1 < r.h1_dims.size() ? ", " : "");
  o << "\n";
  if (r.psi2)
    o << "  psi2:        dim V=" << r.psi2->v_dim << ", quotient=" << r.psi2->quotient_dim
      << "\n";
  if (r.boundary_fixed)
    o << "  boundary:    " << (*r.boundary_fixed ? "fixed" : "moved") << "\n";
  return o.str();
}

std::vector<QMat> parse_matrix_list(const std::string& text) {
  std::vector<QMat> out;
  try {
    json j = json::parse(text);
    for (const json& m : j) {
      int rows = int(m.size());
      int cols = rows ? int(m[0].size()) : 0;
      QMat q(rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int jj = 0; jj < cols; ++jj) {
          const json& e = m[i][jj];
          q(i, jj) = e.is_string() ? rat_from_string(e.get<std::string>())
                                   : Rat(e.get<long>());
        }
      out.push_back(q);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad matrix list: ") + e.what());
  }
  return out;
}

}  // namespace metanil
