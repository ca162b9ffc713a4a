// Python bindings for the main operations: exact values cross the boundary
// as "num/den" strings (or plain ints), matrices as nested lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "metanil/knotpipe.hpp"

namespace py = pybind11;
using namespace metanil;

namespace {

Rat rat_of(const py::handle& h) {
  return rat_from_string(py::str(h).cast<std::string>());
}

QMat qmat_of(const py::sequence& rows) {
  int r = int(py::len(rows));
  if (r == 0) return QMat();
  int c = int(py::len(rows[0]));
  QMat m(r, c);
  for (int i = 0; i < r; ++i) {
    py::sequence row = rows[i].cast<py::sequence>();
    if (int(py::len(row)) != c) throw std::invalid_argument("ragged matrix");
    for (int j = 0; j < c; ++j) m(i, j) = rat_of(row[j]);
  }
  return m;
}

IMat imat_of(const py::sequence& rows) {
  int r = int(py::len(rows));
  if (r == 0) return IMat();
  int c = int(py::len(rows[0]));
  IMat m(r, c);
  for (int i = 0; i < r; ++i) {
    py::sequence row = rows[i].cast<py::sequence>();
    for (int j = 0; j < c; ++j) m(i, j) = Int(py::str(row[j]).cast<std::string>());
  }
  return m;
}

py::list mat_out(const QMat& m) {
  py::list rows;
  for (int i = 0; i < m.rows(); ++i) {
    py::list row;
    for (int j = 0; j < m.cols(); ++j) row.append(rat_to_string(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list poly_out(const Poly& p) {
  py::list c;
  for (const Rat& x : p.c) c.append(rat_to_string(x));
  return c;
}

py::dict sgn_out(const SgnValue& s) {
  py::dict d;
  d["kind"] = s.kind == SgnValue::Kind::Full ? "full" : "class";
  if (s.kind == SgnValue::Kind::Class) {
    d["d"] = s.d.get_str();
    d["c"] = s.c.get_str();
  }
  return d;
}

SgnValue sgn_in(const py::dict& d) {
  std::string kind = d["kind"].cast<std::string>();
  if (kind == "full") return SgnValue{SgnValue::Kind::Full, Int(1), Int(1), Rat(1)};
  Int dd(d["d"].cast<std::string>()), cc(d["c"].cast<std::string>());
  return SgnValue{SgnValue::Kind::Class, dd, cc, Rat(cc)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact meta-nilpotent knot invariants";

  m.def(
      "hall_dimension",
      [](int rank, int degree) { return LieAlgebra::witt_dimension(rank, degree); },
      py::arg("rank"), py::arg("degree"),
      "dimension of the degree-d piece of the free Lie algebra");

  m.def(
      "dim_t", [](int g) { return NilSpace(g).t_dim(); }, py::arg("g"),
      "dimension of the subspace t inside H (x) Lambda^2 H");

  m.def(
      "alexander",
      [](const py::sequence& seifert) { return poly_out(alexander(imat_of(seifert))); },
      py::arg("seifert"),
      "normalized Alexander polynomial of a Seifert matrix (ascending coefficients)");

  m.def(
      "level1_monodromy",
      [](const py::sequence& seifert, unsigned long p) {
        return mat_out(level1_monodromy(imat_of(seifert), Locality(p)).tau);
      },
      py::arg("seifert"), py::arg("p") = 0, "symplectic level-1 monodromy over Z_(p)");

  m.def(
      "char_poly",
      [](const py::sequence& mat) { return poly_out(char_poly(qmat_of(mat))); },
      py::arg("matrix"));

  m.def(
      "smith_normal_form",
      [](const py::sequence& mat) {
        py::list out;
        for (const Int& d : smith_normal_form(imat_of(mat))) out.append(d.get_str());
        return out;
      },
      py::arg("matrix"));

  m.def(
      "sgn", [](const py::sequence& mat) { return sgn_out(sgn(qmat_of(mat))); },
      py::arg("matrix"), "sgn invariant of a decomposable element of Sp(2, Q)");

  m.def(
      "sgn_equal",
      [](const py::dict& a, const py::dict& b) { return sgn_equal(sgn_in(a), sgn_in(b)); },
      py::arg("a"), py::arg("b"));

  m.def(
      "hilbert_symbol",
      [](const std::string& a, const std::string& b, const std::string& place) {
        return hilbert_symbol(rat_from_string(a), rat_from_string(b), Int(place));
      },
      py::arg("a"), py::arg("b"), py::arg("place"),
      "classical Hilbert symbol; place \"0\" is the real place");

  m.def(
      "spectral_genericity",
      [](const py::sequence& mat) { return spectral_genericity(qmat_of(mat)); },
      py::arg("matrix"));

  m.def(
      "report_json",
      [](const std::string& input_json, long locality) {
        InputFile f = parse_input_file(input_json);
        Locality p(locality >= 0 ? static_cast<unsigned long>(locality) : f.locality);
        std::vector<InvariantReport> rs;
        rs.reserve(f.knots.size());
        for (const KnotInput& k : f.knots) rs.push_back(report(k, p));
        return reports_to_json(rs);
      },
      py::arg("input_json"), py::arg("locality") = -1,
      "full invariant reports for a JSON input document; locality -1 uses the file's");
}
