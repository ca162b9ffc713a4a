#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace metanil {

using Int = mpz_class;
using Rat = mpq_class;
using QVec = std::vector<Rat>;

// "n" or "n/d"; throws on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

// The coefficient ring Z_(p): rationals with denominator coprime to p.
// p = 0 selects all of Q.
struct Locality {
  unsigned long p = 0;
  Locality() = default;
  explicit Locality(unsigned long p_);  // throws unless p is 0 or prime
  bool is_q() const { return p == 0; }
};

bool is_p_local(const Rat& s, const Locality& loc);
// nonzero and both numerator and denominator coprime to p
bool is_p_unit(const Rat& s, const Locality& loc);

// ---------------------------------------------------------------------------
// univariate polynomials over Q, coefficients indexed by degree
// ---------------------------------------------------------------------------
struct Poly {
  std::vector<Rat> c;  // trailing zeros trimmed

  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& r);
  static Poly t();  // the monomial t

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  Rat coeff(int k) const;
  Rat leading() const;
  Rat eval(const Rat& x) const;

  bool operator==(const Poly& o) const { return c == o.c; }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, const Poly& a);
Poly operator-(const Poly& a);

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic gcd, 0 for both zero
Poly poly_derivative(const Poly& a);
bool poly_squarefree(const Poly& a);
std::string poly_to_string(const Poly& a, const std::string& var = "t");

struct ReciprocalNormal {
  Poly poly;        // q(0) != 0, integer coefficients of content 1, positive leading
  bool symmetric;   // q(t) == +-t^deg q(1/t)
  int t_power;      // power of t stripped from the input
};
// Canonical representative of a Laurent class up to units +-t^k.  Throws on 0.
ReciprocalNormal reciprocal_normalize(const Poly& p);

// ---------------------------------------------------------------------------
// dense matrices
// ---------------------------------------------------------------------------
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}
  static QMat identity(int n);
  static QMat from_rows(const std::vector<QVec>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  QMat transpose() const;
  QVec col(int j) const;
  QVec row(int i) const;
  bool operator==(const QMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

QMat operator+(const QMat& a, const QMat& b);
QMat operator-(const QMat& a, const QMat& b);
QMat operator*(const QMat& a, const QMat& b);
QMat operator*(const Rat& s, const QMat& a);
QVec operator*(const QMat& a, const QVec& v);

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Rat& s, const QVec& a);
bool is_zero(const QVec& v);

QMat kron(const QMat& a, const QMat& b);

// Reduced row echelon form with deterministic pivoting (first nonzero in
// column order); pivots lists the pivot column of each nonzero row.
struct Rref {
  QMat mat;
  std::vector<int> pivots;
  int rank = 0;
};
Rref rref(QMat m);

int rank(const QMat& m);
Rat det(QMat m);
QMat inverse(const QMat& m);                       // throws if singular
std::vector<QVec> kernel_basis(const QMat& m);     // right kernel
std::optional<QVec> solve(const QMat& a, const QVec& b);

// det(tI - M), monic, exact (Faddeev-LeVerrier).  Throws on non-square input.
Poly char_poly(const QMat& m);

class IMat {
 public:
  IMat() = default;
  IMat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}
  int rows() const { return r_; }
  int cols() const { return c_; }
  Int& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const Int& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  QMat to_q() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Int> a_;
};

// Invariant factors d1 | d2 | ... (length min(rows, cols), zeros kept).
std::vector<Int> smith_normal_form(IMat m);

// Clears denominators by the lcm; the caller asserts the lcm is a unit in
// Z_(p) -- checked here, throws otherwise.
IMat clear_denominators(const QMat& m, const Locality& loc);

// ---------------------------------------------------------------------------
// small-integer factorization support (trial division + Pollard rho)
// ---------------------------------------------------------------------------
std::vector<std::pair<Int, int>> factorize(Int n);  // n > 0
Int squarefree_part(const Rat& r);                  // signed, of the square class; 0 for 0

}  // namespace metanil
