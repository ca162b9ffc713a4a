#include "metanil/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace metanil {

Rat rat_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Locality::Locality(unsigned long p_) : p(p_) {
  if (p == 0) return;
  mpz_class z(p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("locality must be 0 or a prime");
}

bool is_p_local(const Rat& s, const Locality& loc) {
  if (loc.is_q()) return true;
  return !mpz_divisible_ui_p(s.get_den().get_mpz_t(), loc.p);
}

bool is_p_unit(const Rat& s, const Locality& loc) {
  if (s == 0) return false;
  if (loc.is_q()) return true;
  return !mpz_divisible_ui_p(s.get_den().get_mpz_t(), loc.p) &&
         !mpz_divisible_ui_p(s.get_num().get_mpz_t(), loc.p);
}

// ---------------------------------------------------------------------------

Poly Poly::constant(const Rat& r) {
  Poly p;
  if (r != 0) p.c = {r};
  return p;
}

Poly Poly::t() {
  Poly p;
  p.c = {Rat(0), Rat(1)};
  return p;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c.size())) return Rat(0);
  return c[k];
}

Rat Poly::leading() const { return c.empty() ? Rat(0) : c.back(); }

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> r(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) + b.coeff(int(i));
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
  std::vector<Rat> r(a.c.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = -a.c[i];
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> r(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return Poly(std::move(r));
}

Poly operator*(const Rat& s, const Poly& a) {
  std::vector<Rat> r(a.c.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = s * a.c[i];
  return Poly(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly q, r = a;
  q.c.assign(a.c.size(), Rat(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    Rat f = r.leading() / b.leading();
    q.c.resize(std::max<size_t>(q.c.size(), d + 1));
    q.c[d] += f;
    for (size_t i = 0; i < b.c.size(); ++i) r.c[d + i] -= f * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = (Rat(1) / a.leading()) * a;
  return a;
}

Poly poly_derivative(const Poly& a) {
  if (a.c.size() <= 1) return Poly();
  std::vector<Rat> r(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = Rat(long(i)) * a.c[i];
  return Poly(std::move(r));
}

bool poly_squarefree(const Poly& a) {
  if (a.is_zero()) return false;
  if (a.degree() == 0) return true;
  return poly_gcd(a, poly_derivative(a)).degree() == 0;
}

std::string poly_to_string(const Poly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = a.degree(); k >= 0; --k) {
    Rat ck = a.coeff(k);
    if (ck == 0) continue;
    if (!first) out << (ck > 0 ? " + " : " - ");
    else if (ck < 0) out << "-";
    Rat mag = abs(ck);
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

ReciprocalNormal reciprocal_normalize(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("reciprocal_normalize of zero polynomial");
  size_t low = 0;
  while (p.c[low] == 0) ++low;
  std::vector<Rat> c(p.c.begin() + long(low), p.c.end());
  // clear to integer coefficients of content 1
  Int l(1);
  for (auto& x : c) l = lcm(l, Int(x.get_den()));
  Int g(0);
  std::vector<Int> ic(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    Rat v = Rat(l) * c[i];
    ic[i] = v.get_num();
    g = gcd(g, ic[i]);
  }
  if (ic.back() < 0) g = -g;
  std::vector<Rat> out(ic.size());
  for (size_t i = 0; i < ic.size(); ++i) out[i] = Rat(ic[i] / g);
  Poly q(std::move(out));
  // q(t) == t^deg q(1/t): the canonical coefficient vector is palindromic.
  // With the positive-leading-coefficient convention the sign is forced, so
  // the flag is a literal reversal comparison.
  bool sym = true;
  int d = q.degree();
  for (int i = 0; i <= d; ++i)
    if (q.coeff(i) != q.coeff(d - i)) sym = false;
  return ReciprocalNormal{q, sym, static_cast<int>(low)};
}

// ---------------------------------------------------------------------------

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return QMat();
  QMat m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (int(rows[i].size()) != m.cols()) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMat QMat::transpose() const {
  QMat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QVec QMat::col(int j) const {
  QVec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

QVec QMat::row(int i) const {
  QVec v(c_);
  for (int j = 0; j < c_; ++j) v[j] = (*this)(i, j);
  return v;
}

QMat operator+(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  QMat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

QMat operator-(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  QMat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  QMat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

QMat operator*(const Rat& s, const QMat& a) {
  QMat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

QVec operator*(const QMat& a, const QVec& v) {
  if (a.cols() != int(v.size())) throw std::invalid_argument("shape mismatch");
  QVec r(a.rows(), Rat(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) r[i] += a(i, j) * v[j];
  return r;
}

QVec operator+(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("shape mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec operator-(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("shape mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec operator*(const Rat& s, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

QMat kron(const QMat& a, const QMat& b) {
  QMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

Rref rref(QMat m) {
  Rref out;
  int lead = 0;
  for (int r = 0; r < m.rows() && lead < m.cols(); ++r) {
    int i = r;
    while (i < m.rows() && m(i, lead) == 0) ++i;
    if (i == m.rows()) {
      --r;
      ++lead;
      continue;
    }
    if (i != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(i, j), m(r, j));
    Rat piv = m(r, lead);
    for (int j = lead; j < m.cols(); ++j) m(r, j) /= piv;
    for (int k = 0; k < m.rows(); ++k) {
      if (k == r || m(k, lead) == 0) continue;
      Rat f = m(k, lead);
      for (int j = lead; j < m.cols(); ++j) m(k, j) -= f * m(r, j);
    }
    out.pivots.push_back(lead);
    ++lead;
  }
  out.rank = int(out.pivots.size());
  out.mat = std::move(m);
  return out;
}

int rank(const QMat& m) { return rref(m).rank; }

Rat det(QMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  int n = m.rows();
  Rat d(1);
  for (int c = 0; c < n; ++c) {
    int i = c;
    while (i < n && m(i, c) == 0) ++i;
    if (i == n) return Rat(0);
    if (i != c) {
      for (int j = 0; j < n; ++j) std::swap(m(i, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Rat inv = Rat(1) / m(c, c);
    for (int k = c + 1; k < n; ++k) {
      if (m(k, c) == 0) continue;
      Rat f = m(k, c) * inv;
      for (int j = c; j < n; ++j) m(k, j) -= f * m(c, j);
    }
  }
  return d;
}

QMat inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows();
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref(std::move(aug));
  if (r.rank != n || r.pivots.back() >= n) throw std::domain_error("singular matrix");
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.mat(i, n + j);
  return inv;
}

std::vector<QVec> kernel_basis(const QMat& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    QVec v(m.cols(), Rat(0));
    v[j] = 1;
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.mat(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (a.rows() != int(b.size())) throw std::invalid_argument("shape mismatch");
  QMat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref r = rref(std::move(aug));
  QVec x(a.cols(), Rat(0));
  for (int i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;  // inconsistent
    x[r.pivots[i]] = r.mat(i, a.cols());
  }
  return x;
}

Poly char_poly(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly of non-square matrix");
  int n = m.rows();
  // Faddeev-LeVerrier: c_n t^n + ... with c_n = 1
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  QMat mk = QMat::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += mk(i, i);
    Rat ck = -tr / Rat(k);
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) mk(i, i) += ck;
  }
  return Poly(std::move(c));
}

QMat IMat::to_q() const {
  QMat q(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) q(i, j) = Rat((*this)(i, j));
  return q;
}

std::vector<Int> smith_normal_form(IMat m) {
  int rows = m.rows(), cols = m.cols();
  int n = std::min(rows, cols);
  std::vector<Int> d(n, Int(0));
  int t = 0;
  while (t < n) {
    // find a nonzero entry of minimal absolute value in the remaining block
    int pi = -1, pj = -1;
    Int best(0);
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (m(i, j) == 0) continue;
        Int a = abs(m(i, j));
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // remaining block is zero
    if (pi != t)
      for (int j = 0; j < cols; ++j) std::swap(m(pi, j), m(t, j));
    if (pj != t)
      for (int i = 0; i < rows; ++i) std::swap(m(i, pj), m(i, t));

    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (m(i, t) == 0) continue;
      Int q = m(i, t) / m(t, t);  // truncated division keeps remainders small
      for (int j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
      if (m(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (m(t, j) == 0) continue;
      Int q = m(t, j) / m(t, t);
      for (int i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
      if (m(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // pivot shrank; repeat with the new minimum

    // enforce divisibility of the remaining block by the pivot
    bool divides = true;
    for (int i = t + 1; i < rows && divides; ++i)
      for (int j = t + 1; j < cols && divides; ++j)
        if (m(i, j) % m(t, t) != 0) {
          for (int jj = t; jj < cols; ++jj) m(t, jj) += m(i, jj);
          divides = false;
        }
    if (!divides) continue;

    d[t] = abs(m(t, t));
    ++t;
  }
  return d;
}

IMat clear_denominators(const QMat& m, const Locality& loc) {
  Int l(1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) l = lcm(l, Int(m(i, j).get_den()));
  if (!loc.is_q() && mpz_divisible_ui_p(l.get_mpz_t(), loc.p))
    throw std::domain_error("denominator lcm is not a unit in Z_(p)");
  IMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Rat v = Rat(l) * m(i, j);
      out(i, j) = v.get_num();
    }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Int pollard_rho(const Int& n) {
  // n odd composite, not a prime power issue handled by caller loop
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xC0FFEEu);
  while (true) {
    Int x = rng.get_z_range(n - 2) + 2, y = x, c = rng.get_z_range(n - 1) + 1, d(1);
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::vector<std::pair<Int, int>>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    for (auto& [p, e] : out)
      if (p == n) {
        ++e;
        return;
      }
    out.emplace_back(n, 1);
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n <= 0) throw std::invalid_argument("factorize needs n > 0");
  std::vector<std::pair<Int, int>> out;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(Int(p), e);
  }
  Int q(41);
  while (q * q <= n && q < 100000) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
      n /= q;
      ++e;
    }
    if (e) out.emplace_back(q, e);
    q += 2;
  }
  if (n > 1) factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

Int squarefree_part(const Rat& r) {
  if (r == 0) return Int(0);
  Int m = r.get_num() * r.get_den();  // same square class as r
  int sign = (m < 0) ? -1 : 1;
  Int res(sign);
  for (const auto& [p, e] : factorize(abs(m)))
    if (e % 2) res *= p;
  return res;
}

}  // namespace metanil
