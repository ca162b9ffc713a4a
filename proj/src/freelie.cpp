#include "metanil/freelie.hpp"

#include <algorithm>
#include <sstream>

namespace metanil {

namespace {

void add_term(std::map<std::vector<int>, Rat>& m, const std::vector<int>& w, const Rat& c) {
  auto it = m.find(w);
  if (it == m.end()) {
    if (c != 0) m.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) m.erase(it);
}

void add_term(std::map<int, Rat>& m, int k, const Rat& c) {
  auto it = m.find(k);
  if (it == m.end()) {
    if (c != 0) m.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) m.erase(it);
}

}  // namespace

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  TensorElement r = a;
  if (r.coords.empty()) r.degree = b.degree;
  for (const auto& [w, c] : b.coords) add_term(r.coords, w, c);
  return r;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
  return a + Rat(-1) * b;
}

TensorElement operator*(const Rat& s, const TensorElement& a) {
  TensorElement r;
  r.degree = a.degree;
  if (s == 0) return r;
  for (const auto& [w, c] : a.coords) r.coords.emplace(w, s * c);
  return r;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
  TensorElement r;
  r.degree = a.degree + b.degree;
  for (const auto& [wa, ca] : a.coords)
    for (const auto& [wb, cb] : b.coords) {
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      add_term(r.coords, w, ca * cb);
    }
  return r;
}

LieElement operator+(const LieElement& a, const LieElement& b) {
  if (!a.is_zero() && !b.is_zero() && a.degree != b.degree)
    throw std::invalid_argument("degree mismatch in Lie sum");
  LieElement r = a;
  if (r.is_zero()) r.degree = b.degree;
  for (const auto& [k, c] : b.coords) add_term(r.coords, k, c);
  return r;
}

LieElement operator-(const LieElement& a, const LieElement& b) { return a + Rat(-1) * b; }

LieElement operator*(const Rat& s, const LieElement& a) {
  LieElement r;
  r.degree = a.degree;
  if (s == 0) return r;
  for (const auto& [k, c] : a.coords) r.coords.emplace(k, s * c);
  return r;
}

unsigned long LieAlgebra::witt_dimension(int rank, int degree) {
  // (1/n) sum_{d|n} mu(d) rank^{n/d}
  auto mobius = [](int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
    if (n > 1) m = -m;
    return m;
  };
  Int total(0);
  for (int d = 1; d <= degree; ++d) {
    if (degree % d) continue;
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), rank, degree / d);
    total += mobius(d) * pw;
  }
  total /= degree;
  return total.get_ui();
}

LieAlgebra::LieAlgebra(int rank, int max_degree, int table_degree)
    : rank_(rank),
      maxdeg_(max_degree),
      tabledeg_(table_degree < 0 ? max_degree : table_degree) {
  if (rank < 2) throw std::invalid_argument("rank must be >= 2");
  if (max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
  if (tabledeg_ > maxdeg_) tabledeg_ = maxdeg_;
  by_degree_.assign(maxdeg_ + 1, {});
  for (int i = 0; i < rank_; ++i) {
    HallWord w;
    w.degree = 1;
    w.gen = i;
    by_degree_[1].push_back(int(words_.size()));
    pos_in_degree_.push_back(i);
    words_.push_back(w);
  }
  for (int d = 2; d <= maxdeg_; ++d) {
    int pos = 0;
    for (int da = d - 1; 2 * da >= d; --da) {
      int db = d - da;
      for (int a : by_degree_[da]) {
        for (int b : by_degree_[db]) {
          if (b >= a) break;  // need a > b (indices are degree-major ordered)
          const HallWord& wa = words_[a];
          if (wa.gen < 0 && b < wa.right) continue;  // Hall condition
          HallWord w;
          w.degree = d;
          w.left = a;
          w.right = b;
          int idx = int(words_.size());
          by_degree_[d].push_back(idx);
          pos_in_degree_.push_back(pos++);
          pair_index_[{a, b}] = idx;
          words_.push_back(w);
        }
      }
    }
    if (by_degree_[d].size() != witt_dimension(rank_, d))
      throw std::logic_error("Hall basis size disagrees with the Witt formula");
  }

  iota_table_.resize(words_.size());
  for (size_t i = 0; i < words_.size(); ++i) {
    const HallWord& w = words_[i];
    if (w.gen >= 0) {
      TensorElement t;
      t.degree = 1;
      t.coords[{w.gen}] = 1;
      iota_table_[i] = t;
    } else {
      const TensorElement& l = iota_table_[w.left];
      const TensorElement& r = iota_table_[w.right];
      iota_table_[i] = tensor_mul(l, r) - tensor_mul(r, l);
    }
  }

  // For each degree, an extraction operator inverting iota on its image:
  // pick pivot rows of the (tensor words x Hall words) matrix and invert.
  extract_rows_.assign(maxdeg_ + 1, {});
  extract_inv_.assign(maxdeg_ + 1, QMat());
  for (int d = 1; d <= tabledeg_; ++d) {
    const auto& basis = by_degree_[d];
    int n = int(basis.size());
    std::map<std::vector<int>, int> row_of;
    for (int j = 0; j < n; ++j)
      for (const auto& [w, c] : iota_table_[basis[j]].coords)
        row_of.emplace(w, -1);
    int nr = 0;
    for (auto& [w, r] : row_of) r = nr++;
    QMat t(nr, n);
    for (int j = 0; j < n; ++j)
      for (const auto& [w, c] : iota_table_[basis[j]].coords) t(row_of[w], j) = c;
    Rref rr = rref(t.transpose());  // pivots select independent rows of t
    if (rr.rank != n) throw std::logic_error("iota is not injective on the Hall basis");
    QMat sq(n, n);
    std::vector<std::vector<int>> rows(n);
    {
      std::vector<const std::vector<int>*> keys(nr);
      for (const auto& [w, r] : row_of) keys[r] = &w;
      for (int j = 0; j < n; ++j) {
        int r = rr.pivots[j];
        rows[j] = *keys[r];
        for (int k = 0; k < n; ++k) sq(j, k) = t(r, k);
      }
    }
    extract_inv_[d] = inverse(sq);
    extract_rows_[d] = std::move(rows);
  }
}

const std::vector<int>& LieAlgebra::hall_basis(int degree) const {
  if (degree < 1 || degree > maxdeg_)
    throw std::domain_error("degree outside the configured bound");
  return by_degree_[degree];
}

std::string LieAlgebra::word_to_string(int idx) const {
  const HallWord& w = words_[idx];
  if (w.gen >= 0) return "e" + std::to_string(w.gen + 1);
  return "[" + word_to_string(w.left) + "," + word_to_string(w.right) + "]";
}

LieElement LieAlgebra::gen(int i) const {
  if (i < 0 || i >= rank_) throw std::invalid_argument("generator index out of range");
  LieElement e;
  e.degree = 1;
  e.coords[i] = 1;
  return e;
}

LieElement LieAlgebra::from_word(int idx) const {
  LieElement e;
  e.degree = words_[idx].degree;
  e.coords[idx] = 1;
  return e;
}

TensorElement LieAlgebra::iota(const LieElement& x) const {
  TensorElement t;
  t.degree = x.degree;
  for (const auto& [k, c] : x.coords)
    t = t + c * iota_table_[k];
  t.degree = x.degree;
  return t;
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  LieElement zero;
  if (x.is_zero() || y.is_zero()) return zero;
  int d = x.degree + y.degree;
  if (d > tabledeg_) throw std::domain_error("bracket degree exceeds the configured bound");
  TensorElement tx = iota(x), ty = iota(y);
  TensorElement comm = tensor_mul(tx, ty) - tensor_mul(ty, tx);
  // solve iota(result) = comm against the degree-d Hall image
  const auto& basis = by_degree_[d];
  int n = int(basis.size());
  QVec rhs(n, Rat(0));
  {
    std::map<std::vector<int>, int> rowpos;
    for (int j = 0; j < n; ++j) rowpos[extract_rows_[d][j]] = j;
    for (const auto& [w, c] : comm.coords) {
      auto it = rowpos.find(w);
      if (it != rowpos.end()) rhs[it->second] = c;
    }
  }
  QVec coeffs(n, Rat(0));
  const QMat& e = extract_inv_[d];
  for (int j = 0; j < n; ++j) {
    if (rhs[j] == 0) continue;
    for (int i = 0; i < n; ++i)
      if (e(i, j) != 0) coeffs[i] += e(i, j) * rhs[j];
  }
  LieElement out;
  out.degree = d;
  TensorElement check;
  check.degree = d;
  for (int i = 0; i < n; ++i) {
    if (coeffs[i] == 0) continue;
    out.coords[basis[i]] = coeffs[i];
    check = check + coeffs[i] * iota_table_[basis[i]];
  }
  if (!(check - comm).is_zero())
    throw std::logic_error("bracket image inconsistent with the Hall span");
  return out;
}

QMat LieAlgebra::bracketing_matrix(int k) const {
  if (k < 1 || k + 1 > maxdeg_) throw std::domain_error("degree outside the configured bound");
  int dk = dim(k), dk1 = dim(k + 1);
  QMat m(dk1, rank_ * dk);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < dk; ++j) {
      LieElement b = bracket(gen(i), from_word(by_degree_[k][j]));
      for (const auto& [w, c] : b.coords) m(pos_in_degree_[w], i * dk + j) = c;
    }
  return m;
}

IMat LieAlgebra::lambda_integral_matrix(int k) const {
  if (k < 2 || k > maxdeg_) throw std::domain_error("lambda level outside the configured bound");
  int dsrc = dim(k - 1), ddst = dim(k);
  IMat m(rank_ * ddst, dsrc);
  for (int j = 0; j < dsrc; ++j) {
    LieElement b = from_word(by_degree_[k - 1][j]);
    for (int i = 0; i < rank_; ++i) {
      LieElement v = bracket(b, gen(i));
      for (const auto& [w, c] : v.coords) {
        if (c.get_den() != 1) throw std::logic_error("non-integral Hall coordinate");
        m(i * ddst + pos_in_degree_[w], j) = c.get_num();
      }
    }
  }
  return m;
}

bool LieAlgebra::is_hall(int idx) const {
  const HallWord& w = words_[idx];
  if (w.gen >= 0) return w.gen < rank_;
  if (!(w.left > w.right)) return false;
  const HallWord& l = words_[w.left];
  if (l.gen < 0 && w.right < l.right) return false;
  return is_hall(w.left) && is_hall(w.right);
}

}  // namespace metanil
