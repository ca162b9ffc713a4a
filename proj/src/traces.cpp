#include "metanil/traces.hpp"

#include <algorithm>

namespace metanil {

bool operator==(const CyclicWord& a, const CyclicWord& b) { return a.coords == b.coords; }
bool operator==(const SymTensor& a, const SymTensor& b) { return a.coords == b.coords; }

TensorElement contract_first(const std::vector<TensorElement>& dual_components) {
  TensorElement out;
  out.degree = -1;
  for (size_t i = 0; i < dual_components.size(); ++i) {
    const TensorElement& t = dual_components[i];
    if (t.degree < 1 && !t.is_zero())
      throw std::domain_error("contraction needs degree >= 1");
    for (const auto& [w, c] : t.coords) {
      if (w[0] != int(i)) continue;
      std::vector<int> tail(w.begin() + 1, w.end());
      auto it = out.coords.find(tail);
      if (it == out.coords.end())
        out.coords.emplace(std::move(tail), c);
      else {
        it->second += c;
        if (it->second == 0) out.coords.erase(it);
      }
      out.degree = int(w.size()) - 1;
    }
    if (out.degree < 0 && !t.is_zero()) out.degree = t.degree - 1;
  }
  if (out.degree < 0) out.degree = 0;
  return out;
}

namespace {

std::vector<int> min_rotation(const std::vector<int>& w) {
  std::vector<int> best = w;
  std::vector<int> cur = w;
  for (size_t r = 1; r < w.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

CyclicWord cyclic_project(const TensorElement& x) {
  CyclicWord out;
  out.degree = x.degree;
  for (const auto& [w, c] : x.coords) {
    std::vector<int> key = w.empty() ? w : min_rotation(w);
    auto it = out.coords.find(key);
    if (it == out.coords.end())
      out.coords.emplace(std::move(key), c);
    else {
      it->second += c;
      if (it->second == 0) out.coords.erase(it);
    }
  }
  return out;
}

SymTensor abelianize(const CyclicWord& x) {
  SymTensor out;
  out.degree = x.degree;
  for (const auto& [w, c] : x.coords) {
    std::vector<int> key = w;
    std::sort(key.begin(), key.end());
    auto it = out.coords.find(key);
    if (it == out.coords.end())
      out.coords.emplace(std::move(key), c);
    else {
      it->second += c;
      if (it->second == 0) out.coords.erase(it);
    }
  }
  return out;
}

CyclicWord es_trace(const LieAlgebra& lie, int k, const QMat& f) {
  if (k < 2) throw std::domain_error("the trace maps are defined for k >= 2");
  if (k + 1 > lie.max_degree()) throw std::domain_error("degree outside configured bound");
  int n = lie.rank();
  const auto& basis = lie.hall_basis(k + 1);
  if (f.rows() != int(basis.size()) || f.cols() != n)
    throw std::invalid_argument("hom matrix has wrong shape");
  std::vector<TensorElement> dual(n);
  for (int i = 0; i < n; ++i) {
    LieElement fi;
    fi.degree = k + 1;
    for (size_t r = 0; r < basis.size(); ++r)
      if (f(int(r), i) != 0) fi.coords[basis[r]] = f(int(r), i);
    dual[i] = lie.iota(fi);
    dual[i].degree = k + 1;
  }
  return cyclic_project(contract_first(dual));
}

SymTensor morita_trace(const LieAlgebra& lie, int k, const QMat& f) {
  return abelianize(es_trace(lie, k, f));
}

QMat hom_matrix_of_lambda(const LieAlgebra& lie, int k, int hall_word_idx) {
  const auto& dst = lie.hall_basis(k + 1);
  QMat f(int(dst.size()), lie.rank());
  LieElement b = lie.from_word(hall_word_idx);
  for (int i = 0; i < lie.rank(); ++i) {
    LieElement v = lie.bracket(b, lie.gen(i));
    for (const auto& [w, c] : v.coords) f(lie.position_in_degree(w), i) = c;
  }
  return f;
}

}  // namespace metanil
