#pragma once

#include <map>
#include <vector>

#include "metanil/exact.hpp"

namespace metanil {

// One entry of the Hall word table.  Leaves are generators (gen >= 0);
// composite words store indices of their halves in the owning table.
struct HallWord {
  int degree = 1;
  int gen = -1;    // generator index, 0-based, or -1 for a bracket
  int left = -1;   // index of the left (larger) half
  int right = -1;  // index of the right (smaller) half
};

// Homogeneous element of the graded piece L_k, in Hall-basis coordinates.
// Indexing note: throughout the project L_k means F_{k-1}/F_k, the span of
// the DEGREE-k bracket monomials; L_1 = H.
struct LieElement {
  int degree = 0;
  std::map<int, Rat> coords;  // global Hall word index -> coefficient

  bool is_zero() const { return coords.empty(); }
};

// Homogeneous element of H^{(x)k}: words of generator indices -> coefficient.
struct TensorElement {
  int degree = 0;
  std::map<std::vector<int>, Rat> coords;

  bool is_zero() const { return coords.empty(); }
};

TensorElement operator+(const TensorElement& a, const TensorElement& b);
TensorElement operator-(const TensorElement& a, const TensorElement& b);
TensorElement operator*(const Rat& s, const TensorElement& a);
// concatenation product in the tensor algebra
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);

LieElement operator+(const LieElement& a, const LieElement& b);
LieElement operator-(const LieElement& a, const LieElement& b);
LieElement operator*(const Rat& s, const LieElement& a);

// Free Lie algebra on `rank` generators over Q with the classical Hall
// family (generator order e_1 < e_2 < ...; within a degree, construction
// order).  All tables are built in the constructor and immutable afterwards.
// Brackets are supported up to `table_degree` (default: max_degree); pass a
// smaller value when only bases and iota are needed at the top degrees.
class LieAlgebra {
 public:
  explicit LieAlgebra(int rank, int max_degree = 5, int table_degree = -1);

  int rank() const { return rank_; }
  int max_degree() const { return maxdeg_; }

  const std::vector<int>& hall_basis(int degree) const;  // global indices
  int dim(int degree) const { return int(hall_basis(degree).size()); }
  const HallWord& word(int idx) const { return words_[idx]; }
  // position of a word inside its degree's basis
  int position_in_degree(int idx) const { return pos_in_degree_[idx]; }
  std::string word_to_string(int idx) const;

  LieElement gen(int i) const;  // e_i, 0-based
  LieElement from_word(int idx) const;
  LieElement bracket(const LieElement& x, const LieElement& y) const;

  TensorElement iota(const LieElement& x) const;

  // matrix of the bracketing H (x) L_k -> L_{k+1}; columns indexed by
  // i * dim(L_k) + (position of the Hall word), rows by the L_{k+1} basis
  QMat bracketing_matrix(int k) const;

  // integer matrix of lambda_k : L_{k-1} -> Hom(H, L_k), b |-> (h |-> [b,h]),
  // rows indexed by i * dim(L_k) + position, columns by the L_{k-1} basis
  IMat lambda_integral_matrix(int k) const;

  static unsigned long witt_dimension(int rank, int degree);

  // re-validate the recursive Hall condition for a table entry
  bool is_hall(int idx) const;

 private:
  int rank_, maxdeg_, tabledeg_;
  std::vector<HallWord> words_;
  std::vector<std::vector<int>> by_degree_;  // degree (1-based) -> indices
  std::vector<int> pos_in_degree_;
  std::map<std::pair<int, int>, int> pair_index_;  // hall (left,right) -> word
  std::vector<TensorElement> iota_table_;
  // Brackets are normalized through the tensor algebra: iota is injective on
  // each graded piece, so a bracket's Hall coordinates are recovered by
  // inverting iota on a pivot-row square submatrix, one per degree.
  std::vector<std::vector<std::vector<int>>> extract_rows_;
  std::vector<QMat> extract_inv_;
};

}  // namespace metanil
