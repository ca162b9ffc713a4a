#pragma once

#include "metanil/freelie.hpp"

namespace metanil {

// Element of the cyclic quotient C_{2g}(k): keys are the lexicographically
// minimal rotations of their orbit.
struct CyclicWord {
  int degree = 0;
  std::map<std::vector<int>, Rat> coords;
  bool is_zero() const { return coords.empty(); }
};

// Element of S^k H: monomials as sorted generator-index words.
struct SymTensor {
  int degree = 0;
  std::map<std::vector<int>, Rat> coords;
  bool is_zero() const { return coords.empty(); }
};

bool operator==(const CyclicWord& a, const CyclicWord& b);
bool operator==(const SymTensor& a, const SymTensor& b);

// contraction with respect to the first component:
// x_i^* (x) x_{j_1} (x) ... |-> delta_{i, j_1} . x_{j_2} (x) ...
// the input is given as its dual components (slot i = coefficient of e_i^*)
TensorElement contract_first(const std::vector<TensorElement>& dual_components);

CyclicWord cyclic_project(const TensorElement& x);
SymTensor abelianize(const CyclicWord& x);

// f : H -> L_{k+1} given as a dim(L_{k+1}) x 2g matrix in Hall coordinates.
// Tr^ES_k = cyclic projection . contraction . (id (x) iota_{k+1}); k >= 2.
CyclicWord es_trace(const LieAlgebra& lie, int k, const QMat& f);
SymTensor morita_trace(const LieAlgebra& lie, int k, const QMat& f);

// hom represented by b |-> [b, .] for tests: matrix of lambda(b)
QMat hom_matrix_of_lambda(const LieAlgebra& lie, int k, int hall_word_idx);

}  // namespace metanil
