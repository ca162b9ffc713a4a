#pragma once

#include <string>
#include <vector>

#include "metanil/freelie.hpp"
#include "metanil/nilspace.hpp"

namespace metanil {

// Mal'cev (exponential) coordinates on N_2 (x) Z_(p): (a, v) with
// a in Lambda^2 H, v in H.
struct N2Element {
  QVec a;  // wedge coordinates
  QVec v;  // H coordinates
};

// Coordinates on N_3 (x) Z_(p): (alpha, a, v) with alpha in t-coordinates.
struct N3Element {
  QVec alpha;
  QVec a;
  QVec v;
};

N2Element n2_identity(const NilSpace& s);
N3Element n3_identity(const NilSpace& s);
bool n2_equal(const N2Element& x, const N2Element& y);
bool n3_equal(const N3Element& x, const N3Element& y);

// (a,v) . (b,w) = (1/2 v^w + a + b, v + w).  Requires p != 2.
N2Element n2_mul(const NilSpace& s, const N2Element& x, const N2Element& y);
N2Element n2_inverse(const NilSpace& s, const N2Element& x);

// The displayed degree-3 law; requires p not in {2, 3}.
N3Element n3_mul(const NilSpace& s, const N3Element& x, const N3Element& y);
N3Element n3_inverse(const NilSpace& s, const N3Element& x);
N2Element n3_project(const N3Element& x);  // drop the t-part

// validate that the locality admits the law's denominators
void require_n2_locality(const NilSpace& s);
void require_n3_locality(const NilSpace& s);

// ---------------------------------------------------------------------------
// free group words
// ---------------------------------------------------------------------------
struct GroupWord {
  // (generator index 1..2g, exponent +-1)
  std::vector<std::pair<int, int>> letters;
};

// whitespace-separated tokens `x3` / `x3^-1` (an integer exponent is
// accepted and expanded); rejects indices outside 1..rank
GroupWord parse_word(const std::string& text, int rank);
std::string word_to_string(const GroupWord& w);
GroupWord word_concat(const GroupWord& u, const GroupWord& v);
GroupWord word_inverse(const GroupWord& u);
GroupWord word_commutator(const GroupWord& u, const GroupWord& v);

// multiplicative evaluation under x_i |-> (0, e_i) resp. (0, 0, e_i)
N2Element word_to_n2(const NilSpace& s, const GroupWord& w);
N3Element word_to_n3(const NilSpace& s, const GroupWord& w);

// exponent-sum vector (the level-1 image)
QVec word_abelianization(const GroupWord& w, int rank);

// ---------------------------------------------------------------------------
// truncated Magnus expansion (brute-force oracle)
// ---------------------------------------------------------------------------
// degrees 0..k of the image of w under x_i |-> 1 + e_i in the truncated
// tensor algebra; index d of the result is the degree-d component
std::vector<TensorElement> magnus_expand(const GroupWord& w, int rank, int truncation);
bool magnus_equal(const std::vector<TensorElement>& a, const std::vector<TensorElement>& b);

}  // namespace metanil
