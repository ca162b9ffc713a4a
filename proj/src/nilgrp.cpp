#include "metanil/nilgrp.hpp"

#include <sstream>

namespace metanil {

N2Element n2_identity(const NilSpace& s) {
  return N2Element{QVec(s.wedge_dim(), Rat(0)), QVec(s.n(), Rat(0))};
}

N3Element n3_identity(const NilSpace& s) {
  return N3Element{QVec(s.t_dim(), Rat(0)), QVec(s.wedge_dim(), Rat(0)), QVec(s.n(), Rat(0))};
}

bool n2_equal(const N2Element& x, const N2Element& y) { return x.a == y.a && x.v == y.v; }

bool n3_equal(const N3Element& x, const N3Element& y) {
  return x.alpha == y.alpha && x.a == y.a && x.v == y.v;
}

void require_n2_locality(const NilSpace& s) {
  if (s.locality().p == 2) throw std::domain_error("N_2 law needs 2 invertible (p != 2)");
}

void require_n3_locality(const NilSpace& s) {
  unsigned long p = s.locality().p;
  if (p == 2 || p == 3)
    throw std::domain_error("N_3 law needs 2 and 3 invertible (p not in {2,3})");
}

N2Element n2_mul(const NilSpace& s, const N2Element& x, const N2Element& y) {
  require_n2_locality(s);
  if (x.v.size() != y.v.size()) throw std::invalid_argument("rank mismatch");
  N2Element r;
  r.v = x.v + y.v;
  r.a = Rat(1, 2) * s.wedge(x.v, y.v) + x.a + y.a;
  return r;
}

N2Element n2_inverse(const NilSpace& s, const N2Element& x) {
  require_n2_locality(s);
  return N2Element{Rat(-1) * x.a, Rat(-1) * x.v};
}

N3Element n3_mul(const NilSpace& s, const N3Element& x, const N3Element& y) {
  require_n3_locality(s);
  if (x.v.size() != y.v.size()) throw std::invalid_argument("rank mismatch");
  const Rat half(1, 2), twelfth(1, 12);
  N3Element r;
  r.v = x.v + y.v;
  r.a = x.a + y.a + half * s.wedge(x.v, y.v);
  r.alpha = x.alpha + y.alpha + half * s.nu(x.v, y.a) - half * s.nu(y.v, x.a) +
            twelfth * s.nu(x.v, s.wedge(x.v, y.v)) + twelfth * s.nu(y.v, s.wedge(y.v, x.v));
  return r;
}

N3Element n3_inverse(const NilSpace& s, const N3Element& x) {
  require_n3_locality(s);
  // exponential coordinates: the inverse is coordinate negation
  return N3Element{Rat(-1) * x.alpha, Rat(-1) * x.a, Rat(-1) * x.v};
}

N2Element n3_project(const N3Element& x) { return N2Element{x.a, x.v}; }

// ---------------------------------------------------------------------------

GroupWord parse_word(const std::string& text, int rank) {
  auto parse_int = [](const std::string& body, const std::string& tok) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(body, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad word token: " + tok);
    }
    if (used != body.size() || body.empty())
      throw std::invalid_argument("bad word token: " + tok);
    return value;
  };
  GroupWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] != 'x') throw std::invalid_argument("bad word token: " + tok);
    size_t caret = tok.find('^');
    int idx = parse_int(tok.substr(1, caret == std::string::npos ? caret : caret - 1), tok);
    int exp = caret == std::string::npos ? 1 : parse_int(tok.substr(caret + 1), tok);
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("generator index out of range: " + tok);
    if (exp == 0) throw std::invalid_argument("zero exponent: " + tok);
    int sgn = exp > 0 ? 1 : -1;
    for (int i = 0; i < (exp > 0 ? exp : -exp); ++i) w.letters.emplace_back(idx, sgn);
  }
  return w;
}

std::string word_to_string(const GroupWord& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, e] : w.letters) {
    if (!first) out << ' ';
    out << 'x' << g;
    if (e < 0) out << "^-1";
    first = false;
  }
  return out.str();
}

GroupWord word_concat(const GroupWord& u, const GroupWord& v) {
  GroupWord w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

GroupWord word_inverse(const GroupWord& u) {
  GroupWord w;
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
    w.letters.emplace_back(it->first, -it->second);
  return w;
}

GroupWord word_commutator(const GroupWord& u, const GroupWord& v) {
  return word_concat(word_concat(u, v), word_concat(word_inverse(u), word_inverse(v)));
}

N2Element word_to_n2(const NilSpace& s, const GroupWord& w) {
  N2Element acc = n2_identity(s);
  for (const auto& [g, e] : w.letters) {
    if (g < 1 || g > s.n()) throw std::invalid_argument("generator index out of range");
    if (e != 1 && e != -1) throw std::invalid_argument("letter exponents must be +-1");
    N2Element x = n2_identity(s);
    x.v[g - 1] = e;
    acc = n2_mul(s, acc, x);
  }
  return acc;
}

N3Element word_to_n3(const NilSpace& s, const GroupWord& w) {
  N3Element acc = n3_identity(s);
  for (const auto& [g, e] : w.letters) {
    if (g < 1 || g > s.n()) throw std::invalid_argument("generator index out of range");
    if (e != 1 && e != -1) throw std::invalid_argument("letter exponents must be +-1");
    N3Element x = n3_identity(s);
    x.v[g - 1] = e;
    acc = n3_mul(s, acc, x);
  }
  return acc;
}

QVec word_abelianization(const GroupWord& w, int rank) {
  QVec v(rank, Rat(0));
  for (const auto& [g, e] : w.letters) v[g - 1] += e;
  return v;
}

// ---------------------------------------------------------------------------

namespace {

// multiply truncated series in place: acc <- acc * other
void series_mul(std::vector<TensorElement>& acc, const std::vector<TensorElement>& other) {
  int k = int(acc.size()) - 1;
  std::vector<TensorElement> out(k + 1);
  for (int d = 0; d <= k; ++d) out[d].degree = d;
  for (int d1 = 0; d1 <= k; ++d1) {
    if (acc[d1].is_zero() && d1 > 0) continue;
    for (int d2 = 0; d1 + d2 <= k; ++d2) {
      if (other[d2].is_zero() && d2 > 0) continue;
      if (d1 == 0 && d2 == 0) {
        // scalar part: coefficient of the empty word
        TensorElement prod;
        prod.degree = 0;
        Rat c1 = acc[0].coords.count({}) ? acc[0].coords.at({}) : Rat(0);
        Rat c2 = other[0].coords.count({}) ? other[0].coords.at({}) : Rat(0);
        if (c1 * c2 != 0) prod.coords[{}] = c1 * c2;
        out[0] = out[0] + prod;
      } else if (d1 == 0) {
        Rat c1 = acc[0].coords.count({}) ? acc[0].coords.at({}) : Rat(0);
        out[d2] = out[d2] + c1 * other[d2];
      } else if (d2 == 0) {
        Rat c2 = other[0].coords.count({}) ? other[0].coords.at({}) : Rat(0);
        out[d1] = out[d1] + c2 * acc[d1];
      } else {
        out[d1 + d2] = out[d1 + d2] + tensor_mul(acc[d1], other[d2]);
      }
    }
  }
  acc = std::move(out);
}

}  // namespace

std::vector<TensorElement> magnus_expand(const GroupWord& w, int rank, int truncation) {
  std::vector<TensorElement> acc(truncation + 1);
  for (int d = 0; d <= truncation; ++d) acc[d].degree = d;
  acc[0].coords[{}] = 1;
  for (const auto& [g, e] : w.letters) {
    if (g < 1 || g > rank) throw std::invalid_argument("generator index out of range");
    if (e != 1 && e != -1) throw std::invalid_argument("letter exponents must be +-1");
    std::vector<TensorElement> f(truncation + 1);
    for (int d = 0; d <= truncation; ++d) f[d].degree = d;
    f[0].coords[{}] = 1;
    // x |-> 1 + e ; x^{-1} |-> 1 - e + e^2 - ... (truncated geometric series)
    for (int d = 1; d <= truncation; ++d) {
      std::vector<int> word(d, g - 1);
      f[d].coords[word] = (e > 0) ? Rat(d == 1 ? 1 : 0) : Rat((d % 2) ? -1 : 1);
    }
    if (e > 0) {
      // only the degree-1 term is present
      for (int d = 2; d <= truncation; ++d) f[d].coords.clear();
    }
    series_mul(acc, f);
  }
  return acc;
}

bool magnus_equal(const std::vector<TensorElement>& a, const std::vector<TensorElement>& b) {
  if (a.size() != b.size()) return false;
  for (size_t d = 0; d < a.size(); ++d)
    if (!(a[d] - b[d]).is_zero()) return false;
  return true;
}

}  // namespace metanil
