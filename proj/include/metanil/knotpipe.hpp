#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metanil/autnil.hpp"
#include "metanil/exact.hpp"
#include "metanil/nilgrp.hpp"
#include "metanil/spclass.hpp"
#include "metanil/traces.hpp"

namespace metanil {

struct FiberedInput {
  int rank = 0;                  // 2g
  std::vector<GroupWord> images;  // image of x_1..x_{2g}
};

struct KnotInput {
  std::string name;
  std::optional<IMat> seifert;         // square, even size, det(A - A^T) = +-1
  std::optional<FiberedInput> fibered;
};

// throws std::invalid_argument when the input invariants fail
void validate(const KnotInput& k);

// reciprocal_normalize(det(A - t A^T)); input invariants checked
Poly alexander(const IMat& seifert);

bool admissible(const Locality& p, const Poly& delta);

// Deck-transformation action on the localized first homology of the infinite
// cyclic cover, conjugated into Sp(2g; Z_(p)) by exact symplectic
// Gram-Schmidt against S = A - A^T.  Throws on inadmissible locality.
struct Level1 {
  QMat tau;           // in Sp(2g) w.r.t. the standard block form J
  QMat basis_change;  // P with P^T S P = J
  QMat tau_raw;       // A^{-1} A^T, preserves S
};
Level1 level1_monodromy(const IMat& seifert, const Locality& p);

// Extract (F, f, A) of the automorphism of N_3 (x) Z_(p) induced by the
// generator images; throws when the level-1 matrix is singular over Z_(p).
AutN3 fibered_monodromy_k3(const NilSpace& s, const FiberedInput& input);

struct Psi2Report {
  int v_dim = 0;
  int quotient_dim = 0;
  std::vector<std::string> subgroup;
  QVec class_vector;
};

struct InvariantReport {
  int schema_version = 1;
  std::string name;
  unsigned long locality = 0;
  std::string input_kind;  // "seifert" | "fibered"
  Poly alexander;
  bool admissible = true;
  std::optional<QMat> level1;       // identity when inadmissible
  std::optional<QMat> level1_raw;   // pre-basis-change matrix (Seifert input)
  std::string convention;           // monodromy convention tag
  Poly eigen_polynomial;
  bool symmetric = false;
  std::optional<SgnValue> sgn_value;         // g = 1 and decomposable only
  std::string sgn_note;
  bool genericity = false;
  std::vector<int> h1_dims;                  // Q_1, Q_2 quotient dimensions
  std::optional<Psi2Report> psi2;            // fibered only
  std::optional<AutN3> level3;               // Out-representative, fibered only
  std::optional<bool> boundary_fixed;        // fibered only
  std::optional<SymTensor> es_trace_k2;      // trace of the F-part, fibered only
};

struct ReportOptions {
  std::vector<QMat> extra_centralizer_gens;
};

InvariantReport report(const KnotInput& input, const Locality& p,
                       const ReportOptions& options = {});

// ---------------------------------------------------------------------------
// file formats (UTF-8 JSON)
// ---------------------------------------------------------------------------
struct InputFile {
  unsigned long locality = 0;
  std::vector<KnotInput> knots;
};

InputFile parse_input_file(const std::string& json_text);
std::string report_to_json(const InvariantReport& r);
std::string reports_to_json(const std::vector<InvariantReport>& rs);
std::string report_to_text(const InvariantReport& r);

// extra centralizer generators: JSON array of rational matrices
std::vector<QMat> parse_matrix_list(const std::string& json_text);

}  // namespace metanil
