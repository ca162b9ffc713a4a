#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "metanil/knotpipe.hpp"

using namespace metanil;

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitInadmissible = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  std::string input_path;
  unsigned long locality = 0;
  bool locality_set = false;
  std::string format = "json";
  std::string gens_path;
  unsigned long long seed = 12345;
  bool experimental_level3 = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_gens = false) {
  cmd->add_option("--input", c.input_path, "input JSON file")->required();
  auto* loc = cmd->add_option("--locality", c.locality, "0 (rationals) or a prime");
  cmd->add_option("--format", c.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--seed", c.seed, "seed for randomized self-checks");
  if (with_gens)
    cmd->add_option("--extra-centralizer-gens", c.gens_path,
                    "JSON array of matrices centralizing the level-1 part");
  cmd->parse_complete_callback([loc, &c] { c.locality_set = loc->count() > 0; });
}

Locality effective_locality(const Common& c, const InputFile& f) {
  return Locality(c.locality_set ? c.locality : f.locality);
}

// the level-1 matrix of either input flavor; throws on inadmissibility.
// Fibered level-1 data only needs the abelianization, so it works at any p.
QMat level1_of(const KnotInput& k, const Locality& p) {
  if (k.seifert) return level1_monodromy(*k.seifert, p).tau;
  int n = k.fibered->rank;
  QMat a(n, n);
  for (int i = 0; i < n; ++i) {
    QVec col = word_abelianization(k.fibered->images[i], n);
    for (int r = 0; r < n; ++r) a(r, i) = col[r];
  }
  Poly delta = reciprocal_normalize(char_poly(a)).poly;
  if (!admissible(p, delta)) throw std::domain_error("inadmissible locality");
  if (!is_p_unit(det(a), p))
    throw std::domain_error("level-1 matrix is singular over Z_(p)");
  return a;
}

int run_alexander(const Common& c) {
  InputFile f = parse_input_file(slurp(c.input_path));
  Locality p = effective_locality(c, f);
  nlohmann::json out = nlohmann::json::array();
  for (const KnotInput& k : f.knots) {
    Poly delta = k.seifert ? alexander(*k.seifert)
                           : reciprocal_normalize(char_poly(level1_of(k, Locality()))).poly;
    if (c.format == "text") {
      std::cout << k.name << ": " << poly_to_string(delta)
                << (admissible(p, delta) ? "" : "  [inadmissible at p]") << "\n";
    } else {
      nlohmann::json j;
      j["name"] = k.name;
      nlohmann::json coeffs = nlohmann::json::array();
      for (const Rat& x : delta.c) coeffs.push_back(rat_to_string(x));
      j["alexander"] = coeffs;
      j["admissible"] = admissible(p, delta);
      out.push_back(j);
    }
  }
  if (c.format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

int run_monodromy(const Common& c) {
  InputFile f = parse_input_file(slurp(c.input_path));
  Locality p = effective_locality(c, f);
  nlohmann::json out = nlohmann::json::array();
  for (const KnotInput& k : f.knots) {
    QMat tau = level1_of(k, p);
    ReciprocalNormal eig = reciprocal_normalize(char_poly(tau));
    if (c.format == "text") {
      std::cout << k.name << ":\n";
      for (int i = 0; i < tau.rows(); ++i) {
        std::cout << "  [";
        for (int j = 0; j < tau.cols(); ++j)
          std::cout << (j ? " " : "") << rat_to_string(tau(i, j));
        std::cout << "]\n";
      }
      std::cout << "  char poly: " << poly_to_string(eig.poly)
                << (eig.symmetric ? " (reciprocal)" : "") << "\n";
    } else {
      nlohmann::json j;
      j["name"] = k.name;
      nlohmann::json rows = nlohmann::json::array();
      for (int i = 0; i < tau.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jj = 0; jj < tau.cols(); ++jj) row.push_back(rat_to_string(tau(i, jj)));
        rows.push_back(row);
      }
      j["tau"] = rows;
      nlohmann::json coeffs = nlohmann::json::array();
      for (const Rat& x : eig.poly.c) coeffs.push_back(rat_to_string(x));
      j["char_poly"] = coeffs;
      j["symmetric"] = eig.symmetric;
      out.push_back(j);
    }
  }
  if (c.format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

int run_sgn(const Common& c) {
  InputFile f = parse_input_file(slurp(c.input_path));
  Locality p = effective_locality(c, f);
  nlohmann::json out = nlohmann::json::array();
  for (const KnotInput& k : f.knots) {
    QMat tau = level1_of(k, p);
    nlohmann::json j;
    j["name"] = k.name;
    if (tau.rows() != 2) {
      j["sgn"] = nullptr;
      j["note"] = "sgn is defined for g = 1 only";
    } else {
      try {
        SgnValue s = sgn(tau);
        nlohmann::json sj;
        sj["kind"] = s.kind == SgnValue::Kind::Full ? "full" : "class";
        if (s.kind == SgnValue::Kind::Class) {
          sj["d"] = s.d.get_str();
          sj["c"] = s.c.get_str();
        }
        j["sgn"] = sj;
      } catch (const std::domain_error& e) {
        j["sgn"] = nullptr;
        j["note"] = e.what();
      }
    }
    if (c.format == "text") {
      std::cout << k.name << ": "
                << (j["sgn"].is_null() ? j["note"].get<std::string>()
                                       : j["sgn"].dump())
                << "\n";
    } else {
      out.push_back(j);
    }
  }
  if (c.format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

int run_psi2(const Common& c) {
  InputFile f = parse_input_file(slurp(c.input_path));
  Locality p = effective_locality(c, f);
  std::vector<QMat> gens;
  if (!c.gens_path.empty()) gens = parse_matrix_list(slurp(c.gens_path));
  std::mt19937_64 rng(c.seed);
  nlohmann::json out = nlohmann::json::array();
  for (const KnotInput& k : f.knots) {
    nlohmann::json j;
    j["name"] = k.name;
    if (!k.fibered) {
      j["psi2"] = nullptr;
      j["note"] = "psi2 needs level-2 data (fibered input)";
      out.push_back(j);
      continue;
    }
    NilSpace space(k.fibered->rank / 2, p);
    AutN3 phi3 = fibered_monodromy_k3(space, *k.fibered);
    AutN2 phi = out_representative_k2(space, autn3_project(phi3));
    if (!space.is_symplectic(phi.A)) {
      j["psi2"] = nullptr;
      j["note"] = "level-1 part is not symplectic";
      out.push_back(j);
      continue;
    }
    std::vector<QMat> fitting;  // only generators of the matching size apply
    for (const QMat& gmat : gens)
      if (gmat.rows() == space.n() && gmat.cols() == space.n()) fitting.push_back(gmat);
    Psi2Result r = psi2_invariant(space, phi, fitting);
    // randomized invariance spot-check: conjugate by inner shifts and gens
    int trials = 10;
    bool ok = true;
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int t = 0; t < trials && ok; ++t) {
      N2Element w = n2_identity(space);
      for (int i = 0; i < space.n(); ++i) w.v[i] = coeff(rng);
      AutN2 inner = inner_autn2(space, w);
      AutN2 conj = autn2_compose(space, autn2_inverse(space, inner),
                                 autn2_compose(space, autn3_project(phi3), inner));
      Psi2Result r2 = psi2_invariant(space, out_representative_k2(space, conj), fitting);
      ok = (r2.class_vector == r.class_vector) && (r2.quotient_dim == r.quotient_dim);
    }
    nlohmann::json pj;
    pj["v_dim"] = r.v_dim;
    pj["quotient_dim"] = r.quotient_dim;
    pj["subgroup"] = r.subgroup;
    nlohmann::json cv = nlohmann::json::array();
    for (const Rat& x : r.class_vector) cv.push_back(rat_to_string(x));
    pj["class_vector"] = cv;
    pj["conjugation_invariance_checked"] = ok;
    j["psi2"] = pj;
    out.push_back(j);
    if (!ok) {
      std::cerr << "internal error: psi2 invariance spot-check failed for " << k.name << "\n";
      return 1;
    }
  }
  if (c.format == "text") {
    for (const auto& j : out)
      std::cout << j["name"].get<std::string>() << ": "
                << (j.contains("note") ? j["note"].dump() : j["psi2"].dump()) << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int run_es_trace(const Common& c) {
  InputFile f = parse_input_file(slurp(c.input_path));
  Locality p = effective_locality(c, f);
  nlohmann::json out = nlohmann::json::array();
  for (const KnotInput& k : f.knots) {
    ReportOptions opt;
    InvariantReport r = report(k, p, opt);
    nlohmann::json j;
    j["name"] = k.name;
    if (r.es_trace_k2) {
      nlohmann::json t = nlohmann::json::object();
      for (const auto& [w, coeff] : r.es_trace_k2->coords) {
        std::string key;
        for (size_t i = 0; i < w.size(); ++i)
          key += (i ? "*" : "") + ("e" + std::to_string(w[i] + 1));
        t[key] = rat_to_string(coeff);
      }
      j["es_trace_k2"] = t;
    } else {
      j["es_trace_k2"] = nullptr;
      j["note"] = "trace data needs fibered input and p outside {2,3}";
    }
    out.push_back(j);
  }
  if (c.format == "text") {
    for (const auto& j : out)
      std::cout << j["name"].get<std::string>() << ": " << j["es_trace_k2"].dump() << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int run_h1(const Common& c) {
  InputFile f = parse_input_file(slurp(c.input_path));
  Locality p = effective_locality(c, f);
  nlohmann::json out = nlohmann::json::array();
  for (const KnotInput& k : f.knots) {
    QMat tau = level1_of(k, p);
    NilSpace space(tau.rows() / 2, p);
    std::optional<AutN3> phi3;
    std::optional<AutN2> l2;
    if (k.fibered && p.p != 2 && p.p != 3) {
      phi3 = fibered_monodromy_k3(space, *k.fibered);
      l2 = autn3_project(*phi3);
    }
    H1Result h = h1_cyclic(space, tau, l2, 2);
    nlohmann::json j;
    j["name"] = k.name;
    j["q1_dim"] = h.levels[0].quotient_dim;
    j["q2_dim"] = h.levels[1].quotient_dim;
    j["ybar_relations_used"] = h.ybar_relations_used;
    if (c.experimental_level3) {
      if (phi3) {
        CoinvariantSpace q3 = h1_level3_experimental(space, *phi3);
        j["q3_dim_experimental"] = q3.quotient_dim;
      } else {
        j["q3_dim_experimental"] = nullptr;
        j["q3_note"] = "level 3 needs fibered input and p outside {2,3}";
      }
    }
    out.push_back(j);
  }
  if (c.format == "text") {
    for (const auto& j : out)
      std::cout << j["name"].get<std::string>() << ": Q1=" << j["q1_dim"]
                << " Q2=" << j["q2_dim"] << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int run_report(const Common& c) {
  InputFile f = parse_input_file(slurp(c.input_path));
  Locality p = effective_locality(c, f);
  ReportOptions opt;
  if (!c.gens_path.empty()) opt.extra_centralizer_gens = parse_matrix_list(slurp(c.gens_path));
  std::vector<InvariantReport> rs;
  for (const KnotInput& k : f.knots) rs.push_back(report(k, p, opt));
  if (c.format == "text") {
    for (const auto& r : rs) std::cout << report_to_text(r);
  } else {
    std::cout << reports_to_json(rs) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"meta-nilpotent knot invariants over Z_(p)"};
  app.require_subcommand(1);

  Common c;
  auto* alex = app.add_subcommand("alexander", "Alexander polynomial from Seifert matrices");
  add_common(alex, c);
  auto* mono = app.add_subcommand("monodromy", "level-1 symplectic monodromy");
  add_common(mono, c);
  auto* sg = app.add_subcommand("sgn", "sgn conjugacy invariant (g = 1)");
  add_common(sg, c);
  auto* psi = app.add_subcommand("psi2", "level-2 coinvariant class function");
  add_common(psi, c, true);
  auto* es = app.add_subcommand("es-trace", "trace of the level-3 part (fibered input)");
  add_common(es, c);
  auto* h1 = app.add_subcommand("h1", "H^1(Z; -) coinvariant dimensions");
  add_common(h1, c);
  h1->add_flag("--experimental-level3", c.experimental_level3,
               "also compute the level-3 coinvariant (normalization not settled)");
  auto* rep = app.add_subcommand("report", "full invariant report");
  add_common(rep, c, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (alex->parsed()) return run_alexander(c);
    if (mono->parsed()) return run_monodromy(c);
    if (sg->parsed()) return run_sgn(c);
    if (psi->parsed()) return run_psi2(c);
    if (es->parsed()) return run_es_trace(c);
    if (h1->parsed()) return run_h1(c);
    if (rep->parsed()) return run_report(c);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    return msg.find("inadmissible") != std::string::npos ? kExitInadmissible
                                                         : kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
