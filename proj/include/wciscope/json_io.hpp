#pragma once

// JSON layer: the descriptor file schema
//   {"weights":[...], "degrees":[...], "equations":[[num,den,e0,...,eN],...]?}
// and report serialization with stable key names. Everything is integers or
// exact rational strings; term lists are emitted in graded-lexicographic
// order (weighted degree, then exponent lex) so output is diffable.

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "wciscope/aut.hpp"
#include "wciscope/lab.hpp"
#include "wciscope/qs.hpp"
#include "wciscope/search.hpp"
#include "wciscope/wci.hpp"
#include "wciscope/wps.hpp"

namespace wciscope {

using Json = nlohmann::ordered_json;

namespace detail {

inline long long int64_from(const Int& v) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max()) {
    throw std::overflow_error("coefficient does not fit the 64-bit JSON schema");
  }
  return static_cast<long long>(v);
}

}  // namespace detail

inline std::string rational_to_string(const Rational& v) { return v.str(); }

inline Json polynomial_to_json(const Polynomial<Rational>& f, const Weights& w) {
  struct Row {
    long long deg;
    const Monomial* m;
    const Rational* c;
  };
  std::vector<Row> rows;
  rows.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) rows.push_back({weighted_degree(m, w), &m, &c});
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.deg != b.deg ? a.deg < b.deg : *a.m < *b.m;
  });
  Json terms = Json::array();
  for (const Row& r : rows) {
    Json term = Json::array();
    term.push_back(detail::int64_from(numerator(*r.c)));
    term.push_back(detail::int64_from(denominator(*r.c)));
    for (unsigned e : r.m->exponents()) term.push_back(e);
    terms.push_back(std::move(term));
  }
  return terms;
}

inline Polynomial<Rational> polynomial_from_json(const Json& terms, std::size_t nvars) {
  if (!terms.is_array()) throw std::invalid_argument("polynomial must be an array of term arrays");
  Polynomial<Rational> f(nvars);
  for (const Json& term : terms) {
    if (!term.is_array() || term.size() != nvars + 2) {
      throw std::invalid_argument("each term must be [num, den, e0, ..., eN]");
    }
    long long num = term[0].get<long long>();
    long long den = term[1].get<long long>();
    if (den == 0) throw std::invalid_argument("zero denominator in a term");
    std::vector<unsigned> e;
    e.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
      long long exp = term[i + 2].get<long long>();
      if (exp < 0) throw std::invalid_argument("negative exponent in a term");
      e.push_back(static_cast<unsigned>(exp));
    }
    f.add_term(Monomial(std::move(e)), make_rational(num, den));
  }
  return f;
}

inline Json descriptor_to_json(const WCIDescriptor& X) {
  Json j;
  j["weights"] = X.weights().values();
  j["degrees"] = X.multidegree();
  return j;
}

inline Json explicit_wci_to_json(const ExplicitWCI& X) {
  Json j = descriptor_to_json(X.descriptor());
  Json eqs = Json::array();
  for (const auto& f : X.equations()) eqs.push_back(polynomial_to_json(f, X.descriptor().weights()));
  j["equations"] = std::move(eqs);
  return j;
}

struct DescriptorFile {
  WCIDescriptor descriptor;
  std::vector<Polynomial<Rational>> equations;  // empty in descriptor-only mode
};

inline DescriptorFile descriptor_from_json(const Json& j) {
  if (!j.contains("weights") || !j.contains("degrees")) {
    throw std::invalid_argument("descriptor needs \"weights\" and \"degrees\"");
  }
  std::vector<long long> w = j.at("weights").get<std::vector<long long>>();
  std::vector<long long> d = j.at("degrees").get<std::vector<long long>>();
  bool has_equations = j.contains("equations");
  if (has_equations && !std::is_sorted(w.begin(), w.end())) {
    // Weights are stored sorted; re-sorting would silently permute the
    // variables the equation exponents refer to.
    throw std::invalid_argument("descriptors with equations must list weights in ascending order");
  }
  WCIDescriptor descriptor(WeightedProjectiveSpace{Weights(std::move(w))}, std::move(d));
  std::vector<Polynomial<Rational>> eqs;
  if (has_equations) {
    for (const Json& e : j.at("equations")) {
      eqs.push_back(polynomial_from_json(e, descriptor.ambient().coord_count()));
    }
  }
  return {std::move(descriptor), std::move(eqs)};
}

inline Json stratum_to_json(const SingularStratum& s) {
  Json j;
  j["indices"] = s.indices;
  j["gcd"] = s.gcd;
  j["dim"] = s.dim;
  return j;
}

inline Json wps_report_json(const WeightedProjectiveSpace& P, long long graded_up_to) {
  Json j;
  j["weights"] = P.weights().values();
  bool wf = is_well_formed(P);
  j["well_formed"] = wf;
  if (wf) {
    Json strata = Json::array();
    for (const auto& s : singular_strata(P)) strata.push_back(stratum_to_json(s));
    j["singular_strata"] = std::move(strata);
    j["picard_generator"] = picard_generator(P);
  } else {
    j["singular_strata"] = nullptr;
    j["picard_generator"] = nullptr;
  }
  j["graded_dims"] = hilbert_series(P, graded_up_to);
  return j;
}

inline const char* to_string(VarietyKind k) {
  switch (k) {
    case VarietyKind::Fano: return "Fano";
    case VarietyKind::CalabiYau: return "CalabiYau";
    case VarietyKind::GeneralType: return "GeneralType";
  }
  return "?";
}

inline Json classification_to_json(const ClassificationReport& r) {
  Json j;
  j["index"] = r.index;
  j["kind"] = to_string(r.kind);
  j["canonical_sheaf_exponent"] = r.canonical_sheaf_exponent;
  j["dim"] = r.dim;
  j["rationally_connected"] = r.rationally_connected;
  j["not_uniruled"] = r.not_uniruled == Knowledge::True ? "true" : "unknown";
  j["class_group_note"] = r.class_group_note;
  j["cy_stabilizer_note"] = r.cy_stabilizer_note;
  return j;
}

inline Json generic_wellformedness_to_json(const GenericWellFormedness& g) {
  Json j;
  switch (g.status) {
    case GenericWellFormedness::Status::WellFormed: j["status"] = "well_formed"; break;
    case GenericWellFormedness::Status::Fails: j["status"] = "fails"; break;
    case GenericWellFormedness::Status::Indeterminate: j["status"] = "indeterminate"; break;
  }
  j["failing_stratum"] = g.failing ? stratum_to_json(*g.failing) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& c : g.checks) {
    Json row = stratum_to_json(c.stratum);
    row["cutting_degrees"] = c.cutting_degrees;
    row["estimated_dim"] = c.estimated_dim;
    row["violates"] = c.violates;
    row["at_boundary"] = c.at_boundary;
    checks.push_back(std::move(row));
  }
  j["checks"] = std::move(checks);
  return j;
}

inline Json restriction_report_to_json(const RestrictionReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["m"] = row.m;
    x["dim_ambient"] = row.dim_ambient;
    x["dim_x"] = row.dim_x;
    x["kernel"] = row.kernel;
    rows.push_back(std::move(x));
  }
  Json j;
  j["linear_cone_caveat"] = r.linear_cone_caveat;
  j["rows"] = std::move(rows);
  return j;
}

inline Json aut_structure_to_json(const WeightedProjectiveSpace& P, const AutPStructure& s) {
  Json groups = Json::array();
  for (std::size_t i = 0; i < P.weight_groups().size(); ++i) {
    Json g;
    g["weight"] = P.weight_groups()[i].weight;
    g["multiplicity"] = P.weight_groups()[i].multiplicity;
    g["phi_dim"] = s.per_weight_phi_dims[i];
    groups.push_back(std::move(g));
  }
  Json j;
  j["weights"] = P.weights().values();
  j["weight_groups"] = std::move(groups);
  j["unipotent_dim"] = s.unipotent_dim;
  j["reductive_factors"] = s.reductive_factors;
  j["reductive_dim"] = s.reductive_dim;
  j["total_dim"] = s.total_dim;
  return j;
}

inline Json polynomial_map_to_json(const PolynomialMap& sigma, const Weights& w) {
  Json images = Json::array();
  for (const auto& f : sigma.images()) images.push_back(polynomial_to_json(f, w));
  Json j;
  j["weights"] = w.values();
  j["images"] = std::move(images);
  return j;
}

inline Json qs_verdict_to_json(const QsVerdict& v) {
  Json j;
  j["status"] = v.status == QsVerdict::Status::SingularConePointFound ? "singular_cone_point_found"
                                                                      : "no_singular_point_found";
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) {
    Json x;
    x["prime"] = w.prime;
    x["point"] = w.point;
    witnesses.push_back(std::move(x));
  }
  j["witnesses"] = std::move(witnesses);
  Json primes = Json::array();
  for (const auto& s : v.primes) {
    Json x;
    x["prime"] = s.prime;
    x["mode"] = s.exhaustive ? "exhaustive" : "sampled";
    x["points_checked"] = s.points_checked;
    primes.push_back(std::move(x));
  }
  j["primes"] = std::move(primes);
  j["samples"] = v.samples;
  return j;
}

inline Json cone_probe_to_json(const ConeDimensionProbe& p) {
  Json j;
  j["prime"] = p.prime;
  j["point_count"] = p.point_count;
  j["estimated_codim"] = p.estimated_codim;
  j["expected_codim"] = p.expected_codim;
  j["matches_expected"] = p.matches_expected;
  return j;
}

inline Json nodal_report_to_json(const NodalCurveSurfaceReport& r) {
  Json j;
  j["d"] = r.d;
  j["m"] = r.m;
  j["ctilde_sq"] = r.ctilde_sq;
  j["alpha"] = rational_to_string(r.alpha);
  j["li_dot_l"] = rational_to_string(r.li_dot_l);
  j["k_coeff"] = rational_to_string(r.k_coeff);
  j["ctilde_negative"] = r.ctilde_negative;
  j["k_effective"] = r.k_effective;
  return j;
}

inline Json search_hit_to_json(const SearchHit& h) {
  Json j = descriptor_to_json(h.descriptor);
  j["classification"] = classification_to_json(h.classification);
  if (h.probe) {
    j["qs_probe"] = qs_verdict_to_json(*h.probe);
  } else if (h.probe_skipped) {
    j["qs_probe"] = Json{{"skipped", "no nonzero member of this multidegree"}};
  }
  return j;
}

}  // namespace wciscope
