// wciscope: weighted projective spaces and weighted complete intersections
// from the command line. Subcommands: wps, classify, search, aut, qs, lab.
// Exit codes: 0 ok, 1 a verification failed, 2 invalid input.
// WCISCOPE_THREADS caps parallelism; output is canonical regardless.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <wciscope/wciscope.hpp>

namespace {

using wciscope::Json;

void emit(const Json& j, bool as_json) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

wciscope::WeightedProjectiveSpace space_from(const std::vector<long long>& weights) {
  return wciscope::WeightedProjectiveSpace{wciscope::Weights(weights)};
}

int run_wps(const std::vector<long long>& weights, long long up_to, bool as_json) {
  emit(wciscope::wps_report_json(space_from(weights), up_to), as_json);
  return 0;
}

int run_classify(const std::vector<long long>& weights, const std::vector<long long>& degrees, long long up_to,
                 bool strict, bool as_json) {
  wciscope::WCIDescriptor X(space_from(weights), degrees);
  Json j = wciscope::descriptor_to_json(X);
  j["classification"] = wciscope::classification_to_json(wciscope::classify(X));
  j["linear_cone"] = wciscope::is_linear_cone(X);
  j["generic_wellformedness"] = wciscope::generic_wellformedness_to_json(wciscope::generic_wellformedness(X, strict));
  if (up_to >= 0) {
    j["hilbert_series"] = wciscope::hilbert_series(X, up_to);
    j["restriction"] = wciscope::restriction_report_to_json(wciscope::restriction_surjectivity_report(X, up_to));
  }
  emit(j, as_json);
  return 0;
}

int run_aut(const std::vector<long long>& weights, bool as_json) {
  auto P = space_from(weights);
  emit(wciscope::aut_structure_to_json(P, wciscope::aut_structure(P)), as_json);
  return 0;
}

int run_qs(const std::string& path, std::vector<std::uint64_t> primes, long long budget, std::uint64_t seed,
           bool as_json) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j = Json::parse(in);
  wciscope::DescriptorFile file = wciscope::descriptor_from_json(j);
  if (file.equations.empty()) {
    throw std::invalid_argument("qs needs a descriptor with equations; " + path + " is descriptor-only");
  }
  wciscope::ExplicitWCI X(file.descriptor, file.equations);
  if (primes.empty()) primes = wciscope::default_qs_primes();
  auto verdict = wciscope::search_singular_points(X, primes, budget, seed);
  emit(wciscope::qs_verdict_to_json(verdict), as_json);
  return 0;
}

int run_search(const wciscope::SearchBounds& bounds, const std::string& index_filter, bool probe,
               std::vector<std::uint64_t> primes, long long budget, std::uint64_t seed, bool as_json) {
  wciscope::SearchBounds b = bounds;
  if (!index_filter.empty()) {
    if (index_filter == "+" || index_filter == "pos") {
      b.index_filter = wciscope::SearchBounds::IndexFilter::Positive;
    } else if (index_filter == "-" || index_filter == "neg") {
      b.index_filter = wciscope::SearchBounds::IndexFilter::Negative;
    } else if (index_filter == "0" || index_filter == "zero") {
      b.index_filter = wciscope::SearchBounds::IndexFilter::Zero;
    } else {
      b.index_filter = wciscope::SearchBounds::IndexFilter::Exact;
      try {
        b.exact_index = std::stoll(index_filter);
      } catch (const std::exception&) {
        throw std::invalid_argument("--index takes +, -, 0 or an integer");
      }
    }
  }
  wciscope::SearchOptions opts;
  opts.probe_qs = probe;
  opts.seed = seed;
  opts.probe_budget = budget;
  if (!primes.empty()) opts.probe_primes = std::move(primes);
  opts.threads = wciscope::thread_budget();
  Json out = Json::array();
  for (const auto& hit : wciscope::search_descriptors(b, opts)) {
    out.push_back(wciscope::search_hit_to_json(hit));
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& hit : out) std::cout << hit.dump() << "\n";
  }
  return 0;
}

Json lab_report(const std::string& example, Json parameters, bool verified, Json details) {
  Json j;
  j["example"] = example;
  j["parameters"] = std::move(parameters);
  j["verified"] = verified;
  j["details"] = std::move(details);
  return j;
}

int run_lab(const std::string& id, std::vector<long long> args, std::uint64_t seed, bool as_json) {
  Json reports = Json::array();
  bool all_ok = true;
  auto param = [&args](std::size_t i, long long fallback) {
    return i < args.size() ? args[i] : fallback;
  };
  if (id == "5.1") {
    long long N = param(0, 4), a = param(1, 2);
    auto ex = wciscope::build_example_5_1(N, a, seed);
    bool inv = wciscope::verify_torus_invariance(ex);
    auto cls = wciscope::classify(ex.wci.descriptor());
    bool ok = inv && cls.kind == wciscope::VarietyKind::Fano && cls.index == N - 1 &&
              !wciscope::is_linear_cone(ex.wci.descriptor());
    Json details;
    details["torus_invariance"] = inv;
    details["classification"] = wciscope::classification_to_json(cls);
    details["linear_cone"] = wciscope::is_linear_cone(ex.wci.descriptor());
    reports.push_back(lab_report("5.1", Json{{"N", N}, {"a", a}, {"seed", seed}}, ok, details));
    all_ok = all_ok && ok;
  } else if (id == "5.2") {
    long long N = param(0, 5), a = param(1, 2);
    auto ex = wciscope::build_example_5_2(N, a, seed, seed + 1);
    bool inv = wciscope::verify_additive_invariance(ex);
    auto cls = wciscope::classify(ex.wci.descriptor());
    bool ok = inv && cls.kind == wciscope::VarietyKind::Fano && !wciscope::is_linear_cone(ex.wci.descriptor());
    Json details;
    details["additive_invariance"] = inv;
    details["s"] = ex.s;
    details["classification"] = wciscope::classification_to_json(cls);
    reports.push_back(lab_report("5.2", Json{{"N", N}, {"a", a}, {"phi_seed", seed}, {"f_seed", seed + 1}}, ok,
                                 details));
    all_ok = all_ok && ok;
  } else if (id == "trivial-action") {
    long long N = param(0, 3), m = param(1, 2);
    auto ex = wciscope::build_trivial_action_example(N, m, seed, seed + 1);
    bool ok = wciscope::verify_trivial_action(ex);
    Json details;
    details["dim_g"] = ex.dim_g;
    details["differences_in_ideal"] = ok;
    details["index"] = wciscope::index(ex.wci.descriptor());
    reports.push_back(lab_report("trivial-action", Json{{"N", N}, {"m", m}, {"g_seed", seed}, {"f_seed", seed + 1}},
                                 ok, details));
    all_ok = all_ok && ok;
  } else if (id == "nonqs") {
    for (const auto& nq : wciscope::build_nonqs_examples()) {
      bool witness_ok = wciscope::is_singular_cone_point(nq.wci, nq.expected_witness);
      auto verdict = wciscope::search_singular_points(nq.wci, {5}, 1000000, seed);
      bool found = verdict.status == wciscope::QsVerdict::Status::SingularConePointFound;
      Json details;
      details["expected_witness_verified_over_Q"] = witness_ok;
      details["search"] = wciscope::qs_verdict_to_json(verdict);
      bool ok = witness_ok && found;
      reports.push_back(lab_report("nonqs", Json{{"equation", nq.name}}, ok, details));
      all_ok = all_ok && ok;
    }
  } else if (id == "nodal-curve") {
    if (args.empty()) throw std::invalid_argument("lab nodal-curve needs the curve degree d");
    auto r = wciscope::nodal_curve_surface_numbers(args[0]);
    bool ok = r.m == (r.d - 1) * (r.d - 2) / 2 && (!r.k_effective || r.ctilde_negative);
    reports.push_back(lab_report("nodal-curve", Json{{"d", args[0]}}, ok, wciscope::nodal_report_to_json(r)));
    all_ok = all_ok && ok;
  } else {
    throw std::invalid_argument("unknown lab example '" + id +
                                "' (known: 5.1, 5.2, trivial-action, nonqs, nodal-curve)");
  }
  if (as_json) {
    std::cout << reports.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << r.dump() << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of weighted projective spaces and complete intersections"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  std::vector<long long> weights, degrees;
  long long wps_up_to = 8;
  long long classify_up_to = -1;
  bool strict = false;
  std::uint64_t seed = 0;
  long long budget = 200000;
  std::vector<std::uint64_t> primes;

  auto* wps = app.add_subcommand("wps", "invariants of a weighted projective space");
  wps->add_option("weights", weights, "weights a_0 ... a_N")->required()->expected(-1);
  wps->add_option("--up-to", wps_up_to, "graded dimensions up to this degree");

  auto* classify = app.add_subcommand("classify", "classify a weighted complete intersection descriptor");
  classify->add_option("weights", weights, "weights a_0 ... a_N")->required()->expected(-1);
  classify->add_option("-d,--degrees", degrees, "multidegree d_1 ... d_k")->required()->expected(-1);
  classify->add_option("--up-to", classify_up_to,
                       "also print the Hilbert series and restriction table up to this degree");
  classify->add_flag("--strict", strict, "report Indeterminate on boundary well-formedness estimates");

  auto* aut = app.add_subcommand("aut", "structure of Aut(P) for a well formed space");
  aut->add_option("weights", weights, "weights a_0 ... a_N")->required()->expected(-1);

  std::string qs_file;
  auto* qs = app.add_subcommand("qs", "search a descriptor file for singular cone points");
  qs->add_option("file", qs_file, "descriptor JSON with equations")->required();
  qs->add_option("--primes", primes, "odd primes to scan")->expected(-1);
  qs->add_option("--budget", budget, "exhaustive-scan/sample budget per prime");
  qs->add_option("--seed", seed, "sampling seed");

  wciscope::SearchBounds bounds;
  std::string index_filter;
  bool probe = false;
  auto* search = app.add_subcommand("search", "enumerate candidate descriptors within bounds");
  search->add_option("--dim", bounds.ambient_dim, "ambient dimension N")->required();
  search->add_option("--max-weight", bounds.max_weight, "largest weight")->required();
  search->add_option("--max-degree", bounds.max_degree, "largest degree")->required();
  search->add_option("--codim", bounds.codim, "codimension k (1 or 2)");
  search->add_option("--index", index_filter, "index filter: +, -, 0 or an exact integer");
  search->add_flag("--probe-qs", probe, "attach a qs verdict on a seeded random member");
  search->add_option("--primes", primes, "odd primes for --probe-qs")->expected(-1);
  search->add_option("--budget", budget, "probe budget per prime");
  search->add_option("--seed", seed, "probe seed");

  std::string lab_id;
  std::vector<long long> lab_args;
  auto* lab = app.add_subcommand("lab", "rebuild and verify a worked example");
  lab->add_option("id", lab_id, "5.1, 5.2, trivial-action, nonqs or nodal-curve")->required();
  lab->add_option("args", lab_args, "example parameters (e.g. N a, N m, or d)")->expected(-1);
  lab->add_option("--seed", seed, "builder seed");

  for (auto* sub : {wps, classify, aut, qs, search, lab}) {
    sub->add_flag("--json", as_json, "machine-readable JSON output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (wps->parsed()) return run_wps(weights, wps_up_to, as_json);
    if (classify->parsed()) return run_classify(weights, degrees, classify_up_to, strict, as_json);
    if (aut->parsed()) return run_aut(weights, as_json);
    if (qs->parsed()) return run_qs(qs_file, primes, budget, seed, as_json);
    if (search->parsed()) return run_search(bounds, index_filter, probe, primes, budget, seed, as_json);
    if (lab->parsed()) return run_lab(lab_id, lab_args, seed, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
