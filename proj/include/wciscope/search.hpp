#pragma once

// Deterministic enumeration of candidate descriptors: all sorted weight and
// degree tuples of an exact ambient dimension within bounds, filtered by
// well-formedness of the ambient space, the linear-cone test, the generic
// well-formedness estimate, and an index filter. Output order is
// lexicographic and independent of the thread schedule.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wciscope/parallel.hpp"
#include "wciscope/qs.hpp"
#include "wciscope/wci.hpp"

namespace wciscope {

struct SearchBounds {
  long long ambient_dim = 3;  // N: weight tuples have N+1 entries
  long long max_weight = 1;
  long long max_degree = 5;
  int codim = 1;  // k, 1 or 2

  enum class IndexFilter { Any, Positive, Negative, Zero, Exact };
  IndexFilter index_filter = IndexFilter::Any;
  long long exact_index = 0;
};

struct SearchHit {
  WCIDescriptor descriptor;
  ClassificationReport classification;
  // Verdict on a seeded random member; absent when probing was off or no
  // nonzero member of some degree exists.
  std::optional<QsVerdict> probe;
  bool probe_skipped = false;
};

namespace detail {

inline unsigned __int128 binom128(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  unsigned __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
  }
  return r;
}

inline void nondecreasing_tuples(long long length, long long max_value, std::vector<long long>& cur,
                                 std::vector<std::vector<long long>>& out) {
  if (static_cast<long long>(cur.size()) == length) {
    out.push_back(cur);
    return;
  }
  long long lo = cur.empty() ? 1 : cur.back();
  for (long long v = lo; v <= max_value; ++v) {
    cur.push_back(v);
    nondecreasing_tuples(length, max_value, cur, out);
    cur.pop_back();
  }
}

inline std::uint64_t descriptor_probe_seed(const WCIDescriptor& X, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  auto mix = [&h](long long v) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  for (long long a : X.weights()) mix(a);
  mix(-1);
  for (long long d : X.multidegree()) mix(d);
  return h;
}

}  // namespace detail

struct SearchOptions {
  bool probe_qs = false;
  std::uint64_t seed = 0;
  long long probe_budget = 200000;
  std::vector<std::uint64_t> probe_primes = default_qs_primes();
  int threads = 1;
};

inline std::vector<SearchHit> search_descriptors(const SearchBounds& bounds, const SearchOptions& opts = {}) {
  if (bounds.ambient_dim < 1 || bounds.max_weight < 1 || bounds.max_degree < 1) {
    throw std::invalid_argument("search bounds must be positive");
  }
  if (bounds.codim != 1 && bounds.codim != 2) throw std::invalid_argument("search codimension must be 1 or 2");
  if (bounds.codim > bounds.ambient_dim) throw std::invalid_argument("codimension exceeds the ambient dimension");

  long long n = bounds.ambient_dim + 1;
  unsigned __int128 weight_tuples = detail::binom128(bounds.max_weight + n - 1, n);
  unsigned __int128 degree_tuples =
      bounds.codim == 1 ? static_cast<unsigned __int128>(bounds.max_degree)
                        : static_cast<unsigned __int128>(bounds.max_degree) * (bounds.max_degree + 1) / 2;
  if (weight_tuples * degree_tuples > 10000000) {
    throw std::invalid_argument("search bounds exceed the 10^7 tuple limit of the deterministic enumerator");
  }

  std::vector<std::vector<long long>> weights;
  {
    std::vector<long long> cur;
    detail::nondecreasing_tuples(n, bounds.max_weight, cur, weights);
  }

  auto index_passes = [&bounds](long long i) {
    switch (bounds.index_filter) {
      case SearchBounds::IndexFilter::Any: return true;
      case SearchBounds::IndexFilter::Positive: return i > 0;
      case SearchBounds::IndexFilter::Negative: return i < 0;
      case SearchBounds::IndexFilter::Zero: return i == 0;
      case SearchBounds::IndexFilter::Exact: return i == bounds.exact_index;
    }
    return false;
  };

  auto scan_weight_tuple = [&](const std::vector<long long>& w, std::vector<SearchHit>& out) {
    WeightedProjectiveSpace P{Weights(w)};
    if (!is_well_formed(P)) return;
    std::vector<std::vector<long long>> degree_sets;
    if (bounds.codim == 1) {
      for (long long d = 1; d <= bounds.max_degree; ++d) degree_sets.push_back({d});
    } else {
      for (long long d1 = 1; d1 <= bounds.max_degree; ++d1) {
        for (long long d2 = d1; d2 <= bounds.max_degree; ++d2) degree_sets.push_back({d1, d2});
      }
    }
    for (auto& degrees : degree_sets) {
      WCIDescriptor X(P, degrees);
      if (is_linear_cone(X)) continue;
      if (!index_passes(index(X))) continue;
      if (generic_wellformedness(X).status == GenericWellFormedness::Status::Fails) continue;
      SearchHit hit{X, classify(X), std::nullopt, false};
      if (opts.probe_qs) {
        bool realizable = true;
        for (long long d : X.multidegree()) realizable = realizable && count_monomials(X.weights(), d) > 0;
        if (!realizable) {
          hit.probe_skipped = true;  // no nonzero member of this multidegree
        } else {
          std::uint64_t member_seed = detail::descriptor_probe_seed(X, opts.seed);
          std::vector<Polynomial<Rational>> eqs;
          for (std::size_t j = 0; j < X.multidegree().size(); ++j) {
            eqs.push_back(seeded_generic_polynomial(X.weights(), X.multidegree()[j],
                                                    member_seed + static_cast<std::uint64_t>(j)));
          }
          ExplicitWCI member(X, std::move(eqs));
          hit.probe = search_singular_points(member, opts.probe_primes, opts.probe_budget, member_seed);
        }
      }
      out.push_back(std::move(hit));
    }
  };

  long long count = static_cast<long long>(weights.size());
  int threads = std::max(1, opts.threads);
  std::vector<std::vector<SearchHit>> buckets(static_cast<std::size_t>(std::min<long long>(threads, std::max<long long>(count, 1))));
  parallel_chunks(count, threads, [&](long long chunk, long long begin, long long end) {
    for (long long i = begin; i < end; ++i) scan_weight_tuple(weights[static_cast<std::size_t>(i)], buckets[static_cast<std::size_t>(chunk)]);
  });
  std::vector<SearchHit> hits;
  for (auto& b : buckets) {
    for (auto& h : b) hits.push_back(std::move(h));
  }
  return hits;
}

}  // namespace wciscope
