#pragma once

// Shared test helpers. The oracles here are deliberately independent of the
// library code paths they check: brute-force odometer counts instead of the
// DP, subset scans instead of prime classes, Pascal binomials.

#include <wciscope/wciscope.hpp>

#include <numeric>
#include <vector>

namespace testutil {

inline long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Count exponent vectors with sum e_i * w_i == d by nested odometer loops.
inline long long brute_force_monomial_count(const std::vector<long long>& w, long long d) {
  if (d < 0) return 0;
  if (w.empty()) return d == 0 ? 1 : 0;
  std::vector<long long> e(w.size(), 0);
  long long count = 0;
  while (true) {
    long long deg = 0;
    for (std::size_t i = 0; i < w.size(); ++i) deg += e[i] * w[i];
    if (deg == d) ++count;
    std::size_t i = w.size();
    while (i-- > 0) {
      if (++e[i] <= d / w[i]) break;
      e[i] = 0;
      if (i == 0) return count;
    }
  }
}

// All maximal index subsets with gcd > 1, by scanning every subset.
inline std::vector<wciscope::SingularStratum> brute_force_strata(const std::vector<long long>& w) {
  std::size_t n = w.size();
  std::vector<unsigned> with_gcd;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    long long g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) g = std::gcd(g, w[i]);
    }
    if (g > 1) with_gcd.push_back(mask);
  }
  std::vector<wciscope::SingularStratum> out;
  for (unsigned mask : with_gcd) {
    bool maximal = true;
    for (unsigned other : with_gcd) {
      if (other != mask && (other & mask) == mask) maximal = false;
    }
    if (!maximal) continue;
    wciscope::SingularStratum s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        s.indices.push_back(i);
        s.gcd = std::gcd(s.gcd, w[i]);
      }
    }
    s.dim = static_cast<long long>(s.indices.size()) - 1;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.indices < b.indices; });
  return out;
}

using RPoly = wciscope::Polynomial<wciscope::Rational>;

struct Term {
  long long coeff;
  std::vector<unsigned> exps;
};

inline RPoly make_poly(std::size_t nvars, std::initializer_list<Term> terms) {
  RPoly f(nvars);
  for (const Term& t : terms) f.add_term(wciscope::Monomial(t.exps), wciscope::Rational(t.coeff));
  return f;
}

// Sparse random polynomial, not necessarily homogeneous.
inline RPoly random_poly(std::size_t nvars, unsigned max_exp, std::size_t terms, std::mt19937_64& rng) {
  RPoly f(nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<unsigned> e(nvars);
    for (auto& x : e) x = static_cast<unsigned>(rng() % (max_exp + 1));
    long long c = static_cast<long long>(rng() % 19) - 9;
    if (c == 0) c = 1;
    f.add_term(wciscope::Monomial(std::move(e)), wciscope::Rational(c));
  }
  return f;
}

}  // namespace testutil
