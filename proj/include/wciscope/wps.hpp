#pragma once

// Weighted projective space P(a_0,...,a_N) and its intrinsic invariants:
// well-formedness, maximal singular coordinate strata, the Picard generator
// O(lcm), and the graded dimensions of its coordinate ring.

#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "wciscope/monomial.hpp"

namespace wciscope {

struct WeightGroup {
  long long weight;
  std::size_t multiplicity;
  friend bool operator==(const WeightGroup&, const WeightGroup&) = default;
};

class WeightedProjectiveSpace {
 public:
  explicit WeightedProjectiveSpace(Weights w) : weights_(std::move(w)) {
    if (weights_.size() == 0) throw std::invalid_argument("a weighted projective space needs at least one weight");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (groups_.empty() || groups_.back().weight != weights_[i]) {
        groups_.push_back({weights_[i], 1});
      } else {
        ++groups_.back().multiplicity;
      }
    }
  }
  explicit WeightedProjectiveSpace(std::vector<long long> w) : WeightedProjectiveSpace(Weights(std::move(w))) {}

  const Weights& weights() const { return weights_; }
  std::size_t coord_count() const { return weights_.size(); }  // N + 1
  long long dimension() const { return static_cast<long long>(weights_.size()) - 1; }
  // Grouped form (a_0^{r_0}, ..., a_M^{r_M}) with a_0 < ... < a_M.
  const std::vector<WeightGroup>& weight_groups() const { return groups_; }

  friend bool operator==(const WeightedProjectiveSpace&, const WeightedProjectiveSpace&) = default;

 private:
  Weights weights_;
  std::vector<WeightGroup> groups_;
};

// Maximal coordinate stratum whose weights share a common factor g > 1.
struct SingularStratum {
  std::vector<std::size_t> indices;
  long long gcd = 0;
  long long dim = 0;  // |indices| - 1
  friend bool operator==(const SingularStratum&, const SingularStratum&) = default;
};

// True iff every N of the N+1 weights have gcd 1.
inline bool is_well_formed(const WeightedProjectiveSpace& P) {
  const auto& a = P.weights();
  std::size_t n = a.size();
  if (n == 1) return a[0] == 1;
  // gcd of all entries except i, via prefix/suffix gcds.
  std::vector<long long> prefix(n + 1, 0), suffix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = std::gcd(prefix[i], a[i]);
  for (std::size_t i = n; i-- > 0;) suffix[i] = std::gcd(suffix[i + 1], a[i]);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::gcd(prefix[i], suffix[i + 1]) != 1) return false;
  }
  return true;
}

namespace detail {

inline std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> ps;
  for (long long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      ps.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Maximal index sets with gcd > 1. Every such set is {i : q | a_i} for some
// prime q, so it suffices to collect those classes and drop non-maximal ones.
inline std::vector<SingularStratum> strata_for_weights(const Weights& a) {
  std::set<long long> primes;
  for (long long w : a) {
    for (long long q : prime_divisors(w)) primes.insert(q);
  }
  std::set<std::vector<std::size_t>> classes;
  for (long long q : primes) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] % q == 0) s.push_back(i);
    }
    classes.insert(std::move(s));
  }
  auto contains = [](const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  std::vector<SingularStratum> out;
  for (const auto& s : classes) {
    bool maximal = true;
    for (const auto& t : classes) {
      if (t.size() > s.size() && contains(t, s)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    long long g = 0;
    for (std::size_t i : s) g = std::gcd(g, a[i]);
    out.push_back({s, g, static_cast<long long>(s.size()) - 1});
  }
  return out;  // std::set iteration keeps the strata in lex order
}

}  // namespace detail

inline std::vector<SingularStratum> singular_strata(const WeightedProjectiveSpace& P) {
  if (!is_well_formed(P)) {
    throw std::invalid_argument("singular_strata requires a well formed weighted projective space");
  }
  return detail::strata_for_weights(P.weights());
}

// l with Pic = Z * O(l): the least common multiple of the weights.
inline long long picard_generator(const WeightedProjectiveSpace& P) {
  long long l = 1;
  for (long long a : P.weights()) {
    long long g = std::gcd(l, a);
    if (l / g > std::numeric_limits<long long>::max() / a) throw std::overflow_error("picard generator overflows");
    l = l / g * a;
  }
  return l;
}

// dim of the degree-m piece of the coordinate ring.
inline long long graded_dim(const WeightedProjectiveSpace& P, long long m) {
  if (m < 0) throw std::invalid_argument("graded_dim needs m >= 0");
  return count_monomials(P.weights(), m);
}

// Coefficients 0..up_to of 1 / prod_i (1 - t^{a_i}).
inline std::vector<long long> hilbert_series(const WeightedProjectiveSpace& P, long long up_to) {
  if (up_to < 0) throw std::invalid_argument("hilbert_series needs up_to >= 0");
  std::vector<long long> c(static_cast<std::size_t>(up_to) + 1, 0);
  c[0] = 1;
  for (long long a : P.weights()) {
    for (long long m = a; m <= up_to; ++m) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - a)];
  }
  return c;
}

}  // namespace wciscope
