#pragma once

// Monomials as dense exponent vectors, weight vectors, and the
// weighted-degree combinatorics of graded polynomial rings: counting and
// enumerating the exponent vectors e >= 0 with sum e_i * a_i = d.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wciscope {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : e_(std::move(exponents)) {}

  static Monomial one(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::invalid_argument("variable index out of range");
    std::vector<unsigned> e(nvars, 0);
    e[i] = 1;
    return Monomial(std::move(e));
  }

  std::size_t nvars() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  const std::vector<unsigned>& exponents() const { return e_; }
  long long total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0ll); }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](unsigned e) { return e == 0; });
  }

  Monomial operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("monomial length mismatch");
    std::vector<unsigned> e(e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
    return Monomial(std::move(e));
  }

  // Lexicographic; this is the key order inside Polynomial.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> e_;
};

// Positive weights a_0 <= ... <= a_N; any input order is normalized by
// sorting. May be empty (used for weight-group prefixes).
class Weights {
 public:
  Weights() = default;
  explicit Weights(std::vector<long long> values) : a_(std::move(values)) {
    for (long long a : a_) {
      if (a <= 0) throw std::invalid_argument("weights must be positive");
    }
    std::sort(a_.begin(), a_.end());
  }

  std::size_t size() const { return a_.size(); }
  bool empty() const { return a_.empty(); }
  long long operator[](std::size_t i) const { return a_[i]; }
  const std::vector<long long>& values() const { return a_; }
  long long sum() const { return std::accumulate(a_.begin(), a_.end(), 0ll); }

  auto begin() const { return a_.begin(); }
  auto end() const { return a_.end(); }

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  std::vector<long long> a_;
};

inline long long weighted_degree(const Monomial& m, const Weights& w) {
  if (m.nvars() != w.size()) throw std::invalid_argument("monomial/weight length mismatch");
  long long d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += static_cast<long long>(m[i]) * w[i];
  return d;
}

// Number of monomials of weighted degree d, by dynamic programming over the
// variables (coin-change counting). d < 0 counts as zero.
inline long long count_monomials(const Weights& w, long long d) {
  if (d < 0) return 0;
  std::vector<long long> dp(static_cast<std::size_t>(d) + 1, 0);
  dp[0] = 1;
  for (long long a : w) {
    for (long long m = a; m <= d; ++m) dp[m] += dp[m - a];
  }
  return dp[static_cast<std::size_t>(d)];
}

namespace detail {

inline void enumerate_monomials_rec(const Weights& w, std::size_t i, long long rem, std::vector<unsigned>& cur,
                                    std::vector<Monomial>& out) {
  if (i == w.size()) {
    if (rem == 0) out.push_back(Monomial(cur));
    return;
  }
  for (long long e = rem / w[i]; e >= 0; --e) {
    cur[i] = static_cast<unsigned>(e);
    enumerate_monomials_rec(w, i + 1, rem - e * w[i], cur, out);
  }
  cur[i] = 0;
}

}  // namespace detail

// All monomials of weighted degree d, lexicographically sorted with the
// leading exponent largest first: (1,1), d=1 -> [(1,0), (0,1)].
inline std::vector<Monomial> enumerate_monomials(const Weights& w, long long d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<unsigned> cur(w.size(), 0);
  detail::enumerate_monomials_rec(w, 0, d, cur, out);
  return out;
}

}  // namespace wciscope
