#pragma once

// Quasi-smoothness falsification for explicit weighted complete
// intersections. A nonzero point of the affine cone where all equations
// vanish and the Jacobian has rank < k disproves quasi-smoothness over that
// field; exhaustive or sampled finite-field scans hunt for such points.
// Absence of a witness is evidence only, never a certificate.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wciscope/parallel.hpp"
#include "wciscope/polynomial.hpp"
#include "wciscope/wci.hpp"

namespace wciscope {

class ExplicitWCI {
 public:
  ExplicitWCI(WCIDescriptor descriptor, std::vector<Polynomial<Rational>> equations)
      : descriptor_(std::move(descriptor)), equations_(std::move(equations)) {
    if (equations_.size() != descriptor_.codim()) {
      throw std::invalid_argument("need exactly one equation per multidegree entry");
    }
    std::vector<long long> degrees;
    for (const auto& f : equations_) {
      if (f.nvars() != descriptor_.ambient().coord_count()) {
        throw std::invalid_argument("equation lives in the wrong ring");
      }
      if (f.is_zero()) throw std::invalid_argument("defining equations must be nonzero");
      auto d = f.homogeneous_degree(descriptor_.weights());
      if (!d) throw std::invalid_argument("defining equations must be weighted homogeneous");
      degrees.push_back(*d);
    }
    // Accept the equations in any order; store them sorted by degree so they
    // line up with the (sorted) multidegree.
    std::stable_sort(equations_.begin(), equations_.end(), [this](const auto& f, const auto& g) {
      return *f.homogeneous_degree(descriptor_.weights()) < *g.homogeneous_degree(descriptor_.weights());
    });
    std::sort(degrees.begin(), degrees.end());
    if (degrees != descriptor_.multidegree()) {
      throw std::invalid_argument("equation degrees do not match the multidegree");
    }
  }

  const WCIDescriptor& descriptor() const { return descriptor_; }
  const std::vector<Polynomial<Rational>>& equations() const { return equations_; }
  std::size_t nvars() const { return descriptor_.ambient().coord_count(); }
  std::size_t codim() const { return descriptor_.codim(); }

 private:
  WCIDescriptor descriptor_;
  std::vector<Polynomial<Rational>> equations_;
};

// Entry (j, i) = d f_j / d x_i.
inline std::vector<std::vector<Polynomial<Rational>>> jacobian(const ExplicitWCI& X) {
  std::vector<std::vector<Polynomial<Rational>>> jac;
  jac.reserve(X.codim());
  for (const auto& f : X.equations()) {
    std::vector<Polynomial<Rational>> row;
    row.reserve(X.nvars());
    for (std::size_t i = 0; i < X.nvars(); ++i) row.push_back(f.derivative(i));
    jac.push_back(std::move(row));
  }
  return jac;
}

namespace detail {

template <class K>
std::size_t matrix_rank(std::vector<std::vector<K>> m) {
  std::size_t rank = 0;
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero_coeff(m[pivot][col])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (is_zero_coeff(m[r][col])) continue;
      K factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t matrix_rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  std::size_t rank = 0;
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    std::uint64_t inv = invmod_u64(m[rank][col], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      std::uint64_t factor = mulmod_u64(m[r][col], inv, p);
      for (std::size_t c = col; c < cols; ++c) {
        std::uint64_t sub = mulmod_u64(factor, m[rank][c], p);
        m[r][c] = m[r][c] >= sub ? m[r][c] - sub : m[r][c] + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

// Equations and Jacobian reduced mod p and flattened for fast evaluation.
struct FpTerm {
  std::uint64_t coeff;
  std::vector<unsigned> exps;
};
struct FpPoly {
  std::vector<FpTerm> terms;
};

struct FpSystem {
  std::uint64_t p = 0;
  std::size_t nvars = 0;
  std::size_t k = 0;
  std::vector<FpPoly> equations;
  std::vector<std::vector<FpPoly>> jac;
  std::vector<unsigned> max_exp;  // per variable, over equations and jacobian

  // Scratch per evaluation thread.
  struct Scratch {
    std::vector<std::vector<std::uint64_t>> pows;
  };

  Scratch make_scratch() const {
    Scratch s;
    s.pows.resize(nvars);
    for (std::size_t i = 0; i < nvars; ++i) s.pows[i].assign(max_exp[i] + 1, 1);
    return s;
  }

  void load_point(Scratch& s, const std::vector<std::uint64_t>& pt, std::size_t from = 0) const {
    for (std::size_t i = from; i < nvars; ++i) {
      std::uint64_t x = pt[i] % p;
      auto& ladder = s.pows[i];
      for (std::size_t e = 1; e < ladder.size(); ++e) ladder[e] = mulmod_u64(ladder[e - 1], x, p);
    }
  }

  std::uint64_t eval(const FpPoly& f, const Scratch& s) const {
    std::uint64_t acc = 0;
    for (const FpTerm& t : f.terms) {
      std::uint64_t v = t.coeff;
      for (std::size_t i = 0; i < nvars; ++i) {
        if (t.exps[i] != 0) v = mulmod_u64(v, s.pows[i][t.exps[i]], p);
      }
      acc += v;
      if (acc >= p) acc -= p;
    }
    return acc;
  }

  bool equations_vanish(const Scratch& s) const {
    for (const auto& f : equations) {
      if (eval(f, s) != 0) return false;
    }
    return true;
  }

  bool jacobian_rank_deficient(const Scratch& s) const {
    std::vector<std::vector<std::uint64_t>> m(k, std::vector<std::uint64_t>(nvars));
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < nvars; ++i) m[j][i] = eval(jac[j][i], s);
    }
    return matrix_rank_mod_p(std::move(m), p) < k;
  }

  bool gradient_vanishes(std::size_t row, const Scratch& s) const {
    for (std::size_t i = 0; i < nvars; ++i) {
      if (eval(jac[row][i], s) != 0) return false;
    }
    return true;
  }
};

inline FpPoly compile_mod_p(const Polynomial<Rational>& f, std::uint64_t p) {
  FpPoly out;
  for (const auto& [m, c] : f.terms()) {
    Fp r = Fp::from_rational(c, p);
    if (r.is_zero()) continue;
    out.terms.push_back({static_cast<std::uint64_t>(r.value()), m.exponents()});
  }
  return out;
}

inline FpSystem compile_system(const ExplicitWCI& X, std::uint64_t p) {
  FpSystem sys;
  sys.p = p;
  sys.nvars = X.nvars();
  sys.k = X.codim();
  sys.max_exp.assign(sys.nvars, 0);
  for (const auto& f : X.equations()) {
    sys.equations.push_back(compile_mod_p(f, p));
    for (std::size_t i = 0; i < sys.nvars; ++i) {
      sys.max_exp[i] = std::max(sys.max_exp[i], f.max_exponent(i));
    }
  }
  for (const auto& row : jacobian(X)) {
    std::vector<FpPoly> r;
    for (const auto& g : row) r.push_back(compile_mod_p(g, p));
    sys.jac.push_back(std::move(r));
  }
  return sys;
}

inline std::optional<long long> pow_leq(std::uint64_t p, std::size_t e, long long cap) {
  unsigned __int128 v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    v *= p;
    if (v > static_cast<unsigned __int128>(cap)) return std::nullopt;
  }
  return static_cast<long long>(v);
}

inline std::vector<std::uint64_t> point_from_ordinal(long long ordinal, std::uint64_t p, std::size_t nvars) {
  std::vector<std::uint64_t> pt(nvars, 0);
  for (std::size_t i = nvars; i-- > 0;) {
    pt[i] = static_cast<std::uint64_t>(ordinal % static_cast<long long>(p));
    ordinal /= static_cast<long long>(p);
  }
  return pt;  // ordinal ascending == lexicographic ascending with x_0 leading
}

// Base-p odometer step; returns the lowest index whose digit changed.
inline std::size_t odometer_step(std::vector<std::uint64_t>& pt, std::uint64_t p) {
  std::size_t i = pt.size();
  while (i-- > 0) {
    if (++pt[i] < p) return i;
    pt[i] = 0;
  }
  return 0;  // wrapped around; callers bound their loop by ordinal count
}

}  // namespace detail

// True iff all equations vanish at the nonzero point and the Jacobian there
// has rank < k (exact Gaussian elimination).
inline bool is_singular_cone_point(const ExplicitWCI& X, const std::vector<Rational>& point) {
  if (point.size() != X.nvars()) throw std::invalid_argument("point has wrong length");
  bool nonzero = false;
  for (const auto& c : point) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw std::invalid_argument("the origin is not an admissible cone point");
  for (const auto& f : X.equations()) {
    if (!f(point).is_zero()) return false;
  }
  std::vector<std::vector<Rational>> m;
  for (const auto& row : jacobian(X)) {
    std::vector<Rational> vals;
    vals.reserve(row.size());
    for (const auto& g : row) vals.push_back(g(point));
    m.push_back(std::move(vals));
  }
  return detail::matrix_rank(std::move(m)) < X.codim();
}

inline bool is_singular_cone_point(const ExplicitWCI& X, const std::vector<long long>& point, std::uint64_t p) {
  require_odd_prime(p);
  if (point.size() != X.nvars()) throw std::invalid_argument("point has wrong length");
  detail::FpSystem sys = detail::compile_system(X, p);
  std::vector<std::uint64_t> pt(point.size());
  bool nonzero = false;
  for (std::size_t i = 0; i < point.size(); ++i) {
    long long v = point[i] % static_cast<long long>(p);
    pt[i] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<long long>(p) : v);
    nonzero = nonzero || pt[i] != 0;
  }
  if (!nonzero) throw std::invalid_argument("the origin is not an admissible cone point");
  auto scratch = sys.make_scratch();
  sys.load_point(scratch, pt);
  return sys.equations_vanish(scratch) && sys.jacobian_rank_deficient(scratch);
}

// For hypersurfaces over fields with p not dividing the degree, the Euler
// relation sum a_i x_i df/dx_i = d*f lets the scan skip evaluating f at
// points where the whole gradient vanishes. Both modes must produce
// identical verdicts; the shortcut exists so that can be checked.
enum class QsEvalMode { EvaluateEquations, EulerShortcut };

struct QsVerdict {
  enum class Status { SingularConePointFound, NoSingularPointFound };

  struct Witness {
    std::uint64_t prime = 0;
    std::vector<long long> point;
  };
  struct PrimeScan {
    std::uint64_t prime = 0;
    bool exhaustive = false;
    long long points_checked = 0;  // all nonzero points when exhaustive, on-cone draws when sampled
  };

  Status status = Status::NoSingularPointFound;
  std::vector<Witness> witnesses;  // the winning witness when found
  std::vector<PrimeScan> primes;
  long long samples = 0;  // points drawn across all sampled scans
};

inline const std::vector<std::uint64_t>& default_qs_primes() {
  // Odd primes clear of characteristic-2/3 degeneracies.
  static const std::vector<std::uint64_t> primes{5, 7, 11};
  return primes;
}

// Scans (F_p)^{N+1} \ {0} for singular cone points: exhaustively whenever
// p^{N+1} <= budget (parallel over ordinal ranges; the lex-lowest witness
// wins), otherwise by drawing `budget` seeded sample points, preferring the
// solve-for-last-coordinate sampler on hypersurfaces that are linear in the
// last variable. Bit-reproducible for fixed (primes, budget, seed).
inline QsVerdict search_singular_points(const ExplicitWCI& X,
                                        const std::vector<std::uint64_t>& primes = default_qs_primes(),
                                        long long budget = 200000, std::uint64_t seed = 0,
                                        QsEvalMode mode = QsEvalMode::EvaluateEquations) {
  if (budget <= 0) throw std::invalid_argument("search budget must be positive");
  for (std::uint64_t p : primes) {
    require_odd_prime(p);
    for (const auto& f : X.equations()) {
      for (const auto& [m, c] : f.terms()) {
        Fp::from_rational(c, p);  // throws when p divides a denominator
      }
    }
  }
  QsVerdict verdict;
  std::size_t n = X.nvars();
  for (std::uint64_t p : primes) {
    detail::FpSystem sys = detail::compile_system(X, p);
    bool euler_ok = mode == QsEvalMode::EulerShortcut && X.codim() == 1 &&
                    X.descriptor().multidegree()[0] % static_cast<long long>(p) != 0;
    std::optional<long long> total = detail::pow_leq(p, n, budget);
    if (total) {
      // Exhaustive scan, lowest ordinal (= lex-lowest point) wins.
      long long points = *total - 1;
      int threads = thread_budget();
      std::vector<long long> found(static_cast<std::size_t>(std::max(1, threads)), -1);
      parallel_chunks(points, threads, [&](long long chunk, long long begin, long long end) {
        auto scratch = sys.make_scratch();
        std::vector<std::uint64_t> pt = detail::point_from_ordinal(begin + 1, p, n);
        sys.load_point(scratch, pt);
        for (long long ord = begin + 1; ord <= end; ++ord) {
          bool singular;
          if (euler_ok) {
            singular = sys.gradient_vanishes(0, scratch);
          } else {
            singular = sys.equations_vanish(scratch) && sys.jacobian_rank_deficient(scratch);
          }
          if (singular) {
            found[static_cast<std::size_t>(chunk)] = ord;
            return;
          }
          sys.load_point(scratch, pt, detail::odometer_step(pt, p));
        }
      });
      long long best = -1;
      for (long long ord : found) {
        if (ord != -1 && (best == -1 || ord < best)) best = ord;
      }
      verdict.primes.push_back({p, true, points});
      if (best != -1) {
        std::vector<std::uint64_t> pt = detail::point_from_ordinal(best, p, n);
        QsVerdict::Witness w;
        w.prime = p;
        w.point.assign(pt.begin(), pt.end());
        verdict.witnesses.push_back(std::move(w));
        verdict.status = QsVerdict::Status::SingularConePointFound;
        return verdict;
      }
    } else {
      // Sampling fallback; sequential so the draw stream is reproducible.
      std::mt19937_64 rng(seed ^ (p * 0x9E3779B97F4A7C15ull));
      bool linear_last = X.codim() == 1 && X.equations()[0].max_exponent(n - 1) == 1;
      detail::FpPoly lin_a, lin_b;  // f = A * x_last + B when linear_last
      if (linear_last) {
        Polynomial<Rational> a(n), b(n);
        for (const auto& [m, c] : X.equations()[0].terms()) {
          std::vector<unsigned> e = m.exponents();
          if (e[n - 1] == 1) {
            e[n - 1] = 0;
            a.add_term(Monomial(std::move(e)), c);
          } else {
            b.add_term(m, c);
          }
        }
        lin_a = detail::compile_mod_p(a, p);
        lin_b = detail::compile_mod_p(b, p);
      }
      auto scratch = sys.make_scratch();
      long long on_cone = 0;
      std::optional<std::vector<std::uint64_t>> hit;
      for (long long s = 0; s < budget && !hit; ++s) {
        ++verdict.samples;
        std::vector<std::uint64_t> pt(n);
        bool cone_assured = false;
        if (linear_last) {
          for (std::size_t i = 0; i + 1 < n; ++i) pt[i] = rng() % p;
          sys.load_point(scratch, pt);  // x_last still 0; A and B ignore it
          std::uint64_t av = sys.eval(lin_a, scratch);
          std::uint64_t bv = sys.eval(lin_b, scratch);
          if (av != 0) {
            std::uint64_t neg_b = bv == 0 ? 0 : p - bv;
            pt[n - 1] = detail::mulmod_u64(neg_b, detail::invmod_u64(av, p), p);
            cone_assured = true;
          } else if (bv == 0) {
            pt[n - 1] = rng() % p;
            cone_assured = true;
          } else {
            continue;  // stratum A=0, B!=0 carries no cone points
          }
        } else {
          for (std::size_t i = 0; i < n; ++i) pt[i] = rng() % p;
        }
        bool nonzero = false;
        for (std::uint64_t v : pt) nonzero = nonzero || v != 0;
        if (!nonzero) continue;
        sys.load_point(scratch, pt);
        if (!cone_assured && !sys.equations_vanish(scratch)) continue;
        if (euler_ok ? sys.gradient_vanishes(0, scratch)
                     : (sys.equations_vanish(scratch) && sys.jacobian_rank_deficient(scratch))) {
          hit = pt;
        }
        ++on_cone;
      }
      verdict.primes.push_back({p, false, on_cone});
      if (hit) {
        QsVerdict::Witness w;
        w.prime = p;
        w.point.assign(hit->begin(), hit->end());
        verdict.witnesses.push_back(std::move(w));
        verdict.status = QsVerdict::Status::SingularConePointFound;
        return verdict;
      }
    }
  }
  return verdict;
}

struct ConeDimensionProbe {
  std::uint64_t prime = 0;
  long long point_count = 0;      // F_p points of the affine cone, origin included
  long long estimated_codim = 0;  // c minimizing |count - p^{N+1-c}|
  long long expected_codim = 0;   // k from the descriptor
  bool matches_expected = false;
};

// Counts cone points exhaustively and reads off the codimension from the
// count's order of magnitude. Rejected when p^{N+1} > 10^8.
inline ConeDimensionProbe cone_dimension_probe(const ExplicitWCI& X, std::uint64_t p) {
  require_odd_prime(p);
  std::size_t n = X.nvars();
  std::optional<long long> total = detail::pow_leq(p, n, 100000000ll);
  if (!total) throw std::invalid_argument("cone_dimension_probe needs p^(N+1) <= 10^8");
  detail::FpSystem sys = detail::compile_system(X, p);
  int threads = thread_budget();
  std::vector<long long> counts(static_cast<std::size_t>(std::max(1, threads)), 0);
  parallel_chunks(*total, threads, [&](long long chunk, long long begin, long long end) {
    auto scratch = sys.make_scratch();
    long long local = 0;
    std::vector<std::uint64_t> pt = detail::point_from_ordinal(begin, p, n);
    sys.load_point(scratch, pt);
    for (long long ord = begin; ord < end; ++ord) {
      if (sys.equations_vanish(scratch)) ++local;
      sys.load_point(scratch, pt, detail::odometer_step(pt, p));
    }
    counts[static_cast<std::size_t>(chunk)] = local;
  });
  ConeDimensionProbe probe;
  probe.prime = p;
  for (long long c : counts) probe.point_count += c;
  probe.expected_codim = static_cast<long long>(X.codim());
  long long best_c = 0;
  unsigned __int128 best_diff = ~static_cast<unsigned __int128>(0);
  unsigned __int128 stratum = 1;
  for (std::size_t i = 0; i < n; ++i) stratum *= p;  // p^{N+1}, then divide down
  for (long long c = 0; c <= static_cast<long long>(n); ++c) {
    unsigned __int128 count128 = static_cast<unsigned __int128>(probe.point_count);
    unsigned __int128 diff = count128 > stratum ? count128 - stratum : stratum - count128;
    if (diff < best_diff) {
      best_diff = diff;
      best_c = c;
    }
    stratum /= p;
  }
  probe.estimated_codim = best_c;
  probe.matches_expected = probe.estimated_codim == probe.expected_codim;
  return probe;
}

}  // namespace wciscope
