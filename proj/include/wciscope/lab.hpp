#pragma once

// Reconstructions of the explicit example families: the torus-invariant
// hypersurface x_{N-1}x_N + F = 0 in P(1^{N-1},a,a), the additive family
// x_{N-3}x_{N-1} + x_{N-2}x_N + F = 0 with x_{N-1} -> x_{N-1} + alpha
// x_{N-2} Phi, the codimension-2 family f_2 = f_{2m} = 0 in P(1^N,m) whose
// unipotent shift x_N -> x_N + f_2 g acts trivially, the two standard
// non-quasi-smooth hypersurfaces, and the nodal-plane-curve surface numbers.
// Every claimed identity is verified as an exact polynomial identity; formal
// parameters (t, t^{-1}, alpha) are extra variables, with t*t^{-1} = 1
// applied as a rewriting step.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wciscope/aut.hpp"
#include "wciscope/qs.hpp"

namespace wciscope {

// Cancels x_i^e * x_j^e factors, realising the relation x_i * x_j = 1.
inline Polynomial<Rational> reduce_unit_pair(const Polynomial<Rational>& f, std::size_t i, std::size_t j) {
  Polynomial<Rational> out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e = m.exponents();
    unsigned cancel = std::min(e[i], e[j]);
    e[i] -= cancel;
    e[j] -= cancel;
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

namespace detail {

// Generic degree-d polynomial in the first `vars` coordinates of an
// (nvars)-variable weight-1 block, seeded.
inline Polynomial<Rational> generic_in_prefix(std::size_t nvars, std::size_t vars, long long degree,
                                              std::uint64_t seed) {
  Polynomial<Rational> f =
      seeded_generic_polynomial(Weights(std::vector<long long>(vars, 1)), degree, seed);
  return f.lifted(nvars);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Torus family: X = { x_{N-1} x_N + F(x_0,...,x_{N-2}) = 0 } in P(1^{N-1},a,a),
// preserved by t : x_{N-1} -> t x_{N-1}, x_N -> t^{-1} x_N.

struct TorusFamilyExample {
  ExplicitWCI wci;
  std::size_t t_index;
  std::size_t t_inv_index;
  std::vector<Polynomial<Rational>> family;  // sigma_t on the ring extended by t, t^{-1}
};

inline TorusFamilyExample build_example_5_1(long long N, long long a, std::uint64_t seed) {
  if (N <= 2 || a < 1) throw std::invalid_argument("torus family needs N > 2 and a >= 1");
  std::size_t n = static_cast<std::size_t>(N) + 1;
  std::vector<long long> w(static_cast<std::size_t>(N) - 1, 1);
  w.push_back(a);
  w.push_back(a);
  WeightedProjectiveSpace P{Weights(std::move(w))};

  Polynomial<Rational> f = Polynomial<Rational>::variable(n, n - 2) * Polynomial<Rational>::variable(n, n - 1) +
                           detail::generic_in_prefix(n, n - 2, 2 * a, seed);
  ExplicitWCI X(WCIDescriptor(P, {2 * a}), {f});

  std::size_t ext = n + 2, t = n, t_inv = n + 1;
  std::vector<Polynomial<Rational>> family;
  for (std::size_t i = 0; i < ext; ++i) family.push_back(Polynomial<Rational>::variable(ext, i));
  family[n - 2] = Polynomial<Rational>::variable(ext, t) * Polynomial<Rational>::variable(ext, n - 2);
  family[n - 1] = Polynomial<Rational>::variable(ext, t_inv) * Polynomial<Rational>::variable(ext, n - 1);
  return {std::move(X), t, t_inv, std::move(family)};
}

// f(sigma_t) = f as an exact identity in the extended ring.
inline bool verify_torus_invariance(const TorusFamilyExample& ex) {
  std::size_t ext = ex.family.size();
  Polynomial<Rational> f = ex.wci.equations()[0].lifted(ext);
  Polynomial<Rational> moved = f.substituted(ex.family);
  return reduce_unit_pair(moved, ex.t_index, ex.t_inv_index) == f;
}

// ---------------------------------------------------------------------------
// Additive family: X = { x_{N-3} x_{N-1} + x_{N-2} x_N + F(x_0,...,x_{N-4}) = 0 }
// in P(1^{N-1},a,a); alpha acts by x_{N-1} -> x_{N-1} + alpha x_{N-2} Phi,
// x_N -> x_N - alpha x_{N-3} Phi, for any Phi of degree a-1 in x_0..x_{N-2}.

struct AdditiveFamilyExample {
  ExplicitWCI wci;
  std::size_t alpha_index;
  std::vector<Polynomial<Rational>> family;  // sigma_alpha on the ring extended by alpha
  Polynomial<Rational> phi;                  // in the ambient ring
  long long s;                               // dim of the Phi space = binom(a+N-3, N-2)
};

inline AdditiveFamilyExample build_example_5_2(long long N, long long a, std::uint64_t phi_seed,
                                               std::uint64_t f_seed) {
  if (N < 4 || a < 1) throw std::invalid_argument("additive family needs N >= 4 and a >= 1");
  std::size_t n = static_cast<std::size_t>(N) + 1;
  std::vector<long long> w(static_cast<std::size_t>(N) - 1, 1);
  w.push_back(a);
  w.push_back(a);
  WeightedProjectiveSpace P{Weights(std::move(w))};

  auto var = [&](std::size_t i) { return Polynomial<Rational>::variable(n, i); };
  Polynomial<Rational> f = var(n - 4) * var(n - 2) + var(n - 3) * var(n - 1) +
                           detail::generic_in_prefix(n, n - 4, a + 1, f_seed);
  ExplicitWCI X(WCIDescriptor(P, {a + 1}), {f});

  Polynomial<Rational> phi = detail::generic_in_prefix(n, n - 2, a - 1, phi_seed);
  long long s = count_monomials(Weights(std::vector<long long>(n - 2, 1)), a - 1);

  std::size_t ext = n + 1, alpha = n;
  std::vector<Polynomial<Rational>> family;
  for (std::size_t i = 0; i < ext; ++i) family.push_back(Polynomial<Rational>::variable(ext, i));
  Polynomial<Rational> phi_ext = phi.lifted(ext);
  Polynomial<Rational> alpha_phi = Polynomial<Rational>::variable(ext, alpha) * phi_ext;
  family[n - 2] += alpha_phi * Polynomial<Rational>::variable(ext, n - 3);
  family[n - 1] -= alpha_phi * Polynomial<Rational>::variable(ext, n - 4);
  return {std::move(X), alpha, std::move(family), std::move(phi), s};
}

inline bool verify_additive_invariance(const AdditiveFamilyExample& ex) {
  std::size_t ext = ex.family.size();
  Polynomial<Rational> f = ex.wci.equations()[0].lifted(ext);
  return f.substituted(ex.family) == f;
}

// Phi assignment of the family member at a numeric alpha, in the shape
// make_unipotent_element expects (valid for a >= 2).
inline std::map<std::size_t, Polynomial<Rational>> additive_member_phis(const AdditiveFamilyExample& ex,
                                                                        const Rational& alpha) {
  std::size_t n = ex.wci.nvars();
  auto var = [&](std::size_t i) { return Polynomial<Rational>::variable(n, i); };
  std::map<std::size_t, Polynomial<Rational>> phis;
  phis.emplace(n - 2, alpha * (var(n - 3) * ex.phi));
  phis.emplace(n - 1, -alpha * (var(n - 4) * ex.phi));
  return phis;
}

// ---------------------------------------------------------------------------
// Trivial action: X = { f_2 = f_{2m} = 0 } in P(1^N, m) and the unipotent
// shift sigma : x_N -> x_N + f_2 g with deg g = m - 2. Both defining
// equations move inside the ideal (f_2): f_2 is x_N-free and
// f_{2m}(sigma) - f_{2m} = f_2 * h with h produced by telescoping the powers
// of x_N.

struct TrivialActionExample {
  ExplicitWCI wci;
  PolynomialMap sigma;
  Polynomial<Rational> g;
  long long dim_g;  // binom(N+m-3, N-1) choices of g
  Polynomial<Rational> f2;
  Polynomial<Rational> f2m;
  Polynomial<Rational> cofactor_h;
};

inline TrivialActionExample build_trivial_action_example(long long N, long long m, std::uint64_t g_seed,
                                                         std::uint64_t f_seed) {
  if (N < 3 || m < 2) throw std::invalid_argument("trivial-action example needs N >= 3 and m >= 2");
  std::size_t n = static_cast<std::size_t>(N) + 1;
  std::vector<long long> w(static_cast<std::size_t>(N), 1);
  w.push_back(m);
  WeightedProjectiveSpace P{Weights(std::move(w))};

  Polynomial<Rational> f2 = detail::generic_in_prefix(n, n - 1, 2, f_seed);
  Polynomial<Rational> f2m = seeded_generic_polynomial(P.weights(), 2 * m, f_seed + 1);
  Polynomial<Rational> g = detail::generic_in_prefix(n, n - 1, m - 2, g_seed);
  long long dim_g = count_monomials(Weights(std::vector<long long>(n - 1, 1)), m - 2);

  PolynomialMap sigma = make_unipotent_element(P, {{n - 1, f2 * g}});

  // f2m = sum_j c_j(x') x_N^j; (x_N + u)^j - x_N^j telescopes to
  // u * sum_l x_N^l (x_N + u)^{j-1-l} with u = f2 g, so h = g * that sum.
  Polynomial<Rational> u = f2 * g;
  Polynomial<Rational> shifted = Polynomial<Rational>::variable(n, n - 1) + u;
  unsigned top = f2m.max_exponent(n - 1);
  std::vector<Polynomial<Rational>> c(top + 1, Polynomial<Rational>(n));
  for (const auto& [mon, coeff] : f2m.terms()) {
    std::vector<unsigned> e = mon.exponents();
    unsigned j = e[n - 1];
    e[n - 1] = 0;
    c[j].add_term(Monomial(std::move(e)), coeff);
  }
  Polynomial<Rational> telescope(n);
  for (unsigned j = 1; j <= top; ++j) {
    if (c[j].is_zero()) continue;
    Polynomial<Rational> inner(n);
    for (unsigned l = 0; l < j; ++l) {
      inner += Polynomial<Rational>::variable(n, n - 1).pow(l) * shifted.pow(j - 1 - l);
    }
    telescope += c[j] * inner;
  }
  Polynomial<Rational> h = g * telescope;

  WCIDescriptor descriptor(P, {2, 2 * m});
  return {ExplicitWCI(std::move(descriptor), {f2, f2m}), std::move(sigma), std::move(g), dim_g,
          std::move(f2),  std::move(f2m),    std::move(h)};
}

inline bool verify_trivial_action(const TrivialActionExample& ex) {
  if (pullback(ex.sigma, ex.f2) != ex.f2) return false;  // f2 is x_N-free
  Polynomial<Rational> diff = pullback(ex.sigma, ex.f2m) - ex.f2m;
  return diff == ex.f2 * ex.cofactor_h;
}

// ---------------------------------------------------------------------------
// The two standard non-quasi-smooth hypersurfaces, at n = 3.

struct NonQsExample {
  std::string name;
  ExplicitWCI wci;
  std::vector<Rational> expected_witness;
};

inline std::vector<NonQsExample> build_nonqs_examples() {
  std::vector<NonQsExample> out;
  {
    // x_0^2 x_1 + x_2^2 + x_3^2 in P(1,2,2,2): cone singular at (0,1,0,0).
    std::size_t n = 4;
    auto var = [&](std::size_t i) { return Polynomial<Rational>::variable(n, i); };
    Polynomial<Rational> f = var(0).pow(2) * var(1) + var(2).pow(2) + var(3).pow(2);
    WCIDescriptor d(WeightedProjectiveSpace{Weights({1, 2, 2, 2})}, {4});
    out.push_back({"x0^2 x1 + x2^2 + x3^2 in P(1,2,2,2)",
                   ExplicitWCI(std::move(d), {f}),
                   {Rational(0), Rational(1), Rational(0), Rational(0)}});
  }
  {
    // x_0^3 = x_1^2 in P(2,3,5,5,5): the whole gradient dies on x_0 = x_1 = 0.
    std::size_t n = 5;
    auto var = [&](std::size_t i) { return Polynomial<Rational>::variable(n, i); };
    Polynomial<Rational> f = var(0).pow(3) - var(1).pow(2);
    WCIDescriptor d(WeightedProjectiveSpace{Weights({2, 3, 5, 5, 5})}, {6});
    out.push_back({"x0^3 - x1^2 in P(2,3,5,5,5)",
                   ExplicitWCI(std::move(d), {f}),
                   {Rational(0), Rational(0), Rational(1), Rational(0), Rational(0)}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Surface numbers of the degree-d nodal plane rational curve construction.

struct NodalCurveSurfaceReport {
  long long d = 0;
  long long m = 0;           // (d-1)(d-2)/2 nodes
  long long ctilde_sq = 0;   // -d^2 + 6d - 4
  Rational alpha;            // -2 / ctilde_sq
  Rational li_dot_l;         // d^2 / (d^2 - 6d + 4)
  Rational k_coeff;          // 1 - 6/d
  bool ctilde_negative = false;
  bool k_effective = false;  // d > 6
};

inline NodalCurveSurfaceReport nodal_curve_surface_numbers(long long d) {
  if (d < 4) throw std::invalid_argument("nodal-curve surface numbers need d >= 4");
  NodalCurveSurfaceReport r;
  r.d = d;
  r.m = (d - 1) * (d - 2) / 2;
  r.ctilde_sq = -d * d + 6 * d - 4;
  r.alpha = make_rational(-2, r.ctilde_sq);
  r.li_dot_l = make_rational(d * d, d * d - 6 * d + 4);
  r.k_coeff = make_rational(d - 6, d);
  r.ctilde_negative = r.ctilde_sq < 0;
  r.k_effective = d > 6;
  return r;
}

}  // namespace wciscope
