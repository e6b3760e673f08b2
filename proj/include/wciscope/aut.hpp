#pragma once

// Structure of Aut(P) for a well formed weighted projective space
// P(a_0^{r_0},...,a_M^{r_M}): the unipotent radical consists of coordinate
// shifts x_{i,p} -> x_{i,p} + Phi_{i,p} with Phi_{i,p} weighted homogeneous
// of degree a_i in the variables of strictly smaller weight, and the
// reductive part is (GL_{r_0} x ... x GL_{r_M}) / C*, the central torus
// acting by t -> (t^{a_0} Id, ..., t^{a_M} Id). Elements are materialized as
// polynomial maps.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "wciscope/polynomial.hpp"
#include "wciscope/wps.hpp"

namespace wciscope {

struct AutPStructure {
  long long unipotent_dim = 0;
  std::vector<std::size_t> reductive_factors;   // (r_0, ..., r_M)
  long long reductive_dim = 0;                  // sum r_i^2 - 1
  long long total_dim = 0;
  std::vector<long long> per_weight_phi_dims;   // per weight group; entry 0 is 0
};

inline AutPStructure aut_structure(const WeightedProjectiveSpace& P) {
  if (!is_well_formed(P)) {
    throw std::invalid_argument(
        "aut_structure requires a well formed space: the semidirect decomposition breaks down otherwise "
        "(P(1,2) is isomorphic to P^1, whose automorphisms do not have this shape)");
  }
  AutPStructure s;
  std::vector<long long> lower;  // weights of the groups below the current one
  for (const WeightGroup& g : P.weight_groups()) {
    long long phi_dim = lower.empty() ? 0 : count_monomials(Weights(lower), g.weight);
    s.per_weight_phi_dims.push_back(phi_dim);
    s.unipotent_dim += static_cast<long long>(g.multiplicity) * phi_dim;
    s.reductive_factors.push_back(g.multiplicity);
    s.reductive_dim += static_cast<long long>(g.multiplicity) * static_cast<long long>(g.multiplicity);
    lower.insert(lower.end(), g.multiplicity, g.weight);
  }
  s.reductive_dim -= 1;
  s.total_dim = s.unipotent_dim + s.reductive_dim;
  return s;
}

// Polynomial self-map of the ambient ring, one image per coordinate.
class PolynomialMap {
 public:
  explicit PolynomialMap(std::vector<Polynomial<Rational>> images) : images_(std::move(images)) {
    for (const auto& f : images_) {
      if (f.nvars() != images_.size()) throw std::invalid_argument("map images live in the wrong ring");
    }
  }

  static PolynomialMap identity(std::size_t nvars) {
    std::vector<Polynomial<Rational>> images;
    images.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) images.push_back(Polynomial<Rational>::variable(nvars, i));
    return PolynomialMap(std::move(images));
  }

  std::size_t nvars() const { return images_.size(); }
  const std::vector<Polynomial<Rational>>& images() const { return images_; }
  const Polynomial<Rational>& image(std::size_t i) const { return images_.at(i); }

  friend bool operator==(const PolynomialMap&, const PolynomialMap&) = default;

 private:
  std::vector<Polynomial<Rational>> images_;
};

// f composed with the map: f(sigma_0, ..., sigma_N).
inline Polynomial<Rational> pullback(const PolynomialMap& sigma, const Polynomial<Rational>& f) {
  return f.substituted(sigma.images());
}

// sigma . tau as polynomial maps, i.e. pullback(compose(sigma, tau), f) equals
// pullback(tau, pullback(sigma, f)).
inline PolynomialMap compose(const PolynomialMap& sigma, const PolynomialMap& tau) {
  if (sigma.nvars() != tau.nvars()) throw std::invalid_argument("composing maps on different rings");
  std::vector<Polynomial<Rational>> images;
  images.reserve(sigma.nvars());
  for (const auto& f : sigma.images()) images.push_back(f.substituted(tau.images()));
  return PolynomialMap(std::move(images));
}

// Unipotent element x_i -> x_i + phi_i. Each phi must be weighted
// homogeneous of the coordinate's weight and use only variables of strictly
// smaller weight; coordinates without an entry get phi = 0.
inline PolynomialMap make_unipotent_element(const WeightedProjectiveSpace& P,
                                            const std::map<std::size_t, Polynomial<Rational>>& phis) {
  std::size_t n = P.coord_count();
  const Weights& w = P.weights();
  std::vector<Polynomial<Rational>> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial<Rational>::variable(n, i));
  for (const auto& [i, phi] : phis) {
    if (i >= n) throw std::invalid_argument("phi assigned to a coordinate out of range");
    if (phi.is_zero()) continue;
    if (phi.nvars() != n) throw std::invalid_argument("phi lives in the wrong ring");
    auto deg = phi.homogeneous_degree(w);
    if (!deg || *deg != w[i]) {
      throw std::invalid_argument("phi for a coordinate of weight " + std::to_string(w[i]) +
                                  " must be weighted homogeneous of that degree");
    }
    for (const auto& [m, c] : phi.terms()) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m[j] != 0 && w[j] >= w[i]) {
          throw std::invalid_argument("phi may only involve variables of strictly smaller weight");
        }
      }
    }
    images[i] += phi;
  }
  return PolynomialMap(std::move(images));
}

// Central torus element x_i -> t^{a_i} x_i; acts on P as the identity.
inline PolynomialMap central_torus_element(const WeightedProjectiveSpace& P, const Rational& t) {
  if (t.is_zero()) throw std::invalid_argument("torus parameter must be nonzero");
  std::size_t n = P.coord_count();
  std::vector<Polynomial<Rational>> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational scale(1);
    for (long long e = 0; e < P.weights()[i]; ++e) scale *= t;
    images.push_back(scale * Polynomial<Rational>::variable(n, i));
  }
  return PolynomialMap(std::move(images));
}

}  // namespace wciscope
