#pragma once

// Sparse multivariate polynomials over an exact coefficient field. Values are
// immutable in spirit: every operation returns a fresh polynomial and no
// stored coefficient is ever zero.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wciscope/fields.hpp"
#include "wciscope/monomial.hpp"

namespace wciscope {

template <class K>
class Polynomial {
 public:
  using coefficient_type = K;
  using term_map = std::map<Monomial, K>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
  static Polynomial constant(std::size_t nvars, K c) {
    Polynomial f(nvars);
    f.add_term(Monomial::one(nvars), std::move(c));
    return f;
  }
  static Polynomial monomial(Monomial m, K c) {
    Polynomial f(m.nvars());
    f.add_term(std::move(m), std::move(c));
    return f;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    return monomial(Monomial::variable(nvars, i), K(1));
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const term_map& terms() const { return terms_; }

  K coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K() : it->second;
  }

  void add_term(Monomial m, K c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("term has wrong variable count");
    accumulate(std::move(m), std::move(c));
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    f.check_same_ring(g);
    Polynomial h(f);
    for (const auto& [m, c] : g.terms_) h.accumulate(m, c);
    return h;
  }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    f.check_same_ring(g);
    Polynomial h(f);
    for (const auto& [m, c] : g.terms_) h.accumulate(m, -c);
    return h;
  }
  Polynomial operator-() const {
    Polynomial h(nvars_);
    for (const auto& [m, c] : terms_) h.terms_.emplace(m, -c);
    return h;
  }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_same_ring(g);
    Polynomial h(f.nvars_);
    for (const auto& [mf, cf] : f.terms_) {
      for (const auto& [mg, cg] : g.terms_) h.accumulate(mf * mg, cf * cg);
    }
    return h;
  }
  friend Polynomial operator*(const K& c, const Polynomial& f) {
    Polynomial h(f.nvars_);
    for (const auto& [m, fc] : f.terms_) h.accumulate(m, c * fc);
    return h;
  }
  friend Polynomial operator*(const Polynomial& f, const K& c) { return c * f; }
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial pow(unsigned e) const {
    Polynomial acc = constant(nvars_, K(1));
    Polynomial base(*this);
    while (e != 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
  }

  // Formal partial derivative with respect to variable i.
  Polynomial derivative(std::size_t i) const {
    if (i >= nvars_) throw std::invalid_argument("derivative variable index out of range");
    Polynomial h(nvars_);
    for (const auto& [m, c] : terms_) {
      unsigned e = m[i];
      if (e == 0) continue;
      std::vector<unsigned> exps = m.exponents();
      exps[i] -= 1;
      h.accumulate(Monomial(std::move(exps)), c * K(static_cast<long long>(e)));
    }
    return h;
  }

  // Exact evaluation; the point must match the variable count and live in the
  // same field.
  K operator()(const std::vector<K>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
    K acc{};
    for (const auto& [m, c] : terms_) {
      K t = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
      }
      acc += t;
    }
    return acc;
  }

  // Composition f(images[0], ..., images[nvars-1]), fully expanded. All
  // images must live in one common ring, which becomes the result's ring.
  Polynomial substituted(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_) throw std::invalid_argument("substitution needs one image per variable");
    std::size_t out_vars = nvars_;
    if (!images.empty()) {
      out_vars = images.front().nvars();
      for (const auto& im : images) {
        if (im.nvars() != out_vars) throw std::invalid_argument("substitution images live in different rings");
      }
    }
    // Lazily grown power cache, one ladder per variable.
    std::vector<std::vector<Polynomial>> pows(nvars_);
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
      auto& ladder = pows[i];
      if (ladder.empty()) ladder.push_back(constant(out_vars, K(1)));
      while (ladder.size() <= e) ladder.push_back(ladder.back() * images[i]);
      return ladder[e];
    };
    Polynomial h(out_vars);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(out_vars, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] != 0) t = t * power(i, m[i]);
      }
      h += t;
    }
    return h;
  }

  // Weighted degree shared by all terms, or nullopt if the terms disagree.
  // The zero polynomial also yields nullopt; callers check is_zero() first.
  std::optional<long long> homogeneous_degree(const Weights& w) const {
    std::optional<long long> deg;
    for (const auto& [m, c] : terms_) {
      long long d = weighted_degree(m, w);
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
    return deg;
  }

  unsigned max_exponent(std::size_t var) const {
    unsigned e = 0;
    for (const auto& [m, c] : terms_) e = std::max(e, m[var]);
    return e;
  }

  // Same polynomial viewed in a ring with extra trailing variables.
  Polynomial lifted(std::size_t new_nvars) const {
    if (new_nvars < nvars_) throw std::invalid_argument("lifted() cannot drop variables");
    Polynomial h(new_nvars);
    for (const auto& [m, c] : terms_) {
      std::vector<unsigned> e = m.exponents();
      e.resize(new_nvars, 0);
      h.terms_.emplace(Monomial(std::move(e)), c);
    }
    return h;
  }

 private:
  void check_same_ring(const Polynomial& g) const {
    if (nvars_ != g.nvars_) throw std::invalid_argument("polynomials live in different rings");
  }
  void accumulate(Monomial m, K c) {
    if (is_zero_coeff(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  std::size_t nvars_;
  term_map terms_;
};

template <class K>
Polynomial<K> partial_derivative(const Polynomial<K>& f, std::size_t i) {
  return f.derivative(i);
}

template <class K>
K evaluate(const Polynomial<K>& f, const std::vector<K>& point) {
  return f(point);
}

template <class K>
Polynomial<K> substitute(const Polynomial<K>& f, const std::vector<Polynomial<K>>& images) {
  return f.substituted(images);
}

// Reduction mod p; throws when p divides a stored denominator.
inline Polynomial<Fp> reduce_mod_p(const Polynomial<Rational>& f, std::uint64_t p) {
  Polynomial<Fp> g(f.nvars());
  for (const auto& [m, c] : f.terms()) g.add_term(m, Fp::from_rational(c, p));
  return g;
}

// Seeded "general" polynomial of the given weighted degree: every monomial
// present, coefficients drawn from {1,...,97}. mt19937_64 keeps the draw
// bit-reproducible across platforms.
inline Polynomial<Rational> seeded_generic_polynomial(const Weights& w, long long degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Polynomial<Rational> f(w.size());
  for (Monomial& m : enumerate_monomials(w, degree)) {
    f.add_term(std::move(m), Rational(1 + static_cast<long long>(rng() % 97)));
  }
  return f;
}

template <class K>
std::string to_string(const Polynomial<K>& f, const std::string& var_prefix = "x") {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) out << " + ";
    first = false;
    out << coeff_to_string(c);
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      out << "*" << var_prefix << i;
      if (m[i] > 1) out << "^" << m[i];
    }
  }
  return out.str();
}

}  // namespace wciscope
