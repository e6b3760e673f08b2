#pragma once

// Combinatorial model of a weighted complete intersection X in P: the index
// i_X = sum(weights) - sum(degrees), the Fano / Calabi-Yau / general-type
// trichotomy with its structural flags, linear-cone detection, the
// expected-dimension well-formedness estimate for generic members, and the
// Hilbert series prod(1 - t^{d_j}) / prod(1 - t^{a_i}).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wciscope/wps.hpp"

namespace wciscope {

class WCIDescriptor {
 public:
  WCIDescriptor(WeightedProjectiveSpace ambient, std::vector<long long> multidegree)
      : ambient_(std::move(ambient)), degrees_(std::move(multidegree)) {
    if (degrees_.empty()) throw std::invalid_argument("a weighted complete intersection needs k >= 1 degrees");
    for (long long d : degrees_) {
      if (d <= 0) throw std::invalid_argument("multidegree entries must be positive");
    }
    std::sort(degrees_.begin(), degrees_.end());
    if (static_cast<long long>(degrees_.size()) > ambient_.dimension()) {
      throw std::invalid_argument("codimension k exceeds the ambient dimension");
    }
  }

  const WeightedProjectiveSpace& ambient() const { return ambient_; }
  const Weights& weights() const { return ambient_.weights(); }
  const std::vector<long long>& multidegree() const { return degrees_; }
  std::size_t codim() const { return degrees_.size(); }
  long long dim() const { return ambient_.dimension() - static_cast<long long>(degrees_.size()); }

  friend bool operator==(const WCIDescriptor&, const WCIDescriptor&) = default;

 private:
  WeightedProjectiveSpace ambient_;
  std::vector<long long> degrees_;  // sorted ascending
};

inline long long index(const WCIDescriptor& X) {
  long long i = X.weights().sum();
  for (long long d : X.multidegree()) i -= d;
  return i;
}

// True iff some defining degree equals some weight.
inline bool is_linear_cone(const WCIDescriptor& X) {
  for (long long d : X.multidegree()) {
    for (long long a : X.weights()) {
      if (d == a) return true;
    }
  }
  return false;
}

enum class VarietyKind { Fano, CalabiYau, GeneralType };

// Two-valued knowledge flag: established, or left open.
enum class Knowledge { True, Unknown };

struct ClassificationReport {
  long long index = 0;
  VarietyKind kind = VarietyKind::CalabiYau;
  long long canonical_sheaf_exponent = 0;  // omega_X = O_X(-i_X)
  long long dim = 0;
  bool rationally_connected = false;
  Knowledge not_uniruled = Knowledge::Unknown;
  std::string class_group_note;  // set for dim >= 3
  bool cy_stabilizer_note = false;  // hypersurface with i_X = 0: stabilizer image in Aut(X) is finite
};

inline ClassificationReport classify(const WCIDescriptor& X) {
  ClassificationReport r;
  r.index = index(X);
  r.kind = r.index > 0 ? VarietyKind::Fano : (r.index == 0 ? VarietyKind::CalabiYau : VarietyKind::GeneralType);
  r.canonical_sheaf_exponent = -r.index;
  r.dim = X.dim();
  r.rationally_connected = r.index > 0;
  bool divisible = true;
  for (long long a : X.weights()) {
    if (r.index % a != 0) divisible = false;
  }
  r.not_uniruled = (r.index <= 0 && divisible) ? Knowledge::True : Knowledge::Unknown;
  if (r.dim >= 3) {
    r.class_group_note = "Cl≅Z by O_X(1)";
  } else if (r.dim == 2) {
    r.class_group_note = "Cl torsion-free";
  }
  r.cy_stabilizer_note = r.index == 0 && X.codim() == 1;
  return r;
}

struct GenericWellFormedness {
  enum class Status { WellFormed, Fails, Indeterminate };

  // One row per maximal singular stratum of the ambient space.
  struct StratumCheck {
    SingularStratum stratum;
    long long cutting_degrees = 0;    // c_S: degrees d_j realizable inside the stratum variables
    long long estimated_dim = 0;      // max(-1, |S| - 1 - c_S), -1 meaning empty
    bool violates = false;            // dim X - estimated_dim < 2 (nonempty intersection)
    bool at_boundary = false;         // dim X - estimated_dim == 2 exactly
  };

  Status status = Status::WellFormed;
  std::vector<StratumCheck> checks;
  std::optional<SingularStratum> failing;  // first violating stratum
};

// Expected-dimension estimate of codim_X(X meet Sing P) >= 2 for a generic
// member. Runs on any descriptor; the estimate is only meaningful under the
// genericity assumption, and explicit non-generic members belong to the
// finite-field dimension probe instead.
inline GenericWellFormedness generic_wellformedness(const WCIDescriptor& X, bool strict = false) {
  GenericWellFormedness result;
  long long dim_x = X.dim();
  bool boundary_seen = false;
  for (SingularStratum& s : detail::strata_for_weights(X.weights())) {
    GenericWellFormedness::StratumCheck check;
    std::vector<long long> sub;
    for (std::size_t i : s.indices) sub.push_back(X.weights()[i]);
    Weights sub_w(std::move(sub));
    for (long long d : X.multidegree()) {
      if (count_monomials(sub_w, d) > 0) ++check.cutting_degrees;
    }
    check.estimated_dim = std::max(-1ll, static_cast<long long>(s.indices.size()) - 1 - check.cutting_degrees);
    if (check.estimated_dim >= 0) {
      check.violates = dim_x - check.estimated_dim < 2;
      check.at_boundary = dim_x - check.estimated_dim == 2;
    }
    check.stratum = std::move(s);
    if (check.violates && !result.failing) result.failing = check.stratum;
    boundary_seen = boundary_seen || check.at_boundary;
    result.checks.push_back(std::move(check));
  }
  if (result.failing) {
    result.status = GenericWellFormedness::Status::Fails;
  } else if (strict && boundary_seen) {
    result.status = GenericWellFormedness::Status::Indeterminate;
  }
  return result;
}

// Coefficients 0..up_to of prod_j (1 - t^{d_j}) / prod_i (1 - t^{a_i}).
// Valid as dim R(X,A)_m under the regular-sequence hypothesis; see
// restriction_surjectivity_report for the linear-cone caveat.
inline std::vector<long long> hilbert_series(const WCIDescriptor& X, long long up_to) {
  std::vector<long long> c = hilbert_series(X.ambient(), up_to);
  for (long long d : X.multidegree()) {
    for (long long m = up_to; m >= d; --m) {
      c[static_cast<std::size_t>(m)] -= c[static_cast<std::size_t>(m - d)];
    }
  }
  return c;
}

struct RestrictionRow {
  long long m = 0;
  long long dim_ambient = 0;  // dim R(P)_m
  long long dim_x = 0;        // dim R(X,A)_m
  long long kernel = 0;       // difference; exact by surjectivity of the restriction
};

struct RestrictionReport {
  std::vector<RestrictionRow> rows;
  bool linear_cone_caveat = false;  // degrees overlap the weights: regular-sequence bookkeeping is off
};

inline RestrictionReport restriction_surjectivity_report(const WCIDescriptor& X, long long up_to) {
  RestrictionReport report;
  report.linear_cone_caveat = is_linear_cone(X);
  std::vector<long long> amb = hilbert_series(X.ambient(), up_to);
  std::vector<long long> quo = hilbert_series(X, up_to);
  for (long long m = 0; m <= up_to; ++m) {
    auto i = static_cast<std::size_t>(m);
    report.rows.push_back({m, amb[i], quo[i], amb[i] - quo[i]});
  }
  return report;
}

}  // namespace wciscope
