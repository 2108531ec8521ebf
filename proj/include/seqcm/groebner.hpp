#ifndef SEQCM_GROEBNER_HPP
#define SEQCM_GROEBNER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seqcm/polynomial.hpp"

namespace seqcm {

// Canonical reduced Gröbner basis: monic elements, each in normal form with respect to
// the others, sorted descending by leading monomial. Uniquely determined by ideal + order.
struct ReducedBasis {
  std::vector<Polynomial> elements;

  bool is_unit() const { return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero(); }
  bool is_zero() const { return elements.empty(); }
  bool all_monomials() const {
    for (const auto& g : elements)
      if (!g.is_monomial()) return false;
    return true;
  }
};

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal from_strings(const RingPtr& ring, const std::vector<std::string>& gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool has_zero_gens() const { return gens_.empty(); }

  // Computes (and caches) the canonical reduced basis. The cache is single-assignment
  // and race-benign: concurrent fills produce the identical canonical value.
  const ReducedBasis& basis() const;

  std::vector<std::string> gen_strings() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::shared_ptr<const ReducedBasis> basis_;
};

// Full normal form of f against the reduced basis of I; zero iff f lies in I.
Polynomial normal_form(const Polynomial& f, const Ideal& I);

bool ideal_member(const Polynomial& f, const Ideal& I);
bool ideal_contains(const Ideal& I, const Ideal& J);  // J subset of I
bool ideal_equal(const Ideal& I, const Ideal& J);
bool is_unit_ideal(const Ideal& I);
bool is_zero_ideal(const Ideal& I);

enum class CombineKind { sum, product, power };
Ideal ideal_combine(CombineKind kind, const Ideal& I, const Ideal& J);
Ideal ideal_combine(CombineKind kind, const Ideal& I, int exponent);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, int n);

Ideal ideal_intersection(const Ideal& I, const Ideal& J);
Ideal ideal_colon(const Ideal& I, const Ideal& J);
Ideal ideal_colon(const Ideal& I, const Polynomial& g);

struct SaturationResult {
  Ideal ideal;
  int steps = 0;  // colon applications until the chain stabilized
};
SaturationResult saturation(const Ideal& I, const Ideal& J);

// Krull dimension of R/I from independent variable sets of the leading-term ideal.
int krull_dimension(const Ideal& I);

struct Length {
  bool finite = true;
  unsigned long long value = 0;

  static Length infinite() { return Length{false, 0}; }
  static Length of(unsigned long long v) { return Length{true, v}; }
  bool operator==(const Length& o) const {
    return finite == o.finite && (!finite || value == o.value);
  }
};

// Vector-space dimension of R/I: the number of standard monomials. Finite iff the
// leading-term ideal contains a pure power of every variable.
Length colength(const Ideal& I);

// Length of U/J for J contained in U, via the cyclic chain
//   l(U/J) = sum_j colength((J + (u_1..u_{j-1})) : u_j)
// over any generating list u_1..u_r of U. Containment is not re-checked here.
Length ideal_subquotient_length(const Ideal& U, const Ideal& J);

bool is_monomial_ideal(const Ideal& I);
// Minimal monomial generators (the reduced basis); requires a monomial ideal.
std::vector<Expo> monomial_gens(const Ideal& I);

// The irrelevant maximal ideal (all variables).
Ideal irrelevant_ideal(const RingPtr& ring);

// Buchberger engine entry point used by Ideal::basis(); exposed for tests.
ReducedBasis reduced_groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens);

}  // namespace seqcm

#endif
