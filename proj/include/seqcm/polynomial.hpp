#ifndef SEQCM_POLYNOMIAL_HPP
#define SEQCM_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "seqcm/ring.hpp"

namespace seqcm {

struct Term {
  Expo m;
  Coeff c;
};

// Sparse multivariate polynomial in canonical form: terms strictly descending in the
// ring's monomial order, coefficients nonzero and field-reduced. Immutable by convention.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);  // normalizes

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  // Trusted fast path: terms must already be strictly descending with nonzero
  // field-reduced coefficients (the reduction engine's output shape).
  static Polynomial from_canonical(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial variable(RingPtr ring, int idx, int power = 1);
  static Polynomial monomial(RingPtr ring, const Expo& m, const Coeff& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  bool is_homogeneous() const;
  int total_degree() const;  // -1 for the zero polynomial

  const Expo& lm() const;    // leading monomial
  const Coeff& lc() const;   // leading coefficient
  const Term& lt() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial mul_term(const Expo& m, const Coeff& c) const;
  Polynomial mul_scalar(const Coeff& c) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Substitutes images[i] for variable i; images live in `target`.
  Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  void normalize();
};

// One step short of the exact quotient: returns q with f = q*g, failing if g does not
// divide f exactly.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// The input-expression grammar:
//   poly := ['+'|'-'] term (('+'|'-') term)*
//   term := [coef '*'?] (var ('^' nat)?)* | coef
//   coef := nat ['/' nat]
Polynomial parse_polynomial(const std::string& src, const RingPtr& ring);

Polynomial poly_product(const Polynomial& f, const Polynomial& g);

enum class Cmp { LT = -1, EQ = 0, GT = 1 };
Cmp compare_monomials(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                      const MonomialOrder& order);

}  // namespace seqcm

#endif
