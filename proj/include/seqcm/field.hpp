#ifndef SEQCM_FIELD_HPP
#define SEQCM_FIELD_HPP

#include <gmpxx.h>

#include <string>

#include "seqcm/errors.hpp"

namespace seqcm {

// Exact coefficient domain: the rationals, or a prime field Z/p.
// Prime-field elements are kept as canonical integer representatives in [0, p).
struct FieldSpec {
  enum class Kind { rationals, prime };

  Kind kind = Kind::rationals;
  unsigned long p = 0;

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime_field(unsigned long p);

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string str() const;
};

using Coeff = mpq_class;

// Canonical representative of c in the field (identity over Q, reduction mod p otherwise).
Coeff fld_reduce(const FieldSpec& F, const Coeff& c);
Coeff fld_add(const FieldSpec& F, const Coeff& a, const Coeff& b);
Coeff fld_sub(const FieldSpec& F, const Coeff& a, const Coeff& b);
Coeff fld_mul(const FieldSpec& F, const Coeff& a, const Coeff& b);
Coeff fld_neg(const FieldSpec& F, const Coeff& a);
Coeff fld_inv(const FieldSpec& F, const Coeff& a);
inline Coeff fld_div(const FieldSpec& F, const Coeff& a, const Coeff& b) {
  return fld_mul(F, a, fld_inv(F, b));
}

// Maps a rational literal into the field; rejects a/b with p | b over Z/p.
Coeff fld_from_rational(const FieldSpec& F, const mpq_class& q);

bool is_prime_u64(unsigned long n);

}  // namespace seqcm

#endif
