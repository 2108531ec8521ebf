#include "seqcm/field.hpp"

namespace seqcm {

bool is_prime_u64(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(unsigned long p) {
  if (!is_prime_u64(p)) fail(ErrorKind::bad_coefficient, "field characteristic must be prime: " + std::to_string(p));
  FieldSpec f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

std::string FieldSpec::str() const {
  return kind == Kind::rationals ? std::string("QQ") : "GF(" + std::to_string(p) + ")";
}

Coeff fld_reduce(const FieldSpec& F, const Coeff& c) {
  if (F.kind == FieldSpec::Kind::rationals) return c;
  mpz_class r = c.get_num() % mpz_class(F.p);
  if (r < 0) r += F.p;
  return Coeff(r);
}

Coeff fld_add(const FieldSpec& F, const Coeff& a, const Coeff& b) { return fld_reduce(F, a + b); }
Coeff fld_sub(const FieldSpec& F, const Coeff& a, const Coeff& b) { return fld_reduce(F, a - b); }
Coeff fld_mul(const FieldSpec& F, const Coeff& a, const Coeff& b) { return fld_reduce(F, a * b); }
Coeff fld_neg(const FieldSpec& F, const Coeff& a) { return fld_reduce(F, -a); }

Coeff fld_inv(const FieldSpec& F, const Coeff& a) {
  if (a == 0) fail(ErrorKind::bad_coefficient, "division by zero");
  if (F.kind == FieldSpec::Kind::rationals) return Coeff(1) / a;
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), mpz_class(a.get_num()).get_mpz_t(), mpz_class(F.p).get_mpz_t()) == 0)
    fail(ErrorKind::bad_coefficient, "not invertible mod p");
  return Coeff(inv);
}

Coeff fld_from_rational(const FieldSpec& F, const mpq_class& q) {
  if (F.kind == FieldSpec::Kind::rationals) return q;
  mpz_class den = q.get_den() % mpz_class(F.p);
  if (den == 0)
    fail(ErrorKind::bad_coefficient, "coefficient " + q.get_str() + " not representable in " + F.str());
  return fld_mul(F, Coeff(q.get_num()), fld_inv(F, Coeff(den)));
}

}  // namespace seqcm
