#include "seqcm/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace seqcm {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  const auto& ord = ring_->order;
  const int n = ring_->nvars();
  const auto& F = ring_->field;
  for (auto& t : terms_) t.c = fld_reduce(F, t.c);
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return cmp_expo(ord, a.m, b.m, n) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = fld_add(F, out.back().c, t.c);
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c == 0; }), out.end());
  terms_ = std::move(out);
}

Polynomial Polynomial::from_canonical(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  Polynomial p(ring);
  Coeff r = fld_reduce(ring->field, c);
  if (r != 0) p.terms_.push_back(Term{Expo{}, r});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int idx, int power) {
  Expo m;
  m.e[idx] = static_cast<uint16_t>(power);
  m.deg = static_cast<uint32_t>(power);
  return monomial(std::move(ring), m);
}

Polynomial Polynomial::monomial(RingPtr ring, const Expo& m, const Coeff& c) {
  Polynomial p(ring);
  Coeff r = fld_reduce(p.ring_->field, c);
  if (r != 0) p.terms_.push_back(Term{m, r});
  return p;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.m.deg != terms_[0].m.deg) return false;
  return true;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
  return d;
}

const Expo& Polynomial::lm() const { return terms_.front().m; }
const Coeff& Polynomial::lc() const { return terms_.front().c; }
const Term& Polynomial::lt() const { return terms_.front(); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  const auto& ord = ring_->order;
  const int n = ring_->nvars();
  const auto& F = ring_->field;
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = cmp_expo(ord, terms_[i].m, o.terms_[j].m, n);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Coeff s = fld_add(F, terms_[i].c, o.terms_[j].c);
      if (s != 0) r.terms_.push_back(Term{terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.m, fld_neg(ring_->field, t.c)});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::mul_term(const Expo& m, const Coeff& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  const auto& F = ring_->field;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coeff p = fld_mul(F, t.c, c);
    if (p != 0) r.terms_.push_back(Term{expo_mul(t.m, m), std::move(p)});
  }
  return r;
}

Polynomial Polynomial::mul_scalar(const Coeff& c) const { return mul_term(Expo{}, c); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  // Multiply by the shorter factor term-by-term, merging partial products.
  const Polynomial& longer = terms_.size() >= o.terms_.size() ? *this : o;
  const Polynomial& shorter = terms_.size() >= o.terms_.size() ? o : *this;
  Polynomial acc(ring_);
  for (const auto& t : shorter.terms_) acc = acc + longer.mul_term(t.m, t.c);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return mul_scalar(fld_inv(ring_->field, lc()));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

Polynomial Polynomial::substitute(const RingPtr& target, const std::vector<Polynomial>& images) const {
  Polynomial acc(target);
  const auto& F = target->field;
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, fld_from_rational(F, t.c));
    for (int v = 0; v < ring_->nvars(); ++v) {
      for (int k = 0; k < t.m.e[v]; ++k) prod = prod * images[v];
      if (prod.is_zero()) break;
    }
    acc = acc + prod;
  }
  return acc;
}

Polynomial poly_product(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) fail(ErrorKind::zero_ideal, "exact division by zero");
  check_same_ring(f.ring(), g.ring());
  const auto& ring = f.ring();
  const auto& F = ring->field;
  Polynomial rem = f;
  std::vector<Term> q;
  while (!rem.is_zero()) {
    if (!expo_divides(g.lm(), rem.lm()))
      fail(ErrorKind::unsupported, "inexact polynomial division");
    Term t{expo_div(rem.lm(), g.lm()), fld_div(F, rem.lc(), g.lc())};
    rem = rem - g.mul_term(t.m, t.c);
    q.push_back(std::move(t));
  }
  return Polynomial(ring, std::move(q));
}

Cmp compare_monomials(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                      const MonomialOrder& order) {
  if (a.size() != b.size()) fail(ErrorKind::ring_mismatch, "exponent vectors of different arity");
  if (static_cast<int>(a.size()) > kMaxVars) fail(ErrorKind::unsupported, "too many variables");
  Expo x, y;
  for (size_t i = 0; i < a.size(); ++i) {
    x.e[i] = static_cast<uint16_t>(a[i]);
    x.deg += a[i];
    y.e[i] = static_cast<uint16_t>(b[i]);
    y.deg += b[i];
  }
  int c = cmp_expo(order, x, y, static_cast<int>(a.size()));
  return c < 0 ? Cmp::LT : (c > 0 ? Cmp::GT : Cmp::EQ);
}

// ---- printing ----

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = t.c;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    bool printed_coeff = false;
    if (c != 1 || t.m.is_one()) {
      os << c.get_str();
      printed_coeff = true;
    }
    bool first_var = !printed_coeff;
    for (int v = 0; v < ring_->nvars(); ++v) {
      if (t.m.e[v] == 0) continue;
      if (!first_var) os << "*";
      os << ring_->vars[v];
      if (t.m.e[v] > 1) os << "^" << t.m.e[v];
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

// ---- parsing ----

namespace {

struct Scanner {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  mpz_class nat() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail(ErrorKind::parse, "expected a number at offset " + std::to_string(start) + " in '" + s + "'");
    return mpz_class(s.substr(start, i - start));
  }
  std::string ident() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    return s.substr(start, i - start);
  }
};

Term parse_term(Scanner& sc, const RingPtr& ring) {
  const auto& F = ring->field;
  Coeff coeff(1);
  Expo mono;
  bool have_any = false;
  if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
    mpz_class num = sc.nat();
    mpz_class den(1);
    if (sc.accept('/')) den = sc.nat();
    if (den == 0) fail(ErrorKind::parse, "zero denominator");
    coeff = fld_from_rational(F, mpq_class(num, den));
    have_any = true;
    sc.accept('*');
  }
  while (true) {
    char c = sc.peek();
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') break;
    std::string name = sc.ident();
    int idx = ring->var_index(name);
    if (idx < 0) fail(ErrorKind::unknown_variable, "unknown variable '" + name + "'");
    unsigned long p = 1;
    if (sc.accept('^')) {
      mpz_class e = sc.nat();
      if (e > 60000) fail(ErrorKind::parse, "exponent too large");
      p = e.get_ui();
    }
    mono.e[idx] = static_cast<uint16_t>(mono.e[idx] + p);
    mono.deg += static_cast<uint32_t>(p);
    have_any = true;
    sc.accept('*');
  }
  if (!have_any) fail(ErrorKind::parse, "malformed token near offset " + std::to_string(sc.i) + " in '" + sc.s + "'");
  return Term{mono, coeff};
}

}  // namespace

Polynomial parse_polynomial(const std::string& src, const RingPtr& ring) {
  Scanner sc{src};
  std::vector<Term> terms;
  bool negate = false;
  if (sc.accept('-'))
    negate = true;
  else
    sc.accept('+');
  while (true) {
    Term t = parse_term(sc, ring);
    if (negate) t.c = fld_neg(ring->field, t.c);
    terms.push_back(std::move(t));
    if (sc.eof()) break;
    if (sc.accept('+'))
      negate = false;
    else if (sc.accept('-'))
      negate = true;
    else
      fail(ErrorKind::parse, "unexpected character '" + std::string(1, sc.peek()) + "' in '" + src + "'");
  }
  return Polynomial(ring, std::move(terms));
}

}  // namespace seqcm
