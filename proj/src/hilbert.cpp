#include "seqcm/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace seqcm {

long long binomial(long long n, int k) {
  if (k < 0 || n < 0) return 0;
  if (k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact at every step
  }
  return r;
}

long long hilbert_poly_eval(const HilbertCoefficients& c, long long n) {
  long long acc = 0;
  for (int i = 0; i <= c.d; ++i) {
    long long term = c.e[i] * binomial(n + c.d - i, c.d - i);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// HsEvaluator
// ---------------------------------------------------------------------------

namespace {

void monomials_of_degree(int nvars, int deg, std::vector<Expo>& out) {
  Expo cur;
  std::function<void(int, int)> rec = [&](int v, int remaining) {
    if (v == nvars - 1) {
      cur.e[v] = static_cast<uint16_t>(remaining);
      cur.deg += remaining;
      out.push_back(cur);
      cur.deg -= remaining;
      cur.e[v] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur.e[v] = static_cast<uint16_t>(e);
      cur.deg += e;
      rec(v + 1, remaining - e);
      cur.deg -= e;
      cur.e[v] = 0;
    }
  };
  if (nvars == 0) {
    if (deg == 0) out.push_back(Expo{});
    return;
  }
  rec(0, deg);
}

// Generic small powers used by certificates: all products of k generators.
std::vector<Polynomial> generic_power_products(const std::vector<Polynomial>& gens, int k,
                                               const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::function<void(size_t, int, const Polynomial&)> rec = [&](size_t idx, int left, const Polynomial& acc) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    if (idx == gens.size()) return;
    Polynomial cur = acc;
    for (int m = 0; m <= left; ++m) {
      if (idx + 1 < gens.size() || m == left) rec(idx + 1, left - m, cur);
      if (m < left) cur = cur * gens[idx];
    }
  };
  rec(0, k, Polynomial::constant(ring, 1));
  return out;
}

Ideal power_times(const Ideal& q, int k, const Ideal& U) {
  const RingPtr& ring = q.ring();
  std::vector<Polynomial> pw = generic_power_products(q.gens(), k, ring);
  std::vector<Polynomial> gens;
  for (const auto& p : pw)
    for (const auto& u : U.gens()) gens.push_back(p * u);
  return Ideal(ring, std::move(gens));
}

}  // namespace

HsEvaluator::HsEvaluator(const ModuleExpr& M, const Ideal& q) {
  check_same_ring(M.ring, q.ring());
  if (!is_homogeneous_ideal(q)) fail(ErrorKind::inhomogeneous, "parameter data must be homogeneous");
  const RingPtr& ring = M.ring;
  const int n = ring->nvars();
  const auto& F = ring->field;

  // Split generators into linear forms and a higher-degree tail.
  std::vector<Polynomial> linear, higher;
  for (const auto& g : q.gens()) {
    if (g.is_zero()) continue;
    if (g.total_degree() == 1)
      linear.push_back(g);
    else
      higher.push_back(g);
  }

  // Row-reduce the linear part to an independent subset (dependent generators are
  // redundant as ideal generators).
  std::vector<std::vector<Coeff>> rows;
  for (const auto& g : linear) {
    std::vector<Coeff> row(n, Coeff(0));
    for (const auto& t : g.terms())
      for (int v = 0; v < n; ++v)
        if (t.m.e[v]) row[v] = t.c;
    rows.push_back(std::move(row));
  }
  std::vector<std::vector<Coeff>> basis_rows;
  std::vector<int> pivot_cols;
  for (auto row : rows) {
    for (size_t r = 0; r < basis_rows.size(); ++r) {
      const Coeff& lead = row[pivot_cols[r]];
      if (lead == 0) continue;
      Coeff factor = lead;
      for (int v = 0; v < n; ++v)
        row[v] = fld_sub(F, row[v], fld_mul(F, factor, basis_rows[r][v]));
    }
    int pc = -1;
    for (int v = 0; v < n; ++v)
      if (row[v] != 0) {
        pc = v;
        break;
      }
    if (pc < 0) continue;
    Coeff inv = fld_inv(F, row[pc]);
    for (int v = 0; v < n; ++v) row[v] = fld_mul(F, row[v], inv);
    basis_rows.push_back(std::move(row));
    pivot_cols.push_back(pc);
  }
  rank_ = static_cast<int>(basis_rows.size());

  if (rank_ == 0) {
    work_ = ring;
    tail_ = higher;
  } else {
    // Complete to an invertible matrix A with the reduced linear forms first, and
    // substitute x = A^{-1} y everywhere.
    std::vector<std::vector<Coeff>> A = basis_rows;
    std::vector<bool> used_col(n, false);
    for (int pc : pivot_cols) used_col[pc] = true;
    for (int v = 0; v < n; ++v) {
      if (used_col[v]) continue;
      std::vector<Coeff> unit(n, Coeff(0));
      unit[v] = 1;
      A.push_back(std::move(unit));
    }
    // Invert A over the field.
    std::vector<std::vector<Coeff>> inv(n, std::vector<Coeff>(n, Coeff(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    auto W = A;
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int r = c; r < n; ++r)
        if (W[r][c] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) fail(ErrorKind::unsupported, "linear change of variables is singular");
      std::swap(W[piv], W[c]);
      std::swap(inv[piv], inv[c]);
      Coeff s = fld_inv(F, W[c][c]);
      for (int v = 0; v < n; ++v) {
        W[c][v] = fld_mul(F, W[c][v], s);
        inv[c][v] = fld_mul(F, inv[c][v], s);
      }
      for (int r = 0; r < n; ++r) {
        if (r == c || W[r][c] == 0) continue;
        Coeff f2 = W[r][c];
        for (int v = 0; v < n; ++v) {
          W[r][v] = fld_sub(F, W[r][v], fld_mul(F, f2, W[c][v]));
          inv[r][v] = fld_sub(F, inv[r][v], fld_mul(F, f2, inv[c][v]));
        }
      }
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (int v = 0; v < n; ++v) names.push_back("y" + std::to_string(v));
    work_ = make_ring(std::move(names), F, MonomialOrder::grevlex());
    std::vector<Polynomial> images(n, Polynomial(work_));
    for (int v = 0; v < n; ++v) {
      std::vector<Term> ts;
      for (int j = 0; j < n; ++j)
        if (inv[v][j] != 0) {
          Expo m;
          m.e[j] = 1;
          m.deg = 1;
          ts.push_back(Term{m, inv[v][j]});
        }
      images[v] = Polynomial(work_, std::move(ts));
    }
    for (const auto& h : higher) tail_.push_back(h.substitute(work_, images));
    for (const auto& s : M.summands) {
      std::vector<Polynomial> tg, bg;
      for (const auto& g : s.top.gens()) tg.push_back(g.substitute(work_, images));
      for (const auto& g : s.bottom.gens()) bg.push_back(g.substitute(work_, images));
      Summand sd;
      sd.top = Ideal(work_, std::move(tg));
      sd.bottom = Ideal(work_, std::move(bg));
      sd.cyclic = is_unit_ideal(sd.top);
      summands_.push_back(std::move(sd));
    }
    return;
  }

  for (const auto& s : M.summands) {
    Summand sd;
    sd.top = s.top;
    sd.bottom = s.bottom;
    sd.cyclic = is_unit_ideal(sd.top);
    summands_.push_back(std::move(sd));
  }
}

std::vector<Polynomial> HsEvaluator::power_gens(int k) const {
  std::vector<Polynomial> out;
  std::function<void(size_t, int, const Polynomial&)> rec = [&](size_t idx, int used, const Polynomial& acc) {
    if (idx == tail_.size()) {
      int ydeg = k - used;
      if (rank_ == 0) {
        if (ydeg == 0) out.push_back(acc);
        return;
      }
      if (ydeg == 0) {
        out.push_back(acc);
        return;
      }
      std::vector<Expo> ms;
      monomials_of_degree(rank_, ydeg, ms);
      for (const auto& m : ms) out.push_back(acc.mul_term(m, Coeff(1)));
      return;
    }
    rec(idx + 1, used, acc);
    Polynomial cur = acc;
    for (int mult = 1; used + mult <= k; ++mult) {
      cur = cur * tail_[idx];
      rec(idx + 1, used + mult, cur);
    }
  };
  rec(0, 0, Polynomial::constant(work_, 1));
  if (out.size() > 60000) fail(ErrorKind::unsupported, "power generator set too large");
  return out;
}

unsigned long long HsEvaluator::length_at(int n) const {
  std::vector<Polynomial> pw = power_gens(n + 1);
  unsigned long long total = 0;
  for (const auto& s : summands_) {
    std::vector<Polynomial> gens;
    const auto& jbasis = s.bottom.basis().elements;
    gens.insert(gens.end(), jbasis.begin(), jbasis.end());
    if (s.cyclic) {
      for (const auto& p : pw) {
        Polynomial nf = normal_form(p, s.bottom);
        if (!nf.is_zero()) gens.push_back(std::move(nf));
      }
      Length l = colength(Ideal(work_, std::move(gens)));
      if (!l.finite) fail(ErrorKind::infinite_length, "ideal is not m-primary on the module");
      total += l.value;
    } else {
      for (const auto& p : pw)
        for (const auto& u : s.top.gens()) {
          Polynomial nf = normal_form(p * u, s.bottom);
          if (!nf.is_zero()) gens.push_back(std::move(nf));
        }
      Ideal K(work_, std::move(gens));
      Length l = ideal_subquotient_length(s.top, K);
      if (!l.finite) fail(ErrorKind::infinite_length, "ideal is not m-primary on the module");
      total += l.value;
    }
  }
  return total;
}

unsigned long long hs_length(const ModuleExpr& M, const Ideal& q, int n) {
  return HsEvaluator(M, q).length_at(n);
}

HilbertTable hilbert_table(const ModuleExpr& M, const Ideal& q, int n_max) {
  HsEvaluator ev(M, q);
  HilbertTable T;
  T.q = q;
  T.n_lo = 0;
  T.n_hi = n_max;
  T.values.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) T.values.push_back(ev.length_at(n));
  return T;
}

// ---------------------------------------------------------------------------
// Fitting
// ---------------------------------------------------------------------------

HilbertCoefficients fit_hilbert_coefficients(const HilbertTable& T, int d) {
  if (d < 0) fail(ErrorKind::dimension, "cannot fit coefficients of the zero module");
  const auto& v = T.values;
  const int len = static_cast<int>(v.size());
  const int min_len = std::max(2 * d + 2, d + 4);
  if (len < min_len) fail(ErrorKind::no_stabilization, "table too short; raise n_max");

  // d-th finite differences.
  std::vector<long long> D(v.begin(), v.end());
  for (int round = 0; round < d; ++round) {
    for (size_t i = 0; i + 1 < D.size(); ++i) D[i] = D[i + 1] - D[i];
    D.pop_back();
  }
  int a = static_cast<int>(D.size()) - 1;
  while (a > 0 && D[a - 1] == D.back()) --a;
  const int window = static_cast<int>(D.size()) - a;
  if (window < std::max(d + 2, 4))
    fail(ErrorKind::no_stabilization, "d-th differences not constant long enough; raise n_max");

  // Interpolate the last d+1 points in the signed binomial basis.
  const int N = T.n_hi;
  const int rows = d + 1;
  std::vector<std::vector<mpq_class>> A(rows, std::vector<mpq_class>(rows + 1));
  for (int r = 0; r < rows; ++r) {
    long long n = N - d + r;
    for (int i = 0; i <= d; ++i) {
      long long b = binomial(n + d - i, d - i);
      mpz_class bz(static_cast<long>(b));
      A[r][i] = (i % 2 == 0) ? mpq_class(bz) : mpq_class(-bz);
    }
    A[r][rows] = mpq_class(static_cast<unsigned long>(v[n]));
  }
  for (int c = 0; c < rows; ++c) {
    int piv = -1;
    for (int r = c; r < rows; ++r)
      if (A[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) fail(ErrorKind::nonintegral_fit, "singular interpolation system");
    std::swap(A[piv], A[c]);
    mpq_class s = A[c][c];
    for (int k = c; k <= rows; ++k) A[c][k] /= s;
    for (int r = 0; r < rows; ++r) {
      if (r == c || A[r][c] == 0) continue;
      mpq_class f = A[r][c];
      for (int k = c; k <= rows; ++k) A[r][k] -= f * A[c][k];
    }
  }
  HilbertCoefficients out;
  out.d = d;
  out.e.resize(d + 1);
  for (int i = 0; i <= d; ++i) {
    const mpq_class& x = A[i][rows];
    if (x.get_den() != 1)
      fail(ErrorKind::nonintegral_fit, "non-integral coefficients; dimension mismatch");
    out.e[i] = static_cast<long long>(x.get_num().get_si());
  }
  if (out.e[0] < 1)
    fail(ErrorKind::nonintegral_fit, "leading coefficient below 1; dimension mismatch");
  out.stabilization_n = a;

  // Validate on three further stabilized entries.
  for (int n = N - d - 3; n <= N - d - 1; ++n) {
    if (n < 0) fail(ErrorKind::no_stabilization, "not enough validation points");
    if (hilbert_poly_eval(out, n) != static_cast<long long>(v[n]))
      fail(ErrorKind::no_stabilization, "validation points disagree; raise n_max");
  }
  return out;
}

HilbertCoefficients hilbert_coefficients(const ModuleExpr& M, const Ideal& q, HilbertTable& table_out,
                                         FitOptions opts) {
  int d = module_dim(M);
  if (d < 0) fail(ErrorKind::dimension, "coefficients of the zero module are undefined");
  int n_max = opts.n_start > 0 ? opts.n_start : 2 * d + 4;
  HsEvaluator ev(M, q);
  HilbertTable T;
  T.q = q;
  T.n_lo = 0;
  T.n_hi = -1;
  while (true) {
    for (int n = T.n_hi + 1; n <= n_max; ++n) T.values.push_back(ev.length_at(n));
    T.n_hi = n_max;
    try {
      HilbertCoefficients c = fit_hilbert_coefficients(T, d);
      table_out = T;
      return c;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::no_stabilization) throw;
      if (n_max >= opts.n_cap)
        fail(ErrorKind::no_stabilization,
             "no stabilization within n_max = " + std::to_string(n_max) + "; raise the cap");
      n_max = std::min(opts.n_cap, n_max + opts.growth);
    }
  }
}

HilbertCoefficients hilbert_coefficients(const ModuleExpr& M, const Ideal& q, FitOptions opts) {
  HilbertTable scratch;
  return hilbert_coefficients(M, q, scratch, opts);
}

// ---------------------------------------------------------------------------
// Multiplicity routes
// ---------------------------------------------------------------------------

long long multiplicity_e0(const ModuleExpr& M, const Ideal& q, E0Route route,
                          const std::vector<PrimaryDecomposition>* decomps) {
  if (route == E0Route::table) return hilbert_coefficients(M, q).e0();

  if (decomps == nullptr || decomps->size() != M.summands.size())
    fail(ErrorKind::route_unavailable, "associativity route needs one decomposition per summand");
  for (const auto& s : M.summands)
    if (!is_unit_ideal(s.top))
      fail(ErrorKind::route_unavailable, "associativity route applies to direct sums of cyclics");
  const int d = module_dim(M);

  // Gather top-dimensional associated primes across summands with summed multiplicities.
  std::vector<std::pair<Ideal, unsigned long long>> mults;
  for (size_t k = 0; k < M.summands.size(); ++k) {
    for (const auto& ap : associated_primes((*decomps)[k])) {
      if (ap.dim != d) continue;
      unsigned long long m = length_multiplicity((*decomps)[k], ap.prime);
      bool merged = false;
      for (auto& [p, acc] : mults)
        if (ideal_equal(p, ap.prime)) {
          acc += m;
          merged = true;
          break;
        }
      if (!merged) mults.emplace_back(ap.prime, m);
    }
  }
  long long total = 0;
  for (const auto& [p, m] : mults) {
    long long e0p = hilbert_coefficients(cyclic_module(p), q).e0();
    total += static_cast<long long>(m) * e0p;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Coefficient-relation checks
// ---------------------------------------------------------------------------

SesReport ses_coefficient_check(const ModuleExpr& M, const std::vector<Ideal>& tops, const Ideal& q) {
  SesReport rep;
  ModuleExpr N = submodule_from_tops(M, tops);
  ModuleExpr Q = quotient_by_tops(M, tops);
  rep.d = module_dim(M);
  rep.s = module_dim(N);
  if (rep.s >= rep.d) fail(ErrorKind::dimension, "submodule must have strictly smaller dimension");
  if (module_dim(Q) != rep.d) fail(ErrorKind::dimension, "quotient dimension dropped unexpectedly");
  rep.e_M = hilbert_coefficients(M, q).e;
  rep.e_quotient = hilbert_coefficients(Q, q).e;
  if (rep.s < 0) {  // zero submodule: pure identity check
    rep.pass = rep.e_M == rep.e_quotient;
    return rep;
  }
  rep.e_N = hilbert_coefficients(N, q).e;
  bool ok = true;
  for (int j = 0; j <= rep.d - rep.s - 1; ++j) ok = ok && (rep.e_M[j] == rep.e_quotient[j]);
  long long sign = ((rep.d - rep.s) % 2 == 0) ? 1 : -1;
  ok = ok && (rep.e_M[rep.d - rep.s] == rep.e_quotient[rep.d - rep.s] + sign * rep.e_N[0]);
  rep.pass = ok;
  return rep;
}

Dim1ChernReport dim1_chern_check(const ModuleExpr& M, const Ideal& q) {
  if (module_dim(M) != 1) fail(ErrorKind::dimension, "dimension-one check requires dim M = 1");
  Dim1ChernReport rep;
  rep.e1 = hilbert_coefficients(M, q).e1();
  rep.h0 = h0_length(M);
  rep.pass = rep.e1 == -static_cast<long long>(rep.h0);
  return rep;
}

bool superficial_certificate(const ModuleExpr& M, const Ideal& q, const Polynomial& x, int* c_out) {
  check_same_ring(M.ring, q.ring());
  check_same_ring(M.ring, x.ring());
  if (!ideal_member(x, q)) return false;
  Ideal mq = ideal_product(irrelevant_ideal(M.ring), q);
  if (ideal_member(x, mq)) return false;
  const int d = std::max(module_dim(M), 1);

  for (int c = 1; c <= 4; ++c) {
    bool ok = true;
    for (int n = c; n <= c + d + 2 && ok; ++n) {
      for (const auto& s : M.summands) {
        Ideal qn1U = ideal_sum(s.bottom, power_times(q, n + 1, s.top));
        Ideal qcU = ideal_sum(s.bottom, power_times(q, c, s.top));
        Ideal qnU = ideal_sum(s.bottom, power_times(q, n, s.top));
        Ideal lhs = ideal_intersection(ideal_intersection(s.top, ideal_colon(qn1U, x)), qcU);
        if (!ideal_equal(lhs, qnU)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      if (c_out) *c_out = c;
      return true;
    }
  }
  return false;
}

NagataReport nagata_recursion_check(const ModuleExpr& M, const Ideal& q, const Polynomial& x) {
  const int d = module_dim(M);
  if (d < 2) fail(ErrorKind::dimension, "recursion check requires dim M >= 2");
  NagataReport rep;
  int c = -1;
  rep.certified = superficial_certificate(M, q, x, &c);
  rep.certificate_c = c;
  if (!rep.certified) return rep;

  ModuleExpr Mx = quotient_by_element(M, x);
  if (module_dim(Mx) != d - 1) {
    rep.certified = false;  // superficial elements drop the dimension by exactly one
    return rep;
  }
  rep.e_M = hilbert_coefficients(M, q).e;
  rep.e_MxM = hilbert_coefficients(Mx, q).e;
  Length t = module_length(annihilator_submodule(M, x));
  if (!t.finite) fail(ErrorKind::infinite_length, "0 :_M x is not finite");
  rep.torsion = t.value;

  bool ok = true;
  for (int j = 0; j <= d - 2; ++j) ok = ok && (rep.e_M[j] == rep.e_MxM[j]);
  long long sign = ((d - 1) % 2 == 0) ? 1 : -1;
  ok = ok && (rep.e_MxM[d - 1] == rep.e_M[d - 1] + sign * static_cast<long long>(rep.torsion));
  rep.pass = ok;
  return rep;
}

}  // namespace seqcm
