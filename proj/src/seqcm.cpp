#include "seqcm/seqcm.hpp"

#include <algorithm>

namespace seqcm {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    default: return "not-applicable";
  }
}

ModuleData analyze_module(const ModuleExpr& M, const std::vector<PrimaryDecomposition>& decomps) {
  ModuleData D;
  D.M = M;
  D.decomps = decomps;
  D.F = dimension_filtration(M, decomps);
  return D;
}

ModuleData analyze_module(const ModuleExpr& M) {
  std::vector<PrimaryDecomposition> decomps;
  for (const auto& s : M.summands) {
    if (!is_monomial_ideal(s.bottom))
      fail(ErrorKind::route_unavailable,
           "automatic decomposition needs monomial summands; supply components");
    decomps.push_back(primary_decomposition_monomial(s.bottom));
  }
  return analyze_module(M, decomps);
}

namespace {

ArdegVector pick_ardeg(const ModuleData& D, const Ideal& q) {
  try {
    return arithmetic_degree_direct(D.M, q, D.decomps);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::route_unavailable) throw;
    return arithmetic_degree_filtration(D.F, q);
  }
}

void require_parameter_presentation(const ModuleExpr& M, const Ideal& q) {
  const int d = module_dim(M);
  if (static_cast<int>(q.gens().size()) != std::max(d, 0))
    fail(ErrorKind::not_sop, "ideal must be presented by exactly dim M generators");
  if (!is_sop(M, q)) fail(ErrorKind::not_sop, "not a system of parameters on the module");
}

}  // namespace

SeqCMReport check_dim2(const ModuleData& D, const Ideal& q) {
  if (module_dim(D.M) != 2) fail(ErrorKind::dimension, "dim-2 criterion requires dim M = 2");
  if (!is_sop(D.M, q)) fail(ErrorKind::not_sop, "not a system of parameters on the module");
  if (minimal_generator_count(q) != 2)
    fail(ErrorKind::not_sop, "parameter ideal must be minimally generated by 2 elements");
  SeqCMReport rep;
  rep.mode = "dim2";
  rep.q_gens = q.gen_strings();
  rep.e = hilbert_coefficients(D.M, q).e;
  rep.ardeg = pick_ardeg(D, q).values;
  Comparison c;
  c.j = 1;
  c.lhs = rep.e[1];
  c.rhs = -rep.ardeg[1];
  c.pass = c.lhs == c.rhs;
  rep.comparisons.push_back(c);
  rep.q_distinguished = is_distinguished(q, D.F).ok;
  rep.verdict = c.pass ? Verdict::yes : Verdict::no;
  return rep;
}

SeqCMReport check_signature(const ModuleData& D, const Ideal& q, SignatureMode mode) {
  const int d = module_dim(D.M);
  if (!is_sop(D.M, q)) fail(ErrorKind::not_sop, "not a system of parameters on the module");
  SeqCMReport rep;
  rep.mode = mode == SignatureMode::full ? "full" : "lambda";
  rep.q_gens = q.gen_strings();
  rep.q_distinguished = is_distinguished(q, D.F).ok;
  rep.e = hilbert_coefficients(D.M, q).e;
  rep.ardeg = pick_ardeg(D, q).values;

  bool all = true;
  if (mode == SignatureMode::full) {
    for (int j = 0; j <= d; ++j) {
      Comparison c;
      c.j = j;
      c.lhs = rep.e[j];
      long long a = (d - j >= 0 && d - j < static_cast<int>(rep.ardeg.size())) ? rep.ardeg[d - j] : 0;
      c.rhs = (j % 2 == 0) ? a : -a;
      c.pass = c.lhs == c.rhs;
      all = all && c.pass;
      rep.comparisons.push_back(c);
    }
  } else {
    for (int j : D.F.lambda) {
      Comparison c;
      c.j = j;
      int idx = d - j + 1;
      c.lhs = rep.e[idx];
      long long a = rep.ardeg[j - 1];
      c.rhs = (idx % 2 == 0) ? a : -a;
      c.pass = c.lhs == c.rhs;
      all = all && c.pass;
      rep.comparisons.push_back(c);
    }
  }
  if (!rep.q_distinguished)
    rep.verdict = Verdict::not_applicable;
  else
    rep.verdict = all ? Verdict::yes : Verdict::no;
  return rep;
}

bool is_cohen_macaulay(const ModuleExpr& M, const Ideal& q) {
  const int d = module_dim(M);
  if (d < 0) fail(ErrorKind::dimension, "zero module");
  if (d == 0) {
    if (!q.gens().empty()) fail(ErrorKind::not_sop, "dim-0 module takes the empty parameter system");
    return true;  // finite-length modules have depth = dim = 0
  }
  require_parameter_presentation(M, q);
  unsigned long long l = hs_length(M, q, 0);
  long long e0 = hilbert_coefficients(M, q).e0();
  return static_cast<long long>(l) == e0;
}

SeqCMReport sequential_cm_oracle(const ModuleData& D, uint64_t seed) {
  SeqCMReport rep;
  rep.mode = "oracle";
  ParameterSystem xs = distinguished_parameter_system(D.M, D.F, D.decomps, seed);
  rep.q_gens.reserve(xs.elements.size());
  for (const auto& x : xs.elements) rep.q_gens.push_back(x.str());
  rep.q_distinguished = true;
  bool all = true;
  for (int i = 0; i < D.F.s(); ++i) {
    ModuleExpr Qi = level_quotient(D.F, i);
    const int di = D.F.levels[i].dim;
    if (module_dim(Qi) != di)
      fail(ErrorKind::invalid_decomposition, "filtration quotient has unexpected dimension");
    std::vector<Polynomial> sub(xs.elements.begin(), xs.elements.begin() + di);
    Ideal qi(D.M.ring, sub);
    OracleLevel lvl;
    lvl.level = i;
    lvl.dim = di;
    lvl.length_mod_params = hs_length(Qi, qi, 0);
    lvl.e0 = hilbert_coefficients(Qi, qi).e0();
    lvl.cohen_macaulay = static_cast<long long>(lvl.length_mod_params) == lvl.e0;
    all = all && lvl.cohen_macaulay;
    rep.oracle_levels.push_back(lvl);
  }
  rep.verdict = all ? Verdict::yes : Verdict::no;
  return rep;
}

CorollaryReport corollary_checks(const ModuleData& D, const Ideal& q) {
  const int d = module_dim(D.M);
  if (d < 1) fail(ErrorKind::dimension, "corollaries concern positive-dimensional modules");
  require_parameter_presentation(D.M, q);
  CorollaryReport rep;
  rep.e1 = hilbert_coefficients(D.M, q).e1();
  ArdegVector a = pick_ardeg(D, q);
  rep.ardeg_top_minus_1 = a.at(d - 1);

  rep.bound_holds = rep.e1 <= -rep.ardeg_top_minus_1;
  rep.nonpositive = rep.e1 <= 0;
  rep.extremal_equality = rep.e1 == -rep.ardeg_top_minus_1;

  ModuleExpr U = unmixed_component(D.F);
  rep.dim_unmixed = module_dim(U);
  rep.unmixed = module_is_zero(U);
  ModuleExpr MU = D.F.s() >= 1 ? quotient_by_tops(D.M, D.F.levels[1].tops)
                               : quotient_by_tops(D.M, [&] {
                                   std::vector<Ideal> tops;
                                   for (const auto& s : D.M.summands) tops.push_back(s.bottom);
                                   return tops;
                                 }());
  rep.quotient_unmixed_cm = is_cohen_macaulay(MU, q);
  rep.extremal_matches_cm = rep.extremal_equality == rep.quotient_unmixed_cm;
  rep.zero_case_consistent =
      (rep.e1 == 0) == (rep.quotient_unmixed_cm && rep.dim_unmixed <= d - 2);
  if (rep.unmixed)
    rep.vasconcelos_consistent = (rep.e1 >= 0) == is_cohen_macaulay(D.M, q);
  return rep;
}

PartialSumReport partial_sum_identity_check(const ModuleData& D, const ParameterSystem& x, int j,
                                            int window, uint64_t oracle_seed) {
  PartialSumReport rep;
  const int s = D.F.s();
  const int d = module_dim(D.M);
  if (j < 1 || j > s) fail(ErrorKind::dimension, "level index out of range");
  if (!x.distinguished || !x.sop) return rep;  // not applicable

  // Certify the hypothesis: M/D_j sequentially Cohen-Macaulay, via the oracle on the
  // truncated module (its summands are R / U_{j,k}).
  {
    std::vector<IdealSubquotient> sq;
    std::vector<PrimaryDecomposition> decomps;
    for (size_t k = 0; k < D.M.summands.size(); ++k) {
      const Ideal& Ujk = D.F.levels[j].tops[k];
      if (is_unit_ideal(Ujk)) continue;  // summand dies in the quotient
      sq.push_back(make_subquotient(Ideal::unit(D.M.ring), Ujk));
      PrimaryDecomposition pd;
      pd.target = Ujk;
      for (const auto& c : D.decomps[k].components)
        if (c.dim >= D.F.levels[j - 1].dim) pd.components.push_back(c);
      Ideal inter = Ideal::unit(D.M.ring);
      for (const auto& c : pd.components) inter = ideal_intersection(inter, c.component);
      if (!ideal_equal(inter, Ujk))
        fail(ErrorKind::invalid_decomposition, "truncated decomposition inconsistent");
      decomps.push_back(std::move(pd));
    }
    if (!sq.empty()) {
      ModuleData trunc = analyze_module(make_module(D.M.ring, std::move(sq)), decomps);
      if (sequential_cm_oracle(trunc, oracle_seed).verdict != Verdict::yes) return rep;
    }
  }
  rep.applicable = true;

  const Ideal& q = x.ideal;
  HilbertTable TM;
  HilbertCoefficients cM = hilbert_coefficients(D.M, q, TM, FitOptions{});
  ModuleExpr Dj = level_module(D.F, j);
  int start = cM.stabilization_n;
  bool dj_zero = module_is_zero(Dj);
  HilbertCoefficients cDj;
  if (!dj_zero) {
    HilbertTable TD;
    cDj = hilbert_coefficients(Dj, q, TD, FitOptions{});
    start = std::max(start, cDj.stabilization_n);
  }

  for (int i = 0; i < j; ++i)
    rep.level_e0.push_back(hilbert_coefficients(level_module(D.F, i), q).e0());

  HsEvaluator evM(D.M, q);
  std::optional<HsEvaluator> evD;
  if (!dj_zero) evD.emplace(Dj, q);
  rep.window_start = start;
  bool ok = true;
  for (int n = start; n < start + window; ++n) {
    unsigned long long lhs = evM.length_at(n);
    unsigned long long rhs = dj_zero ? 0 : evD->length_at(n);
    for (int i = 0; i < j; ++i) {
      int di = D.F.levels[i].dim;
      rhs += static_cast<unsigned long long>(rep.level_e0[i]) *
             static_cast<unsigned long long>(binomial(n + di, di));
    }
    rep.lhs.push_back(lhs);
    rep.rhs.push_back(rhs);
    ok = ok && (lhs == rhs);
  }
  rep.identity_holds = ok;

  bool coeff_ok = true;
  for (int i = 0; i < j; ++i) {
    int di = D.F.levels[i].dim;
    Comparison c;
    c.j = i;
    long long sign = ((d - di) % 2 == 0) ? 1 : -1;
    c.lhs = sign * cM.e[d - di];
    c.rhs = rep.level_e0[i];
    c.pass = c.lhs == c.rhs;
    coeff_ok = coeff_ok && c.pass;
    rep.coefficient_consequence.push_back(c);
  }
  rep.coefficients_match = coeff_ok;
  return rep;
}

}  // namespace seqcm
