#include "seqcm/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace seqcm {

namespace {

void require_cyclic(const ModuleExpr& M) {
  for (const auto& s : M.summands)
    if (!is_unit_ideal(s.top))
      fail(ErrorKind::unsupported, "filtration construction needs cyclic summands");
}

}  // namespace

DimensionFiltration dimension_filtration(const ModuleExpr& M,
                                         const std::vector<PrimaryDecomposition>& decomps) {
  require_cyclic(M);
  if (decomps.size() != M.summands.size())
    fail(ErrorKind::invalid_decomposition, "one decomposition per summand required");
  for (size_t k = 0; k < decomps.size(); ++k)
    if (!ideal_equal(decomps[k].target, M.summands[k].bottom))
      fail(ErrorKind::invalid_decomposition, "decomposition target does not match summand");

  // Distinct dimensions of associated primes across all summands, descending.
  std::set<int, std::greater<int>> dimset;
  for (const auto& D : decomps)
    for (const auto& c : D.components) dimset.insert(c.dim);
  std::vector<int> delta(dimset.begin(), dimset.end());
  const int t = static_cast<int>(delta.size());
  const int s = (!delta.empty() && delta.back() == 0) ? t - 1 : t;

  DimensionFiltration F;
  F.module = M;
  FiltrationLevel top;
  for (const auto& sq : M.summands) top.tops.push_back(sq.top);
  top.dim = module_dim(M);
  F.levels.push_back(std::move(top));

  for (int i = 1; i <= s; ++i) {
    FiltrationLevel lvl;
    for (size_t k = 0; k < M.summands.size(); ++k) {
      Ideal acc = Ideal::unit(M.ring);
      for (const auto& c : decomps[k].components)
        if (c.dim >= delta[i - 1]) acc = ideal_intersection(acc, c.component);
      lvl.tops.push_back(std::move(acc));
    }
    F.levels.push_back(std::move(lvl));
  }

  // Certify dimensions: strictly decreasing, matching the dimension thresholds.
  for (int i = 1; i <= s; ++i) {
    ModuleExpr Di = make_module(M.ring, [&] {
      std::vector<IdealSubquotient> sq;
      for (size_t k = 0; k < M.summands.size(); ++k)
        sq.push_back(make_subquotient(F.levels[i].tops[k], M.summands[k].bottom));
      return sq;
    }());
    F.levels[i].dim = module_dim(Di);
    int expected = (i < t) ? delta[i] : -1;
    if (F.levels[i].dim != expected)
      fail(ErrorKind::invalid_decomposition, "filtration level dimension mismatch");
  }
  if (F.levels[0].dim != delta[0])
    fail(ErrorKind::invalid_decomposition, "module dimension does not match decomposition");

  // Terminal level must be H^0_m(M), summand by summand.
  ModuleExpr H = h0_m(M);
  for (size_t k = 0; k < M.summands.size(); ++k)
    if (!ideal_equal(F.levels[s].tops[k], H.summands[k].top))
      fail(ErrorKind::invalid_decomposition, "terminal level differs from H^0; decomposition inconsistent");

  for (int i = 0; i < s; ++i) F.lambda.push_back(F.levels[i].dim);
  return F;
}

ModuleExpr level_module(const DimensionFiltration& F, int i) {
  const ModuleExpr& M = F.module;
  std::vector<IdealSubquotient> sq;
  for (size_t k = 0; k < M.summands.size(); ++k)
    sq.push_back(make_subquotient(F.levels[i].tops[k], M.summands[k].bottom));
  return make_module(M.ring, std::move(sq));
}

ModuleExpr level_quotient(const DimensionFiltration& F, int i) {
  const ModuleExpr& M = F.module;
  std::vector<IdealSubquotient> sq;
  for (size_t k = 0; k < M.summands.size(); ++k)
    sq.push_back(make_subquotient(F.levels[i].tops[k], F.levels[i + 1].tops[k]));
  return make_module(M.ring, std::move(sq));
}

Ideal level_annihilator(const DimensionFiltration& F, int i) {
  const ModuleExpr& M = F.module;
  Ideal acc = Ideal::unit(M.ring);
  for (size_t k = 0; k < M.summands.size(); ++k) {
    if (F.levels[i].tops[k].has_zero_gens()) continue;
    Ideal ann = ideal_colon(M.summands[k].bottom, F.levels[i].tops[k]);
    if (is_unit_ideal(ann)) continue;
    acc = ideal_intersection(acc, ann);
  }
  return acc;
}

ModuleExpr unmixed_component(const DimensionFiltration& F) {
  if (F.s() >= 1) return level_module(F, 1);
  // Unmixed zero-dimensional case: the largest submodule of smaller dimension is 0.
  const ModuleExpr& M = F.module;
  std::vector<IdealSubquotient> sq;
  for (const auto& s : M.summands) sq.push_back(make_subquotient(s.bottom, s.bottom));
  return make_module(M.ring, std::move(sq));
}

// ---------------------------------------------------------------------------
// Parameter systems
// ---------------------------------------------------------------------------

bool is_sop(const ModuleExpr& M, const Ideal& q) {
  int d = module_dim(M);
  if (d <= 0) return true;
  try {
    hs_length(M, q, 0);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::infinite_length) return false;
    throw;
  }
}

int minimal_generator_count(const Ideal& q) {
  if (q.has_zero_gens()) return 0;
  Ideal mq = ideal_product(irrelevant_ideal(q.ring()), q);
  std::vector<Polynomial> picked;
  int count = 0;
  for (const auto& g : q.gens()) {
    std::vector<Polynomial> probe = mq.gens();
    probe.insert(probe.end(), picked.begin(), picked.end());
    if (!ideal_member(g, Ideal(q.ring(), probe))) {
      picked.push_back(g);
      ++count;
    }
  }
  return count;
}

namespace {

Polynomial random_linear_form(Lcg& rng, const RingPtr& ring, int bound) {
  const int n = ring->nvars();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Term> ts;
    for (int v = 0; v < n; ++v) {
      long long c = rng.range(-bound, bound);
      if (c == 0) continue;
      Expo m;
      m.e[v] = 1;
      m.deg = 1;
      ts.push_back(Term{m, Coeff(static_cast<long>(c))});
    }
    Polynomial f(ring, std::move(ts));
    if (!f.is_zero()) return f;
  }
  fail(ErrorKind::retries_exhausted, "could not draw a nonzero linear form");
}

// Random homogeneous element of the ideal. Draws a target degree biased toward the
// smallest generator degree (low-degree parameters keep the power computations
// cheap), then combines the generators of degree at most the target, padded by
// random monomial multipliers.
Polynomial random_member(Lcg& rng, const Ideal& A, int bound) {
  const RingPtr& ring = A.ring();
  const auto& gens = A.basis().elements;
  int dmin = 1 << 20, dmax = 0;
  for (const auto& g : gens) {
    dmin = std::min(dmin, g.total_degree());
    dmax = std::max(dmax, g.total_degree());
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    int target = dmin;
    while (target < dmax && rng.range(0, 3) == 0) ++target;
    Polynomial acc(ring);
    for (const auto& g : gens) {
      if (g.total_degree() > target) continue;
      long long c = rng.range(-bound, bound);
      if (c == 0) continue;
      int pad = target - g.total_degree();
      Expo m;
      for (int rem = pad; rem > 0;) {
        int v = static_cast<int>(rng.range(0, ring->nvars() - 1));
        m.e[v] = static_cast<uint16_t>(m.e[v] + 1);
        m.deg += 1;
        --rem;
      }
      acc = acc + g.mul_term(m, Coeff(static_cast<long>(c)));
    }
    if (!acc.is_zero()) return acc;
  }
  fail(ErrorKind::retries_exhausted, "could not draw a nonzero ideal member");
}

}  // namespace

ParameterSystem random_parameter_system(const ModuleExpr& M, uint64_t seed, int coeff_bound,
                                        int max_tries) {
  ParameterSystem out;
  out.seed = seed;
  const int d = module_dim(M);
  if (d <= 0) {
    out.ideal = Ideal::zero(M.ring);
    out.sop = true;
    return out;
  }
  Lcg rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Polynomial> xs;
    for (int i = 0; i < d; ++i) xs.push_back(random_linear_form(rng, M.ring, coeff_bound));
    Ideal q(M.ring, xs);
    if (is_sop(M, q)) {
      out.elements = std::move(xs);
      out.ideal = std::move(q);
      out.sop = true;
      return out;
    }
  }
  fail(ErrorKind::retries_exhausted, "no parameter system found; raise coeff_bound or retries");
}

ParameterSystem distinguished_parameter_system(const ModuleExpr& M, const DimensionFiltration& F,
                                               const std::vector<PrimaryDecomposition>& decomps,
                                               uint64_t seed, int coeff_bound, int max_tries) {
  const int d = module_dim(M);
  if (d <= 0) {
    ParameterSystem out;
    out.seed = seed;
    out.ideal = Ideal::zero(M.ring);
    out.sop = out.good = out.distinguished = true;
    return out;
  }
  const int s = F.s();

  // Source ideal per level: the intersection over summands of the components of
  // dimension <= dim D_i. It annihilates D_i and keeps D_i cap (tail)M = 0.
  std::vector<Ideal> source(s + 1, Ideal::unit(M.ring));
  for (int i = 1; i <= s; ++i) {
    Ideal acc = Ideal::unit(M.ring);
    for (const auto& D : decomps)
      for (const auto& c : D.components)
        if (c.dim <= F.levels[i].dim) acc = ideal_intersection(acc, c.component);
    source[i] = std::move(acc);
  }

  Lcg rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Polynomial> xs(d, Polynomial(M.ring));
    for (int p = 1; p <= d; ++p) {
      int level = 0;
      for (int i = 1; i <= s; ++i)
        if (F.levels[i].dim < p) {
          level = i;
          break;
        }
      if (level == 0 || is_unit_ideal(source[level]))
        xs[p - 1] = random_linear_form(rng, M.ring, coeff_bound);
      else
        xs[p - 1] = random_member(rng, source[level], coeff_bound);
    }
    ParameterSystem cand;
    cand.seed = seed;
    cand.elements = xs;
    cand.ideal = Ideal(M.ring, xs);
    if (!is_sop(M, cand.ideal)) continue;
    cand.sop = true;
    auto w = is_distinguished(cand.ideal, F);
    if (!w.ok) continue;
    cand.distinguished = true;
    cand.good = is_good_system(cand, F);
    return cand;
  }
  fail(ErrorKind::retries_exhausted,
       "no distinguished system found; re-seed or enlarge the coefficient bound");
}

DistinguishedWitness is_distinguished(const Ideal& q, const DimensionFiltration& F) {
  const ModuleExpr& M = F.module;
  const int d = F.dim();
  DistinguishedWitness out;
  if (!is_sop(M, q)) fail(ErrorKind::not_sop, "ideal is not a system of parameters on the module");
  if (minimal_generator_count(q) != d)
    fail(ErrorKind::not_sop, "ideal is not minimally generated by dim M elements");

  Ideal mq = ideal_product(irrelevant_ideal(M.ring), q);
  std::vector<Polynomial> picked;  // adapted partial basis of q/mq, deepest level first
  auto independent = [&](const Polynomial& g) {
    std::vector<Polynomial> probe = mq.gens();
    probe.insert(probe.end(), picked.begin(), picked.end());
    return !ideal_member(g, Ideal(M.ring, probe));
  };

  const int s = F.s();
  std::vector<std::vector<Polynomial>> per_level(s + 1);
  for (int i = 1; i <= s; ++i) {
    ModuleExpr Di = level_module(F, i);
    int di = F.levels[i].dim;
    if (module_is_zero(Di)) {
      out.flag_dims.push_back(d);  // no condition at a zero level
      out.flag_required.push_back(0);
      continue;
    }
    Ideal Ai = level_annihilator(F, i);
    Ideal qi = ideal_intersection(q, Ai);
    int need = d - std::max(di, 0);
    for (const auto& g : qi.basis().elements) {
      if (static_cast<int>(picked.size()) >= need) break;
      if (independent(g)) {
        picked.push_back(g);
        per_level[i].push_back(g);
      }
    }
    out.flag_dims.push_back(static_cast<int>(picked.size()));
    out.flag_required.push_back(need);
    if (static_cast<int>(picked.size()) < need) {
      out.ok = false;
      return out;
    }
  }

  // Complete to a full minimal generating set with q's own generators.
  std::vector<Polynomial> fill;
  for (const auto& g : q.gens()) {
    if (static_cast<int>(picked.size()) >= d) break;
    if (independent(g)) {
      picked.push_back(g);
      fill.push_back(g);
    }
  }
  if (static_cast<int>(picked.size()) != d) {
    out.ok = false;  // should not happen when mu(q) = d
    return out;
  }

  // Assemble positions x_1..x_d: generic fill first, then level blocks from the
  // deepest level upward, so that positions beyond dim D_i all lie in Ann(D_i).
  out.witness.assign(fill.begin(), fill.end());
  for (int i = s; i >= 1; --i)
    for (const auto& g : per_level[i]) out.witness.push_back(g);
  if (!ideal_equal(Ideal(M.ring, out.witness), q)) {
    out.ok = false;  // defensive: the adapted set must regenerate q
    return out;
  }
  out.ok = true;
  return out;
}

bool is_good_system(const ParameterSystem& x, const DimensionFiltration& F) {
  if (!x.sop) fail(ErrorKind::not_sop, "good-system check needs a certified sop");
  const ModuleExpr& M = F.module;
  const int d = F.dim();
  const int s = F.s();
  for (int i = 1; i <= s; ++i) {
    int di = std::max(F.levels[i].dim, 0);
    if (module_is_zero(level_module(F, i))) continue;
    std::vector<Polynomial> tail(x.elements.begin() + di, x.elements.end());
    if (static_cast<int>(tail.size()) != d - di)
      fail(ErrorKind::not_sop, "system has the wrong number of elements");
    for (size_t k = 0; k < M.summands.size(); ++k) {
      const Ideal& J = M.summands[k].bottom;
      std::vector<Polynomial> gens;
      for (const auto& t : tail)
        for (const auto& u : M.summands[k].top.gens()) gens.push_back(t * u);
      Ideal tm = ideal_sum(J, Ideal(M.ring, std::move(gens)));
      Ideal lhs = ideal_intersection(F.levels[i].tops[k], tm);
      if (!ideal_contains(J, lhs)) return false;
    }
  }
  return true;
}

}  // namespace seqcm
