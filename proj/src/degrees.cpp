#include "seqcm/degrees.hpp"

namespace seqcm {

ArdegVector arithmetic_degree_direct(const ModuleExpr& M, const Ideal& q,
                                     const std::vector<PrimaryDecomposition>& decomps) {
  if (decomps.size() != M.summands.size())
    fail(ErrorKind::route_unavailable, "direct route needs one decomposition per summand");
  const int d = module_dim(M);
  ArdegVector out;
  out.route = ArdegRoute::direct;
  out.values.assign(d + 1, 0);

  // Collect distinct associated primes with summed multiplicities.
  std::vector<std::pair<AssociatedPrime, unsigned long long>> primes;
  for (size_t k = 0; k < M.summands.size(); ++k) {
    if (!is_unit_ideal(M.summands[k].top))
      fail(ErrorKind::route_unavailable, "direct route applies to direct sums of cyclics");
    for (const auto& ap : associated_primes(decomps[k])) {
      unsigned long long m = length_multiplicity(decomps[k], ap.prime);
      bool merged = false;
      for (auto& [p, acc] : primes)
        if (ideal_equal(p.prime, ap.prime)) {
          acc += m;
          merged = true;
          break;
        }
      if (!merged) primes.push_back({ap, m});
    }
  }
  for (const auto& [ap, mult] : primes) {
    long long e0p = hilbert_coefficients(cyclic_module(ap.prime), q).e0();
    out.values[ap.dim] += static_cast<long long>(mult) * e0p;
  }
  return out;
}

ArdegVector arithmetic_degree_filtration(const DimensionFiltration& F, const Ideal& q) {
  const ModuleExpr& M = F.module;
  const int d = F.dim();
  ArdegVector out;
  out.route = ArdegRoute::filtration;
  out.values.assign(d + 1, 0);
  out.values[0] = static_cast<long long>(h0_length(M));
  for (int i = 0; i < F.s(); ++i) {
    ModuleExpr Di = level_module(F, i);
    out.values[F.levels[i].dim] = hilbert_coefficients(Di, q).e0();
  }
  return out;
}

ArdegVector arithmetic_degree(const ModuleExpr& M, const Ideal& q, const DimensionFiltration& F,
                              const std::vector<PrimaryDecomposition>& decomps, ArdegRoute route) {
  if (route == ArdegRoute::direct) return arithmetic_degree_direct(M, q, decomps);
  if (route == ArdegRoute::filtration) return arithmetic_degree_filtration(F, q);
  ArdegVector flt = arithmetic_degree_filtration(F, q);
  ArdegVector dir;
  try {
    dir = arithmetic_degree_direct(M, q, decomps);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::route_unavailable) return flt;  // only one route applies
    throw;
  }
  if (dir.values != flt.values)
    fail(ErrorKind::invalid_decomposition, "arithmetic-degree routes disagree; data inconsistent");
  dir.route = ArdegRoute::both;
  return dir;
}

}  // namespace seqcm
