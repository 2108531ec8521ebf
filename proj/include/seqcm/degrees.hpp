#ifndef SEQCM_DEGREES_HPP
#define SEQCM_DEGREES_HPP

#include "seqcm/structure.hpp"

namespace seqcm {

enum class ArdegRoute { direct, filtration, both };

struct ArdegVector {
  std::vector<long long> values;  // indices 0..dim M
  ArdegRoute route = ArdegRoute::direct;

  long long at(int i) const { return (i >= 0 && i < static_cast<int>(values.size())) ? values[i] : 0; }
};

// Definition route: ardeg_i = sum over associated primes of dimension i of
// mult_M(p) * e_0(q, R/p); multiplicities add over direct summands. Requires
// monomial associated primes (length-multiplicity has no other route).
ArdegVector arithmetic_degree_direct(const ModuleExpr& M, const Ideal& q,
                                     const std::vector<PrimaryDecomposition>& decomps);

// Filtration route: ardeg_0 = l(H^0_m(M)), ardeg_{dim D_i} = e_0(q, D_i) for the
// filtration levels, zero elsewhere.
ArdegVector arithmetic_degree_filtration(const DimensionFiltration& F, const Ideal& q);

// Computes by the cheapest applicable route; with ArdegRoute::both, computes both and
// demands entrywise agreement.
ArdegVector arithmetic_degree(const ModuleExpr& M, const Ideal& q, const DimensionFiltration& F,
                              const std::vector<PrimaryDecomposition>& decomps,
                              ArdegRoute route = ArdegRoute::both);

}  // namespace seqcm

#endif
