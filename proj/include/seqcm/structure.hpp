#ifndef SEQCM_STRUCTURE_HPP
#define SEQCM_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "seqcm/hilbert.hpp"

namespace seqcm {

// Documented deterministic generator so certificates are reproducible bit-for-bit:
//   state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
// and draws use the top 31 bits of the advanced state.
class Lcg {
 public:
  explicit Lcg(uint64_t seed) : state_(seed) {}
  uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 33;
  }
  // uniform-ish in [lo, hi]
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  uint64_t state_;
};

// The chain M = D_0 > D_1 > ... > D_s = H^0_m(M), each level the largest submodule of
// the previous one of strictly smaller dimension; levels are stored as one top ideal
// per summand (level module = sum of tops[k]/bottom_k).
struct FiltrationLevel {
  std::vector<Ideal> tops;
  int dim = -1;
};

struct DimensionFiltration {
  ModuleExpr module;
  std::vector<FiltrationLevel> levels;  // levels[0] is M itself
  std::vector<int> lambda;              // dims of levels 0..s-1 (positive, strictly decreasing)

  int s() const { return static_cast<int>(levels.size()) - 1; }
  int dim() const { return levels.empty() ? -1 : levels[0].dim; }
};

// Builds the filtration from per-summand primary decompositions (summands must be
// cyclic). The terminal level is cross-checked against H^0_m(M).
DimensionFiltration dimension_filtration(const ModuleExpr& M,
                                         const std::vector<PrimaryDecomposition>& decomps);

ModuleExpr level_module(const DimensionFiltration& F, int i);            // D_i
ModuleExpr level_quotient(const DimensionFiltration& F, int i);          // D_i / D_{i+1}
Ideal level_annihilator(const DimensionFiltration& F, int i);            // Ann D_i
// Largest submodule of dimension < dim M (the level-1 module; zero when M is unmixed).
ModuleExpr unmixed_component(const DimensionFiltration& F);

struct ParameterSystem {
  std::vector<Polynomial> elements;  // ordered x_1..x_d
  Ideal ideal;
  bool sop = false;
  bool good = false;
  bool distinguished = false;
  uint64_t seed = 0;
};

// l(M/qM) finite, i.e. q + Ann M is m-primary (graded model: homogeneous data only).
bool is_sop(const ModuleExpr& M, const Ideal& q);

// Minimal generator count of q in the local model: dim_k q/mq.
int minimal_generator_count(const Ideal& q);

// Seeded search for d random degree-one parameters with integer coefficients in
// [-coeff_bound, coeff_bound]; deterministic given the seed.
ParameterSystem random_parameter_system(const ModuleExpr& M, uint64_t seed, int coeff_bound = 3,
                                        int max_tries = 200);

// Constructs a system adapted to the filtration: positions beyond dim D_i are drawn
// from the intersection of the low-dimensional primary components (which annihilates
// D_i), remaining positions generic degree one. Certified good + distinguished.
ParameterSystem distinguished_parameter_system(const ModuleExpr& M, const DimensionFiltration& F,
                                               const std::vector<PrimaryDecomposition>& decomps,
                                               uint64_t seed, int coeff_bound = 3, int max_tries = 400);

struct DistinguishedWitness {
  bool ok = false;
  std::vector<Polynomial> witness;       // adapted generating set when ok
  std::vector<int> flag_dims;            // dim of V_i per level i = 1..s
  std::vector<int> flag_required;        // d - d_i per level
};

// Decides whether the ideal q admits a distinguished generating set for F, via the
// nested-subspace criterion in q/mq: V_i = image of q cap Ann(D_i) must have
// dimension at least d - dim D_i at every level (and all of q must sit over
// Ann(H^0) when the terminal level is nonzero).
DistinguishedWitness is_distinguished(const Ideal& q, const DimensionFiltration& F);

// D_i cap (x_{d_i+1},...,x_d) M = 0 at every filtration level.
bool is_good_system(const ParameterSystem& x, const DimensionFiltration& F);

}  // namespace seqcm

#endif
