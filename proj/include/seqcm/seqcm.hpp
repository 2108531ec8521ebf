#ifndef SEQCM_SEQCM_HPP
#define SEQCM_SEQCM_HPP

#include <string>

#include "seqcm/degrees.hpp"

namespace seqcm {

enum class Verdict { yes, no, not_applicable };

std::string verdict_str(Verdict v);

struct Comparison {
  int j = 0;            // comparison index in the relevant theorem statement
  long long lhs = 0;    // coefficient side
  long long rhs = 0;    // signed arithmetic-degree side
  bool pass = false;
};

struct OracleLevel {
  int level = 0;
  int dim = 0;
  unsigned long long length_mod_params = 0;  // l(Q_i / (x_1..x_{d_i}) Q_i)
  long long e0 = 0;
  bool cohen_macaulay = false;
};

struct SeqCMReport {
  std::string mode;
  std::vector<std::string> q_gens;
  bool q_distinguished = false;
  std::vector<long long> e;
  std::vector<long long> ardeg;
  std::vector<Comparison> comparisons;
  std::vector<OracleLevel> oracle_levels;
  Verdict verdict = Verdict::not_applicable;
};

// Bundles a module with its per-summand primary decompositions and filtration so the
// theorem surface can pick routes freely.
struct ModuleData {
  ModuleExpr M;
  std::vector<PrimaryDecomposition> decomps;
  DimensionFiltration F;
};

ModuleData analyze_module(const ModuleExpr& M, const std::vector<PrimaryDecomposition>& decomps);
ModuleData analyze_module(const ModuleExpr& M);  // decomposes monomial summands automatically

// dim-2 criterion: e_1(q,M) = -ardeg_1(q,M) decides sequential Cohen-Macaulayness for
// any parameter ideal (no distinguishedness needed in dimension two).
SeqCMReport check_dim2(const ModuleData& D, const Ideal& q);

enum class SignatureMode { full, lambda };

// Full signature: e_j(q,M) = (-1)^j ardeg_{d-j}(q,M) for j = 0..d.
// Lambda signature: e_{d-j+1}(q,M) = (-1)^{d-j+1} ardeg_{j-1}(q,M) for j in Lambda(M).
// The verdict is meaningful only for distinguished q; otherwise the comparisons are
// reported with verdict not-applicable.
SeqCMReport check_signature(const ModuleData& D, const Ideal& q, SignatureMode mode);

// Length criterion l(M/qM) = e_0(q,M) for a parameter ideal presented by exactly
// dim M generators.
bool is_cohen_macaulay(const ModuleExpr& M, const Ideal& q);

// Independent oracle: builds a distinguished system from the seed and tests every
// filtration quotient D_i/D_{i+1} for Cohen-Macaulayness by the length criterion.
SeqCMReport sequential_cm_oracle(const ModuleData& D, uint64_t seed);

struct CorollaryReport {
  long long e1 = 0;
  long long ardeg_top_minus_1 = 0;
  bool bound_holds = false;          // e_1 <= -ardeg_{d-1}
  bool nonpositive = false;          // e_1 <= 0
  bool extremal_equality = false;    // e_1 == -ardeg_{d-1}
  bool quotient_unmixed_cm = false;  // M/U_M(0) Cohen-Macaulay
  bool extremal_matches_cm = false;  // the two above coincide
  int dim_unmixed = -1;
  bool zero_case_consistent = false;  // e_1 = 0 iff (M/U CM and dim U <= d-2)
  bool unmixed = false;
  bool vasconcelos_consistent = true;  // unmixed: e_1 >= 0 iff CM
};

// Evaluates the extremal-value corollaries for the given parameter system ideal
// (presented by dim M generators).
CorollaryReport corollary_checks(const ModuleData& D, const Ideal& q);

struct PartialSumReport {
  bool applicable = false;  // hypothesis (M/D_j sequentially CM, x distinguished) certified
  std::vector<long long> level_e0;                // e_0(q, D_i) for i < j
  std::vector<unsigned long long> lhs, rhs;       // compared window values
  int window_start = 0;
  bool identity_holds = false;
  std::vector<Comparison> coefficient_consequence;  // (-1)^{d-d_i} e_{d-d_i} = e_0(q,D_i)
  bool coefficients_match = false;
};

// l(M/q^{n+1}M) = sum_{i<j} binom(n+d_i, d_i) e_0(q,D_i) + l(D_j/q^{n+1}D_j) on a
// window past stabilization of both sides, for a distinguished system x and j with
// M/D_j sequentially Cohen-Macaulay (certified by the oracle).
PartialSumReport partial_sum_identity_check(const ModuleData& D, const ParameterSystem& x, int j,
                                            int window = 5, uint64_t oracle_seed = 1);

}  // namespace seqcm

#endif
