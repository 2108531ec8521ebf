#ifndef SEQCM_MODULE_HPP
#define SEQCM_MODULE_HPP

#include <vector>

#include "seqcm/groebner.hpp"

namespace seqcm {

// The module U/J for nested homogeneous ideals J inside U. All module-level
// computations live in the graded model, where lengths of m-primary quotients agree
// with the local model at the irrelevant maximal ideal; homogeneity is enforced at
// construction to keep that identification exact.
struct IdealSubquotient {
  Ideal top;     // U
  Ideal bottom;  // J
};

bool is_homogeneous_ideal(const Ideal& I);

// Verifies homogeneity and the containment J inside U (normal forms of J's
// generators against U vanish).
IdealSubquotient make_subquotient(Ideal top, Ideal bottom);

// dim of U/J as dim R/(J : U); -1 for the zero module.
int subquotient_dim(const IdealSubquotient& S);
Length subquotient_length(const IdealSubquotient& S);
bool subquotient_is_zero(const IdealSubquotient& S);

// Finite direct sum of subquotients of one ring. Cyclic summands have top = (1).
struct ModuleExpr {
  RingPtr ring;
  std::vector<IdealSubquotient> summands;
};

ModuleExpr make_module(RingPtr ring, std::vector<IdealSubquotient> summands);
ModuleExpr cyclic_module(const Ideal& bottom);
ModuleExpr direct_sum(const ModuleExpr& a, const ModuleExpr& b);

int module_dim(const ModuleExpr& M);  // -1 for the zero module
Length module_length(const ModuleExpr& M);
bool module_is_zero(const ModuleExpr& M);
Ideal module_annihilator(const ModuleExpr& M);

// Per-summand submodule N = sum of V_k/J_k given the intermediate ideals V_k
// (J_k inside V_k inside U_k), and the quotient M/N = sum of U_k/V_k.
ModuleExpr submodule_from_tops(const ModuleExpr& M, const std::vector<Ideal>& tops);
ModuleExpr quotient_by_tops(const ModuleExpr& M, const std::vector<Ideal>& tops);

// M/xM: per summand U/(J + x*U).
ModuleExpr quotient_by_element(const ModuleExpr& M, const Polynomial& x);
// 0 :_M x as a submodule: per summand (U cap (J : x))/J.
ModuleExpr annihilator_submodule(const ModuleExpr& M, const Polynomial& x);

// H^0_m(M): per summand ((J : m^infinity) cap U)/J. Always finite length.
ModuleExpr h0_m(const ModuleExpr& M);
unsigned long long h0_length(const ModuleExpr& M);

}  // namespace seqcm

#endif
