#include "seqcm/module.hpp"

namespace seqcm {

bool is_homogeneous_ideal(const Ideal& I) {
  bool raw = true;
  for (const auto& g : I.gens())
    if (!g.is_homogeneous()) {
      raw = false;
      break;
    }
  if (raw) return true;
  // An ideal is homogeneous iff its reduced basis is (elimination can hand back
  // inhomogeneous generators for a homogeneous ideal).
  for (const auto& g : I.basis().elements)
    if (!g.is_homogeneous()) return false;
  return true;
}

IdealSubquotient make_subquotient(Ideal top, Ideal bottom) {
  check_same_ring(top.ring(), bottom.ring());
  if (!is_homogeneous_ideal(top) || !is_homogeneous_ideal(bottom))
    fail(ErrorKind::inhomogeneous, "module data must be homogeneous");
  for (const auto& g : bottom.gens())
    if (!ideal_member(g, top))
      fail(ErrorKind::containment, "subquotient bottom not contained in top: " + g.str());
  return IdealSubquotient{std::move(top), std::move(bottom)};
}

int subquotient_dim(const IdealSubquotient& S) {
  if (S.top.has_zero_gens()) return -1;  // zero module
  Ideal ann = ideal_colon(S.bottom, S.top);
  if (is_unit_ideal(ann)) return -1;
  return krull_dimension(ann);
}

Length subquotient_length(const IdealSubquotient& S) {
  return ideal_subquotient_length(S.top, S.bottom);
}

bool subquotient_is_zero(const IdealSubquotient& S) { return ideal_contains(S.bottom, S.top); }

ModuleExpr make_module(RingPtr ring, std::vector<IdealSubquotient> summands) {
  if (summands.empty()) fail(ErrorKind::unsupported, "module needs at least one summand");
  for (const auto& s : summands) {
    check_same_ring(ring, s.top.ring());
    check_same_ring(ring, s.bottom.ring());
  }
  return ModuleExpr{std::move(ring), std::move(summands)};
}

ModuleExpr cyclic_module(const Ideal& bottom) {
  RingPtr ring = bottom.ring();
  return make_module(ring, {make_subquotient(Ideal::unit(ring), bottom)});
}

ModuleExpr direct_sum(const ModuleExpr& a, const ModuleExpr& b) {
  check_same_ring(a.ring, b.ring);
  std::vector<IdealSubquotient> s = a.summands;
  s.insert(s.end(), b.summands.begin(), b.summands.end());
  return make_module(a.ring, std::move(s));
}

int module_dim(const ModuleExpr& M) {
  int d = -1;
  for (const auto& s : M.summands) d = std::max(d, subquotient_dim(s));
  return d;
}

Length module_length(const ModuleExpr& M) {
  unsigned long long total = 0;
  for (const auto& s : M.summands) {
    Length l = subquotient_length(s);
    if (!l.finite) return Length::infinite();
    total += l.value;
  }
  return Length::of(total);
}

bool module_is_zero(const ModuleExpr& M) {
  for (const auto& s : M.summands)
    if (!subquotient_is_zero(s)) return false;
  return true;
}

Ideal module_annihilator(const ModuleExpr& M) {
  Ideal acc = Ideal::unit(M.ring);
  for (const auto& s : M.summands) {
    if (s.top.has_zero_gens()) continue;  // zero summand is annihilated by everything
    acc = ideal_intersection(acc, ideal_colon(s.bottom, s.top));
  }
  return acc;
}

ModuleExpr submodule_from_tops(const ModuleExpr& M, const std::vector<Ideal>& tops) {
  if (tops.size() != M.summands.size()) fail(ErrorKind::unsupported, "one top ideal per summand required");
  std::vector<IdealSubquotient> s;
  s.reserve(tops.size());
  for (size_t k = 0; k < tops.size(); ++k) {
    if (!ideal_contains(M.summands[k].top, tops[k]))
      fail(ErrorKind::containment, "submodule top not inside the ambient top");
    s.push_back(make_subquotient(tops[k], M.summands[k].bottom));
  }
  return make_module(M.ring, std::move(s));
}

ModuleExpr quotient_by_tops(const ModuleExpr& M, const std::vector<Ideal>& tops) {
  if (tops.size() != M.summands.size()) fail(ErrorKind::unsupported, "one top ideal per summand required");
  std::vector<IdealSubquotient> s;
  s.reserve(tops.size());
  for (size_t k = 0; k < tops.size(); ++k) s.push_back(make_subquotient(M.summands[k].top, tops[k]));
  return make_module(M.ring, std::move(s));
}

ModuleExpr quotient_by_element(const ModuleExpr& M, const Polynomial& x) {
  std::vector<IdealSubquotient> s;
  s.reserve(M.summands.size());
  for (const auto& sq : M.summands) {
    std::vector<Polynomial> extra;
    for (const auto& u : sq.top.gens()) extra.push_back(x * u);
    Ideal bottom = ideal_sum(sq.bottom, Ideal(M.ring, std::move(extra)));
    s.push_back(make_subquotient(sq.top, std::move(bottom)));
  }
  return make_module(M.ring, std::move(s));
}

ModuleExpr annihilator_submodule(const ModuleExpr& M, const Polynomial& x) {
  std::vector<IdealSubquotient> s;
  s.reserve(M.summands.size());
  for (const auto& sq : M.summands) {
    Ideal top = ideal_intersection(sq.top, ideal_colon(sq.bottom, x));
    s.push_back(make_subquotient(std::move(top), sq.bottom));
  }
  return make_module(M.ring, std::move(s));
}

ModuleExpr h0_m(const ModuleExpr& M) {
  Ideal m = irrelevant_ideal(M.ring);
  std::vector<IdealSubquotient> s;
  s.reserve(M.summands.size());
  for (const auto& sq : M.summands) {
    Ideal torsion = saturation(sq.bottom, m).ideal;
    Ideal top = ideal_intersection(torsion, sq.top);
    s.push_back(make_subquotient(std::move(top), sq.bottom));
  }
  return make_module(M.ring, std::move(s));
}

unsigned long long h0_length(const ModuleExpr& M) {
  Length l = module_length(h0_m(M));
  if (!l.finite) fail(ErrorKind::infinite_length, "H^0 came out infinite; internal error");
  return l.value;
}

}  // namespace seqcm
