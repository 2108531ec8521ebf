#include "seqcm/monomial_ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace seqcm {

namespace {

std::vector<Expo> minimal_monomials(std::vector<Expo> ms) {
  std::sort(ms.begin(), ms.end(), [](const Expo& a, const Expo& b) { return a.deg < b.deg; });
  std::vector<Expo> out;
  for (const auto& m : ms) {
    bool redundant = false;
    for (const auto& n : out)
      if (expo_divides(n, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

Ideal monomials_to_ideal(const RingPtr& ring, const std::vector<Expo>& ms) {
  std::vector<Polynomial> gens;
  gens.reserve(ms.size());
  for (const auto& m : ms) gens.push_back(Polynomial::monomial(ring, m));
  return Ideal(ring, std::move(gens));
}

uint32_t support_mask(const Expo& m, int n) {
  uint32_t mask = 0;
  for (int v = 0; v < n; ++v)
    if (m.e[v]) mask |= (1u << v);
  return mask;
}

bool is_pure_power(const Expo& m, int n) {
  int sup = 0;
  for (int v = 0; v < n; ++v)
    if (m.e[v]) ++sup;
  return sup <= 1;
}

// Recursive splitting on a mixed-support generator x^a * rest:
//   I = (I + x^a) cap (I + rest).
void split_irreducible(const RingPtr& ring, std::vector<Expo> gens, std::vector<std::vector<Expo>>& out) {
  const int n = ring->nvars();
  gens = minimal_monomials(std::move(gens));
  for (size_t i = 0; i < gens.size(); ++i) {
    if (is_pure_power(gens[i], n)) continue;
    int v = 0;
    while (gens[i].e[v] == 0) ++v;
    Expo pure;
    pure.e[v] = gens[i].e[v];
    pure.deg = gens[i].e[v];
    Expo rest = expo_div(gens[i], pure);
    auto with = [&](const Expo& extra) {
      std::vector<Expo> next = gens;
      next.erase(next.begin() + static_cast<long>(i));
      next.push_back(extra);
      return next;
    };
    split_irreducible(ring, with(pure), out);
    split_irreducible(ring, with(rest), out);
    return;
  }
  out.push_back(std::move(gens));
}

std::vector<Expo> monomial_intersection(const std::vector<Expo>& a, const std::vector<Expo>& b) {
  std::vector<Expo> ms;
  ms.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) ms.push_back(expo_lcm(x, y));
  return minimal_monomials(std::move(ms));
}

void require_monomial(const Ideal& I) {
  if (!is_monomial_ideal(I)) fail(ErrorKind::unsupported, "operation requires a monomial ideal");
}

// Drops components whose removal leaves the intersection unchanged.
template <typename T, typename IntersectFn, typename ContainsFn>
std::vector<T> drop_redundant(std::vector<T> comps, IntersectFn inter_all_except, ContainsFn contains) {
  for (size_t i = 0; i < comps.size();) {
    if (comps.size() == 1) break;
    auto rest = inter_all_except(comps, i);
    if (contains(comps[i], rest)) {
      comps.erase(comps.begin() + static_cast<long>(i));
      i = 0;  // restart: earlier components may become redundant
    } else {
      ++i;
    }
  }
  return comps;
}

}  // namespace

std::vector<Ideal> irreducible_decomposition(const Ideal& I) {
  require_monomial(I);
  if (is_unit_ideal(I)) fail(ErrorKind::unit_ideal, "cannot decompose the unit ideal");
  const RingPtr& ring = I.ring();
  std::vector<std::vector<Expo>> raw;
  split_irreducible(ring, monomial_gens(I), raw);

  // Deduplicate by canonical minimal generators.
  std::sort(raw.begin(), raw.end(), [](const std::vector<Expo>& a, const std::vector<Expo>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].deg != b[i].deg) return a[i].deg < b[i].deg;
      if (a[i].e != b[i].e) return a[i].e < b[i].e;
    }
    return false;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  auto inter_except = [&](const std::vector<std::vector<Expo>>& comps, size_t skip) {
    std::vector<Expo> acc;
    bool first = true;
    for (size_t j = 0; j < comps.size(); ++j) {
      if (j == skip) continue;
      acc = first ? comps[j] : monomial_intersection(acc, comps[j]);
      first = false;
    }
    return acc;
  };
  auto contains_mono = [&](const std::vector<Expo>& big, const std::vector<Expo>& small) {
    for (const auto& m : small) {
      bool inside = false;
      for (const auto& g : big)
        if (expo_divides(g, m)) {
          inside = true;
          break;
        }
      if (!inside) return false;
    }
    return true;
  };
  raw = drop_redundant(std::move(raw), inter_except, contains_mono);

  std::vector<Ideal> out;
  out.reserve(raw.size());
  for (auto& ms : raw) {
    // Canonical per-component generator order: sort monomials.
    std::sort(ms.begin(), ms.end(), [](const Expo& a, const Expo& b) {
      if (a.deg != b.deg) return a.deg < b.deg;
      return a.e < b.e;
    });
    out.push_back(monomials_to_ideal(I.ring(), ms));
  }
  return out;
}

std::vector<int> prime_support(const Ideal& p) {
  const int n = p.ring()->nvars();
  std::vector<int> sup;
  for (const auto& g : p.basis().elements) {
    if (!g.is_monomial() || g.lm().deg != 1)
      fail(ErrorKind::route_unavailable, "prime is not generated by variables");
    for (int v = 0; v < n; ++v)
      if (g.lm().e[v]) sup.push_back(v);
  }
  std::sort(sup.begin(), sup.end());
  return sup;
}

PrimaryDecomposition primary_decomposition_monomial(const Ideal& I) {
  require_monomial(I);
  if (is_unit_ideal(I)) fail(ErrorKind::unit_ideal, "cannot decompose the unit ideal");
  const RingPtr& ring = I.ring();
  const int n = ring->nvars();
  auto irreducibles = irreducible_decomposition(I);

  // Group by radical: for irreducible monomial ideals the radical is the support prime.
  std::map<uint32_t, std::vector<Expo>> groups;
  for (const auto& comp : irreducibles) {
    auto ms = monomial_gens(comp);
    uint32_t mask = 0;
    for (const auto& m : ms) mask |= support_mask(m, n);
    auto it = groups.find(mask);
    if (it == groups.end())
      groups.emplace(mask, ms);
    else
      it->second = monomial_intersection(it->second, ms);
  }

  PrimaryDecomposition D;
  D.target = I;
  D.provenance = PrimaryDecomposition::Provenance::computed_monomial;
  for (const auto& [mask, ms] : groups) {
    PrimaryComponent pc;
    pc.component = monomials_to_ideal(ring, ms);
    std::vector<Polynomial> pvars;
    int popcount = 0;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) {
        pvars.push_back(Polynomial::variable(ring, v));
        ++popcount;
      }
    pc.radical_prime = Ideal(ring, std::move(pvars));
    pc.dim = n - popcount;
    D.components.push_back(std::move(pc));
  }
  std::sort(D.components.begin(), D.components.end(),
            [](const PrimaryComponent& a, const PrimaryComponent& b) { return a.dim > b.dim; });

  // Invariants promised to callers: exact intersection, distinct radicals, irredundancy.
  Ideal inter = Ideal::unit(ring);
  for (const auto& c : D.components) inter = ideal_intersection(inter, c.component);
  if (!ideal_equal(inter, I)) fail(ErrorKind::invalid_decomposition, "component intersection mismatch");
  for (size_t i = 0; i < D.components.size(); ++i)
    for (size_t j = i + 1; j < D.components.size(); ++j)
      if (ideal_equal(D.components[i].radical_prime, D.components[j].radical_prime))
        fail(ErrorKind::invalid_decomposition, "duplicate radicals after grouping");
  for (size_t i = 0; i < D.components.size() && D.components.size() > 1; ++i) {
    Ideal rest = Ideal::unit(ring);
    for (size_t j = 0; j < D.components.size(); ++j)
      if (j != i) rest = ideal_intersection(rest, D.components[j].component);
    if (ideal_equal(rest, I)) fail(ErrorKind::invalid_decomposition, "redundant primary component");
  }
  return D;
}

PrimaryDecomposition user_decomposition(const Ideal& target, const std::vector<Ideal>& components,
                                        const std::vector<std::optional<Ideal>>& primes) {
  if (components.empty()) fail(ErrorKind::invalid_decomposition, "no components supplied");
  const RingPtr& ring = target.ring();
  PrimaryDecomposition D;
  D.target = target;
  D.provenance = PrimaryDecomposition::Provenance::user_supplied;
  D.warnings.push_back("primaryness of user-supplied components is trusted, not verified");
  for (size_t i = 0; i < components.size(); ++i) {
    PrimaryComponent pc;
    pc.component = components[i];
    if (i < primes.size() && primes[i].has_value()) {
      pc.radical_prime = *primes[i];
    } else if (is_monomial_ideal(components[i])) {
      const int n = ring->nvars();
      uint32_t mask = 0;
      for (const auto& m : monomial_gens(components[i])) mask |= support_mask(m, n);
      std::vector<Polynomial> pvars;
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) pvars.push_back(Polynomial::variable(ring, v));
      pc.radical_prime = Ideal(ring, std::move(pvars));
    } else {
      fail(ErrorKind::invalid_decomposition,
           "non-monomial component needs its radical prime supplied");
    }
    pc.dim = krull_dimension(pc.radical_prime);
    D.components.push_back(std::move(pc));
  }
  std::sort(D.components.begin(), D.components.end(),
            [](const PrimaryComponent& a, const PrimaryComponent& b) { return a.dim > b.dim; });

  Ideal inter = Ideal::unit(ring);
  for (const auto& c : D.components) inter = ideal_intersection(inter, c.component);
  if (!ideal_equal(inter, target))
    fail(ErrorKind::invalid_decomposition, "components do not intersect to the target");
  for (size_t i = 0; i < D.components.size(); ++i)
    for (size_t j = i + 1; j < D.components.size(); ++j)
      if (ideal_equal(D.components[i].radical_prime, D.components[j].radical_prime))
        fail(ErrorKind::invalid_decomposition, "radicals not pairwise distinct");
  for (size_t i = 0; i < D.components.size() && D.components.size() > 1; ++i) {
    Ideal rest = Ideal::unit(ring);
    for (size_t j = 0; j < D.components.size(); ++j)
      if (j != i) rest = ideal_intersection(rest, D.components[j].component);
    if (ideal_equal(rest, target)) fail(ErrorKind::invalid_decomposition, "redundant component");
  }
  return D;
}

std::vector<AssociatedPrime> associated_primes(const PrimaryDecomposition& D) {
  std::vector<AssociatedPrime> out;
  out.reserve(D.components.size());
  for (const auto& c : D.components) out.push_back(AssociatedPrime{c.radical_prime, c.dim});
  std::sort(out.begin(), out.end(), [](const AssociatedPrime& a, const AssociatedPrime& b) { return a.dim > b.dim; });
  return out;
}

std::vector<AssociatedPrime> assh(const PrimaryDecomposition& D) {
  auto all = associated_primes(D);
  if (all.empty()) return all;
  int top = all.front().dim;
  std::vector<AssociatedPrime> out;
  for (auto& p : all)
    if (p.dim == top) out.push_back(p);
  return out;
}

unsigned long long length_multiplicity(const PrimaryDecomposition& D, const Ideal& p) {
  auto sup = prime_support(p);
  bool found = false;
  for (const auto& c : D.components)
    if (ideal_equal(c.radical_prime, p)) found = true;
  if (!found) return 0;  // by convention; not an associated prime

  if (!is_monomial_ideal(D.target))
    fail(ErrorKind::route_unavailable, "length-multiplicity needs a monomial target");

  // The zero prime: localization at (0) is the fraction field, and an associated (0)
  // forces a torsion-free rank-one cyclic piece.
  if (sup.empty()) return 1;

  // Localize: invert the variables outside p, i.e. delete them from every generator,
  // and work in the polynomial ring on p's variables.
  const RingPtr& ring = D.target.ring();
  std::vector<std::string> small_vars;
  for (int v : sup) small_vars.push_back(ring->vars[v]);
  RingPtr small = make_ring(small_vars, ring->field, MonomialOrder::grevlex());
  std::vector<Polynomial> small_gens;
  for (const auto& m : monomial_gens(D.target)) {
    Expo sm;
    for (size_t i = 0; i < sup.size(); ++i) {
      sm.e[i] = m.e[sup[i]];
      sm.deg += m.e[sup[i]];
    }
    small_gens.push_back(Polynomial::monomial(small, sm));
  }
  Ideal localized(small, std::move(small_gens));
  Ideal pprime = irrelevant_ideal(small);
  Ideal torsion = saturation(localized, pprime).ideal;
  Length len = ideal_subquotient_length(torsion, localized);
  if (!len.finite) fail(ErrorKind::infinite_length, "torsion length not finite");
  return len.value;
}

}  // namespace seqcm
