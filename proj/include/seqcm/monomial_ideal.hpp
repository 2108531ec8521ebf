#ifndef SEQCM_MONOMIAL_IDEAL_HPP
#define SEQCM_MONOMIAL_IDEAL_HPP

#include <optional>
#include <vector>

#include "seqcm/groebner.hpp"

namespace seqcm {

// One primary component of a decomposition, with its radical prime and dimension.
struct PrimaryComponent {
  Ideal component;
  Ideal radical_prime;
  int dim = 0;
  mutable std::optional<unsigned long long> multiplicity_cache;
};

struct PrimaryDecomposition {
  Ideal target;
  std::vector<PrimaryComponent> components;
  enum class Provenance { computed_monomial, user_supplied } provenance = Provenance::computed_monomial;
  std::vector<std::string> warnings;
};

// Decomposition of a monomial ideal into irreducible monomial ideals (each generated
// by pure variable powers), irredundant.
std::vector<Ideal> irreducible_decomposition(const Ideal& I);

// Irreducible components grouped by common radical and intersected per group.
// Components are sorted by dimension descending, radicals pairwise distinct.
PrimaryDecomposition primary_decomposition_monomial(const Ideal& I);

// Validates a user-supplied decomposition: intersection equals the target, radicals
// pairwise distinct, no redundant component. Primaryness itself is trusted and a
// warning recorded. Non-monomial components require their prime to be supplied.
PrimaryDecomposition user_decomposition(const Ideal& target, const std::vector<Ideal>& components,
                                        const std::vector<std::optional<Ideal>>& primes);

struct AssociatedPrime {
  Ideal prime;
  int dim = 0;
};

// Radicals of the components with their dimensions, sorted by dimension descending.
std::vector<AssociatedPrime> associated_primes(const PrimaryDecomposition& D);
// The subset of associated primes attaining max dimension.
std::vector<AssociatedPrime> assh(const PrimaryDecomposition& D);

// Length-multiplicity of R/target at a monomial prime p: the length of the p-torsion
// of the localization, computed in the polynomial ring on p's variables after
// inverting the others. Zero iff p is not associated.
unsigned long long length_multiplicity(const PrimaryDecomposition& D, const Ideal& p);

// Support variables of a monomial prime (indices); fails on non-monomial input.
std::vector<int> prime_support(const Ideal& p);

}  // namespace seqcm

#endif
