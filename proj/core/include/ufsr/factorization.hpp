#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ufsr/algebra.hpp"

namespace ufsr {

/// Answer of a predicate that may be undecidable by the bounded search used
/// over infinite fields. Over finite fields it is never Undecided.
enum class Tri { False, True, Undecided };
std::string to_string(Tri t);

/// b in R a R.
bool divides(const Element& a, const Element& b);

/// Units u, v with a = u * b * v.
struct AssociateCertificate {
  Element u;
  Element v;
};

/// Exhaustive over finite fields. Over Q: a linear necessary condition
/// refutes; one-sided solves and a sandwich sweep with u = 1 +- m confirm.
Tri are_associates_tri(const Element& a, const Element& b);
std::optional<AssociateCertificate> associate_certificate(const Element& a, const Element& b);
/// Throws Unsupported when the tri-state answer is Undecided.
bool are_associates(const Element& a, const Element& b);

/// aR == Ra.
bool is_normal(const Element& a);
/// Left multiplication by a is injective.
bool is_regular(const Element& a);
/// a * x != 0 for every nonzero homogeneous x.
bool is_regular_homogeneous_criterion(const Element& a);

/// Throws PreconditionError for 0 and units.
Tri is_irreducible_tri(const Element& a);
bool is_irreducible(const Element& a);

/// pR is a prime ideal. Throws PreconditionError unless p is normal, nonzero
/// and a non-unit.
bool is_prime_element(const Element& p);
/// p | ab implies p | a or p | b, on all homogeneous pairs. Finite fields.
bool is_prime_element_by_definition(const Element& p);

struct Factorization {
  Element subject;
  std::vector<Element> factors;
};

/// Equal length and a permutation matching factors into associates.
bool equivalent(const Factorization& f, const Factorization& g);
Element product(const std::vector<Element>& factors);

/// All factorizations into normal irreducibles, one per equivalence class.
/// Finite fields only; throws LimitExceeded if the search passes `cap`.
std::vector<Factorization> factorizations(const Element& x, unsigned cap = 16);
/// Homogeneous subject, homogeneous factors.
std::vector<Factorization> homogeneous_factorizations(const Element& x, unsigned cap = 16);

enum class UfsrStatus { Ufsr, NotUfsr, Undecided };
enum class UfsrMethod { Exhaustive, Structural };
/// Which unique factorization property a verdict is about.
enum class UfsrScope { Full, Homogeneous, Even };
std::string to_string(UfsrStatus s);
std::string to_string(UfsrMethod m);
std::string to_string(UfsrScope s);

/// A subject with either two inequivalent factorizations or none.
struct UfsrWitness {
  Element subject;
  std::vector<Factorization> factorizations;
};

struct UfsrVerdict {
  UfsrStatus status = UfsrStatus::Undecided;
  UfsrMethod method = UfsrMethod::Exhaustive;
  UfsrScope scope = UfsrScope::Full;
  std::optional<UfsrWitness> witness;
  std::string reason;
};

/// Exhaustive over associate classes. Finite fields only.
UfsrVerdict ufsr_check(const AlgebraPtr& algebra, unsigned cap = 16);
/// m^2 = 0 proves UFSR; otherwise a bounded search for colliding products of
/// provably irreducible normal elements. Works over any field.
UfsrVerdict structural_ufsr_check(const AlgebraPtr& algebra);
UfsrVerdict homogeneous_ufsr_check(const AlgebraPtr& algebra, unsigned cap = 16);
/// Unique factorization inside R_0.
UfsrVerdict even_ufsr_check(const AlgebraPtr& algebra, unsigned cap = 16);

struct WitnessReport {
  bool ok = false;
  std::vector<std::string> transcript;
};

/// Re-checks a NotUfsr witness with the predicates above (for the even scope,
/// their R_0 analogues): products, normality, irreducibility, and
/// inequivalence, or the absence of any factorization.
WitnessReport verify_witness(const UfsrVerdict& verdict);

/// Outcome of regrouping a factorization of x around an even irreducible a.
struct RegroupResult {
  unsigned n = 0;
  std::vector<Element> factors;
  /// Product of the units left over when every factor was associate to a.
  std::optional<Element> unit;
  bool none_associate_to_a = true;
  bool pairwise_non_associate = true;
};

/// x = a^n * f_1 ... f_d (* unit). Uses that even elements are central.
RegroupResult regroup_around(const Element& a, const Factorization& x);

/// Requires: a even irreducible, x nonzero homogeneous, a x = 0, algebra a
/// UFSR. Throws PreconditionError otherwise.
RegroupResult annihilator_witness(const Element& a, const Element& x, unsigned cap = 16);

struct AnnihilatorPair {
  Element a;
  Element x;
};
/// Every (a, x) satisfying the hypotheses of annihilator_witness, ignoring
/// the UFSR condition. Empty when the algebra has no even irreducible.
std::vector<AnnihilatorPair> annihilator_pairs(const AlgebraPtr& algebra);

}  // namespace ufsr
