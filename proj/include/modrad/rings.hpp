#ifndef MODRAD_RINGS_HPP
#define MODRAD_RINGS_HPP

#include <string>
#include <utility>
#include <vector>

#include "modrad/bigint.hpp"
#include "modrad/errors.hpp"

namespace modrad::rings {

// ---------------------------------------------------------------------------
// Number theory utilities (desk scale: trial division, deterministic
// Miller-Rabin for candidates below ~3.3e24).

bool is_prime(const Int& n);
std::vector<std::pair<Int, int>> factorize(const Int& n);  // n >= 1
std::vector<Int> prime_divisors(const Int& n);
Int squarefree_kernel(const Int& n);  // rad(n); rad(0) = 0
std::vector<Int> divisors(const Int& n);  // sorted, n >= 1
std::vector<Int> primes_up_to(std::int64_t bound);

// ---------------------------------------------------------------------------

enum class RingKind { Integers, IntegersModN, LocalizedAtPrime, PrimeField };

/// One of the four supported coefficient rings: Z, Z/n, Z localized at a
/// prime (written Z_(p)), or the prime field F_p. Each has a finitely
/// describable prime spectrum, which keeps every predicate exact.
class RingDescriptor {
 public:
  static RingDescriptor integers();
  static RingDescriptor integers_mod(const Int& n);   // n >= 2
  static RingDescriptor localized_at(const Int& p);   // p prime
  static RingDescriptor prime_field(const Int& p);    // p prime

  RingKind kind() const { return kind_; }
  /// n for Z/n, p for Z_(p) and F_p, 0 for Z.
  const Int& modulus() const { return modulus_; }

  bool is_integers() const { return kind_ == RingKind::Integers; }
  bool is_mod_n() const { return kind_ == RingKind::IntegersModN; }
  bool is_localized() const { return kind_ == RingKind::LocalizedAtPrime; }
  bool is_field() const { return kind_ == RingKind::PrimeField; }

  std::string label() const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const RingDescriptor& a, const RingDescriptor& b) { return !(a == b); }

 private:
  RingDescriptor(RingKind kind, Int modulus) : kind_(kind), modulus_(std::move(modulus)) {}
  RingKind kind_;
  Int modulus_;
};

/// An ideal in normal form. The stored generator means, per ring:
///   Z:      g >= 0, the ideal (g)
///   Z/n:    a divisor d of n, the ideal (d)/(n); d = n is the zero ideal
///   Z_(p):  0, or p^k with k >= 0 (k = 0 is the unit ideal)
///   F_p:    0 or 1
/// Ideal equality is generator equality.
class IdealDescriptor {
 public:
  /// Normalizes an arbitrary integer generator into the form above.
  static IdealDescriptor from_generator(const RingDescriptor& ring, const Int& g);
  static IdealDescriptor zero(const RingDescriptor& ring);
  static IdealDescriptor unit(const RingDescriptor& ring);

  const RingDescriptor& ring() const { return ring_; }
  const Int& generator() const { return gen_; }

  bool is_zero() const;
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }

  std::string str() const;

  friend bool operator==(const IdealDescriptor& a, const IdealDescriptor& b) {
    return a.ring_ == b.ring_ && a.gen_ == b.gen_;
  }
  friend bool operator!=(const IdealDescriptor& a, const IdealDescriptor& b) { return !(a == b); }
  friend bool operator<(const IdealDescriptor& a, const IdealDescriptor& b) {
    return a.gen_ < b.gen_;
  }

 private:
  IdealDescriptor(RingDescriptor ring, Int gen) : ring_(std::move(ring)), gen_(std::move(gen)) {}
  RingDescriptor ring_;
  Int gen_;
};

/// a contains b as ideals.
bool ideal_contains(const IdealDescriptor& a, const IdealDescriptor& b);
bool is_prime_ideal(const IdealDescriptor& i);
bool is_maximal_ideal(const IdealDescriptor& i);
IdealDescriptor ideal_intersection(const IdealDescriptor& a, const IdealDescriptor& b);

/// A set of prime ideals, given either as a finite list or as "all maximal
/// ideals except a finite excluded list". The cofinite variant is legal only
/// over Z, the one supported ring with infinitely many maximal ideals.
/// Ideals are stored by generator value; 0 stands for the maximal ideal (0)
/// of a field.
class PrimeSet {
 public:
  static PrimeSet finite(const RingDescriptor& ring, std::vector<Int> gens);
  static PrimeSet cofinite_maximals(const RingDescriptor& ring, std::vector<Int> excluded);
  static PrimeSet all_maximals(const RingDescriptor& ring);

  const RingDescriptor& ring() const { return ring_; }
  bool is_cofinite() const { return cofinite_; }
  /// Members for a finite set, excluded maximals for a cofinite one.
  const std::vector<Int>& gens() const { return gens_; }

  bool contains(const Int& g) const;
  bool is_empty() const { return !cofinite_ && gens_.empty(); }
  /// True iff the set equals the full set of maximal ideals of the ring.
  bool covers_all_maximals() const;

  std::vector<IdealDescriptor> finite_ideals() const;  // throws for cofinite
  std::string str() const;

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) {
    return a.ring_ == b.ring_ && a.cofinite_ == b.cofinite_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const PrimeSet& a, const PrimeSet& b) { return !(a == b); }

 private:
  PrimeSet(RingDescriptor ring, bool cofinite, std::vector<Int> gens);
  RingDescriptor ring_;
  bool cofinite_;
  std::vector<Int> gens_;  // sorted, unique
};

PrimeSet prime_set_union(const PrimeSet& a, const PrimeSet& b);
bool prime_set_subset(const PrimeSet& a, const PrimeSet& b);

/// Exact description of the maximal ideals containing i.
PrimeSet maximal_ideals_containing(const RingDescriptor& r, const IdealDescriptor& i);

/// Whether (0) is a non-maximal prime of r lying over i (only the domains
/// Z and Z_(p) have one; for a field (0) is maximal and reported through
/// maximal_ideals_containing instead).
bool zero_prime_over(const RingDescriptor& r, const IdealDescriptor& i);

/// sqrt(I): the intersection of all prime ideals containing I, in normal form.
IdealDescriptor radical_ideal(const RingDescriptor& r, const IdealDescriptor& i);

/// Every prime ideal is an intersection of maximal ideals.
bool is_hilbert(const RingDescriptor& r);

struct RingFacts {
  int krull_dim = 0;
  bool is_artinian = false;
  bool is_domain = false;
  bool is_field = false;
  IdealDescriptor jacobson_radical;
};
RingFacts ring_facts(const RingDescriptor& r);

/// Image of the natural map on prime submodules: which colon ideals are
/// realized. The (0) prime of a domain is tracked separately from the
/// maximal ideals.
struct RealizedPrimes {
  bool zero_prime = false;
  PrimeSet maximals;

  friend bool operator==(const RealizedPrimes& a, const RealizedPrimes& b) {
    return a.zero_prime == b.zero_prime && a.maximals == b.maximals;
  }
};

}  // namespace modrad::rings

#endif  // MODRAD_RINGS_HPP
