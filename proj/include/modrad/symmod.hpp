#ifndef MODRAD_SYMMOD_HPP
#define MODRAD_SYMMOD_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "modrad/fgmod.hpp"

namespace modrad::symmod {

struct FreeRank {
  bool infinite = false;
  std::uint64_t count = 0;

  static FreeRank finite(std::uint64_t n) { return {false, n}; }
  static FreeRank countably_infinite() { return {true, 0}; }
  bool positive() const { return infinite || count > 0; }

  friend bool operator==(const FreeRank& a, const FreeRank& b) {
    return a.infinite == b.infinite && (a.infinite || a.count == b.count);
  }
};

/// R/(p^k), `multiplicity` copies.
struct CyclicPart {
  Int prime;
  std::uint32_t exponent = 1;
  std::uint32_t multiplicity = 1;
};

/// ⊕_{m in primes} R/m, one copy per member; the set may be cofinite over Z.
struct FamilyPart {
  rings::PrimeSet primes;
};

/// The p-Pruefer group (divisible p-torsion), legal over Z and Z_(p).
struct PrueferPart {
  Int prime;
  std::uint32_t multiplicity = 1;
};

struct SemisimpleView {
  rings::PrimeSet support;  // maximal ideals appearing among the simple summands
};

/// A formal direct sum of free, cyclic prime-power, cofinite simple-family,
/// and Pruefer components. This finite descriptor is what carries the
/// infinite counterexample modules; every predicate on it has a closed-form
/// componentwise rule, cross-validated against fgmod on finite truncations.
///
/// Multiplicities are recorded but never affect any predicate (checked by
/// metamorphic tests).
class SymbolicModule {
 public:
  SymbolicModule(rings::RingDescriptor ring, FreeRank free_rank,
                 std::vector<CyclicPart> cyclics, std::vector<FamilyPart> families,
                 std::vector<PrueferPart> pruefer);

  const rings::RingDescriptor& ring() const { return ring_; }
  const FreeRank& free_rank() const { return free_rank_; }
  const std::vector<CyclicPart>& cyclics() const { return cyclics_; }
  const std::vector<FamilyPart>& families() const { return families_; }
  const std::vector<PrueferPart>& pruefer() const { return pruefer_; }

  bool is_zero_module() const;
  bool is_torsion() const { return !free_rank_.positive(); }
  bool has_infinite_family() const;
  bool is_finitely_generated() const;
  bool is_semisimple() const;
  std::optional<SemisimpleView> semisimple_view() const;

  /// Maximal ideals p with some component of p-torsion or a family member p,
  /// plus everything when there is a free part.
  rings::PrimeSet covered_maximals() const;

 private:
  rings::RingDescriptor ring_;
  FreeRank free_rank_;
  std::vector<CyclicPart> cyclics_;
  std::vector<FamilyPart> families_;
  std::vector<PrueferPart> pruefer_;
};

using PropertyCertificate = fgmod::PropertyCertificate;

rings::IdealDescriptor ann(const SymbolicModule& m);

/// Decides pM != M for a maximal ideal of the ring.
bool scalar_image_proper(const SymbolicModule& m, const rings::IdealDescriptor& maximal);

/// Decides IM = M componentwise (divisible parts absorb everything, a
/// component R/(q^k) survives iff q divides the generator, free parts demand
/// a unit). Generalizes the negation of scalar_image_proper to any ideal.
bool ideal_multiple_is_whole(const SymbolicModule& m, const rings::IdealDescriptor& i);

/// Spec(M) empty: torsion divisible modules, and the zero module (vacuously).
bool is_primeless(const SymbolicModule& m);

/// Image of the natural map P -> (P : M).
rings::RealizedPrimes realized_colons(const SymbolicModule& m);

PropertyCertificate check_primeful(const SymbolicModule& m);
PropertyCertificate check_m_radical(const SymbolicModule& m);
PropertyCertificate check_p_radical(const SymbolicModule& m);

/// The colon of the prime radical of (0), i.e. (sqrt[p]((0)M) : M), by the
/// componentwise closed form. This is the quantity the P-radical check
/// evaluates at the non-maximal prime (0).
rings::IdealDescriptor zero_radical_colon(const SymbolicModule& m);

/// Requires a semisimple module; true iff every maximal ideal over Ann(M)
/// occurs among the simple summands.
bool is_full_semisimple(const SymbolicModule& m);

/// Semisimple with Ann(M) maximal; false (not an error) on non-semisimple input.
bool is_homogeneous_semisimple(const SymbolicModule& m);

/// The P-radical-but-not-primeful witness module over a ring where some
/// prime is the intersection of the strictly larger ones: only Z qualifies
/// here, giving ⊕_p Z/pZ.
SymbolicModule construct_prop27(const rings::RingDescriptor& ring);

/// The M-radical-but-not-P-radical witness over a non-Hilbert ring (Z_(p)):
/// F_p ⊕ Z(p^inf).
SymbolicModule construct_thm211(const rings::RingDescriptor& ring);

struct Truncation {
  fgmod::FinPresModule module;
  /// Set when a Pruefer component was replaced by Z/p^cap. The replacement
  /// changes the divisibility structure: predicates that depend on pM = M
  /// do NOT survive truncation for such components.
  bool divisible_gap = false;
};

/// Finite direct-sum approximation keeping the components with primes up to
/// the bound; the free rank is capped, and Pruefer parts become Z/p^cap with
/// the gap flagged. Supported over Z and Z/n.
Truncation truncate(const SymbolicModule& m, const Int& prime_bound, std::uint32_t rank_cap);

}  // namespace modrad::symmod

namespace modrad {
using ModuleHandle = std::variant<fgmod::FinPresModule, symmod::SymbolicModule>;
}

#endif  // MODRAD_SYMMOD_HPP
