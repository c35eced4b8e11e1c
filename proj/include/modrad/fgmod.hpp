#ifndef MODRAD_FGMOD_HPP
#define MODRAD_FGMOD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modrad/errors.hpp"
#include "modrad/exactlin.hpp"
#include "modrad/rings.hpp"

namespace modrad::fgmod {

using exactlin::Index;
using exactlin::IntegerLattice;
using exactlin::IntMatrix;
using exactlin::IntVector;

inline constexpr std::int64_t kDefaultEnumerationBound = 20000;

/// A finitely presented module over Z or Z/n, given as Z^g / R for a relation
/// lattice R. Over Z/n the stored lattice always contains n*Z^g, so one
/// integer-lattice kernel serves both rings. The quotient structure (torsion
/// invariants, free rank, exponent) is computed once at construction.
class FinPresModule {
 public:
  FinPresModule(rings::RingDescriptor ring, Index n_gens, const IntMatrix& relation_gens);

  const rings::RingDescriptor& ring() const { return ring_; }
  Index n_gens() const { return n_gens_; }
  const IntegerLattice& relations() const { return relations_; }

  /// Invariant factors of Z^g / R (trivial factors kept), smallest first.
  const std::vector<Int>& torsion_invariants() const { return torsion_; }
  Index free_rank() const { return free_rank_; }
  const Int& torsion_exponent() const { return exponent_; }

  bool is_zero_module() const { return free_rank_ == 0 && exponent_.is_one(); }
  bool is_finite() const { return free_rank_ == 0; }
  /// |M| for finite modules.
  Int size() const;
  bool is_cyclic() const;

  friend bool operator==(const FinPresModule& a, const FinPresModule& b) {
    return a.ring_ == b.ring_ && a.n_gens_ == b.n_gens_ && a.relations_ == b.relations_;
  }
  friend bool operator!=(const FinPresModule& a, const FinPresModule& b) { return !(a == b); }

 private:
  rings::RingDescriptor ring_;
  Index n_gens_;
  IntegerLattice relations_;
  std::vector<Int> torsion_;
  Index free_rank_ = 0;
  Int exponent_ = Int(1);
};

/// A submodule of a FinPresModule, held as the intermediate lattice
/// R <= L <= Z^g in canonical form. Equality is entry-wise basis equality.
class Submodule {
 public:
  Submodule(FinPresModule parent, const IntMatrix& generators);
  static Submodule from_lattice(FinPresModule parent, IntegerLattice lattice);
  static Submodule zero(FinPresModule parent);
  static Submodule whole(FinPresModule parent);
  /// The submodule I*M for an ideal I of the coefficient ring.
  static Submodule ideal_multiple(FinPresModule parent, const rings::IdealDescriptor& ideal);

  const FinPresModule& parent() const { return parent_; }
  const IntegerLattice& lattice() const { return lattice_; }
  bool is_whole() const { return lattice_.is_full(); }

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.parent_ == b.parent_ && a.lattice_ == b.lattice_;
  }
  friend bool operator!=(const Submodule& a, const Submodule& b) { return !(a == b); }

 private:
  Submodule(FinPresModule parent, IntegerLattice lattice)
      : parent_(std::move(parent)), lattice_(std::move(lattice)) {}
  FinPresModule parent_;
  IntegerLattice lattice_;
};

/// Evidence attached to one prime in a property check: the status of the
/// defining equality there, and a realizing prime submodule when one exists.
struct PrimeEvidence {
  rings::IdealDescriptor prime;
  bool ok = false;
  std::string detail;
  std::optional<IntegerLattice> witness;
};

/// Verdict of a module property together with per-prime evidence. When a
/// check over Z covers infinitely many maximal ideals, the finitely many
/// interesting primes are listed and `note` records the argument for the
/// cofinite remainder; the verdict includes that remainder.
struct PropertyCertificate {
  bool verdict = true;
  std::vector<PrimeEvidence> per_prime;
  std::string note;
};

/// Ann(M) = ((0) : M).
rings::IdealDescriptor ann(const FinPresModule& m);

/// (N : M) = {r : rM <= N}.
rings::IdealDescriptor colon(const Submodule& n);

struct PrimeCheck {
  bool is_prime = false;
  std::optional<rings::IdealDescriptor> prime;  // (N : M) when prime
};

/// Prime submodule test: N proper, (N:M) prime, and M/N torsion-free over
/// R/(N:M). Over these rings the torsion-free condition is automatic at a
/// maximal colon (the quotient is a vector space) and reduces to saturation
/// at colon (0).
PrimeCheck is_prime_submodule(const Submodule& n);

/// Closed form for the prime radical: the intersection of all prime
/// submodules containing N (M itself when there are none). By the convention
/// adopted here the radical of the improper submodule is M.
Submodule prime_radical(const Submodule& n);

PropertyCertificate check_p_radical(const FinPresModule& m);
PropertyCertificate check_m_radical(const FinPresModule& m);
PropertyCertificate check_primeful(const FinPresModule& m);

/// Image of the natural map P -> (P : M) on prime submodules.
rings::RealizedPrimes realized_colons(const FinPresModule& m);

/// Multiplication-module test. Cyclic modules qualify outright; finite ones
/// are decided by enumerating all submodules; infinite non-cyclic inputs are
/// rejected (undecidable in this representation).
bool is_multiplication(const FinPresModule& m,
                       std::int64_t bound = kDefaultEnumerationBound);

/// Does sqrt[p](IM) equal sqrt(I)M? Requires I >= Ann(M).
bool check_radical_formula(const FinPresModule& m, const rings::IdealDescriptor& i);

/// All intermediate lattices between the relations and Z^g, each exactly
/// once, for finite M with |M| within the bound. Deterministic order.
std::vector<Submodule> enumerate_submodules(const FinPresModule& m,
                                            std::int64_t bound = kDefaultEnumerationBound);

/// Brute-force radical: intersect every enumerated prime submodule
/// containing n; M when none contains it.
Submodule prime_radical_oracle(const Submodule& n,
                               std::int64_t bound = kDefaultEnumerationBound);
/// Same, against a precomputed prime-submodule list (one enumeration can
/// serve every submodule of the parent).
Submodule prime_radical_oracle(const Submodule& n, const std::vector<Submodule>& primes);

/// All prime submodules of a finite module, via enumeration.
std::vector<Submodule> prime_submodules_oracle(const FinPresModule& m,
                                               std::int64_t bound = kDefaultEnumerationBound);

}  // namespace modrad::fgmod

#endif  // MODRAD_FGMOD_HPP
