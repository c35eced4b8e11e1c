#ifndef MODRAD_SPECTOP_HPP
#define MODRAD_SPECTOP_HPP

#include <string>
#include <vector>

#include "modrad/symmod.hpp"

namespace modrad::spectop {

enum class ClosedKind { Whole, Empty, FiniteMaximals };

/// A Zariski closed subset of Spec(R), exact for the supported rings. A
/// finite set covering the whole (all-maximal) spectrum canonicalizes to
/// Whole, so descriptor equality is set equality. For the domains, any
/// closed set containing (0) is the whole space.
class ClosedSetR {
 public:
  static ClosedSetR whole(const rings::RingDescriptor& ring);
  static ClosedSetR empty(const rings::RingDescriptor& ring);
  static ClosedSetR finite_maximals(const rings::RingDescriptor& ring, std::vector<Int> gens);

  const rings::RingDescriptor& ring() const { return ring_; }
  ClosedKind kind() const { return kind_; }
  /// Maximal-ideal generators for the FiniteMaximals variant (sorted).
  const std::vector<Int>& gens() const { return gens_; }

  bool contains_prime(const rings::IdealDescriptor& p) const;
  std::string str() const;

  friend bool operator==(const ClosedSetR& a, const ClosedSetR& b) {
    return a.ring_ == b.ring_ && a.kind_ == b.kind_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const ClosedSetR& a, const ClosedSetR& b) { return !(a == b); }

 private:
  ClosedSetR(rings::RingDescriptor ring, ClosedKind kind, std::vector<Int> gens);
  rings::RingDescriptor ring_;
  ClosedKind kind_;
  std::vector<Int> gens_;
};

/// V(I) = {P in Spec(R) : I <= P}.
ClosedSetR v_ideal(const rings::RingDescriptor& r, const rings::IdealDescriptor& i);

/// The distinguished open set D(f) = Spec(R) \ V(f), held by its complement.
struct OpenSetR {
  ClosedSetR complement;

  bool is_empty() const { return complement.kind() == ClosedKind::Whole; }
  bool is_whole() const { return complement.kind() == ClosedKind::Empty; }
  std::string str() const;
};
OpenSetR d_basic(const rings::RingDescriptor& r, const Int& f);

ClosedSetR closed_union(const ClosedSetR& a, const ClosedSetR& b);
ClosedSetR closed_intersection(const ClosedSetR& a, const ClosedSetR& b);
bool closed_subset(const ClosedSetR& a, const ClosedSetR& b);

/// A closed subset V(N) of Spec(M), stored by its defining radical colon
/// ideal J = sqrt((N : M)). Membership of a prime submodule P is the test
/// J <= (P : M); the descriptor deliberately does not track which primes of
/// the ring are actually realized by ψ (see psi_image for that).
class ClosedSetM {
 public:
  ClosedSetM(ModuleHandle module, rings::IdealDescriptor radical_colon);

  const ModuleHandle& module() const { return module_; }
  const rings::IdealDescriptor& radical_colon() const { return radical_colon_; }

  /// Membership test against a candidate prime submodule, given its colon.
  bool member(const rings::IdealDescriptor& candidate_colon) const;

 private:
  ModuleHandle module_;
  rings::IdealDescriptor radical_colon_;
};

ClosedSetM v_submodule(const fgmod::Submodule& n);
/// V((0)) for a symbolic module: the whole of Spec(M), cut by sqrt(Ann M).
ClosedSetM v_symbolic_zero(const symmod::SymbolicModule& m);

/// Image of the natural map psi on Spec(M); primeful means the image equals
/// V(Ann M) as a set of primes.
rings::RealizedPrimes psi_image(const ModuleHandle& m);

/// The closed set V(Ann M) of Spec(R), i.e. the target of psi.
ClosedSetR v_of_annihilator(const ModuleHandle& m);

/// DOT rendering of psi as a bipartite graph, for finite presented modules:
/// prime submodules on the left, their colon ideals on the right.
std::string psi_dot(const fgmod::FinPresModule& m,
                    std::int64_t bound = fgmod::kDefaultEnumerationBound);

}  // namespace modrad::spectop

#endif  // MODRAD_SPECTOP_HPP
