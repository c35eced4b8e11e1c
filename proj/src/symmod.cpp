#include "modrad/symmod.hpp"

#include <algorithm>

namespace modrad::symmod {

using rings::IdealDescriptor;
using rings::PrimeSet;
using rings::RingDescriptor;

namespace {

void validate_component_prime(const RingDescriptor& ring, const Int& p, std::uint32_t exponent) {
  switch (ring.kind()) {
    case rings::RingKind::Integers:
      if (!rings::is_prime(p)) throw std::invalid_argument("component prime must be prime");
      return;
    case rings::RingKind::IntegersModN: {
      if (!rings::is_prime(p)) throw std::invalid_argument("component prime must be prime");
      if (!(pow(p, exponent) <= ring.modulus() && (ring.modulus() % pow(p, exponent)).is_zero())) {
        throw std::invalid_argument("component order must divide n over Z/n");
      }
      return;
    }
    case rings::RingKind::LocalizedAtPrime:
      if (p != ring.modulus()) {
        throw std::invalid_argument("only the local prime carries torsion over Z_(p)");
      }
      return;
    case rings::RingKind::PrimeField:
      throw std::invalid_argument("over a field only free components are legal");
  }
}

}  // namespace

SymbolicModule::SymbolicModule(RingDescriptor ring, FreeRank free_rank,
                               std::vector<CyclicPart> cyclics, std::vector<FamilyPart> families,
                               std::vector<PrueferPart> pruefer)
    : ring_(std::move(ring)),
      free_rank_(free_rank),
      cyclics_(std::move(cyclics)),
      families_(std::move(families)),
      pruefer_(std::move(pruefer)) {
  if (ring_.is_field() && (!cyclics_.empty() || !families_.empty() || !pruefer_.empty())) {
    throw std::invalid_argument("over a field only free components are legal");
  }
  for (const CyclicPart& c : cyclics_) {
    if (c.exponent < 1 || c.multiplicity < 1) {
      throw std::invalid_argument("cyclic parts need exponent, multiplicity >= 1");
    }
    validate_component_prime(ring_, c.prime, c.exponent);
  }
  for (const FamilyPart& f : families_) {
    if (f.primes.ring() != ring_) throw std::invalid_argument("family over a different ring");
    if (!f.primes.is_cofinite()) {
      for (const Int& g : f.primes.gens()) validate_component_prime(ring_, g, 1);
    }
  }
  for (const PrueferPart& p : pruefer_) {
    if (!(ring_.is_integers() || ring_.is_localized())) {
      throw std::invalid_argument("Pruefer components are legal over Z and Z_(p) only");
    }
    if (p.multiplicity < 1) throw std::invalid_argument("Pruefer multiplicity must be >= 1");
    validate_component_prime(ring_, p.prime, 1);
  }
}

bool SymbolicModule::is_zero_module() const {
  return !free_rank_.positive() && cyclics_.empty() && pruefer_.empty() &&
         std::all_of(families_.begin(), families_.end(),
                     [](const FamilyPart& f) { return f.primes.is_empty(); });
}

bool SymbolicModule::has_infinite_family() const {
  return std::any_of(families_.begin(), families_.end(),
                     [](const FamilyPart& f) { return f.primes.is_cofinite(); });
}

bool SymbolicModule::is_finitely_generated() const {
  return !free_rank_.infinite && !has_infinite_family() && pruefer_.empty();
}

bool SymbolicModule::is_semisimple() const {
  if (ring_.is_field()) return true;
  if (free_rank_.positive() || !pruefer_.empty()) return false;
  return std::all_of(cyclics_.begin(), cyclics_.end(),
                     [](const CyclicPart& c) { return c.exponent == 1; });
}

std::optional<SemisimpleView> SymbolicModule::semisimple_view() const {
  if (!is_semisimple()) return std::nullopt;
  if (ring_.is_field()) {
    std::vector<Int> gens;
    if (free_rank_.positive()) gens.push_back(Int(0));
    return SemisimpleView{PrimeSet::finite(ring_, std::move(gens))};
  }
  PrimeSet support = PrimeSet::finite(ring_, {});
  std::vector<Int> cyclic_primes;
  for (const CyclicPart& c : cyclics_) cyclic_primes.push_back(c.prime);
  support = rings::prime_set_union(support, PrimeSet::finite(ring_, std::move(cyclic_primes)));
  for (const FamilyPart& f : families_) support = rings::prime_set_union(support, f.primes);
  return SemisimpleView{std::move(support)};
}

rings::PrimeSet SymbolicModule::covered_maximals() const {
  if (free_rank_.positive()) return PrimeSet::all_maximals(ring_);
  std::vector<Int> cyclic_primes;
  for (const CyclicPart& c : cyclics_) cyclic_primes.push_back(c.prime);
  PrimeSet out = PrimeSet::finite(ring_, std::move(cyclic_primes));
  for (const FamilyPart& f : families_) out = rings::prime_set_union(out, f.primes);
  return out;
}

// ---------------------------------------------------------------------------

rings::IdealDescriptor ann(const SymbolicModule& m) {
  if (m.free_rank().positive() || !m.pruefer().empty() || m.has_infinite_family()) {
    return IdealDescriptor::zero(m.ring());
  }
  Int l(1);
  for (const CyclicPart& c : m.cyclics()) l = lcm(l, pow(c.prime, c.exponent));
  for (const FamilyPart& f : m.families()) {
    for (const Int& p : f.primes.gens()) l = lcm(l, p);
  }
  return IdealDescriptor::from_generator(m.ring(), l);
}

bool scalar_image_proper(const SymbolicModule& m, const rings::IdealDescriptor& maximal) {
  if (maximal.ring() != m.ring() || !rings::is_maximal_ideal(maximal)) {
    throw std::invalid_argument("scalar_image_proper: expected a maximal ideal of the ring");
  }
  if (m.free_rank().positive()) return true;
  // Pruefer parts are divisible and contribute nothing.
  Int p = maximal.is_zero() ? Int(0) : maximal.generator();
  for (const CyclicPart& c : m.cyclics()) {
    if (c.prime == p) return true;
  }
  for (const FamilyPart& f : m.families()) {
    if (f.primes.contains(p)) return true;
  }
  return false;
}

bool ideal_multiple_is_whole(const SymbolicModule& m, const rings::IdealDescriptor& i) {
  if (i.ring() != m.ring()) {
    throw std::invalid_argument("ideal_multiple_is_whole: ideal of a different ring");
  }
  if (m.is_zero_module() || i.is_unit()) return true;
  if (i.is_zero()) return false;  // (0)M = 0 with M != 0
  if (m.free_rank().positive()) return false;
  const Int& d = i.generator();
  for (const CyclicPart& c : m.cyclics()) {
    if ((d % c.prime).is_zero()) return false;
  }
  for (const FamilyPart& f : m.families()) {
    for (const Int& q : rings::prime_divisors(d)) {
      if (f.primes.contains(q)) return false;
    }
  }
  // Pruefer parts are divisible; d acts onto them.
  return true;
}

bool is_primeless(const SymbolicModule& m) {
  if (m.is_zero_module()) return true;  // Spec(M) empty, vacuously
  if (m.free_rank().positive() || !m.cyclics().empty()) return false;
  if (std::any_of(m.families().begin(), m.families().end(),
                  [](const FamilyPart& f) { return !f.primes.is_empty(); })) {
    return false;
  }
  return !m.pruefer().empty();  // nonzero torsion divisible
}

rings::RealizedPrimes realized_colons(const SymbolicModule& m) {
  // A maximal colon (p) is realized iff pM != M (pM is then a (p)-prime
  // submodule). The colon (0) needs a nonzero torsion-free quotient, which a
  // torsion ⊕ divisible module never has, so it is realized exactly when a
  // free summand exists over a domain.
  bool zero = (m.ring().is_integers() || m.ring().is_localized()) && m.free_rank().positive();
  return {zero, m.covered_maximals()};
}

// ---------------------------------------------------------------------------

namespace {

std::string component_witness(const SymbolicModule& m, const Int& p) {
  for (const CyclicPart& c : m.cyclics()) {
    if (c.prime == p) return "a cyclic R/(p^" + std::to_string(c.exponent) + ") summand drops";
  }
  for (const FamilyPart& f : m.families()) {
    if (f.primes.contains(p)) return "the family member R/(p) drops";
  }
  if (m.free_rank().positive()) return "a free summand drops to pR";
  return "";
}

Int smallest_missing_prime(const PrimeSet& covered) {
  Int p(2);
  while (covered.contains(p)) {
    p += 1;
    while (!rings::is_prime(p)) p += 1;
  }
  return p;
}

// Evidence for a condition checked at every maximal ideal over Ann(M).
// Finitely many interesting primes are listed; a cofinite remainder is
// summarized in the note.
struct MaximalSweep {
  bool all_ok = true;
  std::vector<fgmod::PrimeEvidence> evidence;
  std::string note;
};

MaximalSweep sweep_scalar_image(const SymbolicModule& m) {
  MaximalSweep sweep;
  IdealDescriptor a = ann(m);
  PrimeSet required = rings::maximal_ideals_containing(m.ring(), a);
  PrimeSet covered = m.covered_maximals();
  auto evaluate = [&](const Int& g) {
    IdealDescriptor p = IdealDescriptor::from_generator(m.ring(), g);
    bool ok = covered.contains(g);
    sweep.all_ok = sweep.all_ok && ok;
    std::string detail = ok ? "pM != M: " + component_witness(m, g) : "pM = M (divisible at p)";
    if (g.is_zero()) detail = ok ? "(0)M = 0 != M" : "(0)M = M";
    sweep.evidence.push_back({p, ok, detail, std::nullopt});
  };
  if (!required.is_cofinite()) {
    for (const Int& g : required.gens()) evaluate(g);
    return sweep;
  }
  // Ann = (0) over Z: every maximal ideal is required.
  if (covered.is_cofinite()) {
    for (const Int& g : covered.gens()) evaluate(g);  // the finitely many failures
    sweep.note = sweep.all_ok && covered.gens().empty()
                     ? "every maximal ideal is covered by the components"
                     : "all maximal ideals outside the listed exceptions pass";
  } else {
    sweep.all_ok = false;
    for (const Int& g : covered.gens()) evaluate(g);
    evaluate(smallest_missing_prime(covered));  // one concrete failure
    sweep.note = "fails at every maximal ideal outside " + covered.str();
  }
  return sweep;
}

}  // namespace

PropertyCertificate check_m_radical(const SymbolicModule& m) {
  // Via the maxful characterization: pM != M at every maximal over Ann(M);
  // when that holds, pM is a (p)-prime, the radical of pM is pM itself and
  // the defining colon equality follows.
  MaximalSweep sweep = sweep_scalar_image(m);
  return {sweep.all_ok, std::move(sweep.evidence), std::move(sweep.note)};
}

rings::IdealDescriptor zero_radical_colon(const SymbolicModule& m) {
  // sqrt[p]((0)) = (⋂_{p realized} pM) ∩ (torsion part, when a (0)-prime
  // exists). Componentwise: every family summand R/q dies inside qM; a
  // cyclic R/(q^k) contributes q R/(q^k); Pruefer parts persist (divisible);
  // the free part dies against the torsion term, or against ⋂ pZ when the
  // realized set is infinite. The colon of what remains:
  //   free part present   -> (0)
  //   infinite family     -> (0)   (s must vanish at infinitely many primes)
  //   otherwise           -> (product of distinct component primes), or (1)
  // The last case is where the non-Hilbert counterexample lives.
  if (m.is_zero_module()) return IdealDescriptor::unit(m.ring());
  if (m.free_rank().positive() || m.has_infinite_family()) {
    return IdealDescriptor::zero(m.ring());
  }
  Int prod(1);
  std::vector<Int> seen;
  auto mul_once = [&](const Int& p) {
    if (std::find(seen.begin(), seen.end(), p) == seen.end()) {
      seen.push_back(p);
      prod *= p;
    }
  };
  for (const CyclicPart& c : m.cyclics()) mul_once(c.prime);
  for (const FamilyPart& f : m.families()) {
    for (const Int& p : f.primes.gens()) mul_once(p);
  }
  return IdealDescriptor::from_generator(m.ring(), prod);
}

PropertyCertificate check_p_radical(const SymbolicModule& m) {
  PropertyCertificate cert = check_m_radical(m);
  IdealDescriptor a = ann(m);
  if (rings::zero_prime_over(m.ring(), a)) {
    // The one non-maximal prime over Ann(M).
    IdealDescriptor j = zero_radical_colon(m);
    bool ok = j.is_zero();
    cert.verdict = cert.verdict && ok;
    cert.per_prime.push_back({IdealDescriptor::zero(m.ring()), ok,
                              "(sqrt[p]((0)M) : M) = " + j.str(), std::nullopt});
  }
  return cert;
}

PropertyCertificate check_primeful(const SymbolicModule& m) {
  // The maximal part coincides with the maxful sweep (a maximal colon is
  // realized iff pM != M); (0) additionally needs a nonzero torsion-free
  // quotient, i.e. a free summand.
  MaximalSweep sweep = sweep_scalar_image(m);
  PropertyCertificate cert{sweep.all_ok, std::move(sweep.evidence), std::move(sweep.note)};
  IdealDescriptor a = ann(m);
  if (rings::zero_prime_over(m.ring(), a) && !m.is_zero_module()) {
    bool ok = realized_colons(m).zero_prime;
    cert.verdict = cert.verdict && ok;
    cert.per_prime.push_back({IdealDescriptor::zero(m.ring()), ok,
                              ok ? "(0) realized by quotienting out the torsion and divisible part"
                                 : "no (0)-prime submodule (torsion + divisible)",
                              std::nullopt});
  }
  return cert;
}

bool is_full_semisimple(const SymbolicModule& m) {
  auto view = m.semisimple_view();
  if (!view) throw UnsupportedError("is_full_semisimple: module is not semisimple");
  PrimeSet required = rings::maximal_ideals_containing(m.ring(), ann(m));
  return rings::prime_set_subset(required, view->support);
}

bool is_homogeneous_semisimple(const SymbolicModule& m) {
  return m.is_semisimple() && rings::is_maximal_ideal(ann(m));
}

SymbolicModule construct_prop27(const rings::RingDescriptor& ring) {
  // Needs a prime equal to the intersection of the strictly larger primes.
  // Among the supported rings only Z qualifies, with (0) = ⋂ (p); the module
  // ⊕_p Z/pZ is then P-radical and not primeful. Over Z/n and fields every
  // prime is maximal; over Z_(p) the intersection of the larger primes is
  // (p), not (0).
  if (!ring.is_integers()) {
    throw UnsupportedError("construct_prop27: the ring has no prime equal to the "
                           "intersection of the strictly larger primes");
  }
  return SymbolicModule(ring, FreeRank::finite(0), {},
                        {FamilyPart{PrimeSet::cofinite_maximals(ring, {})}}, {});
}

SymbolicModule construct_thm211(const rings::RingDescriptor& ring) {
  if (rings::is_hilbert(ring)) {
    throw UnsupportedError("construct_thm211: the ring is a Hilbert ring");
  }
  // Z_(p): (direct sum of S/m over the maximal ideals) ⊕ (torsion divisible),
  // realized as S/(p) ⊕ Z(p^inf).
  const Int& p = ring.modulus();
  return SymbolicModule(ring, FreeRank::finite(0), {CyclicPart{p, 1, 1}}, {},
                        {PrueferPart{p, 1}});
}

Truncation truncate(const SymbolicModule& m, const Int& prime_bound, std::uint32_t rank_cap) {
  if (!(m.ring().is_integers() || m.ring().is_mod_n())) {
    throw UnsupportedError("truncate: supported over Z and Z/n only");
  }
  std::vector<Int> torsion_orders;
  for (const CyclicPart& c : m.cyclics()) {
    if (c.prime > prime_bound) continue;
    for (std::uint32_t i = 0; i < c.multiplicity; ++i) {
      torsion_orders.push_back(pow(c.prime, c.exponent));
    }
  }
  for (const FamilyPart& f : m.families()) {
    if (!f.primes.is_cofinite()) {
      for (const Int& p : f.primes.gens()) {
        if (p <= prime_bound) torsion_orders.push_back(p);
      }
    } else {
      for (const Int& p : rings::primes_up_to(prime_bound.to_int64())) {
        if (f.primes.contains(p)) torsion_orders.push_back(p);
      }
    }
  }
  bool gap = false;
  for (const PrueferPart& p : m.pruefer()) {
    if (p.prime > prime_bound) continue;
    gap = true;
    for (std::uint32_t i = 0; i < p.multiplicity; ++i) {
      torsion_orders.push_back(pow(p.prime, rank_cap));
    }
  }
  std::uint64_t free_part =
      m.free_rank().infinite ? rank_cap : std::min<std::uint64_t>(m.free_rank().count, rank_cap);

  auto g = static_cast<exactlin::Index>(torsion_orders.size() + free_part);
  exactlin::IntMatrix rel =
      exactlin::IntMatrix::Zero(g, static_cast<exactlin::Index>(torsion_orders.size()));
  for (std::size_t i = 0; i < torsion_orders.size(); ++i) {
    rel(static_cast<exactlin::Index>(i), static_cast<exactlin::Index>(i)) = torsion_orders[i];
  }
  return {fgmod::FinPresModule(m.ring(), g, rel), gap};
}

}  // namespace modrad::symmod
