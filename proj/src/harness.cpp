#include "modrad/harness.hpp"

#include <algorithm>
#include <chrono>

namespace modrad::harness {

using fgmod::FinPresModule;
using fgmod::Submodule;
using json_io::json;
using rings::IdealDescriptor;
using rings::PrimeSet;
using rings::RingDescriptor;
using symmod::SymbolicModule;

std::uint64_t DeterministicRng::next() {
  // splitmix64: deterministic by construction, no library dependence.
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t DeterministicRng::uniform(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

const std::vector<RingDescriptor>& default_ring_pool() {
  static const std::vector<RingDescriptor> pool = {
      RingDescriptor::integers(),
      RingDescriptor::integers_mod(Int(12)),
      RingDescriptor::integers_mod(Int(8)),
      RingDescriptor::integers_mod(Int(30)),
      RingDescriptor::integers_mod(Int(7)),
      RingDescriptor::localized_at(Int(5)),
      RingDescriptor::prime_field(Int(7)),
  };
  return pool;
}

InstanceGenerator InstanceGenerator::with_seed(std::uint64_t seed) {
  InstanceGenerator g;
  g.seed = seed;
  g.ring_pool = default_ring_pool();
  return g;
}

namespace {

const std::vector<Int>& small_primes() {
  static const std::vector<Int> primes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                          43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  return primes;
}

Int pick_prime(DeterministicRng& rng, const GeneratorBounds& b) {
  const auto& primes = small_primes();
  std::size_t count = 0;
  while (count < primes.size() && primes[count] <= Int(b.prime_bound)) ++count;
  return primes[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(count) - 1))];
}

RingDescriptor pick_ring(DeterministicRng& rng, const InstanceGenerator& gen) {
  const auto& pool = gen.ring_pool.empty() ? default_ring_pool() : gen.ring_pool;
  return pool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))];
}

}  // namespace

FinPresModule random_finpres(DeterministicRng& rng, const RingDescriptor& ring,
                             const GeneratorBounds& bounds) {
  auto g = static_cast<exactlin::Index>(rng.uniform(0, bounds.max_gens));
  auto k = static_cast<exactlin::Index>(rng.uniform(0, bounds.max_gens));
  exactlin::IntMatrix rel(g, k);
  for (exactlin::Index j = 0; j < k; ++j) {
    for (exactlin::Index i = 0; i < g; ++i) {
      rel(i, j) = Int(rng.uniform(-bounds.max_entry, bounds.max_entry));
    }
  }
  return FinPresModule(ring, g, rel);
}

SymbolicModule random_symbolic(DeterministicRng& rng, const RingDescriptor& ring,
                               const GeneratorBounds& bounds) {
  auto fr = rng.chance(10) ? symmod::FreeRank::countably_infinite()
                           : symmod::FreeRank::finite(rng.uniform(0, 2));
  if (ring.is_field()) return SymbolicModule(ring, fr, {}, {}, {});
  std::vector<symmod::CyclicPart> cyclics;
  for (int i = static_cast<int>(rng.uniform(0, bounds.max_cyclics)); i > 0; --i) {
    Int p;
    auto kmax = static_cast<std::uint32_t>(bounds.max_exponent);
    if (ring.is_integers()) {
      p = pick_prime(rng, bounds);
    } else if (ring.is_localized()) {
      p = ring.modulus();
    } else {  // Z/n
      auto divs = rings::prime_divisors(ring.modulus());
      p = divs[static_cast<std::size_t>(
          rng.uniform(0, static_cast<std::int64_t>(divs.size()) - 1))];
      std::uint32_t v = 0;
      Int n = ring.modulus();
      while ((n % p).is_zero()) {
        n /= p;
        ++v;
      }
      kmax = std::min(kmax, v);
    }
    cyclics.push_back({p, static_cast<std::uint32_t>(rng.uniform(1, kmax)),
                       static_cast<std::uint32_t>(rng.uniform(1, 2))});
  }
  std::vector<symmod::FamilyPart> families;
  if (rng.chance(35)) {
    if (ring.is_integers() && rng.chance(60)) {
      std::vector<Int> excluded;
      for (int i = static_cast<int>(rng.uniform(0, bounds.max_family_primes)); i > 0; --i) {
        excluded.push_back(pick_prime(rng, bounds));
      }
      families.push_back({PrimeSet::cofinite_maximals(ring, std::move(excluded))});
    } else {
      std::vector<Int> members;
      auto member_pool = ring.is_integers()   ? small_primes()
                         : ring.is_localized() ? std::vector<Int>{ring.modulus()}
                                               : rings::prime_divisors(ring.modulus());
      for (int i = static_cast<int>(rng.uniform(1, bounds.max_family_primes)); i > 0; --i) {
        members.push_back(member_pool[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(member_pool.size()) - 1))]);
      }
      families.push_back({PrimeSet::finite(ring, std::move(members))});
    }
  }
  std::vector<symmod::PrueferPart> pruefer;
  if ((ring.is_integers() || ring.is_localized()) && rng.chance(30)) {
    Int p = ring.is_localized() ? ring.modulus() : pick_prime(rng, bounds);
    pruefer.push_back({p, static_cast<std::uint32_t>(rng.uniform(1, 2))});
  }
  return SymbolicModule(ring, fr, std::move(cyclics), std::move(families), std::move(pruefer));
}

SymbolicModule random_semisimple(DeterministicRng& rng, const RingDescriptor& ring,
                                 const GeneratorBounds& bounds) {
  if (ring.is_field()) {
    return SymbolicModule(ring, symmod::FreeRank::finite(rng.uniform(0, 3)), {}, {}, {});
  }
  std::vector<symmod::CyclicPart> cyclics;
  for (int i = static_cast<int>(rng.uniform(0, bounds.max_cyclics)); i > 0; --i) {
    Int p;
    if (ring.is_integers()) {
      p = pick_prime(rng, bounds);
    } else if (ring.is_localized()) {
      p = ring.modulus();
    } else {
      auto divs = rings::prime_divisors(ring.modulus());
      p = divs[static_cast<std::size_t>(
          rng.uniform(0, static_cast<std::int64_t>(divs.size()) - 1))];
    }
    cyclics.push_back({p, 1, static_cast<std::uint32_t>(rng.uniform(1, 2))});
  }
  std::vector<symmod::FamilyPart> families;
  if (ring.is_integers() && rng.chance(55)) {
    if (rng.chance(60)) {
      std::vector<Int> excluded;
      for (int i = static_cast<int>(rng.uniform(0, bounds.max_family_primes)); i > 0; --i) {
        excluded.push_back(pick_prime(rng, bounds));
      }
      families.push_back({PrimeSet::cofinite_maximals(ring, std::move(excluded))});
    } else {
      std::vector<Int> members;
      for (int i = static_cast<int>(rng.uniform(1, bounds.max_family_primes)); i > 0; --i) {
        members.push_back(pick_prime(rng, bounds));
      }
      families.push_back({PrimeSet::finite(ring, std::move(members))});
    }
  }
  return SymbolicModule(ring, symmod::FreeRank::finite(0), std::move(cyclics),
                        std::move(families), {});
}

// ---------------------------------------------------------------------------
// Per-instance evaluators.

namespace {

std::vector<IdealDescriptor> maximals_dividing_exponent(const FinPresModule& m) {
  std::vector<IdealDescriptor> out;
  for (const Int& p : rings::prime_divisors(m.torsion_exponent())) {
    out.push_back(IdealDescriptor::from_generator(m.ring(), p));
  }
  return out;
}

// Preimage of a hyperplane of M/pM: a maximal submodule with colon (p),
// constructed from the left Smith transform and then verified.
bool maximal_submodule_exists(const FinPresModule& m, const IdealDescriptor& p) {
  Submodule pm = Submodule::ideal_multiple(m, p);
  if (pm.is_whole()) return false;
  auto dec = exactlin::snf_with_left_transform(pm.lattice().basis());
  exactlin::Index j = -1;
  for (std::size_t i = 0; i < dec.invariant_factors.size(); ++i) {
    if (!dec.invariant_factors[i].is_one()) {
      j = static_cast<exactlin::Index>(i);
      break;
    }
  }
  if (j < 0) return false;
  const exactlin::Index g = m.n_gens();
  Int pval = p.is_zero() ? m.ring().modulus() : p.generator();
  exactlin::IntMatrix gens(g, g);
  for (exactlin::Index i = 0; i < g; ++i) {
    gens.col(i) = dec.left_inv.col(i);
    if (i == j) gens.col(i) *= pval;
  }
  auto lattice = exactlin::IntegerLattice::from_generators(g, gens);
  if (!exactlin::lattice_contains(lattice, m.relations())) return false;
  auto size = exactlin::quotient_size(lattice);
  if (!size || *size != pval) return false;  // index p <=> maximal
  auto check = fgmod::is_prime_submodule(Submodule::from_lattice(m, lattice));
  return check.is_prime && check.prime == p;
}

bool quotient_is_hilbert(const RingDescriptor& ring, const IdealDescriptor& ann) {
  // R/Ann: quotients of Z, Z/n, F_p are Hilbert; Z_(p)/(0) is Z_(p) itself.
  return !(ring.is_localized() && ann.is_zero());
}

}  // namespace

std::array<bool, 4> prop21_conditions(const FinPresModule& m, std::int64_t bound) {
  if (!m.is_finite()) throw UnsupportedError("prop21_conditions: instance must be finite");
  auto primes_of_m = fgmod::prime_submodules_oracle(m, bound);

  std::vector<IdealDescriptor> ideals;  // every ideal over Ann(M)
  for (const Int& d : rings::divisors(m.torsion_exponent())) {
    ideals.push_back(IdealDescriptor::from_generator(m.ring(), d));
  }
  std::vector<IdealDescriptor> primes;  // every prime over Ann(M)
  for (const auto& i : ideals) {
    if (rings::is_prime_ideal(i)) primes.push_back(i);
  }

  auto radical_colon_matches = [&](const IdealDescriptor& i) {
    Submodule im = Submodule::ideal_multiple(m, i);
    return fgmod::colon(fgmod::prime_radical(im)) == rings::radical_ideal(m.ring(), i);
  };
  auto oracle_intersection_matches = [&](const IdealDescriptor& i) {
    Submodule im = Submodule::ideal_multiple(m, i);
    IdealDescriptor meet = IdealDescriptor::unit(m.ring());
    for (const Submodule& p : primes_of_m) {
      if (!exactlin::lattice_contains(p.lattice(), im.lattice())) continue;
      meet = rings::ideal_intersection(meet, fgmod::colon(p));
    }
    return meet == rings::radical_ideal(m.ring(), i);
  };

  std::array<bool, 4> out{true, true, true, true};
  for (const auto& i : ideals) out[0] = out[0] && radical_colon_matches(i);
  for (const auto& p : primes) out[1] = out[1] && radical_colon_matches(p);
  for (const auto& i : ideals) out[2] = out[2] && oracle_intersection_matches(i);
  for (const auto& p : primes) out[3] = out[3] && oracle_intersection_matches(p);
  return out;
}

namespace {

std::array<bool, 5> prop29_finpres(const FinPresModule& m) {
  // Over Z with free rank > 0 the maximal ideals away from the torsion
  // exponent hold structurally for all five conditions (pM is then a proper
  // (p)-prime with an elementary quotient); only the listed primes can vary.
  std::array<bool, 5> out{true, true, true, true, true};
  for (const IdealDescriptor& p : maximals_dividing_exponent(m)) {
    Submodule pm = Submodule::ideal_multiple(m, p);
    bool proper = !pm.is_whole();
    out[1] = out[1] && proper;
    out[0] = out[0] && fgmod::colon(fgmod::prime_radical(pm)) == p;
    out[3] = out[3] && maximal_submodule_exists(m, p);
    auto pc = fgmod::is_prime_submodule(pm);
    out[4] = out[4] && pc.is_prime && pc.prime == p;
  }
  out[2] = out[1];
  if (fgmod::ann(m).is_zero() && m.ring().is_integers()) {
    out[2] = out[2] && !m.is_zero_module();  // (0)M = (0) != M
  }
  return out;
}

std::array<bool, 5> prop29_symbolic(const SymbolicModule& m) {
  // Closed forms: (1) and (2) coincide because the radical of a proper pM is
  // pM itself; (4) and (5) hold exactly when pM != M, the witness dropping
  // one realizing component to its p-multiple. (3) adds the prime (0) over a
  // domain, where (0)M = 0 is proper unless M = 0.
  bool sweep = symmod::check_m_radical(m).verdict;
  std::array<bool, 5> out{sweep, sweep, sweep, sweep, sweep};
  if (rings::zero_prime_over(m.ring(), symmod::ann(m))) {
    out[2] = out[2] && !m.is_zero_module();
  }
  return out;
}

}  // namespace

std::array<bool, 5> prop29_conditions(const ModuleHandle& m, std::int64_t) {
  if (std::holds_alternative<FinPresModule>(m)) {
    return prop29_finpres(std::get<FinPresModule>(m));
  }
  return prop29_symbolic(std::get<SymbolicModule>(m));
}

ChainFlags chain_flags(const ModuleHandle& m, std::int64_t bound) {
  ChainFlags f;
  if (std::holds_alternative<FinPresModule>(m)) {
    const auto& fp = std::get<FinPresModule>(m);
    f.finitely_generated = true;
    f.primeful = fgmod::check_primeful(fp).verdict;
    f.p_radical = fgmod::check_p_radical(fp).verdict;
    f.m_radical = fgmod::check_m_radical(fp).verdict;
    f.colon_equality = true;
    for (const IdealDescriptor& p : maximals_dividing_exponent(fp)) {
      f.colon_equality =
          f.colon_equality && fgmod::colon(Submodule::ideal_multiple(fp, p)) == p;
    }
    // ((0)M : M) = Ann(M) holds identically at the prime (0).
    f.multiplication_applicable = fp.is_cyclic() || fp.is_finite();
    if (f.multiplication_applicable) f.multiplication = fgmod::is_multiplication(fp, bound);
  } else {
    const auto& sm = std::get<SymbolicModule>(m);
    f.finitely_generated = sm.is_finitely_generated();
    f.primeful = symmod::check_primeful(sm).verdict;
    f.p_radical = symmod::check_p_radical(sm).verdict;
    f.m_radical = symmod::check_m_radical(sm).verdict;
    // At a maximal ideal (pM : M) = (p) iff pM != M; at (0) the equality
    // reads ((0)M : M) = Ann(M) = (0), automatic. So the colon condition
    // coincides with the maxful sweep.
    f.colon_equality = f.m_radical;
    f.multiplication_applicable = false;
  }
  return f;
}

namespace {

SuiteReport make_report(const std::string& id, std::uint64_t seed) {
  SuiteReport r;
  r.suite = id;
  r.seed = seed;
  r.covers = suite_covers(id);
  return r;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

SuiteReport verify_prop21(const FinPresModule& m, std::int64_t bound) {
  Timer timer;
  SuiteReport report = make_report("prop_2_1", 0);
  report.trials = 1;
  auto c = prop21_conditions(m, bound);
  if (!(c[0] == c[1] && c[1] == c[2] && c[2] == c[3])) {
    std::string bits;
    for (bool b : c) bits += b ? '1' : '0';
    report.failures.push_back({json_io::module_to_json(ModuleHandle(m)), std::nullopt,
                               "conditions disagree: " + bits});
  }
  report.elapsed_ms = timer.ms();
  return report;
}

SuiteReport verify_prop29(const ModuleHandle& m, std::int64_t bound) {
  Timer timer;
  SuiteReport report = make_report("prop_2_9", 0);
  report.trials = 1;
  auto c = prop29_conditions(m, bound);
  if (!std::all_of(c.begin(), c.end(), [&](bool b) { return b == c[0]; })) {
    std::string bits;
    for (bool b : c) bits += b ? '1' : '0';
    report.failures.push_back(
        {json_io::module_to_json(m), std::nullopt, "conditions disagree: " + bits});
  }
  report.elapsed_ms = timer.ms();
  return report;
}

SuiteReport verify_chain(const ModuleHandle& m, std::int64_t bound) {
  Timer timer;
  SuiteReport report = make_report("chain", 0);
  report.trials = 1;
  ChainFlags f = chain_flags(m, bound);
  std::string reason;
  if (f.finitely_generated && !f.primeful) reason = "finitely generated but not primeful";
  if (f.primeful && !f.p_radical) reason = "primeful but not P-radical";
  if (f.p_radical && !f.colon_equality) reason = "P-radical but colon equality fails";
  if (f.colon_equality && !f.m_radical) reason = "colon equality without M-radical";
  if (f.multiplication_applicable && f.multiplication && f.m_radical && !f.primeful) {
    reason = "multiplication module where the chain does not close";
  }
  if (!reason.empty()) {
    report.failures.push_back({json_io::module_to_json(m), std::nullopt, reason});
  }
  report.elapsed_ms = timer.ms();
  return report;
}

// ---------------------------------------------------------------------------
// Corpus suites.

namespace {

struct SuiteInfo {
  const char* id;
  std::vector<std::string> covers;
};

const std::vector<SuiteInfo>& suite_table() {
  static const std::vector<SuiteInfo> table = {
      {"prop_2_1", {"2.1"}},
      {"prop_2_9", {"2.9"}},
      {"cor_2_4", {"2.4"}},
      {"prop_2_7", {"2.7"}},
      {"lemma_2_10", {"2.10"}},
      {"thm_2_11", {"2.11"}},
      {"thm_2_12_13_16", {"2.12", "2.13", "2.16", "2.17"}},
      {"chain", {"2.3", "2.18"}},
      {"nakayama", {"2.19"}},
      {"semisimple", {"3.1", "3.3", "3.4", "3.5", "3.6", "3.7", "3.8"}},
      {"gallery", {"2.6", "3.2"}},
  };
  return table;
}

using Property = std::function<std::optional<std::string>(const ModuleHandle&, std::int64_t)>;

std::optional<std::string> prop21_property(const ModuleHandle& m, std::int64_t bound) {
  if (!std::holds_alternative<FinPresModule>(m)) return "not a finite presented instance";
  const auto& fp = std::get<FinPresModule>(m);
  if (!fp.is_finite()) return "not a finite presented instance";
  auto c = prop21_conditions(fp, bound);
  if (c[0] == c[1] && c[1] == c[2] && c[2] == c[3]) return std::nullopt;
  std::string bits;
  for (bool b : c) bits += b ? '1' : '0';
  return "conditions disagree: " + bits;
}

std::optional<std::string> prop29_property(const ModuleHandle& m, std::int64_t bound) {
  auto c = prop29_conditions(m, bound);
  if (std::all_of(c.begin(), c.end(), [&](bool b) { return b == c[0]; })) return std::nullopt;
  std::string bits;
  for (bool b : c) bits += b ? '1' : '0';
  return "conditions disagree: " + bits;
}

std::optional<std::string> cor24_property(const ModuleHandle& m, std::int64_t) {
  if (!std::holds_alternative<FinPresModule>(m)) return "not a presented instance";
  const auto& fp = std::get<FinPresModule>(m);
  if (!fgmod::check_primeful(fp).verdict) return "finitely presented instance not primeful";
  if (!fgmod::check_p_radical(fp).verdict) return "finitely presented instance not P-radical";
  if (!fgmod::check_m_radical(fp).verdict) return "finitely presented instance not M-radical";
  return std::nullopt;
}

std::optional<std::string> lemma210_property(const ModuleHandle& m, std::int64_t) {
  if (!std::holds_alternative<SymbolicModule>(m)) return "not a symbolic instance";
  const auto& sm = std::get<SymbolicModule>(m);
  if (!symmod::is_primeless(sm)) return "torsion divisible instance is not primeless";
  auto realized = symmod::realized_colons(sm);
  if (!realized.maximals.is_empty() || realized.zero_prime) return "Spec(M) not empty";
  if (!sm.is_zero_module()) {
    if (symmod::check_primeful(sm).verdict) return "nonzero primeless instance primeful";
    if (symmod::check_m_radical(sm).verdict) return "nonzero primeless instance M-radical";
    if (symmod::check_p_radical(sm).verdict) return "nonzero primeless instance P-radical";
  }
  return std::nullopt;
}

std::optional<std::string> thm211_property(const ModuleHandle& m, std::int64_t) {
  bool p, mm;
  if (std::holds_alternative<FinPresModule>(m)) {
    const auto& fp = std::get<FinPresModule>(m);
    p = fgmod::check_p_radical(fp).verdict;
    mm = fgmod::check_m_radical(fp).verdict;
  } else {
    const auto& sm = std::get<SymbolicModule>(m);
    if (sm.ring().is_localized()) return "non-Hilbert ring in the Hilbert sweep";
    p = symmod::check_p_radical(sm).verdict;
    mm = symmod::check_m_radical(sm).verdict;
  }
  if (p != mm) return std::string("P-radical and M-radical disagree over a Hilbert ring");
  return std::nullopt;
}

std::optional<std::string> thm212_property(const ModuleHandle& m, std::int64_t) {
  // Over a zero-dimensional ring every module is primeful, P- and M-radical.
  bool pf, p, mm;
  if (std::holds_alternative<FinPresModule>(m)) {
    const auto& fp = std::get<FinPresModule>(m);
    pf = fgmod::check_primeful(fp).verdict;
    p = fgmod::check_p_radical(fp).verdict;
    mm = fgmod::check_m_radical(fp).verdict;
  } else {
    const auto& sm = std::get<SymbolicModule>(m);
    pf = symmod::check_primeful(sm).verdict;
    p = symmod::check_p_radical(sm).verdict;
    mm = symmod::check_m_radical(sm).verdict;
  }
  if (!(pf && p && mm)) return std::string("property failed over a dim-0 ring");
  return std::nullopt;
}

std::optional<std::string> chain_property(const ModuleHandle& m, std::int64_t bound) {
  ChainFlags f = chain_flags(m, bound);
  if (f.finitely_generated && !f.primeful) return "finitely generated but not primeful";
  if (f.primeful && !f.p_radical) return "primeful but not P-radical";
  if (f.p_radical && !f.colon_equality) return "P-radical but colon equality fails";
  if (f.colon_equality && !f.m_radical) return "colon equality without M-radical";
  if (f.multiplication_applicable && f.multiplication && f.m_radical && !f.primeful) {
    return "multiplication module where the chain does not close";
  }
  return std::nullopt;
}

std::optional<std::string> nakayama_property(const ModuleHandle& m, std::int64_t) {
  RingDescriptor ring = std::holds_alternative<FinPresModule>(m)
                            ? std::get<FinPresModule>(m).ring()
                            : std::get<SymbolicModule>(m).ring();
  IdealDescriptor jac = rings::ring_facts(ring).jacobson_radical;

  std::vector<IdealDescriptor> ideals{IdealDescriptor::zero(ring)};
  if (ring.is_mod_n()) {
    for (const Int& d : rings::divisors(ring.modulus())) {
      IdealDescriptor i = IdealDescriptor::from_generator(ring, d);
      if (rings::ideal_contains(jac, i)) ideals.push_back(i);
    }
  } else if (ring.is_localized()) {
    for (unsigned k = 1; k <= 3; ++k) {
      ideals.push_back(IdealDescriptor::from_generator(ring, pow(ring.modulus(), k)));
    }
  }

  bool zero_module, m_radical;
  std::function<bool(const IdealDescriptor&)> im_whole;
  if (std::holds_alternative<FinPresModule>(m)) {
    const auto& fp = std::get<FinPresModule>(m);
    zero_module = fp.is_zero_module();
    m_radical = fgmod::check_m_radical(fp).verdict;
    im_whole = [&fp](const IdealDescriptor& i) {
      return Submodule::ideal_multiple(fp, i).is_whole();
    };
  } else {
    const auto& sm = std::get<SymbolicModule>(m);
    zero_module = sm.is_zero_module();
    m_radical = symmod::check_m_radical(sm).verdict;
    im_whole = [&sm](const IdealDescriptor& i) { return symmod::ideal_multiple_is_whole(sm, i); };
  }

  for (const IdealDescriptor& i : ideals) {
    if (!rings::ideal_contains(jac, i)) continue;
    if (!im_whole(i)) continue;
    // IM = M with I inside the Jacobson radical: the NAK condition demands
    // M = 0, and (contrapositive) any nonzero such instance must fail the
    // M-radical check.
    if (zero_module) continue;
    if (m_radical) {
      return "IM = M with I <= J(R) on a nonzero M-radical module (I = " + i.str() + ")";
    }
  }
  return std::nullopt;
}

std::optional<std::string> semisimple_property(const ModuleHandle& m, std::int64_t) {
  if (!std::holds_alternative<SymbolicModule>(m)) return "not a symbolic instance";
  const auto& sm = std::get<SymbolicModule>(m);
  auto view = sm.semisimple_view();
  if (!view) return "generator produced a non-semisimple instance";

  bool full = symmod::is_full_semisimple(sm);
  bool mrad = symmod::check_m_radical(sm).verdict;
  bool prad = symmod::check_p_radical(sm).verdict;
  bool primeful = symmod::check_primeful(sm).verdict;
  IdealDescriptor a = symmod::ann(sm);

  if (mrad != full) return "M-radical and full semisimple disagree";
  if (prad != (mrad && quotient_is_hilbert(sm.ring(), a))) {
    return "P-radical does not match M-radical + Hilbert quotient";
  }
  bool ann_finite_meet = !rings::zero_prime_over(sm.ring(), a);
  if (ann_finite_meet && !full) return "finite intersection annihilator but not full";
  bool homogeneous = symmod::is_homogeneous_semisimple(sm);
  bool singleton =
      !view->support.is_cofinite() && view->support.gens().size() == 1 && !sm.is_zero_module();
  if (homogeneous != singleton) return "homogeneous test disagrees with singleton support";
  bool dim0 = !rings::zero_prime_over(sm.ring(), a);
  if (primeful != (full && dim0)) return "primeful does not match full + dim 0";
  if (sm.ring().is_integers() && prad != mrad) {
    return "P/M-radical disagree over the dim-1 Hilbert domain";
  }
  return std::nullopt;
}

Property property_for(const std::string& id) {
  if (id == "prop_2_1") return prop21_property;
  if (id == "prop_2_9") return prop29_property;
  if (id == "cor_2_4") return cor24_property;
  if (id == "lemma_2_10") return lemma210_property;
  if (id == "thm_2_11") return thm211_property;
  if (id == "thm_2_12_13_16") return thm212_property;
  if (id == "chain") return chain_property;
  if (id == "nakayama") return nakayama_property;
  if (id == "semisimple") return semisimple_property;
  return nullptr;
}

void record_failure(SuiteReport& report, const ModuleHandle& inst, const std::string& reason,
                    const Property& prop, std::int64_t bound) {
  FailureRecord rec;
  rec.instance = json_io::module_to_json(inst);
  rec.reason = reason;
  ModuleHandle shrunk = shrink_instance(inst, [&](const ModuleHandle& h) {
    try {
      return prop(h, bound).has_value();
    } catch (const std::exception&) {
      return false;  // invalid shrink candidates do not count as failures
    }
  });
  rec.shrunk = json_io::module_to_json(shrunk);
  report.failures.push_back(std::move(rec));
}

void run_over_corpus(SuiteReport& report, const std::vector<ModuleHandle>& corpus,
                     const Property& prop, std::int64_t bound) {
  for (const ModuleHandle& inst : corpus) {
    std::optional<std::string> fail;
    try {
      fail = prop(inst, bound);
    } catch (const exactlin::SizeBoundError&) {
      continue;  // instance outside the oracle bound, skip
    }
    if (fail) record_failure(report, inst, *fail, prop, bound);
  }
  report.trials = static_cast<int>(corpus.size());
}

FinPresModule finite_finpres(DeterministicRng& rng, const RingDescriptor& ring,
                             const GeneratorBounds& bounds, std::int64_t size_cap) {
  // Rejection-sample a finite instance within the given size. Square
  // presentations are usually finite; fall back to a diagonal one.
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto g = static_cast<exactlin::Index>(rng.uniform(1, std::min(bounds.max_gens, 3)));
    exactlin::IntMatrix rel(g, g);
    for (exactlin::Index j = 0; j < g; ++j) {
      for (exactlin::Index i = 0; i < g; ++i) {
        rel(i, j) = Int(rng.uniform(-bounds.max_entry / 2, bounds.max_entry / 2));
      }
    }
    FinPresModule m(ring, g, rel);
    if (m.is_finite() && m.size() <= Int(size_cap) && m.size() > Int(1)) return m;
  }
  exactlin::IntMatrix diag = exactlin::IntMatrix::Zero(2, 2);
  diag(0, 0) = Int(rng.uniform(2, 12));
  diag(1, 1) = diag(0, 0) * rng.uniform(1, 4);
  return FinPresModule(ring, 2, diag);
}

RingDescriptor pick_ring_where(DeterministicRng& rng, const InstanceGenerator& gen,
                               const std::function<bool(const RingDescriptor&)>& pred) {
  const auto& pool = gen.ring_pool.empty() ? default_ring_pool() : gen.ring_pool;
  std::vector<RingDescriptor> filtered;
  for (const auto& r : pool) {
    if (pred(r)) filtered.push_back(r);
  }
  if (filtered.empty()) throw UnsupportedError("suite: no suitable ring in the pool");
  return filtered[static_cast<std::size_t>(
      rng.uniform(0, static_cast<std::int64_t>(filtered.size()) - 1))];
}

}  // namespace

std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (const auto& s : suite_table()) out.push_back(s.id);
  return out;
}

bool is_suite_id(const std::string& id) {
  for (const auto& s : suite_table()) {
    if (id == s.id) return true;
  }
  return false;
}

std::vector<std::string> suite_covers(const std::string& id) {
  for (const auto& s : suite_table()) {
    if (id == s.id) return s.covers;
  }
  return {};
}

SuiteReport run_suite(const std::string& id, const InstanceGenerator& gen, int trials,
                      std::int64_t bound) {
  if (!is_suite_id(id)) throw UnsupportedError("unknown suite: " + id);
  Timer timer;
  SuiteReport report = make_report(id, gen.seed);
  DeterministicRng rng(gen.seed);
  Property prop = property_for(id);
  std::vector<ModuleHandle> corpus;

  auto is_dim0 = [](const RingDescriptor& r) { return r.is_mod_n() || r.is_field(); };

  if (id == "prop_2_1") {
    for (int t = 0; t < trials; ++t) {
      auto ring = pick_ring_where(rng, gen, [&](const RingDescriptor& r) {
        return r.is_integers() || r.is_mod_n();
      });
      corpus.emplace_back(
          finite_finpres(rng, ring, gen.bounds, std::min<std::int64_t>(bound, 2000)));
    }
    run_over_corpus(report, corpus, prop, bound);
  } else if (id == "prop_2_9" || id == "chain") {
    for (int t = 0; t < trials; ++t) {
      auto ring = pick_ring(rng, gen);
      if ((ring.is_integers() || ring.is_mod_n()) && rng.chance(50)) {
        corpus.emplace_back(random_finpres(rng, ring, gen.bounds));
      } else {
        corpus.emplace_back(random_symbolic(rng, ring, gen.bounds));
      }
    }
    // The named counterexample shapes belong in every sweep.
    corpus.emplace_back(symmod::construct_prop27(RingDescriptor::integers()));
    corpus.emplace_back(SymbolicModule(RingDescriptor::integers(), symmod::FreeRank::finite(0),
                                       {}, {}, {symmod::PrueferPart{Int(5), 1}}));
    corpus.emplace_back(symmod::construct_thm211(RingDescriptor::localized_at(Int(5))));
    run_over_corpus(report, corpus, prop, bound);
  } else if (id == "cor_2_4") {
    auto z = RingDescriptor::integers();
    for (int t = 0; t < trials; ++t) corpus.emplace_back(random_finpres(rng, z, gen.bounds));
    run_over_corpus(report, corpus, prop, bound);
  } else if (id == "prop_2_7") {
    const auto& pool = gen.ring_pool.empty() ? default_ring_pool() : gen.ring_pool;
    report.trials = static_cast<int>(pool.size());
    for (const auto& ring : pool) {
      if (ring.is_integers()) {
        SymbolicModule m = symmod::construct_prop27(ring);
        if (!symmod::check_p_radical(m).verdict || symmod::check_primeful(m).verdict) {
          report.failures.push_back({json_io::module_to_json(ModuleHandle(m)), std::nullopt,
                                     "construction is not (P-radical and non-primeful)"});
        }
      } else {
        try {
          symmod::construct_prop27(ring);
          report.failures.push_back(
              {std::nullopt, std::nullopt,
               "construction over " + ring.label() + " should have been rejected"});
        } catch (const UnsupportedError&) {
          // expected: no prime equals the intersection of strictly larger ones
        }
      }
    }
  } else if (id == "lemma_2_10") {
    for (int t = 0; t < trials; ++t) {
      auto ring = pick_ring_where(rng, gen, [](const RingDescriptor& r) {
        return r.is_integers() || r.is_localized();
      });
      std::vector<symmod::PrueferPart> parts;
      for (int i = static_cast<int>(rng.uniform(1, 3)); i > 0; --i) {
        Int p = ring.is_localized() ? ring.modulus() : pick_prime(rng, gen.bounds);
        parts.push_back({p, static_cast<std::uint32_t>(rng.uniform(1, 2))});
      }
      corpus.emplace_back(SymbolicModule(ring, symmod::FreeRank::finite(0), {}, {}, parts));
    }
    run_over_corpus(report, corpus, prop, bound);
  } else if (id == "thm_2_11") {
    for (int t = 0; t < trials; ++t) {
      auto ring = pick_ring_where(rng, gen,
                                  [](const RingDescriptor& r) { return rings::is_hilbert(r); });
      if ((ring.is_integers() || ring.is_mod_n()) && rng.chance(45)) {
        corpus.emplace_back(random_finpres(rng, ring, gen.bounds));
      } else {
        corpus.emplace_back(random_symbolic(rng, ring, gen.bounds));
      }
    }
    run_over_corpus(report, corpus, prop, bound);
    // Non-Hilbert side: the construction certifies the gap.
    SymbolicModule witness = symmod::construct_thm211(RingDescriptor::localized_at(Int(5)));
    report.trials += 1;
    bool mrad = symmod::check_m_radical(witness).verdict;
    bool prad = symmod::check_p_radical(witness).verdict;
    if (!mrad || prad) {
      report.failures.push_back({json_io::module_to_json(ModuleHandle(witness)), std::nullopt,
                                 "construction over Z_(5) must be M-radical and not P-radical"});
    }
  } else if (id == "thm_2_12_13_16") {
    for (int t = 0; t < trials; ++t) {
      auto ring = pick_ring_where(rng, gen, is_dim0);
      if (ring.is_mod_n() && rng.chance(55)) {
        corpus.emplace_back(random_finpres(rng, ring, gen.bounds));
      } else {
        corpus.emplace_back(random_symbolic(rng, ring, gen.bounds));
      }
    }
    run_over_corpus(report, corpus, prop, bound);
    // Over the dim >= 1 rings the equivalences must break somewhere.
    SymbolicModule z_witness = symmod::construct_prop27(RingDescriptor::integers());
    report.trials += 2;
    if (symmod::check_primeful(z_witness).verdict) {
      report.failures.push_back({json_io::module_to_json(ModuleHandle(z_witness)), std::nullopt,
                                 "expected a non-primeful module over Z"});
    }
    SymbolicModule loc_witness(RingDescriptor::localized_at(Int(5)), symmod::FreeRank::finite(0),
                               {}, {}, {symmod::PrueferPart{Int(5), 1}});
    if (symmod::check_m_radical(loc_witness).verdict) {
      report.failures.push_back({json_io::module_to_json(ModuleHandle(loc_witness)), std::nullopt,
                                 "expected a non-M-radical module over Z_(5)"});
    }
  } else if (id == "nakayama") {
    for (int t = 0; t < trials; ++t) {
      auto ring = pick_ring(rng, gen);
      if ((ring.is_integers() || ring.is_mod_n()) && rng.chance(60)) {
        corpus.emplace_back(random_finpres(rng, ring, gen.bounds));
      } else {
        corpus.emplace_back(random_symbolic(rng, ring, gen.bounds));
      }
    }
    corpus.emplace_back(SymbolicModule(RingDescriptor::localized_at(Int(5)),
                                       symmod::FreeRank::finite(0), {}, {},
                                       {symmod::PrueferPart{Int(5), 1}}));
    run_over_corpus(report, corpus, prop, bound);
  } else if (id == "semisimple") {
    for (int t = 0; t < trials; ++t) {
      auto ring = pick_ring(rng, gen);
      corpus.emplace_back(random_semisimple(rng, ring, gen.bounds));
    }
    run_over_corpus(report, corpus, prop, bound);
  } else if (id == "gallery") {
    auto checks = run_gallery();
    report.trials = static_cast<int>(checks.size());
    for (const auto& c : checks) {
      if (!c.ok) {
        report.failures.push_back({std::nullopt, std::nullopt,
                                   c.name + "/" + c.property + ": computed " + c.computed +
                                       ", expected " + c.expected});
      }
    }
  }
  report.elapsed_ms = timer.ms();
  return report;
}

bool rerun_failure(const std::string& id, const json& failure, std::int64_t bound) {
  Property prop = property_for(id);
  if (!prop) return true;  // construction-level failure, nothing to re-run
  const json* payload = nullptr;
  if (failure.contains("shrunk") && !failure.at("shrunk").is_null()) {
    payload = &failure.at("shrunk");
  } else if (failure.contains("instance") && !failure.at("instance").is_null()) {
    payload = &failure.at("instance");
  }
  if (!payload) return true;
  ModuleHandle m = json_io::module_from_json(*payload);
  try {
    return prop(m, bound).has_value();
  } catch (const std::exception&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Shrinking.

namespace {

std::vector<ModuleHandle> shrink_candidates(const ModuleHandle& h) {
  std::vector<ModuleHandle> out;
  auto push = [&](const std::function<ModuleHandle()>& make) {
    try {
      out.push_back(make());
    } catch (const std::exception&) {
      // candidate violated a constructor invariant; skip it
    }
  };
  if (std::holds_alternative<FinPresModule>(h)) {
    const auto& m = std::get<FinPresModule>(h);
    const exactlin::IntMatrix& b = m.relations().basis();
    for (exactlin::Index j = 0; j < b.cols(); ++j) {
      push([&, j] {
        exactlin::IntMatrix rel(b.rows(), b.cols() - 1);
        exactlin::Index c = 0;
        for (exactlin::Index k = 0; k < b.cols(); ++k) {
          if (k != j) rel.col(c++) = b.col(k);
        }
        return ModuleHandle(FinPresModule(m.ring(), m.n_gens(), rel));
      });
    }
    for (exactlin::Index i = 0; i < b.rows(); ++i) {
      push([&, i] {
        exactlin::IntMatrix rel(b.rows() - 1, b.cols());
        exactlin::Index r = 0;
        for (exactlin::Index k = 0; k < b.rows(); ++k) {
          if (k != i) rel.row(r++) = b.row(k);
        }
        return ModuleHandle(FinPresModule(m.ring(), m.n_gens() - 1, rel));
      });
    }
    for (exactlin::Index j = 0; j < b.cols(); ++j) {
      for (exactlin::Index i = 0; i < b.rows(); ++i) {
        if (b(i, j).is_zero()) continue;
        push([&, i, j] {
          exactlin::IntMatrix rel = b;
          rel(i, j) = Int(0);
          return ModuleHandle(FinPresModule(m.ring(), m.n_gens(), rel));
        });
        if (abs(b(i, j)) >= Int(2)) {
          push([&, i, j] {
            exactlin::IntMatrix rel = b;
            rel(i, j) = rel(i, j) / Int(2);
            return ModuleHandle(FinPresModule(m.ring(), m.n_gens(), rel));
          });
        }
      }
    }
    return out;
  }

  const auto& m = std::get<SymbolicModule>(h);
  auto rebuild = [&](symmod::FreeRank fr, std::vector<symmod::CyclicPart> cy,
                     std::vector<symmod::FamilyPart> fa, std::vector<symmod::PrueferPart> pr) {
    return ModuleHandle(
        SymbolicModule(m.ring(), fr, std::move(cy), std::move(fa), std::move(pr)));
  };
  for (std::size_t i = 0; i < m.cyclics().size(); ++i) {
    push([&, i] {
      auto cy = m.cyclics();
      cy.erase(cy.begin() + static_cast<std::ptrdiff_t>(i));
      return rebuild(m.free_rank(), cy, m.families(), m.pruefer());
    });
    if (m.cyclics()[i].exponent > 1) {
      push([&, i] {
        auto cy = m.cyclics();
        cy[i].exponent -= 1;
        return rebuild(m.free_rank(), cy, m.families(), m.pruefer());
      });
    }
    if (m.cyclics()[i].multiplicity > 1) {
      push([&, i] {
        auto cy = m.cyclics();
        cy[i].multiplicity = 1;
        return rebuild(m.free_rank(), cy, m.families(), m.pruefer());
      });
    }
  }
  for (std::size_t i = 0; i < m.families().size(); ++i) {
    push([&, i] {
      auto fa = m.families();
      fa.erase(fa.begin() + static_cast<std::ptrdiff_t>(i));
      return rebuild(m.free_rank(), m.cyclics(), fa, m.pruefer());
    });
    for (std::size_t g = 0; g < m.families()[i].primes.gens().size(); ++g) {
      push([&, i, g] {
        auto fa = m.families();
        auto gens = fa[i].primes.gens();
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(g));
        fa[i].primes = fa[i].primes.is_cofinite() ? PrimeSet::cofinite_maximals(m.ring(), gens)
                                                  : PrimeSet::finite(m.ring(), gens);
        return rebuild(m.free_rank(), m.cyclics(), fa, m.pruefer());
      });
    }
  }
  for (std::size_t i = 0; i < m.pruefer().size(); ++i) {
    push([&, i] {
      auto pr = m.pruefer();
      pr.erase(pr.begin() + static_cast<std::ptrdiff_t>(i));
      return rebuild(m.free_rank(), m.cyclics(), m.families(), pr);
    });
    if (m.pruefer()[i].multiplicity > 1) {
      push([&, i] {
        auto pr = m.pruefer();
        pr[i].multiplicity = 1;
        return rebuild(m.free_rank(), m.cyclics(), m.families(), pr);
      });
    }
  }
  if (m.free_rank().infinite) {
    push([&] {
      return rebuild(symmod::FreeRank::finite(2), m.cyclics(), m.families(), m.pruefer());
    });
  } else if (m.free_rank().count > 0) {
    push([&] {
      return rebuild(symmod::FreeRank::finite(m.free_rank().count - 1), m.cyclics(),
                     m.families(), m.pruefer());
    });
  }
  return out;
}

}  // namespace

ModuleHandle shrink_instance(const ModuleHandle& failing,
                             const std::function<bool(const ModuleHandle&)>& still_fails) {
  ModuleHandle current = failing;
  for (int step = 0; step < 400; ++step) {
    bool progressed = false;
    for (const ModuleHandle& cand : shrink_candidates(current)) {
      bool fails = false;
      try {
        fails = still_fails(cand);
      } catch (const std::exception&) {
        fails = false;
      }
      if (fails) {
        current = cand;
        progressed = true;
        break;
      }
    }
    if (!progressed) break;
  }
  return current;
}

json SuiteReport::to_json() const {
  json fs = json::array();
  for (const auto& f : failures) {
    json rec{{"reason", f.reason}};
    rec["instance"] = f.instance ? *f.instance : json(nullptr);
    rec["shrunk"] = f.shrunk ? *f.shrunk : json(nullptr);
    fs.push_back(std::move(rec));
  }
  return json{{"suite", suite},   {"trials", trials}, {"failures", fs},
              {"seed", seed},     {"covers", covers}, {"elapsed_ms", elapsed_ms}};
}

// ---------------------------------------------------------------------------
// Gallery.

std::vector<std::string> gallery_names() {
  return {"example_2_6", "example_3_2_M1", "thm_2_11_Zloc5", "pruefer_Z5inf"};
}

ModuleHandle gallery_module(const std::string& name) {
  auto z = RingDescriptor::integers();
  if (name == "example_2_6") return ModuleHandle(symmod::construct_prop27(z));
  if (name == "example_3_2_M1") {
    return ModuleHandle(
        SymbolicModule(z, symmod::FreeRank::finite(0), {},
                       {symmod::FamilyPart{PrimeSet::cofinite_maximals(z, {Int(2)})}}, {}));
  }
  if (name == "thm_2_11_Zloc5") {
    return ModuleHandle(symmod::construct_thm211(RingDescriptor::localized_at(Int(5))));
  }
  if (name == "pruefer_Z5inf") {
    return ModuleHandle(
        SymbolicModule(z, symmod::FreeRank::finite(0), {}, {}, {symmod::PrueferPart{Int(5), 1}}));
  }
  throw UnsupportedError("unknown gallery instance: " + name);
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

void expect(std::vector<GalleryCheck>& out, const std::string& name, const std::string& property,
            const std::string& computed, const std::string& expected) {
  out.push_back({name, property, computed, expected, computed == expected});
}

}  // namespace

std::vector<GalleryCheck> run_gallery() {
  std::vector<GalleryCheck> out;
  for (const std::string& name : gallery_names()) {
    ModuleHandle handle = gallery_module(name);
    const auto& sm = std::get<SymbolicModule>(handle);
    std::string full = sm.is_semisimple() ? bool_str(symmod::is_full_semisimple(sm)) : "n/a";
    std::string expected_pradical, expected_mradical, expected_full, expected_primeless;
    if (name == "example_2_6") {
      expected_pradical = "true";
      expected_mradical = "true";
      expected_full = "true";
      expected_primeless = "false";
    } else if (name == "example_3_2_M1") {
      expected_pradical = "false";
      expected_mradical = "false";
      expected_full = "false";
      expected_primeless = "false";
    } else if (name == "thm_2_11_Zloc5") {
      expected_pradical = "false";
      expected_mradical = "true";
      expected_full = "n/a";
      expected_primeless = "false";
    } else {  // pruefer_Z5inf
      expected_pradical = "false";
      expected_mradical = "false";
      expected_full = "n/a";
      expected_primeless = "true";
    }
    expect(out, name, "primeful", bool_str(symmod::check_primeful(sm).verdict), "false");
    expect(out, name, "pradical", bool_str(symmod::check_p_radical(sm).verdict),
           expected_pradical);
    expect(out, name, "mradical", bool_str(symmod::check_m_radical(sm).verdict),
           expected_mradical);
    expect(out, name, "fullsemisimple", full, expected_full);
    expect(out, name, "primeless", bool_str(symmod::is_primeless(sm)), expected_primeless);

    if (name == "example_2_6") {
      auto realized = symmod::realized_colons(sm);
      expect(out, name, "psi_image", realized.maximals.str(), "all maximal ideals");
      expect(out, name, "psi_zero_prime", bool_str(realized.zero_prime), "false");
    }
    if (name == "thm_2_11_Zloc5") {
      expect(out, name, "zero_radical_colon", symmod::zero_radical_colon(sm).str(), "(5)");
      auto cert = symmod::check_p_radical(sm);
      std::string failing = "none";
      for (const auto& e : cert.per_prime) {
        if (!e.ok) failing = e.prime.str();
      }
      expect(out, name, "failing_prime", failing, "(0)");
    }
    if (name == "pruefer_Z5inf") {
      auto realized = symmod::realized_colons(sm);
      bool empty_spec = realized.maximals.is_empty() && !realized.zero_prime;
      expect(out, name, "spec_empty", bool_str(empty_spec), "true");
    }
  }
  return out;
}

}  // namespace modrad::harness
