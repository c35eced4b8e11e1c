#ifndef MODRAD_HARNESS_HPP
#define MODRAD_HARNESS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modrad/json_io.hpp"
#include "modrad/spectop.hpp"

namespace modrad::harness {

/// RNG for instance generation. Wraps mt19937_64 (whose output sequence is
/// fixed by the standard) and draws ranges by modulo, so a seed reproduces
/// the exact instance stream on any platform.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(int percent) { return uniform(0, 99) < percent; }

 private:
  std::uint64_t state_;
};

struct GeneratorBounds {
  int max_gens = 4;            // presentation matrices up to 4 x 4
  std::int64_t max_entry = 30; // entries in [-30, 30]
  int max_family_primes = 3;   // members / exclusions per family
  std::int64_t prime_bound = 97;
  int max_cyclics = 3;
  int max_exponent = 3;
};

/// Seeded instance source. Identical seed and bounds reproduce the identical
/// instance stream, byte for byte.
struct InstanceGenerator {
  std::uint64_t seed = 7;
  std::vector<rings::RingDescriptor> ring_pool;  // drawn uniformly; default pool if empty
  GeneratorBounds bounds;

  static InstanceGenerator with_seed(std::uint64_t seed);
};

const std::vector<rings::RingDescriptor>& default_ring_pool();

fgmod::FinPresModule random_finpres(DeterministicRng& rng, const rings::RingDescriptor& ring,
                                    const GeneratorBounds& bounds);
symmod::SymbolicModule random_symbolic(DeterministicRng& rng, const rings::RingDescriptor& ring,
                                       const GeneratorBounds& bounds);
symmod::SymbolicModule random_semisimple(DeterministicRng& rng, const rings::RingDescriptor& ring,
                                         const GeneratorBounds& bounds);

struct FailureRecord {
  std::optional<json_io::json> instance;  // original failing instance, if any
  std::optional<json_io::json> shrunk;    // minimized instance
  std::string reason;
};

struct SuiteReport {
  std::string suite;
  int trials = 0;
  std::vector<FailureRecord> failures;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  std::vector<std::string> covers;

  bool passed() const { return failures.empty(); }
  json_io::json to_json() const;
};

// ---------------------------------------------------------------------------
// Per-instance evaluators, shared by the corpus suites and the acceptance
// binary.

/// The four radical-colon characterizations, evaluated independently over
/// all ideals / primes over Ann(M) with the enumeration oracle on the prime
/// submodule side. Requires a finite presented module within the bound.
std::array<bool, 4> prop21_conditions(const fgmod::FinPresModule& m,
                                      std::int64_t bound = fgmod::kDefaultEnumerationBound);

/// The five maxful characterizations (radical equality, pM != M at maximals,
/// PM != M at primes, maximal-submodule witnesses, prime-submodule
/// witnesses), each evaluated on its own route.
std::array<bool, 5> prop29_conditions(const ModuleHandle& m,
                                      std::int64_t bound = fgmod::kDefaultEnumerationBound);

struct ChainFlags {
  bool finitely_generated = false;
  bool primeful = false;
  bool p_radical = false;
  bool colon_equality = false;  // (PM : M) = P at every prime over Ann(M)
  bool m_radical = false;
  bool multiplication_applicable = false;
  bool multiplication = false;
};
ChainFlags chain_flags(const ModuleHandle& m,
                       std::int64_t bound = fgmod::kDefaultEnumerationBound);

/// Single-instance suite wrappers.
SuiteReport verify_prop21(const fgmod::FinPresModule& m,
                          std::int64_t bound = fgmod::kDefaultEnumerationBound);
SuiteReport verify_prop29(const ModuleHandle& m,
                          std::int64_t bound = fgmod::kDefaultEnumerationBound);
SuiteReport verify_chain(const ModuleHandle& m,
                         std::int64_t bound = fgmod::kDefaultEnumerationBound);

// ---------------------------------------------------------------------------
// Corpus suites.

std::vector<std::string> suite_ids();
bool is_suite_id(const std::string& id);
std::vector<std::string> suite_covers(const std::string& id);

/// Runs a suite over `trials` generated instances (construction-style suites
/// ignore the trial count). Unknown ids throw UnsupportedError.
SuiteReport run_suite(const std::string& id, const InstanceGenerator& gen, int trials,
                      std::int64_t bound = fgmod::kDefaultEnumerationBound);

/// Re-evaluates a recorded failure payload; true when it still fails.
bool rerun_failure(const std::string& id, const json_io::json& failure,
                   std::int64_t bound = fgmod::kDefaultEnumerationBound);

/// Greedy minimization: drop summands / relation columns / generators and
/// shrink entries toward zero while the instance keeps failing.
ModuleHandle shrink_instance(const ModuleHandle& failing,
                             const std::function<bool(const ModuleHandle&)>& still_fails);

// ---------------------------------------------------------------------------
// Named gallery instances with their frozen verdict table. The CLI renders
// these; the acceptance suite asserts every cell.

struct GalleryCheck {
  std::string name;      // instance
  std::string property;  // verdict column or extra assertion
  std::string computed;
  std::string expected;
  bool ok = false;
};

std::vector<std::string> gallery_names();
ModuleHandle gallery_module(const std::string& name);
std::vector<GalleryCheck> run_gallery();

}  // namespace modrad::harness

#endif  // MODRAD_HARNESS_HPP
