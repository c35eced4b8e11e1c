#include "modrad/rings.hpp"

#include <algorithm>

namespace modrad::rings {

namespace {

const char* kPrimalityRangeMsg =
    "primality test supported only below 3.3e24 (deterministic witness range)";

// Largest bound for which the 12-witness Miller-Rabin test is proven
// deterministic.
const Int& mr_deterministic_bound() {
  static const Int bound("3317044064679887385961981");
  return bound;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int s) {
  Int x = pow_mod(a, d, n);
  if (x.is_one() || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

}  // namespace

bool is_prime(const Int& n) {
  static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (int p : small_primes) {
    if (n == p) return true;
    if ((n % p).is_zero()) return false;
  }
  if (n >= mr_deterministic_bound()) throw UnsupportedError(kPrimalityRangeMsg);
  Int d = n - 1;
  int s = 0;
  while (d.is_even()) {
    d /= 2;
    ++s;
  }
  for (int a : small_primes) {
    if (miller_rabin_witness(n, Int(a), d, s)) return false;
  }
  return true;
}

std::vector<std::pair<Int, int>> factorize(const Int& n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  std::vector<std::pair<Int, int>> factors;
  Int rest = n;
  auto strip = [&](const Int& p) {
    int e = 0;
    while ((rest % p).is_zero()) {
      rest /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  };
  strip(Int(2));
  strip(Int(3));
  Int p(5);
  int step = 2;  // 5, 7, 11, 13, ... (6k +/- 1)
  while (p * p <= rest) {
    strip(p);
    p += step;
    step = 6 - step;
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  return factors;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

Int squarefree_kernel(const Int& n) {
  if (n.is_zero()) return Int(0);
  Int rad(1);
  for (const Int& p : prime_divisors(abs(n))) rad *= p;
  return rad;
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out{Int(1)};
  for (auto& [p, e] : factorize(n)) {
    std::size_t base = out.size();
    Int pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> primes_up_to(std::int64_t bound) {
  std::vector<Int> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(bound) + 1, true);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    out.emplace_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

RingDescriptor RingDescriptor::integers() { return {RingKind::Integers, Int(0)}; }

RingDescriptor RingDescriptor::integers_mod(const Int& n) {
  if (n < 2) throw std::invalid_argument("Z/n requires n >= 2");
  return {RingKind::IntegersModN, n};
}

RingDescriptor RingDescriptor::localized_at(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("Z_(p) requires p prime");
  return {RingKind::LocalizedAtPrime, p};
}

RingDescriptor RingDescriptor::prime_field(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("F_p requires p prime");
  return {RingKind::PrimeField, p};
}

std::string RingDescriptor::label() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::IntegersModN: return "Z/" + modulus_.str();
    case RingKind::LocalizedAtPrime: return "Z_(" + modulus_.str() + ")";
    case RingKind::PrimeField: return "F_" + modulus_.str();
  }
  return "?";
}

// ---------------------------------------------------------------------------

IdealDescriptor IdealDescriptor::from_generator(const RingDescriptor& ring, const Int& g) {
  switch (ring.kind()) {
    case RingKind::Integers:
      return {ring, abs(g)};
    case RingKind::IntegersModN: {
      // (g)/(n) = (gcd(g, n))/(n); the zero ideal is d = n.
      Int d = gcd(g, ring.modulus());
      if (d.is_zero()) d = ring.modulus();
      return {ring, d};
    }
    case RingKind::LocalizedAtPrime: {
      if (g.is_zero()) return {ring, Int(0)};
      // Units of Z_(p) are the integers prime to p: only the p-part survives.
      Int value(1);
      Int rest = abs(g);
      while ((rest % ring.modulus()).is_zero()) {
        value *= ring.modulus();
        rest /= ring.modulus();
      }
      return {ring, value};
    }
    case RingKind::PrimeField:
      return {ring, (g % ring.modulus()).is_zero() ? Int(0) : Int(1)};
  }
  throw std::logic_error("unreachable");
}

IdealDescriptor IdealDescriptor::zero(const RingDescriptor& ring) {
  return from_generator(ring, Int(0));
}

IdealDescriptor IdealDescriptor::unit(const RingDescriptor& ring) {
  return from_generator(ring, Int(1));
}

bool IdealDescriptor::is_zero() const {
  if (ring_.is_mod_n()) return gen_ == ring_.modulus();
  return gen_.is_zero();
}

bool IdealDescriptor::is_unit() const { return gen_.is_one(); }

std::string IdealDescriptor::str() const {
  std::string s = "(" + gen_.str() + ")";
  if (ring_.is_mod_n()) s += "/(" + ring_.modulus().str() + ")";
  return s;
}

bool ideal_contains(const IdealDescriptor& a, const IdealDescriptor& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ideal_contains: ring mismatch");
  // In every supported ring, containment of (a) over (b) is divisibility of
  // generators, with (0) represented by gen 0 (gen n over Z/n).
  Int ga = a.is_zero() ? Int(0) : a.generator();
  Int gb = b.is_zero() ? Int(0) : b.generator();
  if (ga.is_zero()) return gb.is_zero();
  return (gb % ga).is_zero();
}

bool is_prime_ideal(const IdealDescriptor& i) {
  const RingDescriptor& r = i.ring();
  switch (r.kind()) {
    case RingKind::Integers:
      return i.is_zero() || is_prime(i.generator());
    case RingKind::IntegersModN:
      // (d)/(n) is prime iff d is a prime number (the zero ideal d = n is
      // prime exactly when n is).
      return is_prime(i.generator());
    case RingKind::LocalizedAtPrime:
      return i.is_zero() || i.generator() == r.modulus();
    case RingKind::PrimeField:
      return i.is_zero();
  }
  return false;
}

bool is_maximal_ideal(const IdealDescriptor& i) {
  const RingDescriptor& r = i.ring();
  switch (r.kind()) {
    case RingKind::Integers:
      return is_prime(i.generator());
    case RingKind::IntegersModN:
      return is_prime(i.generator());
    case RingKind::LocalizedAtPrime:
      return i.generator() == r.modulus();
    case RingKind::PrimeField:
      return i.is_zero();
  }
  return false;
}

IdealDescriptor ideal_intersection(const IdealDescriptor& a, const IdealDescriptor& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ideal_intersection: ring mismatch");
  if (a.is_zero() || b.is_zero()) return IdealDescriptor::zero(a.ring());
  return IdealDescriptor::from_generator(a.ring(), lcm(a.generator(), b.generator()));
}

// ---------------------------------------------------------------------------

PrimeSet::PrimeSet(RingDescriptor ring, bool cofinite, std::vector<Int> gens)
    : ring_(std::move(ring)), cofinite_(cofinite), gens_(std::move(gens)) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  for (const Int& g : gens_) {
    IdealDescriptor ideal = IdealDescriptor::from_generator(ring_, g);
    bool ok = cofinite_ ? is_maximal_ideal(ideal) : is_prime_ideal(ideal);
    if (!ok) throw std::invalid_argument("PrimeSet: entry is not a prime ideal of the ring");
  }
  if (cofinite_ && !ring_.is_integers()) {
    throw std::invalid_argument("PrimeSet: cofinite sets require infinitely many maximals (Z)");
  }
}

PrimeSet PrimeSet::finite(const RingDescriptor& ring, std::vector<Int> gens) {
  return PrimeSet(ring, false, std::move(gens));
}

PrimeSet PrimeSet::cofinite_maximals(const RingDescriptor& ring, std::vector<Int> excluded) {
  return PrimeSet(ring, true, std::move(excluded));
}

PrimeSet PrimeSet::all_maximals(const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::Integers:
      return cofinite_maximals(ring, {});
    case RingKind::IntegersModN:
      return finite(ring, prime_divisors(ring.modulus()));
    case RingKind::LocalizedAtPrime:
      return finite(ring, {ring.modulus()});
    case RingKind::PrimeField:
      return finite(ring, {Int(0)});
  }
  throw std::logic_error("unreachable");
}

bool PrimeSet::contains(const Int& g) const {
  bool listed = std::binary_search(gens_.begin(), gens_.end(), g);
  return cofinite_ ? !listed : listed;
}

bool PrimeSet::covers_all_maximals() const {
  if (cofinite_) return gens_.empty();
  return prime_set_subset(all_maximals(ring_), *this);
}

std::vector<IdealDescriptor> PrimeSet::finite_ideals() const {
  if (cofinite_) throw UnsupportedError("PrimeSet: cannot materialize a cofinite set");
  std::vector<IdealDescriptor> out;
  out.reserve(gens_.size());
  for (const Int& g : gens_) out.push_back(IdealDescriptor::from_generator(ring_, g));
  return out;
}

std::string PrimeSet::str() const {
  auto list = [&] {
    std::string s = "{";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ",";
      s += IdealDescriptor::from_generator(ring_, gens_[i]).str();
    }
    return s + "}";
  };
  if (!cofinite_) return list();
  if (gens_.empty()) return "all maximal ideals";
  return "all maximal ideals except " + list();
}

PrimeSet prime_set_union(const PrimeSet& a, const PrimeSet& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("prime_set_union: ring mismatch");
  const auto& ag = a.gens();
  const auto& bg = b.gens();
  std::vector<Int> out;
  if (!a.is_cofinite() && !b.is_cofinite()) {
    out = ag;
    out.insert(out.end(), bg.begin(), bg.end());
    return PrimeSet::finite(a.ring(), std::move(out));
  }
  if (a.is_cofinite() && b.is_cofinite()) {
    std::set_intersection(ag.begin(), ag.end(), bg.begin(), bg.end(), std::back_inserter(out));
    return PrimeSet::cofinite_maximals(a.ring(), std::move(out));
  }
  const PrimeSet& co = a.is_cofinite() ? a : b;
  const PrimeSet& fin = a.is_cofinite() ? b : a;
  std::set_difference(co.gens().begin(), co.gens().end(), fin.gens().begin(), fin.gens().end(),
                      std::back_inserter(out));
  return PrimeSet::cofinite_maximals(a.ring(), std::move(out));
}

bool prime_set_subset(const PrimeSet& a, const PrimeSet& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("prime_set_subset: ring mismatch");
  if (!a.is_cofinite()) {
    return std::all_of(a.gens().begin(), a.gens().end(),
                       [&](const Int& g) { return b.contains(g); });
  }
  if (!b.is_cofinite()) return false;  // an infinite set never fits a finite one
  // cofinite(E1) subset of cofinite(E2) iff E2 subset of E1
  return std::includes(a.gens().begin(), a.gens().end(), b.gens().begin(), b.gens().end());
}

// ---------------------------------------------------------------------------

PrimeSet maximal_ideals_containing(const RingDescriptor& r, const IdealDescriptor& i) {
  if (i.ring() != r) throw std::invalid_argument("maximal_ideals_containing: ideal of wrong ring");
  switch (r.kind()) {
    case RingKind::Integers:
      if (i.is_zero()) return PrimeSet::cofinite_maximals(r, {});
      if (i.is_unit()) return PrimeSet::finite(r, {});
      return PrimeSet::finite(r, prime_divisors(i.generator()));
    case RingKind::IntegersModN: {
      if (i.is_unit()) return PrimeSet::finite(r, {});
      return PrimeSet::finite(r, prime_divisors(i.generator()));
    }
    case RingKind::LocalizedAtPrime:
      if (i.is_unit()) return PrimeSet::finite(r, {});
      return PrimeSet::finite(r, {r.modulus()});
    case RingKind::PrimeField:
      if (i.is_unit()) return PrimeSet::finite(r, {});
      return PrimeSet::finite(r, {Int(0)});
  }
  throw std::logic_error("unreachable");
}

bool zero_prime_over(const RingDescriptor& r, const IdealDescriptor& i) {
  if (!(r.is_integers() || r.is_localized())) return false;
  return i.is_zero();
}

IdealDescriptor radical_ideal(const RingDescriptor& r, const IdealDescriptor& i) {
  if (i.ring() != r) throw std::invalid_argument("radical_ideal: ideal of wrong ring");
  switch (r.kind()) {
    case RingKind::Integers:
      return IdealDescriptor::from_generator(r, squarefree_kernel(i.generator()));
    case RingKind::IntegersModN:
      // sqrt((d)/(n)) = (rad(d))/(n)
      return IdealDescriptor::from_generator(r, squarefree_kernel(i.generator()));
    case RingKind::LocalizedAtPrime:
      if (i.is_zero() || i.is_unit()) return i;
      return IdealDescriptor::from_generator(r, r.modulus());
    case RingKind::PrimeField:
      return i;
  }
  throw std::logic_error("unreachable");
}

bool is_hilbert(const RingDescriptor& r) {
  // Z: (0) is the intersection of all (p). Z/n and F_p are zero-dimensional.
  // Z_(p): (0) sits strictly under the single maximal (p).
  return !r.is_localized();
}

RingFacts ring_facts(const RingDescriptor& r) {
  switch (r.kind()) {
    case RingKind::Integers:
      return {1, false, true, false, IdealDescriptor::zero(r)};
    case RingKind::IntegersModN: {
      bool domain = is_prime(r.modulus());
      return {0, true, domain, domain,
              IdealDescriptor::from_generator(r, squarefree_kernel(r.modulus()))};
    }
    case RingKind::LocalizedAtPrime:
      return {1, false, true, false, IdealDescriptor::from_generator(r, r.modulus())};
    case RingKind::PrimeField:
      return {0, true, true, true, IdealDescriptor::zero(r)};
  }
  throw std::logic_error("unreachable");
}

}  // namespace modrad::rings
