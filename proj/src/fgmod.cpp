#include "modrad/fgmod.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace modrad::fgmod {

using exactlin::FiniteQuotient;
using exactlin::lattice_contains;
using exactlin::lattice_intersect;
using exactlin::lattice_sum;
using exactlin::quotient_shape;
using exactlin::quotient_size;
using exactlin::saturate;
using exactlin::scaled_full_lattice;
using rings::IdealDescriptor;
using rings::PrimeSet;
using rings::RingDescriptor;

namespace {

IntegerLattice make_relations(const RingDescriptor& ring, Index n_gens,
                              const IntMatrix& relation_gens) {
  if (!(ring.is_integers() || ring.is_mod_n())) {
    throw UnsupportedError("finitely presented modules are supported over Z and Z/n only");
  }
  if (n_gens < 0 || relation_gens.rows() != n_gens) {
    throw std::invalid_argument("FinPresModule: relation rows must equal the generator count");
  }
  if (!ring.is_mod_n()) return IntegerLattice::from_generators(n_gens, relation_gens);
  IntMatrix gens(n_gens, relation_gens.cols() + n_gens);
  gens << relation_gens, IntMatrix::Identity(n_gens, n_gens) * ring.modulus();
  return IntegerLattice::from_generators(n_gens, gens);
}

}  // namespace

FinPresModule::FinPresModule(RingDescriptor ring, Index n_gens, const IntMatrix& relation_gens)
    : ring_(std::move(ring)),
      n_gens_(n_gens),
      relations_(make_relations(ring_, n_gens, relation_gens)) {
  auto shape = quotient_shape(relations_);
  torsion_ = std::move(shape.torsion);
  free_rank_ = shape.free_rank;
  exponent_ = shape.exponent;
}

Int FinPresModule::size() const {
  auto s = quotient_size(relations_);
  if (!s) throw UnsupportedError("FinPresModule::size: module is infinite");
  return *s;
}

bool FinPresModule::is_cyclic() const {
  Index nontrivial = free_rank_;
  for (const Int& d : torsion_) {
    if (!d.is_one()) ++nontrivial;
  }
  return nontrivial <= 1;
}

Submodule::Submodule(FinPresModule parent, const IntMatrix& generators)
    : parent_(std::move(parent)),
      lattice_(IntegerLattice::zero(parent_.n_gens())) {
  if (generators.rows() != parent_.n_gens()) {
    throw std::invalid_argument("Submodule: generator rows must equal the parent generator count");
  }
  IntMatrix gens(parent_.n_gens(), generators.cols() + parent_.relations().rank());
  gens << generators, parent_.relations().basis();
  lattice_ = IntegerLattice::from_generators(parent_.n_gens(), gens);
}

Submodule Submodule::from_lattice(FinPresModule parent, IntegerLattice lattice) {
  if (lattice.ambient_rank() != parent.n_gens() ||
      !lattice_contains(lattice, parent.relations())) {
    throw std::invalid_argument("Submodule: lattice does not contain the relation lattice");
  }
  return Submodule(std::move(parent), std::move(lattice));
}

Submodule Submodule::zero(FinPresModule parent) {
  IntegerLattice l = parent.relations();
  return Submodule(std::move(parent), std::move(l));
}

Submodule Submodule::whole(FinPresModule parent) {
  Index g = parent.n_gens();
  return Submodule(std::move(parent), IntegerLattice::full(g));
}

Submodule Submodule::ideal_multiple(FinPresModule parent, const IdealDescriptor& ideal) {
  if (ideal.ring() != parent.ring()) {
    throw std::invalid_argument("Submodule::ideal_multiple: ideal of a different ring");
  }
  Int g = ideal.is_zero() ? Int(0) : ideal.generator();
  IntegerLattice l = lattice_sum(parent.relations(), scaled_full_lattice(parent.n_gens(), g));
  return Submodule(std::move(parent), std::move(l));
}

// ---------------------------------------------------------------------------

rings::IdealDescriptor ann(const FinPresModule& m) {
  if (m.free_rank() > 0) return IdealDescriptor::zero(m.ring());
  return IdealDescriptor::from_generator(m.ring(), m.torsion_exponent());
}

rings::IdealDescriptor colon(const Submodule& n) {
  // {r : r Z^g <= L} is generated by the exponent of Z^g / L, zero when that
  // quotient has a free part.
  auto shape = quotient_shape(n.lattice());
  if (shape.free_rank > 0) return IdealDescriptor::zero(n.parent().ring());
  return IdealDescriptor::from_generator(n.parent().ring(), shape.exponent);
}

PrimeCheck is_prime_submodule(const Submodule& n) {
  if (n.is_whole()) return {};
  IdealDescriptor c = colon(n);
  if (!rings::is_prime_ideal(c)) return {};
  if (c.is_zero() && n.parent().ring().is_integers()) {
    // (0)-prime: M/N must be torsion-free, i.e. the lattice saturated. At a
    // maximal colon the quotient is a nonzero vector space, nothing to check.
    if (saturate(n.lattice()) != n.lattice()) return {};
  }
  return {true, c};
}

Submodule prime_radical(const Submodule& n) {
  // Closed form, validated against prime_radical_oracle. Write A = M/N with
  // torsion part T of exponent e. The (p)-primes over N are the preimages of
  // the proper subspaces of A/pA, which exist iff pA != A; their intersection
  // is N + pM. The minimal (0)-prime over N is the saturation of N, present
  // iff A has a free part. Intersecting everything:
  //   sqrt[p](N) = sat(N) ∩ ⋂_{p | e} (N + pM).
  // The sat term is redundant when A is torsion (the saturation is all of
  // Z^g), and the N + pM terms for p not dividing e are redundant given the
  // sat term (each contains the full torsion preimage). An empty intersection
  // leaves Z^g, i.e. the radical is M itself — no prime contains N — which
  // also realizes the adopted convention sqrt[p](M) = M.
  const FinPresModule& m = n.parent();
  const IntegerLattice& l = n.lattice();
  if (l.is_full()) return Submodule::whole(m);
  auto shape = quotient_shape(l);
  IntegerLattice acc = saturate(l);
  for (const Int& p : rings::prime_divisors(shape.exponent)) {
    acc = lattice_intersect(acc, lattice_sum(l, scaled_full_lattice(m.n_gens(), p)));
  }
  return Submodule::from_lattice(m, std::move(acc));
}

namespace {

// The finitely many maximal ideals over Ann(M) needing explicit evaluation:
// those dividing the torsion exponent. Over Z with free rank > 0 the
// cofinitely many remaining maximals are covered by the structural note.
std::vector<IdealDescriptor> explicit_maximals(const FinPresModule& m) {
  std::vector<IdealDescriptor> out;
  for (const Int& p : rings::prime_divisors(m.torsion_exponent())) {
    out.push_back(IdealDescriptor::from_generator(m.ring(), p));
  }
  return out;
}

bool has_cofinite_remainder(const FinPresModule& m) {
  return m.ring().is_integers() && m.free_rank() > 0;
}

const char* kFreeRankNote =
    "all other maximal ideals: free rank > 0 gives pM != M with M/pM a nonzero "
    "F_p-vector space, so pM is a (p)-prime submodule and the defining equality holds";

}  // namespace

PropertyCertificate check_p_radical(const FinPresModule& m) {
  PropertyCertificate cert;
  for (const IdealDescriptor& p : explicit_maximals(m)) {
    Submodule pm = Submodule::ideal_multiple(m, p);
    Submodule rad = prime_radical(pm);
    IdealDescriptor c = colon(rad);
    bool ok = c == p;
    cert.verdict = cert.verdict && ok;
    cert.per_prime.push_back(
        {p, ok, "(sqrt[p](" + p.str() + "M) : M) = " + c.str(), rad.lattice()});
  }
  if (has_cofinite_remainder(m)) {
    cert.note = kFreeRankNote;
    // The non-maximal prime (0) lies over Ann(M) = (0).
    Submodule rad0 = prime_radical(Submodule::zero(m));
    IdealDescriptor c0 = colon(rad0);
    bool ok = c0.is_zero();
    cert.verdict = cert.verdict && ok;
    cert.per_prime.push_back({IdealDescriptor::zero(m.ring()), ok,
                              "(sqrt[p]((0)M) : M) = " + c0.str(), rad0.lattice()});
  }
  return cert;
}

PropertyCertificate check_m_radical(const FinPresModule& m) {
  PropertyCertificate cert;
  for (const IdealDescriptor& p : explicit_maximals(m)) {
    Submodule pm = Submodule::ideal_multiple(m, p);
    bool ok = !pm.is_whole();
    cert.verdict = cert.verdict && ok;
    cert.per_prime.push_back({p, ok, ok ? "pM != M" : "pM = M",
                              ok ? std::optional<IntegerLattice>(pm.lattice()) : std::nullopt});
  }
  if (has_cofinite_remainder(m)) cert.note = kFreeRankNote;
  return cert;
}

PropertyCertificate check_primeful(const FinPresModule& m) {
  PropertyCertificate cert;
  for (const IdealDescriptor& p : explicit_maximals(m)) {
    Submodule pm = Submodule::ideal_multiple(m, p);
    PrimeCheck pc = is_prime_submodule(pm);
    bool ok = pc.is_prime && pc.prime == p;
    cert.verdict = cert.verdict && ok;
    cert.per_prime.push_back({p, ok, ok ? "witness pM" : "no prime submodule with this colon",
                              ok ? std::optional<IntegerLattice>(pm.lattice()) : std::nullopt});
  }
  if (has_cofinite_remainder(m)) {
    cert.note = kFreeRankNote;
    // (0) is realized by the saturation of the zero submodule (the torsion part).
    Submodule tors = Submodule::from_lattice(m, saturate(m.relations()));
    PrimeCheck pc = is_prime_submodule(tors);
    bool ok = pc.is_prime && pc.prime && pc.prime->is_zero();
    cert.verdict = cert.verdict && ok;
    cert.per_prime.push_back({IdealDescriptor::zero(m.ring()), ok,
                              ok ? "witness: saturation of (0)" : "no (0)-prime submodule",
                              ok ? std::optional<IntegerLattice>(tors.lattice()) : std::nullopt});
  }
  return cert;
}

rings::RealizedPrimes realized_colons(const FinPresModule& m) {
  bool zero = m.ring().is_integers() && m.free_rank() > 0;
  if (has_cofinite_remainder(m)) {
    return {zero, PrimeSet::cofinite_maximals(m.ring(), {})};
  }
  std::vector<Int> gens = rings::prime_divisors(m.torsion_exponent());
  return {zero, PrimeSet::finite(m.ring(), std::move(gens))};
}

bool is_multiplication(const FinPresModule& m, std::int64_t bound) {
  if (m.is_cyclic()) return true;  // N = (N : M) M holds in every cyclic module
  if (!m.is_finite()) {
    throw UnsupportedError(
        "is_multiplication: infinite non-cyclic modules are undecidable in this representation");
  }
  for (const Submodule& sub : enumerate_submodules(m, bound)) {
    if (Submodule::ideal_multiple(m, colon(sub)) != sub) return false;
  }
  return true;
}

bool check_radical_formula(const FinPresModule& m, const IdealDescriptor& i) {
  if (i.ring() != m.ring()) {
    throw std::invalid_argument("check_radical_formula: ideal of a different ring");
  }
  if (!rings::ideal_contains(i, ann(m))) {
    throw std::invalid_argument("check_radical_formula: ideal must contain Ann(M)");
  }
  Submodule left = prime_radical(Submodule::ideal_multiple(m, i));
  Submodule right = Submodule::ideal_multiple(m, rings::radical_ideal(m.ring(), i));
  return left == right;
}

// ---------------------------------------------------------------------------
// Submodule enumeration: subgroups of the finite quotient Z^g / R, walked
// top-down through maximal subgroups (prime-index kernels), deduplicated by
// element set. Element arithmetic runs on int64 indices in SNF coordinates.

namespace {

struct GroupView {
  const FiniteQuotient* q;

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    return q->index_of(q->add(q->coords_at(a), q->coords_at(b)));
  }
  std::int64_t scale(std::int64_t c, std::int64_t a) const {
    return q->index_of(q->scale(c, q->coords_at(a)));
  }
};

struct Subgroup {
  std::vector<std::int64_t> elems;  // sorted indices
  std::vector<char> mask;           // size |A|
};

Subgroup subgroup_from_mask(std::vector<char> mask) {
  Subgroup s;
  s.mask = std::move(mask);
  for (std::size_t i = 0; i < s.mask.size(); ++i) {
    if (s.mask[i]) s.elems.push_back(static_cast<std::int64_t>(i));
  }
  return s;
}

// Closure of the span with one extra element: fill cosets span + k*x until
// the shift falls back into the span.
void absorb_element(const GroupView& g, std::vector<char>& mask,
                    std::vector<std::int64_t>& elems, std::int64_t x) {
  std::vector<std::int64_t> snapshot = elems;
  std::int64_t shift = x;
  while (!mask[static_cast<std::size_t>(shift)]) {
    for (std::int64_t s : snapshot) {
      std::int64_t e = g.add(s, shift);
      if (!mask[static_cast<std::size_t>(e)]) {
        mask[static_cast<std::size_t>(e)] = 1;
        elems.push_back(e);
      }
    }
    shift = g.add(shift, x);
  }
}

std::vector<Subgroup> maximal_subgroups(const GroupView& g, const Subgroup& k) {
  std::vector<Subgroup> out;
  const std::int64_t order = static_cast<std::int64_t>(k.elems.size());
  if (order <= 1) return out;
  for (const Int& pi : rings::prime_divisors(Int(order))) {
    std::int64_t p = pi.to_int64();
    // pK, then an F_p-basis of K/pK with coordinates for every element of K.
    std::vector<char> span(k.mask.size(), 0);
    std::vector<std::int64_t> span_list;
    for (std::int64_t e : k.elems) {
      std::int64_t pe = g.scale(p, e);
      if (!span[static_cast<std::size_t>(pe)]) {
        span[static_cast<std::size_t>(pe)] = 1;
        span_list.push_back(pe);
      }
    }
    if (static_cast<std::int64_t>(span_list.size()) == order) continue;  // pK = K
    std::vector<std::vector<int>> coord(k.mask.size());
    int dim = 0;
    for (std::int64_t e : k.elems) {
      if (span[static_cast<std::size_t>(e)]) continue;
      // New basis vector: pad every known coordinate with 0, then fill the
      // p-1 new cosets with trailing coordinate c.
      std::vector<std::int64_t> snapshot = span_list;
      for (std::int64_t s : snapshot) coord[static_cast<std::size_t>(s)].push_back(0);
      std::int64_t shift = e;
      for (std::int64_t c = 1; c < p; ++c) {
        for (std::int64_t s : snapshot) {
          std::int64_t t = g.add(s, shift);
          if (!span[static_cast<std::size_t>(t)]) {
            span[static_cast<std::size_t>(t)] = 1;
            span_list.push_back(t);
            coord[static_cast<std::size_t>(t)] = coord[static_cast<std::size_t>(s)];
            coord[static_cast<std::size_t>(t)].back() = static_cast<int>(c);
          }
        }
        shift = g.add(shift, e);
      }
      ++dim;
    }
    // One maximal subgroup per hyperplane of K/pK: covectors normalized to
    // leading coefficient 1.
    std::vector<int> lambda(static_cast<std::size_t>(dim), 0);
    for (int lead = 0; lead < dim; ++lead) {
      std::fill(lambda.begin(), lambda.end(), 0);
      lambda[static_cast<std::size_t>(lead)] = 1;
      while (true) {
        std::vector<char> mask(k.mask.size(), 0);
        for (std::int64_t e : k.elems) {
          const auto& c = coord[static_cast<std::size_t>(e)];
          std::int64_t dot = 0;
          for (int i = lead; i < dim; ++i) {
            int ci = i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : 0;
            dot += static_cast<std::int64_t>(lambda[static_cast<std::size_t>(i)]) * ci;
          }
          if (dot % p == 0) mask[static_cast<std::size_t>(e)] = 1;
        }
        out.push_back(subgroup_from_mask(std::move(mask)));
        int pos = dim - 1;
        while (pos > lead) {
          if (++lambda[static_cast<std::size_t>(pos)] < p) break;
          lambda[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos == lead) break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Submodule> enumerate_submodules(const FinPresModule& m, std::int64_t bound) {
  if (!m.is_finite()) {
    throw UnsupportedError("enumerate_submodules: module is infinite");
  }
  FiniteQuotient q(m.relations(), bound);
  GroupView g{&q};
  const std::int64_t n = q.size();

  Subgroup full;
  full.mask.assign(static_cast<std::size_t>(n), 1);
  full.elems.resize(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) full.elems[static_cast<std::size_t>(i)] = i;

  struct ElemsHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const {
      std::size_t h = v.size();
      for (std::int64_t x : v) h = h * 1099511628211ULL + static_cast<std::size_t>(x) + 0x9e3779b9;
      return h;
    }
  };
  std::unordered_set<std::vector<std::int64_t>, ElemsHash> seen;
  std::deque<Subgroup> work;
  seen.insert(full.elems);
  work.push_back(std::move(full));

  std::vector<Subgroup> groups;
  while (!work.empty()) {
    Subgroup k = std::move(work.front());
    work.pop_front();
    for (Subgroup& sub : maximal_subgroups(g, k)) {
      if (seen.insert(sub.elems).second) work.push_back(std::move(sub));
    }
    groups.push_back(std::move(k));
  }

  std::vector<Submodule> out;
  out.reserve(groups.size());
  for (const Subgroup& k : groups) {
    // Greedy small generating set, then back to ambient coordinates.
    std::vector<char> span(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> span_list{0};
    span[0] = 1;
    std::vector<std::int64_t> gens;
    for (std::int64_t e : k.elems) {
      if (span[static_cast<std::size_t>(e)]) continue;
      gens.push_back(e);
      absorb_element(g, span, span_list, e);
    }
    IntMatrix cols(m.n_gens(), static_cast<Index>(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      cols.col(static_cast<Index>(i)) = q.rep_of(q.coords_at(gens[i]));
    }
    out.push_back(Submodule(m, cols));
  }

  std::sort(out.begin(), out.end(), [](const Submodule& a, const Submodule& b) {
    const IntMatrix& x = a.lattice().basis();
    const IntMatrix& y = b.lattice().basis();
    if (x.cols() != y.cols()) return x.cols() < y.cols();
    for (Index j = 0; j < x.cols(); ++j) {
      for (Index i = 0; i < x.rows(); ++i) {
        if (x(i, j) != y(i, j)) return x(i, j) < y(i, j);
      }
    }
    return false;
  });
  return out;
}

Submodule prime_radical_oracle(const Submodule& n, std::int64_t bound) {
  return prime_radical_oracle(n, prime_submodules_oracle(n.parent(), bound));
}

Submodule prime_radical_oracle(const Submodule& n, const std::vector<Submodule>& primes) {
  IntegerLattice acc = IntegerLattice::full(n.parent().n_gens());
  for (const Submodule& sub : primes) {
    if (!lattice_contains(sub.lattice(), n.lattice())) continue;
    acc = lattice_intersect(acc, sub.lattice());
  }
  // With no prime above n the accumulator stays at Z^g, i.e. the radical is M.
  return Submodule::from_lattice(n.parent(), std::move(acc));
}

std::vector<Submodule> prime_submodules_oracle(const FinPresModule& m, std::int64_t bound) {
  std::vector<Submodule> out;
  for (Submodule& sub : enumerate_submodules(m, bound)) {
    if (is_prime_submodule(sub).is_prime) out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace modrad::fgmod
