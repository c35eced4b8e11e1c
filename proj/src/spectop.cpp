#include "modrad/spectop.hpp"

#include <algorithm>

namespace modrad::spectop {

using rings::IdealDescriptor;
using rings::PrimeSet;
using rings::RingDescriptor;

ClosedSetR::ClosedSetR(RingDescriptor ring, ClosedKind kind, std::vector<Int> gens)
    : ring_(std::move(ring)), kind_(kind), gens_(std::move(gens)) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  for (const Int& g : gens_) {
    if (!rings::is_maximal_ideal(IdealDescriptor::from_generator(ring_, g))) {
      throw std::invalid_argument("ClosedSetR: finite part must consist of maximal ideals");
    }
  }
  if (kind_ != ClosedKind::FiniteMaximals) {
    gens_.clear();
    return;
  }
  if (gens_.empty()) {
    kind_ = ClosedKind::Empty;
    return;
  }
  // Canonicalize: a finite set covering an all-maximal spectrum is Whole.
  // (Z has infinitely many maximals; Z_(p) has the extra prime (0).)
  PrimeSet all = PrimeSet::all_maximals(ring_);
  if (!all.is_cofinite() && !ring_.is_localized() &&
      std::includes(gens_.begin(), gens_.end(), all.gens().begin(), all.gens().end())) {
    kind_ = ClosedKind::Whole;
    gens_.clear();
  }
}

ClosedSetR ClosedSetR::whole(const RingDescriptor& ring) {
  return ClosedSetR(ring, ClosedKind::Whole, {});
}

ClosedSetR ClosedSetR::empty(const RingDescriptor& ring) {
  return ClosedSetR(ring, ClosedKind::Empty, {});
}

ClosedSetR ClosedSetR::finite_maximals(const RingDescriptor& ring, std::vector<Int> gens) {
  return ClosedSetR(ring, ClosedKind::FiniteMaximals, std::move(gens));
}

bool ClosedSetR::contains_prime(const IdealDescriptor& p) const {
  if (p.ring() != ring_ || !rings::is_prime_ideal(p)) {
    throw std::invalid_argument("contains_prime: expected a prime ideal of the same ring");
  }
  switch (kind_) {
    case ClosedKind::Whole: return true;
    case ClosedKind::Empty: return false;
    case ClosedKind::FiniteMaximals:
      if (!rings::is_maximal_ideal(p)) return false;  // (0) of a domain only lies in Whole
      return std::binary_search(gens_.begin(), gens_.end(),
                                p.is_zero() ? Int(0) : p.generator());
  }
  return false;
}

std::string ClosedSetR::str() const {
  switch (kind_) {
    case ClosedKind::Whole: return "whole";
    case ClosedKind::Empty: return "empty";
    case ClosedKind::FiniteMaximals: {
      std::string s = "{";
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ",";
        s += IdealDescriptor::from_generator(ring_, gens_[i]).str();
      }
      return s + "}";
    }
  }
  return "?";
}

ClosedSetR v_ideal(const RingDescriptor& r, const IdealDescriptor& i) {
  if (i.ring() != r) throw std::invalid_argument("v_ideal: ideal of a different ring");
  if (i.is_zero()) {
    // For a domain V(0) is everything. Over Z/n the zero ideal is (n)/(n)
    // and V of it is still the whole (all-maximal) spectrum.
    return ClosedSetR::whole(r);
  }
  if (i.is_unit()) return ClosedSetR::empty(r);
  PrimeSet maximals = rings::maximal_ideals_containing(r, i);
  // i != (0) excludes the cofinite case.
  return ClosedSetR::finite_maximals(r, maximals.gens());
}

OpenSetR d_basic(const RingDescriptor& r, const Int& f) {
  return {v_ideal(r, IdealDescriptor::from_generator(r, f))};
}

std::string OpenSetR::str() const {
  if (is_empty()) return "empty";
  if (is_whole()) return "whole";
  return "complement of " + complement.str();
}

namespace {

std::vector<Int> gens_union(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Int> gens_intersection(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require_same_ring(const ClosedSetR& a, const ClosedSetR& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("closed-set operation: ring mismatch");
}

}  // namespace

ClosedSetR closed_union(const ClosedSetR& a, const ClosedSetR& b) {
  require_same_ring(a, b);
  if (a.kind() == ClosedKind::Whole || b.kind() == ClosedKind::Whole) {
    return ClosedSetR::whole(a.ring());
  }
  if (a.kind() == ClosedKind::Empty) return b;
  if (b.kind() == ClosedKind::Empty) return a;
  return ClosedSetR::finite_maximals(a.ring(), gens_union(a.gens(), b.gens()));
}

ClosedSetR closed_intersection(const ClosedSetR& a, const ClosedSetR& b) {
  require_same_ring(a, b);
  if (a.kind() == ClosedKind::Empty || b.kind() == ClosedKind::Empty) {
    return ClosedSetR::empty(a.ring());
  }
  if (a.kind() == ClosedKind::Whole) return b;
  if (b.kind() == ClosedKind::Whole) return a;
  return ClosedSetR::finite_maximals(a.ring(), gens_intersection(a.gens(), b.gens()));
}

bool closed_subset(const ClosedSetR& a, const ClosedSetR& b) {
  require_same_ring(a, b);
  return closed_union(a, b) == b;
}

ClosedSetM::ClosedSetM(ModuleHandle module, IdealDescriptor radical_colon)
    : module_(std::move(module)), radical_colon_(std::move(radical_colon)) {
  const RingDescriptor& r = radical_colon_.ring();
  if (radical_colon_ != rings::radical_ideal(r, radical_colon_)) {
    throw std::invalid_argument("ClosedSetM: defining ideal must be radical");
  }
}

bool ClosedSetM::member(const IdealDescriptor& candidate_colon) const {
  return rings::ideal_contains(candidate_colon, radical_colon_);
}

ClosedSetM v_submodule(const fgmod::Submodule& n) {
  const RingDescriptor& r = n.parent().ring();
  return ClosedSetM(ModuleHandle(n.parent()), rings::radical_ideal(r, fgmod::colon(n)));
}

ClosedSetM v_symbolic_zero(const symmod::SymbolicModule& m) {
  return ClosedSetM(ModuleHandle(m), rings::radical_ideal(m.ring(), symmod::ann(m)));
}

rings::RealizedPrimes psi_image(const ModuleHandle& m) {
  if (std::holds_alternative<fgmod::FinPresModule>(m)) {
    return fgmod::realized_colons(std::get<fgmod::FinPresModule>(m));
  }
  return symmod::realized_colons(std::get<symmod::SymbolicModule>(m));
}

namespace {

rings::IdealDescriptor ann_of(const ModuleHandle& m) {
  if (std::holds_alternative<fgmod::FinPresModule>(m)) {
    return fgmod::ann(std::get<fgmod::FinPresModule>(m));
  }
  return symmod::ann(std::get<symmod::SymbolicModule>(m));
}

rings::RingDescriptor ring_of(const ModuleHandle& m) {
  if (std::holds_alternative<fgmod::FinPresModule>(m)) {
    return std::get<fgmod::FinPresModule>(m).ring();
  }
  return std::get<symmod::SymbolicModule>(m).ring();
}

}  // namespace

ClosedSetR v_of_annihilator(const ModuleHandle& m) {
  return v_ideal(ring_of(m), ann_of(m));
}

std::string psi_dot(const fgmod::FinPresModule& m, std::int64_t bound) {
  std::string out = "graph psi {\n  rankdir=LR;\n";
  std::vector<std::string> colons;
  int index = 0;
  for (const auto& sub : fgmod::prime_submodules_oracle(m, bound)) {
    IdealDescriptor c = fgmod::colon(sub);
    std::string pname = "P" + std::to_string(index++);
    std::string label;
    const auto& basis = sub.lattice().basis();
    for (exactlin::Index j = 0; j < basis.cols(); ++j) {
      if (j) label += " ";
      label += "(";
      for (exactlin::Index i = 0; i < basis.rows(); ++i) {
        if (i) label += ",";
        label += basis(i, j).str();
      }
      label += ")";
    }
    out += "  " + pname + " [shape=box,label=\"" + label + "\"];\n";
    if (std::find(colons.begin(), colons.end(), c.str()) == colons.end()) {
      colons.push_back(c.str());
      out += "  \"" + c.str() + "\" [shape=ellipse];\n";
    }
    out += "  " + pname + " -- \"" + c.str() + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace modrad::spectop
