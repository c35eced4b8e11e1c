#ifndef MODRAD_EXACTLIN_HPP
#define MODRAD_EXACTLIN_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "modrad/bigint.hpp"

namespace modrad::exactlin {

using Index = Eigen::Index;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

bool matrices_equal(const IntMatrix& a, const IntMatrix& b);

/// Column-style Hermite normal form.
///
/// The result has the same shape and the same column span over Z as the
/// input. Pivot columns come first, ordered by increasing pivot row, followed
/// by zero columns. The pivot of a column is its bottom-most nonzero entry;
/// pivots are positive and every entry to the right of a pivot in its row is
/// reduced into [0, pivot). This form is the unique canonical representative
/// of the column span, so lattice equality is entry-wise basis equality.
IntMatrix hnf(const IntMatrix& m);

struct HnfResult {
  IntMatrix form;       // = m * transform
  IntMatrix transform;  // unimodular, cols x cols
};
HnfResult hnf_with_transform(const IntMatrix& m);

struct SnfResult {
  IntMatrix form;  // diagonal, same shape as input
  std::vector<Int> invariant_factors;  // length min(rows, cols), d_i | d_{i+1}, trailing zeros
};

/// Smith normal form with the divisibility chain d_1 | d_2 | ... and
/// trailing zeros for rank deficiency.
SnfResult snf(const IntMatrix& m);

struct SnfDecomposition {
  IntMatrix form;      // = left * m * (untracked unimodular right factor)
  IntMatrix left;      // unimodular, rows x rows
  IntMatrix left_inv;  // inverse of left
  std::vector<Int> invariant_factors;
};
SnfDecomposition snf_with_left_transform(const IntMatrix& m);

/// Basis of the integer kernel {x : m x = 0}, as columns in canonical HNF.
/// The kernel of an integer matrix is always a saturated lattice.
IntMatrix kernel(const IntMatrix& m);

/// A sublattice of Z^n held by its canonical HNF basis (no zero columns).
/// Dimensions may be zero; the rank-0 lattice and the lattice Z^0 are legal.
class IntegerLattice {
 public:
  static IntegerLattice zero(Index ambient);
  static IntegerLattice full(Index ambient);
  static IntegerLattice from_generators(Index ambient, const IntMatrix& generators);
  /// Trusted constructor: `basis` must already be canonical (checked cheaply).
  static IntegerLattice from_hnf_basis(Index ambient, IntMatrix basis);

  Index ambient_rank() const { return ambient_; }
  Index rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  /// L = Z^n (the canonical basis is the identity).
  bool is_full() const;
  bool is_full_rank() const { return rank() == ambient_; }
  bool is_zero() const { return rank() == 0; }

  /// c * L; the zero lattice when c = 0.
  IntegerLattice scaled(const Int& c) const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.ambient_ == b.ambient_ && matrices_equal(a.basis_, b.basis_);
  }
  friend bool operator!=(const IntegerLattice& a, const IntegerLattice& b) { return !(a == b); }

 private:
  IntegerLattice(Index ambient, IntMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  Index ambient_ = 0;
  IntMatrix basis_;  // ambient_ x rank, canonical
};

/// c * Z^n as a lattice.
IntegerLattice scaled_full_lattice(Index ambient, const Int& c);

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b);

/// {x : x in a and x in b}, via the kernel of the stacked basis matrix.
IntegerLattice lattice_intersect(const IntegerLattice& a, const IntegerLattice& b);

/// True iff v is an integer combination of the basis columns (decided by
/// exact back-substitution against the HNF pivots).
bool lattice_member(const IntVector& v, const IntegerLattice& l);

/// Coordinates of v in the basis of l, when v is a member.
std::optional<IntVector> lattice_solve(const IntVector& v, const IntegerLattice& l);

/// Canonical coset representative of v modulo l (pivot-row entries reduced
/// into [0, pivot)).
IntVector reduce_mod_lattice(const IntVector& v, const IntegerLattice& l);

bool lattice_contains(const IntegerLattice& outer, const IntegerLattice& inner);

/// Smallest lattice L' >= l with Z^n / L' torsion-free, i.e. (Q . l) ∩ Z^n.
IntegerLattice saturate(const IntegerLattice& l);

struct QuotientShape {
  std::vector<Int> torsion;  // invariant factors d_1 | ... | d_k of the basis (1s kept)
  Index free_rank = 0;       // ambient - rank
  Int exponent = Int(1);     // largest torsion factor, 1 when torsion-free
};

/// Structure of Z^n / l as d_i-cyclic summands plus a free part.
QuotientShape quotient_shape(const IntegerLattice& l);

/// |Z^n / l| when finite.
std::optional<Int> quotient_size(const IntegerLattice& l);

struct SizeBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coordinate system for a finite quotient Z^n / L (L of full rank):
/// y = U x identifies the quotient with ⊕_i Z/d_i. Element arithmetic runs
/// on int64 coordinate tuples; the total size is checked against a bound at
/// construction.
class FiniteQuotient {
 public:
  FiniteQuotient(const IntegerLattice& l, std::int64_t size_bound);

  Index ambient() const { return lattice_.ambient_rank(); }
  std::int64_t size() const { return size_; }
  const std::vector<std::int64_t>& dims() const { return dims_; }
  std::int64_t exponent() const { return dims_.empty() ? 1 : dims_.back(); }
  const IntegerLattice& lattice() const { return lattice_; }

  std::vector<std::int64_t> coords_of(const IntVector& x) const;
  IntVector rep_of(const std::vector<std::int64_t>& coords) const;

  std::vector<std::int64_t> add(const std::vector<std::int64_t>& a,
                                const std::vector<std::int64_t>& b) const;
  std::vector<std::int64_t> scale(std::int64_t c, const std::vector<std::int64_t>& a) const;

  std::int64_t index_of(const std::vector<std::int64_t>& coords) const;
  std::vector<std::int64_t> coords_at(std::int64_t index) const;

 private:
  IntegerLattice lattice_;
  IntMatrix u_;      // y = U x
  IntMatrix u_inv_;
  std::vector<std::int64_t> dims_;  // one per ambient coordinate, >= 1
  std::int64_t size_ = 1;
};

}  // namespace modrad::exactlin

#endif  // MODRAD_EXACTLIN_HPP
