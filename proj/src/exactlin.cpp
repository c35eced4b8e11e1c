#include "modrad/exactlin.hpp"

#include <algorithm>
#include <cassert>

namespace modrad::exactlin {

namespace {

// Pivot row of a canonical HNF column: the bottom-most nonzero entry.
Index pivot_row(const IntMatrix& basis, Index col) {
  for (Index i = basis.rows(); i-- > 0;) {
    if (!basis(i, col).is_zero()) return i;
  }
  return -1;
}

bool column_is_zero(const IntMatrix& m, Index col) {
  for (Index i = 0; i < m.rows(); ++i) {
    if (!m(i, col).is_zero()) return false;
  }
  return true;
}

// Core column reduction. Returns the number of zero columns; on exit the
// matrix is [zero columns | pivot columns] with pivot rows increasing to the
// right. `transform`, when non-null, receives the same column operations.
Index reduce_columns(IntMatrix& m, IntMatrix* transform) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index active = cols;  // columns [0, active) still unplaced

  auto add_col = [&](Index dst, Index src, const Int& q) {
    if (q.is_zero()) return;
    m.col(dst) -= q * m.col(src);
    if (transform) transform->col(dst) -= q * transform->col(src);
  };
  auto swap_col = [&](Index a, Index b) {
    if (a == b) return;
    m.col(a).swap(m.col(b));
    if (transform) transform->col(a).swap(transform->col(b));
  };
  auto negate_col = [&](Index c) {
    m.col(c) = -m.col(c);
    if (transform) transform->col(c) = -transform->col(c);
  };

  for (Index i = rows; i-- > 0 && active > 0;) {
    // Euclidean elimination in row i across the active columns.
    while (true) {
      Index smallest = -1;
      int count = 0;
      for (Index c = 0; c < active; ++c) {
        if (m(i, c).is_zero()) continue;
        ++count;
        if (smallest < 0 || abs(m(i, c)) < abs(m(i, smallest))) smallest = c;
      }
      if (count <= 1) break;
      for (Index c = 0; c < active; ++c) {
        if (c == smallest || m(i, c).is_zero()) continue;
        add_col(c, smallest, m(i, c) / m(i, smallest));
      }
    }
    Index src = -1;
    for (Index c = 0; c < active; ++c) {
      if (!m(i, c).is_zero()) { src = c; break; }
    }
    if (src < 0) continue;
    if (m(i, src).sign() < 0) negate_col(src);
    swap_col(src, active - 1);
    --active;
    // Reduce the pivot row to the right of the new pivot.
    for (Index c = active + 1; c < cols; ++c) {
      add_col(c, active, floor_div(m(i, c), m(i, active)));
    }
  }
  return active;
}

void rotate_pivots_front(IntMatrix& m, IntMatrix* transform, Index zero_count) {
  const Index cols = m.cols();
  if (zero_count == 0 || zero_count == cols) return;
  IntMatrix rotated(m.rows(), cols);
  rotated << m.rightCols(cols - zero_count), m.leftCols(zero_count);
  m = std::move(rotated);
  if (transform) {
    IntMatrix t(transform->rows(), cols);
    t << transform->rightCols(cols - zero_count), transform->leftCols(zero_count);
    *transform = std::move(t);
  }
}

}  // namespace

bool matrices_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix work = m;
  Index zeros = reduce_columns(work, nullptr);
  rotate_pivots_front(work, nullptr, zeros);
  return work;
}

HnfResult hnf_with_transform(const IntMatrix& m) {
  HnfResult out;
  out.form = m;
  out.transform = IntMatrix::Identity(m.cols(), m.cols());
  Index zeros = reduce_columns(out.form, &out.transform);
  rotate_pivots_front(out.form, &out.transform, zeros);
  return out;
}

namespace {

struct SnfWork {
  IntMatrix a;
  IntMatrix* u = nullptr;      // tracks row ops: a = u * input * (right factor)
  IntMatrix* u_inv = nullptr;

  void row_sub(Index dst, Index src, const Int& q) {
    if (q.is_zero()) return;
    a.row(dst) -= q * a.row(src);
    if (u) u->row(dst) -= q * u->row(src);
    if (u_inv) u_inv->col(src) += q * u_inv->col(dst);
  }
  void row_swap(Index r, Index s) {
    if (r == s) return;
    a.row(r).swap(a.row(s));
    if (u) u->row(r).swap(u->row(s));
    if (u_inv) u_inv->col(r).swap(u_inv->col(s));
  }
  void row_negate(Index r) {
    a.row(r) = -a.row(r);
    if (u) u->row(r) = -u->row(r);
    if (u_inv) u_inv->col(r) = -u_inv->col(r);
  }
  void col_sub(Index dst, Index src, const Int& q) {
    if (q.is_zero()) return;
    a.col(dst) -= q * a.col(src);
  }
  void col_swap(Index c, Index d) {
    if (c == d) return;
    a.col(c).swap(a.col(d));
  }
  void col_negate(Index c) { a.col(c) = -a.col(c); }
};

void smith_reduce(SnfWork& w, std::vector<Int>& factors) {
  IntMatrix& a = w.a;
  const Index rows = a.rows();
  const Index cols = a.cols();
  const Index steps = std::min(rows, cols);
  Index t = 0;
  for (; t < steps; ++t) {
    // Find the smallest nonzero entry of the trailing block and move it to (t, t).
    Index pr = -1, pc = -1;
    for (Index j = t; j < cols; ++j) {
      for (Index i = t; i < rows; ++i) {
        if (a(i, j).is_zero()) continue;
        if (pr < 0 || abs(a(i, j)) < abs(a(pr, pc))) { pr = i; pc = j; }
      }
    }
    if (pr < 0) break;
    w.row_swap(t, pr);
    w.col_swap(t, pc);

    while (true) {
      bool dirty = false;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t).is_zero()) continue;
        Int q = a(i, t) / a(t, t);
        w.row_sub(i, t, q);
        if (!a(i, t).is_zero()) { w.row_swap(t, i); dirty = true; }
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j).is_zero()) continue;
        Int q = a(t, j) / a(t, t);
        w.col_sub(j, t, q);
        if (!a(t, j).is_zero()) { w.col_swap(t, j); dirty = true; }
      }
      if (dirty) continue;
      // Row t and column t are clear; enforce d_t | (trailing block).
      bool fixed = true;
      for (Index i = t + 1; i < rows && fixed; ++i) {
        for (Index j = t + 1; j < cols && fixed; ++j) {
          if ((a(i, j) % a(t, t)).is_zero()) continue;
          w.row_sub(t, i, Int(-1));  // add row i to row t
          fixed = false;
        }
      }
      if (fixed) break;
    }
    if (a(t, t).sign() < 0) w.row_negate(t);
  }
  factors.assign(static_cast<std::size_t>(steps), Int(0));
  for (Index i = 0; i < t; ++i) factors[static_cast<std::size_t>(i)] = a(i, i);
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfWork w{m, nullptr, nullptr};
  SnfResult out;
  smith_reduce(w, out.invariant_factors);
  out.form = std::move(w.a);
  return out;
}

SnfDecomposition snf_with_left_transform(const IntMatrix& m) {
  SnfDecomposition out;
  out.left = IntMatrix::Identity(m.rows(), m.rows());
  out.left_inv = IntMatrix::Identity(m.rows(), m.rows());
  SnfWork w{m, &out.left, &out.left_inv};
  smith_reduce(w, out.invariant_factors);
  out.form = std::move(w.a);
  return out;
}

IntMatrix kernel(const IntMatrix& m) {
  HnfResult h = hnf_with_transform(m);
  Index zero_cols = 0;
  for (Index c = m.cols(); c-- > 0;) {
    if (!column_is_zero(h.form, c)) break;
    ++zero_cols;
  }
  IntMatrix gens = h.transform.rightCols(zero_cols);
  IntMatrix canon = hnf(gens);
  Index keep = 0;
  for (Index c = 0; c < canon.cols(); ++c) {
    if (!column_is_zero(canon, c)) ++keep;
  }
  return canon.leftCols(keep);
}

bool IntegerLattice::is_full() const {
  if (!is_full_rank()) return false;
  // A canonical full-rank basis is upper triangular with the pivots on the
  // diagonal, so it is the identity iff every pivot is 1.
  for (Index i = 0; i < ambient_; ++i) {
    if (!basis_(i, i).is_one()) return false;
  }
  return true;
}

IntegerLattice IntegerLattice::zero(Index ambient) {
  return IntegerLattice(ambient, IntMatrix(ambient, 0));
}

IntegerLattice IntegerLattice::full(Index ambient) {
  return IntegerLattice(ambient, IntMatrix::Identity(ambient, ambient));
}

IntegerLattice IntegerLattice::from_generators(Index ambient, const IntMatrix& generators) {
  if (generators.rows() != ambient) {
    throw std::invalid_argument("IntegerLattice: generator rows != ambient rank");
  }
  IntMatrix canon = hnf(generators);
  Index keep = 0;
  for (Index c = 0; c < canon.cols(); ++c) {
    if (!column_is_zero(canon, c)) ++keep;
  }
  return IntegerLattice(ambient, canon.leftCols(keep));
}

IntegerLattice IntegerLattice::from_hnf_basis(Index ambient, IntMatrix basis) {
  assert(basis.rows() == ambient);
  assert(matrices_equal(hnf(basis), basis));
  return IntegerLattice(ambient, std::move(basis));
}

IntegerLattice IntegerLattice::scaled(const Int& c) const {
  if (c.is_zero()) return zero(ambient_);
  // Scaling a canonical basis by |c| keeps it canonical.
  IntMatrix b = basis_ * abs(c);
  return IntegerLattice(ambient_, std::move(b));
}

IntegerLattice scaled_full_lattice(Index ambient, const Int& c) {
  return IntegerLattice::full(ambient).scaled(c);
}

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) {
    throw std::invalid_argument("lattice_sum: ambient rank mismatch");
  }
  IntMatrix gens(a.ambient_rank(), a.rank() + b.rank());
  gens << a.basis(), b.basis();
  return IntegerLattice::from_generators(a.ambient_rank(), gens);
}

IntegerLattice lattice_intersect(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) {
    throw std::invalid_argument("lattice_intersect: ambient rank mismatch");
  }
  const Index n = a.ambient_rank();
  IntMatrix stacked(n, a.rank() + b.rank());
  stacked << a.basis(), -b.basis();
  IntMatrix ker = kernel(stacked);
  IntMatrix gens = a.basis() * ker.topRows(a.rank());
  return IntegerLattice::from_generators(n, gens);
}

namespace {

// Back-substitution against HNF pivots. With `exact`, divisions must come out
// even (membership test); otherwise floor division leaves the canonical
// representative. Returns coordinates used per basis column.
struct Substitution {
  IntVector residue;
  IntVector coords;
  bool exact_ok = true;
};

Substitution back_substitute(const IntVector& v, const IntegerLattice& l, bool exact) {
  Substitution s;
  s.residue = v;
  s.coords = IntVector::Zero(l.rank());
  for (Index c = l.rank(); c-- > 0;) {
    Index r = pivot_row(l.basis(), c);
    const Int& p = l.basis()(r, c);
    if (exact) {
      Int q = s.residue(r) / p;
      if (s.residue(r) != q * p) {
        s.exact_ok = false;
        return s;
      }
      s.coords(c) = q;
      s.residue -= q * l.basis().col(c);
    } else {
      Int q = floor_div(s.residue(r), p);
      s.coords(c) = q;
      s.residue -= q * l.basis().col(c);
    }
  }
  return s;
}

bool vector_is_zero(const IntVector& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) return false;
  }
  return true;
}

}  // namespace

bool lattice_member(const IntVector& v, const IntegerLattice& l) {
  if (v.size() != l.ambient_rank()) {
    throw std::invalid_argument("lattice_member: vector length mismatch");
  }
  Substitution s = back_substitute(v, l, /*exact=*/true);
  return s.exact_ok && vector_is_zero(s.residue);
}

std::optional<IntVector> lattice_solve(const IntVector& v, const IntegerLattice& l) {
  if (v.size() != l.ambient_rank()) {
    throw std::invalid_argument("lattice_solve: vector length mismatch");
  }
  Substitution s = back_substitute(v, l, /*exact=*/true);
  if (!s.exact_ok || !vector_is_zero(s.residue)) return std::nullopt;
  return s.coords;
}

IntVector reduce_mod_lattice(const IntVector& v, const IntegerLattice& l) {
  if (v.size() != l.ambient_rank()) {
    throw std::invalid_argument("reduce_mod_lattice: vector length mismatch");
  }
  return back_substitute(v, l, /*exact=*/false).residue;
}

bool lattice_contains(const IntegerLattice& outer, const IntegerLattice& inner) {
  if (outer.ambient_rank() != inner.ambient_rank()) {
    throw std::invalid_argument("lattice_contains: ambient rank mismatch");
  }
  for (Index c = 0; c < inner.rank(); ++c) {
    if (!lattice_member(inner.basis().col(c), outer)) return false;
  }
  return true;
}

IntegerLattice saturate(const IntegerLattice& l) {
  // sat(L) = ker(ker(B^T)^T): the double orthogonal complement over Z is the
  // smallest saturated lattice with the same rational span.
  IntMatrix bt = l.basis().transpose();
  IntMatrix k1 = kernel(bt);
  IntMatrix k1t = k1.transpose();
  IntMatrix sat = kernel(k1t);
  return IntegerLattice::from_generators(l.ambient_rank(), sat);
}

QuotientShape quotient_shape(const IntegerLattice& l) {
  QuotientShape shape;
  SnfResult s = snf(l.basis());
  shape.torsion = std::move(s.invariant_factors);
  shape.free_rank = l.ambient_rank() - l.rank();
  shape.exponent = shape.torsion.empty() ? Int(1) : shape.torsion.back();
  // Basis columns are independent, so no invariant factor vanishes.
  assert(shape.torsion.empty() || !shape.torsion.back().is_zero());
  return shape;
}

std::optional<Int> quotient_size(const IntegerLattice& l) {
  if (!l.is_full_rank()) return std::nullopt;
  Int size(1);
  for (Index c = 0; c < l.rank(); ++c) {
    size *= l.basis()(pivot_row(l.basis(), c), c);
  }
  return size;
}

FiniteQuotient::FiniteQuotient(const IntegerLattice& l, std::int64_t size_bound)
    : lattice_(l) {
  if (!l.is_full_rank()) {
    throw std::invalid_argument("FiniteQuotient: quotient is infinite");
  }
  SnfDecomposition dec = snf_with_left_transform(l.basis());
  u_ = std::move(dec.left);
  u_inv_ = std::move(dec.left_inv);
  dims_.reserve(dec.invariant_factors.size());
  for (const Int& d : dec.invariant_factors) {
    if (!d.fits_int64()) throw SizeBoundError("FiniteQuotient: size bound exceeded");
    dims_.push_back(d.to_int64());
    if (size_ > size_bound / std::max<std::int64_t>(dims_.back(), 1)) {
      throw SizeBoundError("FiniteQuotient: size bound exceeded");
    }
    size_ *= dims_.back();
  }
  if (size_ > size_bound) throw SizeBoundError("FiniteQuotient: size bound exceeded");
}

std::vector<std::int64_t> FiniteQuotient::coords_of(const IntVector& x) const {
  IntVector y = u_ * x;
  std::vector<std::int64_t> coords(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    coords[i] = mod_floor(y(static_cast<Index>(i)), Int(dims_[i])).to_int64();
  }
  return coords;
}

IntVector FiniteQuotient::rep_of(const std::vector<std::int64_t>& coords) const {
  IntVector y(static_cast<Index>(dims_.size()));
  for (std::size_t i = 0; i < dims_.size(); ++i) y(static_cast<Index>(i)) = Int(coords[i]);
  return reduce_mod_lattice(u_inv_ * y, lattice_);
}

std::vector<std::int64_t> FiniteQuotient::add(const std::vector<std::int64_t>& a,
                                              const std::vector<std::int64_t>& b) const {
  std::vector<std::int64_t> out(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) out[i] = (a[i] + b[i]) % dims_[i];
  return out;
}

std::vector<std::int64_t> FiniteQuotient::scale(std::int64_t c,
                                                const std::vector<std::int64_t>& a) const {
  std::vector<std::int64_t> out(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    std::int64_t r = (c % dims_[i]) * (a[i] % dims_[i]) % dims_[i];
    out[i] = r < 0 ? r + dims_[i] : r;
  }
  return out;
}

std::int64_t FiniteQuotient::index_of(const std::vector<std::int64_t>& coords) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) idx = idx * dims_[i] + coords[i];
  return idx;
}

std::vector<std::int64_t> FiniteQuotient::coords_at(std::int64_t index) const {
  std::vector<std::int64_t> coords(dims_.size(), 0);
  for (std::size_t i = dims_.size(); i-- > 0;) {
    coords[i] = index % dims_[i];
    index /= dims_[i];
  }
  return coords;
}

}  // namespace modrad::exactlin
