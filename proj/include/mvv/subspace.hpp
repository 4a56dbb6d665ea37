#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "mvv/errors.hpp"
#include "mvv/matrix.hpp"
#include "mvv/prng.hpp"

namespace mvv {

inline constexpr long default_entry_bound = 1000;
inline constexpr int default_redraw_cap = 64;

/// Projective subspace of P^N, held as the canonical reduced-echelon basis
/// of its affine cone. The empty subspace (dim -1) has a basis with zero
/// rows. Two subspaces compare equal iff their row spaces coincide, which
/// the canonical form turns into plain matrix equality.
class subspace {
 public:
  subspace() = default;

  static subspace empty(int ambient) { return subspace(ambient, matrix(0, static_cast<std::size_t>(ambient) + 1)); }

  static subspace full(int ambient) {
    return subspace(ambient, matrix::identity(static_cast<std::size_t>(ambient) + 1));
  }

  /// Span of the given rows (not required to be independent); canonicalizes.
  static subspace span_rows(int ambient, const matrix& rows) {
    if (rows.rows() > 0 && rows.cols() != static_cast<std::size_t>(ambient) + 1)
      throw error("basis width does not match ambient dimension");
    matrix canon = rows.rows() == 0 ? matrix(0, static_cast<std::size_t>(ambient) + 1) : row_basis(rows);
    return subspace(ambient, std::move(canon));
  }

  /// Single projective point from homogeneous coordinates.
  static subspace point(int ambient, std::initializer_list<long> coords) {
    matrix m(1, static_cast<std::size_t>(ambient) + 1);
    std::size_t c = 0;
    for (long v : coords) m(0, c++) = v;
    return span_rows(ambient, m);
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.rows()) - 1; }
  bool is_empty() const { return basis_.rows() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const matrix& basis() const { return basis_; }

  bool operator==(const subspace& rhs) const {
    return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
  }

 private:
  subspace(int ambient, matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  int ambient_ = -1;
  matrix basis_;
};

inline void require_same_ambient(const subspace& a, const subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw error("ambient dimension mismatch");
}

/// Span of both arguments. Join with the empty subspace returns the other
/// operand.
inline subspace join(const subspace& a, const subspace& b) {
  require_same_ambient(a, b);
  return subspace::span_rows(a.ambient_dim(), matrix::vstack(a.basis(), b.basis()));
}

/// Row vectors annihilating the subspace: a basis of {z : B z = 0}.
/// The annihilator of the empty subspace is the whole dual space.
inline matrix annihilator(const subspace& v) {
  return kernel_basis(v.basis(), static_cast<std::size_t>(v.ambient_dim()) + 1);
}

/// Intersection of the two row spaces, computed as the kernel of the
/// stacked annihilators.
inline subspace meet(const subspace& a, const subspace& b) {
  require_same_ambient(a, b);
  matrix ann = matrix::vstack(annihilator(a), annihilator(b));
  return subspace::span_rows(a.ambient_dim(), kernel_basis(ann));
}

/// Left fold of meet over a nonempty list; order-independent by canonical
/// form.
inline subspace meet_many(std::span<const subspace> list) {
  if (list.empty()) throw error("meet_many requires at least one subspace");
  subspace acc = list.front();
  for (std::size_t i = 1; i < list.size(); ++i) acc = meet(acc, list[i]);
  return acc;
}

inline subspace meet_many(const std::vector<subspace>& list) {
  return meet_many(std::span<const subspace>(list));
}

/// True iff inner is contained in outer.
inline bool contains(const subspace& outer, const subspace& inner) {
  require_same_ambient(outer, inner);
  if (inner.is_empty()) return true;
  return rank(matrix::vstack(outer.basis(), inner.basis())) == outer.basis().rows();
}

/// Random integer matrix with entries in [-entry_bound, entry_bound].
inline matrix sample_integer_matrix(std::size_t rows, std::size_t cols, prng& rng, long entry_bound) {
  matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.entry(entry_bound);
  return m;
}

/// Seeded random d-plane in P^N: integer basis entries uniform in
/// [-entry_bound, entry_bound], redrawn until the basis has full row rank.
/// d = -1 yields the empty subspace.
inline subspace sample_subspace(int ambient, int d, std::uint64_t seed,
                                long entry_bound = default_entry_bound) {
  if (d < -1 || d > ambient) throw error("sampled dimension out of range");
  if (entry_bound < 2) throw error("entry bound must be at least 2");
  if (d == -1) return subspace::empty(ambient);
  const std::size_t rows = static_cast<std::size_t>(d) + 1;
  const std::size_t cols = static_cast<std::size_t>(ambient) + 1;
  prng rng(seed);
  for (;;) {
    matrix m = sample_integer_matrix(rows, cols, rng, entry_bound);
    if (rank(m) == rows) return subspace::span_rows(ambient, m);
  }
}

/// Seeded random d-plane containing `core`: the basis of `core` extended by
/// random integer rows until the span has the requested dimension.
inline subspace sample_through(const subspace& core, int d, std::uint64_t seed,
                               long entry_bound = default_entry_bound) {
  const int ambient = core.ambient_dim();
  if (d < core.dim() || d > ambient) throw error("sampled dimension out of range");
  const std::size_t extra = static_cast<std::size_t>(d - core.dim());
  if (extra == 0) return core;
  prng rng(seed);
  for (;;) {
    matrix rows = matrix::vstack(core.basis(),
                                 sample_integer_matrix(extra, static_cast<std::size_t>(ambient) + 1,
                                                       rng, entry_bound));
    if (rank(rows) == static_cast<std::size_t>(d) + 1) return subspace::span_rows(ambient, rows);
  }
}

/// Seeded random d-plane inside `enclosing`: random integer combinations of
/// the enclosing basis rows, redrawn until independent.
inline subspace sample_within(const subspace& enclosing, int d, std::uint64_t seed,
                              long entry_bound = default_entry_bound) {
  if (d < -1 || d > enclosing.dim()) throw error("sampled dimension out of range");
  if (d == -1) return subspace::empty(enclosing.ambient_dim());
  prng rng(seed);
  for (;;) {
    matrix coeff = sample_integer_matrix(static_cast<std::size_t>(d) + 1,
                                         enclosing.basis().rows(), rng, entry_bound);
    matrix rows = coeff * enclosing.basis();
    if (rank(rows) == static_cast<std::size_t>(d) + 1)
      return subspace::span_rows(enclosing.ambient_dim(), rows);
  }
}

/// A complement of v: a subspace of dimension N - dim v - 1 disjoint from v,
/// drawn at random (deterministic per seed). The complement of the full
/// space is the empty subspace, matching the dim(empty) = -1 convention.
inline subspace dual_complement(const subspace& v, std::uint64_t seed,
                                long entry_bound = default_entry_bound) {
  const int ambient = v.ambient_dim();
  if (v.is_full()) return subspace::empty(ambient);
  if (v.is_empty()) return subspace::full(ambient);
  const std::size_t rows = static_cast<std::size_t>(ambient - v.dim());
  const std::size_t cols = static_cast<std::size_t>(ambient) + 1;
  prng rng(seed);
  for (;;) {
    matrix m = sample_integer_matrix(rows, cols, rng, entry_bound);
    if (rank(m) != rows) continue;
    if (rank(matrix::vstack(v.basis(), m)) == cols) return subspace::span_rows(ambient, m);
  }
}

}  // namespace mvv
