#pragma once

#include "gysinkit/common.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace gysinkit {

/// Dense matrix of arbitrary-precision integers, row-major. Either dimension
/// may be zero.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<std::vector<Integer>>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> row(std::size_t r) const;

  IntMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

  /// Horizontal concatenation [*this | other].
  IntMatrix hconcat(const IntMatrix& other) const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x);

/// Exact determinant by fraction-free elimination; square matrices only.
Integer determinant(const IntMatrix& a);

/// U * A * V = S with U, V unimodular and S = diag(d_1, ..., d_r, 0, ...)
/// where d_1 | d_2 | ... | d_r and every d_i > 0.
struct SNFResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  std::size_t rank() const;
  /// The nonzero diagonal entries d_1, ..., d_r.
  std::vector<Integer> diagonal() const;
  /// Re-checks U*A*V == S, diagonal shape, divisibility and |det U| = |det V| = 1.
  bool verify(const IntMatrix& a) const;
};

/// Smith normal form. Pivots are the smallest nonzero |entry|, ties broken by
/// lowest (row, col), so the result is reproducible.
SNFResult smith_normal_form(const IntMatrix& a);

/// Nonzero invariant factors only; same pivoting, no transforms tracked.
std::vector<Integer> invariant_factors(const IntMatrix& a);

std::size_t matrix_rank(const IntMatrix& a);

/// Finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_k in
/// invariant-factor form: every d_i >= 2 and d_1 | d_2 | ... | d_k.
class FGAbelianGroup {
public:
  FGAbelianGroup() = default;
  /// Throws MalformedInput unless torsion is already a divisibility chain of factors >= 2.
  FGAbelianGroup(std::size_t rank, std::vector<Integer> torsion);

  static FGAbelianGroup free(std::size_t rank) { return FGAbelianGroup(rank, {}); }
  static FGAbelianGroup trivial() { return FGAbelianGroup(); }
  /// Z/d for d >= 1 (trivial for d = 1); d = 0 gives Z.
  static FGAbelianGroup cyclic(const Integer& d);
  /// Normalises arbitrary cyclic orders (1s dropped, 0s become free summands).
  static FGAbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_free() const { return torsion_.empty(); }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  /// Minimal number of generators.
  std::size_t generator_count() const { return rank_ + torsion_.size(); }

  FGAbelianGroup direct_sum(const FGAbelianGroup& other) const;

  /// Human-readable form such as "Z/2 ⊕ Z^3", "Z" or "0".
  std::string to_string() const;

  bool operator==(const FGAbelianGroup&) const = default;

private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

struct CokerKer {
  FGAbelianGroup coker;
  FGAbelianGroup ker;
};

/// For A : Z^cols -> Z^rows: coker = Z^rows / im A and ker A (free).
CokerKer coker_and_ker(const IntMatrix& a);

/// Basis of ker A as the columns of the returned cols x k matrix.
IntMatrix kernel_basis(const IntMatrix& a);

/// Z^generators modulo the row span of relations (one relation per row).
FGAbelianGroup group_from_presentation(std::size_t generators, const IntMatrix& relations);

/// Whether v lies in the Z-span of the columns of gens.
bool in_column_span(const IntMatrix& gens, const std::vector<Integer>& v);

} // namespace gysinkit
