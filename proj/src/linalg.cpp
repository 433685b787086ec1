#include "gysinkit/linalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace gysinkit {

// -------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  IntMatrix m(rows.size(), cols);
  std::size_t r = 0;
  for (auto row : rows) {
    if (row.size() != cols) throw MalformedInput("ragged matrix rows");
    std::size_t c = 0;
    for (long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw MalformedInput("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Integer>>& columns,
                                  std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw MalformedInput("ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return std::vector<Integer>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& z) { return z == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(src, c) != 0) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, src) != 0) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw MalformedInput("hconcat: row counts differ");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw MalformedInput("matrix product: inner dimensions differ");
  IntMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) m(i, j) += aik * b(k, j);
    }
  return m;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x) {
  if (a.cols() != x.size()) throw MalformedInput("matrix-vector product: size mismatch");
  std::vector<Integer> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && x[k] != 0) y[i] += a(i, k) * x[k];
  return y;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw MalformedInput("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ------------------------------------------------------------------- SNF

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the trailing block, ties to lowest (row, col).
std::optional<Position> find_pivot(const IntMatrix& s, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Integer v = abs(s(i, j));
      if (!best || v < best_abs) {
        best = Position{i, j};
        best_abs = v;
      }
    }
  return best;
}

// Same rule restricted to row t and column t.
Position find_cross_pivot(const IntMatrix& s, std::size_t t) {
  Position best{t, t};
  Integer best_abs = abs(s(t, t));
  auto consider = [&](std::size_t i, std::size_t j) {
    if (s(i, j) == 0) return;
    Integer v = abs(s(i, j));
    bool lower = (i < best.row) || (i == best.row && j < best.col);
    if (best_abs == 0 || v < best_abs || (v == best_abs && lower)) {
      best = Position{i, j};
      best_abs = v;
    }
  };
  for (std::size_t i = t; i < s.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < s.cols(); ++j) consider(t, j);
  return best;
}

void reduce(IntMatrix& s, IntMatrix* u, IntMatrix* v) {
  const std::size_t limit = std::min(s.rows(), s.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = find_pivot(s, t);
    if (!pivot) break;
    auto bring_to_diagonal = [&](Position p) {
      s.swap_rows(t, p.row);
      if (u) u->swap_rows(t, p.row);
      s.swap_cols(t, p.col);
      if (v) v->swap_cols(t, p.col);
    };
    bring_to_diagonal(*pivot);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        s.add_row_multiple(i, t, -q);
        if (u) u->add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        s.add_col_multiple(j, t, -q);
        if (v) v->add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        bring_to_diagonal(find_cross_pivot(s, t));
        continue;
      }
      // Row and column are clear; enforce d_t | every remaining entry.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < s.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (s(i, j) % s(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      s.add_row_multiple(t, *offender, 1);
      if (u) u->add_row_multiple(t, *offender, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
}

} // namespace

std::size_t SNFResult::rank() const {
  std::size_t r = 0;
  while (r < std::min(S.rows(), S.cols()) && S(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < rank(); ++i) d.push_back(S(i, i));
  return d;
}

bool SNFResult::verify(const IntMatrix& a) const {
  if (U.rows() != a.rows() || V.cols() != a.cols()) return false;
  if (U * a * V != S) return false;
  const std::size_t r = rank();
  for (std::size_t i = 0; i < S.rows(); ++i)
    for (std::size_t j = 0; j < S.cols(); ++j) {
      if (i == j && i < r) {
        if (S(i, i) <= 0) return false;
        if (i > 0 && S(i, i) % S(i - 1, i - 1) != 0) return false;
      } else if (S(i, j) != 0) {
        return false;
      }
    }
  return abs(determinant(U)) == 1 && abs(determinant(V)) == 1;
}

SNFResult smith_normal_form(const IntMatrix& a) {
  SNFResult res{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  reduce(res.S, &res.U, &res.V);
  return res;
}

std::vector<Integer> invariant_factors(const IntMatrix& a) {
  IntMatrix s = a;
  reduce(s, nullptr, nullptr);
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()) && s(i, i) != 0; ++i)
    d.push_back(s(i, i));
  return d;
}

std::size_t matrix_rank(const IntMatrix& a) { return invariant_factors(a).size(); }

// ---------------------------------------------------------- FGAbelianGroup

FGAbelianGroup::FGAbelianGroup(std::size_t rank, std::vector<Integer> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw MalformedInput("invariant factors must be >= 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw MalformedInput("invariant factors must form a divisibility chain");
  }
}

FGAbelianGroup FGAbelianGroup::cyclic(const Integer& d) { return from_cyclic_orders({d}); }

FGAbelianGroup FGAbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = abs(orders[i]);
  return coker_and_ker(diag).coker;
}

FGAbelianGroup FGAbelianGroup::direct_sum(const FGAbelianGroup& other) const {
  std::vector<Integer> orders = torsion_;
  orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
  orders.resize(orders.size() + rank_ + other.rank_, Integer(0));
  return from_cyclic_orders(orders);
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  for (const Integer& d : torsion_) parts.push_back("Z/" + d.get_str());
  if (rank_ == 1) parts.push_back("Z");
  else if (rank_ > 1) parts.push_back("Z^" + std::to_string(rank_));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ⊕ " : "") + parts[i];
  return out;
}

CokerKer coker_and_ker(const IntMatrix& a) {
  std::vector<Integer> d = invariant_factors(a);
  std::vector<Integer> torsion;
  for (const Integer& x : d)
    if (x > 1) torsion.push_back(x);
  return CokerKer{FGAbelianGroup(a.rows() - d.size(), std::move(torsion)),
                  FGAbelianGroup::free(a.cols() - d.size())};
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SNFResult snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  IntMatrix basis(a.cols(), a.cols() - r);
  for (std::size_t j = r; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) basis(i, j - r) = snf.V(i, j);
  return basis;
}

FGAbelianGroup group_from_presentation(std::size_t generators, const IntMatrix& relations) {
  if (relations.rows() > 0 && relations.cols() != generators)
    throw MalformedInput("relation rows must have one entry per generator");
  if (relations.rows() == 0) return FGAbelianGroup::free(generators);
  return coker_and_ker(relations.transpose()).coker;
}

bool in_column_span(const IntMatrix& gens, const std::vector<Integer>& v) {
  if (gens.rows() != v.size()) throw MalformedInput("in_column_span: size mismatch");
  SNFResult snf = smith_normal_form(gens);
  std::vector<Integer> w = snf.U * v;
  const std::size_t r = snf.rank();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < r) {
      if (w[i] % snf.S(i, i) != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

} // namespace gysinkit
