#include "envelope_kit/integer_lattice.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <utility>

namespace envkit {

IntVector zero_vector(std::size_t dim) { return IntVector(dim, 0); }

IntVector unit_vector(std::size_t dim, std::size_t at) {
  IntVector v(dim, 0);
  v[at] = 1;
  return v;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntVector& add_scaled(IntVector& acc, const IntVector& v, const Integer& factor) {
  assert(acc.size() == v.size());
  if (sgn(factor) == 0) return acc;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (sgn(v[i]) != 0) acc[i] += factor * v[i];
  }
  return acc;
}

HermiteBasis::HermiteBasis(std::size_t dim) : HermiteBasis(dim, [dim] {
  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), 0);
  return order;
}()) {}

HermiteBasis::HermiteBasis(std::size_t dim, std::vector<std::size_t> priority)
    : dim_(dim), priority_(std::move(priority)), rank_of_column_(dim, 0) {
  assert(priority_.size() == dim_);
  for (std::size_t r = 0; r < dim_; ++r) rank_of_column_[priority_[r]] = r;
}

std::size_t HermiteBasis::leading_rank(const IntVector& v) const {
  for (std::size_t r = 0; r < dim_; ++r) {
    if (sgn(v[priority_[r]]) != 0) return r;
  }
  return dim_;
}

void HermiteBasis::insert(IntVector v) {
  assert(v.size() == dim_);
  while (true) {
    const std::size_t lead = leading_rank(v);
    if (lead == dim_) break;
    const std::size_t col = priority_[lead];
    // Rows are kept sorted by the priority rank of their pivot.
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead,
                               [&](std::size_t c, std::size_t r) { return rank_of_column_[c] < r; });
    const auto idx = static_cast<std::size_t>(it - pivots_.begin());
    if (it == pivots_.end() || *it != col) {
      if (sgn(v[col]) < 0) {
        for (auto& x : v) x = -x;
      }
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
      pivots_.insert(it, col);
      break;
    }
    IntVector& row = rows_[idx];
    const Integer a = row[col];
    const Integer b = v[col];
    if (b % a == 0) {
      add_scaled(v, row, -(b / a));
      continue;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    IntVector combined(dim_);
    IntVector residual(dim_);
    const Integer a_g = a / g;
    const Integer b_g = b / g;
    for (std::size_t i = 0; i < dim_; ++i) {
      combined[i] = s * row[i] + t * v[i];
      residual[i] = a_g * v[i] - b_g * row[i];
    }
    if (sgn(combined[col]) < 0) {
      for (auto& x : combined) x = -x;
    }
    row = std::move(combined);
    v = std::move(residual);
  }
  // Keep coefficient growth in check on long insertion streams.
  if (++pending_ >= 64) normalize();
}

void HermiteBasis::normalize() {
  pending_ = 0;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const std::size_t col = pivots_[j];
    const Integer& pivot = rows_[j][col];
    for (std::size_t i = 0; i < j; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows_[i][col].get_mpz_t(), pivot.get_mpz_t());
      if (sgn(q) != 0) add_scaled(rows_[i], rows_[j], -q);
    }
  }
}

IntVector HermiteBasis::reduce(IntVector v) const {
  assert(v.size() == dim_);
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const std::size_t col = pivots_[j];
    if (sgn(v[col]) == 0) continue;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v[col].get_mpz_t(), rows_[j][col].get_mpz_t());
    if (sgn(q) != 0) add_scaled(v, rows_[j], -q);
  }
  return v;
}

std::vector<std::size_t> HermiteBasis::free_columns() const {
  std::vector<bool> is_pivot(dim_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (!is_pivot[c]) out.push_back(c);
  }
  return out;
}

std::vector<Integer> smith_invariants(std::vector<IntVector> m) {
  std::vector<Integer> out;
  const std::size_t rows = m.size();
  if (rows == 0) return out;
  const std::size_t cols = m.front().size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(m[i][j]) == 0) continue;
        if (pr == rows || abs(m[i][j]) < abs(m[pr][pc])) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (sgn(m[i][t]) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
      add_scaled(m[i], m[t], -q);
      if (sgn(m[i][t]) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (sgn(m[t][j]) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (sgn(m[t][j]) != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder now exists; re-pivot

    // Divisibility d_t | every remaining entry; otherwise fold the
    // offending row into row t and start over.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m[i][j]) != 0 && m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
      }
    }
    if (!divides) continue;
    out.push_back(abs(m[t][t]));
    ++t;
  }
  return out;
}

Integer determinant(std::vector<IntVector> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && sgn(a[swap_with][k]) == 0) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(a[k], a[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t rank_of(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  HermiteBasis basis(rows.front().size());
  for (const auto& r : rows) basis.insert(r);
  return basis.rank();
}

std::string format_vector(const IntVector& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int s = sgn(v[i]);
    if (s == 0) continue;
    const Integer mag = abs(v[i]);
    if (out.empty()) {
      if (s < 0) out += "-";
    } else {
      out += s < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace envkit
