#include "liouville/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace liouville {

Vector AffineSolutionSpace::point(const Vector& t) const {
  if (t.size() != basis.size()) throw std::invalid_argument("parameter count mismatch");
  Vector v = particular;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (t[j].is_zero()) continue;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!basis[j][i].is_zero()) v[i] += t[j] * basis[j][i];
  }
  return v;
}

bool AffineSolutionSpace::contains(const Vector& v) const {
  if (v.size() != particular.size()) return false;
  Vector t(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) t[j] = v[free_columns[j]];
  return point(t) == v;
}

Vector residual(const Matrix& a, const Vector& v, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Coeff acc;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) acc += a[i][j] * v[j];
    r[i] = acc - b[i];
  }
  return r;
}

std::optional<AffineSolutionSpace> solve_parametric(const Matrix& a, const Vector& b, std::size_t columns,
                                                    std::vector<std::string> names) {
  if (a.size() != b.size()) throw std::invalid_argument("row count mismatch");
  for (const auto& row : a)
    if (row.size() != columns) throw std::invalid_argument("inconsistent row length");
  const std::size_t n = columns;

  // Augmented matrix [A | b].
  Matrix m;
  m.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vector row = a[i];
    row.push_back(b[i]);
    m.push_back(std::move(row));
  }

  // Bareiss forward elimination; pivot = first row (in order) with a nonzero
  // entry in the current column.
  std::vector<std::size_t> pivot_cols;
  Coeff prev(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Coeff piv = m[r][col];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const Coeff lead = m[i][col];
      for (std::size_t j = col + 1; j <= n; ++j) {
        Coeff v = piv * m[i][j];
        if (!lead.is_zero() && !m[r][j].is_zero()) v -= lead * m[r][j];
        m[i][j] = prev.is_one() ? v : v / prev;
      }
      m[i][col] = Coeff();
    }
    prev = piv;
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < m.size(); ++i)
    if (!m[i][n].is_zero()) return std::nullopt;

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  // Back-substitution for a given right-hand side column and free values.
  auto back_substitute = [&](const Vector& free_values, bool homogeneous) {
    Vector x = free_values;
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = pivot_cols[k];
      Coeff acc = homogeneous ? Coeff() : m[k][n];
      for (std::size_t j = pc + 1; j < n; ++j)
        if (!m[k][j].is_zero() && !x[j].is_zero()) acc -= m[k][j] * x[j];
      x[pc] = acc / m[k][pc];
    }
    return x;
  };

  AffineSolutionSpace out;
  out.particular = back_substitute(Vector(n), false);
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vector fv(n);
    fv[c] = Coeff(1);
    out.basis.push_back(back_substitute(fv, true));
    out.free_columns.push_back(c);
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  }
  out.variable_names = std::move(names);
  return out;
}

AffineSolutionSpace canonicalize(AffineSolutionSpace space) {
  const std::size_t n = space.particular.size();
  std::vector<Vector> rows = std::move(space.basis);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  // Reduced echelon form with pivots taken from the last column backwards.
  for (std::size_t col = n; col-- > 0 && r < rows.size();) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Coeff inv = rows[r][col].inverse();
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const Coeff f = rows[i][col];
      for (std::size_t j = 0; j < n; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);  // drop dependent directions
  for (std::size_t k = 0; k < r; ++k) {
    const Coeff f = space.particular[pivots[k]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!rows[k][j].is_zero()) space.particular[j] -= f * rows[k][j];
  }
  std::vector<std::size_t> order(r);
  for (std::size_t k = 0; k < r; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  space.basis.clear();
  space.free_columns.clear();
  for (std::size_t k : order) {
    space.basis.push_back(std::move(rows[k]));
    space.free_columns.push_back(pivots[k]);
  }
  return space;
}

std::optional<AffineSolutionSpace> intersect_constraints(const AffineSolutionSpace& space, const Matrix& extra,
                                                         const Vector& rhs) {
  if (extra.size() != rhs.size()) throw std::invalid_argument("row count mismatch");
  if (extra.empty()) return space;
  const std::size_t n = space.size();
  const std::size_t k = space.dimension();
  // (extra * B) t = rhs - extra * p
  Matrix reduced(extra.size(), Vector(k));
  Vector target(extra.size());
  for (std::size_t i = 0; i < extra.size(); ++i) {
    if (extra[i].size() != n) throw std::invalid_argument("constraint width mismatch");
    Coeff acc = rhs[i];
    for (std::size_t c = 0; c < n; ++c)
      if (!extra[i][c].is_zero() && !space.particular[c].is_zero()) acc -= extra[i][c] * space.particular[c];
    target[i] = acc;
    for (std::size_t j = 0; j < k; ++j) {
      Coeff s;
      for (std::size_t c = 0; c < n; ++c)
        if (!extra[i][c].is_zero() && !space.basis[j][c].is_zero()) s += extra[i][c] * space.basis[j][c];
      reduced[i][j] = s;
    }
  }
  auto sub = solve_parametric(reduced, target, k);
  if (!sub) return std::nullopt;
  AffineSolutionSpace out;
  out.variable_names = space.variable_names;
  out.particular = space.point(sub->particular);
  for (const Vector& dir : sub->basis) {
    Vector v(n);
    for (std::size_t j = 0; j < k; ++j) {
      if (dir[j].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (!space.basis[j][c].is_zero()) v[c] += dir[j] * space.basis[j][c];
    }
    out.basis.push_back(std::move(v));
  }
  return canonicalize(std::move(out));
}

}  // namespace liouville
