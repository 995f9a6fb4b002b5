#include "linalg.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace afb {

SpanBasis::SpanBasis(const std::vector<Element>& spanning) {
  for (const Element& e : spanning) insert(e);
}

Element SpanBasis::reduce(const Element& x) const {
  Element r = x;
  while (!r.is_zero()) {
    UnitIndex lead = r.leading_index();
    auto it = std::lower_bound(rows_.begin(), rows_.end(), lead,
                               [](const Element& row, const UnitIndex& k) {
                                 return row.leading_index() < k;
                               });
    if (it == rows_.end() || !(it->leading_index() == lead)) break;
    r = r - it->scaled(r.coeff(lead));
  }
  return r;
}

bool SpanBasis::insert(const Element& x) {
  Element r = reduce(x);
  if (r.is_zero()) return false;
  UnitIndex lead = r.leading_index();
  Element row = r.scaled(Scalar::one() / r.coeff(lead));
  auto it = std::lower_bound(
      rows_.begin(), rows_.end(), lead,
      [](const Element& e, const UnitIndex& k) { return e.leading_index() < k; });
  rows_.insert(it, std::move(row));
  return true;
}

std::optional<std::vector<Scalar>> SpanBasis::coordinates(const Element& x) const {
  std::vector<Scalar> coeffs(rows_.size());
  Element r = x;
  while (!r.is_zero()) {
    UnitIndex lead = r.leading_index();
    auto it = std::lower_bound(rows_.begin(), rows_.end(), lead,
                               [](const Element& row, const UnitIndex& k) {
                                 return row.leading_index() < k;
                               });
    if (it == rows_.end() || !(it->leading_index() == lead)) return std::nullopt;
    Scalar c = r.coeff(lead);
    coeffs[static_cast<size_t>(it - rows_.begin())] = c;
    r = r - it->scaled(c);
  }
  return coeffs;
}

std::optional<std::vector<Scalar>> expand_by_leading(const std::vector<Element>& family,
                                                     const Element& x) {
  std::map<UnitIndex, size_t> by_leading;
  for (size_t i = 0; i < family.size(); ++i) {
    if (family[i].is_zero()) throw AfbError("triangular family contains zero");
    if (!by_leading.emplace(family[i].leading_index(), i).second)
      throw AfbError("family leading indices are not distinct");
  }
  std::vector<Scalar> coeffs(family.size());
  Element r = x;
  while (!r.is_zero()) {
    auto it = by_leading.find(r.leading_index());
    if (it == by_leading.end()) return std::nullopt;
    const Element& f = family[it->second];
    Scalar c = r.coeff(r.leading_index()) / f.coeff(f.leading_index());
    coeffs[it->second] += c;
    r = r - f.scaled(c);
  }
  return coeffs;
}

namespace {

// Row echelon elimination; returns pivot column per eliminated row.
std::vector<int> eliminate(DenseMatrix& m, int num_cols) {
  std::vector<int> pivot_cols;
  size_t rank = 0;
  for (int col = 0; col < num_cols && rank < m.size(); ++col) {
    size_t pivot = m.size();
    for (size_t row = rank; row < m.size(); ++row) {
      if (!m[row][static_cast<size_t>(col)].is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    Scalar inv = Scalar::one() / m[rank][static_cast<size_t>(col)];
    for (size_t c = static_cast<size_t>(col); c < m[rank].size(); ++c) m[rank][c] *= inv;
    for (size_t row = 0; row < m.size(); ++row) {
      if (row == rank) continue;
      Scalar f = m[row][static_cast<size_t>(col)];
      if (f.is_zero()) continue;
      for (size_t c = static_cast<size_t>(col); c < m[row].size(); ++c)
        m[row][c] -= f * m[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  return pivot_cols;
}

} // namespace

int dense_rank(DenseMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(eliminate(m, static_cast<int>(m[0].size())).size());
}

std::vector<std::vector<Scalar>> dense_nullspace(DenseMatrix m, int num_cols) {
  std::vector<int> pivot_cols = eliminate(m, num_cols);
  std::vector<bool> is_pivot(static_cast<size_t>(num_cols), false);
  for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free_col = 0; free_col < num_cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(num_cols));
    v[static_cast<size_t>(free_col)] = Scalar::one();
    for (size_t row = 0; row < pivot_cols.size(); ++row) {
      v[static_cast<size_t>(pivot_cols[row])] = -m[row][static_cast<size_t>(free_col)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> dense_solve(DenseMatrix m, std::vector<Scalar> rhs) {
  if (m.size() != rhs.size()) throw AfbError("solve: shape mismatch");
  int num_cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (size_t r = 0; r < m.size(); ++r) m[r].push_back(rhs[r]);
  std::vector<int> pivot_cols = eliminate(m, num_cols);
  // Inconsistent if some row reduces to (0...0 | nonzero).
  for (size_t r = pivot_cols.size(); r < m.size(); ++r) {
    if (!m[r][static_cast<size_t>(num_cols)].is_zero()) return std::nullopt;
  }
  std::vector<Scalar> x(static_cast<size_t>(num_cols));
  for (size_t row = 0; row < pivot_cols.size(); ++row)
    x[static_cast<size_t>(pivot_cols[row])] = m[row][static_cast<size_t>(num_cols)];
  return x;
}

} // namespace afb
