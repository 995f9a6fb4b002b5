#include "algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace afb {

MultiMatrixAlgebra::MultiMatrixAlgebra(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  for (int n : sizes_) {
    if (n < 1) throw AfbError("block sizes must be positive, got " + std::to_string(n));
  }
}

std::int64_t MultiMatrixAlgebra::dimension() const {
  std::int64_t d = 0;
  for (int n : sizes_) d = checked_add(d, checked_mul(n, n));
  return d;
}

std::string MultiMatrixAlgebra::str() const {
  std::string s = "(";
  for (size_t i = 0; i < sizes_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sizes_[i]);
  }
  return s + ")";
}

Element::Element(MultiMatrixAlgebra algebra, std::vector<std::pair<UnitIndex, Scalar>> entries)
    : algebra_(std::move(algebra)) {
  std::map<UnitIndex, Scalar> acc;
  for (auto& [idx, v] : entries) {
    check_bounds(idx);
    acc[idx] += v;
  }
  for (auto& [idx, v] : acc) {
    if (!v.is_zero()) entries_.emplace_back(idx, v);
  }
}

void Element::check_bounds(const UnitIndex& idx) const {
  if (idx.block < 0 || idx.block >= algebra_.num_blocks())
    throw AfbError("matrix unit block out of range");
  int n = algebra_.block_size(idx.block);
  if (idx.row < 0 || idx.row >= n || idx.col < 0 || idx.col >= n)
    throw AfbError("matrix unit coordinates out of range");
}

Element Element::matrix_unit(const MultiMatrixAlgebra& algebra, const UnitIndex& idx) {
  return Element(algebra, {{idx, Scalar::one()}});
}

Element Element::unit(const MultiMatrixAlgebra& algebra) {
  std::vector<std::pair<UnitIndex, Scalar>> es;
  for (int b = 0; b < algebra.num_blocks(); ++b)
    for (int r = 0; r < algebra.block_size(b); ++r) es.push_back({{b, r, r}, Scalar::one()});
  return Element(algebra, std::move(es));
}

Scalar Element::coeff(const UnitIndex& idx) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                             [](const auto& e, const UnitIndex& k) { return e.first < k; });
  if (it != entries_.end() && it->first == idx) return it->second;
  return Scalar::zero();
}

UnitIndex Element::leading_index() const {
  if (entries_.empty()) throw AfbError("leading index of zero element");
  return entries_.front().first;
}

void Element::add_entry(const UnitIndex& idx, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                             [](const auto& e, const UnitIndex& k) { return e.first < k; });
  if (it != entries_.end() && it->first == idx) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  } else {
    entries_.insert(it, {idx, v});
  }
}

Element Element::operator-() const { return scaled(Scalar(-1)); }

static void require_same_algebra(const Element& a, const Element& b) {
  if (a.algebra() != b.algebra())
    throw AfbError("elements belong to different algebras: " + a.algebra().str() + " vs " +
                   b.algebra().str());
}

Element operator+(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  Element r = a;
  for (const auto& [idx, v] : b.entries_) r.add_entry(idx, v);
  return r;
}

Element operator-(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  Element r = a;
  for (const auto& [idx, v] : b.entries_) r.add_entry(idx, -v);
  return r;
}

Element operator*(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  // Group b's entries by (block, row) so the join on a.col == b.row is a
  // binary search per entry of a.
  Element r(a.algebra());
  std::map<UnitIndex, Scalar> acc;
  auto bbegin = b.entries_.begin();
  for (const auto& [ia, va] : a.entries_) {
    UnitIndex lo{ia.block, ia.col, 0};
    auto it = std::lower_bound(bbegin, b.entries_.end(), lo,
                               [](const auto& e, const UnitIndex& k) { return e.first < k; });
    for (; it != b.entries_.end() && it->first.block == ia.block && it->first.row == ia.col;
         ++it) {
      acc[{ia.block, ia.row, it->first.col}] += va * it->second;
    }
  }
  for (auto& [idx, v] : acc) {
    if (!v.is_zero()) r.entries_.emplace_back(idx, v);
  }
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r(algebra_);
  if (c.is_zero()) return r;
  r.entries_.reserve(entries_.size());
  for (const auto& [idx, v] : entries_) r.entries_.emplace_back(idx, v * c);
  return r;
}

Element Element::adjoint() const {
  Element r(algebra_);
  std::vector<std::pair<UnitIndex, Scalar>> es;
  es.reserve(entries_.size());
  for (const auto& [idx, v] : entries_)
    es.push_back({{idx.block, idx.col, idx.row}, v.conj()});
  std::sort(es.begin(), es.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  r.entries_ = std::move(es);
  return r;
}

bool Element::is_self_adjoint() const { return *this == adjoint(); }

bool Element::is_projection() const { return is_self_adjoint() && (*this) * (*this) == *this; }

std::vector<int> Element::support_blocks() const {
  std::vector<int> blocks;
  for (const auto& [idx, v] : entries_) {
    if (blocks.empty() || blocks.back() != idx.block) blocks.push_back(idx.block);
  }
  return blocks;
}

std::vector<int> Element::block_ranks() const {
  std::vector<int> ranks(static_cast<size_t>(algebra_.num_blocks()), 0);
  for (int b : support_blocks()) {
    int n = algebra_.block_size(b);
    // Dense copy of the block, then exact Gaussian elimination.
    std::vector<std::vector<Scalar>> m(static_cast<size_t>(n),
                                       std::vector<Scalar>(static_cast<size_t>(n)));
    for (const auto& [idx, v] : entries_)
      if (idx.block == b) m[static_cast<size_t>(idx.row)][static_cast<size_t>(idx.col)] = v;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
      int pivot = -1;
      for (int row = rank; row < n; ++row) {
        if (!m[static_cast<size_t>(row)][static_cast<size_t>(col)].is_zero()) {
          pivot = row;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(rank)]);
      Scalar inv = Scalar::one() / m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
      for (int row = rank + 1; row < n; ++row) {
        Scalar f = m[static_cast<size_t>(row)][static_cast<size_t>(col)] * inv;
        if (f.is_zero()) continue;
        for (int c2 = col; c2 < n; ++c2)
          m[static_cast<size_t>(row)][static_cast<size_t>(c2)] -=
              f * m[static_cast<size_t>(rank)][static_cast<size_t>(c2)];
      }
      ++rank;
    }
    ranks[static_cast<size_t>(b)] = rank;
  }
  return ranks;
}

std::string Element::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, v] : entries_) {
    if (!first) os << " + ";
    first = false;
    os << v.str() << "*e[" << (idx.block + 1) << ";" << (idx.row + 1) << "," << (idx.col + 1)
       << "]";
  }
  return os.str();
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

std::vector<int> ideal_generated_by(const MultiMatrixAlgebra& algebra,
                                    const std::vector<Element>& generators) {
  std::vector<bool> in(static_cast<size_t>(algebra.num_blocks()), false);
  for (const Element& g : generators) {
    if (g.algebra() != algebra) throw AfbError("ideal generator outside the algebra");
    for (int b : g.support_blocks()) in[static_cast<size_t>(b)] = true;
  }
  std::vector<int> blocks;
  for (int b = 0; b < algebra.num_blocks(); ++b)
    if (in[static_cast<size_t>(b)]) blocks.push_back(b);
  return blocks;
}

bool ideal_contains(const std::vector<int>& ideal_blocks, const Element& x) {
  for (int b : x.support_blocks()) {
    if (!std::binary_search(ideal_blocks.begin(), ideal_blocks.end(), b)) return false;
  }
  return true;
}

} // namespace afb
