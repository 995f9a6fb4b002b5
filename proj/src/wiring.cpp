#include "wiring.hpp"

#include <algorithm>
#include <sstream>

#include "center.hpp"
#include "errors.hpp"

namespace afb {

MultiplicityMatrix MultiplicityMatrix::zero(int rows, int cols) {
  if (rows < 0 || cols < 0) throw AfbError("negative multiplicity matrix shape");
  MultiplicityMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.entries_.assign(static_cast<size_t>(rows),
                    std::vector<std::int64_t>(static_cast<size_t>(cols), 0));
  return m;
}

MultiplicityMatrix::MultiplicityMatrix(
    std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : MultiplicityMatrix(std::vector<std::vector<std::int64_t>>(rows.begin(), rows.end())) {}

MultiplicityMatrix::MultiplicityMatrix(std::vector<std::vector<std::int64_t>> entries)
    : entries_(std::move(entries)) {
  rows_ = static_cast<int>(entries_.size());
  cols_ = rows_ ? static_cast<int>(entries_[0].size()) : 0;
  for (const auto& row : entries_) {
    if (static_cast<int>(row.size()) != cols_) throw AfbError("ragged multiplicity matrix");
    for (std::int64_t v : row)
      if (v < 0) throw AfbError("negative multiplicity entry");
  }
}

MultiplicityMatrix MultiplicityMatrix::identity(int n) {
  MultiplicityMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MultiplicityMatrix operator*(const MultiplicityMatrix& a, const MultiplicityMatrix& b) {
  if (a.cols() != b.rows()) throw AfbError("multiplicity matrix shape mismatch in product");
  MultiplicityMatrix r = MultiplicityMatrix::zero(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(a.at(i, k), b.at(k, j)));
    }
  return r;
}

std::vector<std::int64_t> MultiplicityMatrix::apply(const std::vector<std::int64_t>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw AfbError("vector length mismatch");
  std::vector<std::int64_t> r(static_cast<size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      r[static_cast<size_t>(i)] =
          checked_add(r[static_cast<size_t>(i)], checked_mul(at(i, j), v[static_cast<size_t>(j)]));
  return r;
}

std::string MultiplicityMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    if (i) os << " ; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j);
    }
  }
  return os.str();
}

Wiring::Wiring(MultiMatrixAlgebra source, MultiMatrixAlgebra target,
               std::vector<std::vector<std::vector<std::vector<int>>>> slots)
    : source_(std::move(source)), target_(std::move(target)), slots_(std::move(slots)) {
  validate();
  normalize();
}

void Wiring::validate() const {
  if (static_cast<int>(slots_.size()) != target_.num_blocks())
    throw AfbError("wiring: one slot table per target block required");
  for (int j = 0; j < target_.num_blocks(); ++j) {
    const auto& per_source = slots_[static_cast<size_t>(j)];
    if (static_cast<int>(per_source.size()) != source_.num_blocks())
      throw AfbError("wiring: one copy list per source block required");
    std::vector<bool> used(static_cast<size_t>(target_.block_size(j)), false);
    for (int i = 0; i < source_.num_blocks(); ++i) {
      for (const auto& copy : per_source[static_cast<size_t>(i)]) {
        if (static_cast<int>(copy.size()) != source_.block_size(i))
          throw AfbError("wiring: copy tuple length must equal source block size");
        for (int pos : copy) {
          if (pos < 0 || pos >= target_.block_size(j))
            throw AfbError("wiring: target coordinate out of range in block " +
                           std::to_string(j + 1));
          if (used[static_cast<size_t>(pos)])
            throw AfbError("wiring: assignment not injective in target block " +
                           std::to_string(j + 1));
          used[static_cast<size_t>(pos)] = true;
        }
      }
    }
  }
}

void Wiring::normalize() {
  for (auto& per_source : slots_)
    for (auto& copies : per_source) std::sort(copies.begin(), copies.end());
}

Wiring Wiring::identity(const MultiMatrixAlgebra& algebra) {
  std::vector<std::vector<std::vector<std::vector<int>>>> slots(
      static_cast<size_t>(algebra.num_blocks()),
      std::vector<std::vector<std::vector<int>>>(static_cast<size_t>(algebra.num_blocks())));
  for (int b = 0; b < algebra.num_blocks(); ++b) {
    std::vector<int> ident(static_cast<size_t>(algebra.block_size(b)));
    for (int r = 0; r < algebra.block_size(b); ++r) ident[static_cast<size_t>(r)] = r;
    slots[static_cast<size_t>(b)][static_cast<size_t>(b)].push_back(std::move(ident));
  }
  return Wiring(algebra, algebra, std::move(slots));
}

Wiring Wiring::standard(const MultiMatrixAlgebra& source, const MultiMatrixAlgebra& target,
                        const MultiplicityMatrix& n) {
  if (n.rows() != target.num_blocks() || n.cols() != source.num_blocks())
    throw AfbError("multiplicity matrix shape does not match the algebras");
  std::vector<std::vector<std::vector<std::vector<int>>>> slots(
      static_cast<size_t>(target.num_blocks()),
      std::vector<std::vector<std::vector<int>>>(static_cast<size_t>(source.num_blocks())));
  for (int j = 0; j < target.num_blocks(); ++j) {
    std::int64_t offset = 0;
    for (int i = 0; i < source.num_blocks(); ++i) {
      for (std::int64_t c = 0; c < n.at(j, i); ++c) {
        std::vector<int> copy(static_cast<size_t>(source.block_size(i)));
        for (int r = 0; r < source.block_size(i); ++r)
          copy[static_cast<size_t>(r)] = static_cast<int>(offset) + r;
        offset += source.block_size(i);
        if (offset > target.block_size(j))
          throw AfbError("dimension bound violated in target block " + std::to_string(j + 1) +
                         ": slots exceed size " + std::to_string(target.block_size(j)));
        slots[static_cast<size_t>(j)][static_cast<size_t>(i)].push_back(std::move(copy));
      }
    }
  }
  return Wiring(source, target, std::move(slots));
}

Element Wiring::apply(const Element& x) const {
  if (x.algebra() != source_) throw AfbError("wiring applied to element of wrong algebra");
  std::vector<std::pair<UnitIndex, Scalar>> entries;
  for (const auto& [idx, v] : x.entries()) {
    for (int j = 0; j < target_.num_blocks(); ++j) {
      const auto& copies = slots_[static_cast<size_t>(j)][static_cast<size_t>(idx.block)];
      for (const auto& copy : copies) {
        entries.push_back(
            {{j, copy[static_cast<size_t>(idx.row)], copy[static_cast<size_t>(idx.col)]}, v});
      }
    }
  }
  return Element(target_, std::move(entries));
}

MultiplicityMatrix Wiring::multiplicity() const {
  MultiplicityMatrix n = MultiplicityMatrix::zero(target_.num_blocks(), source_.num_blocks());
  for (int i = 0; i < source_.num_blocks(); ++i) {
    Element image = apply(Element::matrix_unit(source_, {i, 0, 0}));
    std::vector<int> ranks = image.block_ranks();
    for (int j = 0; j < target_.num_blocks(); ++j) n.at(j, i) = ranks[static_cast<size_t>(j)];
  }
  return n;
}

Wiring compose(const Wiring& outer, const Wiring& inner) {
  if (inner.target() != outer.source())
    throw AfbError("compose: inner target differs from outer source");
  const MultiMatrixAlgebra& source = inner.source();
  const MultiMatrixAlgebra& target = outer.target();
  std::vector<std::vector<std::vector<std::vector<int>>>> slots(
      static_cast<size_t>(target.num_blocks()),
      std::vector<std::vector<std::vector<int>>>(static_cast<size_t>(source.num_blocks())));
  for (int j = 0; j < target.num_blocks(); ++j) {
    for (int i = 0; i < source.num_blocks(); ++i) {
      for (int m = 0; m < outer.source().num_blocks(); ++m) {
        for (int cg = 0; cg < outer.copies(j, m); ++cg) {
          const auto& outer_copy = outer.copy_positions(j, m, cg);
          for (int cf = 0; cf < inner.copies(m, i); ++cf) {
            const auto& inner_copy = inner.copy_positions(m, i, cf);
            std::vector<int> composite(static_cast<size_t>(source.block_size(i)));
            for (int r = 0; r < source.block_size(i); ++r)
              composite[static_cast<size_t>(r)] =
                  outer_copy[static_cast<size_t>(inner_copy[static_cast<size_t>(r)])];
            slots[static_cast<size_t>(j)][static_cast<size_t>(i)].push_back(std::move(composite));
          }
        }
      }
    }
  }
  return Wiring(source, target, std::move(slots));
}

bool unitarily_equivalent(const Wiring& f, const Wiring& g) {
  if (f.source() != g.source() || f.target() != g.target())
    throw AfbError("unitary equivalence needs matching source and target");
  return f.multiplicity() == g.multiplicity();
}

std::string check_homomorphism(const Wiring& w) {
  GeneratorMap map(w.source(), w.target());
  for (int b = 0; b < w.source().num_blocks(); ++b)
    for (int r = 0; r < w.source().block_size(b); ++r)
      for (int c = 0; c < w.source().block_size(b); ++c)
        map.set_image({b, r, c}, w.apply(Element::matrix_unit(w.source(), {b, r, c})));
  return map.check_homomorphism();
}

std::string Wiring::str() const {
  std::ostringstream os;
  for (int j = 0; j < target_.num_blocks(); ++j) {
    os << "block " << (j + 1) << ":";
    bool any = false;
    for (int i = 0; i < source_.num_blocks(); ++i) {
      for (int c = 0; c < copies(j, i); ++c) {
        const auto& copy = copy_positions(j, i, c);
        os << " " << (i + 1) << "#" << (c + 1) << "->(";
        for (size_t r = 0; r < copy.size(); ++r) {
          if (r) os << ",";
          os << (copy[r] + 1);
        }
        os << ")";
        any = true;
      }
    }
    if (!any) os << " -";
    os << "\n";
  }
  return os.str();
}

} // namespace afb
