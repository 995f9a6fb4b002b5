#include "kzero.hpp"

namespace afb {

K0Stage stage_k0(const MultiMatrixAlgebra& algebra) {
  K0Stage s;
  s.rank = algebra.num_blocks();
  s.dims.assign(algebra.sizes().begin(), algebra.sizes().end());
  return s;
}

MultiplicityMatrix connect(const Wiring& w) { return w.multiplicity(); }

std::vector<std::int64_t> class_of_projection(const Element& p) {
  if (!p.is_projection()) throw AfbError("class is defined for projections only");
  std::vector<int> ranks = p.block_ranks();
  return std::vector<std::int64_t>(ranks.begin(), ranks.end());
}

namespace {

void check_class(const BrattelDiagram& d, const ColimitClass& c) {
  if (c.vertex < 0 || c.vertex >= d.poset().size())
    throw AfbError("colimit class vertex is not in the diagram");
  if (static_cast<int>(c.v.size()) != d.num_blocks(c.vertex))
    throw AfbError("colimit class vector length does not match the stage rank");
}

} // namespace

bool colimit_equal(const BrattelDiagram& d, const ColimitClass& c1, const ColimitClass& c2) {
  check_class(d, c1);
  check_class(d, c2);
  for (int u = 0; u < d.poset().size(); ++u) {
    if (!d.poset().leq(c1.vertex, u) || !d.poset().leq(c2.vertex, u)) continue;
    if (d.mult(c1.vertex, u).apply(c1.v) == d.mult(c2.vertex, u).apply(c2.v)) return true;
  }
  return false;
}

PositivityVerdict positive_and_scale(const BrattelDiagram& d, const ColimitClass& c) {
  check_class(d, c);
  PositivityVerdict verdict;
  for (int u = 0; u < d.poset().size(); ++u) {
    if (!d.poset().leq(c.vertex, u)) continue;
    std::vector<std::int64_t> image = d.mult(c.vertex, u).apply(c.v);
    bool nonneg = true;
    bool scaled = true;
    for (int k = 0; k < d.num_blocks(u); ++k) {
      if (image[static_cast<size_t>(k)] < 0) nonneg = false;
      if (image[static_cast<size_t>(k)] < 0 ||
          image[static_cast<size_t>(k)] > d.dims(u)[static_cast<size_t>(k)])
        scaled = false;
    }
    verdict.positive = verdict.positive || nonneg;
    verdict.in_scale = verdict.in_scale || scaled;
  }
  return verdict;
}

} // namespace afb
