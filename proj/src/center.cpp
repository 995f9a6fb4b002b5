#include "center.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace afb {

namespace {

// Unit of the span: u with u b = b u = b for all basis vectors b.
Element find_unit(const SpanBasis& basis, const MultiMatrixAlgebra& algebra) {
  const auto& rows = basis.rows();
  int d = basis.dimension();
  if (d == 0) return Element::zero(algebra);
  // Unknowns: coefficients of u over the basis. Equations: coordinates of
  // u b_j - b_j over the basis must vanish (u b_j stays in the span since the
  // span is multiplicatively closed).
  DenseMatrix m;
  std::vector<Scalar> rhs;
  for (int j = 0; j < d; ++j) {
    DenseMatrix cols(static_cast<size_t>(d), std::vector<Scalar>(static_cast<size_t>(d)));
    DenseMatrix cols_r(static_cast<size_t>(d), std::vector<Scalar>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i) {
      auto li = basis.coordinates(rows[static_cast<size_t>(i)] * rows[static_cast<size_t>(j)]);
      auto ri = basis.coordinates(rows[static_cast<size_t>(j)] * rows[static_cast<size_t>(i)]);
      if (!li || !ri) throw AfbError("span is not closed under multiplication");
      for (int k = 0; k < d; ++k) {
        cols[static_cast<size_t>(k)][static_cast<size_t>(i)] = (*li)[static_cast<size_t>(k)];
        cols_r[static_cast<size_t>(k)][static_cast<size_t>(i)] = (*ri)[static_cast<size_t>(k)];
      }
    }
    auto target = basis.coordinates(rows[static_cast<size_t>(j)]);
    for (int k = 0; k < d; ++k) {
      m.push_back(cols[static_cast<size_t>(k)]);
      rhs.push_back((*target)[static_cast<size_t>(k)]);
      m.push_back(cols_r[static_cast<size_t>(k)]);
      rhs.push_back((*target)[static_cast<size_t>(k)]);
    }
  }
  auto sol = dense_solve(std::move(m), std::move(rhs));
  if (!sol) throw AfbError("span has no unit; not a *-subalgebra");
  Element u = Element::zero(algebra);
  for (int i = 0; i < d; ++i)
    u = u + rows[static_cast<size_t>(i)].scaled((*sol)[static_cast<size_t>(i)]);
  return u;
}

// Elements of the span commuting with every basis vector.
std::vector<Element> compute_center(const SpanBasis& basis, const MultiMatrixAlgebra& algebra) {
  const auto& rows = basis.rows();
  int d = basis.dimension();
  // Solution space, maintained as explicit elements; cut down one basis
  // vector at a time.
  std::vector<Element> space = rows;
  for (int j = 0; j < d && !space.empty(); ++j) {
    const Element& b = rows[static_cast<size_t>(j)];
    // Matrix of v -> [v, b] over the current space, expressed in ambient
    // coordinates; its nullspace survives.
    std::vector<Element> comms;
    comms.reserve(space.size());
    std::vector<UnitIndex> coords;
    for (const Element& v : space) {
      Element c = commutator(v, b);
      for (const auto& [idx, val] : c.entries()) coords.push_back(idx);
      comms.push_back(std::move(c));
    }
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    if (coords.empty()) continue;
    DenseMatrix m(coords.size(), std::vector<Scalar>(space.size()));
    for (size_t col = 0; col < comms.size(); ++col) {
      for (const auto& [idx, val] : comms[col].entries()) {
        size_t row = static_cast<size_t>(
            std::lower_bound(coords.begin(), coords.end(), idx) - coords.begin());
        m[row][col] = val;
      }
    }
    auto null_basis = dense_nullspace(std::move(m), static_cast<int>(space.size()));
    std::vector<Element> next;
    next.reserve(null_basis.size());
    for (const auto& combo : null_basis) {
      Element v = Element::zero(algebra);
      for (size_t i = 0; i < space.size(); ++i)
        if (!combo[i].is_zero()) v = v + space[i].scaled(combo[i]);
      next.push_back(std::move(v));
    }
    space = std::move(next);
  }
  return space;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  n = std::llabs(n);
  std::vector<std::int64_t> ds;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Rational roots of a polynomial with rational coefficients (constant term
// first). The polynomials here are minimal polynomials of self-adjoint
// elements of a commutative semisimple algebra, hence squarefree with real
// roots; the split must be complete over the rationals.
std::vector<Rational> rational_roots(const std::vector<Rational>& poly) {
  // Clear denominators to a primitive integer polynomial.
  std::int64_t common_den = 1;
  for (const Rational& c : poly)
    common_den = checked_mul(common_den / std::gcd(common_den, c.den()), c.den());
  std::vector<std::int64_t> ip;
  for (const Rational& c : poly) ip.push_back(checked_mul(c.num(), common_den / c.den()));
  while (!ip.empty() && ip.back() == 0) ip.pop_back();
  if (ip.size() < 2) return {};
  auto eval_zero = [&](const Rational& x) {
    Rational acc(0);
    for (size_t k = ip.size(); k-- > 0;) acc = acc * x + Rational(ip[k]);
    return acc.is_zero();
  };
  std::vector<Rational> roots;
  if (ip.front() == 0) roots.push_back(Rational(0));
  std::int64_t lead = ip.back();
  std::int64_t lowest = 0;
  for (std::int64_t c : ip) {
    if (c != 0) {
      lowest = c;
      break;
    }
  }
  for (std::int64_t p : divisors(lowest)) {
    for (std::int64_t q : divisors(lead)) {
      Rational cand(p, q);
      if (eval_zero(cand)) roots.push_back(cand);
      if (eval_zero(-cand)) roots.push_back(-cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

struct Component {
  Element idempotent;
  std::vector<Element> center; // basis of (idempotent · center)
};

} // namespace

SubalgebraDecomposition decompose_span(const std::vector<Element>& spanning) {
  if (spanning.empty()) throw AfbError("empty spanning set");
  const MultiMatrixAlgebra& algebra = spanning.front().algebra();
  for (const Element& e : spanning)
    if (e.algebra() != algebra) throw AfbError("spanning set mixes algebras");

  SubalgebraDecomposition out;
  out.basis = SpanBasis(spanning);
  const auto& rows = out.basis.rows();
  if (rows.empty()) {
    out.unit = Element::zero(algebra);
    return out;
  }

  // Closure under multiplication and adjoints is checked, not assumed.
  for (const Element& a : rows) {
    if (!out.basis.contains(a.adjoint()))
      throw AfbError("span is not closed under adjoints");
    for (const Element& b : rows) {
      if (!out.basis.contains(a * b))
        throw AfbError("span is not closed under multiplication");
    }
  }

  out.unit = find_unit(out.basis, algebra);

  std::vector<Element> center = compute_center(out.basis, algebra);

  // Split the center into minimal idempotents. Self-adjoint elements of each
  // component are split by the rational eigenvalues of their minimal
  // polynomial until every component is one-dimensional.
  std::vector<Component> done;
  std::vector<Component> work;
  work.push_back({out.unit, center});
  while (!work.empty()) {
    Component comp = std::move(work.back());
    work.pop_back();
    SpanBasis comp_center(comp.center);
    if (comp_center.dimension() <= 1) {
      done.push_back(std::move(comp));
      continue;
    }
    // Find a self-adjoint center element of this component that is not a
    // multiple of the component unit.
    Element h = Element::zero(algebra);
    bool found = false;
    for (const Element& z : comp_center.rows()) {
      for (const Element& cand :
           {(z + z.adjoint()).scaled(Scalar(Rational(1, 2))),
            (z - z.adjoint()).scaled(Scalar(Rational(0), Rational(-1, 2)))}) {
        if (cand.is_zero()) continue;
        SpanBasis test({comp.idempotent});
        if (!test.contains(cand)) {
          h = cand;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw AfbError("center component of dimension > 1 spanned by its unit");

    // Minimal polynomial of h relative to the component unit.
    std::vector<Element> powers = {comp.idempotent};
    SpanBasis pow_basis({comp.idempotent});
    std::vector<Rational> poly;
    while (true) {
      Element next = powers.back() * h;
      auto coords = pow_basis.coordinates(next);
      if (coords) {
        // next = sum coords_k * basis-row_k; translate to power coefficients.
        // pow_basis rows are reduced versions of the powers, so solve in the
        // power coordinates directly instead.
        DenseMatrix m;
        std::vector<UnitIndex> coord_keys;
        for (const Element& p : powers)
          for (const auto& [idx, v] : p.entries()) coord_keys.push_back(idx);
        for (const auto& [idx, v] : next.entries()) coord_keys.push_back(idx);
        std::sort(coord_keys.begin(), coord_keys.end());
        coord_keys.erase(std::unique(coord_keys.begin(), coord_keys.end()), coord_keys.end());
        m.assign(coord_keys.size(), std::vector<Scalar>(powers.size()));
        std::vector<Scalar> rhs(coord_keys.size());
        for (size_t col = 0; col < powers.size(); ++col)
          for (const auto& [idx, v] : powers[col].entries()) {
            size_t row = static_cast<size_t>(
                std::lower_bound(coord_keys.begin(), coord_keys.end(), idx) -
                coord_keys.begin());
            m[row][col] = v;
          }
        for (const auto& [idx, v] : next.entries()) {
          size_t row = static_cast<size_t>(
              std::lower_bound(coord_keys.begin(), coord_keys.end(), idx) - coord_keys.begin());
          rhs[row] = v;
        }
        auto sol = dense_solve(std::move(m), std::move(rhs));
        if (!sol) throw AfbError("minimal polynomial solve failed");
        // h^k = sum_j sol_j h^j  =>  p(x) = x^k - sum sol_j x^j, constant first.
        poly.assign(powers.size() + 1, Rational(0));
        for (size_t j = 0; j < powers.size(); ++j) {
          const Scalar& c = (*sol)[j];
          if (!c.is_real())
            throw AfbError("self-adjoint center element with non-real minimal polynomial");
          poly[j] = -c.re;
        }
        poly[powers.size()] = Rational(1);
        break;
      }
      pow_basis.insert(next);
      powers.push_back(std::move(next));
    }

    std::vector<Rational> roots = rational_roots(poly);
    if (roots.size() + 1 != poly.size())
      throw AfbError("center does not split over the rationals");

    // Lagrange idempotents for each eigenvalue.
    for (const Rational& r : roots) {
      Element e_r = comp.idempotent;
      for (const Rational& s : roots) {
        if (s == r) continue;
        Element factor = h - comp.idempotent.scaled(Scalar(s));
        e_r = e_r * factor.scaled(Scalar::one() / Scalar(r - s));
      }
      std::vector<Element> sub_center;
      for (const Element& z : comp.center) {
        Element w = z * e_r;
        if (!w.is_zero()) sub_center.push_back(std::move(w));
      }
      work.push_back({std::move(e_r), std::move(sub_center)});
    }
  }

  // Canonical order: by leading ambient coordinate of the idempotent.
  std::sort(done.begin(), done.end(), [](const Component& a, const Component& b) {
    return a.idempotent.leading_index() < b.idempotent.leading_index();
  });

  for (const Component& comp : done) {
    out.idempotents.push_back(comp.idempotent);
    // Summand dimension = dim(e · span); its matrix size is the square root.
    SpanBasis summand;
    for (const Element& b : rows) summand.insert(comp.idempotent * b);
    int dim = summand.dimension();
    int n = 0;
    while (n * n < dim) ++n;
    if (n * n != dim) throw AfbError("summand of non-square dimension; not semisimple");
    out.summand_sizes.push_back(n);
  }
  return out;
}

std::vector<Element> minimal_central_idempotents(const std::vector<Element>& spanning) {
  return decompose_span(spanning).idempotents;
}

GeneratorMap::GeneratorMap(MultiMatrixAlgebra source, MultiMatrixAlgebra target)
    : source_(std::move(source)), target_(std::move(target)) {}

void GeneratorMap::set_image(const UnitIndex& unit, Element value) {
  if (value.algebra() != target_) throw AfbError("generator image outside target algebra");
  images_[unit] = std::move(value);
}

const Element& GeneratorMap::image(const UnitIndex& unit) const {
  auto it = images_.find(unit);
  if (it == images_.end()) throw AfbError("generator map has no image for this unit");
  return it->second;
}

Element GeneratorMap::apply(const Element& x) const {
  if (x.algebra() != source_) throw AfbError("generator map applied outside its source");
  Element out = Element::zero(target_);
  for (const auto& [idx, v] : x.entries()) out = out + image(idx).scaled(v);
  return out;
}

std::string GeneratorMap::check_homomorphism() const {
  auto name = [](const UnitIndex& u) {
    std::ostringstream os;
    os << "e[" << (u.block + 1) << ";" << (u.row + 1) << "," << (u.col + 1) << "]";
    return os.str();
  };
  for (int b = 0; b < source_.num_blocks(); ++b) {
    int n = source_.block_size(b);
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        const Element& img = image({b, r, s});
        if (!(img.adjoint() == image({b, s, r})))
          return "adjoint violated at " + name({b, r, s});
      }
  }
  for (int b1 = 0; b1 < source_.num_blocks(); ++b1) {
    int n1 = source_.block_size(b1);
    for (int b2 = 0; b2 < source_.num_blocks(); ++b2) {
      int n2 = source_.block_size(b2);
      for (int r = 0; r < n1; ++r)
        for (int s = 0; s < n1; ++s)
          for (int s2 = 0; s2 < n2; ++s2)
            for (int t = 0; t < n2; ++t) {
              Element prod = image({b1, r, s}) * image({b2, s2, t});
              Element expect = (b1 == b2 && s == s2)
                                   ? image({b1, r, t})
                                   : Element::zero(target_);
              if (!(prod == expect))
                return "product violated at " + name({b1, r, s}) + " * " + name({b2, s2, t});
            }
    }
  }
  return "";
}

int GeneratorMap::image_rank() const {
  SpanBasis basis;
  for (const auto& [idx, img] : images_) basis.insert(img);
  return basis.dimension();
}

} // namespace afb
