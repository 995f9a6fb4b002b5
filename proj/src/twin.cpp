#include "twin.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace afb {

namespace {

int pair_position(const std::pair<int, int>& z, int point) {
  if (z.first == point) return 0;
  if (z.second == point) return 1;
  return -1;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

} // namespace

TwinGround::TwinGround(int num_points) : num_points_(num_points) {
  if (num_points < 2) throw AfbError("twin ground needs at least two points");
  if (num_points > 25) throw AfbError("twin ground larger than supported");
  int all = num_all_points();
  for (int u = 0; u < all; ++u)
    for (int v = u + 1; v < all; ++v) pairs_.push_back({u, v});
  ambient_ = MultiMatrixAlgebra(std::vector<int>(pairs_.size(), 2));
}

std::string TwinGround::point_name(int p) const {
  if (p < 0 || p > num_points_) throw AfbError("point out of range");
  if (p == num_points_) return "~"; // reserved tail point
  return std::string(1, static_cast<char>('a' + p));
}

int TwinGround::num_pairs() const { return static_cast<int>(pairs_.size()); }

std::pair<int, int> TwinGround::pair_points(int block) const {
  return pairs_.at(static_cast<size_t>(block));
}

int TwinGround::pair_block(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(u, v));
  if (it == pairs_.end() || *it != std::make_pair(u, v)) throw AfbError("no such pair block");
  return static_cast<int>(it - pairs_.begin());
}

Element twin_generator(const TwinGround& ground, TwinVariant variant, int point) {
  if (point < 0 || point >= ground.num_points())
    throw AfbError("unknown point for twin generator");
  std::vector<std::pair<UnitIndex, Scalar>> entries;
  for (int b = 0; b < ground.num_pairs(); ++b) {
    int pos = pair_position(ground.pair_points(b), point);
    if (pos < 0) continue;
    if (variant == TwinVariant::A) {
      entries.push_back({{b, 0, 0}, Scalar::one()});
    } else {
      entries.push_back({{b, pos, pos}, Scalar::one()});
    }
  }
  return Element(ground.ambient(), std::move(entries));
}

std::string twin_subset_name(const TwinGround& ground, const std::vector<int>& points) {
  if (points.empty()) return "O";
  std::string s;
  for (int p : points) s += ground.point_name(p);
  return s;
}

namespace {

// p'_x: the point generator with its contributions inside the stage removed;
// what is left lives on the blocks pairing x with points outside lambda.
Element line_projection(const TwinGround& ground, TwinVariant variant, int point,
                        const std::vector<int>& lambda) {
  Element e = twin_generator(ground, variant, point);
  for (int y : lambda) {
    if (y == point) continue;
    int block = ground.pair_block(point, y);
    int pos = variant == TwinVariant::A
                  ? 0
                  : pair_position(ground.pair_points(block), point);
    e = e - Element::matrix_unit(ground.ambient(), {block, pos, pos});
  }
  return e;
}

} // namespace

TwinStage build_twin_stage(const TwinGround& ground, TwinVariant variant,
                           const std::vector<int>& lambda_in) {
  std::vector<int> lambda = sorted_unique(lambda_in);
  for (int p : lambda)
    if (p < 0 || p >= ground.num_points()) throw AfbError("stage subset outside the ground set");

  TwinStage stage;
  stage.variant = variant;
  stage.ambient = ground.ambient();
  stage.points = lambda;
  for (size_t i = 0; i < lambda.size(); ++i)
    for (size_t j = i + 1; j < lambda.size(); ++j)
      stage.pair_blocks.push_back({lambda[i], lambda[j]});
  std::sort(stage.pair_blocks.begin(), stage.pair_blocks.end());

  std::vector<int> sizes(stage.pair_blocks.size(), 2);
  sizes.insert(sizes.end(), lambda.size(), 1);
  stage.algebra = MultiMatrixAlgebra(sizes);
  if (lambda.empty()) return stage; // zero stage

  // Spanning set: the full inner blocks plus the point generators.
  std::vector<Element> span;
  for (const auto& z : stage.pair_blocks) {
    int b = ground.pair_block(z.first, z.second);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        span.push_back(Element::matrix_unit(ground.ambient(), {b, r, c}));
  }
  for (int p : lambda) span.push_back(twin_generator(ground, variant, p));

  // Certify the multi-matrix shape via the generic decomposition.
  SubalgebraDecomposition dec = decompose_span(span);
  std::vector<int> got = dec.summand_sizes;
  std::sort(got.begin(), got.end());
  std::vector<int> expect(lambda.size(), 1);
  expect.insert(expect.end(), stage.pair_blocks.size(), 2);
  if (got != expect) throw AfbError("stage decomposition does not match the expected shape");

  // Realize the abstract matrix units inside the span.
  GeneratorMap embedding(stage.algebra, ground.ambient());
  for (size_t zb = 0; zb < stage.pair_blocks.size(); ++zb) {
    int b = ground.pair_block(stage.pair_blocks[zb].first, stage.pair_blocks[zb].second);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        UnitIndex u{static_cast<int>(zb), r, c};
        stage.unit_order.push_back(u);
        Element img = Element::matrix_unit(ground.ambient(), {b, r, c});
        embedding.set_image(u, img);
        stage.unit_images.push_back(img);
      }
  }
  for (size_t li = 0; li < lambda.size(); ++li) {
    UnitIndex u{static_cast<int>(stage.pair_blocks.size() + li), 0, 0};
    Element img = line_projection(ground, variant, lambda[li], lambda);
    stage.unit_order.push_back(u);
    embedding.set_image(u, img);
    stage.unit_images.push_back(img);
  }
  std::string issue = embedding.check_homomorphism();
  if (!issue.empty()) throw AfbError("stage unit realization is not a homomorphism: " + issue);
  if (embedding.image_rank() != static_cast<int>(stage.algebra.dimension()) ||
      dec.basis.dimension() != static_cast<int>(stage.algebra.dimension()))
    throw AfbError("stage unit realization is not bijective onto the span");
  return stage;
}

Element twin_to_abstract(const TwinStage& stage, const Element& x) {
  if (stage.points.empty()) {
    if (!x.is_zero()) throw AfbError("element is not in the zero stage");
    return Element::zero(stage.algebra);
  }
  auto coeffs = expand_by_leading(stage.unit_images, x);
  if (!coeffs) throw AfbError("element is not in the stage span");
  std::vector<std::pair<UnitIndex, Scalar>> entries;
  for (size_t i = 0; i < coeffs->size(); ++i)
    if (!(*coeffs)[i].is_zero()) entries.push_back({stage.unit_order[i], (*coeffs)[i]});
  return Element(stage.algebra, std::move(entries));
}

Element twin_from_abstract(const TwinStage& stage, const Element& abstract_x) {
  if (abstract_x.algebra() != stage.algebra)
    throw AfbError("element is not in the stage's abstract algebra");
  Element out = Element::zero(stage.ambient);
  for (size_t i = 0; i < stage.unit_order.size(); ++i) {
    Scalar c = abstract_x.coeff(stage.unit_order[i]);
    if (!c.is_zero()) out = out + stage.unit_images[i].scaled(c);
  }
  return out;
}

Wiring twin_inclusion(const TwinStage& sub, const TwinStage& super) {
  if (sub.variant != super.variant) throw AfbError("stage inclusion across variants");
  if (!std::includes(super.points.begin(), super.points.end(), sub.points.begin(),
                     sub.points.end()))
    throw AfbError("stage inclusion requires nested point sets");

  int target_blocks = super.algebra.num_blocks();
  int source_blocks = sub.algebra.num_blocks();
  std::vector<std::vector<std::vector<std::vector<int>>>> slots(
      static_cast<size_t>(target_blocks),
      std::vector<std::vector<std::vector<int>>>(static_cast<size_t>(source_blocks)));

  auto super_pair_index = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(super.pair_blocks.begin(), super.pair_blocks.end(),
                               std::make_pair(u, v));
    return static_cast<int>(it - super.pair_blocks.begin());
  };
  auto super_line_index = [&](int p) {
    auto it = std::lower_bound(super.points.begin(), super.points.end(), p);
    return static_cast<int>(super.pair_blocks.size()) +
           static_cast<int>(it - super.points.begin());
  };

  for (size_t zb = 0; zb < sub.pair_blocks.size(); ++zb) {
    int j = super_pair_index(sub.pair_blocks[zb].first, sub.pair_blocks[zb].second);
    slots[static_cast<size_t>(j)][zb].push_back({0, 1});
  }
  for (size_t li = 0; li < sub.points.size(); ++li) {
    int x = sub.points[li];
    int i = static_cast<int>(sub.pair_blocks.size() + li);
    slots[static_cast<size_t>(super_line_index(x))][static_cast<size_t>(i)].push_back({0});
    for (int y : super.points) {
      if (std::binary_search(sub.points.begin(), sub.points.end(), y)) continue;
      int j = super_pair_index(x, y);
      int pos = sub.variant == TwinVariant::A
                    ? 0
                    : pair_position({std::min(x, y), std::max(x, y)}, x);
      slots[static_cast<size_t>(j)][static_cast<size_t>(i)].push_back({pos});
    }
  }
  Wiring w(sub.algebra, super.algebra, std::move(slots));

  // The wiring must agree with the concrete inclusion on every abstract unit.
  for (size_t i = 0; i < sub.unit_order.size(); ++i) {
    Element via_wiring = w.apply(Element::matrix_unit(sub.algebra, sub.unit_order[i]));
    Element via_sets = twin_to_abstract(super, sub.unit_images[i]);
    if (!(via_wiring == via_sets))
      throw AfbError("stage inclusion wiring disagrees with the set inclusion");
  }
  return w;
}

TwinQuotient quotient_by_commutators(const TwinGround& ground, const TwinStage& stage) {
  TwinQuotient q;
  std::vector<Element> comms;
  for (const UnitIndex& u1 : stage.unit_order)
    for (const UnitIndex& u2 : stage.unit_order)
      comms.push_back(commutator(Element::matrix_unit(stage.algebra, u1),
                                 Element::matrix_unit(stage.algebra, u2)));
  q.ideal_blocks = ideal_generated_by(stage.algebra, comms);

  std::vector<int> quotient_sizes;
  for (int b = 0; b < stage.algebra.num_blocks(); ++b)
    if (!std::binary_search(q.ideal_blocks.begin(), q.ideal_blocks.end(), b))
      quotient_sizes.push_back(stage.algebra.block_size(b));
  q.quotient = MultiMatrixAlgebra(quotient_sizes);

  for (int p : stage.points) {
    Element abs = twin_to_abstract(stage, twin_generator(ground, stage.variant, p));
    q.generator_images.push_back(twin_quotient_map(stage, q, abs));
  }
  return q;
}

Element twin_quotient_map(const TwinStage& stage, const TwinQuotient& q, const Element& x) {
  if (x.algebra() != stage.algebra) throw AfbError("quotient map applied outside the stage");
  // Renumber surviving blocks.
  std::vector<int> new_index(static_cast<size_t>(stage.algebra.num_blocks()), -1);
  int next = 0;
  for (int b = 0; b < stage.algebra.num_blocks(); ++b)
    if (!std::binary_search(q.ideal_blocks.begin(), q.ideal_blocks.end(), b))
      new_index[static_cast<size_t>(b)] = next++;
  std::vector<std::pair<UnitIndex, Scalar>> entries;
  for (const auto& [idx, v] : x.entries()) {
    int nb = new_index[static_cast<size_t>(idx.block)];
    if (nb >= 0) entries.push_back({{nb, idx.row, idx.col}, v});
  }
  return Element(q.quotient, std::move(entries));
}

GeneratorMap splitting_section(const TwinGround& ground, const TwinStage& stage) {
  if (stage.variant != TwinVariant::B)
    throw AfbError("splitting section exists only for the diagonal-generator variant");
  MultiMatrixAlgebra lines(std::vector<int>(stage.points.size(), 1));
  GeneratorMap sigma(lines, ground.ambient());
  for (size_t i = 0; i < stage.points.size(); ++i)
    sigma.set_image({static_cast<int>(i), 0, 0},
                    twin_generator(ground, TwinVariant::B, stage.points[i]));
  std::string issue = sigma.check_homomorphism();
  if (!issue.empty()) throw AfbError("splitting section is not a homomorphism: " + issue);
  return sigma;
}

TwinIso countable_iso(const TwinGround& ground) {
  TwinIso iso{GeneratorMap(ground.ambient(), ground.ambient()), {}};
  // On every pair block, the unit indexed by coordinates goes to the unit
  // indexed by the points in listing order.
  for (int b = 0; b < ground.num_pairs(); ++b) {
    auto [u, v] = ground.pair_points(b);
    int coord_point[2] = {u, v}; // listing order: smaller index first
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        int pi = pair_position(ground.pair_points(b), coord_point[i]);
        int pj = pair_position(ground.pair_points(b), coord_point[j]);
        iso.on_units.set_image({b, i, j},
                               Element::matrix_unit(ground.ambient(), {b, pi, pj}));
      }
  }
  for (int k = 0; k < ground.num_points(); ++k) {
    Element img = twin_generator(ground, TwinVariant::B, k);
    for (int i = 0; i < k; ++i) {
      int b = ground.pair_block(i, k);
      int pos_i = pair_position(ground.pair_points(b), i);
      int pos_k = pair_position(ground.pair_points(b), k);
      img = img + Element::matrix_unit(ground.ambient(), {b, pos_i, pos_i}) -
            Element::matrix_unit(ground.ambient(), {b, pos_k, pos_k});
    }
    iso.p_images.push_back(std::move(img));
  }
  return iso;
}

BrattelDiagram twin_diagram(const TwinGround& ground, TwinVariant variant) {
  int n = ground.num_points();
  // All nonempty subsets of the real points.
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> pts;
    for (int p = 0; p < n; ++p)
      if (mask & (1u << p)) pts.push_back(p);
    subsets.push_back(std::move(pts));
  }
  std::vector<std::string> names;
  std::vector<TwinStage> stages;
  names.reserve(subsets.size());
  for (const auto& pts : subsets) {
    names.push_back(twin_subset_name(ground, pts));
    stages.push_back(build_twin_stage(ground, variant, pts));
  }
  std::vector<std::pair<std::string, std::string>> arcs;
  for (size_t a = 0; a < subsets.size(); ++a)
    for (size_t b = 0; b < subsets.size(); ++b) {
      if (a == b) continue;
      if (std::includes(subsets[b].begin(), subsets[b].end(), subsets[a].begin(),
                        subsets[a].end()))
        arcs.push_back({names[a], names[b]});
    }
  FinitePoset poset(names, arcs);

  std::vector<std::vector<int>> dims(static_cast<size_t>(poset.size()));
  for (size_t i = 0; i < subsets.size(); ++i)
    dims[static_cast<size_t>(poset.index_of(names[i]))] = stages[i].algebra.sizes();

  std::map<std::pair<int, int>, MultiplicityMatrix> mults;
  for (size_t a = 0; a < subsets.size(); ++a)
    for (size_t b = 0; b < subsets.size(); ++b) {
      if (a == b) continue;
      if (!std::includes(subsets[b].begin(), subsets[b].end(), subsets[a].begin(),
                         subsets[a].end()))
        continue;
      Wiring w = twin_inclusion(stages[a], stages[b]);
      mults.emplace(std::make_pair(poset.index_of(names[a]), poset.index_of(names[b])),
                    w.multiplicity());
    }
  return BrattelDiagram(std::move(poset), std::move(dims), std::move(mults));
}

} // namespace afb
