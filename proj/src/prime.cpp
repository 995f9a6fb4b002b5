#include "prime.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace afb {

namespace {

int popcount(unsigned mask) { return __builtin_popcount(mask); }

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f = checked_mul(f, k);
  return f;
}

} // namespace

PrimeGround::PrimeGround(int num_points) : num_points_(num_points) {
  if (num_points < 1) throw AfbError("ground set needs at least one point");
  if (num_points > 6) throw AfbError("ground set larger than supported (block sizes grow as n!)");
  unsigned total = 1u << num_points_;
  for (unsigned mask = 0; mask < total; ++mask) subsets_.push_back(mask);
  std::sort(subsets_.begin(), subsets_.end(), [&](unsigned a, unsigned b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return subset_points(a) < subset_points(b);
  });
  index_of_mask_.assign(total, -1);
  for (size_t i = 0; i < subsets_.size(); ++i)
    index_of_mask_[subsets_[i]] = static_cast<int>(i);

  labels_.resize(subsets_.size());
  std::vector<int> sizes;
  for (size_t i = 0; i < subsets_.size(); ++i) {
    std::vector<int> pts = subset_points(subsets_[i]);
    std::vector<Label>& ls = labels_[i];
    // Permutations in lexicographic order of their value sequences.
    Label cur = pts;
    do {
      ls.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    std::sort(ls.begin(), ls.end());
    sizes.push_back(static_cast<int>(factorial(popcount(subsets_[i]))));
  }
  ambient_ = MultiMatrixAlgebra(sizes);
}

std::string PrimeGround::point_name(int p) const {
  if (p < 0 || p >= num_points_) throw AfbError("point out of range");
  return std::string(1, static_cast<char>('a' + p));
}

int PrimeGround::subset_index(unsigned mask) const {
  if (mask >= index_of_mask_.size()) throw AfbError("subset outside the ground set");
  return index_of_mask_[mask];
}

std::string PrimeGround::subset_name(unsigned mask) const {
  if (mask == 0) return "O";
  std::string s;
  for (int p : subset_points(mask)) s += point_name(p);
  return s;
}

std::vector<int> PrimeGround::subset_points(unsigned mask) {
  std::vector<int> pts;
  for (int p = 0; mask; ++p, mask >>= 1)
    if (mask & 1u) pts.push_back(p);
  return pts;
}

const std::vector<Label>& PrimeGround::labels(unsigned mask) const {
  return labels_.at(static_cast<size_t>(subset_index(mask)));
}

int PrimeGround::label_index(unsigned mask, const Label& t) const {
  const std::vector<Label>& ls = labels(mask);
  auto it = std::lower_bound(ls.begin(), ls.end(), t);
  if (it == ls.end() || *it != t) throw AfbError("label does not enumerate the subset");
  return static_cast<int>(it - ls.begin());
}

MultiMatrixAlgebra PrimeGround::block_algebra(unsigned mask) const {
  return MultiMatrixAlgebra({static_cast<int>(factorial(popcount(mask)))});
}

Label concat_labels(const Label& t, const Label& s) {
  for (int p : t)
    for (int q : s)
      if (p == q) throw AfbError("concatenated labels must have disjoint domains");
  Label r = t;
  r.insert(r.end(), s.begin(), s.end());
  return r;
}

Wiring iota_hom(const PrimeGround& ground, unsigned lambda, unsigned mu) {
  if ((lambda & mu) != lambda) throw AfbError("iota requires nested subsets");
  const std::vector<Label>& src_labels = ground.labels(lambda);
  std::vector<std::vector<int>> copies;
  for (const Label& u : ground.labels(mu & ~lambda)) {
    std::vector<int> positions(src_labels.size());
    for (size_t si = 0; si < src_labels.size(); ++si)
      positions[si] = ground.label_index(mu, concat_labels(src_labels[si], u));
    copies.push_back(std::move(positions));
  }
  return Wiring(ground.block_algebra(lambda), ground.block_algebra(mu), {{copies}});
}

Element f_unit(const PrimeGround& ground, unsigned lambda, const Label& s, const Label& t) {
  // s and t must be labels of lambda.
  (void)ground.label_index(lambda, s);
  (void)ground.label_index(lambda, t);
  std::vector<std::pair<UnitIndex, Scalar>> entries;
  for (int bi = 0; bi < ground.num_subsets(); ++bi) {
    unsigned nu = ground.subset_mask(bi);
    if ((lambda & nu) != lambda) continue;
    for (const Label& u : ground.labels(nu & ~lambda)) {
      entries.push_back({{bi, ground.label_index(nu, concat_labels(s, u)),
                          ground.label_index(nu, concat_labels(t, u))},
                         Scalar::one()});
    }
  }
  return Element(ground.ambient(), std::move(entries));
}

Element stage_unit_element(const PrimeGround& ground, unsigned mu, unsigned lambda,
                           const Label& s, const Label& t) {
  if ((lambda & mu) != lambda) throw AfbError("summand outside the stage");
  Element e = f_unit(ground, lambda, s, t);
  for (int p = 0; p < ground.num_points(); ++p) {
    unsigned bit = 1u << p;
    if ((mu & bit) && !(lambda & bit)) {
      Label sp = s;
      sp.push_back(p);
      Label tp = t;
      tp.push_back(p);
      e = e - f_unit(ground, lambda | bit, sp, tp);
    }
  }
  return e;
}

PrimeStage stage_algebra(const PrimeGround& ground, unsigned mu, bool full_verify) {
  if (mu > ground.full_mask()) throw AfbError("stage subset outside the ground set");
  PrimeStage stage;
  stage.mu = mu;
  std::vector<int> sizes;
  for (int i = 0; i < ground.num_subsets(); ++i) {
    unsigned lambda = ground.subset_mask(i);
    if ((lambda & mu) != lambda) continue;
    stage.block_subsets.push_back(lambda);
    sizes.push_back(static_cast<int>(ground.labels(lambda).size()));
  }
  stage.algebra = MultiMatrixAlgebra(sizes);

  for (size_t b = 0; b < stage.block_subsets.size(); ++b) {
    unsigned lambda = stage.block_subsets[b];
    const std::vector<Label>& ls = ground.labels(lambda);
    for (size_t si = 0; si < ls.size(); ++si)
      for (size_t ti = 0; ti < ls.size(); ++ti) {
        stage.unit_order.push_back(
            {static_cast<int>(b), static_cast<int>(si), static_cast<int>(ti)});
        stage.f_units.push_back(f_unit(ground, lambda, ls[si], ls[ti]));
      }
  }

  // Independence certificate: the f-units have pairwise distinct leading
  // coordinates (each leads at its own subset's block).
  {
    std::vector<UnitIndex> leads;
    for (const Element& f : stage.f_units) leads.push_back(f.leading_index());
    std::sort(leads.begin(), leads.end());
    if (std::adjacent_find(leads.begin(), leads.end()) != leads.end())
      throw AfbError("stage basis is not triangular");
  }

  if (full_verify) {
    // Closure: every pairwise product of basis f-units expands over the basis.
    for (const Element& a : stage.f_units)
      for (const Element& b : stage.f_units)
        if (!expand_by_leading(stage.f_units, a * b))
          throw AfbError("stage span is not closed under multiplication");
    // The corrected units realize the abstract matrix relations.
    GeneratorMap embedding(stage.algebra, ground.ambient());
    for (size_t b = 0; b < stage.block_subsets.size(); ++b) {
      unsigned lambda = stage.block_subsets[b];
      const std::vector<Label>& ls = ground.labels(lambda);
      for (size_t si = 0; si < ls.size(); ++si)
        for (size_t ti = 0; ti < ls.size(); ++ti)
          embedding.set_image({static_cast<int>(b), static_cast<int>(si), static_cast<int>(ti)},
                              stage_unit_element(ground, mu, lambda, ls[si], ls[ti]));
    }
    std::string issue = embedding.check_homomorphism();
    if (!issue.empty())
      throw AfbError("stage unit realization is not a homomorphism: " + issue);
  }
  return stage;
}

Element prime_to_abstract(const PrimeGround& ground, const PrimeStage& stage, const Element& x) {
  if (!x.is_zero() && !expand_by_leading(stage.f_units, x))
    throw AfbError("element is not in the stage span");
  // Evaluation at the subsets of mu: copy the corresponding ambient blocks.
  std::vector<std::pair<UnitIndex, Scalar>> entries;
  for (size_t b = 0; b < stage.block_subsets.size(); ++b) {
    int ambient_block = ground.subset_index(stage.block_subsets[b]);
    for (const auto& [idx, v] : x.entries())
      if (idx.block == ambient_block)
        entries.push_back({{static_cast<int>(b), idx.row, idx.col}, v});
  }
  return Element(stage.algebra, std::move(entries));
}

Wiring prime_inclusion(const PrimeGround& ground, const PrimeStage& sub,
                       const PrimeStage& super, bool verify) {
  if ((sub.mu & super.mu) != sub.mu) throw AfbError("stage inclusion requires nested subsets");
  std::vector<std::vector<std::vector<std::vector<int>>>> slots(
      static_cast<size_t>(super.algebra.num_blocks()),
      std::vector<std::vector<std::vector<int>>>(static_cast<size_t>(sub.algebra.num_blocks())));

  for (size_t jb = 0; jb < super.block_subsets.size(); ++jb) {
    unsigned target = super.block_subsets[jb];
    for (size_t ib = 0; ib < sub.block_subsets.size(); ++ib) {
      unsigned source = sub.block_subsets[ib];
      if ((source & target) != source) continue;
      const std::vector<Label>& src_labels = ground.labels(source);
      for (const Label& w : ground.labels(target & ~source)) {
        // Copies: extensions whose first new point leaves the lower stage.
        if (!w.empty() && (sub.mu & (1u << w.front()))) continue;
        std::vector<int> positions(src_labels.size());
        for (size_t si = 0; si < src_labels.size(); ++si)
          positions[si] = ground.label_index(target, concat_labels(src_labels[si], w));
        slots[jb][ib].push_back(std::move(positions));
      }
    }
  }
  Wiring w(sub.algebra, super.algebra, std::move(slots));

  if (verify) {
    for (size_t b = 0; b < sub.block_subsets.size(); ++b) {
      unsigned lambda = sub.block_subsets[b];
      const std::vector<Label>& ls = ground.labels(lambda);
      for (size_t si = 0; si < ls.size(); ++si)
        for (size_t ti = 0; ti < ls.size(); ++ti) {
          Element unit = Element::matrix_unit(sub.algebra,
                                              {static_cast<int>(b), static_cast<int>(si),
                                               static_cast<int>(ti)});
          Element concrete = stage_unit_element(ground, sub.mu, lambda, ls[si], ls[ti]);
          if (!(w.apply(unit) == prime_to_abstract(ground, super, concrete)))
            throw AfbError("stage inclusion wiring disagrees with the set inclusion");
        }
    }
  }
  return w;
}

SummandLocation locate_summand_ideal(const PrimeGround& ground, unsigned mu, const Element& a) {
  if (a.is_zero()) throw AfbError("summand location needs a nonzero element");
  if (mu == ground.full_mask())
    throw AfbError("no fresh point available: the stage already uses the whole ground set");
  PrimeStage stage = stage_algebra(ground, mu, /*full_verify=*/false);
  auto coeffs = expand_by_leading(stage.f_units, a);
  if (!coeffs) throw AfbError("element is not in the stage span");

  // Components per summand; block_subsets is in (size, lex) order, so the
  // first nonzero component is inclusion-minimal.
  SummandLocation loc{};
  bool found = false;
  Element a_min = Element::zero(ground.ambient());
  for (size_t b = 0; b < stage.block_subsets.size() && !found; ++b) {
    for (size_t k = 0; k < stage.unit_order.size(); ++k) {
      if (stage.unit_order[k].block != static_cast<int>(b) || (*coeffs)[k].is_zero()) continue;
      found = true;
      a_min = a_min + stage.f_units[k].scaled((*coeffs)[k]);
    }
    if (found) loc.lambda0 = stage.block_subsets[b];
  }

  loc.fresh_point = -1;
  for (int p = 0; p < ground.num_points(); ++p)
    if (!(mu & (1u << p))) {
      loc.fresh_point = p;
      break;
    }
  loc.lambda0_grown = loc.lambda0 | (1u << loc.fresh_point);
  unsigned mu_grown = mu | (1u << loc.fresh_point);

  // Unit of the grown summand.
  Element unit = Element::zero(ground.ambient());
  for (const Label& t : ground.labels(loc.lambda0_grown))
    unit = unit + f_unit(ground, loc.lambda0_grown, t, t);

  // Only the minimal component survives compression, and it stays nonzero.
  Element compressed = a * unit;
  if (!(compressed == a_min * unit) || compressed.is_zero())
    throw AfbError("summand compression failed");

  // Ideal generated by a in the grown stage contains the whole grown summand.
  PrimeStage grown = stage_algebra(ground, mu_grown, /*full_verify=*/false);
  std::vector<int> ideal = ideal_generated_by(grown.algebra, {prime_to_abstract(ground, grown, a)});
  for (int b : ideal) loc.ideal_support.push_back(grown.block_subsets[static_cast<size_t>(b)]);
  const std::vector<Label>& ls = ground.labels(loc.lambda0_grown);
  for (size_t si = 0; si < ls.size(); ++si)
    for (size_t ti = 0; ti < ls.size(); ++ti) {
      Element f = f_unit(ground, loc.lambda0_grown, ls[si], ls[ti]);
      if (!ideal_contains(ideal, prime_to_abstract(ground, grown, f)))
        throw AfbError("generated ideal misses part of the grown summand");
    }
  return loc;
}

bool hereditary_check(const PrimeGround& ground, unsigned mu, unsigned lambda0, unsigned lambda) {
  if ((lambda0 & lambda) != lambda0 || (lambda & mu) != lambda)
    throw AfbError("hereditary check requires lambda0 within lambda within mu");
  PrimeStage stage = stage_algebra(ground, mu, /*full_verify=*/false);
  std::vector<Element> gens;
  for (const Label& s : ground.labels(lambda0))
    for (const Label& t : ground.labels(lambda0))
      gens.push_back(prime_to_abstract(ground, stage, f_unit(ground, lambda0, s, t)));
  std::vector<int> ideal = ideal_generated_by(stage.algebra, gens);
  for (const Label& s : ground.labels(lambda))
    for (const Label& t : ground.labels(lambda))
      if (!ideal_contains(ideal, prime_to_abstract(ground, stage, f_unit(ground, lambda, s, t))))
        return false;
  return true;
}

BrattelDiagram prime_stage_diagram(const PrimeGround& ground, bool full_verify) {
  std::vector<std::string> names;
  std::vector<PrimeStage> stages;
  for (int i = 0; i < ground.num_subsets(); ++i) {
    unsigned mu = ground.subset_mask(i);
    names.push_back(ground.subset_name(mu));
    stages.push_back(stage_algebra(ground, mu, full_verify));
  }
  std::vector<std::pair<std::string, std::string>> arcs;
  for (int a = 0; a < ground.num_subsets(); ++a)
    for (int b = 0; b < ground.num_subsets(); ++b) {
      unsigned ma = ground.subset_mask(a);
      unsigned mb = ground.subset_mask(b);
      if (ma != mb && (ma & mb) == ma) arcs.push_back({names[static_cast<size_t>(a)], names[static_cast<size_t>(b)]});
    }
  FinitePoset poset(names, arcs);

  std::vector<std::vector<int>> dims(static_cast<size_t>(poset.size()));
  for (int i = 0; i < ground.num_subsets(); ++i)
    dims[static_cast<size_t>(poset.index_of(names[static_cast<size_t>(i)]))] =
        stages[static_cast<size_t>(i)].algebra.sizes();

  std::map<std::pair<int, int>, MultiplicityMatrix> mults;
  for (int a = 0; a < ground.num_subsets(); ++a)
    for (int b = 0; b < ground.num_subsets(); ++b) {
      unsigned ma = ground.subset_mask(a);
      unsigned mb = ground.subset_mask(b);
      if (ma == mb || (ma & mb) != ma) continue;
      Wiring w = prime_inclusion(ground, stages[static_cast<size_t>(a)],
                                 stages[static_cast<size_t>(b)], full_verify);
      mults.emplace(
          std::make_pair(poset.index_of(names[static_cast<size_t>(a)]),
                         poset.index_of(names[static_cast<size_t>(b)])),
          w.multiplicity());
    }
  return BrattelDiagram(std::move(poset), std::move(dims), std::move(mults));
}

} // namespace afb
