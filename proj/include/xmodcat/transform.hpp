#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "action.hpp"
#include "error.hpp"
#include "fincat.hpp"
#include "parallel.hpp"
#include "quintet.hpp"
#include "report.hpp"

namespace xmodcat {

// ---------------------------------------------------------------------------
// Groupoids

/// A finite category in which every morphism is invertible, with the
/// inverses tabulated.
struct FiniteGroupoid {
  CategoryRef cat;
  std::vector<Index> inverse;

  Index objects() const { return cat->objects(); }
  Index morphisms() const { return cat->morphisms(); }
};

/// Attaches inverses; throws IdentityLawViolation naming a non-invertible
/// morphism.
inline FiniteGroupoid make_groupoid(FiniteCategory c) {
  FiniteGroupoid g{std::make_shared<const FiniteCategory>(std::move(c)), {}};
  g.inverse.resize(g.cat->morphisms());
  for (Index f = 0; f < g.cat->morphisms(); ++f) {
    g.inverse[f] = g.cat->inverse(f);
    if (g.inverse[f] == kNone) throw Error(ErrorKind::IdentityLawViolation, "morphism has no inverse", {f});
  }
  return g;
}

/// X⫽K for a group K (given by its multiplication) acting on a finite set X
/// through act(k, x). Morphism (k, x) : x → k▷x has index k·|X| + x and
/// (k', k▷x) ∘ (k, x) = (k'k, x).
template <class Mul, class Act>
FiniteGroupoid transformation_groupoid(Index points, Index group_order, Index unit, Mul&& mul, Act&& act) {
  std::vector<MorphismType> mors;
  mors.reserve(static_cast<std::size_t>(points) * group_order);
  for (Index k = 0; k < group_order; ++k)
    for (Index x = 0; x < points; ++x) mors.push_back({x, act(k, x)});
  std::vector<Index> ids(points);
  for (Index x = 0; x < points; ++x) ids[x] = unit * points + x;
  return make_groupoid(FiniteCategory::build(points, std::move(mors), std::move(ids), [&](Index later, Index earlier) {
    return mul(later / points, earlier / points) * points + earlier % points;
  }));
}

/// Component label per object (numbered by first appearance) and the count.
struct Components {
  std::vector<Index> label;
  Index count = 0;
};

inline Components connected_components(const FiniteCategory& c) {
  std::vector<Index> parent(c.objects());
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Index f = 0; f < c.morphisms(); ++f) {
    const Index a = find(c.src(f));
    const Index b = find(c.tgt(f));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Components out{std::vector<Index>(c.objects(), kNone), 0};
  std::vector<Index> root_label(c.objects(), kNone);
  for (Index x = 0; x < c.objects(); ++x) {
    const Index r = find(x);
    if (root_label[r] == kNone) root_label[r] = out.count++;
    out.label[x] = root_label[r];
  }
  return out;
}

/// Bijections on objects and morphisms claimed to form an isomorphism.
struct IsoWitness {
  std::vector<Index> objects;
  std::vector<Index> morphisms;
};

/// Checks entrywise that `w` is an isomorphism of groupoids: iso.bijective,
/// iso.typing, iso.identity, iso.composition, iso.inverse.
inline Report check_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b, const IsoWitness& w,
                                std::size_t cap = Report::kDefaultCap) {
  Report r(cap);
  const auto& A = *a.cat;
  const auto& B = *b.cat;
  auto bijective = [](const std::vector<Index>& map, Index n) {
    if (map.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (Index v : map) {
      if (v >= n || hit[v]) return false;
      hit[v] = true;
    }
    return true;
  };
  r.expect(A.objects() == B.objects() && bijective(w.objects, B.objects()), "iso.bijective", {0});
  r.expect(A.morphisms() == B.morphisms() && bijective(w.morphisms, B.morphisms()), "iso.bijective", {1});
  if (!r.ok()) return r;
  for (Index f = 0; f < A.morphisms(); ++f) {
    const Index m = w.morphisms[f];
    r.expect(B.src(m) == w.objects[A.src(f)] && B.tgt(m) == w.objects[A.tgt(f)], "iso.typing", {f});
    r.expect(w.morphisms[a.inverse[f]] == b.inverse[m], "iso.inverse", {f});
  }
  for (Index x = 0; x < A.objects(); ++x) r.expect(w.morphisms[A.id(x)] == B.id(w.objects[x]), "iso.identity", {x});
  for (const auto& [g, f, gf] : A.composition_triples())
    r.expect(w.morphisms[gf] == B.compose(w.morphisms[g], w.morphisms[f]), "iso.composition", {g, f});
  return r;
}

// ---------------------------------------------------------------------------
// The transformation double category

/// The square ⟨(γ,χ), f⟩:
///
///             f : x → y
///   (γ,x)  +-----------+  (∂(χ)γ, y)
///          |   (γ,χ)   |
///          +-----------+
///          (γ,χ) ▷ f
struct TDSquare {
  Index gamma = 0;
  Index chi = 0;
  Index f = 0;

  bool operator==(const TDSquare&) const = default;
};

/// Boundary of a stored square. Vertical edges are indices into the
/// vertical category, (γ, x) ↦ γ·|Ob| + x.
struct SquareBoundary {
  Index top = 0;
  Index bottom = 0;
  Index left = 0;
  Index right = 0;
};

class TransDoubleCat {
 public:
  /// Builds the square store without validating the action. Throws
  /// ComponentInvalid on malformed tables.
  static TransDoubleCat build_unchecked(StrictAction act) {
    detail::check_action_shape(act);
    TransDoubleCat d;
    d.act_ = std::make_shared<const StrictAction>(std::move(act));
    const auto& a = *d.act_;
    const auto& G = a.xm->G();
    const Index ng = G.order();
    const Index nh = a.xm->H().order();
    const Index no = a.cat->objects();
    const Index nm = a.cat->morphisms();

    std::vector<MorphismType> vmors;
    vmors.reserve(static_cast<std::size_t>(ng) * no);
    for (Index g = 0; g < ng; ++g)
      for (Index x = 0; x < no; ++x) vmors.push_back({x, a.obj(g, x)});
    std::vector<Index> vids(no);
    for (Index x = 0; x < no; ++x) vids[x] = G.identity() * no + x;
    // (γ', γ▷x) ∘ (γ, x) = (γ'γ, x)
    d.vertical_ = std::make_shared<const FiniteCategory>(
        FiniteCategory::build(no, std::move(vmors), std::move(vids), [&](Index later, Index earlier) {
          return G.mul(later / no, earlier / no) * no + earlier % no;
        }));

    d.store_.resize(static_cast<std::size_t>(ng) * nh * nm);
    for (Index g = 0; g < ng; ++g)
      for (Index c = 0; c < nh; ++c) {
        const Index moved = G.mul(a.xm->d(c), g);
        for (Index f = 0; f < nm; ++f)
          d.store_[d.square_index({g, c, f})] = {f, a.mor(g, c, f), g * no + a.cat->src(f),
                                                 moved * no + a.cat->tgt(f)};
      }
    return d;
  }

  const StrictAction& action() const { return *act_; }
  std::shared_ptr<const StrictAction> action_ptr() const { return act_; }
  const CrossedModule& xm() const { return *act_->xm; }
  const FiniteCategory& horizontal() const { return *act_->cat; }
  CategoryRef horizontal_ref() const { return act_->cat; }
  const FiniteCategory& vertical() const { return *vertical_; }
  CategoryRef vertical_ref() const { return vertical_; }

  Index objects() const { return act_->cat->objects(); }
  std::size_t squares() const { return store_.size(); }

  std::size_t square_index(const TDSquare& s) const {
    return (static_cast<std::size_t>(s.gamma) * act_->xm->H().order() + s.chi) * act_->cat->morphisms() + s.f;
  }
  TDSquare square_at(std::size_t k) const {
    const std::size_t nm = act_->cat->morphisms();
    const std::size_t nh = act_->xm->H().order();
    return {static_cast<Index>(k / nm / nh), static_cast<Index>(k / nm % nh), static_cast<Index>(k % nm)};
  }
  const SquareBoundary& boundary(const TDSquare& s) const { return store_[square_index(s)]; }

  Index vertical_index(Index gamma, Index x) const { return gamma * objects() + x; }
  std::pair<Index, Index> vertical_label(Index v) const { return {v / objects(), v % objects()}; }

 private:
  std::shared_ptr<const StrictAction> act_;
  CategoryRef vertical_;
  std::vector<SquareBoundary> store_;
};

/// Throws InvalidAction (message carries the first violation) unless the
/// action validates.
inline TransDoubleCat build_transformation_double(StrictAction act) {
  const Report r = validate_strict_action(act, 1);
  if (!r.ok()) {
    const auto& v = r.violations().front();
    throw Error(ErrorKind::InvalidAction, "action violates " + v.law, v.witness);
  }
  return TransDoubleCat::build_unchecked(std::move(act));
}

namespace detail {

inline std::optional<TDSquare> try_compose_h(const TransDoubleCat& d, const TDSquare& s1, const TDSquare& s2) {
  const auto& xm = d.xm();
  const auto& C = d.horizontal();
  if (s2.gamma != xm.G().mul(xm.d(s1.chi), s1.gamma) || C.src(s2.f) != C.tgt(s1.f)) return std::nullopt;
  return TDSquare{s1.gamma, xm.H().mul(s2.chi, s1.chi), C.compose(s2.f, s1.f)};
}

inline std::optional<TDSquare> try_compose_v(const TransDoubleCat& d, const TDSquare& upper, const TDSquare& lower) {
  const auto& xm = d.xm();
  if (lower.f != d.boundary(upper).bottom) return std::nullopt;
  return TDSquare{xm.G().mul(lower.gamma, upper.gamma), xm.H().mul(lower.chi, xm.act(lower.gamma, upper.chi)),
                  upper.f};
}

}  // namespace detail

/// Horizontal: (left, right) in diagram order; requires the right edge of
/// `s1` to equal the left edge of `s2` and gives ⟨(γ₁, χ₂χ₁), g∘f⟩.
/// Vertical: (upper, lower); requires the bottom of `s1` to be the top of
/// `s2` and gives ⟨(γ₁γ₃, χ₁(γ₁▷χ₂)), f⟩ for upper ⟨(γ₃,χ₂), f⟩ and lower
/// ⟨(γ₁,χ₁), (γ₃,χ₂)▷f⟩. Throws NotAdjacent naming the mismatched edge.
inline TDSquare compose_squares(const TransDoubleCat& d, const TDSquare& s1, const TDSquare& s2, Axis axis) {
  const auto& xm = d.xm();
  if (axis == Axis::Horizontal) {
    const Index moved = xm.G().mul(xm.d(s1.chi), s1.gamma);
    if (s2.gamma != moved)
      throw Error(ErrorKind::NotAdjacent, "vertical edge: right square starts at group element " +
                                              std::to_string(s2.gamma) + ", left square ends at " +
                                              std::to_string(moved),
                  {s2.gamma, moved});
    const auto& C = d.horizontal();
    if (C.src(s2.f) != C.tgt(s1.f))
      throw Error(ErrorKind::NotAdjacent, "horizontal morphisms are not composable", {C.src(s2.f), C.tgt(s1.f)});
    return *detail::try_compose_h(d, s1, s2);
  }
  const Index bottom = d.boundary(s1).bottom;
  if (s2.f != bottom)
    throw Error(ErrorKind::NotAdjacent, "horizontal edge: lower square's top " + std::to_string(s2.f) +
                                            " differs from upper square's bottom " + std::to_string(bottom),
                {s2.f, bottom});
  return *detail::try_compose_v(d, s1, s2);
}

/// ⟨(γ, 1), id_x⟩, the identity for horizontal composition on (γ, x).
inline TDSquare horizontal_unit(const TransDoubleCat& d, Index gamma, Index x) {
  return {gamma, d.xm().H().identity(), d.horizontal().id(x)};
}

/// ⟨(e, 1), f⟩, the identity for vertical composition on f.
inline TDSquare vertical_unit(const TransDoubleCat& d, Index f) {
  return {d.xm().G().identity(), d.xm().H().identity(), f};
}

// ---------------------------------------------------------------------------
// Transpose

struct TransposeViews {
  /// Ob(C)⫽G built from the object table alone.
  FiniteGroupoid objects;
  /// Mor(C)⫽(G⋉H) built from the morphism table and the tensor product.
  FiniteGroupoid morphisms;
  /// The vertical category of the double category.
  FiniteGroupoid vertical;
  /// Squares under vertical composition: objects Mor(C), arrows the squares.
  FiniteGroupoid square_columns;
  IsoWitness vertical_to_objects;
  IsoWitness columns_to_morphisms;
  Report report;
};

/// The transpose of C⫽G as a pair of transformation groupoids, each paired
/// with the corresponding structure of the double category through an
/// explicit bijection that is checked entrywise.
inline TransposeViews transpose_views(const TransDoubleCat& d, std::size_t cap = Report::kDefaultCap) {
  const auto& a = d.action();
  const auto& xm = d.xm();
  const auto& G = xm.G();
  const auto& H = xm.H();
  const Index ng = G.order();
  const Index nh = H.order();
  const Index no = d.objects();
  const Index nm = d.horizontal().morphisms();

  FiniteGroupoid obj = transformation_groupoid(
      no, ng, G.identity(), [&](Index k1, Index k2) { return G.mul(k1, k2); },
      [&](Index k, Index x) { return a.obj(k, x); });
  // G⋉H indexed γ·|H| + χ.
  FiniteGroupoid mor = transformation_groupoid(
      nm, ng * nh, G.identity() * nh + H.identity(),
      [&](Index k1, Index k2) {
        const Mor2G p = tensor(Mor2G{&xm, k1 / nh, k1 % nh}, Mor2G{&xm, k2 / nh, k2 % nh});
        return p.g * nh + p.eta;
      },
      [&](Index k, Index f) { return a.mor(k / nh, k % nh, f); });

  FiniteGroupoid vert{d.vertical_ref(), {}};
  vert.inverse.resize(d.vertical().morphisms());
  for (Index v = 0; v < d.vertical().morphisms(); ++v) vert.inverse[v] = d.vertical().inverse(v);

  // Squares as arrows f → (γ,χ)▷f, composed with compose_squares.
  std::vector<MorphismType> sq_types(d.squares());
  for (std::size_t k = 0; k < d.squares(); ++k) {
    const auto& b = d.boundary(d.square_at(k));
    sq_types[k] = {b.top, b.bottom};
  }
  std::vector<Index> sq_ids(nm);
  for (Index f = 0; f < nm; ++f) sq_ids[f] = static_cast<Index>(d.square_index(vertical_unit(d, f)));
  FiniteGroupoid cols{std::make_shared<const FiniteCategory>(FiniteCategory::build(
                          nm, std::move(sq_types), std::move(sq_ids),
                          [&](Index later, Index earlier) {
                            return static_cast<Index>(d.square_index(
                                compose_squares(d, d.square_at(earlier), d.square_at(later), Axis::Vertical)));
                          })),
                      {}};
  cols.inverse.resize(cols.morphisms());
  for (Index s = 0; s < cols.morphisms(); ++s) cols.inverse[s] = cols.cat->inverse(s);

  TransposeViews out{std::move(obj), std::move(mor), std::move(vert), std::move(cols), {}, {}, Report(cap)};
  for (const auto* g : {&out.vertical, &out.square_columns, &out.objects, &out.morphisms}) {
    out.report.merge(validate_category(*g->cat, cap));
    for (Index f = 0; f < g->morphisms(); ++f) out.report.expect(g->inverse[f] != kNone, "groupoid.inverse", {f});
  }
  if (!out.report.ok()) return out;

  out.vertical_to_objects.objects.resize(no);
  std::iota(out.vertical_to_objects.objects.begin(), out.vertical_to_objects.objects.end(), Index{0});
  out.vertical_to_objects.morphisms.resize(d.vertical().morphisms());
  for (Index v = 0; v < d.vertical().morphisms(); ++v) {
    const auto [gamma, x] = d.vertical_label(v);
    out.vertical_to_objects.morphisms[v] = gamma * no + x;
  }
  out.columns_to_morphisms.objects.resize(nm);
  std::iota(out.columns_to_morphisms.objects.begin(), out.columns_to_morphisms.objects.end(), Index{0});
  out.columns_to_morphisms.morphisms.resize(d.squares());
  for (std::size_t k = 0; k < d.squares(); ++k) {
    const TDSquare s = d.square_at(k);
    out.columns_to_morphisms.morphisms[k] = (s.gamma * nh + s.chi) * nm + s.f;
  }
  out.report.merge(check_isomorphism(out.vertical, out.objects, out.vertical_to_objects, cap));
  out.report.merge(check_isomorphism(out.square_columns, out.morphisms, out.columns_to_morphisms, cap));
  return out;
}

// ---------------------------------------------------------------------------
// Nested inclusions C⁽⁰⁾⫽G ⊂ C⁽¹⁾⫽G ⊂ C⁽¹⁾⫽(G⋉H)

struct NestedInclusions {
  Functor first;   // x ↦ id_x, (γ, x) ↦ (γ, id_x)
  Functor second;  // f ↦ f, (γ, f) ↦ ((γ,1), f)
  bool first_full = false;
  bool second_full = false;
  /// Morphisms of C⁽¹⁾⫽(G⋉H) between objects in the image of the second
  /// inclusion that are not themselves in the image, as (γ, χ, f).
  std::vector<TDSquare> second_gaps;
  Report report;
};

namespace detail {

/// Fullness of F: for every pair of image objects, every target morphism
/// between them is an image morphism. Returns the target morphisms missed.
inline std::vector<Index> fullness_gaps(const Functor& F) {
  const auto& T = *F.target;
  std::vector<bool> obj_hit(T.objects(), false), mor_hit(T.morphisms(), false);
  for (Index y : F.obj) obj_hit[y] = true;
  for (Index m : F.mor) mor_hit[m] = true;
  std::vector<Index> gaps;
  for (Index m = 0; m < T.morphisms(); ++m)
    if (obj_hit[T.src(m)] && obj_hit[T.tgt(m)] && !mor_hit[m]) gaps.push_back(m);
  return gaps;
}

inline bool injective(const std::vector<Index>& map, Index n) {
  std::vector<bool> hit(n, false);
  for (Index v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace detail

inline NestedInclusions nested_inclusions(const TransDoubleCat& d, std::size_t cap = Report::kDefaultCap) {
  const auto& a = d.action();
  const auto& G = d.xm().G();
  const auto& H = d.xm().H();
  const auto& C = d.horizontal();
  const Index ng = G.order();
  const Index nh = H.order();
  const Index no = C.objects();
  const Index nm = C.morphisms();

  auto obj_gpd = transformation_groupoid(
      no, ng, G.identity(), [&](Index k1, Index k2) { return G.mul(k1, k2); },
      [&](Index k, Index x) { return a.obj(k, x); });
  auto mid_gpd = transformation_groupoid(
      nm, ng, G.identity(), [&](Index k1, Index k2) { return G.mul(k1, k2); },
      [&](Index k, Index f) { return a.mor(k, f); });
  auto top_gpd = transformation_groupoid(
      nm, ng * nh, G.identity() * nh + H.identity(),
      [&](Index k1, Index k2) {
        const Mor2G p = tensor(Mor2G{&d.xm(), k1 / nh, k1 % nh}, Mor2G{&d.xm(), k2 / nh, k2 % nh});
        return p.g * nh + p.eta;
      },
      [&](Index k, Index f) { return a.mor(k / nh, k % nh, f); });

  NestedInclusions out{{obj_gpd.cat, mid_gpd.cat, std::vector<Index>(no), std::vector<Index>(obj_gpd.morphisms())},
                       {mid_gpd.cat, top_gpd.cat, std::vector<Index>(nm), std::vector<Index>(mid_gpd.morphisms())},
                       false,
                       false,
                       {},
                       Report(cap)};
  for (Index x = 0; x < no; ++x) out.first.obj[x] = C.id(x);
  for (Index g = 0; g < ng; ++g)
    for (Index x = 0; x < no; ++x) out.first.mor[g * no + x] = g * nm + C.id(x);
  for (Index f = 0; f < nm; ++f) out.second.obj[f] = f;
  for (Index g = 0; g < ng; ++g)
    for (Index f = 0; f < nm; ++f) out.second.mor[g * nm + f] = (g * nh + H.identity()) * nm + f;

  for (const auto* F : {&out.first, &out.second}) {
    const std::string which = F == &out.first ? "inclusion.first" : "inclusion.second";
    const Report fr = validate_functor(*F, cap);
    out.report.expect(fr.ok(), which + ".functor", {});
    out.report.expect(detail::injective(F->obj, F->target->objects()), which + ".injective_objects", {});
    out.report.expect(detail::injective(F->mor, F->target->morphisms()), which + ".injective_morphisms", {});
  }
  const auto first_gaps = detail::fullness_gaps(out.first);
  out.first_full = first_gaps.empty();
  out.report.expect(out.first_full, "inclusion.first.full",
                    first_gaps.empty() ? std::vector<long long>{} : std::vector<long long>{first_gaps.front()});
  for (Index m : detail::fullness_gaps(out.second)) {
    const Index k = m / nm;
    out.second_gaps.push_back({k / nh, k % nh, m % nm});
  }
  out.second_full = out.second_gaps.empty();
  return out;
}

// ---------------------------------------------------------------------------
// 2-category slices

/// A 2-cell of either slice. Horizontal slice: source and target are
/// C-morphisms. Vertical slice: source and target are vertical-category
/// indices (γ, x) and (∂(χ)γ, x).
struct TwoCell {
  Index source = 0;
  Index chi = 0;
  Index target = 0;

  bool operator==(const TwoCell&) const = default;
  auto operator<=>(const TwoCell&) const = default;
};

struct TwoCellTable {
  std::vector<TwoCell> cells;  // sorted
  Report report;
};

/// 2-cells f ⇒ f' are χ ∈ ker ∂ with f' = f ∘ Φ_(e,χ)(x) for f : x → y.
/// Cross-checked against the squares with identity vertical edges, and the
/// vertical composite of two 2-cells is checked to be the product in ker ∂.
inline TwoCellTable horizontal_2category(const TransDoubleCat& d, std::size_t cap = Report::kDefaultCap) {
  const auto& a = d.action();
  const auto& xm = d.xm();
  const auto& C = d.horizontal();
  const Index e = xm.G().identity();
  const auto ker = xm.kernel();
  TwoCellTable t{{}, Report(cap)};
  for (Index f = 0; f < C.morphisms(); ++f)
    for (Index chi : ker) t.cells.push_back({f, chi, C.compose(f, nat_component(a, e, chi, C.src(f)))});
  std::sort(t.cells.begin(), t.cells.end());

  std::vector<TwoCell> brute;
  for (std::size_t k = 0; k < d.squares(); ++k) {
    const TDSquare s = d.square_at(k);
    const auto& b = d.boundary(s);
    const auto [lg, lx] = d.vertical_label(b.left);
    const auto [rg, ry] = d.vertical_label(b.right);
    if (lg == e && rg == e) brute.push_back({s.f, s.chi, b.bottom});
  }
  std::sort(brute.begin(), brute.end());
  t.report.expect(brute == t.cells, "h2cat.brute_force", {static_cast<long long>(t.cells.size()),
                                                          static_cast<long long>(brute.size())});
  for (const auto& c1 : t.cells)
    for (Index chi2 : ker) {
      const TDSquare v = compose_squares(d, {e, c1.chi, c1.source}, {e, chi2, c1.target}, Axis::Vertical);
      t.report.expect(v.gamma == e && v.chi == xm.H().mul(chi2, c1.chi), "h2cat.composition",
                      {c1.source, c1.chi, chi2});
    }
  return t;
}

/// 2-cells (γ, x) ⇒ (∂(χ)γ, x) are χ with Φ_(γ,χ)(x) the identity of γ▷x.
/// Cross-checked against squares ⟨(γ,χ), id_x⟩ whose bottom edge is an
/// identity.
inline TwoCellTable vertical_2category(const TransDoubleCat& d, std::size_t cap = Report::kDefaultCap) {
  const auto& a = d.action();
  const auto& xm = d.xm();
  const auto& G = xm.G();
  const auto& C = d.horizontal();
  TwoCellTable t{{}, Report(cap)};
  for (Index g = 0; g < G.order(); ++g)
    for (Index x = 0; x < C.objects(); ++x)
      for (Index chi = 0; chi < xm.H().order(); ++chi)
        if (nat_component(a, g, chi, x) == C.id(a.obj(g, x)))
          t.cells.push_back({d.vertical_index(g, x), chi, d.vertical_index(G.mul(xm.d(chi), g), x)});
  std::sort(t.cells.begin(), t.cells.end());

  std::vector<TwoCell> brute;
  for (std::size_t k = 0; k < d.squares(); ++k) {
    const TDSquare s = d.square_at(k);
    const auto& b = d.boundary(s);
    if (C.is_identity(s.f) && C.is_identity(b.bottom)) brute.push_back({b.left, s.chi, b.right});
  }
  std::sort(brute.begin(), brute.end());
  t.report.expect(brute == t.cells, "v2cat.brute_force", {static_cast<long long>(t.cells.size()),
                                                          static_cast<long long>(brute.size())});
  return t;
}

/// For the adjoint action the vertical 2-cells from (γ, g) are the χ with
/// (γgγ⁻¹) ▷ χ⁻¹ = χ⁻¹. Returns them in the layout of vertical_2category.
inline std::vector<TwoCell> adjoint_vertical_fixed_points(const TransDoubleCat& d) {
  const auto& xm = d.xm();
  const auto& G = xm.G();
  const auto& H = xm.H();
  std::vector<TwoCell> cells;
  for (Index g = 0; g < G.order(); ++g)
    for (Index x = 0; x < G.order(); ++x)
      for (Index chi = 0; chi < H.order(); ++chi)
        if (xm.act(G.conj(g, x), H.inv(chi)) == H.inv(chi))
          cells.push_back({d.vertical_index(g, x), chi, d.vertical_index(G.mul(xm.d(chi), g), x)});
  std::sort(cells.begin(), cells.end());
  return cells;
}

// ---------------------------------------------------------------------------
// Law verification

/// Double-category laws of C⫽G:
///   dc.boundary_h      composite of horizontally adjacent squares has the
///                      composite bottom edge and the outer vertical edges
///   dc.boundary_v      composite of vertically adjacent squares has the
///                      composite vertical edges and the lower bottom edge
///   dc.assoc_h, dc.assoc_v, dc.unit_h, dc.unit_v
///   dc.interchange     2×2 blocks; also fails when only one evaluation
///                      order is defined
///   dc.six_expressions the six composites of a vertical pair agree
///   dc.crossmod_target ∂(χ′)γ′∂(χ)γ = ∂(χ′(γ′▷χ))γ′γ
/// Works on unchecked builds, so a broken action shows up as failures.
inline Report verify_double_category(const TransDoubleCat& d, const VerifyOptions& opt = {}) {
  const auto& a = d.action();
  const auto& xm = d.xm();
  const auto& G = xm.G();
  const auto& H = xm.H();
  const auto& C = d.horizontal();
  const auto& V = d.vertical();
  const std::uint64_t ng = G.order();
  const std::uint64_t nh = H.order();
  const std::uint64_t nsq = d.squares();
  Report out(opt.cap);

  auto w_of = [](std::initializer_list<TDSquare> ss) {
    std::vector<long long> w;
    for (const auto& s : ss) w.insert(w.end(), {s.gamma, s.chi, s.f});
    return w;
  };

  // Right neighbours of s: (χ₂, g) with g leaving tgt(f). Lower neighbours:
  // (γ₁, χ₁). Both enumerated by a dense counter.
  std::uint64_t max_out = 0;
  for (Index x = 0; x < C.objects(); ++x) max_out = std::max<std::uint64_t>(max_out, C.out_of(x).size());
  auto right_of = [&](const TDSquare& s, std::uint64_t k) -> std::optional<TDSquare> {
    const auto& outs = C.out_of(C.tgt(s.f));
    const std::uint64_t j = k / nh;
    if (j >= outs.size()) return std::nullopt;
    return TDSquare{G.mul(xm.d(s.chi), s.gamma), static_cast<Index>(k % nh), outs[j]};
  };
  auto below_of = [&](const TDSquare& s, std::uint64_t k) {
    return TDSquare{static_cast<Index>(k / nh), static_cast<Index>(k % nh), d.boundary(s).bottom};
  };
  const std::uint64_t n_right = nh * max_out;
  const std::uint64_t n_below = ng * nh;

  // Boundaries and units over pairs.
  {
    const std::uint64_t n = nsq * std::max(n_right, n_below);
    const bool all = opt.exhaustive_for(n);
    out.merge(parallel_check(all ? n : opt.samples, opt.cap, [&](std::uint64_t b, std::uint64_t e, Report& r) {
      const std::uint64_t span = std::max(n_right, n_below);
      for (std::uint64_t k = b; k < e; ++k) {
        std::uint64_t i0, i1;
        if (all) {
          i0 = k / span;
          i1 = k % span;
        } else {
          SampleRng rng(opt.seed ^ 0x11, k);
          i0 = rng.below(nsq);
          i1 = rng.below(span);
        }
        const TDSquare s = d.square_at(i0);
        const auto& bs = d.boundary(s);
        if (i1 < n_right) {
          if (auto t = right_of(s, i1)) {
            const auto& bt = d.boundary(*t);
            const TDSquare h = *detail::try_compose_h(d, s, *t);
            const auto& bh = d.boundary(h);
            r.expect(bh.left == bs.left && bh.right == bt.right && bh.top == C.compose(t->f, s.f) &&
                         bh.bottom == C.compose(bt.bottom, bs.bottom),
                     "dc.boundary_h", w_of({s, *t}));
          }
        }
        if (i1 < n_below) {
          const TDSquare l = below_of(s, i1);
          const auto& bl = d.boundary(l);
          const TDSquare v = *detail::try_compose_v(d, s, l);
          const auto& bv = d.boundary(v);
          r.expect(bv.top == bs.top && bv.bottom == bl.bottom && bv.left == V.compose(bl.left, bs.left) &&
                       bv.right == V.compose(bl.right, bs.right),
                   "dc.boundary_v", w_of({s, l}));
        }
        if (i1 == 0) {
          const auto [lg, lx] = d.vertical_label(bs.left);
          const auto [rg, ry] = d.vertical_label(bs.right);
          const auto hl = detail::try_compose_h(d, horizontal_unit(d, lg, lx), s);
          const auto hr = detail::try_compose_h(d, s, horizontal_unit(d, rg, ry));
          r.expect(hl && hr && *hl == s && *hr == s, "dc.unit_h", w_of({s}));
          const auto vu = detail::try_compose_v(d, vertical_unit(d, s.f), s);
          const auto vl = detail::try_compose_v(d, s, vertical_unit(d, bs.bottom));
          r.expect(vu && vl && *vu == s && *vl == s, "dc.unit_v", w_of({s}));
        }
      }
    }));
  }

  // Associativity over triples in each axis.
  {
    const std::uint64_t span = std::max(n_right * n_right, n_below * n_below);
    const std::uint64_t n = nsq * span;
    const bool all = opt.exhaustive_for(n);
    out.merge(parallel_check(all ? n : opt.samples, opt.cap, [&](std::uint64_t b, std::uint64_t e, Report& r) {
      for (std::uint64_t k = b; k < e; ++k) {
        std::uint64_t i0, i1;
        if (all) {
          i0 = k / span;
          i1 = k % span;
        } else {
          SampleRng rng(opt.seed ^ 0x22, k);
          i0 = rng.below(nsq);
          i1 = rng.below(span);
        }
        const TDSquare s = d.square_at(i0);
        if (i1 < n_right * n_right) {
          auto t = right_of(s, i1 / n_right);
          auto u = t ? right_of(*t, i1 % n_right) : std::nullopt;
          if (t && u) {
            const auto l = detail::try_compose_h(d, *detail::try_compose_h(d, s, *t), *u);
            const auto rr = detail::try_compose_h(d, s, *detail::try_compose_h(d, *t, *u));
            r.expect(l && rr && *l == *rr, "dc.assoc_h", w_of({s, *t, *u}));
          }
        }
        if (i1 < n_below * n_below) {
          const TDSquare t = below_of(s, i1 / n_below);
          const TDSquare u = below_of(t, i1 % n_below);
          const auto st = detail::try_compose_v(d, s, t);
          const auto tu = detail::try_compose_v(d, t, u);
          const auto l = st ? detail::try_compose_v(d, *st, u) : std::nullopt;
          const auto rr = tu ? detail::try_compose_v(d, s, *tu) : std::nullopt;
          r.expect(l && rr && *l == *rr, "dc.assoc_v", w_of({s, t, u}));
        }
      }
    }));
  }

  // Interchange on 2×2 blocks  A B / C D.
  {
    const std::uint64_t span = n_right * n_below * nh;
    const std::uint64_t n = nsq * span;
    const bool all = opt.exhaustive_for(n);
    out.merge(parallel_check(all ? n : opt.samples, opt.cap, [&](std::uint64_t b, std::uint64_t e, Report& r) {
      for (std::uint64_t k = b; k < e; ++k) {
        std::uint64_t ia, ib, ic, id;
        if (all) {
          std::uint64_t t = k;
          id = t % nh;
          t /= nh;
          ic = t % n_below;
          t /= n_below;
          ib = t % n_right;
          ia = t / n_right;
        } else {
          SampleRng rng(opt.seed ^ 0x33, k);
          ia = rng.below(nsq);
          ib = rng.below(n_right);
          ic = rng.below(n_below);
          id = rng.below(nh);
        }
        const TDSquare A = d.square_at(ia);
        const auto B = right_of(A, ib);
        if (!B) continue;
        const TDSquare Cq = below_of(A, ic);
        // D sits right of C and below B.
        const TDSquare D{G.mul(xm.d(Cq.chi), Cq.gamma), static_cast<Index>(id), d.boundary(*B).bottom};
        if (C.src(D.f) != C.tgt(Cq.f)) {
          // Only possible when the action is not functorial on objects.
          r.expect(false, "dc.interchange", w_of({A, *B, Cq, D}), "bottom edges of the upper row do not meet");
          continue;
        }
        const auto top = detail::try_compose_h(d, A, *B);
        const auto bot = detail::try_compose_h(d, Cq, D);
        const auto rows = top && bot ? detail::try_compose_v(d, *top, *bot) : std::nullopt;
        const auto left = detail::try_compose_v(d, A, Cq);
        const auto right = detail::try_compose_v(d, *B, D);
        const auto cols = left && right ? detail::try_compose_h(d, *left, *right) : std::nullopt;
        r.expect(rows && cols && *rows == *cols, "dc.interchange", w_of({A, *B, Cq, D}),
                 !rows ? "rows-first evaluation undefined" : !cols ? "columns-first evaluation undefined" : "");
      }
    }));
  }

  // Six composites for every vertical pair ⟨(γ,χ), f⟩ over ⟨(γ′,χ′), (γ,χ)▷f⟩.
  {
    const std::uint64_t n = nsq * n_below;
    const bool all = opt.exhaustive_for(n);
    out.merge(parallel_check(all ? n : opt.samples, opt.cap, [&](std::uint64_t b, std::uint64_t e, Report& r) {
      for (std::uint64_t k = b; k < e; ++k) {
        std::uint64_t i0, i1;
        if (all) {
          i0 = k / n_below;
          i1 = k % n_below;
        } else {
          SampleRng rng(opt.seed ^ 0x44, k);
          i0 = rng.below(nsq);
          i1 = rng.below(n_below);
        }
        const TDSquare up = d.square_at(i0);
        const Index g = up.gamma, c = up.chi, f = up.f;
        const Index g2 = static_cast<Index>(i1 / nh), c2 = static_cast<Index>(i1 % nh);
        const Index x = C.src(f), y = C.tgt(f);
        const Index dl = G.mul(xm.d(c), g);    // δ
        const Index dl2 = G.mul(xm.d(c2), g2);  // δ′
        auto act = [&](Index gam, Index m) { return a.mor(gam, m); };
        auto Phi = [&](Index z) { return nat_component(a, g, c, z); };
        auto Phi2 = [&](Index z) { return nat_component(a, g2, c2, z); };
        auto cmp = [&](Index h2, Index h1) { return h1 == kNone || h2 == kNone ? kNone : C.compose(h2, h1); };
        const Index expect = a.mor(G.mul(g2, g), H.mul(c2, xm.act(g2, c)), f);
        const Index ex[6] = {
            cmp(cmp(Phi2(a.obj(dl, y)), act(g2, Phi(y))), act(G.mul(g2, g), f)),
            cmp(cmp(act(dl2, Phi(y)), Phi2(a.obj(g, y))), act(G.mul(g2, g), f)),
            cmp(cmp(Phi2(a.obj(dl, y)), act(G.mul(g2, dl), f)), act(g2, Phi(x))),
            cmp(cmp(act(G.mul(dl2, dl), f), Phi2(a.obj(dl, x))), act(g2, Phi(x))),
            cmp(cmp(act(dl2, Phi(y)), act(G.mul(dl2, g), f)), Phi2(a.obj(g, x))),
            cmp(cmp(act(G.mul(dl2, dl), f), act(dl2, Phi(x))), Phi2(a.obj(g, x))),
        };
        bool same = true;
        for (Index v : ex) same = same && v == expect;
        r.expect(same, "dc.six_expressions", {g2, c2, g, c, f});
      }
    }));
  }

  for (Index g = 0; g < ng; ++g)
    for (Index g2 = 0; g2 < ng; ++g2)
      for (Index c = 0; c < nh; ++c)
        for (Index c2 = 0; c2 < nh; ++c2) {
          const Index lhs = G.mul(G.mul(xm.d(c2), g2), G.mul(xm.d(c), g));
          const Index rhs = G.mul(xm.d(H.mul(c2, xm.act(g2, c))), G.mul(g2, g));
          out.expect(lhs == rhs, "dc.crossmod_target", {g, g2, c, c2});
        }
  return out;
}

}  // namespace xmodcat
