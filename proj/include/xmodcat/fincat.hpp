#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "report.hpp"

namespace xmodcat {

struct MorphismType {
  Index src = 0;
  Index tgt = 0;

  bool operator==(const MorphismType&) const = default;
};

/// A finite category given by explicit tables. Morphisms carry global
/// indices; composition is a partial table holding exactly one entry per
/// composable pair (g, f), tgt(f) = src(g).
class FiniteCategory {
 public:
  FiniteCategory() = default;

  /// Builds the tables from a composition rule. `compose(g, f)` is called for
  /// every composable pair. No law is checked here; see validate_category.
  template <class Compose>
  static FiniteCategory build(Index objects, std::vector<MorphismType> morphisms, std::vector<Index> identity,
                              Compose&& compose) {
    FiniteCategory c;
    c.init_shape(objects, std::move(morphisms), std::move(identity));
    for (Index g = 0; g < c.morphisms(); ++g) {
      const auto& preds = c.in_[c.mor_[g].src];
      for (std::size_t k = 0; k < preds.size(); ++k) c.comp_[c.offset_[g] + k] = compose(g, preds[k]);
    }
    return c;
  }

  Index objects() const noexcept { return n_obj_; }
  Index morphisms() const noexcept { return static_cast<Index>(mor_.size()); }
  Index src(Index f) const noexcept { return mor_[f].src; }
  Index tgt(Index f) const noexcept { return mor_[f].tgt; }
  Index id(Index x) const noexcept { return id_[x]; }
  const std::vector<MorphismType>& morphism_types() const noexcept { return mor_; }
  const std::vector<Index>& identities() const noexcept { return id_; }

  /// Morphisms with target / source x, ascending.
  const std::vector<Index>& into(Index x) const noexcept { return in_[x]; }
  const std::vector<Index>& out_of(Index x) const noexcept { return out_[x]; }

  /// g ∘ f, or kNone when tgt(f) ≠ src(g).
  Index compose(Index g, Index f) const noexcept {
    if (mor_[f].tgt != mor_[g].src) return kNone;
    return comp_[offset_[g] + pos_in_[f]];
  }

  bool composable(Index g, Index f) const noexcept { return mor_[f].tgt == mor_[g].src; }

  bool is_identity(Index f) const noexcept { return mor_[f].src == mor_[f].tgt && id_[mor_[f].src] == f; }

  /// Two-sided inverse of f, or kNone.
  Index inverse(Index f) const noexcept {
    for (Index g : in_[mor_[f].src]) {
      if (mor_[g].src != mor_[f].tgt) continue;
      if (compose(g, f) == id_[mor_[f].src] && compose(f, g) == id_[mor_[f].tgt]) return g;
    }
    return kNone;
  }

  /// All (g, f, g∘f) triples, ordered by g then f.
  std::vector<std::array<Index, 3>> composition_triples() const {
    std::vector<std::array<Index, 3>> t;
    t.reserve(comp_.size());
    for (Index g = 0; g < morphisms(); ++g)
      for (Index f : in_[mor_[g].src]) t.push_back({g, f, compose(g, f)});
    return t;
  }

  std::size_t composable_pairs() const noexcept { return comp_.size(); }

  bool operator==(const FiniteCategory& o) const {
    return n_obj_ == o.n_obj_ && mor_ == o.mor_ && id_ == o.id_ && comp_ == o.comp_;
  }

  /// Overwrites one composition entry. Test hook for mutation suites.
  void corrupt_composition(Index g, Index f, Index result) { comp_[offset_[g] + pos_in_[f]] = result; }

 private:
  friend FiniteCategory category_from_tables(Index, std::vector<MorphismType>, std::vector<Index>,
                                             const std::vector<std::array<Index, 3>>&);

  void init_shape(Index objects, std::vector<MorphismType> morphisms, std::vector<Index> identity) {
    n_obj_ = objects;
    mor_ = std::move(morphisms);
    id_ = std::move(identity);
    if (id_.size() != n_obj_)
      throw Error(ErrorKind::MalformedTable, "identity list has " + std::to_string(id_.size()) + " entries for " +
                                                 std::to_string(n_obj_) + " objects");
    for (Index f = 0; f < mor_.size(); ++f)
      if (mor_[f].src >= n_obj_ || mor_[f].tgt >= n_obj_)
        throw Error(ErrorKind::MalformedTable, "morphism " + std::to_string(f) + " has an endpoint out of range", {f});
    for (Index x = 0; x < n_obj_; ++x)
      if (id_[x] >= mor_.size()) throw Error(ErrorKind::MalformedTable, "identity of object out of range", {x});
    in_.assign(n_obj_, {});
    out_.assign(n_obj_, {});
    pos_in_.assign(mor_.size(), 0);
    for (Index f = 0; f < mor_.size(); ++f) {
      pos_in_[f] = static_cast<Index>(in_[mor_[f].tgt].size());
      in_[mor_[f].tgt].push_back(f);
      out_[mor_[f].src].push_back(f);
    }
    offset_.assign(mor_.size(), 0);
    std::size_t total = 0;
    for (Index g = 0; g < mor_.size(); ++g) {
      offset_[g] = total;
      total += in_[mor_[g].src].size();
    }
    comp_.assign(total, kNone);
  }

  Index n_obj_ = 0;
  std::vector<MorphismType> mor_;
  std::vector<Index> id_;
  std::vector<std::vector<Index>> in_;
  std::vector<std::vector<Index>> out_;
  std::vector<Index> pos_in_;
  std::vector<std::size_t> offset_;
  std::vector<Index> comp_;
};

/// Category laws: identity typing, composition typing, unit laws and
/// associativity over every composable triple.
inline Report validate_category(const FiniteCategory& c, std::size_t cap = Report::kDefaultCap) {
  Report r(cap);
  for (Index x = 0; x < c.objects(); ++x) {
    const Index i = c.id(x);
    r.expect(c.src(i) == x && c.tgt(i) == x, "category.identity_typing", {x});
  }
  if (!r.ok()) return r;
  for (Index g = 0; g < c.morphisms(); ++g)
    for (Index f : c.into(c.src(g))) {
      const Index h = c.compose(g, f);
      r.expect(h != kNone && h < c.morphisms() && c.src(h) == c.src(f) && c.tgt(h) == c.tgt(g),
               "category.composition_typing", {g, f});
    }
  if (!r.ok()) return r;
  for (Index f = 0; f < c.morphisms(); ++f) {
    r.expect(c.compose(c.id(c.tgt(f)), f) == f, "category.left_identity", {f});
    r.expect(c.compose(f, c.id(c.src(f))) == f, "category.right_identity", {f});
  }
  for (Index h = 0; h < c.morphisms(); ++h)
    for (Index g : c.into(c.src(h)))
      for (Index f : c.into(c.src(g)))
        r.expect(c.compose(c.compose(h, g), f) == c.compose(h, c.compose(g, f)), "category.associativity",
                 {h, g, f});
  return r;
}

inline ErrorKind error_kind_for_category_law(const std::string& law) {
  if (law == "category.associativity") return ErrorKind::NonAssociative;
  if (law == "category.left_identity" || law == "category.right_identity") return ErrorKind::IdentityLawViolation;
  return ErrorKind::TypeMismatch;
}

/// Builds and validates a category from explicit tables. `comp` lists
/// (g, f, g∘f) triples. Throws TypeMismatch (a triple with tgt(f) ≠ src(g),
/// or a badly typed result), MalformedTable (missing or duplicate entries),
/// IdentityLawViolation or NonAssociative.
inline FiniteCategory category_from_tables(Index objects, std::vector<MorphismType> morphisms,
                                           std::vector<Index> identity,
                                           const std::vector<std::array<Index, 3>>& comp) {
  FiniteCategory c;
  c.init_shape(objects, std::move(morphisms), std::move(identity));
  for (const auto& [g, f, h] : comp) {
    if (g >= c.morphisms() || f >= c.morphisms() || h >= c.morphisms())
      throw Error(ErrorKind::MalformedTable, "composition entry out of range", {g, f, h});
    if (!c.composable(g, f))
      throw Error(ErrorKind::TypeMismatch,
                  "composition given for " + std::to_string(g) + " o " + std::to_string(f) +
                      " but tgt(f) != src(g)",
                  {g, f});
    Index& slot = c.comp_[c.offset_[g] + c.pos_in_[f]];
    if (slot != kNone) throw Error(ErrorKind::MalformedTable, "duplicate composition entry", {g, f});
    slot = h;
  }
  for (Index g = 0; g < c.morphisms(); ++g)
    for (Index f : c.into(c.src(g)))
      if (c.compose(g, f) == kNone) throw Error(ErrorKind::MalformedTable, "composition missing for a composable pair", {g, f});
  if (auto r = validate_category(c, 1); !r.ok()) {
    const auto& v = r.violations()[0];
    throw Error(error_kind_for_category_law(v.law), v.law + " fails", v.witness);
  }
  return c;
}

/// The category with one object and one morphism.
inline FiniteCategory terminal_category() {
  return category_from_tables(1, {{0, 0}}, {0}, {{0, 0, 0}});
}

// ---------------------------------------------------------------------------
// Functors and natural transformations

using CategoryRef = std::shared_ptr<const FiniteCategory>;

struct Functor {
  CategoryRef source;
  CategoryRef target;
  std::vector<Index> obj;
  std::vector<Index> mor;

  bool operator==(const Functor& o) const { return obj == o.obj && mor == o.mor; }
};

inline Functor identity_functor(const CategoryRef& c) {
  Functor f{c, c, std::vector<Index>(c->objects()), std::vector<Index>(c->morphisms())};
  for (Index x = 0; x < c->objects(); ++x) f.obj[x] = x;
  for (Index m = 0; m < c->morphisms(); ++m) f.mor[m] = m;
  return f;
}

inline Report validate_functor(const Functor& F, std::size_t cap = Report::kDefaultCap) {
  Report r(cap);
  const auto& S = *F.source;
  const auto& T = *F.target;
  r.checked("functor.shape");
  if (F.obj.size() != S.objects() || F.mor.size() != S.morphisms()) {
    r.add("functor.shape", {}, "map sizes differ from the source category");
    return r;
  }
  for (Index x = 0; x < S.objects(); ++x)
    if (F.obj[x] >= T.objects()) r.add("functor.shape", {x}, "object image out of range");
  for (Index f = 0; f < S.morphisms(); ++f)
    if (F.mor[f] >= T.morphisms()) r.add("functor.shape", {f}, "morphism image out of range");
  if (!r.ok()) return r;

  for (Index f = 0; f < S.morphisms(); ++f)
    r.expect(T.src(F.mor[f]) == F.obj[S.src(f)] && T.tgt(F.mor[f]) == F.obj[S.tgt(f)], "functor.typing", {f});
  for (Index x = 0; x < S.objects(); ++x) r.expect(F.mor[S.id(x)] == T.id(F.obj[x]), "functor.identity", {x});
  if (!r.ok()) return r;
  for (Index g = 0; g < S.morphisms(); ++g)
    for (Index f : S.into(S.src(g)))
      r.expect(F.mor[S.compose(g, f)] == T.compose(F.mor[g], F.mor[f]), "functor.composition", {g, f});
  return r;
}

/// g ∘ f. Throws NotComposable unless target(f) and source(g) are the same
/// category.
inline Functor functor_compose(const Functor& g, const Functor& f) {
  if (f.target != g.source && !(f.target && g.source && *f.target == *g.source))
    throw Error(ErrorKind::NotComposable, "target of the first functor is not the source of the second");
  Functor h{f.source, g.target, std::vector<Index>(f.obj.size()), std::vector<Index>(f.mor.size())};
  for (std::size_t x = 0; x < f.obj.size(); ++x) h.obj[x] = g.obj[f.obj[x]];
  for (std::size_t m = 0; m < f.mor.size(); ++m) h.mor[m] = g.mor[f.mor[m]];
  return h;
}

/// α : source ⇒ target, one component per object of the common source.
struct NatTrans {
  Functor source;
  Functor target;
  std::vector<Index> components;
};

inline Report validate_nat_trans(const NatTrans& a, std::size_t cap = Report::kDefaultCap) {
  Report r(cap);
  const auto& S = *a.source.source;
  const auto& T = *a.source.target;
  r.checked("nat.shape");
  if (a.components.size() != S.objects()) {
    r.add("nat.shape", {}, "one component per object required");
    return r;
  }
  for (Index x = 0; x < S.objects(); ++x) {
    const Index c = a.components[x];
    r.expect(c < T.morphisms() && T.src(c) == a.source.obj[x] && T.tgt(c) == a.target.obj[x], "nat.typing", {x});
  }
  if (!r.ok()) return r;
  for (Index f = 0; f < S.morphisms(); ++f) {
    const Index lhs = T.compose(a.target.mor[f], a.components[S.src(f)]);
    const Index rhs = T.compose(a.components[S.tgt(f)], a.source.mor[f]);
    r.expect(lhs != kNone && lhs == rhs, "nat.naturality", {f});
  }
  return r;
}

inline NatTrans identity_nat_trans(const Functor& F) {
  NatTrans a{F, F, std::vector<Index>(F.obj.size())};
  for (std::size_t x = 0; x < F.obj.size(); ++x) a.components[x] = F.target->id(F.obj[x]);
  return a;
}

/// K·α : K∘F ⇒ K∘G, components K(α_x).
inline NatTrans whisker_left(const Functor& K, const NatTrans& a) {
  NatTrans out{functor_compose(K, a.source), functor_compose(K, a.target), {}};
  for (Index c : a.components) out.components.push_back(K.mor[c]);
  return out;
}

/// α·K : F∘K ⇒ G∘K, components α_{K(x)}.
inline NatTrans whisker_right(const NatTrans& a, const Functor& K) {
  NatTrans out{functor_compose(a.source, K), functor_compose(a.target, K), {}};
  for (Index x : K.obj) out.components.push_back(a.components[x]);
  return out;
}

}  // namespace xmodcat
