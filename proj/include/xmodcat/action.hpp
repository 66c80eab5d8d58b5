#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "catgroup.hpp"
#include "error.hpp"
#include "fincat.hpp"
#include "parallel.hpp"
#include "quintet.hpp"
#include "report.hpp"
#include "xmod.hpp"

namespace xmodcat {

/// A strict action of the 2-group of `xm` on the category `cat`, stored as
/// two lookup tables:
///   act_obj[γ·|Ob| + x]            = γ ▷ x
///   act_mor[(γ·|H| + χ)·|Mor| + f] = (γ, χ) ▷ f
struct StrictAction {
  std::shared_ptr<const CrossedModule> xm;
  CategoryRef cat;
  std::vector<Index> act_obj;
  std::vector<Index> act_mor;

  Index obj(Index gamma, Index x) const { return act_obj[static_cast<std::size_t>(gamma) * cat->objects() + x]; }
  Index mor(Index gamma, Index chi, Index f) const {
    return act_mor[(static_cast<std::size_t>(gamma) * xm->H().order() + chi) * cat->morphisms() + f];
  }
  Index& mor_entry(Index gamma, Index chi, Index f) {
    return act_mor[(static_cast<std::size_t>(gamma) * xm->H().order() + chi) * cat->morphisms() + f];
  }
  /// γ ▷ f, the functor Φ_γ on morphisms.
  Index mor(Index gamma, Index f) const { return mor(gamma, xm->H().identity(), f); }

  bool operator==(const StrictAction& o) const {
    return *xm == *o.xm && *cat == *o.cat && act_obj == o.act_obj && act_mor == o.act_mor;
  }
};

/// Builds the tables from callables obj(γ, x) and mor(γ, χ, f).
template <class ObjFn, class MorFn>
StrictAction tabulate_action(std::shared_ptr<const CrossedModule> xm, CategoryRef cat, ObjFn&& obj, MorFn&& mor) {
  StrictAction a{std::move(xm), std::move(cat), {}, {}};
  const Index ng = a.xm->G().order();
  const Index nh = a.xm->H().order();
  a.act_obj.resize(static_cast<std::size_t>(ng) * a.cat->objects());
  a.act_mor.resize(static_cast<std::size_t>(ng) * nh * a.cat->morphisms());
  for (Index g = 0; g < ng; ++g)
    for (Index x = 0; x < a.cat->objects(); ++x) a.act_obj[static_cast<std::size_t>(g) * a.cat->objects() + x] = obj(g, x);
  for (Index g = 0; g < ng; ++g)
    for (Index c = 0; c < nh; ++c)
      for (Index f = 0; f < a.cat->morphisms(); ++f) a.mor_entry(g, c, f) = mor(g, c, f);
  return a;
}

// ---------------------------------------------------------------------------
// The two presentations

/// Φ_γ as an endofunctor of C.
inline Functor phi_functor(const StrictAction& a, Index gamma) {
  Functor F{a.cat, a.cat, std::vector<Index>(a.cat->objects()), std::vector<Index>(a.cat->morphisms())};
  for (Index x = 0; x < a.cat->objects(); ++x) F.obj[x] = a.obj(gamma, x);
  for (Index f = 0; f < a.cat->morphisms(); ++f) F.mor[f] = a.mor(gamma, f);
  return F;
}

/// Φ_(γ,χ)(x) = (γ,χ) ▷ id_x, a morphism γ▷x → ∂(χ)γ▷x.
inline Index nat_component(const StrictAction& a, Index gamma, Index chi, Index x) {
  return a.mor(gamma, chi, a.cat->id(x));
}

/// Φ_(γ,χ) : Φ_γ ⇒ Φ_(∂(χ)γ).
inline NatTrans phi_nat(const StrictAction& a, Index gamma, Index chi) {
  const Index target = a.xm->G().mul(a.xm->d(chi), gamma);
  NatTrans n{phi_functor(a, gamma), phi_functor(a, target), std::vector<Index>(a.cat->objects())};
  for (Index x = 0; x < a.cat->objects(); ++x) n.components[x] = nat_component(a, gamma, chi, x);
  return n;
}

enum class ActionVariant { Object, MorphismByObject, MorphismByMorphism };

/// γ▷x, γ▷f or (γ,χ)▷f depending on `variant`; `chi` is ignored unless the
/// variant is MorphismByMorphism. Throws TypeMismatch for operands outside
/// the tables.
inline Index apply_action(const StrictAction& a, ActionVariant variant, Index gamma, Index chi, Index operand) {
  if (gamma >= a.xm->G().order()) throw Error(ErrorKind::TypeMismatch, "acting element is not in G", {gamma});
  switch (variant) {
    case ActionVariant::Object:
      if (operand >= a.cat->objects()) throw Error(ErrorKind::TypeMismatch, "operand is not an object", {operand});
      return a.obj(gamma, operand);
    case ActionVariant::MorphismByObject:
      if (operand >= a.cat->morphisms()) throw Error(ErrorKind::TypeMismatch, "operand is not a morphism", {operand});
      return a.mor(gamma, operand);
    case ActionVariant::MorphismByMorphism:
      if (chi >= a.xm->H().order()) throw Error(ErrorKind::TypeMismatch, "acting element is not in H", {chi});
      if (operand >= a.cat->morphisms()) throw Error(ErrorKind::TypeMismatch, "operand is not a morphism", {operand});
      return a.mor(gamma, chi, operand);
  }
  return kNone;
}

/// The two factorisations of (γ,χ)▷f for f: x → y:
///   (∂(χ)γ ▷ f) ∘ Φ_(γ,χ)(x)   and   Φ_(γ,χ)(y) ∘ (γ ▷ f).
/// Either entry is kNone when the composite is undefined.
inline std::pair<Index, Index> two_sided_composites(const StrictAction& a, Index gamma, Index chi, Index f) {
  const auto& C = *a.cat;
  const Index moved = a.xm->G().mul(a.xm->d(chi), gamma);
  return {C.compose(a.mor(moved, f), nat_component(a, gamma, chi, C.src(f))),
          C.compose(nat_component(a, gamma, chi, C.tgt(f)), a.mor(gamma, f))};
}

// ---------------------------------------------------------------------------
// Validation

namespace detail {

inline void check_action_shape(const StrictAction& a) {
  if (!a.xm || !a.cat) throw Error(ErrorKind::ComponentInvalid, "action lacks a crossed module or a category");
  if (!validate_crossed_module(*a.xm, 1).ok()) throw Error(ErrorKind::ComponentInvalid, "crossed module is invalid");
  if (!validate_category(*a.cat, 1).ok()) throw Error(ErrorKind::ComponentInvalid, "category is invalid");
  const std::size_t ng = a.xm->G().order();
  const std::size_t nh = a.xm->H().order();
  if (a.act_obj.size() != ng * a.cat->objects() || a.act_mor.size() != ng * nh * a.cat->morphisms())
    throw Error(ErrorKind::ComponentInvalid, "action tables have the wrong size");
  for (std::size_t i = 0; i < a.act_obj.size(); ++i)
    if (a.act_obj[i] >= a.cat->objects())
      throw Error(ErrorKind::ComponentInvalid, "object table entry out of range", {static_cast<long long>(i)});
  for (std::size_t i = 0; i < a.act_mor.size(); ++i)
    if (a.act_mor[i] >= a.cat->morphisms())
      throw Error(ErrorKind::ComponentInvalid, "morphism table entry out of range", {static_cast<long long>(i)});
}

}  // namespace detail

/// Checks both presentations of a strict action.
///
/// Action functor:  action.typing, action.unit, action.functoriality
///   ((γ₂,χ₂)▷g ∘ (γ₁,χ₁)▷f = (γ₁,χ₂χ₁)▷(g∘f)), action.identity,
///   action.square_objects, action.square_morphisms, action.two_sided.
/// 2-functor:  phi.functor, phi.naturality, phi.vertical (F1 first part),
///   phi.unit (F1 second part), phi.functor_composition (F2 first part),
///   phi.horizontal (F2 second part).
///
/// Throws ComponentInvalid when the crossed module or category fail their
/// own validators or a table entry is out of range.
inline Report validate_strict_action(const StrictAction& a, std::size_t cap = Report::kDefaultCap) {
  detail::check_action_shape(a);
  const auto& xm = *a.xm;
  const auto& G = xm.G();
  const auto& H = xm.H();
  const auto& C = *a.cat;
  const Index ng = G.order();
  const Index nh = H.order();
  const Index e = G.identity();
  const Index one = H.identity();
  Report r(cap);

  for (Index g = 0; g < ng; ++g)
    for (Index c = 0; c < nh; ++c)
      for (Index f = 0; f < C.morphisms(); ++f) {
        const Index m = a.mor(g, c, f);
        const Index moved = G.mul(xm.d(c), g);
        r.expect(C.src(m) == a.obj(g, C.src(f)) && C.tgt(m) == a.obj(moved, C.tgt(f)), "action.typing", {g, c, f});
      }
  for (Index x = 0; x < C.objects(); ++x) r.expect(a.obj(e, x) == x, "action.unit", {x});
  for (Index f = 0; f < C.morphisms(); ++f) r.expect(a.mor(e, one, f) == f, "action.unit", {f});
  // The remaining laws compose table entries, which needs typing.
  if (!r.ok()) return r;

  // Action-functor presentation.
  r.merge(parallel_check(ng, cap, [&](std::uint64_t b, std::uint64_t end, Report& part) {
    for (Index g1 = static_cast<Index>(b); g1 < end; ++g1)
      for (Index c1 = 0; c1 < nh; ++c1) {
        const Index g2 = G.mul(xm.d(c1), g1);
        for (Index c2 = 0; c2 < nh; ++c2)
          for (Index g = 0; g < C.morphisms(); ++g)
            for (Index f : C.into(C.src(g))) {
              const Index lhs = C.compose(a.mor(g2, c2, g), a.mor(g1, c1, f));
              part.expect(lhs == a.mor(g1, H.mul(c2, c1), C.compose(g, f)), "action.functoriality",
                          {g2, c2, g, g1, c1, f});
            }
      }
  }, 1));
  for (Index g = 0; g < ng; ++g)
    for (Index x = 0; x < C.objects(); ++x)
      r.expect(a.mor(g, one, C.id(x)) == C.id(a.obj(g, x)), "action.identity", {g, x});
  for (Index g1 = 0; g1 < ng; ++g1)
    for (Index g3 = 0; g3 < ng; ++g3)
      for (Index x = 0; x < C.objects(); ++x)
        r.expect(a.obj(G.mul(g1, g3), x) == a.obj(g1, a.obj(g3, x)), "action.square_objects", {g1, g3, x});
  r.merge(parallel_check(ng, cap, [&](std::uint64_t b, std::uint64_t end, Report& part) {
    for (Index g1 = static_cast<Index>(b); g1 < end; ++g1)
      for (Index c1 = 0; c1 < nh; ++c1)
        for (Index g3 = 0; g3 < ng; ++g3)
          for (Index c2 = 0; c2 < nh; ++c2) {
            const Index g13 = G.mul(g1, g3);
            const Index c12 = H.mul(c1, xm.act(g1, c2));
            for (Index f = 0; f < C.morphisms(); ++f)
              part.expect(a.mor(g13, c12, f) == a.mor(g1, c1, a.mor(g3, c2, f)), "action.square_morphisms",
                          {g1, c1, g3, c2, f});
          }
  }, 1));
  for (Index g = 0; g < ng; ++g)
    for (Index c = 0; c < nh; ++c)
      for (Index f = 0; f < C.morphisms(); ++f) {
        const auto [via_target, via_source] = two_sided_composites(a, g, c, f);
        const Index m = a.mor(g, c, f);
        r.expect(via_target == m && via_source == m, "action.two_sided", {g, c, f});
      }

  // 2-functor presentation.
  std::vector<Functor> phi;
  phi.reserve(ng);
  for (Index g = 0; g < ng; ++g) {
    phi.push_back(phi_functor(a, g));
    const Report fr = validate_functor(phi.back(), cap);
    r.checked("phi.functor");
    for (const auto& v : fr.violations()) {
      auto w = v.witness;
      w.insert(w.begin(), g);
      r.add("phi.functor", std::move(w), v.law);
    }
  }
  for (Index g = 0; g < ng; ++g)
    for (Index c = 0; c < nh; ++c) {
      const Report nr = validate_nat_trans(phi_nat(a, g, c), cap);
      r.checked("phi.naturality");
      for (const auto& v : nr.violations()) {
        auto w = v.witness;
        w.insert(w.begin(), {static_cast<long long>(g), static_cast<long long>(c)});
        r.add("phi.naturality", std::move(w), v.law);
      }
    }
  for (Index g1 = 0; g1 < ng; ++g1)
    for (Index c1 = 0; c1 < nh; ++c1) {
      const Index g2 = G.mul(xm.d(c1), g1);
      for (Index c2 = 0; c2 < nh; ++c2)
        for (Index x = 0; x < C.objects(); ++x) {
          const Index lhs = C.compose(nat_component(a, g2, c2, x), nat_component(a, g1, c1, x));
          r.expect(lhs == nat_component(a, g1, H.mul(c2, c1), x), "phi.vertical", {g1, c1, c2, x});
        }
    }
  for (Index g = 0; g < ng; ++g)
    for (Index x = 0; x < C.objects(); ++x)
      r.expect(nat_component(a, g, one, x) == C.id(a.obj(g, x)), "phi.unit", {g, x});
  for (Index g1 = 0; g1 < ng; ++g1)
    for (Index g3 = 0; g3 < ng; ++g3)
      r.expect(functor_compose(phi[g1], phi[g3]) == phi[G.mul(g1, g3)], "phi.functor_composition", {g1, g3});
  for (Index g1 = 0; g1 < ng; ++g1)
    for (Index c1 = 0; c1 < nh; ++c1)
      for (Index g3 = 0; g3 < ng; ++g3)
        for (Index c2 = 0; c2 < nh; ++c2) {
          const Index g4 = G.mul(xm.d(c2), g3);
          const Index c12 = H.mul(c1, xm.act(g1, c2));
          for (Index x = 0; x < C.objects(); ++x) {
            const Index lhs =
                C.compose(nat_component(a, g1, c1, a.obj(g4, x)), phi[g1].mor[nat_component(a, g3, c2, x)]);
            r.expect(lhs == nat_component(a, G.mul(g1, g3), c12, x), "phi.horizontal", {g1, c1, g3, c2, x});
          }
        }
  return r;
}

// ---------------------------------------------------------------------------
// Standard actions

/// Everything fixed: γ▷x = x, (γ,χ)▷f = f.
inline StrictAction trivial_action(std::shared_ptr<const CrossedModule> xm, CategoryRef cat) {
  return tabulate_action(std::move(xm), std::move(cat), [](Index, Index x) { return x; },
                         [](Index, Index, Index f) { return f; });
}

/// The 2-group acting on its own underlying category:
///   γ ▷ g = γgγ⁻¹,
///   (γ,χ) ▷ (g,η) = (γgγ⁻¹, χ·(γ▷η)·((γgγ⁻¹)▷χ⁻¹)).
inline StrictAction adjoint_action(const CrossedModule& xm_in) {
  auto xm = std::make_shared<const CrossedModule>(xm_in);
  auto cat = std::make_shared<const FiniteCategory>(underlying_category(*xm));
  const auto& G = xm->G();
  const auto& H = xm->H();
  const CrossedModule& X = *xm;
  return tabulate_action(
      xm, cat, [&](Index gamma, Index g) { return G.conj(gamma, g); },
      [&](Index gamma, Index chi, Index f) {
        const Mor2G m = mor_at(X, f);
        const Index c = G.conj(gamma, m.g);
        return mor_index(X, c, H.mul(H.mul(chi, X.act(gamma, m.eta)), X.act(c, H.inv(chi))));
      });
}

/// Left multiplication: γ ▷ g = γg, (γ,χ) ▷ (g,η) = (γ,χ) ⊗ (g,η).
inline StrictAction left_multiplication_action(const CrossedModule& xm_in) {
  auto xm = std::make_shared<const CrossedModule>(xm_in);
  auto cat = std::make_shared<const FiniteCategory>(underlying_category(*xm));
  const CrossedModule& X = *xm;
  return tabulate_action(
      xm, cat, [&](Index gamma, Index g) { return X.G().mul(gamma, g); },
      [&](Index gamma, Index chi, Index f) { return mor_index(tensor(Mor2G{&X, gamma, chi}, mor_at(X, f))); });
}

/// (γ,χ) ▷ (g,η) read off the 1×5 quintet array
///   [χ | γ | η over g | γ⁻¹ | χ⁻¹]
/// with identity vertical edges, evaluated by evaluate_grid.
inline Mor2G adjoint_by_quintets(const CrossedModule& xm, Index gamma, Index chi, Index g, Index eta) {
  const auto& G = xm.G();
  const auto& H = xm.H();
  const Index e = G.identity();
  const Index one = H.identity();
  QuintetGrid row{1, 5, {
      make_square(xm, e, e, e, xm.d(chi), chi),
      make_square(xm, e, gamma, e, gamma, one),
      make_square(xm, e, g, e, G.mul(xm.d(eta), g), eta),
      make_square(xm, e, G.inv(gamma), e, G.inv(gamma), one),
      make_square(xm, e, e, e, xm.d(H.inv(chi)), H.inv(chi)),
  }};
  const Quintet q = evaluate_grid(row);
  return {&xm, q.top, q.face};
}

// ---------------------------------------------------------------------------
// Weak actions

/// Action-shaped tables plus a compositor
///   φ_(γ₁,γ₂)(x) : γ₁▷(γ₂▷x) → γ₁γ₂▷x,
/// stored at compositor[(γ₁·|G| + γ₂)·|Ob| + x].
struct WeakActionData {
  StrictAction base;
  std::vector<Index> compositor;

  Index phi(Index g1, Index g2, Index x) const {
    const std::size_t ng = base.xm->G().order();
    return compositor[(g1 * ng + g2) * base.cat->objects() + x];
  }
  Index& phi_entry(Index g1, Index g2, Index x) {
    const std::size_t ng = base.xm->G().order();
    return compositor[(g1 * ng + g2) * base.cat->objects() + x];
  }
};

/// Compositor with every component an identity, for a strict action.
inline WeakActionData identity_compositor(StrictAction a) {
  const Index ng = a.xm->G().order();
  WeakActionData w{std::move(a), {}};
  w.compositor.resize(static_cast<std::size_t>(ng) * ng * w.base.cat->objects());
  for (Index g1 = 0; g1 < ng; ++g1)
    for (Index g2 = 0; g2 < ng; ++g2)
      for (Index x = 0; x < w.base.cat->objects(); ++x)
        w.phi_entry(g1, g2, x) = w.base.cat->id(w.base.obj(w.base.xm->G().mul(g1, g2), x));
  return w;
}

/// Laws: compositor.typing, compositor.invertible, compositor.naturality,
/// compositor.unit (φ_(e,γ) and φ_(γ,e) are identities) and
/// compositor.pentagon, i.e. for all (f, g, h, x)
///   φ_(fg,h)(x) ∘ φ_(f,g)(h▷x) = φ_(f,gh)(x) ∘ Φ_f(φ_(g,h)(x)).
/// The associator of a strict 2-group is the identity, so it does not
/// appear. Witnesses are (f, g, h, x) for the pentagon, (γ₁, γ₂, x) for the
/// component laws, (γ₁, γ₂, m) for naturality along m.
inline Report check_compositor_coherence(const WeakActionData& w, std::size_t cap = Report::kDefaultCap) {
  const auto& a = w.base;
  if (!a.xm || !a.cat) throw Error(ErrorKind::ComponentInvalid, "weak action lacks a crossed module or a category");
  const auto& G = a.xm->G();
  const auto& C = *a.cat;
  const Index ng = G.order();
  const Index e = G.identity();
  if (w.compositor.size() != static_cast<std::size_t>(ng) * ng * C.objects() ||
      a.act_obj.size() != static_cast<std::size_t>(ng) * C.objects() ||
      a.act_mor.size() != static_cast<std::size_t>(ng) * a.xm->H().order() * C.morphisms())
    throw Error(ErrorKind::ComponentInvalid, "compositor or action tables have the wrong size");
  for (Index c : w.compositor)
    if (c >= C.morphisms()) throw Error(ErrorKind::ComponentInvalid, "compositor entry out of range", {c});
  Report r(cap);

  for (Index g1 = 0; g1 < ng; ++g1)
    for (Index g2 = 0; g2 < ng; ++g2)
      for (Index x = 0; x < C.objects(); ++x) {
        const Index p = w.phi(g1, g2, x);
        r.expect(C.src(p) == a.obj(g1, a.obj(g2, x)) && C.tgt(p) == a.obj(G.mul(g1, g2), x), "compositor.typing",
                 {g1, g2, x});
        r.expect(C.inverse(p) != kNone, "compositor.invertible", {g1, g2, x});
        if (g1 == e || g2 == e) r.expect(C.is_identity(p), "compositor.unit", {g1, g2, x});
      }
  if (r.mentions("compositor.typing")) return r;

  for (Index g1 = 0; g1 < ng; ++g1)
    for (Index g2 = 0; g2 < ng; ++g2)
      for (Index m = 0; m < C.morphisms(); ++m) {
        const Index lhs = C.compose(w.phi(g1, g2, C.tgt(m)), a.mor(g1, a.mor(g2, m)));
        const Index rhs = C.compose(a.mor(G.mul(g1, g2), m), w.phi(g1, g2, C.src(m)));
        r.expect(lhs != kNone && lhs == rhs, "compositor.naturality", {g1, g2, m});
      }

  r.merge(parallel_check(ng, cap, [&](std::uint64_t b, std::uint64_t end, Report& part) {
    for (Index f = static_cast<Index>(b); f < end; ++f)
      for (Index g = 0; g < ng; ++g)
        for (Index h = 0; h < ng; ++h)
          for (Index x = 0; x < C.objects(); ++x) {
            const Index lhs = C.compose(w.phi(G.mul(f, g), h, x), w.phi(f, g, a.obj(h, x)));
            const Index rhs = C.compose(w.phi(f, G.mul(g, h), x), a.mor(f, w.phi(g, h, x)));
            part.expect(lhs != kNone && lhs == rhs, "compositor.pentagon", {f, g, h, x});
          }
  }, 1));
  return r;
}

}  // namespace xmodcat
