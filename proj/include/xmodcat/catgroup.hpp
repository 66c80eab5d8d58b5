#pragma once

#include <utility>
#include <vector>

#include "error.hpp"
#include "fincat.hpp"
#include "xmod.hpp"

namespace xmodcat {

/// A morphism (g, η) of the categorical group of a crossed module, i.e. an
/// element of G ⋉ H. Source g, target ∂(η)g.
struct Mor2G {
  const CrossedModule* xm = nullptr;
  Index g = 0;
  Index eta = 0;

  Index source() const { return g; }
  Index target() const { return xm->G().mul(xm->d(eta), g); }

  bool operator==(const Mor2G& o) const { return xm == o.xm && g == o.g && eta == o.eta; }
};

inline Mor2G identity_mor(const CrossedModule& xm, Index g) { return {&xm, g, xm.H().identity()}; }

/// (source, target) = (g, ∂(η)g).
inline std::pair<Index, Index> boundary(const Mor2G& m) { return {m.source(), m.target()}; }

/// later ∘ earlier, arguments in right-to-left order:
/// (∂(η)g, ζ) ∘ (g, η) = (g, ζη).
inline Mor2G compose(const Mor2G& later, const Mor2G& earlier) {
  if (later.xm != earlier.xm) throw Error(ErrorKind::MixedCrossedModules, "morphisms of different crossed modules");
  if (later.source() != earlier.target())
    throw Error(ErrorKind::NotComposable,
                "source " + std::to_string(later.source()) + " of the later morphism differs from target " +
                    std::to_string(earlier.target()) + " of the earlier one",
                {later.source(), earlier.target()});
  return {earlier.xm, earlier.g, earlier.xm->H().mul(later.eta, earlier.eta)};
}

/// Semidirect-product law (g₁, η) ⊗ (g₂, ζ) = (g₁g₂, η (g₁ ▷ ζ)).
inline Mor2G tensor(const Mor2G& a, const Mor2G& b) {
  if (a.xm != b.xm) throw Error(ErrorKind::MixedCrossedModules, "morphisms of different crossed modules");
  const auto& xm = *a.xm;
  return {a.xm, xm.G().mul(a.g, b.g), xm.H().mul(a.eta, xm.act(a.g, b.eta))};
}

enum class InverseKind { Tensor, Compose };

/// Tensor inverse (g⁻¹, g⁻¹ ▷ η⁻¹) or composition inverse (∂(η)g, η⁻¹).
inline Mor2G invert(const Mor2G& m, InverseKind kind) {
  const auto& xm = *m.xm;
  if (kind == InverseKind::Tensor) {
    const Index gi = xm.G().inv(m.g);
    return {m.xm, gi, xm.act(gi, xm.H().inv(m.eta))};
  }
  return {m.xm, m.target(), xm.H().inv(m.eta)};
}

/// Morphism (g, η) sits at index g·|H| + η of the underlying category.
inline Index mor_index(const CrossedModule& xm, Index g, Index eta) { return g * xm.H().order() + eta; }
inline Index mor_index(const Mor2G& m) { return mor_index(*m.xm, m.g, m.eta); }
inline Mor2G mor_at(const CrossedModule& xm, Index f) { return {&xm, f / xm.H().order(), f % xm.H().order()}; }

/// Objects G, morphisms G × H with the composition above.
inline FiniteCategory underlying_category(const CrossedModule& xm) {
  const auto& G = xm.G();
  const auto& H = xm.H();
  std::vector<MorphismType> mors;
  mors.reserve(static_cast<std::size_t>(G.order()) * H.order());
  for (Index g = 0; g < G.order(); ++g)
    for (Index eta = 0; eta < H.order(); ++eta) mors.push_back({g, G.mul(xm.d(eta), g)});
  std::vector<Index> ids(G.order());
  for (Index g = 0; g < G.order(); ++g) ids[g] = mor_index(xm, g, H.identity());
  return FiniteCategory::build(G.order(), std::move(mors), std::move(ids), [&](Index later, Index earlier) {
    const Index eta = earlier % H.order();
    const Index zeta = later % H.order();
    return mor_index(xm, earlier / H.order(), H.mul(zeta, eta));
  });
}

}  // namespace xmodcat
