#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "groups.hpp"
#include "report.hpp"

namespace xmodcat {

/// (G, H, ∂: H → G, ▷: G × H → H). The structure may hold data that fails
/// the axioms (negative fixtures); `validate_crossed_module` decides.
class CrossedModule {
 public:
  CrossedModule() = default;
  CrossedModule(FiniteGroup g, FiniteGroup h, std::vector<Index> boundary, std::vector<Index> action,
                std::string name = {})
      : g_(std::move(g)), h_(std::move(h)), boundary_(std::move(boundary)), action_(std::move(action)),
        name_(std::move(name)) {}

  const FiniteGroup& G() const noexcept { return g_; }
  const FiniteGroup& H() const noexcept { return h_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// ∂(η)
  Index d(Index eta) const noexcept { return boundary_[eta]; }
  /// g ▷ η
  Index act(Index g, Index eta) const noexcept { return action_[static_cast<std::size_t>(g) * h_.order() + eta]; }

  const std::vector<Index>& boundary() const noexcept { return boundary_; }
  const std::vector<Index>& action() const noexcept { return action_; }

  Homomorphism boundary_hom() const { return {&h_, &g_, boundary_}; }
  GroupAction action_view() const { return {&g_, &h_, action_}; }

  /// Kernel of ∂, ascending.
  std::vector<Index> kernel() const {
    std::vector<Index> k;
    for (Index eta = 0; eta < h_.order(); ++eta)
      if (d(eta) == g_.identity()) k.push_back(eta);
    return k;
  }

  /// Table equality (names ignored).
  bool same_structure(const CrossedModule& o) const {
    return g_.same_table(o.g_) && h_.same_table(o.h_) && boundary_ == o.boundary_ && action_ == o.action_;
  }
  bool operator==(const CrossedModule& o) const { return same_structure(o); }

 private:
  FiniteGroup g_;
  FiniteGroup h_;
  std::vector<Index> boundary_;
  std::vector<Index> action_;
  std::string name_;
};

/// Checks CM1 ∂(g▷η) = g∂(η)g⁻¹ and CM2 ∂(η)▷ζ = ηζη⁻¹ over all pairs.
/// Throws ComponentInvalid when ∂ is not a homomorphism or ▷ is not an
/// action by automorphisms; the axioms are not evaluated in that case.
inline Report validate_crossed_module(const CrossedModule& xm, std::size_t cap = Report::kDefaultCap) {
  const auto& G = xm.G();
  const auto& H = xm.H();
  if (auto hr = validate_homomorphism(xm.boundary_hom(), 1); !hr.ok())
    throw Error(ErrorKind::ComponentInvalid, "boundary is not a homomorphism (" + hr.violations()[0].law + ")",
                hr.violations()[0].witness);
  if (auto ar = validate_automorphism_action(xm.action_view(), 1); !ar.ok())
    throw Error(ErrorKind::ComponentInvalid, "action is not by automorphisms (" + ar.violations()[0].law + ")",
                ar.violations()[0].witness);

  Report r(cap);
  for (Index g = 0; g < G.order(); ++g)
    for (Index eta = 0; eta < H.order(); ++eta)
      r.expect(xm.d(xm.act(g, eta)) == G.conj(g, xm.d(eta)), "CM1", {g, eta},
               "d(g|>eta) != g d(eta) g^-1");
  for (Index eta = 0; eta < H.order(); ++eta)
    for (Index zeta = 0; zeta < H.order(); ++zeta)
      r.expect(xm.act(xm.d(eta), zeta) == H.conj(eta, zeta), "CM2", {eta, zeta},
               "d(eta)|>zeta != eta zeta eta^-1");
  return r;
}

/// Validating constructor: throws ComponentInvalid or AxiomViolation.
inline CrossedModule make_crossed_module(FiniteGroup g, FiniteGroup h, std::vector<Index> boundary,
                                         std::vector<Index> action, std::string name = {}) {
  CrossedModule xm(std::move(g), std::move(h), std::move(boundary), std::move(action), std::move(name));
  if (auto r = validate_crossed_module(xm, 1); !r.ok())
    throw Error(ErrorKind::AxiomViolation, r.violations()[0].law + " fails", r.violations()[0].witness);
  return xm;
}

/// (G, G, id, conjugation).
inline CrossedModule xmod_identity(const FiniteGroup& g, std::string name = {}) {
  std::vector<Index> id(g.order());
  for (Index a = 0; a < g.order(); ++a) id[a] = a;
  auto conj = conjugation_action(g);
  return CrossedModule(g, g, std::move(id), std::move(conj.table), std::move(name));
}

/// (G, H, trivial ∂, act) for an action on an abelian H.
inline CrossedModule xmod_trivial_boundary(const GroupAction& act, std::string name = {}) {
  if (auto r = validate_automorphism_action(act, 1); !r.ok())
    throw Error(ErrorKind::ComponentInvalid, "action is not by automorphisms", r.violations()[0].witness);
  const auto& H = *act.space;
  for (Index a = 0; a < H.order(); ++a)
    for (Index b = 0; b < H.order(); ++b)
      if (H.mul(a, b) != H.mul(b, a))
        throw Error(ErrorKind::SpaceNotAbelian, "acted-on group is not abelian", {a, b});
  std::vector<Index> boundary(H.order(), act.actor->identity());
  return CrossedModule(*act.actor, H, std::move(boundary), act.table, std::move(name));
}

// ---------------------------------------------------------------------------
// Enumeration oracle

namespace detail {

/// All homomorphisms src → tgt, by backtracking over the images of
/// 0..|src|-1 and pruning as soon as an assigned product disagrees.
inline std::vector<std::vector<Index>> homomorphisms(const FiniteGroup& src, const FiniteGroup& tgt) {
  std::vector<std::vector<Index>> out;
  const Index n = src.order();
  std::vector<Index> img(n, kNone);
  // Every product among assigned elements that involves `a` as a factor or
  // as the result.
  auto consistent = [&](Index a) {
    for (Index x = 0; x <= a; ++x)
      for (Index y = 0; y <= a; ++y) {
        const Index p = src.mul(x, y);
        if (p <= a && (x == a || y == a || p == a) && img[p] != tgt.mul(img[x], img[y])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, Index a) -> void {
    if (a == n) {
      out.push_back(img);
      return;
    }
    for (Index v = 0; v < tgt.order(); ++v) {
      img[a] = v;
      if (consistent(a)) self(self, a + 1);
    }
    img[a] = kNone;
  };
  rec(rec, 0);
  return out;
}

/// Aut(H) as image vectors, by backtracking over injective assignments.
inline std::vector<std::vector<Index>> automorphisms(const FiniteGroup& h) {
  std::vector<std::vector<Index>> out;
  const Index n = h.order();
  std::vector<Index> img(n, kNone);
  std::vector<bool> used(n, false);
  auto consistent = [&](Index a) {
    for (Index x = 0; x <= a; ++x)
      for (Index y = 0; y <= a; ++y) {
        const Index p = h.mul(x, y);
        if (p <= a && (x == a || y == a || p == a) && img[p] != h.mul(img[x], img[y])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, Index a) -> void {
    if (a == n) {
      out.push_back(img);
      return;
    }
    for (Index v = 0; v < n; ++v) {
      if (used[v]) continue;
      img[a] = v;
      used[v] = true;
      if (consistent(a)) self(self, a + 1);
      used[v] = false;
    }
    img[a] = kNone;
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

struct EnumerationOptions {
  /// Upper bound on |Hom(H,G)| × |Hom(G,Aut H)| candidate pairs.
  std::uint64_t budget = 2'000'000;
};

/// Every crossed-module structure (∂, ▷) on the pair (G, H). Candidates are
/// Hom(H,G) × Hom(G, Aut H); each is kept iff both axioms hold, checked by
/// loops local to this function.
inline std::vector<CrossedModule> enumerate_crossed_modules(const FiniteGroup& G, const FiniteGroup& H,
                                                            EnumerationOptions opt = {}) {
  const auto bounds = detail::homomorphisms(H, G);
  const auto auts = detail::automorphisms(H);

  // Homomorphisms G → Aut(H), encoded as an automorphism index per g.
  std::vector<std::vector<Index>> actions;
  {
    const Index na = static_cast<Index>(auts.size());
    // Composition table of Aut(H): (a∘b)(x) = a(b(x)).
    std::vector<Index> comp(static_cast<std::size_t>(na) * na);
    for (Index a = 0; a < na; ++a)
      for (Index b = 0; b < na; ++b) {
        std::vector<Index> c(H.order());
        for (Index x = 0; x < H.order(); ++x) c[x] = auts[a][auts[b][x]];
        for (Index k = 0; k < na; ++k)
          if (auts[k] == c) comp[static_cast<std::size_t>(a) * na + b] = k;
      }
    std::vector<Index> pick(G.order(), kNone);
    auto rec = [&](auto&& self, Index g) -> void {
      if (g == G.order()) {
        actions.push_back(pick);
        return;
      }
      for (Index k = 0; k < na; ++k) {
        pick[g] = k;
        bool ok = true;
        for (Index p = 0; p <= g && ok; ++p)
          for (Index q = 0; q <= g && ok; ++q) {
            const Index pq = G.mul(p, q);
            if (pq <= g && (p == g || q == g || pq == g))
              ok = pick[pq] == comp[static_cast<std::size_t>(pick[p]) * na + pick[q]];
          }
        if (ok) self(self, g + 1);
      }
      pick[g] = kNone;
    };
    rec(rec, 0);
  }

  const std::uint64_t candidates = static_cast<std::uint64_t>(bounds.size()) * actions.size();
  if (candidates > opt.budget)
    throw Error(ErrorKind::BudgetExceeded,
                std::to_string(candidates) + " candidates exceed the budget of " + std::to_string(opt.budget),
                {static_cast<long long>(candidates)});

  std::vector<CrossedModule> out;
  std::vector<Index> table(static_cast<std::size_t>(G.order()) * H.order());
  for (const auto& d : bounds) {
    for (const auto& pick : actions) {
      for (Index g = 0; g < G.order(); ++g)
        for (Index x = 0; x < H.order(); ++x) table[static_cast<std::size_t>(g) * H.order() + x] = auts[pick[g]][x];
      auto act = [&](Index g, Index x) { return table[static_cast<std::size_t>(g) * H.order() + x]; };
      bool ok = true;
      for (Index g = 0; g < G.order() && ok; ++g)
        for (Index x = 0; x < H.order() && ok; ++x)
          ok = d[act(g, x)] == G.mul(G.mul(g, d[x]), G.inv(g));
      for (Index x = 0; x < H.order() && ok; ++x)
        for (Index y = 0; y < H.order() && ok; ++y)
          ok = act(d[x], y) == H.mul(H.mul(x, y), H.inv(x));
      if (!ok) continue;
      CrossedModule xm(G, H, d, table);
      bool dup = false;
      for (const auto& prev : out) dup |= prev.same_structure(xm);
      if (!dup) out.push_back(std::move(xm));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixture catalog

/// Z/2 acting on Z/3 by inversion, trivial boundary.
inline CrossedModule xm1() {
  static const FiniteGroup z2 = cyclic_group(2);
  static const FiniteGroup z3 = cyclic_group(3);
  GroupAction inv{&z2, &z3, {0, 1, 2, 0, 2, 1}};
  return xmod_trivial_boundary(inv, "XM1");
}

/// xmod_identity(S3).
inline CrossedModule xm2() { return xmod_identity(symmetric_group(3), "XM2"); }

/// Trivial G, H = Z/2.
inline CrossedModule xm3() {
  return CrossedModule(trivial_group(), cyclic_group(2), {0, 0}, {0, 1}, "XM3");
}

/// xmod_identity(Z/4).
inline CrossedModule xm4() { return xmod_identity(cyclic_group(4), "XM4"); }

/// Trivial G acting trivially on S3 with trivial boundary: fails CM2.
inline CrossedModule bad_peiffer() {
  auto s3 = symmetric_group(3);
  std::vector<Index> act(s3.order());
  for (Index x = 0; x < s3.order(); ++x) act[x] = x;
  return CrossedModule(trivial_group(), s3, std::vector<Index>(s3.order(), 0), std::move(act), "bad_peiffer");
}

/// The fixture crossed modules used throughout the tests, in order XM1..XM4.
inline std::vector<CrossedModule> fixture_catalog() { return {xm1(), xm2(), xm3(), xm4()}; }

/// Groups of order at most 6, one per isomorphism class.
inline std::vector<std::pair<std::string, FiniteGroup>> small_groups() {
  return {
      {"Z1", trivial_group()},
      {"Z2", cyclic_group(2)},
      {"Z3", cyclic_group(3)},
      {"Z4", cyclic_group(4)},
      {"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))},
      {"Z5", cyclic_group(5)},
      {"Z6", cyclic_group(6)},
      {"S3", symmetric_group(3)},
  };
}

}  // namespace xmodcat
