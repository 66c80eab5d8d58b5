#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "report.hpp"

namespace xmodcat {

/// A finite group stored as its Cayley table over the indices 0..order-1.
/// Instances only come out of `group_from_table` (or the named constructors
/// built on it), so every FiniteGroup satisfies the group axioms.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  Index order() const noexcept { return n_; }
  Index identity() const noexcept { return e_; }
  Index mul(Index a, Index b) const noexcept { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Index mul(Index a, Index b, Index c) const noexcept { return mul(mul(a, b), c); }
  Index inv(Index a) const noexcept { return inv_[a]; }
  /// a·b·a⁻¹
  Index conj(Index a, Index b) const noexcept { return mul(mul(a, b), inv(a)); }

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::string name(Index a) const { return names_.empty() ? std::to_string(a) : names_[a]; }
  /// Index of a display name, or kNone.
  Index find(const std::string& name) const {
    for (Index a = 0; a < n_; ++a) {
      if (names_.empty() ? std::to_string(a) == name : names_[a] == name) return a;
    }
    return kNone;
  }

  bool is_abelian() const noexcept {
    for (Index a = 0; a < n_; ++a)
      for (Index b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  std::vector<std::vector<Index>> table() const {
    std::vector<std::vector<Index>> t(n_, std::vector<Index>(n_));
    for (Index a = 0; a < n_; ++a)
      for (Index b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    return t;
  }

  /// Table equality; names are display-only and ignored.
  bool same_table(const FiniteGroup& o) const { return n_ == o.n_ && e_ == o.e_ && mul_ == o.mul_; }
  bool operator==(const FiniteGroup& o) const { return same_table(o) && names_ == o.names_; }

 private:
  friend FiniteGroup group_from_table(const std::vector<std::vector<Index>>&, Index, std::vector<std::string>);

  Index n_ = 0;
  Index e_ = 0;
  std::vector<Index> mul_;
  std::vector<Index> inv_;
  std::vector<std::string> names_;
};

/// Validates a Cayley table and builds the group. Throws Error with kind
/// MalformedTable, NoIdentity, MissingInverse or NonAssociative; the witness
/// names the offending element(s).
inline FiniteGroup group_from_table(const std::vector<std::vector<Index>>& table, Index identity,
                                    std::vector<std::string> names = {}) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::MalformedTable, "empty table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorKind::MalformedTable, "row " + std::to_string(a) + " has length " +
                                                 std::to_string(table[a].size()) + ", expected " + std::to_string(n),
                  {static_cast<long long>(a)});
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n)
        throw Error(ErrorKind::MalformedTable,
                    "entry [" + std::to_string(a) + "][" + std::to_string(b) + "] out of range",
                    {static_cast<long long>(a), static_cast<long long>(b)});
  }
  if (identity >= n) throw Error(ErrorKind::MalformedTable, "identity index out of range", {identity});
  if (!names.empty()) {
    if (names.size() != n) throw Error(ErrorKind::MalformedTable, "names list has wrong length");
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != n) throw Error(ErrorKind::MalformedTable, "element names are not unique");
  }

  for (std::size_t a = 0; a < n; ++a) {
    if (table[identity][a] != a || table[a][identity] != a)
      throw Error(ErrorKind::NoIdentity,
                  "designated identity " + std::to_string(identity) + " fails on element " + std::to_string(a),
                  {static_cast<long long>(a)});
  }

  std::vector<Index> inv(n, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == identity && table[b][a] == identity) {
        inv[a] = static_cast<Index>(b);
        break;
      }
    }
    if (inv[a] == kNone)
      throw Error(ErrorKind::MissingInverse, "element " + std::to_string(a) + " has no two-sided inverse",
                  {static_cast<long long>(a)});
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NonAssociative,
                      "(a*b)*c != a*(b*c) for a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                          ", c=" + std::to_string(c),
                      {static_cast<long long>(a), static_cast<long long>(b), static_cast<long long>(c)});

  FiniteGroup g;
  g.n_ = static_cast<Index>(n);
  g.e_ = identity;
  g.mul_.reserve(n * n);
  for (const auto& row : table) g.mul_.insert(g.mul_.end(), row.begin(), row.end());
  g.inv_ = std::move(inv);
  g.names_ = std::move(names);
  return g;
}

// ---------------------------------------------------------------------------
// Named groups

inline FiniteGroup trivial_group() { return group_from_table({{0}}, 0, {"e"}); }

/// Z/n with k ↦ k as the element index.
inline FiniteGroup cyclic_group(Index n) {
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return group_from_table(t, 0);
}

/// Cycle notation on 1..n, e.g. "(1 2 3)"; identity is "e".
inline std::string cycle_name(const std::vector<Index>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (Index i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += '(';
    for (Index j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      if (out.back() != '(') out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

/// The group generated by closing `perms` under composition, where
/// (p·q)(i) = p(q(i)). Elements are listed in lexicographic order of their
/// image vectors, so the identity permutation is always index 0.
inline FiniteGroup permutation_group(std::vector<std::vector<Index>> perms) {
  std::set<std::vector<Index>> closure(perms.begin(), perms.end());
  const std::size_t deg = perms.empty() ? 0 : perms.front().size();
  std::vector<Index> id(deg);
  std::iota(id.begin(), id.end(), Index{0});
  closure.insert(id);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Index>> cur(closure.begin(), closure.end());
    for (const auto& p : cur)
      for (const auto& q : cur) {
        std::vector<Index> r(deg);
        for (std::size_t i = 0; i < deg; ++i) r[i] = p[q[i]];
        grew |= closure.insert(std::move(r)).second;
      }
  }
  std::vector<std::vector<Index>> elems(closure.begin(), closure.end());
  const std::size_t n = elems.size();
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Index> r(deg);
      for (std::size_t i = 0; i < deg; ++i) r[i] = elems[a][elems[b][i]];
      t[a][b] = static_cast<Index>(std::lower_bound(elems.begin(), elems.end(), r) - elems.begin());
    }
  std::vector<std::string> names;
  for (const auto& p : elems) names.push_back(cycle_name(p));
  return group_from_table(t, 0, std::move(names));
}

/// S_n. For n = 3 the indices are: 0 e, 1 (2 3), 2 (1 2), 3 (1 2 3), 4 (1 3 2), 5 (1 3).
inline FiniteGroup symmetric_group(Index n) {
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), Index{0});
  std::vector<std::vector<Index>> all;
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return permutation_group(std::move(all));
}

/// A × B with (a, b) at index a·|B| + b.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const Index n = a.order() * b.order();
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      t[x][y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
  std::vector<std::string> names;
  for (Index x = 0; x < n; ++x) names.push_back("(" + a.name(x / b.order()) + "," + b.name(x % b.order()) + ")");
  return group_from_table(t, a.identity() * b.order() + b.identity(), std::move(names));
}

// ---------------------------------------------------------------------------
// Homomorphisms and actions

/// A map between groups; non-owning view of both groups.
struct Homomorphism {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<Index> map;

  Index operator()(Index a) const { return map[a]; }
};

/// Every pair (a, b) with map[a·b] ≠ map[a]·map[b].
inline Report validate_homomorphism(const Homomorphism& h, std::size_t cap = Report::kDefaultCap) {
  Report r(cap);
  const auto& s = *h.source;
  const auto& t = *h.target;
  r.checked("hom.shape");
  if (h.map.size() != s.order()) {
    r.add("hom.shape", {static_cast<long long>(h.map.size())}, "map length differs from source order");
    return r;
  }
  for (Index a = 0; a < s.order(); ++a) {
    r.checked("hom.shape");
    if (h.map[a] >= t.order()) r.add("hom.shape", {a}, "image out of range");
  }
  if (!r.ok()) return r;
  for (Index a = 0; a < s.order(); ++a)
    for (Index b = 0; b < s.order(); ++b)
      r.expect(h.map[s.mul(a, b)] == t.mul(h.map[a], h.map[b]), "hom.multiplicative", {a, b});
  return r;
}

/// Action of `actor` on `space`: table[g·|space| + h] = g ▷ h. Non-owning.
struct GroupAction {
  const FiniteGroup* actor = nullptr;
  const FiniteGroup* space = nullptr;
  std::vector<Index> table;

  Index operator()(Index g, Index h) const { return table[static_cast<std::size_t>(g) * space->order() + h]; }
};

/// Checks that each g acts by an automorphism and that g ↦ (g▷–) is a
/// homomorphism with e acting trivially.
inline Report validate_automorphism_action(const GroupAction& a, std::size_t cap = Report::kDefaultCap) {
  Report r(cap);
  const auto& G = *a.actor;
  const auto& H = *a.space;
  r.checked("action.shape");
  if (a.table.size() != static_cast<std::size_t>(G.order()) * H.order()) {
    r.add("action.shape", {static_cast<long long>(a.table.size())}, "table size is not |G|*|H|");
    return r;
  }
  for (std::size_t i = 0; i < a.table.size(); ++i)
    if (a.table[i] >= H.order()) r.add("action.shape", {static_cast<long long>(i)}, "entry out of range");
  if (!r.ok()) return r;

  for (Index g = 0; g < G.order(); ++g) {
    std::vector<Index> seen(H.order(), kNone);
    for (Index h = 0; h < H.order(); ++h) {
      const Index img = a(g, h);
      r.checked("action.bijective");
      if (seen[img] != kNone) r.add("action.bijective", {g, seen[img], h}, "two elements share an image");
      seen[img] = h;
    }
  }
  for (Index g = 0; g < G.order(); ++g)
    for (Index x = 0; x < H.order(); ++x)
      for (Index y = 0; y < H.order(); ++y)
        r.expect(a(g, H.mul(x, y)) == H.mul(a(g, x), a(g, y)), "action.automorphism", {g, x, y});
  for (Index g1 = 0; g1 < G.order(); ++g1)
    for (Index g2 = 0; g2 < G.order(); ++g2)
      for (Index h = 0; h < H.order(); ++h)
        r.expect(a(G.mul(g1, g2), h) == a(g1, a(g2, h)), "action.composition", {g1, g2, h});
  for (Index h = 0; h < H.order(); ++h) r.expect(a(G.identity(), h) == h, "action.unit", {h});
  return r;
}

/// g ▷ h = g h g⁻¹.
inline GroupAction conjugation_action(const FiniteGroup& g) {
  GroupAction a{&g, &g, std::vector<Index>(static_cast<std::size_t>(g.order()) * g.order())};
  for (Index x = 0; x < g.order(); ++x)
    for (Index y = 0; y < g.order(); ++y) a.table[static_cast<std::size_t>(x) * g.order() + y] = g.conj(x, y);
  return a;
}

/// g ▷ h = h.
inline GroupAction trivial_action(const FiniteGroup& actor, const FiniteGroup& space) {
  GroupAction a{&actor, &space, std::vector<Index>(static_cast<std::size_t>(actor.order()) * space.order())};
  for (Index g = 0; g < actor.order(); ++g)
    for (Index h = 0; h < space.order(); ++h) a.table[static_cast<std::size_t>(g) * space.order() + h] = h;
  return a;
}

}  // namespace xmodcat
