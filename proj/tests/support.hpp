// Independent oracles shared by the test binaries. Nothing here calls the
// code path it is used to check.
#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <sys/wait.h>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "xmodcat.hpp"

namespace oracle {

using xmodcat::Index;

inline std::filesystem::path fixture(const std::string& rel) {
#ifdef XMODCAT_FIXTURES
  return std::filesystem::path(XMODCAT_FIXTURES) / rel;
#else
  return std::filesystem::path("fixtures") / rel;
#endif
}

// ---------------------------------------------------------------------------
// S3 as explicit permutations of {0,1,2}, listed in lexicographic order of
// their image vectors: 0 e, 1 (2 3), 2 (1 2), 3 (1 2 3), 4 (1 3 2), 5 (1 3).

using Perm = std::array<int, 3>;

inline const std::vector<Perm>& s3_perms() {
  static const std::vector<Perm> all = [] {
    std::vector<Perm> v;
    Perm p{0, 1, 2};
    do v.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return v;
  }();
  return all;
}

inline Index s3_index(const Perm& p) {
  const auto& all = s3_perms();
  return static_cast<Index>(std::find(all.begin(), all.end(), p) - all.begin());
}

/// (p·q)(i) = p(q(i))
inline Index s3_mul(Index a, Index b) {
  const auto& p = s3_perms()[a];
  const auto& q = s3_perms()[b];
  return s3_index({p[q[0]], p[q[1]], p[q[2]]});
}

inline Index s3_inv(Index a) {
  const auto& p = s3_perms()[a];
  Perm r{};
  for (int i = 0; i < 3; ++i) r[p[i]] = i;
  return s3_index(r);
}

inline Index s3_conj(Index g, Index h) { return s3_mul(s3_mul(g, h), s3_inv(g)); }

// Named elements, for readability in tests.
inline constexpr Index kE = 0, k23 = 1, k12 = 2, k123 = 3, k132 = 4, k13 = 5;

// ---------------------------------------------------------------------------
// Crossed-module enumeration by brute force over every map.

/// Every function from {0..n-1} to {0..m-1}, in lexicographic order.
template <class F>
void for_each_map(Index n, Index m, F&& f) {
  std::vector<Index> v(n, 0);
  while (true) {
    f(v);
    Index k = 0;
    while (k < n && ++v[k] == m) v[k++] = 0;
    if (k == n) return;
  }
}

/// Every bijection of H that preserves multiplication, by scanning all
/// permutations.
inline std::vector<std::vector<Index>> brute_automorphisms(const xmodcat::FiniteGroup& H) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> p(H.order());
  for (Index i = 0; i < H.order(); ++i) p[i] = i;
  do {
    bool ok = true;
    for (Index a = 0; a < H.order() && ok; ++a)
      for (Index b = 0; b < H.order() && ok; ++b) ok = p[H.mul(a, b)] == H.mul(p[a], p[b]);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

using Structure = std::pair<std::vector<Index>, std::vector<Index>>;  // (boundary, action table)

/// All (∂, ▷) on (G, H): every map H → G passing validate_homomorphism,
/// every assignment G → Aut(H) passing validate_automorphism_action, and
/// the pair kept iff validate_crossed_module is empty.
inline std::set<Structure> brute_crossed_modules(const xmodcat::FiniteGroup& G, const xmodcat::FiniteGroup& H) {
  std::vector<std::vector<Index>> bounds;
  for_each_map(H.order(), G.order(), [&](const std::vector<Index>& m) {
    if (xmodcat::validate_homomorphism({&H, &G, m}, 1).ok()) bounds.push_back(m);
  });
  const auto auts = brute_automorphisms(H);
  std::vector<std::vector<Index>> actions;
  for_each_map(G.order(), static_cast<Index>(auts.size()), [&](const std::vector<Index>& pick) {
    std::vector<Index> table;
    table.reserve(static_cast<std::size_t>(G.order()) * H.order());
    for (Index g = 0; g < G.order(); ++g) table.insert(table.end(), auts[pick[g]].begin(), auts[pick[g]].end());
    if (xmodcat::validate_automorphism_action({&G, &H, table}, 1).ok()) actions.push_back(std::move(table));
  });
  std::set<Structure> out;
  for (const auto& d : bounds)
    for (const auto& a : actions)
      if (xmodcat::validate_crossed_module(xmodcat::CrossedModule(G, H, d, a), 1).ok()) out.insert({d, a});
  return out;
}

inline std::set<Structure> as_structures(const std::vector<xmodcat::CrossedModule>& xms) {
  std::set<Structure> out;
  for (const auto& xm : xms) out.insert({xm.boundary(), xm.action()});
  return out;
}

// ---------------------------------------------------------------------------
// Conjugacy classes by orbit enumeration.

inline std::vector<std::vector<Index>> conjugacy_classes(const xmodcat::FiniteGroup& G) {
  std::vector<bool> seen(G.order(), false);
  std::vector<std::vector<Index>> out;
  for (Index x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    std::set<Index> orbit;
    for (Index g = 0; g < G.order(); ++g) orbit.insert(G.mul(G.mul(g, x), G.inv(g)));
    for (Index y : orbit) seen[y] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subprocesses for the CLI tests.

struct RunResult {
  int code = -1;
  std::string out;
};

/// Runs `cmd` through the shell, capturing standard output; standard error
/// is folded in when `merge_stderr` is set.
inline RunResult run(const std::string& cmd, bool merge_stderr = false) {
  RunResult r;
  FILE* p = popen((cmd + (merge_stderr ? " 2>&1" : " 2>/dev/null")).c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t nl = s.find('\n', start);
    if (nl == std::string::npos) nl = s.size();
    out.push_back(s.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

}  // namespace oracle
