#pragma once

// Brute-force reference implementations used only by the tests. They work
// from the raw relation matrix and share no code with the library beyond
// the Poset accessors.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "envelope_kit/poset.hpp"

namespace oracle {

using envkit::Element;
using envkit::Poset;
using Relation = std::vector<std::vector<bool>>;

inline Relation relation_of(const Poset& p) {
  Relation r(p.size(), std::vector<bool>(p.size()));
  for (Element i = 0; i < p.size(); ++i) {
    for (Element j = 0; j < p.size(); ++j) r[i][j] = p.leq(i, j);
  }
  return r;
}

// Floyd-Warshall closure of a cover list.
inline Relation closure(std::size_t n, const std::vector<std::pair<Element, Element>>& covers) {
  Relation r(n, std::vector<bool>(n, false));
  for (Element i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& [a, b] : covers) r[a][b] = true;
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

inline std::optional<Element> glb(const Relation& r, Element x, Element y) {
  const std::size_t n = r.size();
  std::vector<Element> lower;
  for (Element z = 0; z < n; ++z) {
    if (r[z][x] && r[z][y]) lower.push_back(z);
  }
  for (Element g : lower) {
    if (std::all_of(lower.begin(), lower.end(), [&](Element z) { return r[z][g]; })) return g;
  }
  return std::nullopt;
}

inline std::optional<Element> lub(const Relation& r, Element x, Element y) {
  const std::size_t n = r.size();
  std::vector<Element> upper;
  for (Element z = 0; z < n; ++z) {
    if (r[x][z] && r[y][z]) upper.push_back(z);
  }
  for (Element u : upper) {
    if (std::all_of(upper.begin(), upper.end(), [&](Element z) { return r[u][z]; })) return u;
  }
  return std::nullopt;
}

inline bool is_lattice(const Relation& r) {
  for (Element x = 0; x < r.size(); ++x) {
    for (Element y = 0; y < r.size(); ++y) {
      if (!glb(r, x, y) || !lub(r, x, y)) return false;
    }
  }
  return true;
}

// A lattice is distributive iff it has no sublattice shaped like M3 or N5.
inline bool has_forbidden_sublattice(const Relation& r) {
  const std::size_t n = r.size();
  if (n < 5) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + 5, true);
  do {
    std::vector<Element> s;
    for (Element i = 0; i < n; ++i) {
      if (pick[i]) s.push_back(i);
    }
    bool closed = true;
    for (Element x : s) {
      for (Element y : s) {
        const auto j = lub(r, x, y);
        const auto m = glb(r, x, y);
        if (std::find(s.begin(), s.end(), *j) == s.end() || std::find(s.begin(), s.end(), *m) == s.end()) {
          closed = false;
        }
      }
    }
    if (!closed) continue;
    // Bottom and top of the sublattice, then the three middle elements.
    Element lo = s[0], hi = s[0];
    for (Element x : s) {
      if (r[x][lo]) lo = x;
      if (r[hi][x]) hi = x;
    }
    std::vector<Element> mid;
    for (Element x : s) {
      if (x != lo && x != hi) mid.push_back(x);
    }
    int comparable_pairs = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (r[mid[i]][mid[j]] || r[mid[j]][mid[i]]) ++comparable_pairs;
      }
    }
    if (comparable_pairs == 0 || comparable_pairs == 1) return true;  // M3 or N5
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

// Nonempty up-closed subsets of `members`, as sorted element lists.
inline std::set<std::vector<Element>> up_sets(const Relation& r, const std::vector<Element>& members) {
  std::set<std::vector<Element>> out;
  const std::size_t k = members.size();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
    std::vector<Element> set;
    for (std::size_t i = 0; i < k; ++i) {
      if (bits >> i & 1U) set.push_back(members[i]);
    }
    bool closed = true;
    for (Element x : set) {
      for (Element m : members) {
        if (r[x][m] && std::find(set.begin(), set.end(), m) == set.end()) closed = false;
      }
    }
    if (closed) {
      std::sort(set.begin(), set.end());
      out.insert(set);
    }
  }
  return out;
}

// Every partial order on n points, by filtering all relations.
inline std::vector<Relation> all_orders(std::size_t n) {
  std::vector<std::pair<Element, Element>> slots;
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }
  std::vector<Relation> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    Relation r(n, std::vector<bool>(n, false));
    for (Element i = 0; i < n; ++i) r[i][i] = true;
    bool ok = true;
    for (std::size_t s = 0; s < slots.size() && ok; ++s) {
      if (!(bits >> s & 1U)) continue;
      const auto [i, j] = slots[s];
      if (r[j][i]) ok = false;  // antisymmetry, j<i was set earlier
      r[i][j] = true;
    }
    for (Element i = 0; i < n && ok; ++i) {
      for (Element j = 0; j < n && ok; ++j) {
        for (Element k = 0; k < n && ok; ++k) {
          if (r[i][j] && r[j][k] && !r[i][k]) ok = false;
        }
      }
    }
    if (ok) out.push_back(std::move(r));
  }
  return out;
}

// Lexicographically least relation code over all n! relabellings.
inline std::vector<bool> canonical_code(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) code.push_back(r[perm[i]][perm[j]]);
    }
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::size_t count_up_to_iso(std::size_t n) {
  std::set<std::vector<bool>> classes;
  for (const auto& r : all_orders(n)) classes.insert(canonical_code(r));
  return classes.size();
}

// Rank over Q by plain Gaussian elimination.
inline std::size_t rational_rank(const std::vector<std::vector<mpz_class>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<mpq_class>> m;
  for (const auto& row : rows) m.emplace_back(row.begin(), row.end());
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
