#include "envelope_kit/poset.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "envelope_kit/error.hpp"

namespace envkit {

namespace {

void check_unique(const std::vector<std::string>& names) {
  std::unordered_map<std::string, Element> seen;
  for (Element i = 0; i < names.size(); ++i) {
    if (!seen.emplace(names[i], i).second) {
      throw Error(ErrorKind::kDuplicateLabel, names[i]);
    }
  }
}

// Warshall closure in place.
void close_transitively(std::vector<std::uint8_t>& rel, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[k * n + j]) rel[i * n + j] = 1;
      }
    }
  }
}

}  // namespace

Poset::Poset(std::vector<std::string> names, std::vector<std::uint8_t> leq)
    : names_(std::move(names)), leq_(std::move(leq)) {
  const std::size_t n = names_.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!lt(x, y)) continue;
      bool is_cover = true;
      for (Element z = 0; z < n && is_cover; ++z) {
        if (lt(x, z) && lt(z, y)) is_cover = false;
      }
      if (is_cover) covers_.emplace_back(x, y);
    }
  }
}

Poset Poset::from_covers(std::vector<std::string> names,
                         const std::vector<LabeledPair>& covers) {
  check_unique(names);
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    if (a == index.end()) throw Error(ErrorKind::kUnknownLabel, lo);
    auto b = index.find(hi);
    if (b == index.end()) throw Error(ErrorKind::kUnknownLabel, hi);
    pairs.emplace_back(a->second, b->second);
  }
  return from_index_covers(std::move(names), pairs);
}

Poset Poset::from_index_covers(std::vector<std::string> names,
                               const std::vector<std::pair<Element, Element>>& covers) {
  check_unique(names);
  const std::size_t n = names.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  for (Element i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw Error(ErrorKind::kUnknownLabel, "index out of range");
    rel[lo * n + hi] = 1;
  }
  close_transitively(rel, n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (rel[i * n + j] && rel[j * n + i]) {
        throw Error(ErrorKind::kCycleDetected, "(" + names[i] + "," + names[j] + ")");
      }
    }
  }
  return Poset(std::move(names), std::move(rel));
}

Poset Poset::from_relation(std::vector<std::string> names, std::vector<std::uint8_t> leq) {
  check_unique(names);
  const std::size_t n = names.size();
  if (leq.size() != n * n) throw Error(ErrorKind::kParseError, "relation has wrong shape");
  for (Element i = 0; i < n; ++i) {
    if (!leq[i * n + i]) throw Error(ErrorKind::kParseError, "relation is not reflexive");
    for (Element j = 0; j < n; ++j) {
      if (i != j && leq[i * n + j] && leq[j * n + i]) {
        throw Error(ErrorKind::kCycleDetected, "(" + names[i] + "," + names[j] + ")");
      }
      if (!leq[i * n + j]) continue;
      for (Element k = 0; k < n; ++k) {
        if (leq[j * n + k] && !leq[i * n + k]) {
          throw Error(ErrorKind::kParseError, "relation is not transitive");
        }
      }
    }
  }
  return Poset(std::move(names), std::move(leq));
}

std::optional<Element> Poset::find(const std::string& label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

ElementSet Poset::upper_covers(Element x) const {
  ElementSet out;
  for (const auto& [lo, hi] : covers_) {
    if (lo == x) out.push_back(hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet Poset::lower_covers(Element x) const {
  ElementSet out;
  for (const auto& [lo, hi] : covers_) {
    if (hi == x) out.push_back(lo);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet Poset::up_set(Element x) const {
  ElementSet out;
  for (Element y = 0; y < size(); ++y) {
    if (leq(x, y)) out.push_back(y);
  }
  return out;
}

ElementSet Poset::down_set(Element x) const {
  ElementSet out;
  for (Element y = 0; y < size(); ++y) {
    if (leq(y, x)) out.push_back(y);
  }
  return out;
}

std::optional<Element> Poset::top() const {
  auto maxima = maximal_elements(*this);
  if (maxima.size() != 1) return std::nullopt;
  return maxima.front();
}

std::optional<Element> Poset::bottom() const {
  auto minima = minimal_elements(*this);
  if (minima.size() != 1) return std::nullopt;
  return minima.front();
}

Poset Poset::restrict(const ElementSet& members) const {
  const std::size_t k = members.size();
  std::vector<std::string> names;
  names.reserve(k);
  std::vector<std::uint8_t> rel(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(names_[members[i]]);
    for (std::size_t j = 0; j < k; ++j) {
      rel[i * k + j] = leq(members[i], members[j]) ? 1 : 0;
    }
  }
  return Poset(std::move(names), std::move(rel));
}

ElementSet upper_bounds(const Poset& p, const ElementSet& xs) {
  ElementSet out;
  for (Element u = 0; u < p.size(); ++u) {
    if (std::all_of(xs.begin(), xs.end(), [&](Element x) { return p.leq(x, u); })) {
      out.push_back(u);
    }
  }
  return out;
}

ElementSet lower_bounds(const Poset& p, const ElementSet& xs) {
  ElementSet out;
  for (Element l = 0; l < p.size(); ++l) {
    if (std::all_of(xs.begin(), xs.end(), [&](Element x) { return p.leq(l, x); })) {
      out.push_back(l);
    }
  }
  return out;
}

ElementSet minimal_of(const Poset& p, const ElementSet& xs) {
  ElementSet out;
  for (Element x : xs) {
    if (std::none_of(xs.begin(), xs.end(), [&](Element y) { return p.lt(y, x); })) {
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet maximal_of(const Poset& p, const ElementSet& xs) {
  ElementSet out;
  for (Element x : xs) {
    if (std::none_of(xs.begin(), xs.end(), [&](Element y) { return p.lt(x, y); })) {
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

ElementSet all_elements(const Poset& p) {
  ElementSet all(p.size());
  for (Element i = 0; i < p.size(); ++i) all[i] = i;
  return all;
}

}  // namespace

ElementSet minimal_elements(const Poset& p) { return minimal_of(p, all_elements(p)); }
ElementSet maximal_elements(const Poset& p) { return maximal_of(p, all_elements(p)); }

SubIntervalView interval(const Poset& p, Element a, Element b) {
  if (!p.leq(a, b)) {
    throw Error(ErrorKind::kNotComparable, "(" + p.name(a) + "," + p.name(b) + ")");
  }
  SubIntervalView view{&p, a, b, {}};
  for (Element x = 0; x < p.size(); ++x) {
    if (p.leq(a, x) && p.leq(x, b)) view.members.push_back(x);
  }
  return view;
}

SubIntervalView full_view(const Poset& p) {
  SubIntervalView view{&p, 0, 0, all_elements(p)};
  if (auto b = p.bottom()) view.bottom = *b;
  if (auto t = p.top()) view.top = *t;
  return view;
}

std::size_t coheight(const Poset& p, Element x) {
  const auto top = p.top();
  if (!top) throw Error(ErrorKind::kNoTop, "");
  // Longest path in the cover graph, memoised top-down.
  std::vector<std::optional<std::size_t>> memo(p.size());
  auto visit = [&](auto&& self, Element y) -> std::size_t {
    if (memo[y]) return *memo[y];
    std::size_t best = 0;
    for (Element up : p.upper_covers(y)) best = std::max(best, self(self, up) + 1);
    memo[y] = best;
    return best;
  };
  return visit(visit, x);
}

std::optional<Element> view_join(const SubIntervalView& v, Element x, Element y) {
  const Poset& p = *v.parent;
  for (Element w : v.members) {
    if (!p.leq(x, w) || !p.leq(y, w)) continue;
    bool least = true;
    for (Element z : v.members) {
      if (p.leq(x, z) && p.leq(y, z) && !p.leq(w, z)) {
        least = false;
        break;
      }
    }
    if (least) return w;
  }
  return std::nullopt;
}

std::optional<Element> view_meet(const SubIntervalView& v, Element x, Element y) {
  const Poset& p = *v.parent;
  for (Element w : v.members) {
    if (!p.leq(w, x) || !p.leq(w, y)) continue;
    bool greatest = true;
    for (Element z : v.members) {
      if (p.leq(z, x) && p.leq(z, y) && !p.leq(z, w)) {
        greatest = false;
        break;
      }
    }
    if (greatest) return w;
  }
  return std::nullopt;
}

namespace {

struct ViewTables {
  std::vector<Element> join;  // positions within the view
  std::vector<Element> meet;
};

std::optional<ViewTables> view_tables(const SubIntervalView& v) {
  const std::size_t k = v.size();
  std::map<Element, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) pos.emplace(v.members[i], i);
  ViewTables t{std::vector<Element>(k * k), std::vector<Element>(k * k)};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      auto jn = view_join(v, v.members[i], v.members[j]);
      auto mt = view_meet(v, v.members[i], v.members[j]);
      if (!jn || !mt) return std::nullopt;
      t.join[i * k + j] = t.join[j * k + i] = pos.at(*jn);
      t.meet[i * k + j] = t.meet[j * k + i] = pos.at(*mt);
    }
  }
  return t;
}

}  // namespace

bool is_lattice(const SubIntervalView& v) { return view_tables(v).has_value(); }

bool is_distributive(const SubIntervalView& v) {
  auto tables = view_tables(v);
  if (!tables) throw Error(ErrorKind::kNotALattice, "");
  const std::size_t k = v.size();
  const auto& jn = tables->join;
  const auto& mt = tables->meet;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      for (std::size_t z = y; z < k; ++z) {
        const auto lhs = mt[x * k + jn[y * k + z]];
        const auto rhs = jn[mt[x * k + y] * k + mt[x * k + z]];
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

}  // namespace envkit
