#include "envelope_kit/semilattice.hpp"

#include <algorithm>

#include "envelope_kit/error.hpp"

namespace envkit {

namespace {

std::string pair_label(const Poset& p, Element x, Element y) {
  return "(" + p.name(x) + "," + p.name(y) + ")";
}

}  // namespace

Sus Sus::validate(Poset p, bool require_distributive) {
  Sus s;
  const std::size_t n = p.size();
  if (n == 0) throw Error(ErrorKind::kNoTop, "empty poset");
  const auto top = p.top();
  if (!top) throw Error(ErrorKind::kNoTop, "");
  s.top_ = *top;

  std::vector<std::size_t> up_count(n, 0);
  std::vector<std::size_t> down_count(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (p.leq(x, y)) {
        ++up_count[x];
        ++down_count[y];
      }
    }
  }

  // u is the least upper bound of {x,y} iff it is an upper bound whose
  // up-set has as many elements as the set of all upper bounds.
  s.join_.assign(n * n, kUndefined);
  s.meet_.assign(n * n, kUndefined);
  s.lattice_ = true;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      std::size_t n_upper = 0;
      std::size_t n_lower = 0;
      for (Element z = 0; z < n; ++z) {
        if (p.leq(x, z) && p.leq(y, z)) ++n_upper;
        if (p.leq(z, x) && p.leq(z, y)) ++n_lower;
      }
      Element jn = kUndefined;
      Element mt = kUndefined;
      for (Element z = 0; z < n; ++z) {
        if (p.leq(x, z) && p.leq(y, z) && up_count[z] == n_upper) jn = z;
        if (p.leq(z, x) && p.leq(z, y) && down_count[z] == n_lower) mt = z;
      }
      if (jn == kUndefined) throw Error(ErrorKind::kJoinMissing, pair_label(p, x, y));
      if (n_lower > 0 && mt == kUndefined) {
        throw Error(ErrorKind::kStrongConditionFails, pair_label(p, x, y));
      }
      if (n_lower == 0) s.lattice_ = false;
      s.join_[x * n + y] = s.join_[y * n + x] = jn;
      s.meet_[x * n + y] = s.meet_[y * n + x] = mt;
    }
  }
  s.poset_ = std::move(p);
  s.minimal_ = minimal_elements(s.poset_);

  // Every interval is a sublattice of some [a, top] with a minimal, so those
  // are the only ones that need the distributive law checked.
  s.distributive_ = true;
  for (Element a : s.minimal_) {
    const auto members = s.poset_.up_set(a);
    bool ok = true;
    for (Element x : members) {
      for (Element y : members) {
        for (Element z : members) {
          if (z < y) continue;
          const Element lhs = *s.meet(x, s.join(y, z));
          const Element rhs = s.join(*s.meet(x, y), *s.meet(x, z));
          if (lhs != rhs) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (!ok) {
      if (require_distributive) {
        throw Error(ErrorKind::kIntervalNotDistributive, pair_label(s.poset_, a, s.top_));
      }
      s.distributive_ = false;
      break;
    }
  }
  s.mi_ = ::envkit::meet_irreducibles(s);
  return s;
}

Element Sus::join_all(const ElementSet& xs) const {
  if (xs.empty()) throw Error(ErrorKind::kParseError, "join of an empty set");
  Element acc = xs.front();
  for (Element x : xs) acc = join(acc, x);
  return acc;
}

bool Sus::is_meet_irreducible(Element x) const {
  return std::binary_search(mi_.begin(), mi_.end(), x);
}

std::optional<Element> Sus::bottom() const {
  if (minimal_.size() != 1) return std::nullopt;
  return minimal_.front();
}

SubSus principal_filter(const Sus& s, Element a) {
  SubSus out;
  out.to_parent = s.poset().up_set(a);
  out.from_parent.assign(s.size(), std::nullopt);
  for (Element i = 0; i < out.to_parent.size(); ++i) out.from_parent[out.to_parent[i]] = i;
  out.sus = Sus::validate(s.poset().restrict(out.to_parent), s.distributive());
  return out;
}

ElementSet meet_irreducibles(const Sus& s) {
  const std::size_t n = s.size();
  std::vector<bool> reducible(n, false);
  for (Element p = 0; p < n; ++p) {
    for (Element q = p + 1; q < n; ++q) {
      const auto m = s.meet(p, q);
      if (m && *m != p && *m != q) reducible[*m] = true;
    }
  }
  ElementSet out;
  for (Element x = 0; x < n; ++x) {
    if (!reducible[x] || x == s.top()) out.push_back(x);
  }
  return out;
}

MUp m_up(const Sus& s, Element x) {
  MUp up{x, {}};
  for (Element m : s.meet_irreducibles()) {
    if (s.leq(x, m)) up.members.push_back(m);
  }
  return up;
}

Element wedge(const Sus& s, const ElementSet& xs) {
  if (xs.empty()) throw Error(ErrorKind::kNoLowerBound, "empty set");
  Element acc = xs.front();
  for (Element x : xs) {
    const auto m = s.meet(acc, x);
    if (!m) throw Error(ErrorKind::kNoLowerBound, pair_label(s.poset(), acc, x));
    acc = *m;
  }
  return acc;
}

Element x_plus(const Sus& s, Element x) {
  if (!s.is_meet_irreducible(x)) throw Error(ErrorKind::kNotMeetIrreducible, s.name(x));
  if (x == s.top()) throw Error(ErrorKind::kIsTop, s.name(x));
  ElementSet above;
  for (Element m : s.meet_irreducibles()) {
    if (s.poset().lt(x, m)) above.push_back(m);
  }
  return wedge(s, above);
}

VerificationItem check_wedge_mi(const Sus& s) {
  auto item = make_item("wedge_of_meet_irreducibles");
  for (Element x = 0; x < s.size(); ++x) {
    const auto up = m_up(s, x);
    if (wedge(s, up.members) != x) item.fail("x=" + s.name(x));
  }
  return item;
}

// Parts (ii) and (iii) are checked under the hypotheses their proof uses:
// z not below x for (ii), z incomparable to x for (iii). The unrestricted
// "z != x" reading fails on every chain of length >= 2; the number of such
// pairs is reported in the note.
VerificationItem check_xplus_lemma(const Sus& s) {
  auto item = make_item("x_plus_lemma");
  const auto& p = s.poset();
  std::size_t literal_failures = 0;
  for (Element x : s.meet_irreducibles()) {
    if (x == s.top()) continue;
    const Element xp = x_plus(s, x);
    if (!p.lt(x, xp)) item.fail("(i) x=" + s.name(x));
    for (Element z : s.meet_irreducibles()) {
      if (z == x) continue;
      const bool part2 = s.join(x, z) == s.join(xp, z);
      if (!p.leq(z, x) && !part2) {
        item.fail("(ii) x=" + s.name(x) + " z=" + s.name(z));
      }
      if (!part2) ++literal_failures;
      if (z == s.top()) continue;
      const bool part3 = s.join(x, z) == s.join(xp, x_plus(s, z));
      if (!p.comparable(x, z) && !part3) {
        item.fail("(iii) x=" + s.name(x) + " z=" + s.name(z));
      }
      if (!part3) ++literal_failures;
    }
  }
  item.note = "unrestricted-reading counterexamples: " + std::to_string(literal_failures);
  return item;
}

}  // namespace envkit
