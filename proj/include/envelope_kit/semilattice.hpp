#pragma once

#include <optional>
#include <string>
#include <vector>

#include "envelope_kit/poset.hpp"
#include "envelope_kit/verification.hpp"

namespace envkit {

// A validated strong upper semilattice: greatest element, total join, and a
// meet for every pair that has a common lower bound. Immutable once built.
class Sus {
 public:
  Sus() = default;

  // Validates the axioms and fills the tables. With `require_distributive`
  // every interval [a, top] must be a distributive lattice.
  static Sus validate(Poset p, bool require_distributive = true);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  Element top() const noexcept { return top_; }
  const std::string& name(Element x) const { return poset_.name(x); }
  bool leq(Element x, Element y) const { return poset_.leq(x, y); }

  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  std::optional<Element> meet(Element x, Element y) const {
    const auto m = meet_[x * size() + y];
    if (m == kUndefined) return std::nullopt;
    return m;
  }
  Element join_all(const ElementSet& xs) const;

  const ElementSet& meet_irreducibles() const noexcept { return mi_; }
  const ElementSet& minimal() const noexcept { return minimal_; }
  bool is_meet_irreducible(Element x) const;
  bool distributive() const noexcept { return distributive_; }
  // True when the meet is total.
  bool is_lattice() const noexcept { return lattice_; }
  std::optional<Element> bottom() const;

 private:
  static constexpr Element kUndefined = static_cast<Element>(-1);

  Poset poset_;
  Element top_ = 0;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  ElementSet mi_;
  ElementSet minimal_;
  bool distributive_ = false;
  bool lattice_ = false;
};

// The interval [a, top] as a semilattice of its own, with the embedding map.
struct SubSus {
  Sus sus;
  std::vector<Element> to_parent;
  std::vector<std::optional<Element>> from_parent;
};
SubSus principal_filter(const Sus& s, Element a);

// Membership M^x = { m in M : x <= m }.
struct MUp {
  Element x = 0;
  ElementSet members;
};

// m is meet-irreducible when no defined meet p∧q = m has p, q both above m;
// the top is included.
ElementSet meet_irreducibles(const Sus& s);
MUp m_up(const Sus& s, Element x);
// Greatest lower bound by left fold of binary meets. Throws NoLowerBound.
Element wedge(const Sus& s, const ElementSet& xs);
// glb of the meet-irreducibles strictly above x. Throws NotMeetIrreducible, IsTop.
Element x_plus(const Sus& s, Element x);

VerificationItem check_wedge_mi(const Sus& s);
VerificationItem check_xplus_lemma(const Sus& s);

}  // namespace envkit
