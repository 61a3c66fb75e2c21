#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace envkit {

// Elements are positional indices; labels only matter for I/O.
using Element = std::size_t;
using ElementSet = std::vector<Element>;  // kept sorted ascending
using LabeledPair = std::pair<std::string, std::string>;

// A finite partial order stored as a dense relation matrix together with its
// cover relation (the transitive reduction).
class Poset {
 public:
  Poset() = default;

  // Reflexive-transitive closure of `covers` over the declared elements.
  // Redundant pairs are accepted and dropped from the stored cover list.
  static Poset from_covers(std::vector<std::string> names,
                           const std::vector<LabeledPair>& covers);
  static Poset from_index_covers(std::vector<std::string> names,
                                 const std::vector<std::pair<Element, Element>>& covers);
  // `leq` is row-major n*n; must already be a partial order.
  static Poset from_relation(std::vector<std::string> names, std::vector<std::uint8_t> leq);

  std::size_t size() const noexcept { return names_.size(); }
  bool leq(Element x, Element y) const { return leq_[x * size() + y] != 0; }
  bool lt(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Element> find(const std::string& label) const;

  const std::vector<std::pair<Element, Element>>& covers() const noexcept { return covers_; }
  const std::vector<std::uint8_t>& relation() const noexcept { return leq_; }

  // Upper covers of x, ascending.
  ElementSet upper_covers(Element x) const;
  ElementSet lower_covers(Element x) const;
  ElementSet up_set(Element x) const;
  ElementSet down_set(Element x) const;

  std::optional<Element> top() const;
  std::optional<Element> bottom() const;

  // Induced subposet on `members` (ascending), relabelled 0..k-1.
  Poset restrict(const ElementSet& members) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

 private:
  Poset(std::vector<std::string> names, std::vector<std::uint8_t> leq);

  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::pair<Element, Element>> covers_;
};

// The closed interval [bottom, top] of a parent poset.
struct SubIntervalView {
  const Poset* parent = nullptr;
  Element bottom = 0;
  Element top = 0;
  ElementSet members;

  std::size_t size() const noexcept { return members.size(); }
};

ElementSet upper_bounds(const Poset& p, const ElementSet& xs);
ElementSet lower_bounds(const Poset& p, const ElementSet& xs);
ElementSet minimal_elements(const Poset& p);
ElementSet maximal_elements(const Poset& p);
// Minimal members of a subset, under the poset order.
ElementSet minimal_of(const Poset& p, const ElementSet& xs);
ElementSet maximal_of(const Poset& p, const ElementSet& xs);

// Throws NotComparable when a is not below b.
SubIntervalView interval(const Poset& p, Element a, Element b);
// A view over the whole poset; bottom/top are meaningless unless they exist.
SubIntervalView full_view(const Poset& p);

// Length of the longest chain from x up to the greatest element. Throws NoTop.
std::size_t coheight(const Poset& p, Element x);

// Least upper bound / greatest lower bound of a pair restricted to a view.
std::optional<Element> view_join(const SubIntervalView& v, Element x, Element y);
std::optional<Element> view_meet(const SubIntervalView& v, Element x, Element y);

bool is_lattice(const SubIntervalView& v);
// Direct check of x∧(y∨z) = (x∧y)∨(x∧z) over all triples. Throws NotALattice.
bool is_distributive(const SubIntervalView& v);

}  // namespace envkit
