#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "envelope_kit/semilattice.hpp"
#include "envelope_kit/verification.hpp"

namespace envkit {

// An order filter of <M, <=> as a bit mask over positions in M.
using FilterMask = std::uint64_t;
using FilterIndex = std::size_t;

constexpr std::size_t kDefaultFilterCap = 20;
// |M| limit for materialising the filter lattice; ENVELOPE_KIT_SIZE_CAP
// overrides the default, clamped to 63.
std::size_t filter_size_cap();

// The lattice D of nonempty order filters of the meet-irreducibles,
// ordered by reverse inclusion: join is intersection, meet is union, {top}
// is the greatest element and M the least.
class FilterLattice {
 public:
  // Throws SizeCap when |M| exceeds `cap`.
  static FilterLattice build(const Sus& s, std::size_t cap = filter_size_cap());

  const Sus& source() const noexcept { return source_; }
  std::size_t size() const noexcept { return filters_.size(); }
  const std::vector<FilterMask>& masks() const noexcept { return filters_; }
  FilterMask mask(FilterIndex f) const { return filters_[f]; }
  std::optional<FilterIndex> index_of(FilterMask m) const;
  FilterIndex index_of_members(const ElementSet& members) const;

  // Meet-irreducibles of the source and the bit position of each.
  const ElementSet& generators() const noexcept { return mi_; }
  std::optional<std::size_t> bit_of(Element m) const;
  FilterMask mask_of(const ElementSet& members) const;
  ElementSet members(FilterIndex f) const;

  bool leq(FilterIndex f, FilterIndex g) const {
    return (filters_[f] & filters_[g]) == filters_[g];
  }
  FilterIndex join(FilterIndex f, FilterIndex g) const;
  FilterIndex meet(FilterIndex f, FilterIndex g) const;
  FilterIndex top() const noexcept { return top_; }
  FilterIndex bottom() const noexcept { return bottom_; }

  FilterIndex nu(Element x) const { return nu_[x]; }
  const std::vector<FilterIndex>& nu_table() const noexcept { return nu_; }

  std::string label(FilterIndex f) const;
  // D as a poset/semilattice in its own right (labels are "{a,1}" style).
  Sus as_sus() const;

 private:
  Sus source_;
  ElementSet mi_;
  std::vector<std::optional<std::size_t>> bit_;
  std::vector<FilterMask> filters_;
  std::unordered_map<FilterMask, FilterIndex> index_;
  std::vector<FilterIndex> nu_;
  FilterIndex top_ = 0;
  FilterIndex bottom_ = 0;
};

inline FilterLattice build_envelope(const Sus& s) { return FilterLattice::build(s); }

// The filter M^x.
FilterIndex nu(const FilterLattice& e, Element x);

// Meet inside [a, top] of F ∩ [a, top]. Throws NotMinimal.
Element f_a(const FilterLattice& e, Element a, FilterIndex f);

VerificationItem check_embedding(const FilterLattice& e);
VerificationItem check_fa_lemmas(const FilterLattice& e);

// A map between semilattices whose preservation flags were computed, never
// declared. Domain and codomain are non-owning and must outlive the value.
struct SemiHom {
  const Sus* domain = nullptr;
  const Sus* codomain = nullptr;
  std::vector<Element> map;
  bool preserves_join = false;
  bool preserves_top = false;
  bool preserves_extant_meets = false;

  bool verified() const noexcept {
    return preserves_join && preserves_top && preserves_extant_meets;
  }
  Element operator()(Element x) const { return map[x]; }
};

SemiHom make_semi_hom(const Sus& domain, const Sus& codomain, std::vector<Element> map);

// F -> meet of the images of F. Throws FlagsNotVerified, NotALattice.
std::vector<Element> extend_hom(const FilterLattice& e, const SemiHom& h);

struct UniversalCheck {
  VerificationItem item;
  // Whether the extension sends the least filter to the codomain bottom.
  bool preserves_zero = true;
};
UniversalCheck check_universal(const FilterLattice& e, const SemiHom& h);

}  // namespace envkit
