#pragma once

#include <cstdint>
#include <vector>

#include "envelope_kit/birkhoff.hpp"
#include "envelope_kit/valuation_ring.hpp"
#include "envelope_kit/verification.hpp"

namespace envkit {

// Which subsets B of the minimal elements enter the alternating sum for a
// meet inside V(L).
enum class SubsetConvention {
  // Every nonempty B; the inclusion-exclusion form.
  kNonempty,
  // Proper nonempty B only (B != X_(m)), as the displayed envelope formula
  // reads. Kept to demonstrate that it breaks on singletons.
  kLiteralProper,
};

constexpr std::size_t kSubsetSumCap = 20;

ElementSet minimals(const Sus& s, const ElementSet& xs);

// canonical(iota(x) + iota(y) - iota(x∨y)).
FreeVector pair_meet_v(const ValuationRing& r, Element x, Element y);

// Alternating sum of iota(⋁B) over subsets B of the minimal elements of X.
// Throws SizeCap above kSubsetSumCap minimal elements.
FreeVector meet_in_v(const ValuationRing& r, const ElementSet& xs,
                     SubsetConvention convention = SubsetConvention::kNonempty);

// The range of meet_in_v, paired with the filter F_X each element stands for.
struct VEnvelope {
  std::vector<FreeVector> elements;     // indexed like the filters of D
  std::vector<FilterIndex> filter_of;   // elements[i] represents filter_of[i]
  std::vector<ElementSet> generated_by; // an antichain X with that value

  std::size_t size() const noexcept { return elements.size(); }
};

// Enumerates every nonempty antichain X of L. Throws PairingFailure if two
// antichains with the same filter give different values, or the pairing is
// not a bijection onto D.
VEnvelope build_venvelope(const ValuationRing& r, const FilterLattice& e);

// Virtual meet through the localisations f_a. Throws SizeCap on |A| > 20.
FreeVector i_of(const ValuationRing& r, const FilterLattice& e, FilterIndex f);
// Alternating sum over every nonempty H ⊆ F. Throws SizeCap on |F| > 20.
FreeVector j_of(const ValuationRing& r, const FilterLattice& e, FilterIndex f);

// meet_in_v(X) = iota(wedge X) for every X with a lower bound.
VerificationItem check_ie_oracle(const ValuationRing& r);
// meet_in_v(X) = meet_in_v(minimals(X)) for every nonempty X.
VerificationItem check_minimals_sufficiency(const ValuationRing& r);
// Singletons and existing glbs under the nonempty convention; the note
// counts how many of the same cases the literal convention gets wrong.
VerificationItem check_meet_convention(const ValuationRing& r);

// The two envelopes agree: i = j = meet_in_v on every filter, the envelope
// pairs bijectively with D, the ring product and the induced meet realise
// D's join and meet, V(nu): V(L) -> V(D) is an isomorphism, M(D) = nu(M),
// and valuations on L lift to D and restrict back unchanged.
VerificationItem check_equivalence(const ValuationRing& r, const FilterLattice& e,
                                   std::uint64_t seed = 0);

}  // namespace envkit
