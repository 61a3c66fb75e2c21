#pragma once

#include <string>
#include <vector>

#include "envelope_kit/birkhoff.hpp"
#include "envelope_kit/integer_lattice.hpp"
#include "envelope_kit/semilattice.hpp"
#include "envelope_kit/verification.hpp"

namespace envkit {

// An element of the free abelian group on L: one coefficient per element.
using FreeVector = IntVector;

// Nonzero generators a∨b∨c + (a∨c)∧(b∨c) - a∨c - b∨c over all ordered
// triples with the meet defined, deduplicated, in first-seen order. Each is
// e(x∨y) + e(x∧y) - e(x) - e(y) for x = a∨c, y = b∨c incomparable.
std::vector<FreeVector> relation_generators(const Sus& s);

// V(L): the free abelian group on L modulo the relation submodule, with the
// product induced by join.
class ValuationRing {
 public:
  static ValuationRing build(const Sus& s);

  const Sus& source() const noexcept { return source_; }
  std::size_t dim() const noexcept { return source_.size(); }
  const std::vector<FreeVector>& generators() const noexcept { return generators_; }
  const HermiteBasis& relations() const noexcept { return relations_; }
  const std::vector<Integer>& snf_invariants() const noexcept { return snf_; }
  bool torsion_free() const;
  std::size_t rank() const noexcept { return dim() - relations_.rank(); }
  // Non-pivot coordinates; a free basis of the quotient when every pivot is 1.
  const std::vector<std::size_t>& basis_columns() const noexcept { return basis_cols_; }
  bool unit_pivots() const;

  const FreeVector& iota(Element x) const { return iota_[x]; }
  const std::vector<FreeVector>& iota_table() const noexcept { return iota_; }

  FreeVector canonical(FreeVector v) const { return relations_.reduce(std::move(v)); }
  bool equivalent(const FreeVector& v, const FreeVector& w) const;
  FreeVector multiply(const FreeVector& u, const FreeVector& v) const;
  // Coefficients of canonical(v) on basis_columns(). Requires unit_pivots().
  IntVector coordinates(const FreeVector& v) const;

  std::string format(const FreeVector& v) const;

 private:
  Sus source_;
  std::vector<FreeVector> generators_;
  HermiteBasis relations_;
  std::vector<Integer> snf_;
  std::vector<std::size_t> basis_cols_;
  std::vector<FreeVector> iota_;
};

inline ValuationRing build_vring(const Sus& s) { return ValuationRing::build(s); }
inline FreeVector iota(const ValuationRing& r, Element x) { return r.iota(x); }
inline FreeVector canonical(const ValuationRing& r, FreeVector v) { return r.canonical(std::move(v)); }
inline FreeVector multiply(const ValuationRing& r, const FreeVector& u, const FreeVector& v) {
  return r.multiply(u, v);
}

// A function L -> Z (modulus 0) or L -> Z/m.
struct GroupValuation {
  unsigned long modulus = 0;
  std::vector<Integer> values;

  Integer reduce(Integer v) const;
};

bool is_valuation(const Sus& s, const GroupValuation& f);

// The linear extension of a valuation to Z^L; it vanishes on the relations.
class GroupHom {
 public:
  GroupHom(unsigned long modulus, std::vector<Integer> values)
      : f_{modulus, std::move(values)} {}
  Integer operator()(const FreeVector& v) const;
  unsigned long modulus() const noexcept { return f_.modulus; }

 private:
  GroupValuation f_;
};

// Throws NotAValuation.
GroupHom induced_hom(const ValuationRing& r, const GroupValuation& f);

// The group map V(L1) -> V(L2) extending x -> iota2(h(x)). Non-owning.
class RingMap {
 public:
  RingMap(const ValuationRing& from, const ValuationRing& to, std::vector<FreeVector> images)
      : from_(&from), to_(&to), images_(std::move(images)) {}

  FreeVector operator()(const FreeVector& v) const;
  const std::vector<FreeVector>& images() const noexcept { return images_; }
  const ValuationRing& from() const noexcept { return *from_; }
  const ValuationRing& to() const noexcept { return *to_; }

 private:
  const ValuationRing* from_;
  const ValuationRing* to_;
  std::vector<FreeVector> images_;
};

// Throws FlagsNotVerified, or NotWellDefined if a relation of L1 survives.
RingMap v_functor(const ValuationRing& r1, const ValuationRing& r2, const SemiHom& h);

// Additive and multiplicative on canonical forms, checked on all pairs of
// generators of Z^L1.
VerificationItem check_ring_map(const RingMap& map);

VerificationItem check_ideal(const ValuationRing& r);
VerificationItem check_iota_injective(const ValuationRing& r);
VerificationItem check_infinite_order(const ValuationRing& r);
// rank = |M|, invariant factors all 1, basis columns = M and {iota(m)} a basis.
VerificationItem check_basis(const ValuationRing& r);
// Throws NotMinimal.
VerificationItem check_retract(const ValuationRing& r, Element a);

// Z/2 indicators of the prime filters of a lattice. Throws NotALattice.
std::vector<GroupValuation> prime_filter_valuations(const Sus& s);
// Each indicator is a valuation and every pair of elements is separated.
// Not applicable when s is not a lattice.
VerificationItem check_prime_filter_separation(const Sus& s);

}  // namespace envkit
