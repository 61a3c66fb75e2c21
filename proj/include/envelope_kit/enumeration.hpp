#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "envelope_kit/poset.hpp"
#include "envelope_kit/semilattice.hpp"
#include "envelope_kit/verification.hpp"

namespace envkit {

constexpr std::size_t kMaxEnumerationSize = 7;

// Canonical relabelling of a poset: `order[i]` is the original element put
// at position i, and `code` is the relation matrix read in that order.
// Colour refinement by up/down-set signatures, then the lexicographically
// least code over orderings that respect the colour classes.
struct CanonicalForm {
  std::vector<Element> order;
  std::vector<std::uint8_t> code;
  bool exact = true;  // false when the search budget ran out
};
CanonicalForm canonical_form(const Poset& p);
bool isomorphic(const Poset& a, const Poset& b);
// Hex FNV-1a of the canonical code; prefixed "L" when not iso-invariant.
std::string instance_id(const Poset& p);

// Every partial order on n elements, or one representative per
// isomorphism class. Throws SizeCap outside 1..7.
void for_each_poset(std::size_t n, bool up_to_iso, const std::function<void(const Poset&)>& visit);
std::vector<Poset> gen_posets(std::size_t n, bool up_to_iso);
std::uint64_t count_posets(std::size_t n, bool up_to_iso);

// Distributive strong upper semilattices on n elements, up to isomorphism.
std::vector<Sus> gen_dsus(std::size_t n);

struct SuiteOptions {
  std::uint64_t seed = 0;
  // Cap on the number of Boolean-lattice codomains tried for the
  // universal property.
  std::size_t max_codomains = 256;
};

struct VerificationReport {
  std::string instance_id;
  Poset poset;
  std::vector<VerificationItem> items;
  // Some extension of a homomorphism missed the codomain's bottom.
  bool zero_not_preserved = false;

  bool all_passed() const;
  std::size_t failures() const;
};

VerificationReport run_suite(const Sus& s, const SuiteOptions& options = {});

struct SizeSummary {
  std::size_t size = 0;
  std::uint64_t posets = 0;  // up to isomorphism
  std::size_t instances = 0;
  std::size_t passed = 0;
};

struct SweepSummary {
  std::size_t max_size = 0;
  std::vector<SizeSummary> sizes;
  std::vector<VerificationReport> reports;  // size, then canonical order
  std::size_t instances = 0;
  std::size_t failures = 0;                 // failing items across all reports
  std::size_t zero_caveat_instances = 0;
  double seconds = 0.0;
};

// Throws SizeCap above 7.
SweepSummary sweep(std::size_t max_size, std::size_t jobs = 1, const SuiteOptions& options = {});

}  // namespace envkit
