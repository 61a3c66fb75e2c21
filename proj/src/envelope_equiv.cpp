#include "envelope_kit/envelope_equiv.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "envelope_kit/error.hpp"

namespace envkit {

namespace {

// sum over selected subsets B of items: sign(|B|) * iota(⋁B)
FreeVector alternating_join_sum(const ValuationRing& r, const ElementSet& items,
                                bool skip_full) {
  const std::size_t k = items.size();
  if (k > kSubsetSumCap) {
    throw Error(ErrorKind::kSizeCap, std::to_string(k) + " terms exceed " +
                                         std::to_string(kSubsetSumCap));
  }
  const Sus& s = r.source();
  FreeVector total = zero_vector(r.dim());
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (skip_full && mask == full) continue;
    Element acc = 0;
    int count = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1U)) continue;
      acc = count == 0 ? items[i] : s.join(acc, items[i]);
      ++count;
    }
    total[acc] += count % 2 == 1 ? 1 : -1;
  }
  return r.canonical(std::move(total));
}

void for_each_subset(std::size_t n, const auto& visit) {
  if (n > kSubsetSumCap) {
    throw Error(ErrorKind::kSizeCap, "2^" + std::to_string(n) + " subsets");
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet xs;
    for (Element x = 0; x < n; ++x) {
      if (mask >> x & 1U) xs.push_back(x);
    }
    visit(xs);
  }
}

std::string set_label(const Sus& s, const ElementSet& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += s.name(xs[i]);
  }
  return out + "}";
}

FreeVector difference(FreeVector a, const FreeVector& b) {
  add_scaled(a, b, -1);
  return a;
}

}  // namespace

ElementSet minimals(const Sus& s, const ElementSet& xs) { return minimal_of(s.poset(), xs); }

FreeVector pair_meet_v(const ValuationRing& r, Element x, Element y) {
  FreeVector v = r.iota(x);
  add_scaled(v, r.iota(y), 1);
  add_scaled(v, r.iota(r.source().join(x, y)), -1);
  return r.canonical(std::move(v));
}

FreeVector meet_in_v(const ValuationRing& r, const ElementSet& xs, SubsetConvention convention) {
  return alternating_join_sum(r, minimals(r.source(), xs),
                              convention == SubsetConvention::kLiteralProper);
}

VEnvelope build_venvelope(const ValuationRing& r, const FilterLattice& e) {
  const Sus& s = r.source();
  std::vector<std::optional<FreeVector>> by_filter(e.size());
  std::vector<ElementSet> witness(e.size());

  ElementSet chosen;
  auto visit = [&](auto&& self, Element next) -> void {
    if (!chosen.empty()) {
      FilterMask mask = 0;
      for (Element x : chosen) mask |= e.mask(e.nu(x));
      const FilterIndex f = *e.index_of(mask);
      auto value = meet_in_v(r, chosen);
      if (!by_filter[f]) {
        by_filter[f] = std::move(value);
        witness[f] = chosen;
      } else if (*by_filter[f] != value) {
        throw Error(ErrorKind::kPairingFailure,
                    set_label(s, witness[f]) + " and " + set_label(s, chosen) +
                        " generate " + e.label(f) + " but differ in V(L)");
      }
    }
    for (Element x = next; x < s.size(); ++x) {
      const bool free = std::none_of(chosen.begin(), chosen.end(),
                                     [&](Element y) { return s.poset().comparable(x, y); });
      if (!free) continue;
      chosen.push_back(x);
      self(self, x + 1);
      chosen.pop_back();
    }
  };
  visit(visit, 0);

  VEnvelope env;
  std::map<FreeVector, FilterIndex> seen;
  for (FilterIndex f = 0; f < e.size(); ++f) {
    if (!by_filter[f]) throw Error(ErrorKind::kPairingFailure, e.label(f) + " is not reached");
    auto [it, inserted] = seen.emplace(*by_filter[f], f);
    if (!inserted) {
      throw Error(ErrorKind::kPairingFailure,
                  e.label(it->second) + " and " + e.label(f) + " share a value in V(L)");
    }
    env.elements.push_back(*by_filter[f]);
    env.filter_of.push_back(f);
    env.generated_by.push_back(witness[f]);
  }
  for (Element x = 0; x < s.size(); ++x) {
    if (env.elements[e.nu(x)] != r.iota(x)) {
      throw Error(ErrorKind::kPairingFailure, "iota(" + s.name(x) + ") missing");
    }
  }
  return env;
}

FreeVector i_of(const ValuationRing& r, const FilterLattice& e, FilterIndex f) {
  const Sus& s = r.source();
  const ElementSet& a = s.minimal();
  if (a.size() > kSubsetSumCap) throw Error(ErrorKind::kSizeCap, "|A| > 20");
  ElementSet local;
  local.reserve(a.size());
  for (Element m : a) local.push_back(f_a(e, m, f));
  // The same alternating sum, but over the f_a values as given (no
  // reduction to minimal ones).
  FreeVector total = zero_vector(r.dim());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << a.size()); ++mask) {
    Element acc = 0;
    int count = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(mask >> i & 1U)) continue;
      acc = count == 0 ? local[i] : s.join(acc, local[i]);
      ++count;
    }
    total[acc] += count % 2 == 1 ? 1 : -1;
  }
  return r.canonical(std::move(total));
}

FreeVector j_of(const ValuationRing& r, const FilterLattice& e, FilterIndex f) {
  return alternating_join_sum(r, e.members(f), false);
}

VerificationItem check_ie_oracle(const ValuationRing& r) {
  auto item = make_item("inclusion_exclusion");
  const Sus& s = r.source();
  if (s.size() > kSubsetSumCap) {
    item.status = CheckStatus::kNotApplicable;
    item.note = "too many subsets";
    return item;
  }
  std::size_t checked = 0;
  for_each_subset(s.size(), [&](const ElementSet& xs) {
    if (lower_bounds(s.poset(), xs).empty()) return;
    ++checked;
    if (meet_in_v(r, xs) != r.iota(wedge(s, xs))) item.fail("X=" + set_label(s, xs));
  });
  item.note = std::to_string(checked) + " lower-bounded subsets";
  return item;
}

VerificationItem check_minimals_sufficiency(const ValuationRing& r) {
  auto item = make_item("minimals_sufficiency");
  const Sus& s = r.source();
  if (s.size() > kSubsetSumCap) {
    item.status = CheckStatus::kNotApplicable;
    item.note = "too many subsets";
    return item;
  }
  // Sum over all nonempty subsets of X itself, without the minimal-element
  // reduction, against the reduced form.
  for_each_subset(s.size(), [&](const ElementSet& xs) {
    if (alternating_join_sum(r, xs, false) != meet_in_v(r, xs)) item.fail("X=" + set_label(s, xs));
  });
  return item;
}

VerificationItem check_meet_convention(const ValuationRing& r) {
  auto item = make_item("meet_convention");
  const Sus& s = r.source();
  std::size_t literal_failures = 0;
  for (Element x = 0; x < s.size(); ++x) {
    if (meet_in_v(r, {x}) != r.iota(x)) item.fail("singleton " + s.name(x));
    if (meet_in_v(r, {x}, SubsetConvention::kLiteralProper) != r.iota(x)) ++literal_failures;
  }
  for (Element x = 0; x < s.size(); ++x) {
    for (Element y = x + 1; y < s.size(); ++y) {
      const auto m = s.meet(x, y);
      if (!m) continue;
      if (meet_in_v(r, {x, y}) != r.iota(*m)) item.fail("pair " + set_label(s, {x, y}));
      if (meet_in_v(r, {x, y}, SubsetConvention::kLiteralProper) != r.iota(*m)) {
        ++literal_failures;
      }
    }
  }
  item.note = "convention: nonempty subsets; literal proper-subset reading fails " +
              std::to_string(literal_failures) + " cases";
  return item;
}

VerificationItem check_equivalence(const ValuationRing& r, const FilterLattice& e,
                                   std::uint64_t seed) {
  auto item = make_item("envelope_equivalence");
  const Sus& s = r.source();

  // (1) i = j = meet over the filter's own elements.
  for (FilterIndex f = 0; f < e.size(); ++f) {
    const auto members = e.members(f);
    const auto i_value = i_of(r, e, f);
    const auto meet_value = meet_in_v(r, members);
    if (i_value != meet_value) item.fail("i != meet at " + e.label(f));
    if (members.size() <= kSubsetSumCap && j_of(r, e, f) != i_value) {
      item.fail("i != j at " + e.label(f));
    }
  }

  // (2) the range of the meet pairs bijectively with D.
  VEnvelope env;
  try {
    env = build_venvelope(r, e);
  } catch (const Error& err) {
    item.fail(err.what());
    return item;
  }

  // (3) product = D-join, x + y - xy = D-meet, and the order read off the
  // product (u <= v iff uv = v) is D's order.
  for (FilterIndex f = 0; f < e.size(); ++f) {
    for (FilterIndex g = 0; g < e.size(); ++g) {
      const auto product = r.multiply(env.elements[f], env.elements[g]);
      FreeVector sum = env.elements[f];
      add_scaled(sum, env.elements[g], 1);
      const auto meet = r.canonical(difference(std::move(sum), product));
      const std::string at = " F=" + e.label(f) + " G=" + e.label(g);
      if (product != env.elements[e.join(f, g)]) item.fail("product is not the D-join" + at);
      if (meet != env.elements[e.meet(f, g)]) item.fail("induced meet is not the D-meet" + at);
      if ((product == env.elements[g]) != e.leq(f, g)) item.fail("order" + at);
    }
  }

  // (4) V(L) and V(D) have the same rank and V(nu) is an isomorphism.
  const Sus d = e.as_sus();
  const auto rd = ValuationRing::build(d);
  if (rd.rank() != r.rank()) {
    item.fail("rank V(L) = " + std::to_string(r.rank()) + " but rank V(D) = " +
              std::to_string(rd.rank()));
  }
  const auto nu_hom = make_semi_hom(s, d, e.nu_table());
  if (!nu_hom.verified()) {
    item.fail("nu is not a homomorphism into D");
    return item;
  }
  const auto v_nu = v_functor(r, rd, nu_hom);
  if (!r.unit_pivots() || !rd.unit_pivots()) {
    item.fail("relation bases have non-unit pivots");
    return item;
  }
  if (rd.rank() == r.rank()) {
    std::vector<IntVector> square;
    for (auto col : r.basis_columns()) square.push_back(rd.coordinates(v_nu(unit_vector(r.dim(), col))));
    if (abs(determinant(square)) != 1) item.fail("V(nu) is not invertible");
  }

  // (5) M(D) = nu(M).
  ElementSet nu_m;
  for (Element m : s.meet_irreducibles()) nu_m.push_back(e.nu(m));
  std::sort(nu_m.begin(), nu_m.end());
  if (d.meet_irreducibles() != nu_m) item.fail("M(D) != nu(M)");

  // (6) valuations on L lift to D through values on M and restrict back.
  std::vector<std::optional<Element>> generator_of(d.size());
  for (Element m : s.meet_irreducibles()) generator_of[e.nu(m)] = m;
  struct Sample {
    std::string label;
    unsigned long modulus;
    std::vector<Integer> on_l;  // expected values on L, when known directly
    std::vector<Integer> on_d;  // expected values on D, when known directly
    std::vector<Integer> on_m;  // free values on M, position-aligned with M
  };
  std::vector<Sample> samples;
  const auto& mi = s.meet_irreducibles();
  for (long c : {1L, 3L}) {
    samples.push_back({"constant " + std::to_string(c), 0, std::vector<Integer>(s.size(), c),
                       std::vector<Integer>(d.size(), c), std::vector<Integer>(mi.size(), c)});
  }
  for (const auto& g : prime_filter_valuations(d)) {
    Sample sample{"prime filter", 2, {}, g.values, {}};
    for (Element x = 0; x < s.size(); ++x) sample.on_l.push_back(g.values[e.nu(x)]);
    for (Element m : mi) sample.on_m.push_back(g.values[e.nu(m)]);
    samples.push_back(std::move(sample));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-5, 5);
  for (int k = 0; k < 3; ++k) {
    Sample sample{"random #" + std::to_string(k), 0, {}, {}, {}};
    for (std::size_t i = 0; i < mi.size(); ++i) sample.on_m.push_back(pick(rng));
    samples.push_back(std::move(sample));
  }

  auto position_in_m = [&](Element m) {
    return static_cast<std::size_t>(std::lower_bound(mi.begin(), mi.end(), m) - mi.begin());
  };
  for (const auto& sample : samples) {
    GroupValuation f{sample.modulus, {}};
    for (Element x = 0; x < s.size(); ++x) {
      const auto coords = r.coordinates(r.iota(x));
      Integer value = 0;
      for (std::size_t k = 0; k < coords.size(); ++k) {
        value += coords[k] * sample.on_m[position_in_m(r.basis_columns()[k])];
      }
      f.values.push_back(f.reduce(value));
    }
    GroupValuation g{sample.modulus, {}};
    for (FilterIndex F = 0; F < d.size(); ++F) {
      const auto coords = rd.coordinates(rd.iota(F));
      Integer value = 0;
      for (std::size_t k = 0; k < coords.size(); ++k) {
        const auto m = generator_of[rd.basis_columns()[k]];
        if (!m) {
          item.fail("basis of V(D) is not nu(M)");
          return item;
        }
        value += coords[k] * sample.on_m[position_in_m(*m)];
      }
      g.values.push_back(g.reduce(value));
    }
    const std::string at = " (" + sample.label + ")";
    if (!is_valuation(s, f)) item.fail("not a valuation on L" + at);
    if (!is_valuation(d, g)) item.fail("lift is not a valuation on D" + at);
    for (Element x = 0; x < s.size(); ++x) {
      if (g.values[e.nu(x)] != f.values[x]) item.fail("restriction differs at " + s.name(x) + at);
    }
    if (!sample.on_l.empty() && sample.on_l != f.values) item.fail("extension from M differs on L" + at);
    if (!sample.on_d.empty() && sample.on_d != g.values) item.fail("lift differs on D" + at);
  }
  item.note = std::to_string(env.size()) + " envelope elements, " +
              std::to_string(samples.size()) + " valuations lifted";
  return item;
}

}  // namespace envkit
