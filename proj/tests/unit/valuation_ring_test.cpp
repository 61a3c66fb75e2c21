#include <doctest.h>

#include <random>

#include "envelope_kit/enumeration.hpp"
#include "envelope_kit/error.hpp"
#include "envelope_kit/valuation_ring.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace envkit;
using fixtures::at;

namespace {

GroupValuation integer_valuation(std::initializer_list<long> xs) {
  GroupValuation f;
  for (long x : xs) f.values.emplace_back(x);
  return f;
}

// Generators straight from the defining identity over ordered triples.
std::set<FreeVector> triple_generators(const Sus& s) {
  const auto r = oracle::relation_of(s.poset());
  const std::size_t n = s.size();
  std::set<FreeVector> out;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        const Element ac = *oracle::lub(r, a, c);
        const Element bc = *oracle::lub(r, b, c);
        const auto m = oracle::glb(r, ac, bc);
        if (!m) continue;
        FreeVector v = zero_vector(n);
        v[*oracle::lub(r, ac, bc)] += 1;
        v[*m] += 1;
        v[ac] -= 1;
        v[bc] -= 1;
        if (!is_zero(v)) out.insert(v);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("relation generators of the named instances") {
  CHECK(relation_generators(Sus::validate(fixtures::v3())).empty());
  CHECK(relation_generators(Sus::validate(fixtures::chain2())).empty());
  const auto b = Sus::validate(fixtures::b2());
  const auto gens = relation_generators(b);
  REQUIRE(gens.size() == 1);
  const auto& p = b.poset();
  FreeVector expected = zero_vector(4);
  expected[at(p, "1")] = 1;
  expected[at(p, "0")] = 1;
  expected[at(p, "a")] = -1;
  expected[at(p, "b")] = -1;
  CHECK((gens[0] == expected || gens[0] == FreeVector{-1, 1, 1, -1}));
}

TEST_CASE("valuation rings of the named instances") {
  const auto v = ValuationRing::build(Sus::validate(fixtures::v3()));
  CHECK(v.rank() == 3);
  CHECK(v.relations().rank() == 0);
  CHECK(v.iota(0) == unit_vector(3, 0));

  const auto b = ValuationRing::build(Sus::validate(fixtures::b2()));
  CHECK(b.rank() == 3);
  CHECK(b.snf_invariants() == std::vector<Integer>{1});
  CHECK(b.format(b.iota(0)) == "a + b - 1");
  CHECK(b.iota(1) == unit_vector(4, 1));
  CHECK(is_zero(b.canonical(zero_vector(4))));
  CHECK(is_zero(b.canonical(FreeVector{1, -1, -1, 1})));
  // (1 + 0 - a - b) * a = 0 in V(B2).
  CHECK(is_zero(b.multiply(FreeVector{1, -1, -1, 1}, b.iota(1))));
  CHECK(is_zero(b.multiply(zero_vector(4), b.iota(2))));
  CHECK(check_iota_injective(b).passed());
  CHECK(check_infinite_order(b).passed());
  CHECK(check_basis(b).passed());
  CHECK(check_retract(b, 0).passed());
  CHECK(check_ideal(b).passed());

  CHECK(ValuationRing::build(Sus::validate(fixtures::chain2())).rank() == 2);
}

TEST_CASE("valuations") {
  const auto b = Sus::validate(fixtures::b2());
  CHECK(is_valuation(b, integer_valuation({0, 1, 1, 2})));
  CHECK_FALSE(is_valuation(b, integer_valuation({0, 0, 0, 1})));
  CHECK(is_valuation(b, integer_valuation({5, 5, 5, 5})));
  const auto r = ValuationRing::build(b);
  CHECK_THROWS_AS(induced_hom(r, integer_valuation({0, 0, 0, 1})), Error);
  const auto height = induced_hom(r, integer_valuation({0, 1, 1, 2}));
  CHECK(height(r.iota(0)) == 0);

  CHECK(prime_filter_valuations(b).size() == 2);
  CHECK(prime_filter_valuations(Sus::validate(fixtures::chain2())).size() == 1);
  CHECK_THROWS_AS(prime_filter_valuations(Sus::validate(fixtures::v3())), Error);
  CHECK(check_prime_filter_separation(b).passed());
  CHECK(check_prime_filter_separation(Sus::validate(fixtures::v3())).status == CheckStatus::kNotApplicable);
}

TEST_CASE("ring maps") {
  const auto b = Sus::validate(fixtures::b2());
  const auto rb = ValuationRing::build(b);
  const auto id = v_functor(rb, rb, make_semi_hom(b, b, {0, 1, 2, 3}));
  for (Element x = 0; x < 4; ++x) CHECK(id(unit_vector(4, x)) == rb.iota(x));
  CHECK(check_ring_map(id).passed());

  const auto v = Sus::validate(fixtures::v3());
  const auto rv = ValuationRing::build(v);
  const auto& q = b.poset();
  const auto incl = v_functor(rv, rb, make_semi_hom(v, b, {at(q, "a"), at(q, "b"), at(q, "1")}));
  std::vector<IntVector> images;
  for (Element x = 0; x < 3; ++x) images.push_back(rb.coordinates(incl(unit_vector(3, x))));
  CHECK(oracle::rational_rank(images) == 3);

  const Element a = at(q, "a");
  const auto sub = principal_filter(b, a);
  const auto ra = ValuationRing::build(sub.sus);
  std::vector<Element> j(4);
  for (Element x = 0; x < 4; ++x) j[x] = *sub.from_parent[b.join(x, a)];
  const auto ja = v_functor(rb, ra, make_semi_hom(b, sub.sus, j));
  CHECK(check_ring_map(ja).passed());
}

TEST_CASE("exhaustive: generators, rank and canonical forms against oracles") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& s : gen_dsus(n)) {
      const auto r = ValuationRing::build(s);
      const auto gens = relation_generators(s);
      const std::set<FreeVector> got(gens.begin(), gens.end());
      std::set<FreeVector> expected = triple_generators(s);
      // Sign is not fixed by the triple; compare up to negation.
      std::set<FreeVector> got_signed = got;
      for (auto g : got) {
        for (auto& x : g) x = -x;
        got_signed.insert(g);
      }
      for (const auto& g : expected) CHECK(got_signed.count(g) == 1);
      CHECK(got.size() == gens.size());

      CHECK(r.relations().rank() == oracle::rational_rank(gens));
      CHECK(r.rank() == s.meet_irreducibles().size());
      CHECK(r.torsion_free());
      CHECK(check_basis(r).passed());
      CHECK(check_ideal(r).passed());

      for (int t = 0; t < 5; ++t) {
        FreeVector v = zero_vector(n);
        for (auto& x : v) x = coeff(rng);
        const auto c = r.canonical(v);
        CHECK(r.canonical(c) == c);
        FreeVector diff = v;
        add_scaled(diff, c, -1);
        auto with_diff = gens;
        with_diff.push_back(diff);
        CHECK(oracle::rational_rank(with_diff) == r.relations().rank());
      }
    }
  }
}
