#include <doctest.h>

#include "envelope_kit/birkhoff.hpp"
#include "envelope_kit/enumeration.hpp"
#include "envelope_kit/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace envkit;
using fixtures::at;

namespace {

Sus cube() { return Sus::validate(fixtures::b3()); }

std::string filter_label(const FilterLattice& e, Element x) { return e.label(e.nu(x)); }

}  // namespace

TEST_CASE("filter lattices of the named instances") {
  const auto v = Sus::validate(fixtures::v3());
  const auto ev = FilterLattice::build(v);
  CHECK(ev.size() == 4);
  CHECK(ev.label(ev.top()) == "{1}");
  CHECK(ev.label(ev.bottom()) == "{a,b,1}");
  CHECK(filter_label(ev, at(v.poset(), "a")) == "{a,1}");
  CHECK(ev.nu(v.top()) == ev.top());
  CHECK(ev.as_sus().is_lattice());

  const auto c = Sus::validate(fixtures::chain3());
  CHECK(FilterLattice::build(c).size() == 3);

  const auto b = Sus::validate(fixtures::b2());
  const auto eb = FilterLattice::build(b);
  CHECK(eb.size() == 4);
  CHECK(filter_label(eb, at(b.poset(), "0")) == "{a,b,1}");
  CHECK(check_embedding(eb).passed());
  CHECK(check_embedding(ev).passed());
}

TEST_CASE("f_a") {
  const auto v = Sus::validate(fixtures::v3());
  const auto e = FilterLattice::build(v);
  const Element a = at(v.poset(), "a");
  const Element b = at(v.poset(), "b");
  CHECK(f_a(e, a, e.bottom()) == a);
  CHECK(f_a(e, a, e.nu(b)) == v.top());
  CHECK_THROWS_AS(f_a(e, v.top(), e.bottom()), Error);

  const auto s = Sus::validate(fixtures::b2());
  const auto eb = FilterLattice::build(s);
  CHECK(f_a(eb, at(s.poset(), "0"), eb.bottom()) == at(s.poset(), "0"));
  CHECK(check_fa_lemmas(eb).passed());
}

TEST_CASE("universal property on explicit maps") {
  const auto v = Sus::validate(fixtures::v3());
  const auto e = FilterLattice::build(v);
  const auto b2 = Sus::validate(fixtures::b2());
  const auto& q = b2.poset();

  const auto incl = make_semi_hom(v, b2, {at(q, "a"), at(q, "b"), at(q, "1")});
  REQUIRE(incl.verified());
  const auto ext = extend_hom(e, incl);
  CHECK(ext[e.bottom()] == at(q, "0"));
  const auto u1 = check_universal(e, incl);
  CHECK(u1.item.passed());
  CHECK(u1.preserves_zero);

  // a, b to distinct coatoms of the cube: the extension misses its bottom.
  const auto c = cube();
  const auto& cp = c.poset();
  const auto coatoms = make_semi_hom(v, c, {at(cp, "ab"), at(cp, "ac"), at(cp, "1")});
  REQUIRE(coatoms.verified());
  const auto u2 = check_universal(e, coatoms);
  CHECK(u2.item.passed());
  CHECK_FALSE(u2.preserves_zero);
  CHECK(extend_hom(e, coatoms)[e.bottom()] == at(cp, "a"));

  const auto eb = FilterLattice::build(b2);
  const auto id = make_semi_hom(b2, b2, {0, 1, 2, 3});
  CHECK(check_universal(eb, id).item.passed());

  // Not a homomorphism: the top is not preserved.
  const auto bad = make_semi_hom(v, b2, {at(q, "a"), at(q, "b"), at(q, "a")});
  CHECK_FALSE(bad.verified());
  CHECK_THROWS_AS(extend_hom(e, bad), Error);
}

TEST_CASE("exhaustive: filters match the brute-force up-set enumeration") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& s : gen_dsus(n)) {
      const auto e = FilterLattice::build(s);
      const auto r = oracle::relation_of(s.poset());
      const auto expected = oracle::up_sets(r, s.meet_irreducibles());
      std::set<std::vector<Element>> got;
      for (FilterIndex f = 0; f < e.size(); ++f) {
        auto members = e.members(f);
        std::sort(members.begin(), members.end());
        got.insert(members);
      }
      CHECK(got == expected);
      CHECK(got.size() == e.size());
      // Join is intersection and meet is union.
      for (FilterIndex f = 0; f < e.size(); ++f) {
        for (FilterIndex g = 0; g < e.size(); ++g) {
          CHECK(e.mask(e.join(f, g)) == (e.mask(f) & e.mask(g)));
          CHECK(e.mask(e.meet(f, g)) == (e.mask(f) | e.mask(g)));
        }
      }
      CHECK(check_embedding(e).passed());
      CHECK(check_fa_lemmas(e).passed());
    }
  }
}

TEST_CASE("size cap") {
  // 21 pairwise incomparable elements under a top: |M| = 22.
  std::vector<std::string> names{"1"};
  std::vector<LabeledPair> covers;
  for (int i = 0; i < 21; ++i) {
    names.push_back("x" + std::to_string(i));
    covers.emplace_back(names.back(), "1");
  }
  const auto s = Sus::validate(Poset::from_covers(names, covers));
  try {
    FilterLattice::build(s);
    FAIL("no size cap");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::kSizeCap);
  }
}
