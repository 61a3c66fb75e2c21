#include <doctest.h>

#include "envelope_kit/enumeration.hpp"
#include "envelope_kit/error.hpp"
#include "envelope_kit/poset.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace envkit;
using fixtures::at;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::kParseError;
}

}  // namespace

TEST_CASE("closure of covers") {
  const auto c = fixtures::chain2();
  CHECK(c.leq(at(c, "0"), at(c, "1")));
  CHECK_FALSE(c.leq(at(c, "1"), at(c, "0")));

  const auto v = fixtures::v3();
  CHECK_FALSE(v.comparable(at(v, "a"), at(v, "b")));
  CHECK(v.covers().size() == 2);

  // Redundant pairs are dropped from the cover list.
  const auto chain = fixtures::chain3();
  const auto with_extra = Poset::from_covers({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}, {"0", "1"}});
  CHECK(with_extra == chain);
  CHECK(with_extra.covers().size() == 2);
}

TEST_CASE("construction errors") {
  CHECK(kind_of([] { Poset::from_covers({"x", "y"}, {{"x", "y"}, {"y", "x"}}); }) ==
        ErrorKind::kCycleDetected);
  CHECK(kind_of([] { Poset::from_covers({"x", "x"}, {}); }) == ErrorKind::kDuplicateLabel);
  CHECK(kind_of([] { Poset::from_covers({"x"}, {{"x", "q"}}); }) == ErrorKind::kUnknownLabel);
}

TEST_CASE("bounds and minimal elements") {
  const auto v = fixtures::v3();
  CHECK(upper_bounds(v, {at(v, "a"), at(v, "b")}) == ElementSet{at(v, "1")});
  CHECK(lower_bounds(v, {at(v, "a"), at(v, "b")}).empty());
  CHECK(minimal_elements(v) == ElementSet{at(v, "a"), at(v, "b")});

  const auto c = fixtures::chain2();
  CHECK(upper_bounds(c, {at(c, "0")}) == ElementSet{at(c, "0"), at(c, "1")});

  const auto b = fixtures::b2();
  CHECK(upper_bounds(b, {at(b, "a")}) == ElementSet{at(b, "a"), at(b, "1")});
  CHECK(lower_bounds(b, {at(b, "a"), at(b, "b")}) == ElementSet{at(b, "0")});
  CHECK(lower_bounds(b, {at(b, "1")}) == b.down_set(at(b, "1")));
  CHECK(minimal_elements(b) == ElementSet{at(b, "0")});

  const auto f = fixtures::fan3();
  CHECK(minimal_elements(f).size() == 3);
}

TEST_CASE("intervals") {
  const auto b = fixtures::b2();
  CHECK(interval(b, at(b, "0"), at(b, "1")).size() == 4);
  CHECK(interval(b, at(b, "a"), at(b, "1")).members == ElementSet{at(b, "a"), at(b, "1")});
  const auto v = fixtures::v3();
  CHECK(kind_of([&] { interval(v, at(v, "b"), at(v, "a")); }) == ErrorKind::kNotComparable);
}

TEST_CASE("coheight") {
  const auto b = fixtures::b2();
  CHECK(coheight(b, at(b, "0")) == 2);
  CHECK(coheight(b, at(b, "1")) == 0);
  const auto v = fixtures::v3();
  CHECK(coheight(v, at(v, "a")) == 1);
  const auto no_top = Poset::from_covers({"x", "y"}, {});
  CHECK(kind_of([&] { coheight(no_top, 0); }) == ErrorKind::kNoTop);
}

TEST_CASE("lattice and distributivity of views") {
  CHECK(is_lattice(full_view(fixtures::b2())));
  CHECK_FALSE(is_lattice(full_view(fixtures::v3())));
  CHECK(is_lattice(full_view(fixtures::chain2())));
  CHECK(is_distributive(full_view(fixtures::b2())));
  CHECK_FALSE(is_distributive(full_view(fixtures::m3())));
  CHECK_FALSE(is_distributive(full_view(fixtures::n5())));
  CHECK(kind_of([] { is_distributive(full_view(fixtures::v3())); }) == ErrorKind::kNotALattice);
}

TEST_CASE("exhaustive: covers reproduce the order, coheight behaves, distributivity oracle") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : gen_posets(n, true)) {
      const auto closed = oracle::closure(p.size(), p.covers());
      REQUIRE(closed == oracle::relation_of(p));
      const auto again = Poset::from_index_covers(p.names(), p.covers());
      CHECK(again == p);

      if (p.top()) {
        for (Element x = 0; x < p.size(); ++x) {
          CHECK((coheight(p, x) == 0) == (x == *p.top()));
        }
        for (const auto& [lo, hi] : p.covers()) CHECK(coheight(p, lo) > coheight(p, hi));
      }

      const auto r = oracle::relation_of(p);
      const bool lattice = oracle::is_lattice(r);
      CHECK(is_lattice(full_view(p)) == lattice);
      if (lattice) CHECK(is_distributive(full_view(p)) == !oracle::has_forbidden_sublattice(r));
    }
  }
}
