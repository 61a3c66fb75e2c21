#include <doctest.h>

#include "envelope_kit/enumeration.hpp"
#include "envelope_kit/error.hpp"
#include "envelope_kit/semilattice.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace envkit;
using fixtures::at;

namespace {

ErrorKind validation_error(const Poset& p) {
  try {
    Sus::validate(p);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("validated");
  return ErrorKind::kParseError;
}

ElementSet named(const Poset& p, std::initializer_list<const char*> names) {
  ElementSet out;
  for (const char* n : names) out.push_back(at(p, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("validation") {
  const auto v = Sus::validate(fixtures::v3());
  CHECK_FALSE(v.meet(0, 1).has_value());
  CHECK(v.meet(0, 2) == Element{0});
  CHECK(v.join(0, 1) == v.top());
  CHECK(Sus::validate(fixtures::b2()).is_lattice());

  CHECK(validation_error(fixtures::m3()) == ErrorKind::kIntervalNotDistributive);
  CHECK(validation_error(fixtures::n5()) == ErrorKind::kIntervalNotDistributive);
  try {
    Sus::validate(fixtures::m3());
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "IntervalNotDistributive(0,1)");
  }
  CHECK(validation_error(Poset::from_covers({"x", "y"}, {})) == ErrorKind::kNoTop);
  // a and b have two incomparable minimal upper bounds below the top.
  const auto bowtie = Poset::from_covers({"a", "b", "c", "d", "1"},
                                         {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
  CHECK(validation_error(bowtie) == ErrorKind::kJoinMissing);
}

TEST_CASE("meet-irreducibles") {
  const auto b = Sus::validate(fixtures::b2());
  CHECK(b.meet_irreducibles() == named(b.poset(), {"a", "b", "1"}));
  const auto v = Sus::validate(fixtures::v3());
  CHECK(v.meet_irreducibles() == named(v.poset(), {"a", "b", "1"}));
  const auto c = Sus::validate(fixtures::chain3());
  CHECK(c.meet_irreducibles().size() == 3);
  CHECK(meet_irreducibles(b) == b.meet_irreducibles());
}

TEST_CASE("m_up, wedge, x_plus") {
  const auto b = Sus::validate(fixtures::b2());
  const auto& p = b.poset();
  CHECK(m_up(b, at(p, "0")).members == named(p, {"a", "b", "1"}));
  CHECK(m_up(b, b.top()).members == ElementSet{b.top()});
  const auto v = Sus::validate(fixtures::v3());
  CHECK(m_up(v, at(v.poset(), "a")).members == named(v.poset(), {"a", "1"}));

  CHECK(wedge(b, named(p, {"a", "b"})) == at(p, "0"));
  CHECK(wedge(b, {at(p, "a")}) == at(p, "a"));
  CHECK_THROWS_AS(wedge(v, named(v.poset(), {"a", "b"})), Error);

  CHECK(x_plus(b, at(p, "a")) == b.top());
  const auto c = Sus::validate(fixtures::chain3());
  CHECK(x_plus(c, at(c.poset(), "0")) == at(c.poset(), "m"));
  CHECK_THROWS_AS(x_plus(b, b.top()), Error);
  CHECK_THROWS_AS(x_plus(b, at(p, "0")), Error);
}

TEST_CASE("named checks pass") {
  for (const auto& p : {fixtures::b2(), fixtures::v3(), fixtures::k4(), fixtures::chain3()}) {
    const auto s = Sus::validate(p);
    CHECK(check_wedge_mi(s).passed());
    CHECK(check_xplus_lemma(s).passed());
  }
}

TEST_CASE("exhaustive: meet table agrees with the brute-force glb") {
  std::size_t semilattices = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : gen_posets(n, true)) {
      if (!p.top()) continue;
      Sus s;
      try {
        s = Sus::validate(p, false);
      } catch (const Error&) {
        continue;
      }
      ++semilattices;
      const auto r = oracle::relation_of(p);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          CHECK(s.meet(x, y) == oracle::glb(r, x, y));
          CHECK(s.join(x, y) == *oracle::lub(r, x, y));
        }
      }
      // Meet-irreducible: no pair strictly above with that meet.
      for (Element m = 0; m < n; ++m) {
        bool irreducible = true;
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            if (x != m && y != m && oracle::glb(r, x, y) == m) irreducible = false;
          }
        }
        CHECK(s.is_meet_irreducible(m) == irreducible);
      }
    }
  }
  CHECK(semilattices > 0);
}
