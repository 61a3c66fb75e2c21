#pragma once

#include <string>

#include "envelope_kit/poset.hpp"
#include "envelope_kit/semilattice.hpp"

namespace fixtures {

inline envkit::Poset v3() { return envkit::Poset::from_covers({"a", "b", "1"}, {{"a", "1"}, {"b", "1"}}); }
inline envkit::Poset chain2() { return envkit::Poset::from_covers({"0", "1"}, {{"0", "1"}}); }
inline envkit::Poset chain3() { return envkit::Poset::from_covers({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}); }
inline envkit::Poset b2() {
  return envkit::Poset::from_covers({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}
inline envkit::Poset k4() {
  return envkit::Poset::from_covers({"a", "b", "t", "1"}, {{"a", "t"}, {"b", "t"}, {"t", "1"}});
}
inline envkit::Poset m3() {
  return envkit::Poset::from_covers({"0", "a", "b", "c", "1"},
                                    {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}
inline envkit::Poset n5() {
  return envkit::Poset::from_covers({"0", "a", "b", "c", "1"},
                                    {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}
// Three atoms under a common top.
inline envkit::Poset fan3() {
  return envkit::Poset::from_covers({"x", "y", "z", "1"}, {{"x", "1"}, {"y", "1"}, {"z", "1"}});
}
// The Boolean cube 2^3.
inline envkit::Poset b3() {
  return envkit::Poset::from_covers(
      {"0", "a", "b", "c", "ab", "ac", "bc", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "ab"}, {"a", "ac"}, {"b", "ab"}, {"b", "bc"},
       {"c", "ac"}, {"c", "bc"}, {"ab", "1"}, {"ac", "1"}, {"bc", "1"}});
}

inline envkit::Element at(const envkit::Poset& p, const std::string& name) { return *p.find(name); }

}  // namespace fixtures
