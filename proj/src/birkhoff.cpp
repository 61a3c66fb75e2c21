#include "envelope_kit/birkhoff.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "envelope_kit/error.hpp"

namespace envkit {

std::size_t filter_size_cap() {
  if (const char* env = std::getenv("ENVELOPE_KIT_SIZE_CAP")) {
    char* end = nullptr;
    const auto value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return std::min<std::size_t>(value, 63);
    }
  }
  return kDefaultFilterCap;
}

FilterLattice FilterLattice::build(const Sus& s, std::size_t cap) {
  FilterLattice e;
  e.source_ = s;
  e.mi_ = s.meet_irreducibles();
  const std::size_t k = e.mi_.size();
  if (k > cap || k > 63) {
    throw Error(ErrorKind::kSizeCap, "|M| = " + std::to_string(k) + " exceeds " +
                                         std::to_string(std::min<std::size_t>(cap, 63)));
  }
  e.bit_.assign(s.size(), std::nullopt);
  for (std::size_t i = 0; i < k; ++i) e.bit_[e.mi_[i]] = i;

  // Bits of M strictly above each generator.
  std::vector<FilterMask> above(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (s.poset().lt(e.mi_[i], e.mi_[j])) above[i] |= FilterMask{1} << j;
    }
  }
  // Decide generators top-down so the up-closure test only looks at
  // decisions already made.
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(above[a]) < std::popcount(above[b]);
  });
  auto visit = [&](auto&& self, std::size_t depth, FilterMask acc) -> void {
    if (depth == k) {
      if (acc != 0) e.filters_.push_back(acc);
      return;
    }
    const std::size_t bit = order[depth];
    self(self, depth + 1, acc);
    if ((acc & above[bit]) == above[bit]) self(self, depth + 1, acc | (FilterMask{1} << bit));
  };
  visit(visit, 0, 0);

  std::sort(e.filters_.begin(), e.filters_.end(), [](FilterMask a, FilterMask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (FilterIndex f = 0; f < e.filters_.size(); ++f) e.index_.emplace(e.filters_[f], f);
  e.top_ = e.index_.at(FilterMask{1} << *e.bit_[s.top()]);
  e.bottom_ = e.filters_.size() - 1;

  e.nu_.resize(s.size());
  for (Element x = 0; x < s.size(); ++x) e.nu_[x] = e.index_.at(e.mask_of(m_up(s, x).members));
  return e;
}

std::optional<FilterIndex> FilterLattice::index_of(FilterMask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FilterIndex FilterLattice::index_of_members(const ElementSet& members) const {
  const auto idx = index_of(mask_of(members));
  if (!idx) throw Error(ErrorKind::kParseError, "not an order filter of M");
  return *idx;
}

std::optional<std::size_t> FilterLattice::bit_of(Element m) const {
  if (m >= bit_.size()) return std::nullopt;
  return bit_[m];
}

FilterMask FilterLattice::mask_of(const ElementSet& members) const {
  FilterMask mask = 0;
  for (Element m : members) {
    const auto b = bit_of(m);
    if (!b) throw Error(ErrorKind::kNotMeetIrreducible, source_.name(m));
    mask |= FilterMask{1} << *b;
  }
  return mask;
}

ElementSet FilterLattice::members(FilterIndex f) const {
  ElementSet out;
  for (std::size_t i = 0; i < mi_.size(); ++i) {
    if (filters_[f] >> i & 1U) out.push_back(mi_[i]);
  }
  return out;
}

FilterIndex FilterLattice::join(FilterIndex f, FilterIndex g) const {
  return index_.at(filters_[f] & filters_[g]);
}

FilterIndex FilterLattice::meet(FilterIndex f, FilterIndex g) const {
  return index_.at(filters_[f] | filters_[g]);
}

std::string FilterLattice::label(FilterIndex f) const {
  std::string out = "{";
  bool first = true;
  for (Element m : members(f)) {
    if (!first) out += ",";
    out += source_.name(m);
    first = false;
  }
  return out + "}";
}

Sus FilterLattice::as_sus() const {
  const std::size_t n = size();
  std::vector<std::string> names;
  names.reserve(n);
  for (FilterIndex f = 0; f < n; ++f) names.push_back(label(f));
  std::vector<std::uint8_t> rel(n * n, 0);
  for (FilterIndex f = 0; f < n; ++f) {
    for (FilterIndex g = 0; g < n; ++g) rel[f * n + g] = leq(f, g) ? 1 : 0;
  }
  return Sus::validate(Poset::from_relation(std::move(names), std::move(rel)));
}

FilterIndex nu(const FilterLattice& e, Element x) { return e.nu(x); }

Element f_a(const FilterLattice& e, Element a, FilterIndex f) {
  const Sus& s = e.source();
  const auto& minimal = s.minimal();
  if (!std::binary_search(minimal.begin(), minimal.end(), a)) {
    throw Error(ErrorKind::kNotMinimal, s.name(a));
  }
  ElementSet local;
  for (Element m : e.members(f)) {
    if (s.leq(a, m)) local.push_back(m);
  }
  return wedge(s, local);
}

VerificationItem check_embedding(const FilterLattice& e) {
  auto item = make_item("nu_embedding");
  const Sus& s = e.source();
  const std::size_t n = s.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::string at = " x=" + s.name(x) + " y=" + s.name(y);
      if (x != y && e.nu(x) == e.nu(y)) item.fail("not injective" + at);
      if (s.leq(x, y) != e.leq(e.nu(x), e.nu(y))) item.fail("order" + at);
      if (e.nu(s.join(x, y)) != e.join(e.nu(x), e.nu(y))) item.fail("join" + at);
      if (const auto m = s.meet(x, y); m && e.nu(*m) != e.meet(e.nu(x), e.nu(y))) {
        item.fail("meet" + at);
      }
    }
  }
  if (e.nu(s.top()) != e.top()) item.fail("top");

  std::vector<bool> in_image(e.size(), false);
  for (Element x = 0; x < n; ++x) in_image[e.nu(x)] = true;
  for (Element x = 0; x < n; ++x) {
    for (FilterIndex g = 0; g < e.size(); ++g) {
      if (e.leq(e.nu(x), g) && !in_image[g]) {
        item.fail("image not upward closed at " + e.label(g));
      }
    }
  }
  return item;
}

VerificationItem check_fa_lemmas(const FilterLattice& e) {
  auto item = make_item("fa_lemmas");
  const Sus& s = e.source();
  for (Element a : s.minimal()) {
    std::vector<Element> fa(e.size());
    for (FilterIndex f = 0; f < e.size(); ++f) fa[f] = f_a(e, a, f);
    for (FilterIndex f = 0; f < e.size(); ++f) {
      const auto members = e.members(f);
      for (Element p : s.meet_irreducibles()) {
        const bool inside = std::binary_search(members.begin(), members.end(), p);
        if (s.leq(fa[f], p) && !inside) {
          item.fail("membership a=" + s.name(a) + " F=" + e.label(f) + " p=" + s.name(p));
        }
      }
      for (FilterIndex g = 0; g < e.size(); ++g) {
        const std::string at = " a=" + s.name(a) + " F=" + e.label(f) + " G=" + e.label(g);
        const auto lower = s.meet(fa[f], fa[g]);
        if (!lower || fa[e.meet(f, g)] != *lower) item.fail("union" + at);
        if (fa[e.join(f, g)] != s.join(fa[f], fa[g])) item.fail("intersection" + at);
      }
    }
    for (Element x = 0; x < s.size(); ++x) {
      if (s.leq(a, x) && fa[e.nu(x)] != x) {
        item.fail("f_a(nu(x)) != x a=" + s.name(a) + " x=" + s.name(x));
      }
    }
  }
  return item;
}

SemiHom make_semi_hom(const Sus& domain, const Sus& codomain, std::vector<Element> map) {
  if (map.size() != domain.size()) throw Error(ErrorKind::kParseError, "map has wrong length");
  SemiHom h{&domain, &codomain, std::move(map), true, true, true};
  for (Element x = 0; x < domain.size(); ++x) {
    if (h.map[x] >= codomain.size()) throw Error(ErrorKind::kParseError, "map out of range");
  }
  h.preserves_top = h.map[domain.top()] == codomain.top();
  for (Element x = 0; x < domain.size(); ++x) {
    for (Element y = x; y < domain.size(); ++y) {
      if (h.map[domain.join(x, y)] != codomain.join(h.map[x], h.map[y])) {
        h.preserves_join = false;
      }
      if (const auto m = domain.meet(x, y)) {
        const auto image = codomain.meet(h.map[x], h.map[y]);
        if (!image || *image != h.map[*m]) h.preserves_extant_meets = false;
      }
    }
  }
  return h;
}

std::vector<Element> extend_hom(const FilterLattice& e, const SemiHom& h) {
  if (!h.verified()) throw Error(ErrorKind::kFlagsNotVerified, "");
  const Sus& target = *h.codomain;
  if (!target.is_lattice()) throw Error(ErrorKind::kNotALattice, "codomain");
  std::vector<Element> out(e.size());
  for (FilterIndex f = 0; f < e.size(); ++f) {
    Element acc = target.top();
    for (Element m : e.members(f)) acc = *target.meet(acc, h(m));
    out[f] = acc;
  }
  return out;
}

UniversalCheck check_universal(const FilterLattice& e, const SemiHom& h) {
  UniversalCheck out{make_item("universal_property"), true};
  auto& item = out.item;
  const Sus& s = e.source();
  const Sus& target = *h.codomain;
  const auto ext = extend_hom(e, h);
  for (Element x = 0; x < s.size(); ++x) {
    if (ext[e.nu(x)] != h(x)) item.fail("extension does not factor at " + s.name(x));
  }
  for (FilterIndex f = 0; f < e.size(); ++f) {
    for (FilterIndex g = 0; g < e.size(); ++g) {
      if (ext[e.join(f, g)] != target.join(ext[f], ext[g])) {
        item.fail("join F=" + e.label(f) + " G=" + e.label(g));
      }
      if (ext[e.meet(f, g)] != *target.meet(ext[f], ext[g])) {
        item.fail("meet F=" + e.label(f) + " G=" + e.label(g));
      }
    }
    // Any homomorphism agreeing with h on the image of nu is pinned down on
    // F, since F is the D-meet of nu(m) over m in F.
    FilterIndex generated = e.top();
    Element pinned = target.top();
    for (Element m : e.members(f)) {
      generated = e.meet(generated, e.nu(m));
      pinned = *target.meet(pinned, ext[e.nu(m)]);
    }
    if (generated != f || pinned != ext[f]) item.fail("uniqueness F=" + e.label(f));
  }
  if (ext[e.top()] != target.top()) item.fail("top");
  const auto zero = target.bottom();
  out.preserves_zero = zero && ext[e.bottom()] == *zero;
  if (!out.preserves_zero) item.note = "bottom filter not sent to codomain bottom";
  return out;
}

}  // namespace envkit
