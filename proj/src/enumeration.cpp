#include "envelope_kit/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <thread>

#include "envelope_kit/birkhoff.hpp"
#include "envelope_kit/envelope_equiv.hpp"
#include "envelope_kit/error.hpp"
#include "envelope_kit/valuation_ring.hpp"

namespace envkit {

namespace {

constexpr std::size_t kCanonicalBudget = 500000;

template <typename Leq>
std::vector<std::size_t> refine_colours(std::size_t n, const Leq& leq) {
  std::vector<std::size_t> colour(n, 0);
  std::size_t classes = 1;
  while (true) {
    using Signature = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
    std::vector<Signature> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> below, above;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (leq(j, i)) below.push_back(colour[j]);
        if (leq(i, j)) above.push_back(colour[j]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig[i] = {colour[i], std::move(below), std::move(above)};
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t i = 0; i < n; ++i) {
      colour[i] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[i]) - distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return colour;
}

template <typename Leq>
CanonicalForm canonical_form_impl(std::size_t n, const Leq& leq) {
  const auto colour = refine_colours(n, leq);
  std::vector<std::size_t> slots(colour);
  std::sort(slots.begin(), slots.end());

  CanonicalForm best;
  std::vector<std::uint8_t> best_code;  // incremental pair code
  std::vector<Element> perm;
  std::vector<std::uint8_t> code;
  std::vector<bool> used(n, false);
  std::size_t nodes = 0;
  bool exhausted = false;

  auto search = [&](auto&& self, bool tie) -> void {
    if (exhausted) return;
    if (++nodes > kCanonicalBudget) {
      exhausted = true;
      return;
    }
    const std::size_t k = perm.size();
    if (k == n) {
      if (best.order.empty() || !tie) {
        best.order = perm;
        best_code = code;
      }
      return;
    }
    for (Element x = 0; x < n; ++x) {
      if (used[x] || colour[x] != slots[k]) continue;
      const std::size_t mark = code.size();
      for (std::size_t j = 0; j < k; ++j) {
        code.push_back(leq(perm[j], x) ? 1 : 0);
        code.push_back(leq(x, perm[j]) ? 1 : 0);
      }
      bool still_tie = tie && !best.order.empty();
      bool worse = false;
      if (still_tie) {
        for (std::size_t i = mark; i < code.size(); ++i) {
          if (code[i] != best_code[i]) {
            worse = code[i] > best_code[i];
            still_tie = false;
            break;
          }
        }
      }
      if (!worse) {
        used[x] = true;
        perm.push_back(x);
        self(self, best.order.empty() ? true : still_tie);
        perm.pop_back();
        used[x] = false;
      }
      code.resize(mark);
    }
  };
  search(search, true);

  if (exhausted) {
    best.exact = false;
    best.order.resize(n);
    for (Element i = 0; i < n; ++i) best.order[i] = i;
  }
  best.code.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) best.code[i * n + j] = leq(best.order[i], best.order[j]) ? 1 : 0;
  }
  return best;
}

// Dense up-set masks; enough for n <= 7.
struct Masks {
  std::size_t n = 0;
  std::vector<std::uint32_t> up;  // bit j of up[i]: i <= j

  bool leq(std::size_t i, std::size_t j) const { return up[i] >> j & 1U; }
};

Poset to_poset(const Masks& m, const std::vector<Element>& order) {
  const std::size_t n = m.n;
  std::vector<std::string> names;
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = m.leq(order[i], order[j]) ? 1 : 0;
  }
  return Poset::from_relation(std::move(names), std::move(rel));
}

std::vector<std::uint32_t> down_closed_sets(const Masks& m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t set = 0; set < (1U << m.n); ++set) {
    bool closed = true;
    for (std::size_t i = 0; i < m.n && closed; ++i) {
      if (!(set >> i & 1U)) continue;
      for (std::size_t j = 0; j < m.n; ++j) {
        if (m.leq(j, i) && !(set >> j & 1U)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(set);
  }
  return out;
}

std::vector<std::uint32_t> up_closed_sets(const Masks& m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t set = 0; set < (1U << m.n); ++set) {
    bool closed = true;
    for (std::size_t i = 0; i < m.n && closed; ++i) {
      if ((set >> i & 1U) && (m.up[i] & set) != m.up[i]) closed = false;
    }
    if (closed) out.push_back(set);
  }
  return out;
}

// New element k sits above `down` and below `upper`.
Masks extend(const Masks& m, std::uint32_t down, std::uint32_t upper) {
  Masks out{m.n + 1, m.up};
  const std::size_t k = m.n;
  out.up.push_back((1U << k) | upper);
  for (std::size_t i = 0; i < k; ++i) {
    if (down >> i & 1U) out.up[i] |= 1U << k;
  }
  return out;
}

void check_enumeration_size(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw Error(ErrorKind::kSizeCap, "n = " + std::to_string(n) + " outside 1.." +
                                         std::to_string(kMaxEnumerationSize));
  }
}

void for_each_labeled(const Masks& m, std::size_t n, const std::function<void(const Masks&)>& visit) {
  if (m.n == n) {
    visit(m);
    return;
  }
  const auto ideals = down_closed_sets(m);
  const auto filters = up_closed_sets(m);
  for (auto down : ideals) {
    // Everything in `upper` must already lie strictly above all of `down`.
    std::uint32_t allowed = (1U << m.n) - 1;
    for (std::size_t i = 0; i < m.n; ++i) {
      if (down >> i & 1U) allowed &= m.up[i] & ~(1U << i);
    }
    for (auto upper : filters) {
      if ((upper & allowed) == upper) for_each_labeled(extend(m, down, upper), n, visit);
    }
  }
}

std::vector<Masks> unlabeled_level(std::size_t n) {
  std::vector<Masks> level{Masks{1, {1U}}};
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<std::vector<std::uint8_t>, Masks> next;
    for (const auto& base : level) {
      // A poset minus one of its maximal elements is a smaller poset; put
      // the new element on top of any down-closed set.
      for (auto down : down_closed_sets(base)) {
        const Masks cand = extend(base, down, 0);
        const auto form = canonical_form_impl(cand.n, [&](std::size_t i, std::size_t j) { return cand.leq(i, j); });
        if (next.count(form.code)) continue;
        Masks canon{cand.n, std::vector<std::uint32_t>(cand.n, 0)};
        for (std::size_t i = 0; i < cand.n; ++i) {
          for (std::size_t j = 0; j < cand.n; ++j) {
            if (form.code[i * cand.n + j]) canon.up[i] |= 1U << j;
          }
        }
        next.emplace(form.code, std::move(canon));
      }
    }
    level.clear();
    for (auto& [code, masks] : next) level.push_back(std::move(masks));
  }
  return level;
}

std::vector<Element> identity_order(std::size_t n) {
  std::vector<Element> order(n);
  for (Element i = 0; i < n; ++i) order[i] = i;
  return order;
}

// Two-element chain and the Boolean lattices 2^k, as codomains.
Sus boolean_lattice(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string bits;
    for (std::size_t b = 0; b < k; ++b) bits += (i >> b & 1U) ? '1' : '0';
    names.push_back(bits);
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = (i & j) == i ? 1 : 0;
  }
  return Sus::validate(Poset::from_relation(std::move(names), std::move(rel)));
}

VerificationItem timed(const std::function<VerificationItem()>& run) {
  const auto start = std::chrono::steady_clock::now();
  auto item = run();
  item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return item;
}

}  // namespace

CanonicalForm canonical_form(const Poset& p) {
  return canonical_form_impl(p.size(), [&](std::size_t i, std::size_t j) { return p.leq(i, j); });
}

bool isomorphic(const Poset& a, const Poset& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  auto sig = [](const Poset& p, Element x) {
    return std::pair{p.down_set(x).size(), p.up_set(x).size()};
  };
  std::vector<Element> image(n);
  std::vector<bool> used(n, false);
  auto place = [&](auto&& self, Element x) -> bool {
    if (x == n) return true;
    for (Element y = 0; y < n; ++y) {
      if (used[y] || sig(a, x) != sig(b, y)) continue;
      bool ok = true;
      for (Element w = 0; w < x && ok; ++w) {
        ok = a.leq(w, x) == b.leq(image[w], y) && a.leq(x, w) == b.leq(y, image[w]);
      }
      if (!ok) continue;
      used[y] = true;
      image[x] = y;
      if (self(self, x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return place(place, 0);
}

std::string instance_id(const Poset& p) {
  const auto form = canonical_form(p);
  std::uint64_t hash = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t byte) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  };
  mix(p.size());
  if (form.exact) {
    for (auto bit : form.code) mix(bit);
  } else {
    for (auto bit : p.relation()) mix(bit);
  }
  char buffer[24];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return (form.exact ? "" : "L") + std::string(buffer);
}

void for_each_poset(std::size_t n, bool up_to_iso, const std::function<void(const Poset&)>& visit) {
  check_enumeration_size(n);
  if (up_to_iso) {
    for (const auto& m : unlabeled_level(n)) visit(to_poset(m, identity_order(n)));
    return;
  }
  const auto order = identity_order(n);
  for_each_labeled(Masks{1, {1U}}, n, [&](const Masks& m) { visit(to_poset(m, order)); });
}

std::vector<Poset> gen_posets(std::size_t n, bool up_to_iso) {
  std::vector<Poset> out;
  for_each_poset(n, up_to_iso, [&](const Poset& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_posets(std::size_t n, bool up_to_iso) {
  check_enumeration_size(n);
  if (up_to_iso) return unlabeled_level(n).size();
  std::uint64_t count = 0;
  for_each_labeled(Masks{1, {1U}}, n, [&](const Masks&) { ++count; });
  return count;
}

std::vector<Sus> gen_dsus(std::size_t n) {
  check_enumeration_size(n);
  std::vector<Sus> out;
  for (const auto& m : unlabeled_level(n)) {
    const Poset p = to_poset(m, identity_order(n));
    if (!p.top()) continue;
    try {
      out.push_back(Sus::validate(p, true));
    } catch (const Error&) {
      // not a distributive strong upper semilattice
    }
  }
  return out;
}

bool VerificationReport::all_passed() const {
  return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.passed(); });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [](const auto& i) { return !i.passed(); }));
}

VerificationReport run_suite(const Sus& s, const SuiteOptions& options) {
  VerificationReport report;
  report.instance_id = instance_id(s.poset());
  report.poset = s.poset();

  const auto envelope = FilterLattice::build(s);
  const auto ring = ValuationRing::build(s);
  auto& items = report.items;

  items.push_back(timed([&] { return check_wedge_mi(s); }));
  items.push_back(timed([&] { return check_xplus_lemma(s); }));
  items.push_back(timed([&] { return check_embedding(envelope); }));
  items.push_back(timed([&] { return check_fa_lemmas(envelope); }));

  items.push_back(timed([&] {
    auto item = make_item("universal_property");
    std::size_t codomains = 0;
    std::size_t zero_missed = 0;
    auto absorb = [&](const UniversalCheck& check, const std::string& label) {
      ++codomains;
      if (!check.item.passed()) item.fail(label + ": " + check.item.witness);
      if (!check.preserves_zero) ++zero_missed;
    };
    const Sus d = envelope.as_sus();
    absorb(check_universal(envelope, make_semi_hom(s, d, envelope.nu_table())), "nu");

    // Maps into 2 preserving join, top and extant meets, combined
    // coordinatewise into maps to 2^k.
    const Sus two = boolean_lattice(1);
    std::vector<std::vector<Element>> indicators;
    for (std::uint64_t set = 0; set < (std::uint64_t{1} << s.size()); ++set) {
      std::vector<Element> map(s.size());
      for (Element x = 0; x < s.size(); ++x) map[x] = set >> x & 1U;
      if (make_semi_hom(s, two, map).verified()) indicators.push_back(std::move(map));
    }
    std::vector<Sus> cubes{boolean_lattice(1), boolean_lattice(2), boolean_lattice(3)};
    const std::size_t h = indicators.size();
    std::vector<std::size_t> pick;
    auto choose = [&](auto&& self, std::size_t from, std::size_t k) -> void {
      if (codomains > options.max_codomains) return;
      if (pick.size() == k) {
        const Sus& cube = cubes[k - 1];
        std::vector<Element> map(s.size(), 0);
        for (Element x = 0; x < s.size(); ++x) {
          for (std::size_t b = 0; b < k; ++b) map[x] |= indicators[pick[b]][x] << b;
        }
        const auto hom = make_semi_hom(s, cube, std::move(map));
        if (!hom.verified()) {
          item.fail("product of indicators is not a homomorphism");
          return;
        }
        absorb(check_universal(envelope, hom), "2^" + std::to_string(k));
        return;
      }
      for (std::size_t i = from; i < h; ++i) {
        pick.push_back(i);
        self(self, i + 1, k);
        pick.pop_back();
      }
    };
    for (std::size_t k = 1; k <= 3; ++k) choose(choose, 0, k);
    report.zero_not_preserved = zero_missed > 0;
    item.note = std::to_string(codomains) + " codomain maps, " + std::to_string(zero_missed) +
                " miss the codomain bottom";
    return item;
  }));

  items.push_back(timed([&] { return check_ideal(ring); }));
  items.push_back(timed([&] { return check_basis(ring); }));
  items.push_back(timed([&] { return check_iota_injective(ring); }));
  items.push_back(timed([&] { return check_infinite_order(ring); }));
  items.push_back(timed([&] {
    auto item = make_item("retract");
    for (Element a : s.minimal()) {
      const auto one = check_retract(ring, a);
      if (!one.passed()) item.fail(one.witness);
    }
    return item;
  }));
  items.push_back(timed([&] {
    auto item = make_item("functor_laws");
    const auto id = make_semi_hom(s, s, identity_order(s.size()));
    const auto v_id = v_functor(ring, ring, id);
    for (Element x = 0; x < s.size(); ++x) {
      if (v_id(unit_vector(s.size(), x)) != ring.iota(x)) item.fail("V(id) at " + s.name(x));
    }
    for (Element a : s.minimal()) {
      const SubSus sub = principal_filter(s, a);
      const auto local = ValuationRing::build(sub.sus);
      std::vector<Element> j_map(s.size());
      for (Element x = 0; x < s.size(); ++x) j_map[x] = *sub.from_parent[s.join(x, a)];
      const auto incl = make_semi_hom(sub.sus, s, sub.to_parent);
      const auto proj = make_semi_hom(s, sub.sus, j_map);
      std::vector<Element> composite(sub.sus.size());
      for (Element x = 0; x < sub.sus.size(); ++x) composite[x] = j_map[sub.to_parent[x]];
      const auto comp = make_semi_hom(sub.sus, sub.sus, composite);
      const auto v_incl = v_functor(local, ring, incl);
      const auto v_proj = v_functor(ring, local, proj);
      const auto v_comp = v_functor(local, local, comp);
      for (Element x = 0; x < sub.sus.size(); ++x) {
        const auto e = unit_vector(sub.sus.size(), x);
        if (v_comp(e) != v_proj(v_incl(e))) item.fail("V(J∘incl) at a=" + s.name(a));
      }
      for (const auto* map : {&v_incl, &v_proj}) {
        const auto check = check_ring_map(*map);
        if (!check.passed()) item.fail(check.witness + " a=" + s.name(a));
      }
    }
    return item;
  }));
  items.push_back(timed([&] { return check_prime_filter_separation(s); }));
  items.push_back(timed([&] { return check_ie_oracle(ring); }));
  items.push_back(timed([&] { return check_minimals_sufficiency(ring); }));
  items.push_back(timed([&] { return check_meet_convention(ring); }));
  items.push_back(timed([&] { return check_equivalence(ring, envelope, options.seed); }));
  return report;
}

SweepSummary sweep(std::size_t max_size, std::size_t jobs, const SuiteOptions& options) {
  if (max_size < 1 || max_size > kMaxEnumerationSize) {
    throw Error(ErrorKind::kSizeCap, "max size " + std::to_string(max_size) + " outside 1.." +
                                         std::to_string(kMaxEnumerationSize));
  }
  const auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  summary.max_size = max_size;
  std::vector<Sus> instances;
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto level = gen_dsus(n);
    summary.sizes.push_back({n, count_posets(n, true), level.size(), 0});
    for (auto& s : level) instances.push_back(std::move(s));
  }

  summary.reports.resize(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      summary.reports[i] = run_suite(instances[i], options);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& report : summary.reports) {
    const std::size_t n = report.poset.size();
    ++summary.instances;
    summary.failures += report.failures();
    if (report.all_passed()) ++summary.sizes[n - 1].passed;
    if (report.zero_not_preserved) ++summary.zero_caveat_instances;
  }
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace envkit
