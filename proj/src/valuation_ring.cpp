#include "envelope_kit/valuation_ring.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "envelope_kit/error.hpp"

namespace envkit {

namespace {

FreeVector relation_vector(const Sus& s, Element x, Element y) {
  FreeVector v = zero_vector(s.size());
  v[s.join(x, y)] += 1;
  v[*s.meet(x, y)] += 1;
  v[x] -= 1;
  v[y] -= 1;
  return v;
}

// Non-meet-irreducibles are offered as pivots first.
std::vector<std::size_t> pivot_priority(const Sus& s) {
  std::vector<std::size_t> order;
  for (Element x = 0; x < s.size(); ++x) {
    if (!s.is_meet_irreducible(x)) order.push_back(x);
  }
  for (Element m : s.meet_irreducibles()) order.push_back(m);
  return order;
}

}  // namespace

std::vector<FreeVector> relation_generators(const Sus& s) {
  const std::size_t n = s.size();
  std::set<std::pair<Element, Element>> seen;
  std::vector<FreeVector> out;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        Element x = s.join(a, c);
        Element y = s.join(b, c);
        if (!s.meet(x, y)) continue;
        if (x > y) std::swap(x, y);
        // Comparable pairs give the zero vector.
        if (s.leq(x, y) || s.leq(y, x)) continue;
        if (seen.emplace(x, y).second) out.push_back(relation_vector(s, x, y));
      }
    }
  }
  return out;
}

ValuationRing ValuationRing::build(const Sus& s) {
  ValuationRing r;
  r.source_ = s;
  r.generators_ = relation_generators(s);
  r.relations_ = HermiteBasis(s.size(), pivot_priority(s));
  for (const auto& g : r.generators_) r.relations_.insert(g);
  r.relations_.normalize();
  r.snf_ = smith_invariants(r.relations_.rows());
  r.basis_cols_ = r.relations_.free_columns();
  r.iota_.reserve(s.size());
  for (Element x = 0; x < s.size(); ++x) {
    r.iota_.push_back(r.canonical(unit_vector(s.size(), x)));
  }
  return r;
}

bool ValuationRing::torsion_free() const {
  return std::all_of(snf_.begin(), snf_.end(), [](const Integer& d) { return d == 1; });
}

bool ValuationRing::unit_pivots() const {
  const auto& rows = relations_.rows();
  const auto& pivots = relations_.pivot_columns();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i][pivots[i]] != 1) return false;
  }
  return true;
}

bool ValuationRing::equivalent(const FreeVector& v, const FreeVector& w) const {
  FreeVector d = v;
  add_scaled(d, w, -1);
  return relations_.contains(d);
}

FreeVector ValuationRing::multiply(const FreeVector& u, const FreeVector& v) const {
  FreeVector out = zero_vector(dim());
  for (Element x = 0; x < dim(); ++x) {
    if (sgn(u[x]) == 0) continue;
    for (Element y = 0; y < dim(); ++y) {
      if (sgn(v[y]) == 0) continue;
      out[source_.join(x, y)] += u[x] * v[y];
    }
  }
  return canonical(std::move(out));
}

IntVector ValuationRing::coordinates(const FreeVector& v) const {
  if (!unit_pivots()) throw Error(ErrorKind::kNotWellDefined, "relation basis has non-unit pivots");
  const auto c = canonical(v);
  IntVector out;
  out.reserve(basis_cols_.size());
  for (auto col : basis_cols_) out.push_back(c[col]);
  return out;
}

std::string ValuationRing::format(const FreeVector& v) const {
  return format_vector(v, source_.poset().names());
}

Integer GroupValuation::reduce(Integer v) const {
  if (modulus == 0) return v;
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), modulus);
  return r;
}

bool is_valuation(const Sus& s, const GroupValuation& f) {
  if (f.values.size() != s.size()) throw Error(ErrorKind::kParseError, "valuation has wrong length");
  for (const auto& g : relation_generators(s)) {
    Integer total = 0;
    for (Element x = 0; x < s.size(); ++x) total += g[x] * f.values[x];
    if (f.reduce(total) != 0) return false;
  }
  return true;
}

Integer GroupHom::operator()(const FreeVector& v) const {
  Integer total = 0;
  for (std::size_t x = 0; x < v.size(); ++x) total += v[x] * f_.values[x];
  return f_.reduce(total);
}

GroupHom induced_hom(const ValuationRing& r, const GroupValuation& f) {
  if (f.values.size() != r.dim()) throw Error(ErrorKind::kParseError, "valuation has wrong length");
  GroupHom phi(f.modulus, f.values);
  for (const auto& g : r.generators()) {
    if (phi(g) != 0) throw Error(ErrorKind::kNotAValuation, "nonzero on " + r.format(g));
  }
  return phi;
}

FreeVector RingMap::operator()(const FreeVector& v) const {
  FreeVector out = zero_vector(to_->dim());
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (sgn(v[x]) != 0) add_scaled(out, images_[x], v[x]);
  }
  return to_->canonical(std::move(out));
}

RingMap v_functor(const ValuationRing& r1, const ValuationRing& r2, const SemiHom& h) {
  if (!h.verified()) throw Error(ErrorKind::kFlagsNotVerified, "");
  std::vector<FreeVector> images;
  images.reserve(r1.dim());
  for (Element x = 0; x < r1.dim(); ++x) images.push_back(r2.iota(h(x)));
  RingMap map(r1, r2, std::move(images));
  for (const auto& g : r1.generators()) {
    if (!is_zero(map(g))) throw Error(ErrorKind::kNotWellDefined, "relation " + r1.format(g));
  }
  return map;
}

VerificationItem check_ring_map(const RingMap& map) {
  auto item = make_item("ring_map");
  const auto& r1 = map.from();
  const auto& r2 = map.to();
  for (Element x = 0; x < r1.dim(); ++x) {
    const auto ex = unit_vector(r1.dim(), x);
    for (Element y = 0; y < r1.dim(); ++y) {
      const auto ey = unit_vector(r1.dim(), y);
      FreeVector sum = ex;
      add_scaled(sum, ey, 1);
      FreeVector image_sum = map(ex);
      add_scaled(image_sum, map(ey), 1);
      if (map(sum) != r2.canonical(image_sum)) item.fail("additive at " + r1.source().name(x));
      if (map(r1.multiply(ex, ey)) != r2.multiply(map(ex), map(ey))) {
        item.fail("multiplicative at (" + r1.source().name(x) + "," + r1.source().name(y) + ")");
      }
    }
  }
  return item;
}

VerificationItem check_ideal(const ValuationRing& r) {
  auto item = make_item("relation_ideal");
  for (const auto& g : r.generators()) {
    for (Element t = 0; t < r.dim(); ++t) {
      if (!is_zero(r.multiply(g, unit_vector(r.dim(), t)))) {
        item.fail("(" + r.format(g) + ")*" + r.source().name(t));
      }
    }
  }
  return item;
}

VerificationItem check_iota_injective(const ValuationRing& r) {
  auto item = make_item("iota_injective");
  for (Element x = 0; x < r.dim(); ++x) {
    for (Element y = x + 1; y < r.dim(); ++y) {
      if (r.iota(x) == r.iota(y)) {
        item.fail("iota(" + r.source().name(x) + ") = iota(" + r.source().name(y) + ")");
      }
    }
  }
  return item;
}

VerificationItem check_infinite_order(const ValuationRing& r) {
  auto item = make_item("iota_infinite_order");
  // v has finite order iff it lies in the rational span of the relations.
  for (Element x = 0; x < r.dim(); ++x) {
    HermiteBasis extended = r.relations();
    extended.insert(unit_vector(r.dim(), x));
    if (extended.rank() == r.relations().rank()) item.fail("iota(" + r.source().name(x) + ")");
  }
  return item;
}

VerificationItem check_basis(const ValuationRing& r) {
  auto item = make_item("basis_rank_snf");
  const Sus& s = r.source();
  const auto& mi = s.meet_irreducibles();
  if (r.rank() != mi.size()) {
    item.fail("rank " + std::to_string(r.rank()) + " != |M| " + std::to_string(mi.size()));
  }
  if (!r.torsion_free()) item.fail("nontrivial invariant factor");
  const ElementSet cols(r.basis_columns().begin(), r.basis_columns().end());
  if (cols != mi) item.fail("basis columns differ from M");
  if (item.passed()) {
    std::vector<IntVector> square;
    for (Element m : mi) square.push_back(r.coordinates(r.iota(m)));
    const Integer det = determinant(square);
    if (abs(det) != 1) item.fail("iota(M) has determinant " + det.get_str());
  }
  item.note = "rank " + std::to_string(r.rank());
  return item;
}

VerificationItem check_retract(const ValuationRing& r, Element a) {
  const Sus& s = r.source();
  if (!std::binary_search(s.minimal().begin(), s.minimal().end(), a)) {
    throw Error(ErrorKind::kNotMinimal, s.name(a));
  }
  auto item = make_item("retract");
  const std::string at = " a=" + s.name(a);
  const SubSus sub = principal_filter(s, a);
  const auto local = ValuationRing::build(sub.sus);

  std::vector<Element> j_map(s.size());
  for (Element x = 0; x < s.size(); ++x) j_map[x] = *sub.from_parent[s.join(x, a)];
  const auto incl = make_semi_hom(sub.sus, s, sub.to_parent);
  const auto proj = make_semi_hom(s, sub.sus, std::move(j_map));
  if (!incl.verified() || !proj.verified()) {
    item.fail("inclusion or x -> x∨a is not a homomorphism" + at);
    return item;
  }
  const auto theta = v_functor(local, r, incl);
  const auto phi = v_functor(r, local, proj);

  for (Element x = 0; x < local.dim(); ++x) {
    if (phi(theta(local.iota(x))) != local.iota(x)) {
      item.fail("phi_a(theta_a(x)) != x at x=" + sub.sus.name(x) + at);
    }
  }

  // M([a,1]) against M(L) ∩ Z^[a,1]: eliminate the coordinates outside the
  // interval first; the remaining rows span the intersection.
  std::vector<std::size_t> priority;
  for (Element x = 0; x < s.size(); ++x) {
    if (!sub.from_parent[x]) priority.push_back(x);
  }
  for (Element x : sub.to_parent) priority.push_back(x);
  HermiteBasis global(s.size(), priority);
  for (const auto& g : r.generators()) global.insert(g);
  global.normalize();
  HermiteBasis intersection(s.size(), priority);
  for (std::size_t i = 0; i < global.rank(); ++i) {
    const auto col = global.pivot_columns()[i];
    if (sub.from_parent[col]) intersection.insert(global.rows()[i]);
  }
  intersection.normalize();
  HermiteBasis embedded(s.size(), priority);
  for (const auto& g : local.generators()) {
    FreeVector v = zero_vector(s.size());
    for (Element x = 0; x < local.dim(); ++x) v[sub.to_parent[x]] = g[x];
    embedded.insert(std::move(v));
  }
  embedded.normalize();
  if (!(embedded == intersection)) item.fail("M([a,1]) != M(L) ∩ Z^[a,1]" + at);

  // theta_a injective: the images of [a,1] span a rank equal to rank V([a,1]).
  HermiteBasis image = r.relations();
  for (Element x = 0; x < local.dim(); ++x) image.insert(theta(unit_vector(local.dim(), x)));
  if (image.rank() - r.relations().rank() != local.rank()) item.fail("theta_a not injective" + at);
  return item;
}

std::vector<GroupValuation> prime_filter_valuations(const Sus& s) {
  if (!s.is_lattice()) throw Error(ErrorKind::kNotALattice, "");
  std::vector<GroupValuation> out;
  const Element bottom = *s.bottom();
  for (Element j = 0; j < s.size(); ++j) {
    if (j == bottom) continue;
    bool prime = true;
    for (Element x = 0; x < s.size() && prime; ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        if (s.leq(j, s.join(x, y)) && !s.leq(j, x) && !s.leq(j, y)) {
          prime = false;
          break;
        }
      }
    }
    if (!prime) continue;
    GroupValuation f{2, std::vector<Integer>(s.size(), 0)};
    for (Element x = 0; x < s.size(); ++x) f.values[x] = s.leq(j, x) ? 1 : 0;
    out.push_back(std::move(f));
  }
  return out;
}

VerificationItem check_prime_filter_separation(const Sus& s) {
  auto item = make_item("prime_filter_separation");
  if (!s.is_lattice()) {
    item.status = CheckStatus::kNotApplicable;
    item.note = "not a lattice";
    return item;
  }
  const auto valuations = prime_filter_valuations(s);
  for (const auto& f : valuations) {
    if (!is_valuation(s, f)) item.fail("indicator is not a valuation");
  }
  for (Element x = 0; x < s.size(); ++x) {
    for (Element y = x + 1; y < s.size(); ++y) {
      const bool separated = std::any_of(valuations.begin(), valuations.end(), [&](const auto& f) {
        return f.values[x] != f.values[y];
      });
      if (!separated) item.fail("(" + s.name(x) + "," + s.name(y) + ") not separated");
    }
  }
  item.note = std::to_string(valuations.size()) + " prime filters";
  return item;
}

}  // namespace envkit
