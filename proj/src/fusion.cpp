#include "atlas/fusion.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include "json.hpp"
#include <set>
#include <sstream>

#include "atlas/error.hpp"
#include "atlas/reptheory.hpp"

namespace atlas {

// ------------------------------------------------------------------ FusionRing

FusionRing::FusionRing(std::vector<std::string> labels, std::vector<Surd> dims, std::vector<std::size_t> duals,
                       std::vector<std::uint32_t> constants,
                       std::vector<std::pair<std::size_t, std::size_t>> blocks,
                       std::vector<std::string> block_names, std::vector<std::size_t> units)
    : labels_(std::move(labels)),
      dims_(std::move(dims)),
      duals_(std::move(duals)),
      constants_(std::move(constants)),
      blocks_(std::move(blocks)),
      block_names_(std::move(block_names)),
      units_(std::move(units)) {
  const std::size_t n = labels_.size();
  require(n > 0, ErrorKind::InvalidArgument, "fusion ring needs a basis");
  require(dims_.size() == n && duals_.size() == n && blocks_.size() == n && constants_.size() == n * n * n,
          ErrorKind::InvalidArgument, "fusion ring data sizes disagree");
  require(units_.size() == block_names_.size(), ErrorKind::InvalidArgument, "one unit per block required");
  for (std::size_t x = 0; x < n; ++x)
    require(duals_[x] < n && blocks_[x].first < units_.size() && blocks_[x].second < units_.size(),
            ErrorKind::InvalidArgument, "fusion ring index out of range");
}

std::optional<std::size_t> FusionRing::find(const std::string& label) const {
  for (std::size_t x = 0; x < labels_.size(); ++x)
    if (labels_[x] == label) return x;
  return std::nullopt;
}

std::size_t FusionRing::index_of(const std::string& label) const {
  auto x = find(label);
  require(x.has_value(), ErrorKind::InvalidArgument, "unknown label \"" + label + "\"");
  return *x;
}

std::string FusionRing::block_tag(std::size_t x) const {
  return block_names_[blocks_[x].first] + block_names_[blocks_[x].second];
}

RingElement FusionRing::basis(std::size_t x) const {
  RingElement e(size(), 0);
  e[x] = 1;
  return e;
}

RingElement FusionRing::multiply(const RingElement& a, const RingElement& b) const {
  const std::size_t n = size();
  RingElement out(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (a[x] == 0) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (b[y] == 0) continue;
      const std::int64_t c = a[x] * b[y];
      const std::uint32_t* row = &constants_[(x * n + y) * n];
      for (std::size_t z = 0; z < n; ++z)
        if (row[z] != 0) out[z] += c * row[z];
    }
  }
  return out;
}

RingElement FusionRing::conjugate(const RingElement& a) const {
  RingElement out(size(), 0);
  for (std::size_t x = 0; x < size(); ++x) out[duals_[x]] += a[x];
  return out;
}

std::int64_t FusionRing::pairing(const RingElement& a, const RingElement& b) {
  std::int64_t s = 0;
  for (std::size_t x = 0; x < a.size(); ++x) s += a[x] * b[x];
  return s;
}

std::string FusionRing::format(const RingElement& a) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] == 0) continue;
    const std::int64_t c = a[x];
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const std::int64_t m = c < 0 ? -c : c;
    if (m != 1) out << m << ' ';
    out << labels_[x];
    first = false;
  }
  return first ? "0" : out.str();
}

AxiomReport FusionRing::check_axioms() const {
  AxiomReport report;
  const std::size_t n = size();
  auto note = [&](bool& flag, const std::string& message) {
    if (flag && report.violation.empty()) report.violation = message;
    flag = false;
  };
  auto name = [&](std::size_t x) { return labels_[x]; };

  for (std::size_t b = 0; b < units_.size(); ++b) {
    const std::size_t e = units_[b];
    if (blocks_[e] != std::make_pair(b, b)) note(report.unit, "unit " + name(e) + " is not in its diagonal block");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::uint32_t left = (x == y && blocks_[x].first == b) ? 1 : 0;
        const std::uint32_t right = (x == y && blocks_[x].second == b) ? 1 : 0;
        if (N(e, x, y) != left) note(report.unit, "unit law fails for " + name(e) + " * " + name(x));
        if (N(x, e, y) != right) note(report.unit, "unit law fails for " + name(x) + " * " + name(e));
      }
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (duals_[duals_[x]] != x) note(report.duality, "dual of " + name(x) + " is not an involution");
    const auto [l, r] = blocks_[x];
    if (blocks_[duals_[x]] != std::make_pair(r, l)) note(report.duality, "dual of " + name(x) + " has the wrong block");
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t b = 0; b < units_.size(); ++b) {
        const std::uint32_t expected = (y == duals_[x] && b == l) ? 1 : 0;
        if (N(x, y, units_[b]) != expected) note(report.duality, "unit multiplicity wrong in " + name(x) + " * " + name(y));
      }
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::uint32_t v = N(x, y, z);
        if (v != N(duals_[x], z, y) || v != N(z, duals_[y], x) || v != N(duals_[y], duals_[x], duals_[z]))
          note(report.frobenius, "Frobenius reciprocity fails at (" + name(x) + ", " + name(y) + ", " + name(z) + ")");
        if (v != 0 && (blocks_[x].second != blocks_[y].first || blocks_[z].first != blocks_[x].first ||
                       blocks_[z].second != blocks_[y].second))
          note(report.frobenius, "constituent " + name(z) + " of " + name(x) + " * " + name(y) + " has the wrong block");
      }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (blocks_[x].second != blocks_[y].first) continue;
      try {
        Surd sum;
        for (std::size_t z = 0; z < n; ++z)
          if (N(x, y, z) != 0) sum = sum + Surd(Rational(N(x, y, z))) * dims_[z];
        if (!(sum == dims_[x] * dims_[y]))
          note(report.dimension, "dimension is not multiplicative on " + name(x) + " * " + name(y));
      } catch (const Error&) {
        note(report.dimension, "mixed radicands in " + name(x) + " * " + name(y));
      }
    }

  std::vector<std::uint64_t> left(n), right(n);
  for (std::size_t x = 0; x < n && report.associativity; ++x)
    for (std::size_t y = 0; y < n && report.associativity; ++y)
      for (std::size_t z = 0; z < n && report.associativity; ++z) {
        std::fill(left.begin(), left.end(), 0);
        std::fill(right.begin(), right.end(), 0);
        for (std::size_t w = 0; w < n; ++w) {
          if (const std::uint32_t a = N(x, y, w))
            for (std::size_t v = 0; v < n; ++v) left[v] += std::uint64_t{a} * N(w, z, v);
          if (const std::uint32_t a = N(y, z, w))
            for (std::size_t v = 0; v < n; ++v) right[v] += std::uint64_t{a} * N(x, w, v);
        }
        if (left != right)
          note(report.associativity, "associativity fails for (" + name(x) + ", " + name(y) + ", " + name(z) + ")");
      }
  return report;
}

void require_axioms(const FusionRing& ring, const std::string& what) {
  const AxiomReport report = ring.check_axioms();
  require(report.ok(), ErrorKind::Invariant, what + ": " + report.violation);
}

// ------------------------------------------------------------------ Rep(G)

FusionRing rep_ring(const PermGroup& group) {
  const GroupCharacters chars(group);
  const std::size_t n = chars.irrep_count(), k = chars.classes().count();
  const std::uint64_t p = chars.modulus();
  const auto& values = chars.table().values;
  std::vector<std::string> labels;
  std::vector<Surd> dims;
  std::vector<std::size_t> duals;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("chi." + std::to_string(x));
    dims.push_back(Surd::integer(static_cast<std::int64_t>(chars.degree(x))));
    duals.push_back(chars.dual(x));
  }
  std::vector<std::uint32_t> constants(n * n * n);
  std::vector<std::uint64_t> product(k);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t c = 0; c < k; ++c) product[c] = modp::mul(values[x][c], values[y][c], p);
      for (std::size_t z = 0; z < n; ++z)
        constants[(x * n + y) * n + z] = static_cast<std::uint32_t>(chars.multiplicity(product, z));
    }
  FusionRing ring(std::move(labels), std::move(dims), std::move(duals), std::move(constants),
                  std::vector<std::pair<std::size_t, std::size_t>>(n, {0, 0}), {""}, {0});
  require_axioms(ring, "rep ring");
  return ring;
}

// ------------------------------------------------------------------ bundle rings

namespace {

struct PairOrbit {
  Point u = 0, v = 0;
  std::unique_ptr<GroupCharacters> chars;  // stabilizer of (u, v)
};

// One fixed point y of a class representative s of the target stabilizer, with the classes of
// s transported into the stabilizers of the pair orbits of (x, y) and (y, z).
struct FixedTerm {
  std::size_t cls, first_orbit, first_class, second_orbit, second_class;
};

}  // namespace

FusionRing bundle_ring(const PermGroup& group, const std::vector<std::string>& block_names, BundleOptions options) {
  const std::size_t deg = group.degree();
  require(deg >= 1 && deg <= 64, ErrorKind::Guard, "bundle ring: degree must be between 1 and 64");
  require(group.order() <= kEnumerationGuard, ErrorKind::Guard, "bundle ring: group exceeds enumeration guard");

  const auto point_orbits = orbits(group);
  require(point_orbits.size() == block_names.size(), ErrorKind::InvalidArgument,
          "bundle ring: one block name per point orbit required");
  std::vector<std::size_t> point_block(deg);
  for (std::size_t b = 0; b < point_orbits.size(); ++b)
    for (Point p : point_orbits[b]) point_block[p] = b;

  // Pair orbits with elements carrying each pair to its orbit's least pair.
  const std::size_t npairs = deg * deg;
  std::vector<long> pair_orbit(npairs, -1);
  std::vector<Permutation> to_base(npairs);
  std::vector<PairOrbit> pair_orbits;
  for (std::size_t start = 0; start < npairs; ++start) {
    if (pair_orbit[start] >= 0) continue;
    const long id = static_cast<long>(pair_orbits.size());
    PairOrbit po;
    po.u = static_cast<Point>(start / deg);
    po.v = static_cast<Point>(start % deg);
    pair_orbits.push_back(std::move(po));
    std::vector<std::size_t> queue{start};
    std::vector<Permutation> from_base{Permutation(deg)};
    pair_orbit[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t cur = queue[head];
      const Permutation elem = from_base[head];
      for (const Permutation& g : group.generators()) {
        const std::size_t next = g(static_cast<Point>(cur / deg)) * deg + g(static_cast<Point>(cur % deg));
        if (pair_orbit[next] >= 0) continue;
        pair_orbit[next] = id;
        queue.push_back(next);
        from_base.push_back(g * elem);
      }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) to_base[queue[h]] = from_base[h].inverse();
  }

  const std::uint64_t modulus = choose_modulus(group.order(), group_exponent(group));
  for (PairOrbit& po : pair_orbits) {
    PermGroup stab = stabilizer(group, po.u);
    if (po.v != po.u) stab = stabilizer(stab, po.v);
    po.chars = std::make_unique<GroupCharacters>(std::move(stab), modulus);
  }

  // Basis: (pair orbit, irrep) in orbit-major order.
  std::vector<std::size_t> first_object;
  std::vector<std::string> labels;
  std::vector<Surd> dims;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::vector<std::pair<std::size_t, std::size_t>> object;  // (orbit, irrep)
  for (std::size_t i = 0; i < pair_orbits.size(); ++i) {
    const PairOrbit& po = pair_orbits[i];
    first_object.push_back(labels.size());
    const std::uint64_t orbit_u = point_orbits[point_block[po.u]].size();
    const std::uint64_t orbit_v = point_orbits[point_block[po.v]].size();
    const std::uint64_t fiber = group.order() / (orbit_u * po.chars->order());  // |Stab(u) . v|
    for (std::size_t r = 0; r < po.chars->irrep_count(); ++r) {
      labels.push_back("o" + std::to_string(i) + "." + std::to_string(r));
      const auto f = static_cast<std::int64_t>(fiber * po.chars->degree(r));
      dims.push_back(Surd::sqrt(Rational(f * f) * Rational(static_cast<std::int64_t>(orbit_u),
                                                           static_cast<std::int64_t>(orbit_v))));
      blocks.emplace_back(point_block[po.u], point_block[po.v]);
      object.emplace_back(i, r);
    }
  }
  const std::size_t n = labels.size();

  // Duals: the fiber over (v, u) is the contragredient, transported to the base of that orbit.
  std::vector<std::size_t> duals(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto [i, r] = object[x];
    const PairOrbit& po = pair_orbits[i];
    const std::size_t swapped = po.v * deg + po.u;
    const auto j = static_cast<std::size_t>(pair_orbit[swapped]);
    const Permutation& k = to_base[swapped];
    const Permutation k_inv = k.inverse();
    const GroupCharacters& target = *pair_orbits[j].chars;
    std::vector<std::uint64_t> values(target.classes().count());
    for (std::size_t c = 0; c < values.size(); ++c)
      values[c] = po.chars->value(r, conjugate(target.classes().representatives[c].inverse(), k_inv));
    const auto row = target.find_row(values);
    require(row.has_value(), ErrorKind::Invariant, "bundle ring: dual irrep not found");
    duals[x] = first_object[j] + *row;
  }

  // Fixed-point terms for each target orbit.
  std::vector<std::vector<FixedTerm>> terms(pair_orbits.size());
  for (std::size_t l = 0; l < pair_orbits.size(); ++l) {
    const PairOrbit& po = pair_orbits[l];
    const auto& classes = po.chars->classes();
    for (std::size_t c = 0; c < classes.count(); ++c) {
      const Permutation& s = classes.representatives[c];
      for (Point y = 0; y < deg; ++y) {
        if (s(y) != y) continue;
        const std::size_t xy = po.u * deg + y, yz = y * deg + po.v;
        const auto i = static_cast<std::size_t>(pair_orbit[xy]);
        const auto j = static_cast<std::size_t>(pair_orbit[yz]);
        terms[l].push_back({c, i, pair_orbits[i].chars->class_of(conjugate(s, to_base[xy])), j,
                            pair_orbits[j].chars->class_of(conjugate(s, to_base[yz]))});
      }
    }
  }

  // Tasks: (target orbit, first object, second object); each fills N(x, y, .) on that orbit.
  struct Task {
    std::size_t l, x, y;
  };
  std::vector<Task> tasks;
  for (std::size_t l = 0; l < pair_orbits.size(); ++l)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const bool relevant = std::any_of(terms[l].begin(), terms[l].end(), [&](const FixedTerm& t) {
          return t.first_orbit == object[x].first && t.second_orbit == object[y].first;
        });
        if (relevant) tasks.push_back({l, x, y});
      }

  std::vector<std::uint32_t> constants(n * n * n, 0);
  std::string failure;
  const auto ntasks = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (long t = 0; t < ntasks; ++t) {
    const Task& task = tasks[static_cast<std::size_t>(t)];
    const GroupCharacters& target = *pair_orbits[task.l].chars;
    const auto [i, rho] = object[task.x];
    const auto [j, sigma] = object[task.y];
    const auto& rho_values = pair_orbits[i].chars->table().values[rho];
    const auto& sigma_values = pair_orbits[j].chars->table().values[sigma];
    std::vector<std::uint64_t> f(target.classes().count(), 0);
    for (const FixedTerm& term : terms[task.l]) {
      if (term.first_orbit != i || term.second_orbit != j) continue;
      f[term.cls] = (f[term.cls] + modp::mul(rho_values[term.first_class], sigma_values[term.second_class], modulus)) %
                    modulus;
    }
    try {
      for (std::size_t tau = 0; tau < target.irrep_count(); ++tau)
        constants[(task.x * n + task.y) * n + first_object[task.l] + tau] =
            static_cast<std::uint32_t>(target.multiplicity(f, tau));
    } catch (const Error& e) {
#pragma omp critical(bundle_failure)
      failure = e.what();
    }
  }
  require(failure.empty(), ErrorKind::Invariant, "bundle ring: " + failure);

  std::vector<std::size_t> units;
  for (const auto& orbit : point_orbits) {
    const Point u = orbit.front();
    units.push_back(first_object[static_cast<std::size_t>(pair_orbit[u * deg + u])]);
  }
  FusionRing ring(std::move(labels), std::move(dims), std::move(duals), std::move(constants), std::move(blocks),
                  block_names, std::move(units));
  require_axioms(ring, "bundle ring");
  return ring;
}

FusionRing hecke_ring(const PermGroup& group, BundleOptions options) {
  require(is_transitive(group), ErrorKind::InvalidArgument, "hecke ring needs a transitive group");
  require(group.degree() <= 16, ErrorKind::Guard, "hecke ring: degree above 16");
  return bundle_ring(group, {"N"}, options);
}

FusionRing inclusion_ring(const PermGroup& group, BundleOptions options) {
  require(is_transitive(group), ErrorKind::InvalidArgument, "inclusion ring needs a transitive group");
  require(group.degree() <= 16, ErrorKind::Guard, "inclusion ring: degree above 16");
  const std::size_t deg = group.degree() + 1;
  std::vector<Permutation> gens;
  for (const Permutation& g : group.generators()) {
    std::vector<Point> images(deg);
    images[0] = 0;
    for (Point x = 0; x + 1 < deg; ++x) images[x + 1] = g(x) + 1;
    gens.emplace_back(std::move(images));
  }
  return bundle_ring(PermGroup(deg, std::move(gens)), {"M", "N"}, options);
}

RingElement decompose_product(const FusionRing& ring, const std::vector<std::string>& word) {
  require(!word.empty(), ErrorKind::InvalidArgument, "empty product");
  RingElement acc = ring.basis(ring.index_of(word.front()));
  for (std::size_t k = 1; k < word.size(); ++k) acc = ring.multiply(acc, ring.basis(ring.index_of(word[k])));
  return acc;
}

// ------------------------------------------------------------------ subrings

std::vector<std::size_t> subring_closure(const FusionRing& ring, std::vector<std::size_t> seed) {
  std::vector<bool> in(ring.size(), false);
  for (std::size_t x : seed) in[x] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < ring.size(); ++x) {
      if (!in[x]) continue;
      if (!in[ring.dual(x)]) in[ring.dual(x)] = changed = true;
      for (std::size_t y = 0; y < ring.size(); ++y) {
        if (!in[y]) continue;
        for (std::size_t z = 0; z < ring.size(); ++z)
          if (!in[z] && ring.N(x, y, z) != 0) in[z] = changed = true;
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < ring.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<std::vector<std::size_t>> find_subrings(const FusionRing& ring, std::size_t block) {
  require(block < ring.units().size(), ErrorKind::InvalidArgument, "find_subrings: no such block");
  const std::size_t unit = ring.units()[block];
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < ring.size(); ++x)
    if (ring.block(x) == std::make_pair(block, block)) members.push_back(x);
  require(members.size() <= 20, ErrorKind::Guard, "find_subrings: more than 20 basis elements");

  std::set<std::vector<std::size_t>> found;
  found.insert({unit});
  for (std::size_t x : members) found.insert(subring_closure(ring, {unit, x}));
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<std::vector<std::size_t>> current(found.begin(), found.end());
    for (std::size_t a = 0; a < current.size(); ++a)
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        std::vector<std::size_t> joined = current[a];
        joined.insert(joined.end(), current[b].begin(), current[b].end());
        if (found.insert(subring_closure(ring, joined)).second) changed = true;
        require(found.size() <= 4096, ErrorKind::Guard, "find_subrings: lattice too large");
      }
  }
  std::vector<std::vector<std::size_t>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// ------------------------------------------------------------------ export

std::string ring_to_json(const FusionRing& ring) {
  nlohmann::ordered_json j;
  j["schema"] = "sector-atlas/ring/1";
  auto& basis = j["basis"] = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < ring.size(); ++x) {
    nlohmann::ordered_json b;
    b["label"] = ring.label(x);
    b["dim"] = ring.dim(x).to_string();
    b["dual"] = ring.label(ring.dual(x));
    b["block"] = ring.block_tag(x);
    basis.push_back(b);
  }
  auto& units = j["units"] = nlohmann::ordered_json::array();
  for (std::size_t u : ring.units()) units.push_back(ring.label(u));
  auto& constants = j["constants"] = nlohmann::ordered_json::array();
  const std::size_t n = ring.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (const std::uint32_t v = ring.N(x, y, z)) constants.push_back({x, y, z, v});
  return j.dump(1) + "\n";
}

}  // namespace atlas
