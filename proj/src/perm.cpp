#include "atlas/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "atlas/error.hpp"

namespace atlas {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    require(x < images_.size() && !seen[x], ErrorKind::InvalidArgument,
            "permutation images are not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    require(text[i] == '(', ErrorKind::Parse, "cycle notation: expected '(' in \"" +
                                                  std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      require(i < text.size(), ErrorKind::Parse, "cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      require(std::isdigit(static_cast<unsigned char>(text[i])), ErrorKind::Parse,
              "cycle notation: expected a point in \"" + std::string(text) + "\"");
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        require(value < (1u << 24), ErrorKind::Parse, "cycle notation: point too large");
        ++i;
      }
      require(value < degree, ErrorKind::InvalidArgument,
              "cycle notation: point " + std::to_string(value) + " out of range for degree " +
                  std::to_string(degree));
      require(!used[value], ErrorKind::InvalidArgument,
              "cycle notation: point " + std::to_string(value) + " repeated");
      used[value] = 1;
      cycle.push_back(static_cast<Point>(value));
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) images[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<Point>(x);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t count = 0;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] == x) ++count;
  return count;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::optional<Point> Permutation::first_moved_point() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return static_cast<Point>(x);
  return std::nullopt;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    any = true;
    out << '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      if (!first) out << ' ';
      out << y;
      first = false;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require(a.degree() == b.degree(), ErrorKind::InvalidArgument, "composing permutations of different degree");
  Permutation result;
  result.images_.resize(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x) result.images_[x] = a.images_[b.images_[x]];
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation conjugate(const Permutation& element, const Permutation& by) {
  return by * element * by.inverse();
}

// ---------------------------------------------------------------- Transversal

Transversal::Transversal(std::size_t degree, const std::vector<Permutation>& generators, Point root)
    : root_(root), slot_(degree, -1) {
  require(root < degree, ErrorKind::InvalidArgument, "transversal root out of range");
  orbit_.push_back(root);
  slot_[root] = 0;
  elements_.emplace_back(degree);
  for (std::size_t i = 0; i < orbit_.size(); ++i) {
    const Point p = orbit_[i];
    for (const Permutation& s : generators) {
      const Point q = s(p);
      if (slot_[q] >= 0) continue;
      slot_[q] = static_cast<long>(elements_.size());
      elements_.push_back(s * elements_[static_cast<std::size_t>(slot_[p])]);
      orbit_.push_back(q);
    }
  }
}

const Permutation& Transversal::element(Point p) const {
  require(contains(p), ErrorKind::InvalidArgument, "point not in transversal orbit");
  return elements_[static_cast<std::size_t>(slot_[p])];
}

// ---------------------------------------------------------------- PermGroup

namespace {

// Incremental orbit extension that keeps earlier transversal elements fixed, so
// Schreier generators checked against them stay valid.
struct GrowingOrbit {
  std::vector<Point> orbit;
  std::vector<long> slot;
  std::vector<Permutation> elements;

  void init(std::size_t degree, Point root) {
    orbit.assign(1, root);
    slot.assign(degree, -1);
    slot[root] = 0;
    elements.assign(1, Permutation(degree));
  }

  void extend(const std::vector<Permutation>& generators) {
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const Point p = orbit[i];
      for (const Permutation& s : generators) {
        const Point q = s(p);
        if (slot[q] >= 0) continue;
        slot[q] = static_cast<long>(elements.size());
        elements.push_back(s * elements[static_cast<std::size_t>(slot[p])]);
        orbit.push_back(q);
      }
    }
  }
};

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  require(degree >= 1, ErrorKind::InvalidArgument, "group degree must be positive");
  for (const Permutation& g : generators_)
    require(g.degree() == degree, ErrorKind::InvalidArgument,
            "generator degree " + std::to_string(g.degree()) + " differs from group degree " +
                std::to_string(degree));
  {
    std::vector<char> used(degree, 0);
    for (Point b : base_prefix) {
      require(b < degree, ErrorKind::InvalidArgument, "base point out of range");
      require(!used[b], ErrorKind::InvalidArgument, "repeated base point");
      used[b] = 1;
    }
  }

  std::vector<GrowingOrbit> growing;
  std::vector<std::vector<std::vector<char>>> checked;
  auto push_level = [&](Point b) {
    levels_.push_back(Level{b, {}, {}});
    growing.emplace_back();
    growing.back().init(degree, b);
    checked.emplace_back();
  };
  for (Point b : base_prefix) push_level(b);

  // Sift through levels [from, size); returns the residue and the level where it stopped.
  auto sift_growing = [&](Permutation h, std::size_t from, std::size_t& stopped) {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Point p = h(levels_[l].base);
      if (growing[l].slot[p] < 0) {
        stopped = l;
        return h;
      }
      h = growing[l].elements[static_cast<std::size_t>(growing[l].slot[p])].inverse() * h;
    }
    stopped = levels_.size();
    return h;
  };

  auto add_residue = [&](const Permutation& r, std::size_t level) {
    if (level == levels_.size()) push_level(*r.first_moved_point());
    for (std::size_t l = 0; l <= level; ++l) {
      levels_[l].generators.push_back(r);
      growing[l].extend(levels_[l].generators);
    }
  };

  for (const Permutation& g : generators_) {
    std::size_t stopped = 0;
    Permutation r = sift_growing(g, 0, stopped);
    if (!r.is_identity()) add_residue(r, stopped);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      for (std::size_t pi = 0; pi < growing[l].orbit.size(); ++pi) {
        if (checked[l].size() <= pi) checked[l].resize(pi + 1);
        for (std::size_t si = 0; si < levels_[l].generators.size(); ++si) {
          if (checked[l][pi].size() <= si) checked[l][pi].resize(si + 1, 0);
          if (checked[l][pi][si]) continue;
          checked[l][pi][si] = 1;
          const Point p = growing[l].orbit[pi];
          const Permutation s = levels_[l].generators[si];
          const Point q = s(p);
          const Permutation& up = growing[l].elements[static_cast<std::size_t>(growing[l].slot[p])];
          const Permutation& uq = growing[l].elements[static_cast<std::size_t>(growing[l].slot[q])];
          Permutation h = uq.inverse() * s * up;
          if (h.is_identity()) continue;
          std::size_t stopped = 0;
          Permutation r = sift_growing(h, l + 1, stopped);
          if (r.is_identity()) continue;
          add_residue(r, stopped);
          changed = true;
        }
      }
    }
  }

  order_ = 1;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    levels_[l].transversal = Transversal(degree, levels_[l].generators, levels_[l].base);
    require(levels_[l].transversal.orbit().size() == growing[l].orbit.size(), ErrorKind::Invariant,
            "stabilizer chain orbit mismatch");
    order_ *= growing[l].orbit.size();
  }
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const Level& l : levels_) b.push_back(l.base);
  return b;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> result;
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const Level& l : levels_)
    for (const Permutation& g : l.generators)
      if (seen.insert(g).second) result.push_back(g);
  return result;
}

std::vector<Permutation> PermGroup::level_generators(std::size_t level) const {
  if (level >= levels_.size()) return {};
  return levels_[level].generators;
}

bool PermGroup::sift(Permutation& h, std::size_t from, std::size_t& stopped) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Point p = h(levels_[l].base);
    if (!levels_[l].transversal.contains(p)) {
      stopped = l;
      return false;
    }
    h = levels_[l].transversal.element(p).inverse() * h;
  }
  stopped = levels_.size();
  return h.is_identity();
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  Permutation h = g;
  std::size_t stopped = 0;
  return sift(h, 0, stopped);
}

std::vector<Permutation> PermGroup::elements() const {
  require(order_ <= kEnumerationGuard, ErrorKind::Guard,
          "group of order " + std::to_string(order_) + " exceeds the enumeration guard");
  std::vector<Permutation> result;
  result.reserve(order_);
  // Every element factors uniquely as u_0 u_1 ... u_{k-1} with u_l from level l.
  std::vector<Permutation> partial{Permutation(degree_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(partial.size() * levels_[l].transversal.orbit().size());
    for (Point p : levels_[l].transversal.orbit()) {
      const Permutation& u = levels_[l].transversal.element(p);
      for (const Permutation& rest : partial) next.push_back(u * rest);
    }
    partial = std::move(next);
  }
  result = std::move(partial);
  std::sort(result.begin(), result.end());
  return result;
}

PermGroup build_group(std::size_t degree, const std::vector<Permutation>& generators) {
  return PermGroup(degree, generators);
}

bool is_subgroup(const PermGroup& sub, const PermGroup& group) {
  if (sub.degree() != group.degree()) return false;
  for (const Permutation& g : sub.generators())
    if (!group.contains(g)) return false;
  return true;
}

// ---------------------------------------------------------------- orbits

std::vector<Point> orbit_of(const PermGroup& group, Point x) {
  require(x < group.degree(), ErrorKind::InvalidArgument, "point out of range");
  Transversal t(group.degree(), group.generators(), x);
  std::vector<Point> orbit = t.orbit();
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<Point>> orbits(const PermGroup& group, const std::vector<Point>& points) {
  std::vector<char> wanted(group.degree(), 0), done(group.degree(), 0);
  for (Point p : points) {
    require(p < group.degree(), ErrorKind::InvalidArgument, "point out of range");
    wanted[p] = 1;
  }
  std::vector<std::vector<Point>> result;
  for (Point p = 0; p < group.degree(); ++p) {
    if (!wanted[p] || done[p]) continue;
    std::vector<Point> orbit = orbit_of(group, p);
    std::vector<Point> kept;
    for (Point q : orbit) {
      done[q] = 1;
      if (wanted[q]) kept.push_back(q);
    }
    result.push_back(std::move(kept));
  }
  return result;
}

std::vector<std::vector<Point>> orbits(const PermGroup& group) {
  std::vector<Point> all(group.degree());
  std::iota(all.begin(), all.end(), Point{0});
  return orbits(group, all);
}

bool is_transitive(const PermGroup& group) {
  return orbit_of(group, 0).size() == group.degree();
}

// ---------------------------------------------------------------- stabilizers

namespace {

std::vector<Permutation> dedupe_nontrivial(const std::vector<Permutation>& gens) {
  std::vector<Permutation> out;
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const Permutation& g : gens)
    if (!g.is_identity() && seen.insert(g).second) out.push_back(g);
  return out;
}

}  // namespace

PermGroup stabilizer(const PermGroup& group, Point x) {
  require(x < group.degree(), ErrorKind::InvalidArgument, "point out of range");
  PermGroup chain(group.degree(), group.generators(), {x});
  return PermGroup(group.degree(), dedupe_nontrivial(chain.level_generators(1)));
}

std::vector<PermGroup> stabilizer_chain(const PermGroup& group, const std::vector<Point>& points) {
  PermGroup chain(group.degree(), group.generators(), points);
  std::vector<PermGroup> result;
  for (std::size_t i = 1; i <= points.size(); ++i)
    result.emplace_back(group.degree(), dedupe_nontrivial(chain.level_generators(i)));
  return result;
}

PermGroup restrict_to_complement(const PermGroup& group, const std::vector<Point>& removed) {
  std::vector<char> gone(group.degree(), 0);
  for (Point r : removed) {
    require(r < group.degree(), ErrorKind::InvalidArgument, "point out of range");
    gone[r] = 1;
  }
  std::vector<Point> label(group.degree(), 0);
  std::size_t n = 0;
  for (Point p = 0; p < group.degree(); ++p)
    if (!gone[p]) label[p] = static_cast<Point>(n++);
  require(n > 0, ErrorKind::InvalidArgument, "restriction leaves no points");
  std::vector<Permutation> gens;
  for (const Permutation& g : group.generators()) {
    std::vector<Point> images(n);
    for (Point p = 0; p < group.degree(); ++p) {
      if (gone[p]) {
        require(g(p) == p, ErrorKind::InvalidArgument, "generator moves a removed point");
        continue;
      }
      images[label[p]] = label[g(p)];
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, dedupe_nontrivial(gens));
}

// ---------------------------------------------------------------- coset action

PermGroup coset_action(const PermGroup& group, const PermGroup& sub) {
  require(is_subgroup(sub, group), ErrorKind::InvalidArgument, "coset action: not a subgroup");
  const std::vector<Permutation> sub_elements = sub.elements();
  auto canonical = [&](const Permutation& g) {
    Permutation best = g * sub_elements.front();
    for (const Permutation& h : sub_elements) {
      Permutation c = g * h;
      if (c < best) best = std::move(c);
    }
    return best;
  };
  std::vector<Permutation> reps{Permutation(group.degree())};
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.emplace(canonical(reps.front()), 0);
  const auto& gens = group.generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation key = canonical(gens[s] * reps[c]);
      auto [it, inserted] = index.emplace(std::move(key), reps.size());
      if (inserted) reps.push_back(gens[s] * reps[c]);
      images[s].push_back(static_cast<Point>(it->second));
    }
  }
  std::vector<Permutation> action;
  for (auto& img : images) action.emplace_back(std::move(img));
  return PermGroup(reps.size(), dedupe_nontrivial(action));
}

// ---------------------------------------------------------------- transitivity

TransitivityProfile transitivity_profile(const PermGroup& group) {
  TransitivityProfile profile;
  const std::size_t n = group.degree();
  if (!is_transitive(group)) return profile;
  PermGroup current = group;
  std::vector<char> fixed(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Point x = 0;
    while (fixed[x]) ++x;
    std::vector<Point> orbit = orbit_of(current, x);
    if (orbit.size() != n - step) break;
    ++profile.k;
    fixed[x] = 1;
    current = stabilizer(current, x);
  }
  std::uint64_t falling = 1;
  for (std::size_t i = 0; i < profile.k; ++i) falling *= n - i;
  profile.sharp = (falling == group.order());
  profile.full_symmetric = (profile.k == n);
  return profile;
}

// ---------------------------------------------------------------- blocks

std::optional<std::vector<std::vector<Point>>> primitivity_blocks(const PermGroup& group) {
  require(is_transitive(group), ErrorKind::InvalidArgument, "primitivity test needs a transitive group");
  const std::size_t n = group.degree();
  std::optional<std::vector<std::vector<Point>>> best;
  std::size_t best_size = n;
  for (Point x = 1; x < n; ++x) {
    std::vector<Point> parent(n);
    std::iota(parent.begin(), parent.end(), Point{0});
    auto find = [&](Point a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::vector<std::pair<Point, Point>> queue{{0, x}};
    parent[find(x)] = find(0);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto [a, b] = queue[q];
      for (const Permutation& s : group.generators()) {
        const Point ra = find(s(a)), rb = find(s(b));
        if (ra == rb) continue;
        parent[std::max(ra, rb)] = std::min(ra, rb);
        queue.emplace_back(s(a), s(b));
      }
    }
    std::vector<std::vector<Point>> classes;
    std::vector<long> class_of(n, -1);
    for (Point p = 0; p < n; ++p) {
      const Point r = find(p);
      if (class_of[r] < 0) {
        class_of[r] = static_cast<long>(classes.size());
        classes.emplace_back();
      }
      classes[static_cast<std::size_t>(class_of[r])].push_back(p);
    }
    const std::size_t size = classes.front().size();
    if (size < n && size < best_size) {
      best_size = size;
      best = std::move(classes);
    }
  }
  return best;
}

// ---------------------------------------------------------------- Frobenius

FrobeniusAnalysis frobenius_analysis(const PermGroup& group) {
  require(is_transitive(group), ErrorKind::InvalidArgument, "Frobenius analysis needs a transitive group");
  if (group.order() == group.degree()) return RegularGroup{};
  const std::vector<Permutation> elements = group.elements();
  std::vector<Permutation> kernel_elements;
  for (const Permutation& g : elements) {
    if (g.is_identity()) {
      kernel_elements.push_back(g);
      continue;
    }
    const std::size_t fixed = g.fixed_point_count();
    if (fixed > 1)
      return NotFrobenius{"element " + g.to_cycles() + " fixes " + std::to_string(fixed) + " points"};
    if (fixed == 0) kernel_elements.push_back(g);
  }
  require(kernel_elements.size() == group.degree(), ErrorKind::Invariant,
          "Frobenius kernel has order " + std::to_string(kernel_elements.size()) + ", expected degree " +
              std::to_string(group.degree()));
  std::unordered_set<Permutation, PermutationHash> kernel_set(kernel_elements.begin(), kernel_elements.end());
  for (const Permutation& a : kernel_elements) {
    require(kernel_set.count(a.inverse()) == 1, ErrorKind::Invariant, "Frobenius kernel not closed under inverse");
    for (const Permutation& b : kernel_elements)
      require(kernel_set.count(a * b) == 1, ErrorKind::Invariant, "Frobenius kernel not closed under product");
  }
  for (const Permutation& s : group.generators())
    for (const Permutation& k : kernel_elements)
      require(kernel_set.count(conjugate(k, s)) == 1, ErrorKind::Invariant, "Frobenius kernel not normal");

  std::vector<Permutation> kernel_gens;
  PermGroup kernel(group.degree(), {});
  for (const Permutation& k : kernel_elements) {
    if (kernel.contains(k)) continue;
    kernel_gens.push_back(k);
    kernel = PermGroup(group.degree(), kernel_gens);
  }
  require(kernel.order() == kernel_elements.size(), ErrorKind::Invariant, "Frobenius kernel order mismatch");
  PermGroup complement = stabilizer(group, 0);
  require(kernel.order() * complement.order() == group.order(), ErrorKind::Invariant,
          "Frobenius kernel and complement orders do not multiply to the group order");

  FrobeniusStructure result{kernel, complement, false, 0};
  bool abelian = true;
  for (const Permutation& a : kernel_gens)
    for (const Permutation& b : kernel_gens)
      if (a * b != b * a) abelian = false;
  std::uint64_t prime = 0;
  bool same_prime = true;
  for (const Permutation& k : kernel_elements) {
    if (k.is_identity()) continue;
    const std::uint64_t o = k.order();
    if (prime == 0) prime = o;
    if (o != prime) same_prime = false;
  }
  bool prime_order = prime >= 2;
  for (std::uint64_t d = 2; d * d <= prime; ++d)
    if (prime % d == 0) prime_order = false;
  result.kernel_elementary_abelian = abelian && same_prime && prime_order;
  result.kernel_prime = result.kernel_elementary_abelian ? prime : 0;
  return result;
}

// ---------------------------------------------------------------- double cosets

DoubleCosetDecomposition double_cosets(const PermGroup& group, const PermGroup& left,
                                       const PermGroup& right) {
  require(is_subgroup(left, group) && is_subgroup(right, group), ErrorKind::InvalidArgument,
          "double cosets: not subgroups");
  const std::vector<Permutation> elements = group.elements();
  const std::vector<Permutation> lefts = left.elements();
  const std::vector<Permutation> rights = right.elements();
  std::unordered_set<Permutation, PermutationHash> visited;
  DoubleCosetDecomposition result;
  for (const Permutation& g : elements) {
    if (visited.count(g)) continue;
    std::uint64_t size = 0;
    for (const Permutation& a : lefts) {
      const Permutation ag = a * g;
      for (const Permutation& b : rights)
        if (visited.insert(ag * b).second) ++size;
    }
    result.representatives.push_back(g);
    result.sizes.push_back(size);
  }
  return result;
}

// ---------------------------------------------------------------- conjugacy

namespace {

// Conjugacy class representatives (minimal elements) of an enumerated group.
std::vector<Permutation> class_minima(const PermGroup& group, const std::vector<Permutation>& elements) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> reps;
  for (const Permutation& g : elements) {
    if (seen.count(g)) continue;
    reps.push_back(g);
    std::vector<Permutation> frontier{g};
    seen.insert(g);
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (const Permutation& s : group.generators()) {
        Permutation c = conjugate(frontier[i], s);
        if (seen.insert(c).second) frontier.push_back(std::move(c));
      }
  }
  return reps;
}

std::vector<Permutation> small_generating_set(const PermGroup& group, const std::vector<Permutation>& elements) {
  if (group.order() == 1) return {};
  std::vector<Permutation> reps = class_minima(group, elements);
  std::stable_sort(reps.begin(), reps.end(),
                   [](const Permutation& a, const Permutation& b) { return a.order() > b.order(); });
  for (const Permutation& a : reps) {
    if (PermGroup(group.degree(), {a}).order() == group.order()) return {a};
    for (const Permutation& b : elements) {
      if (b.is_identity()) continue;
      if (PermGroup(group.degree(), {a, b}).order() == group.order()) return {a, b};
    }
  }
  std::vector<Permutation> gens;
  PermGroup current(group.degree(), {});
  for (const Permutation& g : group.generators()) {
    if (current.contains(g)) continue;
    gens.push_back(g);
    current = PermGroup(group.degree(), gens);
  }
  return gens;
}

// Finds c with c(g_i(x)) = h_i(c(x)) for all i, by point backtracking with propagation.
bool solve_simultaneous(const std::vector<Permutation>& g, const std::vector<Permutation>& h, std::size_t n,
                        std::vector<long>& map, std::vector<char>& used) {
  std::size_t x = 0;
  while (x < n && map[x] >= 0) ++x;
  if (x == n) return true;
  std::vector<Permutation> ginv, hinv;
  for (const auto& p : g) ginv.push_back(p.inverse());
  for (const auto& p : h) hinv.push_back(p.inverse());
  for (Point y = 0; y < n; ++y) {
    if (used[y]) continue;
    std::vector<long> saved_map = map;
    std::vector<char> saved_used = used;
    bool ok = true;
    std::vector<Point> queue{static_cast<Point>(x)};
    map[x] = y;
    used[y] = 1;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      const Point a = queue[q];
      const Point ca = static_cast<Point>(map[a]);
      for (std::size_t i = 0; i < g.size() && ok; ++i) {
        for (int dir = 0; dir < 2 && ok; ++dir) {
          const Point b = dir == 0 ? g[i](a) : ginv[i](a);
          const Point cb = dir == 0 ? h[i](ca) : hinv[i](ca);
          if (map[b] >= 0) {
            if (map[b] != static_cast<long>(cb)) ok = false;
          } else if (used[cb]) {
            ok = false;
          } else {
            map[b] = cb;
            used[cb] = 1;
            queue.push_back(b);
          }
        }
      }
    }
    if (ok && solve_simultaneous(g, h, n, map, used)) return true;
    map = std::move(saved_map);
    used = std::move(saved_used);
  }
  return false;
}

}  // namespace

std::optional<Permutation> perm_conjugacy_iso(const PermGroup& first, const PermGroup& second) {
  require(first.degree() == second.degree(), ErrorKind::InvalidArgument, "conjugacy test: degree mismatch");
  require(first.degree() <= 16, ErrorKind::Guard, "conjugacy test limited to degree 16");
  const std::size_t n = first.degree();
  if (first.order() != second.order()) return std::nullopt;
  if (first.order() == 1) return Permutation(n);
  const std::vector<Permutation> elements1 = first.elements();
  const std::vector<Permutation> elements2 = second.elements();
  const std::vector<Permutation> gens = small_generating_set(first, elements1);
  const std::vector<Permutation> reps2 = class_minima(second, elements2);

  std::vector<Permutation> images;
  std::optional<Permutation> found;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == gens.size()) {
      std::vector<long> map(n, -1);
      std::vector<char> used(n, 0);
      if (!solve_simultaneous(gens, images, n, map, used)) return false;
      std::vector<Point> img(n);
      for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>(map[x]);
      found = Permutation(std::move(img));
      return true;
    }
    const auto type = gens[i].cycle_type();
    const std::vector<Permutation>& pool = (i == 0) ? reps2 : elements2;
    for (const Permutation& candidate : pool) {
      if (candidate.cycle_type() != type) continue;
      images.push_back(candidate);
      if (self(self, i + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  search(search, 0);
  if (found) {
    for (const Permutation& g : first.generators())
      require(second.contains(conjugate(g, *found)), ErrorKind::Invariant, "conjugacy witness check failed");
  }
  return found;
}

// ---------------------------------------------------------------- ElementIndex

ElementIndex::ElementIndex(const PermGroup& group) : elements_(group.elements()) {
  lookup_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) lookup_.emplace(elements_[i], i);
}

std::optional<std::size_t> ElementIndex::find(const Permutation& g) const {
  auto it = lookup_.find(g);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t ElementIndex::index(const Permutation& g) const {
  auto it = lookup_.find(g);
  require(it != lookup_.end(), ErrorKind::InvalidArgument, "element not in group: " + g.to_cycles());
  return it->second;
}

}  // namespace atlas
