#include "atlas/reptheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "atlas/error.hpp"
#include "atlas/gfield.hpp"

namespace atlas {

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  require(a % p != 0, ErrorKind::Invariant, "inverting zero modulo a prime");
  return pow(a, p - 2, p);
}

}  // namespace modp

namespace {

using Matrix = std::vector<std::vector<std::uint64_t>>;

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

// Characteristic polynomial coefficients c[0..n] (c[n] = 1) by Faddeev-LeVerrier; needs p > n.
std::vector<std::uint64_t> characteristic_polynomial(const Matrix& a, std::uint64_t p) {
  const std::size_t n = a.size();
  std::vector<std::uint64_t> c(n + 1, 0);
  c[n] = 1;
  Matrix m(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] = add(next[i][j], modp::mul(a[i][l], m[l][j], p), p);
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] = add(next[i][i], c[n - k + 1], p);
    std::uint64_t trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace = add(trace, modp::mul(a[i][l], next[l][i], p), p);
    c[n - k] = modp::mul(sub(0, trace, p), modp::inv(k, p), p);
    m = std::move(next);
  }
  return c;
}

std::vector<std::uint64_t> roots(const std::vector<std::uint64_t>& poly, std::uint64_t p) {
  std::vector<std::uint64_t> result;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = add(modp::mul(v, x, p), poly[i], p);
    if (v == 0) result.push_back(x);
  }
  return result;
}

// Basis (rows) of the nullspace of a (rows x cols), returned in reduced echelon form.
Matrix nullspace(Matrix a, std::uint64_t p) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t scale = modp::inv(a[r][c], p);
    for (auto& x : a[r]) x = modp::mul(x, scale, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = sub(a[i][j], modp::mul(f, a[r][j], p), p);
    }
    pivot_of_col[c] = static_cast<long>(r);
    ++r;
  }
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = sub(0, a[static_cast<std::size_t>(pivot_of_col[c])][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Row-reduces a set of vectors; returns the basis and pivot columns.
std::pair<Matrix, std::vector<std::size_t>> echelon(Matrix rows, std::uint64_t p) {
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const std::uint64_t scale = modp::inv(rows[r][c], p);
    for (auto& x : rows[r]) x = modp::mul(x, scale, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = sub(rows[i][j], modp::mul(f, rows[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return {rows, pivots};
}

std::uint64_t isqrt(std::uint64_t v) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::uint64_t lift_small(std::uint64_t residue, std::uint64_t p, const char* what) {
  require(residue <= p / 2, ErrorKind::Invariant, std::string(what) + " does not lift to a small integer");
  return residue;
}

}  // namespace

std::uint64_t choose_modulus(std::uint64_t order, std::uint64_t exponent) {
  require(exponent >= 1, ErrorKind::InvalidArgument, "exponent must be positive");
  std::uint64_t candidate = (2 * order + exponent - 1) / exponent * exponent + 1;
  while (!is_prime(candidate)) {
    candidate += exponent;
    require(candidate < (1ull << 31), ErrorKind::Guard, "no suitable prime modulus below 2^31");
  }
  return candidate;
}

ConjClasses conjugacy_classes(const PermGroup& group, const ElementIndex& index) {
  require(group.order() <= kEnumerationGuard, ErrorKind::Guard, "group too large for class enumeration");
  const auto& elements = index.elements();
  std::vector<long> raw_class(elements.size(), -1);
  std::vector<Permutation> reps;
  std::vector<std::uint64_t> sizes;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (raw_class[i] >= 0) continue;
    const long c = static_cast<long>(reps.size());
    reps.push_back(elements[i]);
    std::vector<std::size_t> frontier{i};
    raw_class[i] = c;
    for (std::size_t f = 0; f < frontier.size(); ++f)
      for (const Permutation& s : group.generators()) {
        const std::size_t j = index.index(conjugate(elements[frontier[f]], s));
        if (raw_class[j] < 0) {
          raw_class[j] = c;
          frontier.push_back(j);
        }
      }
    sizes.push_back(frontier.size());
  }
  std::vector<std::size_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return reps[a] < reps[b];
  });
  std::vector<std::size_t> rank(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  ConjClasses cc;
  for (std::size_t i : order) {
    cc.representatives.push_back(reps[i]);
    cc.sizes.push_back(sizes[i]);
    cc.element_orders.push_back(reps[i].order());
  }
  cc.class_of.resize(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) cc.class_of[i] = rank[static_cast<std::size_t>(raw_class[i])];
  for (const Permutation& r : cc.representatives) cc.inverse_class.push_back(cc.class_of[index.index(r.inverse())]);
  require(cc.representatives.front().is_identity(), ErrorKind::Invariant, "identity class is not first");
  return cc;
}

namespace {

void accumulate_target(const ElementIndex& index, const ConjClasses& classes, std::size_t t,
                       std::vector<std::uint64_t>& a) {
  const std::size_t k = classes.count();
  const Permutation& z = classes.representatives[t];
  const auto& elements = index.elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::size_t r = classes.class_of[i];
    const std::size_t s = classes.class_of[index.index(elements[i].inverse() * z)];
    ++a[(r * k + s) * k + t];
  }
}

}  // namespace

std::vector<std::uint64_t> class_structure_constants_serial(const ElementIndex& index, const ConjClasses& classes) {
  const std::size_t k = classes.count();
  std::vector<std::uint64_t> a(k * k * k, 0);
  for (std::size_t t = 0; t < k; ++t) accumulate_target(index, classes, t, a);
  return a;
}

std::vector<std::uint64_t> class_structure_constants(const ElementIndex& index, const ConjClasses& classes) {
  const std::size_t k = classes.count();
  std::vector<std::uint64_t> a(k * k * k, 0);
  // Each target class t writes a disjoint slice of a.
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < static_cast<long>(k); ++t) accumulate_target(index, classes, static_cast<std::size_t>(t), a);
  return a;
}

std::uint64_t group_exponent(const PermGroup& group) {
  std::uint64_t e = 1;
  for (const Permutation& g : group.elements()) e = std::lcm(e, g.order());
  return e;
}

GroupCharacters::GroupCharacters(PermGroup group, std::uint64_t modulus)
    : group_(std::move(group)), index_(group_), classes_(conjugacy_classes(group_, index_)) {
  const std::size_t k = classes_.count();
  std::uint64_t exponent = 1;
  for (std::uint64_t o : classes_.element_orders) exponent = std::lcm(exponent, o);
  const std::uint64_t order = group_.order();
  if (modulus == 0) modulus = choose_modulus(order, exponent);
  require(is_prime(modulus) && modulus > 2 * order && (modulus - 1) % exponent == 0, ErrorKind::InvalidArgument,
          "character table modulus must be a prime above 2|G| congruent to 1 modulo the exponent");
  const std::uint64_t p = modulus;
  table_.group_order = order;
  table_.exponent = exponent;
  table_.modulus = p;

  const std::vector<std::uint64_t> a = class_structure_constants(index_, classes_);

  // Sequential refinement of common eigenspaces of the class matrices A_r, (A_r)_{s,t} = a_{rst}.
  std::vector<Matrix> spaces{Matrix(k, std::vector<std::uint64_t>(k, 0))};
  for (std::size_t i = 0; i < k; ++i) spaces[0][i][i] = 1;
  for (std::size_t r = 1; r < k; ++r) {
    std::vector<Matrix> refined;
    for (Matrix& basis : spaces) {
      if (basis.size() == 1) {
        refined.push_back(std::move(basis));
        continue;
      }
      auto [ech, pivots] = echelon(basis, p);
      const std::size_t d = ech.size();
      // Restriction of A_r: column i holds the coordinates of A_r b_i.
      Matrix restricted(d, std::vector<std::uint64_t>(d, 0));
      Matrix image_vectors(d, std::vector<std::uint64_t>(k, 0));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t s = 0; s < k; ++s) {
          std::uint64_t v = 0;
          for (std::size_t t = 0; t < k; ++t)
            if (const std::uint64_t c = a[(r * k + s) * k + t]) v = add(v, modp::mul(c % p, ech[i][t], p), p);
          image_vectors[i][s] = v;
        }
        for (std::size_t j = 0; j < d; ++j) restricted[j][i] = image_vectors[i][pivots[j]];
      }
      const auto eigenvalues = roots(characteristic_polynomial(restricted, p), p);
      std::size_t covered = 0;
      for (std::uint64_t lambda : eigenvalues) {
        Matrix shifted = restricted;
        for (std::size_t j = 0; j < d; ++j) shifted[j][j] = sub(shifted[j][j], lambda, p);
        const Matrix coords = nullspace(shifted, p);
        Matrix sub_basis;
        for (const auto& c : coords) {
          std::vector<std::uint64_t> v(k, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (c[i])
              for (std::size_t t = 0; t < k; ++t) v[t] = add(v[t], modp::mul(c[i], ech[i][t], p), p);
          sub_basis.push_back(std::move(v));
        }
        covered += sub_basis.size();
        refined.push_back(std::move(sub_basis));
      }
      require(covered == d, ErrorKind::Invariant, "class matrix not diagonalizable over the chosen prime");
    }
    spaces = std::move(refined);
  }
  require(spaces.size() == k, ErrorKind::Invariant, "class matrices failed to separate the characters");

  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> rows;
  for (const Matrix& space : spaces) {
    std::vector<std::uint64_t> omega = space[0];
    const std::uint64_t scale = modp::inv(omega[0], p);
    for (auto& x : omega) x = modp::mul(x, scale, p);
    std::uint64_t norm = 0;
    for (std::size_t t = 0; t < k; ++t)
      norm = add(norm,
                 modp::mul(modp::mul(omega[t], omega[classes_.inverse_class[t]], p), modp::inv(classes_.sizes[t] % p, p), p),
                 p);
    const std::uint64_t degree_sq = modp::mul(order % p, modp::inv(norm, p), p);
    const std::uint64_t degree = isqrt(degree_sq);
    require(degree * degree == degree_sq && degree >= 1, ErrorKind::Invariant, "character degree is not an integer");
    std::vector<std::uint64_t> values(k);
    for (std::size_t t = 0; t < k; ++t)
      values[t] = modp::mul(modp::mul(omega[t], degree, p), modp::inv(classes_.sizes[t] % p, p), p);
    rows.emplace_back(degree, std::move(values));
  }
  std::sort(rows.begin(), rows.end());
  std::uint64_t sum_sq = 0;
  for (auto& [deg, vals] : rows) {
    table_.degrees.push_back(deg);
    table_.values.push_back(std::move(vals));
    sum_sq += deg * deg;
  }
  require(sum_sq == order, ErrorKind::Invariant, "character degrees do not square-sum to the group order");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t s = 0;
      for (std::size_t t = 0; t < k; ++t)
        s = add(s,
                modp::mul(classes_.sizes[t] % p,
                          modp::mul(table_.values[i][t], table_.values[j][classes_.inverse_class[t]], p), p),
                p);
      require(s == (i == j ? order % p : 0), ErrorKind::Invariant, "character rows are not orthogonal");
    }
  require(std::all_of(table_.values[0].begin(), table_.values[0].end(), [](std::uint64_t v) { return v == 1; }),
          ErrorKind::Invariant, "first character row is not trivial");
}

std::optional<std::size_t> GroupCharacters::find_row(const std::vector<std::uint64_t>& values) const {
  for (std::size_t i = 0; i < table_.values.size(); ++i)
    if (table_.values[i] == values) return i;
  return std::nullopt;
}

std::size_t GroupCharacters::dual(std::size_t irrep) const {
  std::vector<std::uint64_t> conj(classes_.count());
  for (std::size_t t = 0; t < conj.size(); ++t) conj[t] = table_.values[irrep][classes_.inverse_class[t]];
  auto row = find_row(conj);
  require(row.has_value(), ErrorKind::Invariant, "contragredient character not found");
  return *row;
}

std::uint64_t GroupCharacters::multiplicity(const std::vector<std::uint64_t>& class_function, std::size_t irrep) const {
  const std::uint64_t p = table_.modulus;
  std::uint64_t s = 0;
  for (std::size_t t = 0; t < classes_.count(); ++t)
    s = add(s,
            modp::mul(classes_.sizes[t] % p,
                      modp::mul(class_function[t], table_.values[irrep][classes_.inverse_class[t]], p), p),
            p);
  return lift_small(modp::mul(s, modp::inv(order() % p, p), p), p, "multiplicity");
}

CharacterTable character_table(const PermGroup& group) { return GroupCharacters(group).table(); }

RestrictionMatrix restriction_matrix(const GroupCharacters& group, const GroupCharacters& sub) {
  require(is_subgroup(sub.group(), group.group()), ErrorKind::InvalidArgument, "restriction: not a subgroup");
  require(group.modulus() == sub.modulus(), ErrorKind::InvalidArgument, "restriction: tables use different moduli");
  RestrictionMatrix result;
  const auto& sub_classes = sub.classes();
  for (std::size_t chi = 0; chi < group.irrep_count(); ++chi) {
    std::vector<std::uint64_t> restricted(sub_classes.count());
    for (std::size_t d = 0; d < sub_classes.count(); ++d)
      restricted[d] = group.value(chi, sub_classes.representatives[d]);
    std::vector<std::uint64_t> row;
    std::uint64_t total = 0;
    for (std::size_t psi = 0; psi < sub.irrep_count(); ++psi) {
      row.push_back(sub.multiplicity(restricted, psi));
      total += row.back() * sub.degree(psi);
    }
    require(total == group.degree(chi), ErrorKind::Invariant, "restriction does not preserve degree");
    result.entries.push_back(std::move(row));
  }
  return result;
}

std::uint64_t permutation_character_norm(const PermGroup& group) {
  std::uint64_t sum = 0;
  for (const Permutation& g : group.elements()) {
    const std::uint64_t f = g.fixed_point_count();
    sum += f * f;
  }
  require(sum % group.order() == 0, ErrorKind::Invariant, "permutation character norm is not an integer");
  return sum / group.order();
}

}  // namespace atlas
