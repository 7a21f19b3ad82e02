#include "atlas/families.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

#include "atlas/error.hpp"
#include "atlas/fixtures.hpp"
#include "atlas/gfield.hpp"

namespace atlas {

namespace {

using Index = FiniteField::Index;

std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r *= n - i;
  return r;
}

Permutation from_map(std::size_t degree, const std::function<Point(Point)>& map) {
  std::vector<Point> images(degree);
  for (Point x = 0; x < degree; ++x) images[x] = map(x);
  return Permutation(std::move(images));
}

void expect(bool ok, const std::string& what) {
  require(ok, ErrorKind::Invariant, "group self-check failed: " + what);
}

// Confirms order and that the group is sharply t-transitive.
void check_sharp(const PermGroup& g, std::size_t t, const std::string& name) {
  expect(g.order() == falling_factorial(g.degree(), t), name + " order");
  expect(transitivity_profile(g).k >= t, name + " transitivity");
}

// Translations x -> x + e_i for the standard basis of GF(p)^k, as index maps.
std::vector<Permutation> translations(const FiniteField& f, std::size_t degree) {
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < f.degree(); ++i) {
    FFElem e = f.zero();
    e.coefficients[i] = 1;
    const Index shift = f.index(e);
    gens.push_back(from_map(degree, [&](Point x) { return x < f.size() ? f.add(x, shift) : x; }));
  }
  return gens;
}

FiniteField field_of(std::uint64_t q) {
  auto [p, k] = prime_power(q);
  return FiniteField(p, k);
}

// q = p^(2l) with p odd; returns the involution power l.
unsigned involution_power(std::uint64_t q, const char* name) {
  auto [p, k] = prime_power(q);
  require(p % 2 == 1 && k % 2 == 0, ErrorKind::InvalidArgument,
          std::string(name) + " needs q an even power of an odd prime, got " + std::to_string(q));
  return k / 2;
}

// Moebius map (a x + b) / (c x + d) on GF(q) plus infinity (index q).
Point moebius(const FiniteField& f, Index a, Index b, Index c, Index d, Point x) {
  const Point inf = static_cast<Point>(f.size());
  if (x == inf) return c == 0 ? inf : f.mul(a, f.inv(c));
  const Index num = f.add(f.mul(a, x), b);
  const Index den = f.add(f.mul(c, x), d);
  if (den == 0) return inf;
  return f.mul(num, f.inv(den));
}

std::uint64_t parse_uint(std::string_view s, const std::string& context) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  require(ec == std::errc() && ptr == s.data() + s.size() && !s.empty(), ErrorKind::Parse,
          "expected a non-negative integer in " + context + ", got \"" + std::string(s) + "\"");
  return value;
}

// Parses nested bracket lists of integers: [[[a,b],[c,d]], ...].
std::vector<Matrix> parse_matrices(std::string_view s, const std::string& context) {
  std::vector<Matrix> result;
  std::size_t i = 0;
  auto expect_char = [&](char c) {
    require(i < s.size() && s[i] == c, ErrorKind::Parse, "malformed matrix list in " + context);
    ++i;
  };
  auto parse_row = [&] {
    std::vector<std::uint32_t> row;
    expect_char('[');
    while (true) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      row.push_back(static_cast<std::uint32_t>(parse_uint(s.substr(i, j - i), context)));
      i = j;
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      expect_char(']');
      return row;
    }
  };
  auto parse_matrix = [&] {
    Matrix m;
    expect_char('[');
    while (true) {
      m.push_back(parse_row());
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      expect_char(']');
      return m;
    }
  };
  expect_char('[');
  if (i < s.size() && s[i] == ']') {
    ++i;
  } else {
    while (true) {
      result.push_back(parse_matrix());
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      expect_char(']');
      break;
    }
  }
  require(i == s.size(), ErrorKind::Parse, "trailing characters after matrix list in " + context);
  return result;
}

}  // namespace

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  require(q >= 2, ErrorKind::InvalidArgument, "q must be a prime power, got " + std::to_string(q));
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  unsigned k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  require(r == 1, ErrorKind::InvalidArgument, "q must be a prime power, got " + std::to_string(q));
  return {p, k};
}

PermGroup symmetric(std::size_t n) {
  require(n >= 2 && n <= 12, ErrorKind::InvalidArgument, "symmetric group degree must be in [2, 12]");
  std::vector<Point> cycle(n);
  for (Point x = 0; x < n; ++x) cycle[x] = static_cast<Point>((x + 1) % n);
  std::vector<Point> swap(n);
  for (Point x = 0; x < n; ++x) swap[x] = x;
  std::swap(swap[0], swap[1]);
  std::vector<Permutation> gens{Permutation(swap)};
  if (n > 2) gens.emplace_back(cycle);
  PermGroup g(n, gens);
  expect(g.order() == falling_factorial(n, n), "symmetric order");
  return g;
}

PermGroup alternating(std::size_t n) {
  require(n >= 2 && n <= 12, ErrorKind::InvalidArgument, "alternating group degree must be in [2, 12]");
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i) {
    std::vector<Point> images(n);
    for (Point x = 0; x < n; ++x) images[x] = x;
    images[0] = 1;
    images[1] = i;
    images[i] = 0;
    gens.emplace_back(images);
  }
  PermGroup g(n, gens);
  expect(g.order() == falling_factorial(n, n) / 2, "alternating order");
  return g;
}

PermGroup affine_frobenius(std::uint64_t p, unsigned k, const std::vector<Matrix>& matrices, bool require_free) {
  const FiniteField f(p, k);
  require(f.size() <= 4096, ErrorKind::Guard, "affine group degree exceeds 4096");
  const std::size_t degree = f.size();
  std::vector<Permutation> gens = translations(f, degree);
  for (const Matrix& m : matrices) {
    require(m.size() == k, ErrorKind::InvalidArgument, "matrix has wrong number of rows");
    for (const auto& row : m) {
      require(row.size() == k, ErrorKind::InvalidArgument, "matrix has wrong number of columns");
      for (std::uint32_t c : row) require(c < p, ErrorKind::InvalidArgument, "matrix entry not reduced mod p");
    }
    auto apply = [&](Point x) {
      const FFElem v = f.element(x);
      FFElem w = f.zero();
      for (unsigned r = 0; r < k; ++r) {
        std::uint64_t s = 0;
        for (unsigned c = 0; c < k; ++c) s += std::uint64_t{m[r][c]} * v.coefficients[c];
        w.coefficients[r] = static_cast<std::uint32_t>(s % p);
      }
      return static_cast<Point>(f.index(w));
    };
    std::vector<Point> images(degree);
    std::vector<char> hit(degree, 0);
    for (Point x = 0; x < degree; ++x) {
      images[x] = apply(x);
      require(!hit[images[x]], ErrorKind::InvalidArgument, "singular matrix in affine group");
      hit[images[x]] = 1;
    }
    gens.emplace_back(std::move(images));
  }
  PermGroup g(degree, gens);
  if (require_free) {
    const PermGroup complement = stabilizer(g, 0);
    for (const Permutation& h : complement.elements())
      require(h.is_identity() || h.fixed_point_count() == 1, ErrorKind::InvalidArgument,
              "matrix group fixes a nonzero vector, so the affine group is not Frobenius");
  }
  return g;
}

PermGroup hq(std::uint64_t q) {
  const FiniteField f = field_of(q);
  std::vector<Permutation> gens = translations(f, q);
  const Index zeta = f.primitive_index();
  gens.push_back(from_map(q, [&](Point x) { return f.mul(zeta, x); }));
  PermGroup g(q, gens);
  check_sharp(g, 2, "H(q)");
  return g;
}

PermGroup sq(std::uint64_t q) {
  const unsigned l = involution_power(q, "S(q)");
  const FiniteField f = field_of(q);
  std::vector<Permutation> gens = translations(f, q);
  const Index zeta = f.primitive_index();
  const Index zeta2 = f.mul(zeta, zeta);
  gens.push_back(from_map(q, [&](Point x) { return f.mul(zeta2, x); }));
  gens.push_back(from_map(q, [&](Point x) { return f.mul(zeta, f.frobenius(x, l)); }));
  PermGroup g(q, gens);
  check_sharp(g, 2, "S(q)");
  return g;
}

PermGroup tq(std::uint64_t q) {
  const FiniteField f = field_of(q);
  std::vector<Permutation> gens = translations(f, q);
  const Index zeta = f.primitive_index();
  gens.push_back(from_map(q, [&](Point x) { return f.mul(zeta, x); }));
  if (f.degree() > 1) gens.push_back(from_map(q, [&](Point x) { return f.frobenius(x, 1); }));
  PermGroup g(q, gens);
  expect(g.order() == q * (q - 1) * f.degree(), "T(q) order");
  expect(is_transitive(g), "T(q) transitivity");
  expect(stabilizer(g, 0).order() == (q - 1) * f.degree(), "T(q) point stabilizer order");
  return g;
}

PermGroup pgl2(std::uint64_t q) {
  const FiniteField f = field_of(q);
  const std::size_t degree = q + 1;
  std::vector<Permutation> gens = translations(f, degree);
  const Index zeta = f.primitive_index(), one = f.one_index();
  gens.push_back(from_map(degree, [&](Point x) { return moebius(f, zeta, 0, 0, one, x); }));
  gens.push_back(from_map(degree, [&](Point x) { return moebius(f, 0, one, one, 0, x); }));
  PermGroup g(degree, gens);
  check_sharp(g, 3, "PGL2(q)");
  return g;
}

PermGroup psl2(std::uint64_t q) {
  require(q % 2 == 1, ErrorKind::InvalidArgument,
          "psl2 needs odd q; for even q PSL2(q) = PGL2(q), use pgl2:" + std::to_string(q));
  const FiniteField f = field_of(q);
  const std::size_t degree = q + 1;
  std::vector<Permutation> gens = translations(f, degree);
  const Index zeta = f.primitive_index(), one = f.one_index();
  const Index zeta2 = f.mul(zeta, zeta);
  gens.push_back(from_map(degree, [&](Point x) { return moebius(f, zeta2, 0, 0, one, x); }));
  gens.push_back(from_map(degree, [&](Point x) { return moebius(f, 0, f.neg(one), one, 0, x); }));
  PermGroup g(degree, gens);
  expect(g.order() == q * (q * q - 1) / 2, "PSL2(q) order");
  expect(transitivity_profile(g).k >= 2, "PSL2(q) 2-transitivity");
  return g;
}

PermGroup mq(std::uint64_t q) {
  const unsigned l = involution_power(q, "M(q)");
  const FiniteField f = field_of(q);
  const std::size_t degree = q + 1;
  const Point inf = static_cast<Point>(q);
  std::vector<Permutation> gens = translations(f, degree);
  const Index zeta = f.primitive_index(), one = f.one_index();
  const Index zeta2 = f.mul(zeta, zeta);
  gens.push_back(from_map(degree, [&](Point x) { return moebius(f, zeta2, 0, 0, one, x); }));
  gens.push_back(from_map(degree, [&](Point x) { return moebius(f, 0, f.neg(one), one, 0, x); }));
  // diag(zeta, 1) has non-square determinant, so it acts through the involution.
  gens.push_back(from_map(degree, [&](Point x) {
    return x == inf ? inf : moebius(f, zeta, 0, 0, one, f.frobenius(x, l));
  }));
  PermGroup g(degree, gens);
  check_sharp(g, 3, "M(q)");
  return g;
}

PermGroup mathieu(unsigned n) {
  require(n == 11 || n == 12, ErrorKind::InvalidArgument, "Mathieu group index must be 11 or 12");
  std::istringstream in{std::string(fixture_text("mathieu" + std::to_string(n)))};
  std::size_t degree = 0;
  std::uint64_t order = 0;
  std::vector<std::string> cycles;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string key;
    words >> key;
    if (key == "degree") words >> degree;
    else if (key == "order") words >> order;
    else if (key == "gen") {
      std::string rest;
      std::getline(words, rest);
      cycles.push_back(rest);
    }
  }
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(Permutation::from_cycles(degree, c));
  PermGroup g(degree, gens);
  expect(degree == n && g.order() == order, "Mathieu order");
  check_sharp(g, n - 7, "Mathieu");
  if (n == 11) {
    const PermGroup point_stabilizer = restrict_to_complement(stabilizer(g, 10), {10});
    expect(perm_conjugacy_iso(point_stabilizer, mq(9)).has_value(),
           "M11 point stabilizer conjugate to M(9)");
  }
  return g;
}

std::vector<Matrix> quaternion_gl2_3() { return {{{0, 1}, {2, 0}}, {{1, 1}, {1, 2}}}; }

GroupSpec parse_group_spec(const std::string& text) {
  GroupSpec spec;
  spec.text = text;
  const auto colon = text.find(':');
  require(colon != std::string::npos, ErrorKind::Parse,
          "group spec \"" + text + "\" must look like kind:parameter (e.g. sym:5, pgl2:7)");
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  using K = GroupSpec::Kind;
  const std::pair<const char*, K> simple[] = {{"sym", K::Sym},   {"alt", K::Alt},   {"h", K::H},
                                              {"s", K::S},       {"t", K::T},       {"pgl2", K::Pgl2},
                                              {"psl2", K::Psl2}, {"m", K::M},       {"mathieu", K::Mathieu}};
  for (const auto& [name, k] : simple) {
    if (kind == name) {
      spec.kind = k;
      spec.n = parse_uint(arg, "group spec \"" + text + "\"");
      return spec;
    }
  }
  if (kind == "affine") {
    spec.kind = K::Affine;
    // p=..,k=..,gens=[...]
    const auto gens_pos = arg.find("gens=");
    const std::string head = arg.substr(0, gens_pos == std::string::npos ? arg.size() : gens_pos);
    std::istringstream parts(head);
    std::string item;
    while (std::getline(parts, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      require(eq != std::string::npos, ErrorKind::Parse, "affine spec: expected key=value, got \"" + item + "\"");
      const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
      if (key == "p") spec.p = parse_uint(value, "affine p");
      else if (key == "k") spec.k = static_cast<unsigned>(parse_uint(value, "affine k"));
      else fail(ErrorKind::Parse, "affine spec: unknown key \"" + key + "\"");
    }
    require(spec.p > 0 && spec.k > 0, ErrorKind::Parse, "affine spec needs p= and k=");
    if (gens_pos != std::string::npos) spec.matrices = parse_matrices(arg.substr(gens_pos + 5), "affine gens");
    return spec;
  }
  if (kind == "perm") {
    spec.kind = K::Perm;
    const auto colon2 = arg.find(':');
    spec.n = parse_uint(arg.substr(0, colon2), "perm degree");
    if (colon2 != std::string::npos) {
      std::istringstream parts(arg.substr(colon2 + 1));
      std::string item;
      while (std::getline(parts, item, ';'))
        if (!item.empty()) spec.cycles.push_back(item);
    }
    return spec;
  }
  fail(ErrorKind::Parse, "unknown group kind \"" + kind +
                             "\" (expected sym, alt, h, s, t, pgl2, psl2, m, mathieu, affine, perm)");
}

PermGroup build_group(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  const std::uint64_t guard_q = 4096;
  switch (spec.kind) {
    case K::Sym: return symmetric(spec.n);
    case K::Alt: return alternating(spec.n);
    case K::Mathieu: return mathieu(static_cast<unsigned>(spec.n));
    case K::Affine: return affine_frobenius(spec.p, spec.k, spec.matrices);
    case K::Perm: {
      require(spec.n >= 1 && spec.n <= 4096, ErrorKind::InvalidArgument, "perm degree must be in [1, 4096]");
      std::vector<Permutation> gens;
      for (const auto& c : spec.cycles) gens.push_back(Permutation::from_cycles(spec.n, c));
      return PermGroup(spec.n, gens);
    }
    default: break;
  }
  require(spec.n <= guard_q, ErrorKind::Guard, "q exceeds 4096");
  switch (spec.kind) {
    case K::H: return hq(spec.n);
    case K::S: return sq(spec.n);
    case K::T: return tq(spec.n);
    case K::Pgl2: return pgl2(spec.n);
    case K::Psl2: return psl2(spec.n);
    case K::M: return mq(spec.n);
    default: fail(ErrorKind::Invariant, "unhandled group kind");
  }
}

PermGroup group_from_spec(const std::string& text) { return build_group(parse_group_spec(text)); }

}  // namespace atlas
