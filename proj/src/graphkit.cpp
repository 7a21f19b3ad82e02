#include "atlas/graphkit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "atlas/error.hpp"
#include "atlas/reptheory.hpp"
#include "json.hpp"

namespace atlas {

bool BipartiteGraph::has_dims() const {
  auto all = [](const std::vector<GraphVertex>& vs) {
    return std::all_of(vs.begin(), vs.end(), [](const GraphVertex& v) { return v.dim.has_value(); });
  };
  return all(even) && all(odd);
}

void BipartiteGraph::validate() const {
  require(!even.empty(), ErrorKind::InvalidArgument, "graph has no even vertices");
  require(star < even.size(), ErrorKind::InvalidArgument, "distinguished vertex out of range");
  require(adjacency.size() == even.size(), ErrorKind::InvalidArgument, "adjacency row count mismatch");
  for (const auto& row : adjacency)
    require(row.size() == odd.size(), ErrorKind::InvalidArgument, "adjacency column count mismatch");
  std::set<std::string> labels;
  for (const auto* side : {&even, &odd})
    for (const auto& v : *side)
      require(labels.insert(v.label).second, ErrorKind::InvalidArgument, "duplicate vertex label " + v.label);
  std::vector<char> seen_even(even.size(), 0), seen_odd(odd.size(), 0);
  std::vector<std::size_t> queue{star};
  seen_even[star] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t e = queue[q];
    for (std::size_t o = 0; o < odd.size(); ++o) {
      if (!adjacency[e][o] || seen_odd[o]) continue;
      seen_odd[o] = 1;
      for (std::size_t e2 = 0; e2 < even.size(); ++e2)
        if (adjacency[e2][o] && !seen_even[e2]) {
          seen_even[e2] = 1;
          queue.push_back(e2);
        }
    }
  }
  require(std::all_of(seen_even.begin(), seen_even.end(), [](char c) { return c; }) &&
              std::all_of(seen_odd.begin(), seen_odd.end(), [](char c) { return c; }),
          ErrorKind::InvalidArgument, "graph is not connected from the distinguished vertex");
}

BipartiteGraph gbmn(const std::vector<std::uint32_t>& m, std::uint32_t n) {
  require(!m.empty() && m[0] == 1, ErrorKind::InvalidArgument, "family parameters need m_0 = 1");
  require(n >= 1, ErrorKind::InvalidArgument, "family parameter n must be at least 1");
  for (std::uint32_t mi : m) require(mi >= 1, ErrorKind::InvalidArgument, "family entries must be positive");
  std::int64_t msum = 0;
  for (std::uint32_t mi : m) msum += std::int64_t{mi} * mi;
  const Rational index(1 + msum * n);
  const Surd root = Surd::sqrt(index);
  BipartiteGraph g;
  const std::size_t l = m.size();
  for (std::size_t i = 0; i < l; ++i) g.even.push_back({"v0_" + std::to_string(i), Surd::integer(m[i])});
  for (std::uint32_t j = 1; j <= n; ++j) g.even.push_back({"v2_" + std::to_string(j), Surd::integer(msum)});
  for (std::size_t i = 0; i < l; ++i) g.odd.push_back({"v1_" + std::to_string(i), Surd::integer(m[i]) * root});
  g.adjacency.assign(l + n, std::vector<std::uint32_t>(l, 0));
  for (std::size_t i = 0; i < l; ++i) {
    g.adjacency[i][i] = 1;
    for (std::uint32_t j = 0; j < n; ++j) g.adjacency[l + j][i] = m[i];
  }
  g.star = 0;
  g.index = index;
  g.validate();
  return g;
}

BipartiteGraph star_graph(std::uint32_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "star graph needs at least one even vertex");
  BipartiteGraph g;
  for (std::uint32_t j = 0; j < n; ++j) g.even.push_back({"e" + std::to_string(j), Surd::integer(1)});
  g.odd.push_back({"o", Surd::sqrt(Rational(n))});
  g.adjacency.assign(n, std::vector<std::uint32_t>(1, 1));
  g.index = Rational(n);
  g.validate();
  return g;
}

BipartiteGraph tilde(const BipartiteGraph& graph) {
  graph.validate();
  BipartiteGraph t;
  const std::size_t ne = graph.even.size(), no = graph.odd.size();
  // New even: pendants (one per old even vertex), then old odd vertices.
  // New odd: old even vertices.
  std::optional<Surd> lambda, mu;
  if (graph.index) {
    lambda = Surd::sqrt(*graph.index);
    mu = Surd::sqrt(*graph.index + 1);
    t.index = *graph.index + 1;
  }
  const bool dims = graph.has_dims() && graph.index.has_value();
  for (const auto& v : graph.even)
    t.even.push_back({v.label + "'", dims ? std::optional<Surd>(*v.dim) : std::nullopt});
  for (const auto& w : graph.odd)
    t.even.push_back({w.label, dims ? std::optional<Surd>(*lambda * *w.dim) : std::nullopt});
  for (const auto& v : graph.even) t.odd.push_back({v.label, dims ? std::optional<Surd>(*mu * *v.dim) : std::nullopt});
  t.adjacency.assign(ne + no, std::vector<std::uint32_t>(ne, 0));
  for (std::size_t e = 0; e < ne; ++e) {
    t.adjacency[e][e] = 1;
    for (std::size_t o = 0; o < no; ++o) t.adjacency[ne + o][e] = graph.adjacency[e][o];
  }
  t.star = graph.star;
  t.validate();
  return t;
}

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

// Gram matrix Delta Delta^T over rationals.
RMatrix even_gram(const BipartiteGraph& g) {
  const std::size_t ne = g.even.size(), no = g.odd.size();
  RMatrix m(ne, std::vector<Rational>(ne, 0));
  for (std::size_t a = 0; a < ne; ++a)
    for (std::size_t b = 0; b < ne; ++b) {
      std::int64_t s = 0;
      for (std::size_t o = 0; o < no; ++o) s += std::int64_t{g.adjacency[a][o]} * g.adjacency[b][o];
      m[a][b] = s;
    }
  return m;
}

}  // namespace

std::optional<std::vector<Rational>> even_pf_vector(const BipartiteGraph& graph, Rational index) {
  RMatrix a = even_gram(graph);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i][i] -= index;
  std::vector<long> pivot_of_col(n, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv][c] == Rational(0)) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    const Rational scale = a[r][c];
    for (auto& x : a[r]) x /= scale;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == Rational(0)) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_of_col[c] = static_cast<long>(r);
    ++r;
  }
  if (n - r != 1) return std::nullopt;
  std::size_t free = 0;
  while (pivot_of_col[free] >= 0) ++free;
  std::vector<Rational> v(n, 0);
  v[free] = 1;
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_of_col[c] >= 0) v[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][free];
  if (v[graph.star] == Rational(0)) return std::nullopt;
  const Rational scale = v[graph.star];
  for (auto& x : v) {
    x /= scale;
    if (x <= Rational(0)) return std::nullopt;
  }
  return v;
}

void assign_dims(BipartiteGraph& graph, Rational index) {
  auto v = even_pf_vector(graph, index);
  require(v.has_value(), ErrorKind::InvalidArgument, "no positive Perron-Frobenius vector for the stated index");
  const Surd root = Surd::sqrt(index);
  for (std::size_t e = 0; e < graph.even.size(); ++e) graph.even[e].dim = Surd((*v)[e]);
  for (std::size_t o = 0; o < graph.odd.size(); ++o) {
    Rational s = 0;
    for (std::size_t e = 0; e < graph.even.size(); ++e) s += (*v)[e] * Rational(graph.adjacency[e][o]);
    graph.odd[o].dim = Surd(s) / root;
  }
  graph.index = index;
}

PfReport pf_check(const BipartiteGraph& graph, Rational index) {
  require(graph.has_dims(), ErrorKind::InvalidArgument, "Perron-Frobenius check needs dimension labels");
  PfReport report;
  const std::size_t ne = graph.even.size(), no = graph.odd.size();
  bool even_rational = std::all_of(graph.even.begin(), graph.even.end(),
                                   [](const GraphVertex& v) { return v.dim->is_rational() && v.dim->coefficient() > Rational(0); });
  if (even_rational) {
    const RMatrix gram = even_gram(graph);
    report.even_exact = true;
    for (std::size_t a = 0; a < ne; ++a) {
      Rational s = 0;
      for (std::size_t b = 0; b < ne; ++b) s += gram[a][b] * graph.even[b].dim->coefficient();
      if (s != index * graph.even[a].dim->coefficient()) report.even_exact = false;
    }
    report.odd_exact = true;
    for (std::size_t o = 0; o < no; ++o) {
      Rational s = 0;
      for (std::size_t e = 0; e < ne; ++e) s += Rational(graph.adjacency[e][o]) * graph.even[e].dim->coefficient();
      const Surd& d = *graph.odd[o].dim;
      if (d.coefficient() <= Rational(0) || s * s != index * d.square()) report.odd_exact = false;
    }
  }

  // Power iteration on Delta Delta^T from the all-ones vector.
  std::vector<double> x(ne, 1.0), y(ne), tmp(no);
  auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (std::size_t o = 0; o < no; ++o) {
      double s = 0;
      for (std::size_t e = 0; e < ne; ++e) s += graph.adjacency[e][o] * in[e];
      tmp[o] = s;
    }
    for (std::size_t e = 0; e < ne; ++e) {
      double s = 0;
      for (std::size_t o = 0; o < no; ++o) s += graph.adjacency[e][o] * tmp[o];
      out[e] = s;
    }
  };
  auto normalize = [](std::vector<double>& v) {
    double n = 0;
    for (double c : v) n += c * c;
    n = std::sqrt(n);
    for (double& c : v) c /= n;
  };
  normalize(x);
  double estimate = 0, residual = 1;
  for (int iter = 0; iter < 200000; ++iter) {
    apply(x, y);
    double rq = 0;
    for (std::size_t e = 0; e < ne; ++e) rq += x[e] * y[e];
    double res = 0;
    for (std::size_t e = 0; e < ne; ++e) res += (y[e] - rq * x[e]) * (y[e] - rq * x[e]);
    estimate = rq;
    residual = std::sqrt(res) / std::max(1.0, rq);
    if (residual < 1e-13) break;
    x = y;
    normalize(x);
  }
  report.eigenvalue_estimate = std::sqrt(estimate);
  report.residual = residual;
  const double target = static_cast<double>(index.numerator()) / static_cast<double>(index.denominator());
  report.numeric_ok = residual < 1e-10 && std::abs(estimate - target) < 1e-9 * std::max(1.0, target);
  return report;
}

BipartiteGraph principal_graph(const PermGroup& group) {
  require(group.degree() >= 2, ErrorKind::InvalidArgument, "principal graph needs degree at least 2");
  require(is_transitive(group), ErrorKind::InvalidArgument, "principal graph needs a transitive group");
  const PermGroup h = stabilizer(group, 0);
  const std::uint64_t p = GroupCharacters(h).modulus();
  const GroupCharacters hc(h, p);
  const auto orbit_list = orbits(h);
  BipartiteGraph g;
  for (std::size_t r = 0; r < hc.irrep_count(); ++r)
    g.odd.push_back({"h." + std::to_string(r),
                     Surd::integer(static_cast<std::int64_t>(hc.degree(r))) *
                         Surd::sqrt(Rational(static_cast<std::int64_t>(group.degree())))});
  for (std::size_t i = 0; i < orbit_list.size(); ++i) {
    const Point y = orbit_list[i].front();
    const GroupCharacters sc(i == 0 ? h : stabilizer(h, y), p);
    const RestrictionMatrix res = restriction_matrix(hc, sc);
    for (std::size_t r = 0; r < sc.irrep_count(); ++r) {
      g.even.push_back({"e" + std::to_string(i) + "." + std::to_string(r),
                        Surd::integer(static_cast<std::int64_t>(orbit_list[i].size() * sc.degree(r)))});
      std::vector<std::uint32_t> row;
      for (std::size_t psi = 0; psi < hc.irrep_count(); ++psi) row.push_back(static_cast<std::uint32_t>(res.entries[psi][r]));
      g.adjacency.push_back(std::move(row));
    }
  }
  g.star = 0;
  g.index = Rational(static_cast<std::int64_t>(group.degree()));
  g.validate();
  return g;
}

BipartiteGraph dual_principal_graph(const PermGroup& group, const PermGroup& sub) {
  require(is_subgroup(sub, group), ErrorKind::InvalidArgument, "dual graph: not a subgroup");
  const GroupCharacters gc(group);
  const GroupCharacters hc(sub, gc.modulus());
  const RestrictionMatrix res = restriction_matrix(gc, hc);
  const std::int64_t index = static_cast<std::int64_t>(group.order() / sub.order());
  BipartiteGraph g;
  for (std::size_t r = 0; r < gc.irrep_count(); ++r)
    g.even.push_back({"g." + std::to_string(r), Surd::integer(static_cast<std::int64_t>(gc.degree(r)))});
  for (std::size_t r = 0; r < hc.irrep_count(); ++r)
    g.odd.push_back({"h." + std::to_string(r),
                     Surd::integer(static_cast<std::int64_t>(hc.degree(r))) * Surd::sqrt(Rational(index))});
  for (const auto& row : res.entries) {
    std::vector<std::uint32_t> r32;
    for (auto v : row) r32.push_back(static_cast<std::uint32_t>(v));
    g.adjacency.push_back(std::move(r32));
  }
  g.star = 0;
  g.index = Rational(index);
  g.validate();
  return g;
}

// ---------------------------------------------------------------- isomorphism

namespace {

struct UnionGraph {
  std::size_t n1 = 0, n = 0;
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> neighbors;
  std::vector<int> initial;
};

// Vertex numbering: graph a even, a odd, then b even, b odd.
UnionGraph make_union(const BipartiteGraph& a, const BipartiteGraph& b) {
  UnionGraph u;
  u.n1 = a.even.size() + a.odd.size();
  u.n = u.n1 + b.even.size() + b.odd.size();
  u.neighbors.resize(u.n);
  const bool use_dims = a.has_dims() && b.has_dims();
  std::map<std::tuple<int, bool, std::string>, int> palette;
  auto add = [&](const BipartiteGraph& g, std::size_t offset) {
    const std::size_t ne = g.even.size();
    for (std::size_t e = 0; e < ne; ++e)
      for (std::size_t o = 0; o < g.odd.size(); ++o)
        if (const std::uint32_t m = g.adjacency[e][o]) {
          u.neighbors[offset + e].emplace_back(offset + ne + o, m);
          u.neighbors[offset + ne + o].emplace_back(offset + e, m);
        }
    auto color = [&](int parity, bool star, const GraphVertex& v) {
      std::string dim;
      if (use_dims) {
        const Rational sq = v.dim->square();
        dim = std::to_string(sq.numerator()) + "/" + std::to_string(sq.denominator());
      }
      auto key = std::make_tuple(parity, star, dim);
      auto it = palette.emplace(key, static_cast<int>(palette.size())).first;
      return it->second;
    };
    for (std::size_t e = 0; e < ne; ++e) u.initial.push_back(color(0, e == g.star, g.even[e]));
    for (std::size_t o = 0; o < g.odd.size(); ++o) u.initial.push_back(color(1, false, g.odd[o]));
  };
  add(a, 0);
  add(b, u.n1);
  // Palette ids depend on insertion order; remap to sorted keys for determinism.
  std::vector<int> remap(palette.size());
  int next = 0;
  for (const auto& [key, id] : palette) remap[static_cast<std::size_t>(id)] = next++;
  for (int& c : u.initial) c = remap[static_cast<std::size_t>(c)];
  return u;
}

std::vector<int> refine(const UnionGraph& u, std::vector<int> colors) {
  std::size_t count = std::set<int>(colors.begin(), colors.end()).size();
  while (true) {
    std::map<std::pair<int, std::vector<std::pair<int, std::uint32_t>>>, int> signatures;
    std::vector<std::pair<int, std::vector<std::pair<int, std::uint32_t>>>> sig(u.n);
    for (std::size_t v = 0; v < u.n; ++v) {
      std::vector<std::pair<int, std::uint32_t>> nb;
      for (auto [w, m] : u.neighbors[v]) nb.emplace_back(colors[w], m);
      std::sort(nb.begin(), nb.end());
      sig[v] = {colors[v], std::move(nb)};
      signatures.emplace(sig[v], 0);
    }
    int id = 0;
    for (auto& [key, value] : signatures) value = id++;
    std::vector<int> next(u.n);
    for (std::size_t v = 0; v < u.n; ++v) next[v] = signatures[sig[v]];
    const std::size_t new_count = signatures.size();
    colors = std::move(next);
    if (new_count == count) return colors;
    count = new_count;
  }
}

bool balanced(const UnionGraph& u, const std::vector<int>& colors) {
  std::map<int, long> diff;
  for (std::size_t v = 0; v < u.n; ++v) diff[colors[v]] += v < u.n1 ? 1 : -1;
  for (const auto& [c, d] : diff)
    if (d != 0) return false;
  return true;
}

bool search(const UnionGraph& u, const std::vector<int>& colors, std::vector<std::size_t>& mapping) {
  if (!balanced(u, colors)) return false;
  // Pick the smallest non-singleton class (first vertex of graph a in it).
  std::map<int, std::vector<std::size_t>> cls_a, cls_b;
  for (std::size_t v = 0; v < u.n; ++v) (v < u.n1 ? cls_a : cls_b)[colors[v]].push_back(v);
  int chosen = -1;
  std::size_t best = SIZE_MAX;
  for (const auto& [c, vs] : cls_a)
    if (vs.size() > 1 && vs.size() < best) {
      best = vs.size();
      chosen = c;
    }
  if (chosen < 0) {
    // Discrete: read off the bijection and verify adjacency.
    mapping.assign(u.n1, 0);
    for (const auto& [c, vs] : cls_a) mapping[vs[0]] = cls_b[c][0];
    for (std::size_t v = 0; v < u.n1; ++v) {
      std::vector<std::pair<std::size_t, std::uint32_t>> expected, actual;
      for (auto [w, m] : u.neighbors[v]) expected.emplace_back(mapping[w], m);
      actual = u.neighbors[mapping[v]];
      std::sort(expected.begin(), expected.end());
      std::sort(actual.begin(), actual.end());
      if (expected != actual) return false;
    }
    return true;
  }
  const std::size_t v = cls_a[chosen][0];
  const int fresh = *std::max_element(colors.begin(), colors.end()) + 1;
  for (std::size_t w : cls_b[chosen]) {
    std::vector<int> trial = colors;
    trial[v] = fresh;
    trial[w] = fresh;
    if (search(u, refine(u, trial), mapping)) return true;
  }
  return false;
}

}  // namespace

std::optional<GraphIsomorphism> graphs_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b) {
  a.validate();
  b.validate();
  require(a.even.size() + a.odd.size() <= 64 && b.even.size() + b.odd.size() <= 64, ErrorKind::Guard,
          "graph isomorphism limited to 64 vertices");
  if (a.even.size() != b.even.size() || a.odd.size() != b.odd.size()) return std::nullopt;
  const UnionGraph u = make_union(a, b);
  std::vector<std::size_t> mapping;
  if (!search(u, refine(u, u.initial), mapping)) return std::nullopt;
  GraphIsomorphism iso;
  const std::size_t ae = a.even.size(), be = b.even.size();
  for (std::size_t e = 0; e < ae; ++e) iso.even.push_back(mapping[e] - u.n1);
  for (std::size_t o = 0; o < a.odd.size(); ++o) iso.odd.push_back(mapping[ae + o] - u.n1 - be);
  return iso;
}

// ---------------------------------------------------------------- emitters

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

nlohmann::json vertex_json(const GraphVertex& v) {
  nlohmann::json j;
  j["label"] = v.label;
  if (v.dim) {
    const Rational sq = v.dim->square();
    j["dim2_num"] = sq.numerator();
    j["dim2_den"] = sq.denominator();
    j["radicand"] = v.dim->radicand();
  }
  return j;
}

GraphVertex vertex_from_json(const nlohmann::json& j) {
  GraphVertex v;
  v.label = j.at("label").get<std::string>();
  if (j.contains("dim2_num")) {
    const Rational sq(j.at("dim2_num").get<std::int64_t>(), j.at("dim2_den").get<std::int64_t>());
    v.dim = Surd::sqrt(sq);
    require(v.dim->radicand() == j.at("radicand").get<std::int64_t>(), ErrorKind::Parse,
            "graph JSON: radicand inconsistent with dim2 for " + v.label);
  }
  return v;
}

}  // namespace

std::string emit(const BipartiteGraph& graph, GraphFormat format, const std::string& name) {
  graph.validate();
  std::ostringstream out;
  switch (format) {
    case GraphFormat::Dot: {
      out << "graph " << quote(name) << " {\n";
      out << "  " << quote(graph.even[graph.star].label) << " [xlabel=\"*\"];\n";
      for (std::size_t e = 0; e < graph.even.size(); ++e)
        for (std::size_t o = 0; o < graph.odd.size(); ++o) {
          const std::uint32_t m = graph.adjacency[e][o];
          if (!m) continue;
          out << "  " << quote(graph.even[e].label) << " -- " << quote(graph.odd[o].label);
          if (m >= 2) out << " [label=\"" << m << "\"]";
          out << ";\n";
        }
      out << "}\n";
      break;
    }
    case GraphFormat::Json: {
      nlohmann::json j;
      j["schema"] = "sector-atlas/graph/1";
      j["even"] = nlohmann::json::array();
      for (const auto& v : graph.even) j["even"].push_back(vertex_json(v));
      j["odd"] = nlohmann::json::array();
      for (const auto& v : graph.odd) j["odd"].push_back(vertex_json(v));
      j["adj"] = graph.adjacency;
      j["star"] = graph.star;
      out << j.dump(2) << "\n";
      break;
    }
    case GraphFormat::Text: {
      if (graph.index) out << "index: " << Surd(*graph.index).to_string() << "\n";
      out << "even:\n";
      for (std::size_t e = 0; e < graph.even.size(); ++e)
        out << "  " << graph.even[e].label << ": " << (graph.even[e].dim ? graph.even[e].dim->to_string() : "?")
            << (e == graph.star ? " *" : "") << "\n";
      out << "odd:\n";
      for (const auto& v : graph.odd) out << "  " << v.label << ": " << (v.dim ? v.dim->to_string() : "?") << "\n";
      out << "edges:\n";
      for (std::size_t e = 0; e < graph.even.size(); ++e)
        for (std::size_t o = 0; o < graph.odd.size(); ++o)
          if (const std::uint32_t m = graph.adjacency[e][o]) {
            out << "  " << graph.even[e].label << " -- " << graph.odd[o].label;
            if (m >= 2) out << " x" << m;
            out << "\n";
          }
      break;
    }
  }
  return out.str();
}

BipartiteGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("graph JSON: ") + e.what());
  }
  require(j.value("schema", "") == "sector-atlas/graph/1", ErrorKind::Parse, "graph JSON: unknown schema");
  BipartiteGraph g;
  try {
    for (const auto& v : j.at("even")) g.even.push_back(vertex_from_json(v));
    for (const auto& v : j.at("odd")) g.odd.push_back(vertex_from_json(v));
    g.adjacency = j.at("adj").get<std::vector<std::vector<std::uint32_t>>>();
    g.star = j.at("star").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("graph JSON: ") + e.what());
  }
  g.validate();
  return g;
}

BipartiteGraph parse_graph_fixture(const std::string& text) {
  BipartiteGraph g;
  std::istringstream in(text);
  std::string line;
  std::map<std::string, std::size_t> even_index, odd_index;
  std::vector<std::tuple<std::string, std::string, std::uint32_t>> edges;
  bool star_set = false, any_missing = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream words(line);
    std::string key;
    if (!(words >> key)) continue;
    const std::string where = "graph fixture line " + std::to_string(line_no);
    if (key == "format") {
      std::string f;
      words >> f;
      require(f == "graph/1", ErrorKind::Parse, where + ": unsupported format " + f);
    } else if (key == "index") {
      std::string v;
      words >> v;
      const Surd s = Surd::parse(v);
      require(s.is_rational(), ErrorKind::Parse, where + ": index must be rational");
      g.index = s.coefficient();
    } else if (key == "even" || key == "odd") {
      std::string label, dim, flag;
      words >> label;
      require(!label.empty(), ErrorKind::Parse, where + ": missing label");
      GraphVertex v{label, std::nullopt};
      if (words >> dim && dim != "-") v.dim = Surd::parse(dim);
      if (!v.dim) any_missing = true;
      if (key == "even") {
        if (words >> flag) {
          require(flag == "*", ErrorKind::Parse, where + ": unexpected token " + flag);
          g.star = g.even.size();
          star_set = true;
        }
        even_index[label] = g.even.size();
        g.even.push_back(v);
      } else {
        odd_index[label] = g.odd.size();
        g.odd.push_back(v);
      }
    } else if (key == "edge") {
      std::string a, b;
      std::uint32_t m = 1;
      words >> a >> b;
      if (!(words >> m)) m = 1;
      edges.emplace_back(a, b, m);
    } else if (key == "name") {
      // informational
    } else {
      fail(ErrorKind::Parse, where + ": unknown keyword " + key);
    }
  }
  require(star_set, ErrorKind::Parse, "graph fixture: no distinguished vertex");
  g.adjacency.assign(g.even.size(), std::vector<std::uint32_t>(g.odd.size(), 0));
  for (const auto& [a, b, m] : edges) {
    std::string e = a, o = b;
    if (!even_index.count(e)) std::swap(e, o);
    require(even_index.count(e) && odd_index.count(o), ErrorKind::Parse,
            "graph fixture: edge " + a + " -- " + b + " must join an even and an odd vertex");
    g.adjacency[even_index[e]][odd_index[o]] += m;
  }
  g.validate();
  if (any_missing) {
    require(g.index.has_value(), ErrorKind::Parse, "graph fixture: dims missing and no index given");
    std::vector<std::optional<Surd>> stated;
    for (const auto& v : g.even) stated.push_back(v.dim);
    for (const auto& v : g.odd) stated.push_back(v.dim);
    assign_dims(g, *g.index);
    std::size_t k = 0;
    for (const auto* side : {&g.even, &g.odd})
      for (const auto& v : *side) {
        require(!stated[k] || *stated[k] == *v.dim, ErrorKind::Parse,
                "graph fixture: stated dim of " + v.label + " disagrees with the Perron-Frobenius vector");
        ++k;
      }
  }
  return g;
}

}  // namespace atlas
