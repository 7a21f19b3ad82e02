#include "atlas/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "atlas/error.hpp"
#include "atlas/families.hpp"
#include "atlas/fixtures.hpp"
#include "atlas/fusion.hpp"
#include "atlas/fusion_check.hpp"
#include "atlas/graphkit.hpp"
#include "atlas/reptheory.hpp"
#include "json.hpp"

namespace atlas {

namespace {

VerifyOutcome outcome(bool pass, std::string detail) { return {pass, std::move(detail)}; }

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + "]";
}

// ---- criterion 1: constructor self-checks and transitivity profiles

struct ZooCase {
  std::string family;
  std::uint64_t q;
};

VerifyOutcome check_zoo(const ZooCase& c) {
  const std::uint64_t q = c.q;
  const unsigned k = prime_power(q).second;
  PermGroup g;
  std::uint64_t order = 0;
  std::size_t degree = q;
  std::size_t want_k = 0;
  bool want_sharp = true;
  if (c.family == "h") {
    g = hq(q), order = q * (q - 1), want_k = 2;
  } else if (c.family == "s") {
    g = sq(q), order = q * (q - 1), want_k = 2;
  } else if (c.family == "t") {
    g = tq(q), order = q * (q - 1) * k, want_k = 2, want_sharp = k == 1;
  } else if (c.family == "pgl2") {
    g = pgl2(q), order = (q + 1) * q * (q - 1), degree = q + 1, want_k = 3;
  } else if (c.family == "psl2") {
    // Sharp only when |PSL2(q)| = (q + 1) q, that is q = 3.
    g = psl2(q), order = (q + 1) * q * (q - 1) / 2, degree = q + 1, want_k = 2, want_sharp = q == 3;
  } else {
    g = mq(q), order = (q + 1) * q * (q - 1), degree = q + 1, want_k = 3;
  }
  const auto profile = transitivity_profile(g);
  std::size_t got_k = profile.conventional_k();
  // T(q) only promises 2-transitivity; T(4) is the full symmetric group on 4 points.
  if (c.family == "t" && got_k >= want_k) got_k = want_k, want_sharp = profile.sharp;
  const bool pass = g.order() == order && g.degree() == degree && is_transitive(g) && got_k == want_k &&
                    profile.sharp == want_sharp;
  std::ostringstream detail;
  detail << "order " << g.order() << " (want " << order << "), degree " << g.degree() << ", "
         << (profile.sharp ? "sharply " : "") << profile.conventional_k() << "-transitive";
  return outcome(pass, detail.str());
}

// ---- criterion 3: Frobenius structure

VerifyOutcome check_frobenius(const PermGroup& g) {
  const auto analysis = frobenius_analysis(g);
  const auto* f = std::get_if<FrobeniusStructure>(&analysis);
  if (!f) return outcome(false, "not recognized as a Frobenius group");
  bool normal = true;
  for (const auto& x : f->kernel.generators())
    for (const auto& y : g.generators()) normal = normal && f->kernel.contains(conjugate(x, y));
  const bool primitive = !primitivity_blocks(g).has_value();
  const std::uint64_t h = f->complement.order();
  const auto dc = double_cosets(g, f->complement, f->complement);
  std::size_t small = 0;
  bool sizes_ok = true;
  for (auto s : dc.sizes) {
    if (s == h) ++small;
    else if (s != h * h) sizes_ok = false;
  }
  sizes_ok = sizes_ok && small == 1;
  const bool pass = normal && f->kernel.order() == g.degree() && f->kernel.order() * h == g.order() &&
                    (!primitive || f->kernel_elementary_abelian) && sizes_ok;
  std::ostringstream detail;
  detail << "kernel " << f->kernel.order() << (normal ? " normal" : " NOT normal")
         << (f->kernel_elementary_abelian ? " elementary abelian" : "") << ", complement " << h
         << (primitive ? ", primitive" : ", imprimitive") << ", " << dc.sizes.size() << " double cosets"
         << (sizes_ok ? "" : " with unexpected sizes");
  return outcome(pass, detail.str());
}

// SL2(3) inside SL2(5): quaternion units i, j and an element of order 3 normalizing them.
std::vector<Matrix> sl2_3_in_gl2_5() {
  return {{{0, 1}, {4, 0}}, {{2, 0}, {0, 3}}, {{1, 3}, {4, 3}}};
}

// ---- criterion 4: family closed forms

VerifyOutcome check_family(const std::vector<std::uint32_t>& m, std::uint32_t n) {
  const auto g = gbmn(m, n);
  std::int64_t msum = 0;
  for (auto x : m) msum += std::int64_t{x} * x;
  const Rational index(1 + msum * static_cast<std::int64_t>(n));
  const auto report = pf_check(g, index);
  const auto vec = even_pf_vector(g, index);
  bool vector_ok = vec.has_value() && vec->size() == m.size() + n;
  for (std::size_t i = 0; vector_ok && i < vec->size(); ++i)
    vector_ok = (*vec)[i] == Rational(i < m.size() ? std::int64_t{m[i]} : msum);
  std::ostringstream detail;
  detail << "index " << index.numerator() << (report.ok() ? ", PF identity exact" : ", PF identity FAILS")
         << (vector_ok ? ", eigenvector (m_i, m)" : ", eigenvector mismatch");
  return outcome(report.ok() && vector_ok, detail.str());
}

// ---- criteria 5 and 11: graph isomorphism against fixtures

VerifyOutcome compare_with_fixture(const std::string& fixture, const BipartiteGraph& computed) {
  const auto drawn = parse_graph_fixture(std::string(fixture_text(fixture)));
  const bool dims = drawn.has_dims() && computed.has_dims();
  const bool iso = graphs_isomorphic(drawn, computed).has_value();
  std::ostringstream detail;
  detail << fixture << ": " << drawn.even.size() << "+" << drawn.odd.size() << " vertices vs computed "
         << computed.even.size() << "+" << computed.odd.size() << (iso ? ", isomorphic" : ", NOT isomorphic")
         << (dims ? " with dims" : " (dims missing)");
  return outcome(iso && dims, detail.str());
}

std::pair<PermGroup, PermGroup> m10_m9() {
  const auto chain = stabilizer_chain(mathieu(11), {0, 1});
  return {chain[0], chain[1]};
}

// ---- criterion 8: fusion fixtures

VerifyOutcome check_fusion_fixture(const std::string& name) {
  const auto fixture = load_fusion_fixture(name);
  const auto report = check_fixture(fixture_ring(fixture), fixture);
  std::string detail = fixture.group + ": " + std::to_string(report.passed) + "/" +
                       std::to_string(report.checked) + " pass";
  for (const auto& s : report.statements)
    if (!s.given && !s.pass) detail += "; " + s.tag + " fails";
  return outcome(report.consistent, detail);
}

VerifyOutcome check_w_series() {
  const auto fixture = load_fusion_fixture("W-series");
  const auto report = check_fixture(fixture_ring(fixture), fixture);
  return outcome(!report.consistent, std::to_string(report.passed) + "/" + std::to_string(report.checked) +
                                         (report.consistent ? " pass; consistent" : " pass; inconsistent"));
}

VerifyOutcome check_c_zero() {
  const auto fixture = load_fusion_fixture("M-series");
  const auto report = check_fixture(fixture_ring(fixture), fixture);
  for (const auto& s : report.statements)
    if (s.tag == "c0")
      return outcome(s.pass, s.pass ? "<pi pi, nu> = 0 under the M-series labels"
                                    : "<pi pi, nu> = " + (s.sides.empty() ? "?" : s.sides.front()));
  return outcome(false, "statement c0 missing from the M-series fixture");
}

// ---- criterion 9: ring axioms and global dimension

VerifyOutcome check_ring(const FusionRing& ring, std::uint64_t global) {
  const auto axioms = ring.check_axioms();
  Rational total(0);
  for (std::size_t x = 0; x < ring.size(); ++x) total += ring.dim(x).square();
  const bool dim_ok = global == 0 || total == Rational(static_cast<std::int64_t>(global));
  std::string detail = std::to_string(ring.size()) + " basis elements, " +
                       (axioms.ok() ? "axioms hold" : "axiom failure: " + axioms.violation);
  if (global) detail += ", sum d^2 = " + std::to_string(total.numerator()) + " (want " + std::to_string(global) + ")";
  return outcome(axioms.ok() && dim_ok, detail);
}

// ---- criterion 10: subrings

// Each entry is a fixture label or a space-separated product of labels that must be simple.
std::vector<std::size_t> fixture_members(const FusionRing& ring, const std::string& fixture,
                                         const std::vector<std::string>& labels) {
  const auto fx = load_fusion_fixture(fixture);
  const auto report = check_fixture(ring, fx);
  std::map<std::string, std::string> assignment(report.assignment.begin(), report.assignment.end());
  std::vector<std::size_t> members;
  for (const auto& entry : labels) {
    std::vector<std::string> word;
    std::istringstream in(entry);
    for (std::string l; in >> l;) word.push_back(assignment.at(l));
    const auto product = decompose_product(ring, word);
    std::size_t total = 0, simple = 0;
    for (std::size_t x = 0; x < product.size(); ++x)
      if (product[x]) total += product[x], simple = x;
    require(total == 1, ErrorKind::Invariant, "\"" + entry + "\" is not a simple object");
    members.push_back(simple);
  }
  std::sort(members.begin(), members.end());
  return members;
}

VerifyOutcome check_named_subring(const std::string& spec, const std::string& fixture,
                                  const std::vector<std::string>& labels, const std::string& generator) {
  const auto ring = hecke_ring(group_from_spec(spec));
  const auto members = fixture_members(ring, fixture, labels);
  const auto subrings = find_subrings(ring);
  const bool found = std::find(subrings.begin(), subrings.end(), members) != subrings.end();
  const auto generated = subring_closure(ring, fixture_members(ring, fixture, {generator}));
  const bool closure = generated == members;
  std::string names;
  for (auto x : members) names += (names.empty() ? "" : ",") + ring.label(x);
  return outcome(found && closure, "{" + names + "}" + (found ? " found" : " NOT found") + " among " +
                                       std::to_string(subrings.size()) + " subrings" +
                                       (closure ? ", generated by " : ", NOT generated by ") + generator);
}

VerifyOutcome check_m9_subrings() {
  const auto ring = hecke_ring(mq(9));
  const auto subrings = find_subrings(ring);
  auto dims_of = [&](const std::vector<std::size_t>& s) {
    std::vector<std::uint64_t> d;
    for (auto x : s) d.push_back(static_cast<std::uint64_t>(boost::rational_cast<std::int64_t>(ring.dim(x).coefficient())));
    std::sort(d.begin(), d.end());
    return d;
  };
  const std::vector<std::uint64_t> c0{1, 1, 1, 1, 2}, c1{1, 1, 1, 1, 2, 8};
  std::vector<std::vector<std::size_t>> with_c0, with_c1;
  for (const auto& s : subrings) {
    bool rational = true;
    for (auto x : s) rational = rational && ring.dim(x).is_rational();
    if (!rational) continue;
    if (dims_of(s) == c0) with_c0.push_back(s);
    if (dims_of(s) == c1) with_c1.push_back(s);
  }
  const bool nested = with_c0.size() == 1 && with_c1.size() == 1 &&
                      std::includes(with_c1[0].begin(), with_c1[0].end(), with_c0[0].begin(), with_c0[0].end());
  return outcome(nested, std::to_string(with_c0.size()) + " subring(s) with dims " + join(c0) + ", " +
                             std::to_string(with_c1.size()) + " with dims " + join(c1) +
                             (nested ? ", nested" : ""));
}

// ---- criterion 11

PermGroup s4_coset_action(const std::string& cycles) {
  const auto s4 = symmetric(4);
  std::vector<Permutation> gens;
  std::istringstream in(cycles);
  for (std::string c; std::getline(in, c, ';');) gens.push_back(Permutation::from_cycles(4, c));
  return coset_action(s4, PermGroup(4, gens));
}

std::vector<std::uint64_t> degrees(const PermGroup& g) { return GroupCharacters(g).table().degrees; }

}  // namespace

bool SuiteReport::pass() const {
  return !criteria.empty() &&
         std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass; });
}

const std::vector<VerifyCriterion>& verify_criteria() {
  static const std::vector<VerifyCriterion> criteria = {
      {1, "group zoo: constructors and transitivity profiles", 5},
      {2, "Mathieu groups", 30},
      {3, "Frobenius structure", 10},
      {4, "graph family closed forms", 1},
      {5, "figure reproduction", 60},
      {6, "tilde identity", 30},
      {7, "character degrees of M10 and M9", 5},
      {8, "fusion rules against the displayed equations", 600},
      {9, "ring axioms and global dimension", 60},
      {10, "subring discovery", 60},
      {11, "coincident group-subgroup graphs", 5},
  };
  return criteria;
}

std::vector<VerifyItem> verify_items() {
  std::vector<VerifyItem> items;
  auto add = [&](std::string id, int criterion, std::vector<std::string> tags, std::function<VerifyOutcome()> run) {
    items.push_back({std::move(id), criterion, std::move(tags), std::move(run)});
  };

  for (const std::string family : {"h", "s", "t", "pgl2", "psl2", "m"})
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) {
      const bool odd_square = q == 9;
      if ((family == "s" || family == "m") && !odd_square) continue;
      if (family == "psl2" && q % 2 == 0) continue;
      add("zoo-" + family + "-" + std::to_string(q), 1, {"groups"}, [=] { return check_zoo({family, q}); });
    }

  add("mathieu11", 2, {"groups", "mathieu"}, [] {
    const auto g = mathieu(11);
    const auto p = transitivity_profile(g);
    const auto st = restrict_to_complement(stabilizer(g, 0), {0});
    const bool conj = perm_conjugacy_iso(st, mq(9)).has_value();
    return outcome(g.order() == 7920 && p.k == 4 && p.sharp && conj,
                   "order " + std::to_string(g.order()) + ", " + (p.sharp ? "sharply " : "") + std::to_string(p.k) +
                       "-transitive, point stabilizer " + (conj ? "conjugate to M(9)" : "NOT conjugate to M(9)"));
  });
  add("mathieu12", 2, {"groups", "mathieu"}, [] {
    const auto g = mathieu(12);
    const auto p = transitivity_profile(g);
    return outcome(g.order() == 95040 && p.k == 5 && p.sharp,
                   "order " + std::to_string(g.order()) + ", " + (p.sharp ? "sharply " : "") + std::to_string(p.k) +
                       "-transitive");
  });

  for (std::uint64_t q = 3; q <= 64; ++q) {
    bool power = true;
    try {
      prime_power(q);
    } catch (const Error&) {
      power = false;
    }
    if (power) add("frobenius-h" + std::to_string(q), 3, {"frobenius"}, [q] { return check_frobenius(hq(q)); });
  }
  add("frobenius-s9", 3, {"frobenius"}, [] { return check_frobenius(sq(9)); });
  add("frobenius-z7z3", 3, {"frobenius"}, [] { return check_frobenius(affine_frobenius(7, 1, {{{2}}}, true)); });
  add("frobenius-sl2-3-on-z5sq", 3, {"frobenius"},
      [] { return check_frobenius(affine_frobenius(5, 2, sl2_3_in_gl2_5(), true)); });

  const std::vector<std::vector<std::uint32_t>> legs = {{1}, {1, 1}, {1, 1, 1}, {1, 2}, {1, 1, 1, 1, 2}};
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (const auto& m : legs) {
      std::string id = "family-m";
      for (auto x : m) id += std::to_string(x);
      add(id + "-n" + std::to_string(n), 4, {"frobenius", "families"}, [m, n] { return check_family(m, n); });
    }

  auto figure = [&](std::string fixture, std::function<BipartiteGraph()> compute) {
    add("figure-" + fixture, 5, {"figures"},
        [fixture, compute] { return compare_with_fixture(fixture, compute()); });
  };
  figure("Fig2", [] { return principal_graph(sq(9)); });
  figure("Fig3", [] { return principal_graph(affine_frobenius(7, 1, {{{2}}}, true)); });
  figure("Fig4", [] { return principal_graph(alternating(5)); });
  figure("Fig5", [] { return principal_graph(mq(9)); });
  figure("Fig6", [] {
    // M10 on its own 10 points, M9 its point stabilizer.
    const auto m10 = restrict_to_complement(stabilizer(mathieu(11), 0), {0});
    return dual_principal_graph(m10, stabilizer(m10, 0));
  });
  figure("Fig7", [] { return principal_graph(symmetric(5)); });
  figure("Fig8", [] { return principal_graph(alternating(6)); });
  figure("Fig9", [] { return principal_graph(mathieu(11)); });
  figure("M11-dual", [] {
    const auto [m10, m9] = m10_m9();
    return dual_principal_graph(m10, m9);
  });
  figure("PSL2-tilde", [] { return principal_graph(psl2(7)); });

  auto tilde_item = [&](std::string id, std::function<PermGroup()> make) {
    add("tilde-" + id, 6, {"graphs"}, [make] {
      const auto g = make();
      const auto chain = stabilizer_chain(g, {0, 1});
      const bool iso = graphs_isomorphic(principal_graph(g), tilde(dual_principal_graph(chain[0], chain[1]))).has_value();
      return outcome(iso, iso ? "principal graph is the tilde of the stabilizer dual graph" : "NOT isomorphic");
    });
  };
  tilde_item("sym5", [] { return symmetric(5); });
  tilde_item("alt6", [] { return alternating(6); });
  tilde_item("pgl2-5", [] { return pgl2(5); });
  tilde_item("pgl2-7", [] { return pgl2(7); });
  tilde_item("psl2-7", [] { return psl2(7); });
  tilde_item("m9", [] { return mq(9); });
  tilde_item("mathieu11", [] { return mathieu(11); });
  add("tilde-e6", 6, {"graphs"}, [] {
    const bool iso = graphs_isomorphic(tilde(gbmn({1}, 2)), gbmn({1, 1, 1}, 1)).has_value();
    return outcome(iso, iso ? "tilde of the (1),2 family graph is the (1,1,1),1 graph" : "NOT isomorphic");
  });

  add("degrees-m10", 7, {"characters"}, [] {
    const auto d = degrees(m10_m9().first);
    return outcome(d == std::vector<std::uint64_t>{1, 1, 9, 9, 10, 10, 10, 16}, join(d));
  });
  add("degrees-m9", 7, {"characters"}, [] {
    const auto d = degrees(m10_m9().second);
    return outcome(d == std::vector<std::uint64_t>{1, 1, 1, 1, 2, 8}, join(d));
  });

  for (const std::string name : {"F3-Z7xZ3", "F3-S9", "sigma2-series", "sr12-series", "S5-series", "S4-C2",
                                 "A5-C2", "A4-P", "A-series", "M-series"})
    add("fusion-" + name, 8, name.rfind("F3-", 0) == 0 ? std::vector<std::string>{"fusion", "frobenius"}
                                                       : std::vector<std::string>{"fusion"},
        [name] { return check_fusion_fixture(name); });
  add("fusion-W-series-refuted", 8, {"fusion"}, [] { return check_w_series(); });
  add("fusion-c-zero", 8, {"fusion"}, [] { return check_c_zero(); });

  auto ring_item = [&](std::string id, std::function<VerifyOutcome()> run) {
    add("ring-" + id, 9, {"rings"}, std::move(run));
  };
  const std::vector<std::pair<std::string, std::string>> hecke_groups = {
      {"sym5", "sym:5"},   {"alt5", "alt:5"},       {"alt6", "alt:6"}, {"pgl2-5", "pgl2:5"},
      {"pgl2-7", "pgl2:7"}, {"psl2-7", "psl2:7"},   {"m9", "m:9"},     {"s9", "s:9"},
      {"h8", "h:8"},        {"z7z3", "affine:p=7,k=1,gens=[[[2]]]"}, {"mathieu11", "mathieu:11"}};
  for (const auto& [id, spec] : hecke_groups) {
    ring_item("hecke-" + id, [spec] {
      const auto g = group_from_spec(spec);
      return check_ring(hecke_ring(g), g.order());
    });
  }
  for (const auto& [id, spec] : std::vector<std::pair<std::string, std::string>>{
           {"sym5", "sym:5"}, {"alt6", "alt:6"}, {"mathieu11", "mathieu:11"}}) {
    ring_item("rep-" + id, [spec] {
      const auto g = group_from_spec(spec);
      return check_ring(rep_ring(g), g.order());
    });
  }
  for (const auto& [id, spec] : std::vector<std::pair<std::string, std::string>>{
           {"m9", "m:9"}, {"psl2-7", "psl2:7"}, {"z7z3", "affine:p=7,k=1,gens=[[[2]]]"}}) {
    ring_item("inclusion-" + id, [spec] { return check_ring(inclusion_ring(group_from_spec(spec)), 0); });
  }

  add("subrings-m9", 10, {"subrings"}, [] { return check_m9_subrings(); });
  add("subrings-alt6", 10, {"subrings"},
      [] { return check_named_subring("alt:6", "A-series", {"id", "pi", "xi1", "eta1", "eta2"}, "pi"); });
  add("subrings-mathieu11", 10, {"subrings"}, [] {
    return check_named_subring("mathieu:11", "M-series", {"id", "chi", "pi", "pi chi", "xi1", "eta1", "eta2", "zeta"},
                               "pi");
  });

  add("coincidence-s4", 11, {"graphs"}, [] {
    const auto cyclic = s4_coset_action("(0 1 2 3)");
    const auto klein = s4_coset_action("(0 1);(2 3)");
    const bool iso = graphs_isomorphic(principal_graph(cyclic), principal_graph(klein)).has_value();
    const bool conj = perm_conjugacy_iso(cyclic, klein).has_value();
    return outcome(iso && !conj, std::string(iso ? "isomorphic" : "NOT isomorphic") + " principal graphs; actions " +
                                     (conj ? "conjugate" : "not conjugate"));
  });
  add("coincidence-d8", 11, {"graphs", "figures"}, [] {
    return compare_with_fixture("D6-1", principal_graph(group_from_spec("perm:4:(0 1 2 3);(1 3)")));
  });
  return items;
}

bool item_selected(const VerifyItem& item, const std::string& filter) {
  if (filter.empty() || filter == "all") return true;
  if (std::find(item.tags.begin(), item.tags.end(), filter) != item.tags.end()) return true;
  if (filter == "c" + std::to_string(item.criterion)) return true;
  return item.id.rfind(filter, 0) == 0;
}

SuiteReport run_suite(const std::string& filter, unsigned jobs) {
  std::vector<VerifyItem> selected;
  for (auto& item : verify_items())
    if (item_selected(item, filter)) selected.push_back(std::move(item));
  require(!selected.empty(), ErrorKind::InvalidArgument, "no verification item matches \"" + filter + "\"");

  std::vector<ItemResult> results(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < selected.size();) {
      const auto& item = selected[i];
      const auto start = std::chrono::steady_clock::now();
      VerifyOutcome out;
      try {
        out = item.run();
      } catch (const std::exception& e) {
        out = outcome(false, std::string("error: ") + e.what());
      }
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      results[i] = {item.id, item.criterion, out.pass, out.detail, took.count()};
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(selected.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteReport report;
  report.items = std::move(results);
  for (const auto& c : verify_criteria()) {
    CriterionResult r{c.number, c.title, 0, 0, 0, c.budget_seconds, false};
    for (const auto& item : report.items) {
      if (item.criterion != c.number) continue;
      ++r.items;
      r.passed += item.pass;
      r.seconds += item.seconds;
    }
    if (r.items == 0) continue;
    r.pass = r.passed == r.items && r.seconds < r.budget_seconds;
    report.criteria.push_back(r);
  }
  return report;
}

std::string suite_to_text(const SuiteReport& report, bool timing) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  for (const auto& item : report.items) {
    out << (item.pass ? "PASS " : "FAIL ") << "[" << item.criterion << "] " << item.id << ": " << item.detail;
    if (timing) out << " (" << item.seconds << " s)";
    out << "\n";
  }
  for (const auto& c : report.criteria) {
    out << "criterion " << c.number << " " << (c.pass ? "PASS" : "FAIL") << ": " << c.title << " (" << c.passed << "/"
        << c.items << " items";
    if (timing) out << ", " << c.seconds << " s of " << c.budget_seconds << " s";
    out << ")\n";
  }
  out << "suite: " << (report.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string suite_to_json(const SuiteReport& report, bool timing) {
  nlohmann::ordered_json j;
  j["schema"] = "sector-atlas/verify/1";
  j["pass"] = report.pass();
  auto& criteria = j["criteria"] = nlohmann::ordered_json::array();
  for (const auto& c : report.criteria) {
    nlohmann::ordered_json e{{"number", c.number}, {"title", c.title}, {"pass", c.pass}, {"items", c.items},
                             {"passed", c.passed}};
    if (timing) e["seconds"] = c.seconds, e["budget_seconds"] = c.budget_seconds;
    criteria.push_back(e);
  }
  auto& items = j["items"] = nlohmann::ordered_json::array();
  for (const auto& item : report.items) {
    nlohmann::ordered_json e{{"id", item.id}, {"criterion", item.criterion}, {"pass", item.pass}, {"detail", item.detail}};
    if (timing) e["seconds"] = item.seconds;
    items.push_back(e);
  }
  return j.dump(2) + "\n";
}

}  // namespace atlas
