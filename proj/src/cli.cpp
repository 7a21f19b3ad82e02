#include "atlas/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "atlas/error.hpp"
#include "atlas/families.hpp"
#include "atlas/fixtures.hpp"
#include "atlas/fusion.hpp"
#include "atlas/fusion_check.hpp"
#include "atlas/graphkit.hpp"
#include "atlas/verify.hpp"
#include "json.hpp"

namespace atlas {

namespace {

struct Options {
  std::string format;
  std::string out;
  // group, graph, fusion
  std::string spec;
  // graph
  std::string kind;
  std::string compare;
  Point point = 0;
  Point subpoint = 1;
  std::vector<std::uint32_t> m;
  std::uint32_t n = 1;
  // fusion
  bool hecke = false;
  bool rep = false;
  bool inclusion = false;
  std::vector<std::string> check;
  bool expect_fail = false;
  // verify
  bool all = false;
  std::string filter;
  unsigned jobs = 1;
  bool no_timing = false;
};

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  require(file.good(), ErrorKind::InvalidArgument, "cannot open output file " + o.out);
  file << text;
}

// ------------------------------------------------------------------ group

std::string transitivity_text(const TransitivityProfile& p, std::size_t degree) {
  std::string s = (p.sharp ? "sharply " : "") + std::to_string(p.conventional_k()) + "-transitive";
  if (p.full_symmetric) s += " (full symmetric group on " + std::to_string(degree) + " points)";
  return s;
}

int cmd_group(const Options& o, std::ostream& out) {
  const PermGroup g = group_from_spec(o.spec);
  const auto profile = transitivity_profile(g);
  const auto blocks = primitivity_blocks(g);
  const auto analysis = frobenius_analysis(g);

  std::string frobenius;
  nlohmann::ordered_json fj;
  if (const auto* f = std::get_if<FrobeniusStructure>(&analysis)) {
    frobenius = "kernel " + std::to_string(f->kernel.order()) + ", complement " + std::to_string(f->complement.order());
    if (f->kernel_elementary_abelian) frobenius += ", kernel elementary abelian of exponent " + std::to_string(f->kernel_prime);
    fj = {{"kernel", f->kernel.order()}, {"complement", f->complement.order()},
          {"kernel_elementary_abelian", f->kernel_elementary_abelian}};
  } else if (std::holds_alternative<RegularGroup>(analysis)) {
    frobenius = "no (regular action)";
    fj = "regular";
  } else {
    frobenius = "no (" + std::get<NotFrobenius>(analysis).reason + ")";
    fj = nullptr;
  }

  std::vector<std::uint64_t> chain{g.order()};
  PermGroup current = g;
  for (Point x = 0; x < g.degree() && current.order() > 1; ++x) {
    current = stabilizer(current, x);
    chain.push_back(current.order());
  }

  std::ostringstream text;
  if (o.format == "json") {
    nlohmann::ordered_json j{{"schema", "sector-atlas/group/1"},
                             {"spec", o.spec},
                             {"degree", g.degree()},
                             {"order", g.order()},
                             {"transitive", is_transitive(g)},
                             {"transitivity", profile.conventional_k()},
                             {"sharp", profile.sharp},
                             {"primitive", !blocks.has_value()},
                             {"frobenius", fj},
                             {"stabilizer_chain", chain}};
    text << j.dump(2) << "\n";
  } else {
    text << "group " << o.spec << "\n";
    text << "degree: " << g.degree() << "\n";
    text << "order: " << g.order() << "\n";
    text << "transitivity: " << (is_transitive(g) ? transitivity_text(profile, g.degree()) : "intransitive") << "\n";
    text << "primitive: "
         << (blocks ? "no (blocks of size " + std::to_string(blocks->front().size()) + ")" : std::string("yes")) << "\n";
    text << "Frobenius: " << frobenius << "\n";
    text << "stabilizer chain orders:";
    for (auto c : chain) text << " " << c;
    text << "\n";
  }
  write_output(o, text.str(), out);
  return kExitOk;
}

// ------------------------------------------------------------------ graph

BipartiteGraph compute_graph(const Options& o) {
  if (o.kind == "family") {
    require(!o.m.empty(), ErrorKind::InvalidArgument, "graph family needs --m");
    return gbmn(o.m, o.n);
  }
  if (o.kind == "tilde" && o.spec.empty()) {
    require(!o.m.empty(), ErrorKind::InvalidArgument, "graph tilde needs a group spec or --m");
    return tilde(gbmn(o.m, o.n));
  }
  require(!o.spec.empty(), ErrorKind::InvalidArgument, "graph " + o.kind + " needs a group spec");
  const PermGroup g = group_from_spec(o.spec);
  if (o.kind == "principal") return principal_graph(g);
  require(o.point < g.degree() && o.subpoint < g.degree() && o.point != o.subpoint, ErrorKind::InvalidArgument,
          "--point and --subpoint must be distinct points of the action");
  const auto chain = stabilizer_chain(g, {o.point, o.subpoint});
  const auto dual = dual_principal_graph(chain[0], chain[1]);
  return o.kind == "dual" ? dual : tilde(dual);
}

int cmd_graph(const Options& o, std::ostream& out, std::ostream& err) {
  const BipartiteGraph g = compute_graph(o);
  const std::string name = o.kind == "family" ? "family" : o.spec.empty() ? o.kind : o.spec;
  GraphFormat format = GraphFormat::Text;
  if (o.format == "dot") format = GraphFormat::Dot;
  if (o.format == "json") format = GraphFormat::Json;
  write_output(o, emit(g, format, name), out);
  if (o.compare.empty()) return kExitOk;
  require(o.compare.rfind("fixture:", 0) == 0, ErrorKind::InvalidArgument, "--compare expects fixture:ID");
  const std::string id = o.compare.substr(8);
  const auto drawn = parse_graph_fixture(std::string(fixture_text(id)));
  const bool iso = graphs_isomorphic(drawn, g).has_value();
  err << "compare " << id << ": " << (iso ? "isomorphic" : "NOT isomorphic") << "\n";
  return iso ? kExitOk : kExitFailure;
}

// ------------------------------------------------------------------ fusion

int cmd_fusion(const Options& o, std::ostream& out) {
  require(o.hecke + o.rep + o.inclusion <= 1, ErrorKind::InvalidArgument,
          "--hecke, --rep and --inclusion are mutually exclusive");
  const PermGroup g = group_from_spec(o.spec);
  std::string kind = o.rep ? "rep" : o.inclusion ? "inclusion" : o.hecke ? "hecke" : "";

  if (o.check.empty()) {
    if (kind.empty()) kind = "hecke";
    const FusionRing ring = kind == "rep" ? rep_ring(g) : kind == "inclusion" ? inclusion_ring(g) : hecke_ring(g);
    std::string text;
    if (o.format == "text") {
      std::ostringstream s;
      s << "basis " << ring.size() << "\n";
      for (std::size_t x = 0; x < ring.size(); ++x) {
        s << ring.label(x) << " dim " << ring.dim(x).to_string() << " dual " << ring.label(ring.dual(x));
        if (!ring.block_tag(x).empty()) s << " block " << ring.block_tag(x);
        s << "\n";
      }
      for (std::size_t x = 0; x < ring.size(); ++x)
        for (std::size_t y = 0; y < ring.size(); ++y) {
          const auto p = ring.multiply(ring.basis(x), ring.basis(y));
          if (std::any_of(p.begin(), p.end(), [](std::int64_t c) { return c != 0; }))
            s << ring.label(x) << " " << ring.label(y) << " = " << ring.format(p) << "\n";
        }
      text = s.str();
    } else {
      text = ring_to_json(ring);
    }
    write_output(o, text, out);
    return kExitOk;
  }

  std::string text;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  bool all_consistent = true, all_refuted = true;
  for (const auto& name : o.check) {
    const auto fixture = load_fusion_fixture(name);
    const std::string ring_kind = kind.empty() ? fixture.ring : kind;
    require(ring_kind == fixture.ring, ErrorKind::InvalidArgument,
            "fixture " + name + " refers to a " + fixture.ring + " ring, not " + ring_kind);
    require(parse_group_spec(fixture.group).text == parse_group_spec(o.spec).text, ErrorKind::InvalidArgument,
            "fixture " + name + " refers to group " + fixture.group + ", not " + o.spec);
    const FusionRing ring = fixture_ring(fixture);
    const auto report = check_fixture(ring, fixture, {o.expect_fail});
    all_consistent = all_consistent && report.consistent;
    all_refuted = all_refuted && !report.consistent;
    if (o.format == "json") reports.push_back(nlohmann::ordered_json::parse(report_to_json(report)));
    else text += report_to_text(report);
  }
  if (o.format == "json") text = reports.dump(2) + "\n";
  const bool ok = o.expect_fail ? all_refuted : all_consistent;
  if (o.format != "json" && o.expect_fail)
    text += std::string("expect-fail: ") + (all_refuted ? "every set refuted as expected" : "a set was satisfiable") + "\n";
  write_output(o, text, out);
  return ok ? kExitOk : kExitFailure;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const Options& o, std::ostream& out) {
  require(!(o.all && !o.filter.empty()), ErrorKind::InvalidArgument, "--all and --filter are mutually exclusive");
  const auto report = run_suite(o.filter, std::max(1u, o.jobs));
  const bool timing = !o.no_timing;
  write_output(o, o.format == "json" ? suite_to_json(report, timing) : suite_to_text(report, timing), out);
  return report.pass() ? kExitOk : kExitFailure;
}

std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> values;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    require(!item.empty() && item.find_first_not_of("0123456789") == std::string::npos, ErrorKind::Parse,
            "--m expects comma-separated positive integers, got \"" + text + "\"");
    values.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return values;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of group-subgroup subfactors from permutation groups", "sector-atlas"};
  app.require_subcommand(1);
  Options o;
  std::string m_text;

  auto* group = app.add_subcommand("group", "Describe a permutation group");
  group->add_option("spec", o.spec, "Group spec such as mathieu:11 or h:7")->required();
  group->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  group->add_option("--out", o.out, "Write output to a file");

  auto* graph = app.add_subcommand("graph", "Emit a principal, dual, family or tilde graph");
  graph->add_option("kind", o.kind, "principal | dual | family | tilde")
      ->required()
      ->check(CLI::IsMember({"principal", "dual", "family", "tilde"}));
  graph->add_option("spec", o.spec, "Group spec");
  graph->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"dot", "json", "text"}));
  graph->add_option("--out", o.out, "Write output to a file");
  graph->add_option("--compare", o.compare, "Compare with a stored graph, fixture:ID");
  graph->add_option("--point", o.point, "Point whose stabilizer is the larger group (dual, tilde)");
  graph->add_option("--subpoint", o.subpoint, "Second point fixed by the smaller group (dual, tilde)");
  graph->add_option("--m", m_text, "Family leg multiplicities, e.g. 1,1,2");
  graph->add_option("--n", o.n, "Family parameter n")->check(CLI::PositiveNumber);

  auto* fusion = app.add_subcommand("fusion", "Emit a fusion ring or check stored fusion rules");
  fusion->add_option("spec", o.spec, "Group spec")->required();
  fusion->add_flag("--hecke", o.hecke, "Even part on the point set (default)");
  fusion->add_flag("--rep", o.rep, "Representation ring");
  fusion->add_flag("--inclusion", o.inclusion, "Bimodule ring with an added fixed point");
  fusion->add_option("--check", o.check, "Fusion fixture set(s) to check")->delimiter(',');
  fusion->add_flag("--expect-fail", o.expect_fail, "Succeed only if every checked set is refuted");
  fusion->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  fusion->add_option("--out", o.out, "Write output to a file");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_flag("--all", o.all, "Run every item (default)");
  verify->add_option("--filter", o.filter, "Tag, item id prefix, or c<N> for one criterion");
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", o.no_timing, "Omit timings so output is byte-identical across runs");
  verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", o.out, "Write output to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (!m_text.empty()) o.m = parse_list(m_text);
    if (*group) return cmd_group(o, out);
    if (*graph) return cmd_graph(o, out, err);
    if (*fusion) return cmd_fusion(o, out);
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse:
      case ErrorKind::InvalidArgument:
        return kExitUsage;
      case ErrorKind::Guard:
        return kExitGuard;
      case ErrorKind::Invariant:
        return kExitFailure;
    }
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace atlas
