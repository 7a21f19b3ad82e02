#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "atlas/fusion.hpp"
#include "atlas/surd.hpp"

namespace atlas {

/// Expression tree of the fixture equation language.
struct FixtureExpr {
  enum class Kind { Label, Variable, Integer, Sum, Product, Conjugate, Pairing };
  Kind kind = Kind::Integer;
  std::string name;          ///< Label or Variable
  std::int64_t value = 0;    ///< Integer
  std::vector<std::int64_t> signs;  ///< Sum: coefficient sign of each child (+1 / -1)
  std::vector<std::shared_ptr<FixtureExpr>> children;
};

/// Fixture label: a basis element of the computed ring identified by constraints, not by position.
struct FixtureLabel {
  std::string name;
  Surd dim;
  std::string block;            ///< "" (any) or a block tag such as "MN"
  bool unit = false;            ///< must be the unit of its block
  bool self_dual = false;
  std::optional<std::string> dual;  ///< must be the dual of this other label
};

/// One statement: sides that must all be equal (or differ, for `!=`), or an irreducibility test.
struct FixtureStatement {
  std::string tag;
  std::string text;                 ///< source after the tag, for reports
  bool given = false;               ///< assumption: constrains labels, not reported as a check
  bool negated = false;             ///< `a != b`
  bool irreducible = false;         ///< `irr EXPR`
  std::vector<std::string> variables;  ///< forall variables ranging over the basis
  std::vector<std::shared_ptr<FixtureExpr>> sides;
};

struct FusionFixture {
  std::string name;
  std::string ring;   ///< hecke | inclusion | rep
  std::string group;  ///< group spec
  std::vector<FixtureLabel> labels;
  std::vector<FixtureStatement> statements;
};

/// Parses the "format fusion/1" text format; throws ErrorKind::Parse with a line number.
FusionFixture parse_fusion_fixture(const std::string& text);
/// Embedded fixture by name, parsed.
FusionFixture load_fusion_fixture(const std::string& name);
/// Names of the embedded fusion fixtures.
std::vector<std::string> fusion_fixture_names();

/// The ring a fixture refers to.
FusionRing fixture_ring(const FusionFixture& fixture, BundleOptions options = {});

struct StatementResult {
  std::string tag;
  std::string text;
  bool given = false;
  bool pass = false;
  std::vector<std::string> sides;   ///< each side evaluated under the chosen assignment
  std::optional<bool> alone;        ///< satisfiable together with the givens only
};

struct FixtureReport {
  std::string name;
  bool consistent = false;  ///< one assignment satisfies every statement
  std::vector<std::pair<std::string, std::string>> assignment;  ///< fixture label -> ring label
  std::vector<StatementResult> statements;
  std::size_t passed = 0;   ///< non-given statements passing under the assignment
  std::size_t checked = 0;  ///< non-given statements
  std::size_t searched = 0; ///< search nodes visited
};

struct CheckOptions {
  bool individual = false;  ///< also test each statement alone against the givens
};

/// Searches label assignments compatible with dims, blocks, units and duals, minimizing the number
/// of failing statements; reports the first optimal assignment in declaration order.
FixtureReport check_fixture(const FusionRing& ring, const FusionFixture& fixture, CheckOptions options = {});

std::string report_to_text(const FixtureReport& report);
std::string report_to_json(const FixtureReport& report);

}  // namespace atlas
