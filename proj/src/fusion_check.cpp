#include "atlas/fusion_check.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "atlas/error.hpp"
#include "atlas/families.hpp"
#include "atlas/fixtures.hpp"
#include "json.hpp"

namespace atlas {

namespace {

using ExprPtr = std::shared_ptr<FixtureExpr>;

// ------------------------------------------------------------------ parsing

struct Token {
  enum class Kind { Ident, Int, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
};

std::vector<Token> tokenize(const std::string& text, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      require(j == text.size() || !ident_char(text[j]), ErrorKind::Parse,
              "line " + std::to_string(line) + ": identifiers must not start with a digit");
      out.push_back({Token::Kind::Int, text.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Token::Kind::Ident, text.substr(i, j - i)});
      i = j;
    } else if (c == '!' && i + 1 < text.size() && text[i + 1] == '=') {
      out.push_back({Token::Kind::Symbol, "!="});
      i += 2;
    } else if (std::string_view("~()<>,+-=:").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, c)});
      ++i;
    } else {
      fail(ErrorKind::Parse, "line " + std::to_string(line) + ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::Kind::End, ""});
  return out;
}

class ExprParser {
 public:
  ExprParser(std::vector<Token> tokens, std::size_t line) : tokens_(std::move(tokens)), line_(line) {}

  bool at_symbol(const std::string& s) const {
    return tokens_[pos_].kind == Token::Kind::Symbol && tokens_[pos_].text == s;
  }
  bool at_ident(const std::string& s) const { return tokens_[pos_].kind == Token::Kind::Ident && tokens_[pos_].text == s; }
  bool at_end() const { return tokens_[pos_].kind == Token::Kind::End; }
  const Token& next() { return tokens_[pos_++]; }
  void expect(const std::string& s) {
    if (!at_symbol(s)) error("expected '" + s + "'");
    ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "line " + std::to_string(line_) + ": " + what +
                               (at_end() ? " at end of line" : " near \"" + tokens_[pos_].text + "\""));
  }

  ExprPtr expression() {
    auto sum = std::make_shared<FixtureExpr>();
    sum->kind = FixtureExpr::Kind::Sum;
    std::int64_t sign = 1;
    if (at_symbol("-")) {
      ++pos_;
      sign = -1;
    } else if (at_symbol("+")) {
      ++pos_;
    }
    for (;;) {
      sum->signs.push_back(sign);
      sum->children.push_back(term());
      if (at_symbol("+")) sign = 1;
      else if (at_symbol("-")) sign = -1;
      else break;
      ++pos_;
    }
    return sum->children.size() == 1 && sum->signs.front() == 1 ? sum->children.front() : sum;
  }

 private:
  bool at_factor_start() const {
    return tokens_[pos_].kind == Token::Kind::Ident || at_symbol("~") || at_symbol("(") || at_symbol("<");
  }

  ExprPtr term() {
    auto product = std::make_shared<FixtureExpr>();
    product->kind = FixtureExpr::Kind::Product;
    if (tokens_[pos_].kind == Token::Kind::Int) {
      auto number = std::make_shared<FixtureExpr>();
      number->kind = FixtureExpr::Kind::Integer;
      number->value = std::stoll(next().text);
      product->children.push_back(number);
    }
    while (at_factor_start()) product->children.push_back(factor());
    if (product->children.empty()) error("expected a term");
    return product->children.size() == 1 ? product->children.front() : product;
  }

  ExprPtr factor() {
    if (at_symbol("~")) {
      ++pos_;
      auto conj = std::make_shared<FixtureExpr>();
      conj->kind = FixtureExpr::Kind::Conjugate;
      if (at_symbol("(")) {
        ++pos_;
        conj->children.push_back(expression());
        expect(")");
      } else if (tokens_[pos_].kind == Token::Kind::Ident) {
        conj->children.push_back(name(next().text));
      } else {
        error("expected a label or '(' after '~'");
      }
      return conj;
    }
    if (at_symbol("(")) {
      ++pos_;
      auto inner = expression();
      expect(")");
      return inner;
    }
    if (at_symbol("<")) {
      ++pos_;
      auto pairing = std::make_shared<FixtureExpr>();
      pairing->kind = FixtureExpr::Kind::Pairing;
      pairing->children.push_back(expression());
      expect(",");
      pairing->children.push_back(expression());
      expect(">");
      return pairing;
    }
    if (tokens_[pos_].kind == Token::Kind::Ident) return name(next().text);
    error("expected a factor");
  }

  static ExprPtr name(const std::string& text) {
    auto leaf = std::make_shared<FixtureExpr>();
    leaf->kind = FixtureExpr::Kind::Label;
    leaf->name = text;
    return leaf;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

FixtureStatement parse_statement(const std::string& keyword, const std::string& rest, std::size_t line) {
  const auto colon = rest.find(':');
  require(colon != std::string::npos, ErrorKind::Parse, "line " + std::to_string(line) + ": statement needs 'TAG:'");
  FixtureStatement st;
  st.tag = trim(rest.substr(0, colon));
  st.text = trim(rest.substr(colon + 1));
  st.given = keyword == "given";
  require(!st.tag.empty() && st.tag.find(' ') == std::string::npos, ErrorKind::Parse,
          "line " + std::to_string(line) + ": bad statement tag");
  ExprParser parser(tokenize(st.text, line), line);
  if (parser.at_ident("forall")) {
    parser.next();
    while (!parser.at_symbol(":")) {
      const Token& v = parser.next();
      if (v.kind != Token::Kind::Ident) parser.error("expected variable names after forall");
      st.variables.push_back(v.text);
    }
    parser.expect(":");
    require(!st.variables.empty(), ErrorKind::Parse, "line " + std::to_string(line) + ": forall without variables");
  }
  if (parser.at_ident("irr")) {
    parser.next();
    st.irreducible = true;
    st.sides.push_back(parser.expression());
  } else {
    st.sides.push_back(parser.expression());
    if (parser.at_symbol("!=")) {
      parser.next();
      st.negated = true;
      st.sides.push_back(parser.expression());
    } else {
      while (parser.at_symbol("=")) {
        parser.next();
        st.sides.push_back(parser.expression());
      }
    }
    if (st.sides.size() < 2) parser.error("expected '=' or '!='");
  }
  if (!parser.at_end()) parser.error("trailing input");
  return st;
}

void resolve(FixtureExpr& e, const std::map<std::string, std::size_t>& labels, const std::vector<std::string>& vars,
             std::size_t line) {
  if (e.kind == FixtureExpr::Kind::Label) {
    const auto v = std::find(vars.begin(), vars.end(), e.name);
    if (v != vars.end()) {
      e.kind = FixtureExpr::Kind::Variable;
      e.value = v - vars.begin();
      return;
    }
    const auto it = labels.find(e.name);
    require(it != labels.end(), ErrorKind::Parse,
            "line " + std::to_string(line) + ": undeclared label \"" + e.name + "\"");
    e.value = static_cast<std::int64_t>(it->second);
  }
  for (auto& c : e.children) resolve(*c, labels, vars, line);
}

void collect_labels(const FixtureExpr& e, std::vector<std::size_t>& out) {
  if (e.kind == FixtureExpr::Kind::Label) out.push_back(static_cast<std::size_t>(e.value));
  for (const auto& c : e.children) collect_labels(*c, out);
}

// ------------------------------------------------------------------ evaluation

struct Value {
  bool scalar = true;
  std::int64_t number = 0;
  RingElement element;
};

class Evaluator {
 public:
  Evaluator(const FusionRing& ring, const std::vector<long>& assignment)
      : ring_(ring), assignment_(assignment) {}

  Value eval(const FixtureExpr& e, const std::vector<std::size_t>& bound) const {
    switch (e.kind) {
      case FixtureExpr::Kind::Integer:
        return {true, e.value, {}};
      case FixtureExpr::Kind::Label:
        return element(ring_.basis(static_cast<std::size_t>(assignment_[static_cast<std::size_t>(e.value)])));
      case FixtureExpr::Kind::Variable:
        return element(ring_.basis(bound[static_cast<std::size_t>(e.value)]));
      case FixtureExpr::Kind::Conjugate: {
        Value v = eval(*e.children.front(), bound);
        if (!v.scalar) v.element = ring_.conjugate(v.element);
        return v;
      }
      case FixtureExpr::Kind::Pairing: {
        const Value a = eval(*e.children[0], bound), b = eval(*e.children[1], bound);
        require(!a.scalar && !b.scalar, ErrorKind::InvalidArgument, "pairing needs ring elements");
        return {true, FusionRing::pairing(a.element, b.element), {}};
      }
      case FixtureExpr::Kind::Product: {
        Value acc{true, 1, {}};
        for (const auto& c : e.children) {
          const Value v = eval(*c, bound);
          if (acc.scalar && v.scalar) acc.number *= v.number;
          else if (acc.scalar) acc = scaled(v, acc.number);
          else if (v.scalar) acc = scaled(acc, v.number);
          else acc.element = ring_.multiply(acc.element, v.element);
        }
        return acc;
      }
      case FixtureExpr::Kind::Sum: {
        Value acc{true, 0, {}};
        for (std::size_t k = 0; k < e.children.size(); ++k) {
          const Value v = scaled(eval(*e.children[k], bound), e.signs[k]);
          if (acc.scalar && v.scalar) {
            acc.number += v.number;
          } else if (acc.scalar || v.scalar) {
            const Value& s = acc.scalar ? acc : v;
            require(s.number == 0, ErrorKind::InvalidArgument, "cannot add a nonzero integer to a ring element");
            acc = acc.scalar ? v : acc;
          } else {
            for (std::size_t x = 0; x < acc.element.size(); ++x) acc.element[x] += v.element[x];
          }
        }
        return acc;
      }
    }
    return {};
  }

  static bool equal(const Value& a, const Value& b) {
    if (a.scalar && b.scalar) return a.number == b.number;
    if (a.scalar) return a.number == 0 && std::all_of(b.element.begin(), b.element.end(), [](auto c) { return c == 0; });
    if (b.scalar) return equal(b, a);
    return a.element == b.element;
  }

  bool irreducible(const Value& v) const {
    if (v.scalar) return false;
    std::int64_t total = 0;
    for (std::int64_t c : v.element) {
      if (c < 0) return false;
      total += c;
    }
    return total == 1;
  }

 private:
  Value element(RingElement e) const { return {false, 0, std::move(e)}; }
  static Value scaled(Value v, std::int64_t factor) {
    if (v.scalar) v.number *= factor;
    else
      for (auto& c : v.element) c *= factor;
    return v;
  }

  const FusionRing& ring_;
  const std::vector<long>& assignment_;
};

// Truth of a statement; when `witness` is set it receives the sides at the first failing binding
// (or at the last binding when the statement holds).
bool holds(const FusionRing& ring, const FixtureStatement& st, const std::vector<long>& assignment,
           std::vector<Value>* witness = nullptr) {
  const Evaluator ev(ring, assignment);
  std::vector<std::size_t> bound(st.variables.size(), 0);
  for (;;) {
    std::vector<Value> sides;
    for (const auto& s : st.sides) sides.push_back(ev.eval(*s, bound));
    bool ok;
    if (st.irreducible) {
      ok = ev.irreducible(sides.front());
    } else if (st.negated) {
      ok = !Evaluator::equal(sides[0], sides[1]);
    } else {
      ok = true;
      for (std::size_t k = 1; k < sides.size(); ++k) ok = ok && Evaluator::equal(sides[0], sides[k]);
    }
    if (witness) *witness = sides;
    if (!ok) return false;
    std::size_t k = 0;
    while (k < bound.size() && ++bound[k] == ring.size()) bound[k++] = 0;
    if (k == bound.size()) return true;
  }
}

// ------------------------------------------------------------------ search

constexpr std::size_t kNodeGuard = 200'000'000;

class Search {
 public:
  Search(const FusionRing& ring, const FusionFixture& fixture, std::vector<std::size_t> soft,
         std::vector<std::size_t> hard)
      : ring_(ring), fixture_(fixture), soft_(std::move(soft)), hard_(std::move(hard)) {
    const std::size_t n = fixture.labels.size();
    candidates_.resize(n);
    dual_partner_.assign(n, -1);
    for (std::size_t k = 0; k < n; ++k) {
      const FixtureLabel& label = fixture.labels[k];
      if (label.dual) {
        for (std::size_t j = 0; j < n; ++j)
          if (fixture.labels[j].name == *label.dual) dual_partner_[k] = static_cast<long>(j);
      }
      for (std::size_t x = 0; x < ring.size(); ++x) {
        if (!(ring.dim(x) == label.dim)) continue;
        if (!label.block.empty() && ring.block_tag(x) != label.block) continue;
        if (label.self_dual && ring.dual(x) != x) continue;
        if (label.unit && std::find(ring.units().begin(), ring.units().end(), x) == ring.units().end()) continue;
        candidates_[k].push_back(x);
      }
    }
    ready_soft_.resize(n + 1);
    ready_hard_.resize(n + 1);
    auto level = [&](std::size_t s) {
      std::vector<std::size_t> used;
      for (const auto& side : fixture.statements[s].sides) collect_labels(*side, used);
      std::size_t top = 0;
      for (std::size_t u : used) top = std::max(top, u + 1);
      return top;
    };
    for (std::size_t s : soft_) ready_soft_[level(s)].push_back(s);
    for (std::size_t s : hard_) ready_hard_[level(s)].push_back(s);
  }

  // Returns the minimal number of failing soft statements, or nullopt when no assignment exists.
  std::optional<std::size_t> run() {
    assignment_.assign(fixture_.labels.size(), -1);
    used_.assign(ring_.size(), false);
    std::size_t failures = 0;
    if (!settle(0, failures)) return std::nullopt;
    descend(0, failures);
    if (best_ == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return best_;
  }

  const std::vector<long>& best_assignment() const { return best_assignment_; }
  std::size_t nodes() const { return nodes_; }

 private:
  // Applies the statements that become decidable at `level`; false when a hard one fails.
  bool settle(std::size_t level, std::size_t& failures) const {
    for (std::size_t s : ready_hard_[level])
      if (!holds(ring_, fixture_.statements[s], assignment_)) return false;
    for (std::size_t s : ready_soft_[level])
      if (!holds(ring_, fixture_.statements[s], assignment_)) ++failures;
    return true;
  }

  void descend(std::size_t k, std::size_t failures) {
    if (failures >= best_) return;
    require(++nodes_ <= kNodeGuard, ErrorKind::Guard, "fixture label search exceeded its node budget");
    if (k == fixture_.labels.size()) {
      best_ = failures;
      best_assignment_ = assignment_;
      return;
    }
    for (std::size_t x : candidates_[k]) {
      if (used_[x]) continue;
      if (!dual_ok(k, x)) continue;
      assignment_[k] = static_cast<long>(x);
      used_[x] = true;
      std::size_t next = failures;
      if (settle(k + 1, next)) descend(k + 1, next);
      used_[x] = false;
      assignment_[k] = -1;
      if (best_ == 0) return;
    }
  }

  bool dual_ok(std::size_t k, std::size_t x) const {
    for (std::size_t j = 0; j < k; ++j) {
      if (dual_partner_[k] == static_cast<long>(j) && ring_.dual(x) != static_cast<std::size_t>(assignment_[j]))
        return false;
      if (dual_partner_[j] == static_cast<long>(k) && ring_.dual(static_cast<std::size_t>(assignment_[j])) != x)
        return false;
    }
    // A unit label must be the unit of the block it lies in.
    if (fixture_.labels[k].unit) {
      const auto b = ring_.block(x);
      if (b.first != b.second || ring_.units()[b.first] != x) return false;
    }
    return true;
  }

  const FusionRing& ring_;
  const FusionFixture& fixture_;
  std::vector<std::size_t> soft_, hard_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<long> dual_partner_;
  std::vector<std::vector<std::size_t>> ready_soft_, ready_hard_;
  std::vector<long> assignment_;
  std::vector<bool> used_;
  std::size_t best_ = std::numeric_limits<std::size_t>::max();
  std::vector<long> best_assignment_;
  std::size_t nodes_ = 0;
};

std::string render(const FusionRing& ring, const FusionFixture& fixture, const std::vector<long>& assignment,
                   const Value& v) {
  if (v.scalar) return std::to_string(v.number);
  std::vector<std::string> names(ring.size());
  for (std::size_t x = 0; x < ring.size(); ++x) names[x] = "[" + ring.label(x) + "]";
  for (std::size_t k = 0; k < assignment.size(); ++k)
    if (assignment[k] >= 0) names[static_cast<std::size_t>(assignment[k])] = fixture.labels[k].name;
  std::ostringstream out;
  bool first = true;
  for (std::size_t x = 0; x < ring.size(); ++x) {
    const std::int64_t c = v.element[x];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const std::int64_t m = c < 0 ? -c : c;
    if (m != 1) out << m << ' ';
    out << names[x];
    first = false;
  }
  return first ? "0" : out.str();
}

}  // namespace

FusionFixture parse_fusion_fixture(const std::string& text) {
  FusionFixture fx;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  bool saw_format = false;
  std::map<std::string, std::size_t> label_index;
  std::vector<std::size_t> statement_lines;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;
    std::istringstream words(content);
    std::string keyword;
    words >> keyword;
    std::string rest;
    std::getline(words, rest);
    rest = trim(rest);
    const std::string where = "line " + std::to_string(line) + ": ";
    if (!saw_format) {
      require(keyword == "format" && rest == "fusion/1", ErrorKind::Parse, where + "expected 'format fusion/1'");
      saw_format = true;
    } else if (keyword == "name") {
      fx.name = rest;
    } else if (keyword == "ring") {
      require(rest == "hecke" || rest == "inclusion" || rest == "rep", ErrorKind::Parse,
              where + "ring must be hecke, inclusion or rep");
      fx.ring = rest;
    } else if (keyword == "group") {
      fx.group = rest;
    } else if (keyword == "label") {
      std::istringstream fields(rest);
      FixtureLabel label;
      fields >> label.name;
      require(!label.name.empty(), ErrorKind::Parse, where + "label needs a name");
      bool has_dim = false;
      for (std::string field; fields >> field;) {
        if (field == "dim") {
          std::string value;
          require(static_cast<bool>(fields >> value), ErrorKind::Parse, where + "dim needs a value");
          label.dim = Surd::parse(value);
          has_dim = true;
        } else if (field == "block") {
          require(static_cast<bool>(fields >> label.block), ErrorKind::Parse, where + "block needs a tag");
        } else if (field == "dual") {
          std::string other;
          require(static_cast<bool>(fields >> other), ErrorKind::Parse, where + "dual needs a label");
          label.dual = other;
        } else if (field == "unit") {
          label.unit = true;
        } else if (field == "selfdual") {
          label.self_dual = true;
        } else {
          fail(ErrorKind::Parse, where + "unknown label attribute \"" + field + "\"");
        }
      }
      require(has_dim, ErrorKind::Parse, where + "label needs a dim");
      require(label_index.emplace(label.name, fx.labels.size()).second, ErrorKind::Parse,
              where + "duplicate label \"" + label.name + "\"");
      fx.labels.push_back(std::move(label));
    } else if (keyword == "eq" || keyword == "given") {
      fx.statements.push_back(parse_statement(keyword, rest, line));
      statement_lines.push_back(line);
    } else {
      fail(ErrorKind::Parse, where + "unknown keyword \"" + keyword + "\"");
    }
  }
  require(saw_format, ErrorKind::Parse, "empty fusion fixture");
  require(!fx.name.empty() && !fx.ring.empty() && !fx.group.empty(), ErrorKind::Parse,
          "fusion fixture needs name, ring and group lines");
  for (const auto& label : fx.labels)
    if (label.dual)
      require(label_index.count(*label.dual) > 0, ErrorKind::Parse,
              "label \"" + label.name + "\" refers to undeclared dual \"" + *label.dual + "\"");
  for (std::size_t s = 0; s < fx.statements.size(); ++s)
    for (auto& side : fx.statements[s].sides) resolve(*side, label_index, fx.statements[s].variables, statement_lines[s]);
  return fx;
}

FusionFixture load_fusion_fixture(const std::string& name) { return parse_fusion_fixture(std::string(fixture_text(name))); }

std::vector<std::string> fusion_fixture_names() {
  std::vector<std::string> out;
  for (const auto& entry : detail::fixture_table())
    if (entry.text.find("format fusion/1") != std::string_view::npos) out.emplace_back(entry.name);
  return out;
}

FusionRing fixture_ring(const FusionFixture& fixture, BundleOptions options) {
  const PermGroup group = group_from_spec(fixture.group);
  if (fixture.ring == "hecke") return hecke_ring(group, options);
  if (fixture.ring == "inclusion") return inclusion_ring(group, options);
  return rep_ring(group);
}

FixtureReport check_fixture(const FusionRing& ring, const FusionFixture& fixture, CheckOptions options) {
  FixtureReport report;
  report.name = fixture.name;
  std::vector<std::size_t> givens, checks;
  for (std::size_t s = 0; s < fixture.statements.size(); ++s)
    (fixture.statements[s].given ? givens : checks).push_back(s);

  Search search(ring, fixture, checks, givens);
  const auto failures = search.run();
  report.searched = search.nodes();
  const std::vector<long> assignment =
      failures ? search.best_assignment() : std::vector<long>(fixture.labels.size(), -1);
  report.consistent = failures.has_value() && *failures == 0;
  for (std::size_t k = 0; k < fixture.labels.size(); ++k)
    report.assignment.emplace_back(fixture.labels[k].name,
                                   assignment[k] >= 0 ? ring.label(static_cast<std::size_t>(assignment[k])) : "?");

  for (std::size_t s = 0; s < fixture.statements.size(); ++s) {
    const FixtureStatement& st = fixture.statements[s];
    StatementResult result;
    result.tag = st.tag;
    result.text = st.text;
    result.given = st.given;
    if (failures) {
      std::vector<Value> sides;
      result.pass = holds(ring, st, assignment, &sides);
      for (const Value& v : sides) result.sides.push_back(render(ring, fixture, assignment, v));
    }
    if (options.individual && !st.given) {
      Search alone(ring, fixture, {s}, givens);
      const auto f = alone.run();
      result.alone = f.has_value() && *f == 0;
      report.searched += alone.nodes();
    }
    if (!st.given) {
      ++report.checked;
      if (result.pass) ++report.passed;
    }
    report.statements.push_back(std::move(result));
  }
  return report;
}

std::string report_to_text(const FixtureReport& report) {
  std::ostringstream out;
  out << "fixture " << report.name << "\n";
  out << "assignment:";
  for (const auto& [from, to] : report.assignment) out << ' ' << from << '=' << to;
  out << "\n";
  for (const StatementResult& r : report.statements) {
    out << (r.given ? (r.pass ? "given " : "GIVEN-FAIL ") : (r.pass ? "PASS " : "FAIL ")) << r.tag << ": " << r.text
        << "\n";
    if (!r.pass)
      for (std::size_t k = 0; k < r.sides.size(); ++k) out << "    side " << k + 1 << ": " << r.sides[k] << "\n";
    if (r.alone) out << "    alone: " << (*r.alone ? "satisfiable" : "unsatisfiable") << "\n";
  }
  out << "result: " << report.passed << "/" << report.checked << " pass; "
      << (report.consistent ? "consistent" : "inconsistent") << "\n";
  return out.str();
}

std::string report_to_json(const FixtureReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = "sector-atlas/fixture-report/1";
  j["fixture"] = report.name;
  j["consistent"] = report.consistent;
  j["passed"] = report.passed;
  j["checked"] = report.checked;
  auto& assignment = j["assignment"] = nlohmann::ordered_json::object();
  for (const auto& [from, to] : report.assignment) assignment[from] = to;
  auto& statements = j["statements"] = nlohmann::ordered_json::array();
  for (const StatementResult& r : report.statements) {
    nlohmann::ordered_json s;
    s["tag"] = r.tag;
    s["text"] = r.text;
    s["given"] = r.given;
    s["pass"] = r.pass;
    s["sides"] = r.sides;
    if (r.alone) s["alone"] = *r.alone;
    statements.push_back(s);
  }
  return j.dump(1) + "\n";
}

}  // namespace atlas
