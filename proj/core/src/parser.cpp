#include "greq/parser.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <utility>

#include "greq/lexer.hpp"

namespace greq {

namespace {

struct Named {
  std::string text;
  SourceSpan span;
};

struct AstStep {
  Named via;  // empty text for the entry step
  Named entity;
  ActionSet actions;
  std::vector<Named> updated_attributes;
};

struct AstPrivilege {
  Named goal;
  std::vector<AstStep> steps;  // first is the entry step
};

struct AstGoal {
  Named name;
  std::optional<Named> responsible;
  std::optional<Named> entry;
  bool had_body = false;
  bool had_props = false;
  std::vector<AstGoal> children;
};

struct AstModel {
  std::vector<std::pair<Named, std::vector<Named>>> organizations;
  std::vector<AstGoal> goals;
  std::vector<std::pair<Named, std::vector<std::pair<Named, AttributeKind>>>> entities;
  std::vector<std::pair<Named, std::pair<Named, Named>>> relationships;  // name, src, dst
  std::vector<AstPrivilege> privileges;
};

bool is_decl_keyword(const Token& tok) {
  return tok.kind == TokenKind::Identifier &&
         (tok.text == "organization" || tok.text == "goal" ||
          tok.text == "entity" || tok.text == "relationship" ||
          tok.text == "privilege");
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<ParseError> errors)
      : tokens_(std::move(tokens)), errors_(std::move(errors)) {}

  AstModel parse() {
    AstModel ast;
    while (!at_end()) {
      if (!parse_decl(ast)) resync();
    }
    return ast;
  }

  std::vector<ParseError> take_errors() { return std::move(errors_); }

 private:
  const Token& peek() const { return tokens_[index_]; }
  bool at_end() const { return peek().kind == TokenKind::EndOfFile; }
  Token advance() { return tokens_[at_end() ? index_ : index_++]; }

  bool check_kw(const char* kw) const {
    return peek().kind == TokenKind::Identifier && peek().text == kw;
  }

  bool eat_kw(const char* kw) {
    if (!check_kw(kw)) return false;
    advance();
    return true;
  }

  void error_here(std::string message, std::vector<std::string> expected = {}) {
    errors_.push_back({peek().span, std::move(message), std::move(expected)});
  }

  bool expect(TokenKind kind, const char* what) {
    if (peek().kind == kind) {
      advance();
      return true;
    }
    error_here(std::string("expected '") + what + "'", {what});
    return false;
  }

  // Skip to the next top-level declaration keyword, balancing braces so a
  // keyword inside a goal body does not cut recovery short. Always consumes
  // at least one token.
  void resync() {
    int depth = 0;
    advance();
    while (!at_end()) {
      const Token& tok = peek();
      if (tok.kind == TokenKind::LBrace) ++depth;
      if (tok.kind == TokenKind::RBrace && depth > 0) --depth;
      if (depth == 0 && is_decl_keyword(tok)) return;
      advance();
    }
  }

  bool parse_name(Named& out, const char* what) {
    const Token& tok = peek();
    if (tok.kind == TokenKind::String ||
        (tok.kind == TokenKind::Identifier && !is_keyword(tok.text))) {
      out = {tok.text, tok.span};
      advance();
      if (out.text.empty()) {
        errors_.push_back({out.span, std::string(what) + " must not be empty", {}});
        return false;
      }
      return true;
    }
    error_here(std::string("expected ") + what, {"identifier", "quoted string"});
    return false;
  }

  bool parse_decl(AstModel& ast) {
    if (eat_kw("organization")) return parse_organization(ast);
    if (check_kw("goal")) {
      AstGoal goal;
      if (!parse_goal(goal)) return false;
      ast.goals.push_back(std::move(goal));
      return true;
    }
    if (eat_kw("entity")) return parse_entity(ast);
    if (eat_kw("relationship")) return parse_relationship(ast);
    if (eat_kw("privilege")) return parse_privilege(ast);
    error_here("expected a declaration",
               {"organization", "goal", "entity", "relationship", "privilege"});
    return false;
  }

  bool parse_organization(AstModel& ast) {
    Named name;
    if (!parse_name(name, "organization name")) return false;
    if (!expect(TokenKind::LBrace, "{")) return false;
    std::vector<Named> agents;
    while (eat_kw("agent")) {
      Named agent;
      if (!parse_name(agent, "agent name")) return false;
      agents.push_back(std::move(agent));
    }
    if (!expect(TokenKind::RBrace, "}")) return false;
    ast.organizations.emplace_back(std::move(name), std::move(agents));
    return true;
  }

  bool parse_goal(AstGoal& out) {
    advance();  // "goal"
    if (!parse_name(out.name, "goal name")) return false;
    if (peek().kind != TokenKind::LBrace) return true;  // bare leaf
    advance();
    out.had_body = true;
    while (true) {
      if (check_kw("responsible") || check_kw("entry")) {
        const bool responsible = peek().text == "responsible";
        advance();
        if (!expect(TokenKind::Colon, ":")) return false;
        Named value;
        if (!parse_name(value, responsible ? "agent name" : "entity name"))
          return false;
        out.had_props = true;
        (responsible ? out.responsible : out.entry) = std::move(value);
        continue;
      }
      if (check_kw("goal")) {
        AstGoal child;
        if (!parse_goal(child)) return false;
        out.children.push_back(std::move(child));
        continue;
      }
      break;
    }
    return expect(TokenKind::RBrace, "}");
  }

  bool parse_entity(AstModel& ast) {
    Named name;
    if (!parse_name(name, "entity name")) return false;
    if (!expect(TokenKind::LBrace, "{")) return false;
    std::vector<std::pair<Named, AttributeKind>> attributes;
    while (eat_kw("attribute")) {
      Named attr;
      if (!parse_name(attr, "attribute name")) return false;
      if (!expect(TokenKind::Colon, ":")) return false;
      const Token& kind_tok = peek();
      std::optional<AttributeKind> kind;
      if (kind_tok.kind == TokenKind::Identifier)
        kind = attribute_kind_from_string(kind_tok.text);
      if (!kind) {
        error_here("expected attribute kind", {"text", "number", "date", "boolean"});
        return false;
      }
      advance();
      attributes.emplace_back(std::move(attr), *kind);
    }
    if (!expect(TokenKind::RBrace, "}")) return false;
    ast.entities.emplace_back(std::move(name), std::move(attributes));
    return true;
  }

  bool parse_relationship(AstModel& ast) {
    Named name, source, target;
    if (!parse_name(name, "relationship name")) return false;
    if (!expect(TokenKind::Colon, ":")) return false;
    if (!parse_name(source, "entity name")) return false;
    if (!expect(TokenKind::Arrow, "->")) return false;
    if (!parse_name(target, "entity name")) return false;
    ast.relationships.emplace_back(std::move(name),
                                   std::make_pair(std::move(source), std::move(target)));
    return true;
  }

  bool parse_actions(AstStep& step) {
    if (!expect(TokenKind::LBrace, "{")) return false;
    while (true) {
      if (eat_kw("create")) step.actions.create = true;
      else if (eat_kw("read")) step.actions.read = true;
      else if (eat_kw("delete")) step.actions.remove = true;
      else if (eat_kw("update")) {
        step.actions.update = true;
        if (peek().kind == TokenKind::LParen) {
          advance();
          do {
            Named attr;
            if (!parse_name(attr, "attribute name")) return false;
            step.updated_attributes.push_back(std::move(attr));
          } while (peek().kind == TokenKind::Comma && (advance(), true));
          if (!expect(TokenKind::RParen, ")")) return false;
        }
      } else {
        error_here("expected an action", {"create", "read", "update", "delete"});
        return false;
      }
      if (peek().kind != TokenKind::Comma) break;
      advance();
    }
    return expect(TokenKind::RBrace, "}");
  }

  bool parse_privilege(AstModel& ast) {
    if (!eat_kw("for")) {
      error_here("expected 'for'", {"for"});
      return false;
    }
    AstPrivilege priv;
    if (!parse_name(priv.goal, "goal name")) return false;
    if (!expect(TokenKind::LBrace, "{")) return false;
    if (!eat_kw("entry")) {
      error_here("expected 'entry'", {"entry"});
      return false;
    }
    AstStep entry;
    if (!parse_name(entry.entity, "entity name")) return false;
    if (!parse_actions(entry)) return false;
    priv.steps.push_back(std::move(entry));
    while (eat_kw("step")) {
      AstStep step;
      if (!parse_name(step.via, "relationship name")) return false;
      if (!expect(TokenKind::Arrow, "->")) return false;
      if (!parse_name(step.entity, "entity name")) return false;
      if (!parse_actions(step)) return false;
      priv.steps.push_back(std::move(step));
    }
    if (!expect(TokenKind::RBrace, "}")) return false;
    ast.privileges.push_back(std::move(priv));
    return true;
  }

  std::vector<Token> tokens_;
  std::vector<ParseError> errors_;
  size_t index_ = 0;
};

// Second pass: name resolution, uniqueness, leaf-only privileges.
class Resolver {
 public:
  Resolver(const AstModel& ast, std::string source_name)
      : ast_(ast), source_name_(std::move(source_name)) {}

  ParseResult run() {
    declare_all();
    ParseResult result;
    result.model = build();
    result.errors = std::move(errors_);
    return result;
  }

 private:
  void error_at(const SourceSpan& span, std::string message) {
    errors_.push_back({span, std::move(message), {}});
  }

  void declare(const char* kind, const Named& name,
               std::map<std::string, SourceSpan>& table) {
    auto [it, inserted] = table.emplace(name.text, name.span);
    if (!inserted)
      error_at(name.span, std::string("duplicate ") + kind + " name '" + name.text +
                              "' (first declared at " +
                              std::to_string(it->second.line) + ":" +
                              std::to_string(it->second.column) + ")");
  }

  void declare_goals(const AstGoal& goal) {
    declare("goal", goal.name, goals_);
    for (const AstGoal& child : goal.children) declare_goals(child);
  }

  void declare_all() {
    for (const auto& [name, agents] : ast_.organizations) {
      declare("organization", name, organizations_);
      for (const Named& agent : agents) declare("agent", agent, agents_);
    }
    for (const AstGoal& goal : ast_.goals) declare_goals(goal);
    for (const auto& [name, attrs] : ast_.entities) {
      declare("entity", name, entities_);
      auto& attr_names = entity_attributes_[name.text];
      std::map<std::string, SourceSpan> seen;
      for (const auto& [attr, kind] : attrs) {
        auto [it, inserted] = seen.emplace(attr.text, attr.span);
        if (!inserted)
          error_at(attr.span, "duplicate attribute '" + attr.text +
                                  "' in entity '" + name.text + "'");
        else
          attr_names.push_back(attr.text);
      }
    }
    for (const auto& [name, endpoints] : ast_.relationships)
      declare("relationship", name, relationships_);
  }

  void check_ref(const std::map<std::string, SourceSpan>& table, const Named& use,
                 const char* kind) {
    if (!table.count(use.text))
      error_at(use.span, std::string("unknown ") + kind + " '" + use.text + "'");
  }

  Goal build_goal(const AstGoal& ast_goal) {
    Goal goal;
    goal.name = ast_goal.name.text;
    if (ast_goal.responsible) {
      check_ref(agents_, *ast_goal.responsible, "agent");
      goal.responsible = ast_goal.responsible->text;
    }
    if (ast_goal.entry) {
      check_ref(entities_, *ast_goal.entry, "entity");
      goal.entry = ast_goal.entry->text;
    }
    goal.composite = !ast_goal.children.empty() ||
                     (ast_goal.had_body && !ast_goal.had_props);
    if (goal.composite) leaf_names_.erase(goal.name);
    for (const AstGoal& child : ast_goal.children)
      goal.children.push_back(build_goal(child));
    return goal;
  }

  Step build_step(const AstStep& ast_step, bool is_entry) {
    Step step;
    step.entity = ast_step.entity.text;
    check_ref(entities_, ast_step.entity, "entity");
    if (!is_entry) {
      check_ref(relationships_, ast_step.via, "relationship");
      step.via = ast_step.via.text;
    }
    step.actions = ast_step.actions;
    auto attrs_it = entity_attributes_.find(step.entity);
    for (const Named& attr : ast_step.updated_attributes) {
      if (attrs_it != entity_attributes_.end()) {
        const auto& known = attrs_it->second;
        if (std::find(known.begin(), known.end(), attr.text) == known.end())
          error_at(attr.span, "entity '" + step.entity + "' has no attribute '" +
                                  attr.text + "'");
      }
      step.updated_attributes.push_back(attr.text);
    }
    return step;
  }

  Model build() {
    Model model;
    model.source_name = source_name_;
    for (const auto& [name, agents] : ast_.organizations) {
      Organization org;
      org.name = name.text;
      for (const Named& agent : agents) org.agents.push_back({agent.text});
      model.organizations.push_back(std::move(org));
    }
    for (const auto& [name, span] : goals_) leaf_names_.insert(name);
    for (const AstGoal& goal : ast_.goals)
      model.goals.push_back(build_goal(goal));
    for (const auto& [name, attrs] : ast_.entities) {
      Entity entity;
      entity.name = name.text;
      std::map<std::string, SourceSpan> seen;
      for (const auto& [attr, kind] : attrs)
        if (seen.emplace(attr.text, attr.span).second)
          entity.attributes.push_back({attr.text, kind});
      model.entities.push_back(std::move(entity));
    }
    for (const auto& [name, endpoints] : ast_.relationships) {
      check_ref(entities_, endpoints.first, "entity");
      check_ref(entities_, endpoints.second, "entity");
      model.relationships.push_back(
          {name.text, endpoints.first.text, endpoints.second.text});
    }
    for (const AstPrivilege& priv : ast_.privileges) {
      check_ref(goals_, priv.goal, "goal");
      if (goals_.count(priv.goal.text) && !leaf_names_.count(priv.goal.text))
        error_at(priv.goal.span, "privilege may attach only to a leaf goal, and '" +
                                     priv.goal.text + "' is composite");
      Privilege out;
      out.goal = priv.goal.text;
      out.entry_step = build_step(priv.steps.front(), /*is_entry=*/true);
      for (size_t i = 1; i < priv.steps.size(); ++i)
        out.steps.push_back(build_step(priv.steps[i], /*is_entry=*/false));
      model.privileges.push_back(std::move(out));
    }
    return model;
  }

  const AstModel& ast_;
  std::string source_name_;
  std::vector<ParseError> errors_;
  std::map<std::string, SourceSpan> organizations_, agents_, goals_, entities_,
      relationships_;
  std::map<std::string, std::vector<std::string>> entity_attributes_;
  std::set<std::string> leaf_names_;
};

}  // namespace

ParseResult parse_source(const std::string& source, const std::string& file_name) {
  LexResult lexed = lex(source, file_name);
  Parser parser(std::move(lexed.tokens), std::move(lexed.errors));
  AstModel ast = parser.parse();
  std::vector<ParseError> syntax_errors = parser.take_errors();

  ParseResult result = Resolver(ast, file_name).run();
  result.errors.insert(result.errors.begin(),
                       std::make_move_iterator(syntax_errors.begin()),
                       std::make_move_iterator(syntax_errors.end()));
  return result;
}

}  // namespace greq
