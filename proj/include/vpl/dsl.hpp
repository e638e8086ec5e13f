#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vpl/error.hpp"
#include "vpl/knowledge_base.hpp"
#include "vpl/question.hpp"

namespace vpl {

// Statements of a .vpl knowledge-base file, one per line.

struct NounRelationStmt {
  std::string lower;
  Relation label = Relation::kind_of;
  std::string upper;
  friend bool operator==(const NounRelationStmt &, const NounRelationStmt &) = default;
};

struct VerbRelationStmt {
  std::string lower;
  std::string upper;
  friend bool operator==(const VerbRelationStmt &, const VerbRelationStmt &) = default;
};

struct IsoStmt {
  NVIso iso;
  friend bool operator==(const IsoStmt &, const IsoStmt &) = default;
};

struct DegreeStmt {
  std::string subject; // "*" for every subject
  std::string item;
  std::string category;
  double value = 0.0;
  friend bool operator==(const DegreeStmt &, const DegreeStmt &) = default;
};

struct LifetimeStmt {
  std::string subject;
  TimeInterval interval;
  friend bool operator==(const LifetimeStmt &, const LifetimeStmt &) = default;
};

struct FactStmt {
  Sentence sentence;
  friend bool operator==(const FactStmt &, const FactStmt &) = default;
};

struct CondStmt {
  std::string text;
  Sentence consequent;
  friend bool operator==(const CondStmt &, const CondStmt &) = default;
};

struct CommentStmt {
  std::string text;
  friend bool operator==(const CommentStmt &, const CommentStmt &) = default;
};

using Statement = std::variant<NounRelationStmt, VerbRelationStmt, IsoStmt, DegreeStmt,
                               LifetimeStmt, FactStmt, CondStmt, CommentStmt>;

struct KbDocument {
  std::vector<Statement> statements;
  /// Source line of each statement; empty for documents built in code.
  std::vector<std::size_t> lines;
};

/// Position of the first offending token (1-based) and what would have been
/// accepted there.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string &message,
             std::vector<std::string> expected);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string &detail() const { return detail_; }
  const std::vector<std::string> &expected() const { return expected_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
  std::vector<std::string> expected_;
};

KbDocument parse_kb(std::string_view source);

/// `<subject> <tense> [not] <verb> * <noun> {* <noun>} [@ [<int>,<int>]]`
Sentence parse_sentence(std::string_view source);

/// EXPR := TERM ((AND | OR) TERM)*, TERM := NOT TERM | ( EXPR ) | "sentence" |
/// sentence, AND binding tighter than OR, both left associative. Bare
/// sentences make to_string(expr) parseable.
SentenceExpr parse_expr(std::string_view source);

/// Canonical text: comments dropped, one statement per line, grouped by
/// statement kind and sorted lexically within a group.
std::string serialize(const KbDocument &doc);
std::string serialize(const Statement &statement);

/// Equality ignoring statement order and comments.
bool structurally_equal(const KbDocument &a, const KbDocument &b);

struct LoadOptions {
  /// Auto-register unknown atoms used by facts, conditionals, isos and
  /// degrees instead of rejecting them.
  bool lenient = false;
};

/// Builds a knowledge base. Relations are loaded before everything else, so
/// statement order does not matter. Errors carry the statement's line.
KnowledgeBase load(const KbDocument &doc, const LoadOptions &options = {});
KnowledgeBase load_file(const std::filesystem::path &path, const LoadOptions &options = {});

// Dialogue line protocol.

/// `? how|which_part|which_kind [<slot>] [<sentence>]`
struct AskCommand {
  QuestionOperator op;
  std::optional<std::size_t> slot;
  std::optional<Sentence> sentence;
};

/// `! <sentence>`
struct AssertCommand {
  Sentence sentence;
};

/// `= <expr>`
struct EvalCommand {
  SentenceExpr expr;
};

using ReplCommand = std::variant<AskCommand, AssertCommand, EvalCommand>;

ReplCommand parse_repl_command(std::string_view line);

} // namespace vpl
