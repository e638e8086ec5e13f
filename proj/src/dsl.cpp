#include "vpl/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace vpl {

namespace {

std::string join(const std::vector<std::string> &items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

} // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string &message,
                       std::vector<std::string> expected)
    : Error(ErrorCode::parse_error,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message +
                (expected.empty() ? std::string() : "; expected " + join(expected, " or "))),
      line_(line), column_(column), detail_(message), expected_(std::move(expected)) {}

namespace {

enum class Tok { ident, integer, number, string, symbol, comment, newline, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token &t) {
  switch (t.kind) {
  case Tok::end: return "end of input";
  case Tok::newline: return "end of line";
  case Tok::string: return "string \"" + t.text + "\"";
  case Tok::comment: return "comment";
  default: return "'" + t.text + "'";
  }
}

class Lexer {
public:
  Lexer(std::string_view src, std::size_t line = 1, std::size_t column = 1)
      : src_(src), line_(line), column_(column) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      std::size_t line = line_, col = column_;
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '\n') {
        out.push_back({Tok::newline, "\n", line, col});
        advance();
        ++line_;
        column_ = 1;
      } else if (c == '#') {
        advance();
        std::string text;
        while (pos_ < src_.size() && src_[pos_] != '\n') text.push_back(advance());
        auto first = text.find_first_not_of(" \t");
        auto last = text.find_last_not_of(" \t\r");
        text = first == std::string::npos ? "" : text.substr(first, last - first + 1);
        out.push_back({Tok::comment, text, line, col});
      } else if (c == '"') {
        out.push_back({Tok::string, string_body(line, col), line, col});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string text;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '_')) {
          text.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(advance()))));
        }
        out.push_back({Tok::ident, text, line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        out.push_back(number(line, col));
      } else if (c == '=' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        advance();
        advance();
        out.push_back({Tok::symbol, "=>", line, col});
      } else if (std::string_view("*@[],=~()?!").find(c) != std::string_view::npos) {
        advance();
        out.push_back({Tok::symbol, std::string(1, c), line, col});
      } else {
        throw ParseError(line, col, "unexpected character '" + std::string(1, c) + "'", {});
      }
    }
    out.push_back({Tok::end, "", line_, column_});
    return out;
  }

private:
  char advance() {
    ++column_;
    return src_[pos_++];
  }

  std::string string_body(std::size_t line, std::size_t col) {
    advance();
    std::string text;
    while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
      char c = advance();
      if (c == '\\' && pos_ < src_.size() && (src_[pos_] == '"' || src_[pos_] == '\\')) {
        c = advance();
      }
      text.push_back(c);
    }
    if (pos_ >= src_.size() || src_[pos_] != '"') {
      throw ParseError(line, col, "unterminated string", {"'\"'"});
    }
    advance();
    return text;
  }

  Token number(std::size_t line, std::size_t col) {
    std::string text;
    bool real = false;
    if (src_[pos_] == '-') text.push_back(advance());
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        text.push_back(advance());
      }
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      real = true;
      text.push_back(advance());
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      real = true;
      text.push_back(advance());
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) text.push_back(advance());
      digits();
    }
    return {real ? Tok::number : Tok::integer, text, line, col};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

bool reserved(std::string_view word) { return word == "not" || word == "and" || word == "or"; }

const std::vector<std::string> kTenseNames{"past", "past_perfect", "present_continuous", "future"};

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token &peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at_symbol(std::string_view s) const {
    return peek().kind == Tok::symbol && peek().text == s;
  }
  bool at_word(std::string_view w) const { return peek().kind == Tok::ident && peek().text == w; }
  bool at_end() const { return peek().kind == Tok::end; }

  [[noreturn]] void fail(const Token &at, const std::string &message,
                         std::vector<std::string> expected) const {
    throw ParseError(at.line, at.column, message, std::move(expected));
  }
  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    fail(peek(), "unexpected " + describe(peek()), std::move(expected));
  }

  void expect_symbol(std::string_view s) {
    if (!at_symbol(s)) unexpected({"'" + std::string(s) + "'"});
    next();
  }
  void expect_word(std::string_view w) {
    if (!at_word(w)) unexpected({"'" + std::string(w) + "'"});
    next();
  }
  std::string identifier(const std::string &what) {
    if (peek().kind != Tok::ident || reserved(peek().text)) unexpected({what});
    return next().text;
  }
  std::int64_t integer() {
    if (peek().kind != Tok::integer) unexpected({"integer"});
    Token t = next();
    std::int64_t value = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || p != t.text.data() + t.text.size()) {
      fail(t, "integer out of range", {});
    }
    return value;
  }
  double real() {
    if (peek().kind != Tok::integer && peek().kind != Tok::number) unexpected({"number"});
    Token t = next();
    double value = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || p != t.text.data() + t.text.size()) fail(t, "malformed number", {});
    return value;
  }

  TimeInterval interval() {
    expect_symbol("[");
    Token start_tok = peek();
    std::int64_t a = integer();
    expect_symbol(",");
    std::int64_t b = integer();
    expect_symbol("]");
    if (a > b) fail(start_tok, "interval ends before it starts", {});
    return TimeInterval{a, b};
  }

  Sentence sentence() {
    Sentence s;
    s.subject = identifier("subject");
    if (peek().kind != Tok::ident || !tense_from_string(peek().text)) {
      std::vector<std::string> expected;
      for (const auto &t : kTenseNames) expected.push_back("'" + t + "'");
      unexpected(expected);
    }
    s.tense = *tense_from_string(next().text);
    if (at_word("not")) {
      next();
      s.vp.negated = true;
    }
    s.vp.verb = identifier("verb");
    expect_symbol("*");
    s.vp.nouns.push_back(identifier("noun"));
    while (at_symbol("*")) {
      next();
      s.vp.nouns.push_back(identifier("noun"));
    }
    if (at_symbol("@")) {
      next();
      s.timeframe = interval();
    }
    return s;
  }

  SentenceExpr expr() {
    SentenceExpr lhs = conjunction();
    while (at_word("or")) {
      next();
      lhs = SentenceExpr::disj(std::move(lhs), conjunction());
    }
    return lhs;
  }

  SentenceExpr conjunction() {
    SentenceExpr lhs = term();
    while (at_word("and")) {
      next();
      lhs = SentenceExpr::conj(std::move(lhs), term());
    }
    return lhs;
  }

  SentenceExpr term() {
    if (at_word("not")) {
      next();
      return SentenceExpr::negation(term());
    }
    if (at_symbol("(")) {
      next();
      SentenceExpr inner = peek().kind == Tok::ident && !reserved(peek().text)
                               ? SentenceExpr::atom(sentence())
                               : expr();
      expect_symbol(")");
      return inner;
    }
    if (peek().kind == Tok::string) {
      Token t = next();
      Parser sub(Lexer(t.text, t.line, t.column + 1).run());
      Sentence s = sub.sentence();
      if (!sub.at_end()) sub.unexpected({"closing '\"'"});
      return SentenceExpr::atom(std::move(s));
    }
    if (peek().kind == Tok::ident && !reserved(peek().text)) return SentenceExpr::atom(sentence());
    unexpected({"'NOT'", "'('", "sentence"});
  }

  void end_of_statement(KbDocument &doc) {
    if (peek().kind == Tok::comment) {
      Token t = next();
      doc.statements.push_back(CommentStmt{t.text});
      doc.lines.push_back(t.line);
    }
    if (peek().kind == Tok::newline) {
      next();
      return;
    }
    if (!at_end()) unexpected({"end of line"});
  }

  KbDocument document() {
    KbDocument doc;
    for (;;) {
      while (peek().kind == Tok::newline) next();
      if (at_end()) break;
      const Token &head = peek();
      std::size_t line = head.line;
      if (head.kind == Tok::comment) {
        doc.statements.push_back(CommentStmt{head.text});
        doc.lines.push_back(line);
        next();
        end_of_statement(doc);
        continue;
      }
      doc.statements.push_back(statement());
      doc.lines.push_back(line);
      end_of_statement(doc);
    }
    return doc;
  }

  Statement statement() {
    if (at_word("noun")) {
      next();
      NounRelationStmt s;
      s.lower = identifier("noun");
      auto label = peek().kind == Tok::ident ? relation_from_string(peek().text) : std::nullopt;
      if (!label || *label == Relation::way_of) unexpected({"'kind_of'", "'part_of'"});
      next();
      s.label = *label;
      s.upper = identifier("noun");
      return s;
    }
    if (at_word("verb")) {
      next();
      VerbRelationStmt s;
      s.lower = identifier("verb");
      expect_word("way_of");
      s.upper = identifier("verb");
      return s;
    }
    if (at_word("iso")) {
      next();
      IsoStmt s;
      s.iso.verb = identifier("verb");
      expect_symbol("~");
      s.iso.category = identifier("noun");
      return s;
    }
    if (at_word("degree")) {
      next();
      DegreeStmt s;
      if (at_symbol("*")) {
        next();
        s.subject = std::string(kAnySubject);
      } else {
        s.subject = identifier("subject or '*'");
      }
      s.item = identifier("noun");
      expect_word("in");
      s.category = identifier("noun");
      expect_symbol("=");
      s.value = real();
      return s;
    }
    if (at_word("lifetime")) {
      next();
      LifetimeStmt s;
      s.subject = identifier("subject");
      expect_symbol("=");
      s.interval = interval();
      return s;
    }
    if (at_word("fact")) {
      next();
      return FactStmt{sentence()};
    }
    if (at_word("cond")) {
      next();
      if (peek().kind != Tok::string) unexpected({"quoted condition"});
      CondStmt s;
      s.text = next().text;
      expect_symbol("=>");
      s.consequent = sentence();
      return s;
    }
    unexpected({"'noun'", "'verb'", "'iso'", "'degree'", "'lifetime'", "'fact'", "'cond'",
                "comment"});
  }

  ReplCommand repl_command() {
    if (at_symbol("?")) {
      next();
      if (peek().kind != Tok::ident || !question_from_string(peek().text)) {
        unexpected({"'how'", "'which_part'", "'which_kind'"});
      }
      AskCommand cmd{*question_from_string(next().text), std::nullopt, std::nullopt};
      if (peek().kind == Tok::integer) {
        Token t = peek();
        std::int64_t slot = integer();
        if (slot < 0) fail(t, "slot must be non-negative", {});
        cmd.slot = static_cast<std::size_t>(slot);
      }
      if (!at_end()) cmd.sentence = sentence();
      finish();
      return cmd;
    }
    if (at_symbol("!")) {
      next();
      AssertCommand cmd{sentence()};
      finish();
      return cmd;
    }
    if (at_symbol("=")) {
      next();
      EvalCommand cmd{expr()};
      finish();
      return cmd;
    }
    unexpected({"'?'", "'!'", "'='"});
  }

  void finish() {
    while (peek().kind == Tok::newline) next();
    if (!at_end()) unexpected({"end of input"});
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string format_real(double value) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, p);
}

std::string escape(const std::string &text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

template <class... Fs> struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs> Overloaded(Fs...) -> Overloaded<Fs...>;

} // namespace

KbDocument parse_kb(std::string_view source) { return Parser(Lexer(source).run()).document(); }

Sentence parse_sentence(std::string_view source) {
  Parser p(Lexer(source).run());
  Sentence s = p.sentence();
  p.finish();
  return s;
}

SentenceExpr parse_expr(std::string_view source) {
  Parser p(Lexer(source).run());
  SentenceExpr e = p.expr();
  p.finish();
  return e;
}

ReplCommand parse_repl_command(std::string_view line) {
  return Parser(Lexer(line).run()).repl_command();
}

std::string serialize(const Statement &statement) {
  return std::visit(
      Overloaded{
          [](const NounRelationStmt &s) {
            return "noun " + s.lower + " " + std::string(to_string(s.label)) + " " + s.upper;
          },
          [](const VerbRelationStmt &s) { return "verb " + s.lower + " way_of " + s.upper; },
          [](const IsoStmt &s) { return "iso " + s.iso.verb + " ~ " + s.iso.category; },
          [](const DegreeStmt &s) {
            return "degree " + s.subject + " " + s.item + " in " + s.category + " = " +
                   format_real(s.value);
          },
          [](const LifetimeStmt &s) {
            return "lifetime " + s.subject + " = " + to_string(s.interval);
          },
          [](const FactStmt &s) { return "fact " + to_string(s.sentence); },
          [](const CondStmt &s) {
            return "cond \"" + escape(s.text) + "\" => " + to_string(s.consequent);
          },
          [](const CommentStmt &s) { return "# " + s.text; },
      },
      statement);
}

namespace {

std::vector<std::pair<std::size_t, std::string>> canonical_lines(const KbDocument &doc) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  for (const Statement &s : doc.statements) {
    if (std::holds_alternative<CommentStmt>(s)) continue;
    lines.emplace_back(s.index(), serialize(s));
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

std::vector<Statement> canonical_statements(const KbDocument &doc) {
  std::vector<std::pair<std::pair<std::size_t, std::string>, const Statement *>> keyed;
  for (const Statement &s : doc.statements) {
    if (std::holds_alternative<CommentStmt>(s)) continue;
    keyed.push_back({{s.index(), serialize(s)}, &s});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  std::vector<Statement> out;
  for (const auto &[key, s] : keyed) {
    if (!out.empty() && out.back() == *s) continue;
    out.push_back(*s);
  }
  return out;
}

} // namespace

std::string serialize(const KbDocument &doc) {
  std::string out;
  for (const auto &[kind, line] : canonical_lines(doc)) out += line + "\n";
  return out;
}

bool structurally_equal(const KbDocument &a, const KbDocument &b) {
  return canonical_statements(a) == canonical_statements(b);
}

namespace {

std::string where(const KbDocument &doc, std::size_t i) {
  if (i < doc.lines.size()) return "line " + std::to_string(doc.lines[i]) + ": ";
  return "statement " + std::to_string(i + 1) + ": ";
}

void resolve(KnowledgeBase &kb, const std::string &id, Kind kind, bool lenient) {
  auto known = kb.taxonomy.kind_of_atom(id);
  if (!known) {
    if (!lenient) {
      throw Error(ErrorCode::resolution_error,
                  "unknown " + std::string(to_string(kind)) + " '" + id + "'");
    }
    kb.taxonomy.register_atom(id, kind);
  } else if (*known != kind) {
    throw Error(ErrorCode::kind_mismatch, "'" + id + "' is a " + std::string(to_string(*known)) +
                                              ", expected a " + std::string(to_string(kind)));
  }
}

void resolve(KnowledgeBase &kb, const VerbPhrase &vp, bool lenient) {
  resolve(kb, vp.verb, Kind::verb, lenient);
  for (const auto &noun : vp.nouns) resolve(kb, noun, Kind::noun, lenient);
  kb.taxonomy.bind(vp);
}

} // namespace

KnowledgeBase load(const KbDocument &doc, const LoadOptions &options) {
  KnowledgeBase kb;
  auto guarded = [&](std::size_t i, auto &&fn) {
    try {
      fn();
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw Error(e.code(), where(doc, i) + e.what());
    }
  };
  // Relations first, so the remaining statements may appear in any order.
  for (std::size_t i = 0; i < doc.statements.size(); ++i) {
    guarded(i, [&] {
      if (const auto *s = std::get_if<NounRelationStmt>(&doc.statements[i])) {
        kb.taxonomy.declare(s->lower, s->upper, s->label);
      } else if (const auto *v = std::get_if<VerbRelationStmt>(&doc.statements[i])) {
        kb.taxonomy.declare(v->lower, v->upper, Relation::way_of);
      }
    });
  }
  for (std::size_t i = 0; i < doc.statements.size(); ++i) {
    guarded(i, [&] {
      std::visit(Overloaded{
                     [](const NounRelationStmt &) {},
                     [](const VerbRelationStmt &) {},
                     [](const CommentStmt &) {},
                     [&](const IsoStmt &s) {
                       resolve(kb, s.iso.verb, Kind::verb, options.lenient);
                       resolve(kb, s.iso.category, Kind::noun, options.lenient);
                       kb.fuzzy.add_iso(s.iso);
                     },
                     [&](const DegreeStmt &s) {
                       resolve(kb, s.item, Kind::noun, options.lenient);
                       resolve(kb, s.category, Kind::noun, options.lenient);
                       kb.fuzzy.set_degree(s.subject, s.item, s.category, s.value);
                     },
                     [&](const LifetimeStmt &s) { kb.lifetimes[s.subject] = s.interval; },
                     [&](const FactStmt &s) {
                       resolve(kb, s.sentence.vp, options.lenient);
                       kb.world.assert_fact(kb.taxonomy, s.sentence);
                     },
                     [&](const CondStmt &s) {
                       resolve(kb, s.consequent.vp, options.lenient);
                       kb.rules.push_back(ConditionalRule{s.text, s.consequent});
                     },
                 },
                 doc.statements[i]);
    });
  }
  return kb;
}

KnowledgeBase load_file(const std::filesystem::path &path, const LoadOptions &options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::resolution_error, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(parse_kb(buf.str()), options);
}

} // namespace vpl
