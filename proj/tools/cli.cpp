#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "vpl/dialogue.hpp"
#include "vpl/dsl.hpp"
#include "vpl/linguistic.hpp"

namespace vpl::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kFailure = 2;

struct Config {
  std::string kb_path;
  std::string output = "text";
  bool lenient = false;
  std::size_t cap = kDefaultCap;

  bool machine() const { return output == "machine"; }
};

// A logical "no" rather than a failure to compute.
bool negative_code(ErrorCode code) {
  switch (code) {
  case ErrorCode::not_entailed:
  case ErrorCode::not_factual:
  case ErrorCode::no_refinement:
  case ErrorCode::no_degree:
  case ErrorCode::no_iso: return true;
  default: return false;
  }
}

/// Error raised while reading a command-line argument, tagged with its name.
struct ArgumentError {
  std::string name;
  ParseError error;
};

Sentence sentence_arg(const std::string &name, const std::string &text) {
  try {
    return parse_sentence(text);
  } catch (const ParseError &e) {
    throw ArgumentError{name, e};
  }
}

// Accepts full expressions and, for convenience, a bare sentence.
SentenceExpr expr_arg(const std::string &name, const std::string &text) {
  try {
    return parse_expr(text);
  } catch (const ParseError &e) {
    auto first = text.find_first_not_of(" \t");
    bool bare = first != std::string::npos &&
                (std::isalpha(static_cast<unsigned char>(text[first])) || text[first] == '_');
    std::string head = normalize_identifier(text.substr(first == std::string::npos ? 0 : first, 3));
    if (!bare || head == "not") throw ArgumentError{name, e};
    try {
      return SentenceExpr::atom(parse_sentence(text));
    } catch (const ParseError &inner) {
      throw ArgumentError{name, inner};
    }
  }
}

json step_json(const DerivationStep &step) {
  return json{{"rule", std::string(to_string(step.rule))},
              {"slot", step.slot ? json(*step.slot) : json(nullptr)},
              {"from", step.from},
              {"to", step.to},
              {"result", to_string(step.result)}};
}

json steps_json(const std::vector<DerivationStep> &steps) {
  json arr = json::array();
  for (const auto &s : steps) arr.push_back(step_json(s));
  return arr;
}

std::string step_text(const DerivationStep &step) {
  std::string rule(to_string(step.rule));
  if (step.slot) rule += "[" + std::to_string(*step.slot) + "]";
  return "  " + rule + ": " + step.from + " -> " + step.to + " => " + to_string(step.result);
}

std::vector<std::string> sentences(const std::vector<Sentence> &items) {
  std::vector<std::string> out;
  for (const auto &s : items) out.push_back(to_string(s));
  return out;
}

class Session {
public:
  Session(const Config &config, std::istream &in, std::ostream &out, std::ostream &err)
      : config_(config), in_(in), out_(out), err_(err) {}

  void load() { kb_ = load_file(config_.kb_path, LoadOptions{config_.lenient}); }
  KnowledgeBase &kb() { return kb_; }
  const Taxonomy &tax() const { return kb_.taxonomy; }

  void record(const std::string &command, int code, json fields) {
    if (!config_.machine()) return;
    fields["command"] = command;
    fields["status"] = code == kOk ? "ok" : code == kNegative ? "negative" : "error";
    out_ << fields.dump() << "\n";
  }

  void text(const std::string &line) {
    if (!config_.machine()) out_ << line << "\n";
  }

  int check(const std::string &expr_text) {
    SentenceExpr expr = expr_arg("expr", expr_text);
    Status status = eval(kb_.world, tax(), expr);
    int code = status == Status::factual || status == Status::plan ? kOk : kNegative;
    text(std::string(to_string(status)));
    record("check", code, {{"expr", to_string(expr)}, {"value", std::string(to_string(status))}});
    return code;
  }

  int entails_cmd(const std::string &from_text, const std::string &to_text) {
    Sentence from = sentence_arg("from", from_text);
    Sentence to = sentence_arg("to", to_text);
    if (!entails(tax(), from, to)) {
      text("false");
      record("entails", kNegative,
             {{"from", to_string(from)}, {"to", to_string(to)}, {"entails", false}});
      return kNegative;
    }
    Derivation d = derive(tax(), from, to);
    text("true");
    for (const auto &step : d.steps) text(step_text(step));
    record("entails", kOk,
           {{"from", to_string(from)},
            {"to", to_string(to)},
            {"entails", true},
            {"steps", steps_json(d.steps)}});
    return kOk;
  }

  int closure_cmd(const std::string &fact_text) {
    Sentence fact = sentence_arg("fact", fact_text);
    ClosureResult result = closure(tax(), fact, config_.cap);
    json conclusions = json::array();
    for (const auto &d : result.derivations) {
      text(to_string(d.conclusion));
      conclusions.push_back(
          json{{"sentence", to_string(d.conclusion)}, {"steps", steps_json(d.steps)}});
    }
    if (result.truncated) {
      err_ << "note: closure truncated at " << config_.cap << " conclusions\n";
    }
    record("closure", kOk,
           {{"fact", to_string(fact)},
            {"count", result.derivations.size()},
            {"truncated", result.truncated},
            {"conclusions", conclusions}});
    return kOk;
  }

  int contrapose_cmd(const std::string &from_text, const std::string &to_text) {
    Implication imp{sentence_arg("from", from_text), sentence_arg("to", to_text)};
    Implication c = contrapose(tax(), imp);
    text(to_string(c.from) + " => " + to_string(c.to));
    record("contrapose", kOk, {{"from", to_string(c.from)}, {"to", to_string(c.to)}});
    return kOk;
  }

  int disjunct_cmd(const std::string &from_text, const std::string &to_text) {
    Implication imp{sentence_arg("from", from_text), sentence_arg("to", to_text)};
    SentenceExpr e = implication_to_disjunction(tax(), imp);
    text(to_string(e));
    record("disjunct", kOk, {{"expr", to_string(e)}});
    return kOk;
  }

  int render_cmd(const std::string &sentence_text) {
    Sentence s = sentence_arg("sentence", sentence_text);
    tax().validate(s.vp);
    TemporalStatement ts = render(s, kb_.lifetime_of(s.subject));
    text(to_string(ts));
    record("render", kOk,
           {{"sentence", to_string(s)},
            {"quantifier", std::string(to_string(ts.quantifier))},
            {"interval", {ts.interval.start, ts.interval.end}},
            {"rendered", to_string(ts)}});
    return kOk;
  }

  int temporal_cmd(const std::string &a_text, const std::string &b_text, bool mixed) {
    Sentence a = sentence_arg("a", a_text);
    Sentence b = sentence_arg("b", b_text);
    TemporalStatement ra = render(a, kb_.lifetime_of(a.subject));
    TemporalStatement rb = render(b, kb_.lifetime_of(b.subject));
    bool result = temporal_entails(tax(), ra, rb, TemporalOptions{mixed});
    text(result ? "true" : "false");
    record("temporal-entails", result ? kOk : kNegative,
           {{"a", to_string(ra)}, {"b", to_string(rb)}, {"entails", result}});
    return result ? kOk : kNegative;
  }

  int ask_cmd(const std::string &op_text, const std::string &sentence_text,
              std::optional<std::size_t> slot) {
    auto op = question_from_string(op_text);
    if (!op) {
      err_ << "error: unknown question operator '" << op_text
           << "'; expected how, which_part or which_kind\n";
      record("ask", kFailure, {{"code", "usage"}});
      return kFailure;
    }
    Sentence s = sentence_arg("sentence", sentence_text);
    QuestionResult result = apply_question(tax(), kb_.world, *op, s, slot);
    for (const auto &a : result.answers) text(to_string(a));
    int code = result.answers.empty() ? kNegative : kOk;
    if (result.answers.empty()) text("no refinement");
    json fields{{"operator", std::string(to_string(*op))},
                {"sentence", to_string(s)},
                {"answers", sentences(result.answers)}};
    if (result.reason) fields["reason"] = std::string(to_string(*result.reason));
    record("ask", code, fields);
    return code;
  }

  int fuzzy_cmd(const std::string &subject, const std::string &verb, const std::string &item) {
    std::string subj = normalize_identifier(subject);
    std::string v = normalize_identifier(verb);
    std::string it = normalize_identifier(item);
    // A category with a degree for the item wins over one that merely
    // contains it in the noun order.
    std::optional<NVIso> match;
    for (const NVIso &iso : kb_.fuzzy.isos_for(v)) {
      if (kb_.fuzzy.resolve(subj, it, iso.category)) {
        match = iso;
        break;
      }
    }
    for (const NVIso &iso : kb_.fuzzy.isos_for(v)) {
      if (match) break;
      if (tax().nouns().contains(it) && tax().nouns().leq(it, iso.category)) match = iso;
    }
    if (!match) {
      throw Error(ErrorCode::no_iso, "no iso links '" + v + "' to a category of '" + it + "'");
    }
    bool possible = possibility(tax().nouns(), kb_.fuzzy, subj, *match, it);
    auto resolved = kb_.fuzzy.resolve(subj, it, match->category);
    if (!resolved && possible) {
      std::string statement = subj + " can " + v + " " + it;
      text(statement);
      record("fuzzy", kOk,
             {{"statement", statement},
              {"category", match->category},
              {"degree", nullptr},
              {"adverb", nullptr},
              {"possible", true}});
      return kOk;
    }
    std::string statement = fuzzy_statement(kb_.fuzzy, subj, *match, it);
    double degree = *resolved;
    text(statement);
    record("fuzzy", kOk,
           {{"statement", statement},
            {"category", match->category},
            {"degree", degree},
            {"adverb", std::string(to_string(AdverbScale::standard().adverb_for(degree)))},
            {"possible", possible}});
    return kOk;
  }

  int laws_cmd() {
    LawReport report = audit_world(kb_.world, tax(), config_.cap);
    json violations = json::array();
    for (const auto &e : report.entries) {
      if (e.verdict != LawVerdict::violation) continue;
      text("violation: " + to_string(e.sentence) + " is " + std::string(to_string(e.status)) +
           ", its negation is " + std::string(to_string(e.negated_status)));
      violations.push_back(to_string(e.sentence));
    }
    text("laws: " + std::to_string(report.determinate) + " determinate, " +
         std::to_string(report.indeterminate) + " indeterminate, " +
         std::to_string(report.violations) + " violations");
    int code = report.ok() ? kOk : kNegative;
    record("laws", code,
           {{"determinate", report.determinate},
            {"indeterminate", report.indeterminate},
            {"violations", violations}});
    return code;
  }

  int dialogue_cmd(const std::string &root_text) {
    Sentence root = sentence_arg("root", root_text);
    json turns = json::array();
    for (const DialogueTurn &t : generate_dialogue(tax(), kb_.world, root)) {
      text(std::string(to_string(t.speaker)) + ": " + t.text);
      turns.push_back(json{{"speaker", std::string(to_string(t.speaker))}, {"text", t.text}});
    }
    record("dialogue", kOk, {{"turns", turns}});
    return kOk;
  }

  int propagate_cmd() {
    json rules = json::array();
    bool truncated = false;
    for (const ConditionalRule &rule : kb_.rules) {
      PropagationResult result = propagate_conditional(tax(), rule, config_.cap);
      truncated = truncated || result.truncated;
      for (const auto &r : result.rules) {
        text(to_string(r));
        rules.push_back(to_string(r));
      }
    }
    if (truncated) err_ << "note: propagation truncated at " << config_.cap << " rules\n";
    record("propagate", kOk, {{"rules", rules}, {"truncated", truncated}});
    return kOk;
  }

  int repl_cmd() {
    ReplState state{kb_.world, std::nullopt};
    std::string line;
    while (std::getline(in_, line)) {
      std::string trimmed = line;
      trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
      trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
      if (trimmed.empty()) continue;
      if (trimmed == "exit" || trimmed == "quit") break;
      auto [next, response] = repl_step(tax(), std::move(state), trimmed);
      state = std::move(next);
      if (config_.machine()) {
        json rec{{"command", "repl"},
                 {"status", response.text.rfind("ERR:", 0) == 0 ? "error" : "ok"},
                 {"input", trimmed},
                 {"text", response.text}};
        if (response.code) rec["code"] = std::string(to_string(*response.code));
        out_ << rec.dump() << "\n";
      } else {
        out_ << response.text << "\n";
      }
      out_.flush();
    }
    return kOk;
  }

  int fail(const std::string &command, const std::string &where, const Error &e,
           std::optional<std::pair<std::size_t, std::size_t>> position) {
    int code = negative_code(e.code()) ? kNegative : kFailure;
    err_ << (code == kNegative ? "" : "error: ") << where << e.what() << "\n";
    if (code == kNegative) text(std::string(to_string(e.code())));
    json fields{{"code", std::string(to_string(e.code()))}, {"message", where + e.what()}};
    if (position) {
      fields["line"] = position->first;
      fields["column"] = position->second;
    }
    record(command, code, fields);
    return code;
  }

private:
  Config config_;
  std::istream &in_;
  std::ostream &out_;
  std::ostream &err_;
  KnowledgeBase kb_;
};

std::size_t default_cap() {
  if (const char *env = std::getenv("VPL_CAP")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception &) {
    }
  }
  return kDefaultCap;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  Config config;
  config.cap = default_cap();

  CLI::App app{"Verb-phrase logic over .vpl knowledge bases", "vpl"};
  app.require_subcommand(1);
  app.add_option("--output", config.output, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--lenient", config.lenient, "Auto-register unknown atoms while loading");
  app.add_option("--cap", config.cap, "Closure size cap (overrides VPL_CAP)")
      ->check(CLI::PositiveNumber);

  std::string a, b, c;
  std::optional<std::size_t> slot;
  bool mixed = false;
  auto sub = [&](const std::string &name, const std::string &help) {
    CLI::App *s = app.add_subcommand(name, help);
    s->fallthrough();
    s->add_option("kb", config.kb_path, "Knowledge base file")->required();
    return s;
  };
  sub("check", "Evaluate an expression against the facts")
      ->add_option("expr", a)->required();
  auto *entails_sc = sub("entails", "Does one sentence entail another");
  entails_sc->add_option("from", a)->required();
  entails_sc->add_option("to", b)->required();
  sub("closure", "Every sentence a fact entails")->add_option("fact", a)->required();
  auto *contra_sc = sub("contrapose", "Contrapositive of an entailment");
  contra_sc->add_option("from", a)->required();
  contra_sc->add_option("to", b)->required();
  auto *disj_sc = sub("disjunct", "Entailment rewritten as a disjunction");
  disj_sc->add_option("from", a)->required();
  disj_sc->add_option("to", b)->required();
  sub("render", "Quantified temporal form of a sentence")->add_option("sentence", a)->required();
  auto *temporal_sc = sub("temporal-entails", "Entailment between rendered sentences");
  temporal_sc->add_option("a", a)->required();
  temporal_sc->add_option("b", b)->required();
  temporal_sc->add_flag("--mixed", mixed, "Allow FORALL => EXISTS across overlapping intervals");
  auto *ask_sc = sub("ask", "Apply a question operator");
  ask_sc->add_option("op", a)->required();
  ask_sc->add_option("sentence", b)->required();
  ask_sc->add_option("--slot", slot, "Noun slot (0-based)");
  auto *fuzzy_sc = sub("fuzzy", "Frequency statement from the fuzzy tables");
  fuzzy_sc->add_option("subject", a)->required();
  fuzzy_sc->add_option("verb", b)->required();
  fuzzy_sc->add_option("item", c)->required();
  sub("laws", "Audit excluded middle and non-contradiction");
  sub("repl", "Dialogue loop on standard input");
  sub("dialogue", "Scripted general-to-specific conversation")
      ->add_option("root", a)->required();
  sub("propagate", "Conditional rules implied by the knowledge base");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Session session(config, in, out, err);
  try {
    session.load();
  } catch (const ParseError &e) {
    return session.fail(command, config.kb_path + ":", e,
                        std::make_pair(e.line(), e.column()));
  } catch (const Error &e) {
    return session.fail(command, config.kb_path + ": ", e, std::nullopt);
  }

  try {
    if (command == "check") return session.check(a);
    if (command == "entails") return session.entails_cmd(a, b);
    if (command == "closure") return session.closure_cmd(a);
    if (command == "contrapose") return session.contrapose_cmd(a, b);
    if (command == "disjunct") return session.disjunct_cmd(a, b);
    if (command == "render") return session.render_cmd(a);
    if (command == "temporal-entails") return session.temporal_cmd(a, b, mixed);
    if (command == "ask") return session.ask_cmd(a, b, slot);
    if (command == "fuzzy") return session.fuzzy_cmd(a, b, c);
    if (command == "laws") return session.laws_cmd();
    if (command == "repl") return session.repl_cmd();
    if (command == "dialogue") return session.dialogue_cmd(a);
    if (command == "propagate") return session.propagate_cmd();
  } catch (const ArgumentError &e) {
    return session.fail(command, e.name + ":", e.error,
                        std::make_pair(e.error.line(), e.error.column()));
  } catch (const Error &e) {
    return session.fail(command, "", e, std::nullopt);
  }
  return kFailure;
}

} // namespace vpl::cli
