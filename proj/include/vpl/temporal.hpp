#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vpl/sentence.hpp"

namespace vpl {

enum class Quantifier { exists, forall };
std::string_view to_string(Quantifier q);

/// "there is a time t in [a,b] at which subject vp_t holds", or the
/// universal form. Polarity lives inside the verb phrase.
struct TemporalStatement {
  Quantifier quantifier = Quantifier::exists;
  TimeInterval interval;
  std::string subject;
  VerbPhrase vp;

  friend bool operator==(const TemporalStatement &, const TemporalStatement &) = default;
};

/// "EXISTS t in [0,100]: i buy_t * laptop_computer"
std::string to_string(const TemporalStatement &ts);

inline constexpr TimeInterval kDefaultLifetime{0, 100};

/// past_perfect S        -> EXISTS t in lifetime: S
/// past_perfect NOT S    -> FORALL t in lifetime: NOT S
/// past S @ [a,b]        -> EXISTS t in [a,b]: S   ([a,b] inside lifetime)
/// past NOT S @ [a,b]    -> FORALL t in [a,b]: NOT S
/// Other tenses throw unsupported_tense.
TemporalStatement render(const Sentence &sentence, const TimeInterval &lifetime);

/// Inverse of render. A statement over the whole lifetime maps back to the
/// perfect tense, one over a strict subinterval to a timed past. EXISTS over
/// a negated phrase and FORALL over a positive one have no surface form and
/// throw non_canonical_form.
Sentence inverse_render(const TemporalStatement &ts, const TimeInterval &lifetime);

/// NOT EXISTS t: S  <=>  FORALL t: NOT S, and the dual.
TemporalStatement negate_quantified(const TemporalStatement &ts);

struct TemporalOptions {
  /// Grants FORALL over A => EXISTS over B when A and B overlap, and EXISTS =>
  /// FORALL over the same single instant. Off by default.
  bool mixed_quantifier_entailment = false;
};

/// EXISTS/EXISTS: a.interval within b.interval and vp_leq(a.vp, b.vp).
/// FORALL/FORALL: b.interval within a.interval and vp_leq(a.vp, b.vp).
/// Mixed quantifiers: false unless enabled in the options.
bool temporal_entails(const Taxonomy &taxonomy, const TemporalStatement &a,
                      const TemporalStatement &b, const TemporalOptions &options = {});

/// A subject and the indices of the premises it accepts.
struct PremiseAcceptance {
  std::string subject;
  std::vector<std::size_t> accepted;
};

/// For each subject accepting every premise, the per-person disjunction
/// "subject has never <specific> OR subject has <general>". The premises alone
/// must order `specific` below `general`, otherwise not_entailed is thrown.
/// Results are sorted by subject.
std::vector<std::pair<std::string, SentenceExpr>>
personal_or(const std::vector<Edge> &premises, const VerbPhrase &specific,
            const VerbPhrase &general, const std::vector<PremiseAcceptance> &subjects);

} // namespace vpl
