#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "vpl/order.hpp"

namespace vpl {

/// Directed verb <-> noun-category pairing ("food is something you eat").
struct NVIso {
  std::string verb;
  std::string category;

  friend auto operator<=>(const NVIso &, const NVIso &) = default;
  friend bool operator==(const NVIso &, const NVIso &) = default;
};

enum class Adverb { never, rarely, less_likely, more_or_less, often };
std::string_view to_string(Adverb adverb);

/// Partition of [0,1] into frequency adverbs. Each bucket is closed below and
/// open above, except the last, which also contains 1.
class AdverbScale {
public:
  struct Bucket {
    double lower;
    Adverb adverb;
  };

  /// Buckets ordered by ascending lower bound; the first must start at 0.
  explicit AdverbScale(std::vector<Bucket> buckets);

  /// [0,0.05) never, [0.05,0.2) rarely, [0.2,0.4) less likely,
  /// [0.4,0.7) more or less, [0.7,1] often.
  static const AdverbScale &standard();

  /// Throws out_of_range outside [0,1] (and for NaN).
  std::size_t bucket_index(double degree) const;
  Adverb adverb_for(double degree) const { return buckets_[bucket_index(degree)].adverb; }
  const std::vector<Bucket> &buckets() const { return buckets_; }

private:
  std::vector<Bucket> buckets_;
};

inline constexpr std::string_view kAnySubject = "*";

/// Isomorphism declarations and characteristic degrees. A subject-specific
/// degree shadows the wildcard entry for the same item and category.
class FuzzyTable {
public:
  void add_iso(const NVIso &iso);
  bool has_iso(const NVIso &iso) const;
  std::vector<NVIso> isos_for(std::string_view verb) const;
  const std::vector<NVIso> &isos() const { return isos_; }

  /// Throws out_of_range unless 0 <= degree <= 1. Re-setting an entry
  /// replaces it.
  void set_degree(std::string_view subject, std::string_view item, std::string_view category,
                  double degree);
  std::optional<double> resolve(std::string_view subject, std::string_view item,
                                std::string_view category) const;

private:
  using Key = std::tuple<std::string, std::string, std::string>;
  std::vector<NVIso> isos_;
  std::map<Key, double> degrees_;
};

/// "<subject> <adverb> <verb> <item>". Throws no_iso / no_degree.
std::string fuzzy_statement(const FuzzyTable &table, std::string_view subject, const NVIso &iso,
                            std::string_view item,
                            const AdverbScale &scale = AdverbScale::standard());

/// item <= category and a resolved degree above zero (a missing degree counts
/// as possible). Throws no_iso.
bool possibility(const Preorder &nouns, const FuzzyTable &table, std::string_view subject,
                 const NVIso &iso, std::string_view item);

} // namespace vpl
