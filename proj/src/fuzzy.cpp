#include "vpl/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vpl/error.hpp"

namespace vpl {

std::string_view to_string(Adverb adverb) {
  switch (adverb) {
  case Adverb::never: return "never";
  case Adverb::rarely: return "rarely";
  case Adverb::less_likely: return "less likely";
  case Adverb::more_or_less: return "more or less";
  case Adverb::often: return "often";
  }
  return "?";
}

AdverbScale::AdverbScale(std::vector<Bucket> buckets) : buckets_(std::move(buckets)) {
  if (buckets_.empty() || buckets_.front().lower != 0.0) {
    throw std::invalid_argument("adverb scale must start at 0");
  }
  for (std::size_t i = 1; i < buckets_.size(); ++i) {
    if (!(buckets_[i - 1].lower < buckets_[i].lower) || buckets_[i].lower > 1.0) {
      throw std::invalid_argument("adverb scale bounds must increase within [0,1]");
    }
  }
}

const AdverbScale &AdverbScale::standard() {
  static const AdverbScale scale({{0.0, Adverb::never},
                                  {0.05, Adverb::rarely},
                                  {0.2, Adverb::less_likely},
                                  {0.4, Adverb::more_or_less},
                                  {0.7, Adverb::often}});
  return scale;
}

std::size_t AdverbScale::bucket_index(double degree) const {
  if (!(degree >= 0.0 && degree <= 1.0)) {
    throw Error(ErrorCode::out_of_range, "degree " + std::to_string(degree) + " is outside [0,1]");
  }
  std::size_t i = buckets_.size() - 1;
  while (degree < buckets_[i].lower) --i;
  return i;
}

void FuzzyTable::add_iso(const NVIso &iso) {
  if (!has_iso(iso)) isos_.push_back(iso);
}

bool FuzzyTable::has_iso(const NVIso &iso) const {
  return std::find(isos_.begin(), isos_.end(), iso) != isos_.end();
}

std::vector<NVIso> FuzzyTable::isos_for(std::string_view verb) const {
  std::vector<NVIso> out;
  for (const NVIso &iso : isos_) {
    if (iso.verb == verb) out.push_back(iso);
  }
  return out;
}

void FuzzyTable::set_degree(std::string_view subject, std::string_view item,
                            std::string_view category, double degree) {
  if (!(degree >= 0.0 && degree <= 1.0)) {
    throw Error(ErrorCode::out_of_range, "degree " + std::to_string(degree) + " is outside [0,1]");
  }
  degrees_[Key{std::string(subject), std::string(item), std::string(category)}] = degree;
}

std::optional<double> FuzzyTable::resolve(std::string_view subject, std::string_view item,
                                          std::string_view category) const {
  for (std::string_view who : {subject, kAnySubject}) {
    auto it = degrees_.find(Key{std::string(who), std::string(item), std::string(category)});
    if (it != degrees_.end()) return it->second;
  }
  return std::nullopt;
}

namespace {

void require_iso(const FuzzyTable &table, const NVIso &iso) {
  if (!table.has_iso(iso)) {
    throw Error(ErrorCode::no_iso, "no isomorphism declared between '" + iso.verb + "' and '" +
                                       iso.category + "'");
  }
}

} // namespace

std::string fuzzy_statement(const FuzzyTable &table, std::string_view subject, const NVIso &iso,
                            std::string_view item, const AdverbScale &scale) {
  require_iso(table, iso);
  auto degree = table.resolve(subject, item, iso.category);
  if (!degree) {
    throw Error(ErrorCode::no_degree, "no degree for '" + std::string(item) + "' in '" +
                                          iso.category + "' for '" + std::string(subject) + "'");
  }
  return std::string(subject) + " " + std::string(to_string(scale.adverb_for(*degree))) + " " +
         iso.verb + " " + std::string(item);
}

bool possibility(const Preorder &nouns, const FuzzyTable &table, std::string_view subject,
                 const NVIso &iso, std::string_view item) {
  require_iso(table, iso);
  if (!nouns.leq(item, iso.category)) return false;
  auto degree = table.resolve(subject, item, iso.category);
  return !degree || *degree > 0.0;
}

} // namespace vpl
