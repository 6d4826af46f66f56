#ifndef VACALIB_CAUSE_SET_HPP
#define VACALIB_CAUSE_SET_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vacalib {

enum class AgeGroup { neonate, child, custom };

std::string to_string(AgeGroup g);
AgeGroup age_group_from_string(std::string_view s);

// Normalizes a cause label for matching: lowercase, trimmed, internal
// whitespace and '_' runs collapsed to a single '_'.
std::string normalize_label(std::string_view label);

// Ordered cause vocabulary. The neonate and child sets are fixed constants;
// their order is load-bearing for every serialized artifact.
class CauseSet {
 public:
  CauseSet(std::vector<std::string> labels, AgeGroup age = AgeGroup::custom);

  static const CauseSet& neonate();
  static const CauseSet& child();
  static CauseSet for_age_group(AgeGroup g);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  AgeGroup age_group() const { return age_; }

  // Index by normalized label.
  std::optional<std::size_t> index_of(std::string_view label) const;
  bool contains(std::string_view label) const { return index_of(label).has_value(); }

  bool operator==(const CauseSet& other) const {
    return labels_ == other.labels_ && age_ == other.age_;
  }

 private:
  std::vector<std::string> labels_;
  AgeGroup age_;
};

inline constexpr std::size_t kMaxCauses = 64;

}  // namespace vacalib

#endif
