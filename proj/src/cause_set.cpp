#include "vacalib/cause_set.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "vacalib/errors.hpp"

namespace vacalib {

namespace {

const std::vector<std::string> kNeonateCauses = {
    "congenital_malformation", "pneumonia", "sepsis_meningitis_inf",
    "ipre", "other", "prematurity"};

const std::vector<std::string> kChildCauses = {
    "malaria", "pneumonia", "diarrhea", "severe_malnutrition", "hiv",
    "injury", "other", "other_infections", "neonatal_causes"};

}  // namespace

std::string to_string(AgeGroup g) {
  switch (g) {
    case AgeGroup::neonate: return "neonate";
    case AgeGroup::child: return "child";
    case AgeGroup::custom: return "custom";
  }
  return "custom";
}

AgeGroup age_group_from_string(std::string_view s) {
  std::string n = normalize_label(s);
  if (n == "neonate") return AgeGroup::neonate;
  if (n == "child") return AgeGroup::child;
  if (n == "custom") return AgeGroup::custom;
  throw InvalidArgument("unknown age group: '" + std::string(s) +
                        "' (expected neonate, child, or custom)");
}

std::string normalize_label(std::string_view label) {
  std::string out;
  out.reserve(label.size());
  bool pending_sep = false;
  for (char c : label) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::isspace(u) || c == '_') {
      if (!out.empty()) pending_sep = true;
      continue;
    }
    if (pending_sep) {
      out.push_back('_');
      pending_sep = false;
    }
    out.push_back(static_cast<char>(std::tolower(u)));
  }
  return out;
}

CauseSet::CauseSet(std::vector<std::string> labels, AgeGroup age)
    : labels_(std::move(labels)), age_(age) {
  if (labels_.size() < 2)
    throw InvalidArgument("cause set needs at least 2 labels");
  if (labels_.size() > kMaxCauses)
    throw InvalidArgument("cause set exceeds " + std::to_string(kMaxCauses) +
                          " labels");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InvalidArgument("cause label must be nonempty");
    if (!seen.insert(normalize_label(l)).second)
      throw InvalidArgument("duplicate cause label: '" + l + "'");
  }
  if (age_ == AgeGroup::neonate && labels_ != kNeonateCauses)
    throw InvalidArgument("neonate cause set must use the canonical labels in order");
  if (age_ == AgeGroup::child && labels_ != kChildCauses)
    throw InvalidArgument("child cause set must use the canonical labels in order");
}

const CauseSet& CauseSet::neonate() {
  static const CauseSet cs(kNeonateCauses, AgeGroup::neonate);
  return cs;
}

const CauseSet& CauseSet::child() {
  static const CauseSet cs(kChildCauses, AgeGroup::child);
  return cs;
}

CauseSet CauseSet::for_age_group(AgeGroup g) {
  switch (g) {
    case AgeGroup::neonate: return neonate();
    case AgeGroup::child: return child();
    case AgeGroup::custom:
      throw InvalidArgument("custom age group has no canonical cause set");
  }
  throw InvalidArgument("bad age group");
}

std::optional<std::size_t> CauseSet::index_of(std::string_view label) const {
  std::string n = normalize_label(label);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (normalize_label(labels_[i]) == n) return i;
  return std::nullopt;
}

}  // namespace vacalib
