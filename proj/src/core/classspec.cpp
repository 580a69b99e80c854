#include "classspec.hpp"

#include <algorithm>
#include <array>

#include "categorical.hpp"
#include "factorization.hpp"

namespace relcat {

namespace {

constexpr std::array<std::pair<MorphismClass, const char*>, 10> kClassNames = {{
    {MorphismClass::all, "all"},
    {MorphismClass::mono, "mono"},
    {MorphismClass::epi, "epi"},
    {MorphismClass::iso, "iso"},
    {MorphismClass::section, "section"},
    {MorphismClass::retraction, "retraction"},
    {MorphismClass::extremal_epi, "extremal_epi"},
    {MorphismClass::bijective_function, "bijective_function"},
    {MorphismClass::correspondence, "correspondence"},
    {MorphismClass::partial_function, "partial_function"},
}};

}  // namespace

const char* morphism_class_name(MorphismClass c) {
  for (const auto& [k, n] : kClassNames) {
    if (k == c) return n;
  }
  return "?";
}

std::string valid_class_names() {
  std::string out;
  for (const auto& [k, n] : kClassNames) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

ClassSpec::ClassSpec(std::vector<MorphismClass> conjuncts, std::size_t arity_max)
    : conjuncts_(std::move(conjuncts)), arity_max_(arity_max) {
  if (conjuncts_.empty()) conjuncts_.push_back(MorphismClass::all);
}

ClassSpec ClassSpec::parse(std::string_view text, std::size_t arity_max) {
  std::vector<MorphismClass> conjuncts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t plus = text.find('+', pos);
    std::string_view part = text.substr(pos, plus == std::string_view::npos ? text.size() - pos
                                                                            : plus - pos);
    bool found = false;
    for (const auto& [k, n] : kClassNames) {
      if (part == n) {
        conjuncts.push_back(k);
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(Errc::bad_class_name, "unknown class '" + std::string(part) +
                                            "'; valid: " + valid_class_names());
    }
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return ClassSpec(std::move(conjuncts), arity_max);
}

bool ClassSpec::contains(const Relation& r) const {
  for (MorphismClass c : conjuncts_) {
    bool ok = true;
    switch (c) {
      case MorphismClass::all: ok = true; break;
      case MorphismClass::mono: ok = is_mono(r).fast_result; break;
      case MorphismClass::epi: ok = is_epi(r).fast_result; break;
      case MorphismClass::iso: ok = is_iso(r); break;
      case MorphismClass::section: ok = is_section(r); break;
      case MorphismClass::retraction: ok = is_retraction(r); break;
      case MorphismClass::extremal_epi: ok = is_extremal_epi(r, extremal_paranoid_); break;
      case MorphismClass::bijective_function: ok = is_function(r) && is_bijective(r); break;
      case MorphismClass::correspondence: ok = is_correspondence(r); break;
      case MorphismClass::partial_function: ok = is_partial_function(r); break;
    }
    if (!ok) return false;
  }
  return true;
}

bool ClassSpec::contains(const Sink& s) const {
  if (s.arity() > arity_max_) return false;
  return std::all_of(s.components().begin(), s.components().end(),
                     [&](const Relation& r) { return contains(r); });
}

std::string ClassSpec::name() const {
  std::string out;
  for (MorphismClass c : conjuncts_) {
    if (!out.empty()) out += '+';
    out += morphism_class_name(c);
  }
  return out;
}

}  // namespace relcat
