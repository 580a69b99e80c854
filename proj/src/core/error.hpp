#pragma once

#include <stdexcept>
#include <string>

namespace relcat {

// Library error codes. The C API maps these 1:1 onto relcat_status values.
enum class Errc {
  zero_label,
  unit_label,
  pair_out_of_carrier,
  label_not_in_carrier,
  composition_mismatch,
  subset_out_of_domain,
  oracle_too_large,
  shape_mismatch,
  commutativity_violated,
  different_sink,
  search_budget_exceeded,
  parse_error,
  unknown_relation,
  bad_class_name,
  invalid_argument,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::zero_label: return "ZeroLabel";
    case Errc::unit_label: return "UnitLabel";
    case Errc::pair_out_of_carrier: return "PairOutOfCarrier";
    case Errc::label_not_in_carrier: return "LabelNotInCarrier";
    case Errc::composition_mismatch: return "CompositionMismatch";
    case Errc::subset_out_of_domain: return "SubsetOutOfDomain";
    case Errc::oracle_too_large: return "OracleTooLarge";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::commutativity_violated: return "CommutativityViolated";
    case Errc::different_sink: return "DifferentSink";
    case Errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_relation: return "UnknownRelation";
    case Errc::bad_class_name: return "BadClassName";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  Errc code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace relcat
