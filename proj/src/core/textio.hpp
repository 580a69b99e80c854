#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "classspec.hpp"
#include "relation.hpp"

namespace relcat {

// Named relations parsed from one file, in file order.
struct RelationFile {
  std::vector<std::pair<std::string, Relation>> relations;
  std::string source;  // path or "<string>"

  const Relation* find(std::string_view name) const;
  const Relation& require(std::string_view name) const;  // throws UnknownRelation
};

// Line-oriented format:
//
//   relation <name>
//   dom <label> ...
//   cod <label> ...
//   pairs
//   <a> -> <b>
//   ...
//   end
//
// '#' starts a comment.  Label and pair validity errors are reported with
// the offending line number.
RelationFile parse_file(std::string_view text, bool strict);

std::string serialize_relation_block(const std::string& name, const Relation& r);
std::string serialize_file(const RelationFile& file);

// Text reports; all output is deterministic line-oriented key/value text.
std::string classify_report(const std::string& name, const Relation& r,
                            bool paranoid = false);

struct OracleOutcome {
  std::string text;
  bool agreement = true;
};
OracleOutcome oracle_report(const std::string& name, const Relation& r,
                            std::size_t cap);

std::string factor_report(const std::string& name, const Relation& r, std::size_t mid_max,
                          const ClassSpec& e_class, const ClassSpec& m_class,
                          std::uint64_t budget);

}  // namespace relcat
