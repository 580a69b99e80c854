#include "textio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "categorical.hpp"
#include "factorization.hpp"
#include "predicates.hpp"

namespace relcat {

const Relation* RelationFile::find(std::string_view name) const {
  for (const auto& [n, r] : relations) {
    if (n == name) return &r;
  }
  return nullptr;
}

const Relation& RelationFile::require(std::string_view name) const {
  const Relation* r = find(name);
  if (!r) {
    throw Error(Errc::unknown_relation, "no relation named '" + std::string(name) + "'");
  }
  return *r;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t col;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& msg) {
  throw Error(Errc::parse_error,
              "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
}

Label parse_label(const Token& tok, std::size_t line) {
  Label value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
    parse_fail(line, tok.col, "expected an integer label, got '" + std::string(tok.text) + "'");
  }
  return value;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string witness_text(const MonoEpiWitness& w) {
  if (w.kind == MonoEpiWitness::Kind::image_collision) {
    return "(" + label_set_to_string(w.first) + "," + label_set_to_string(w.second) + ")";
  }
  return label_set_to_string(w.first);
}

}  // namespace

RelationFile parse_file(std::string_view text, bool strict) {
  RelationFile file;
  file.source = "<string>";

  std::optional<std::string> name;
  std::optional<Carrier> dom, cod;
  std::vector<std::pair<Label, Label>> pairs;
  bool in_pairs = false;
  std::size_t block_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    ++line_no;
    auto tokens = tokenize(line);
    if (!tokens.empty()) {
      const Token& head = tokens[0];
      if (!name) {
        if (head.text != "relation") {
          parse_fail(line_no, head.col, "expected 'relation <name>'");
        }
        if (tokens.size() != 2) {
          parse_fail(line_no, head.col, "'relation' takes exactly one name");
        }
        name = std::string(tokens[1].text);
        if (file.find(*name)) {
          parse_fail(line_no, tokens[1].col, "duplicate relation name '" + *name + "'");
        }
        dom.reset();
        cod.reset();
        pairs.clear();
        in_pairs = false;
        block_line = line_no;
      } else if (!in_pairs) {
        if (head.text == "dom" || head.text == "cod") {
          auto& slot = head.text == "dom" ? dom : cod;
          if (slot) {
            parse_fail(line_no, head.col, "duplicate '" + std::string(head.text) + "' line");
          }
          std::vector<Label> labels;
          for (std::size_t t = 1; t < tokens.size(); ++t) {
            labels.push_back(parse_label(tokens[t], line_no));
          }
          try {
            slot.emplace(std::move(labels), strict);
          } catch (const Error& e) {
            throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.message());
          }
        } else if (head.text == "pairs") {
          if (!dom || !cod) {
            parse_fail(line_no, head.col, "'pairs' requires 'dom' and 'cod' first");
          }
          in_pairs = true;
        } else {
          parse_fail(line_no, head.col,
                     "expected 'dom', 'cod' or 'pairs', got '" + std::string(head.text) + "'");
        }
      } else {
        if (head.text == "end") {
          if (tokens.size() != 1) parse_fail(line_no, head.col, "'end' takes no arguments");
          file.relations.emplace_back(*name, Relation(*dom, *cod, pairs));
          name.reset();
        } else {
          if (tokens.size() != 3 || tokens[1].text != "->") {
            parse_fail(line_no, head.col, "expected '<a> -> <b>' or 'end'");
          }
          Label a = parse_label(tokens[0], line_no);
          Label b = parse_label(tokens[2], line_no);
          if (!dom->contains(a)) {
            throw Error(Errc::pair_out_of_carrier,
                        "line " + std::to_string(line_no) + ": " + std::to_string(a) +
                            " not in dom " + label_set_to_string(dom->labels()));
          }
          if (!cod->contains(b)) {
            throw Error(Errc::pair_out_of_carrier,
                        "line " + std::to_string(line_no) + ": " + std::to_string(b) +
                            " not in cod " + label_set_to_string(cod->labels()));
          }
          pairs.emplace_back(a, b);
        }
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (name) {
    throw Error(Errc::parse_error, "line " + std::to_string(block_line) +
                                       ": relation '" + *name + "' is not closed by 'end'");
  }
  return file;
}

std::string serialize_relation_block(const std::string& name, const Relation& r) {
  std::string out = "relation " + name + "\n";
  out += "dom";
  for (Label x : r.dom().labels()) out += ' ' + std::to_string(x);
  out += "\ncod";
  for (Label x : r.cod().labels()) out += ' ' + std::to_string(x);
  out += "\npairs\n";
  for (const auto& [a, b] : r.pairs()) {
    out += std::to_string(a) + " -> " + std::to_string(b) + "\n";
  }
  out += "end\n";
  return out;
}

std::string serialize_file(const RelationFile& file) {
  std::string out;
  for (std::size_t i = 0; i < file.relations.size(); ++i) {
    if (i) out += '\n';
    out += serialize_relation_block(file.relations[i].first, file.relations[i].second);
  }
  return out;
}

std::string classify_report(const std::string& name, const Relation& r, bool paranoid) {
  PredicateReport rep = classify(r);
  std::string out;
  out += "relation: " + name + "\n";
  out += "dom: " + label_set_to_string(r.dom().labels()) + "\n";
  out += "cod: " + label_set_to_string(r.cod().labels()) + "\n";
  out += "image: " + label_set_to_string(rep.image) + "\n";
  out += "coimage: " + label_set_to_string(rep.coimage) + "\n";
  out += "row_cardinalities: {";
  bool first = true;
  for (const auto& [label, count] : rep.row_cardinalities) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(label) + ":" + std::to_string(count);
  }
  out += "}\n";
  out += "correspondence: " + bool_str(rep.correspondence) + "\n";
  out += "partial_function: " + bool_str(rep.partial_function) + "\n";
  out += "injective: " + bool_str(rep.injective) + "\n";
  out += "surjective: " + bool_str(rep.surjective) + "\n";
  out += "function: " + bool_str(rep.function) + "\n";
  out += "bijective: " + bool_str(rep.bijective) + "\n";
  out += "section: " + bool_str(rep.section) + "\n";
  out += "retraction: " + bool_str(rep.retraction) + "\n";
  out += "mono: " + bool_str(is_mono(r).fast_result) + "\n";
  out += "epi: " + bool_str(is_epi(r).fast_result) + "\n";
  out += "iso: " + bool_str(is_iso(r)) + "\n";
  out += "extremal_epi: " + bool_str(is_extremal_epi(r, paranoid)) + "\n";
  return out;
}

OracleOutcome oracle_report(const std::string& name, const Relation& r, std::size_t cap) {
  MonoEpiVerdict mono = ftau_injective_oracle(r, cap);
  MonoEpiVerdict epi = ftau_surjective_oracle(r, cap);
  OracleOutcome out;
  out.agreement =
      mono.fast_result == *mono.oracle_result && epi.fast_result == *epi.oracle_result;
  out.text += "relation: " + name + "\n";
  out.text += "mono fast=" + bool_str(mono.fast_result) +
              " oracle=" + bool_str(*mono.oracle_result);
  if (mono.witness) out.text += " witness=" + witness_text(*mono.witness);
  out.text += "\nepi fast=" + bool_str(epi.fast_result) +
              " oracle=" + bool_str(*epi.oracle_result);
  if (epi.witness) out.text += " witness=" + witness_text(*epi.witness);
  out.text += "\nagreement: " + bool_str(out.agreement) + "\n";
  return out;
}

std::string factor_report(const std::string& name, const Relation& r, std::size_t mid_max,
                          const ClassSpec& e_class, const ClassSpec& m_class,
                          std::uint64_t budget) {
  auto fps = enumerate_factorizations(r, mid_max, e_class, m_class, budget);
  std::string out;
  out += "relation: " + name + "\n";
  out += "e_class: " + e_class.name() + "\n";
  out += "m_class: " + m_class.name() + "\n";
  out += "mid_max: " + std::to_string(mid_max) + "\n";
  out += "factorizations: " + std::to_string(fps.size()) + "\n";
  for (std::size_t i = 0; i < fps.size(); ++i) {
    out += "[" + std::to_string(i + 1) + "] e=" + sink_literal(fps[i].e) +
           " m=" + relation_literal(fps[i].m) + "\n";
  }
  bool unique = true;
  for (std::size_t i = 0; unique && i < fps.size(); ++i) {
    for (std::size_t j = i + 1; unique && j < fps.size(); ++j) {
      if (!essential_uniqueness(fps[i], fps[j])) unique = false;
    }
  }
  out += "unique_up_to_iso: " + bool_str(unique) + "\n";
  return out;
}

}  // namespace relcat
