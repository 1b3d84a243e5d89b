#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dtk/structures.hpp"

namespace dtk {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// True for names matching [A-Za-z0-9_.|]+.
bool valid_identifier(std::string_view id);

/// `state <id> { <prop> ... }`, `edge <src> <dst>`, and `sdelta <id>` for the
/// fresh state of a deadlock extension (the only place `delta` may appear).
KripkeStructure parse_ks(std::string_view text);
/// `state <id>`, `trans <src> <action> <dst>`.
Lts parse_lts(std::string_view text);
/// `state <id> { <prop> ... }`, `trans <src> <action> <dst>`.
DoublyLabelledTS parse_l2ts(std::string_view text);

std::string render_ks(const KripkeStructure& k);
std::string render_lts(const Lts& l);
std::string render_l2ts(const DoublyLabelledTS& d);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace dtk
