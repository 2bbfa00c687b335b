#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "srsg/game.hpp"

namespace srsg {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Instance text format (normative, line oriented, UTF-8):
//   tau <num>/<den>
//   resources <k>
//   agent <id> <R|B> <resource-id> [<resource-id> ...]
// '#' starts a comment; blank lines are ignored. Agent ids must be dense
// (0,1,2,... in file order). Any deviation is rejected with a line number.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(std::string_view text);
std::string serialize_instance(const Instance& g);

// Profile files: one line per agent, `assign <agent-id> <resource-id>`.
StrategyProfile parse_profile(std::istream& in, const Instance& g);
StrategyProfile parse_profile_text(std::string_view text, const Instance& g);
std::string serialize_profile(const StrategyProfile& s);

}  // namespace srsg
