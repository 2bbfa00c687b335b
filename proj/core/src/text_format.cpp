#include "srsg/text_format.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

namespace srsg {
namespace {

struct Tokenizer {
  std::istream& in;
  int line_no = 0;

  // Next significant line split into whitespace tokens; empty vector at EOF.
  std::vector<std::string> next_line() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::vector<std::string> tokens;
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return tokens;
    }
    return {};
  }
};

std::int64_t parse_int(const std::string& tok, int line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

Rational parse_tau(const std::string& tok, int line) {
  auto slash = tok.find('/');
  if (slash == std::string::npos)
    throw ParseError(line, "tau must be written as <num>/<den>, got '" + tok + "'");
  try {
    return Rational::parse(tok);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Tokenizer tz{in};

  auto tau_line = tz.next_line();
  if (tau_line.empty()) throw ParseError(tz.line_no, "missing 'tau <num>/<den>' line");
  if (tau_line.size() != 2 || tau_line[0] != "tau")
    throw ParseError(tz.line_no, "expected 'tau <num>/<den>'");
  Rational tau = parse_tau(tau_line[1], tz.line_no);

  auto res_line = tz.next_line();
  if (res_line.empty()) throw ParseError(tz.line_no, "missing 'resources <k>' line");
  if (res_line.size() != 2 || res_line[0] != "resources")
    throw ParseError(tz.line_no, "expected 'resources <k>'");
  std::int64_t k = parse_int(res_line[1], tz.line_no);
  if (k <= 0) throw ParseError(tz.line_no, "resource count must be positive");

  Instance g;
  g.tau = tau;
  g.resource_count = static_cast<std::int32_t>(k);

  for (auto tokens = tz.next_line(); !tokens.empty(); tokens = tz.next_line()) {
    if (tokens[0] != "agent")
      throw ParseError(tz.line_no, "expected 'agent <id> <R|B> <resource-id>...'");
    if (tokens.size() < 4)
      throw ParseError(tz.line_no, "agent line needs an id, a color, and at least one resource");
    std::int64_t id = parse_int(tokens[1], tz.line_no);
    if (id != g.agent_count())
      throw ParseError(tz.line_no, "agent ids must be dense: expected " +
                                       std::to_string(g.agent_count()) + ", got " +
                                       std::to_string(id));
    Color c;
    if (tokens[2] == "R")
      c = Color::Red;
    else if (tokens[2] == "B")
      c = Color::Blue;
    else
      throw ParseError(tz.line_no, "color must be R or B, got '" + tokens[2] + "'");

    std::vector<ResourceId> xs;
    for (std::size_t i = 3; i < tokens.size(); ++i) {
      std::int64_t q = parse_int(tokens[i], tz.line_no);
      if (q < 0 || q >= k)
        throw ParseError(tz.line_no, "resource id " + std::to_string(q) +
                                         " out of range [0," + std::to_string(k) + ")");
      xs.push_back(static_cast<ResourceId>(q));
    }
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      if (xs[i] == xs[i + 1])
        throw ParseError(tz.line_no, "duplicate edge to resource " + std::to_string(xs[i]));
      if (xs[i] > xs[i + 1])
        throw ParseError(tz.line_no, "resource ids must be listed ascending");
    }
    g.colors.push_back(c);
    g.access.push_back(std::move(xs));
  }

  if (g.agent_count() == 0) throw ParseError(tz.line_no, "instance has no agents");
  return g;
}

Instance parse_instance_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

std::string serialize_instance(const Instance& g) {
  std::ostringstream out;
  out << "tau " << g.tau.to_string() << "\n";
  out << "resources " << g.resource_count << "\n";
  for (AgentId a = 0; a < g.agent_count(); ++a) {
    out << "agent " << a << ' ' << color_letter(g.colors[a]);
    for (ResourceId q : g.access[a]) out << ' ' << q;
    out << "\n";
  }
  return out.str();
}

StrategyProfile parse_profile(std::istream& in, const Instance& g) {
  Tokenizer tz{in};
  const std::int32_t n = g.agent_count();
  std::vector<ResourceId> choice(n, -1);

  for (auto tokens = tz.next_line(); !tokens.empty(); tokens = tz.next_line()) {
    if (tokens[0] != "assign" || tokens.size() != 3)
      throw ParseError(tz.line_no, "expected 'assign <agent-id> <resource-id>'");
    std::int64_t a = parse_int(tokens[1], tz.line_no);
    std::int64_t q = parse_int(tokens[2], tz.line_no);
    if (a < 0 || a >= n)
      throw ParseError(tz.line_no, "unknown agent id " + std::to_string(a));
    if (q < 0 || q >= g.resource_count)
      throw ParseError(tz.line_no, "unknown resource id " + std::to_string(q));
    if (choice[a] != -1)
      throw ParseError(tz.line_no, "agent " + std::to_string(a) + " assigned twice");
    choice[a] = static_cast<ResourceId>(q);
  }

  for (AgentId a = 0; a < n; ++a)
    if (choice[a] == -1)
      throw ParseError(tz.line_no, "agent " + std::to_string(a) + " has no assignment");

  StrategyProfile s{std::move(choice)};
  require_feasible(g, s);
  return s;
}

StrategyProfile parse_profile_text(std::string_view text, const Instance& g) {
  std::istringstream in{std::string(text)};
  return parse_profile(in, g);
}

std::string serialize_profile(const StrategyProfile& s) {
  std::ostringstream out;
  for (std::size_t a = 0; a < s.choice.size(); ++a)
    out << "assign " << a << ' ' << s.choice[a] << "\n";
  return out.str();
}

}  // namespace srsg
