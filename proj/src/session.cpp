#include "burchlab/session.hpp"

#include <cctype>
#include <charconv>
#include <regex>

#include "burchlab/errors.hpp"
#include "burchlab/parser.hpp"

namespace burchlab {

const IdealHandle& Session::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw Error("unknown ideal '" + name + "'");
  return it->second;
}

const ModulePresentation& Session::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw Error("unknown module '" + name + "'");
  return it->second;
}

namespace {

struct Line {
  std::size_t number;  // 1-based
  std::size_t offset;  // of the first character in the whole text
  std::string text;    // comment stripped, right-trimmed
  std::size_t indent;  // leading spaces skipped
};

[[noreturn]] void fail(const Line& line, std::size_t column, const std::string& message) {
  throw ParseError("line " + std::to_string(line.number) + ", column " + std::to_string(column + line.indent + 1) +
                       ": " + message,
                   line.offset + line.indent + column);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(start, end - start));
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.pop_back();
    std::size_t indent = 0;
    while (indent < raw.size() && std::isspace(static_cast<unsigned char>(raw[indent]))) ++indent;
    if (indent < raw.size()) out.push_back({number, start, raw.substr(indent), indent});
    if (end == text.size()) break;
    start = end + 1;
    ++number;
  }
  return out;
}

struct Piece {
  std::string text;
  std::size_t column;
};

// Splits on commas, recording where each trimmed piece starts.
std::vector<Piece> split_commas(const std::string& text, std::size_t column) {
  std::vector<Piece> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::size_t lead = 0;
    while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
    std::string trimmed = piece.substr(lead);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
    out.push_back({trimmed, column + start + lead});
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

Polynomial parse_at(const Line& line, const Piece& piece, const Ring& ring) {
  if (piece.text.empty()) fail(line, piece.column, "empty polynomial");
  try {
    return parse_polynomial(piece.text, ring);
  } catch (const ParseError& e) {
    std::string what = e.what();
    if (auto at = what.rfind(" at position "); at != std::string::npos) what.erase(at);
    fail(line, piece.column + e.position(), what);
  }
}

std::vector<Polynomial> parse_list(const Line& line, const std::string& text, std::size_t column, const Ring& ring,
                                   const std::string& owner) {
  std::vector<Polynomial> out;
  std::string trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
  if (trimmed.empty()) return out;
  for (const auto& piece : split_commas(trimmed, column)) {
    Polynomial f = parse_at(line, piece, ring);
    if (!f.is_homogeneous())
      fail(line, piece.column, "generator '" + piece.text + "' of " + owner + " is not homogeneous");
    out.push_back(std::move(f));
  }
  return out;
}

int parse_int(const Line& line, const std::string& text, std::size_t column) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0 || value > 1'000'000'000)
    fail(line, column, "expected a natural number, got '" + text + "'");
  return static_cast<int>(value);
}

const std::regex kSet(R"(^set\s+(.*)$)");
const std::regex kRing(R"(^ring\s+(?:([A-Za-z][A-Za-z0-9_]*)\s*=\s*)?GF\(\s*(\d+)\s*\)\s*\[([^\]]*)\]$)");
const std::regex kIdeal(R"(^ideal\s+([A-Za-z][A-Za-z0-9_]*)\s*=\s*(.*)$)");
const std::regex kQuotient(R"(^quotient\s+([A-Za-z][A-Za-z0-9_]*)\s*=\s*([A-Za-z][A-Za-z0-9_]*)\s*/\s*([A-Za-z][A-Za-z0-9_]*)$)");
const std::regex kModule(
    R"(^module\s+([A-Za-z][A-Za-z0-9_]*)\s*=\s*([A-Za-z][A-Za-z0-9_]*)\s*(?:\^\s*(?:\{([^}]*)\}|(\d+)))?\s*/\s*(.*)$)");

std::size_t column_of(const std::smatch& m, std::size_t group) { return static_cast<std::size_t>(m.position(group)); }

void apply_set(const Line& line, const std::string& assignments, std::size_t column, SessionOptions& options) {
  std::size_t pos = 0;
  while (pos < assignments.size()) {
    while (pos < assignments.size() && std::isspace(static_cast<unsigned char>(assignments[pos]))) ++pos;
    if (pos == assignments.size()) break;
    std::size_t end = pos;
    while (end < assignments.size() && !std::isspace(static_cast<unsigned char>(assignments[end]))) ++end;
    std::string token = assignments.substr(pos, end - pos);
    auto eq = token.find('=');
    if (eq == std::string::npos) fail(line, column + pos, "expected key=value, got '" + token + "'");
    std::string key = token.substr(0, eq), value = token.substr(eq + 1);
    std::size_t vcol = column + pos + eq + 1;
    if (key == "cap") {
      options.cap = parse_int(line, value, vcol);
    } else if (key == "steps") {
      options.steps = parse_int(line, value, vcol);
    } else if (key == "seed") {
      options.seed = static_cast<std::uint64_t>(parse_int(line, value, vcol));
    } else if (key == "trials") {
      options.trials = static_cast<std::size_t>(parse_int(line, value, vcol));
    } else {
      fail(line, column + pos, "unknown option '" + key + "'");
    }
    pos = end;
  }
}

// "(a, b), (c, d)" -> pieces "a, b" and "c, d" with their columns.
std::vector<Piece> parse_groups(const Line& line, const std::string& text, std::size_t column) {
  std::vector<Piece> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos) == "0") return out;
  while (pos < text.size()) {
    if (text[pos] != '(') fail(line, column + pos, "expected '('");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) fail(line, column + pos, "unbalanced '('");
    out.push_back({text.substr(pos + 1, close - pos - 1), column + pos + 1});
    pos = close + 1;
    skip();
    if (pos < text.size()) {
      if (text[pos] != ',') fail(line, column + pos, "expected ',' between columns");
      ++pos;
      skip();
      if (pos == text.size()) fail(line, column + pos, "dangling ','");
    }
  }
  return out;
}

}  // namespace

Session parse_session(std::string_view text, std::optional<int> cap_override) {
  Session session;
  std::vector<Line> lines = split_lines(text);
  std::smatch m;
  for (const auto& line : lines)
    if (std::regex_match(line.text, m, kSet)) apply_set(line, m[1].str(), column_of(m, 1), session.options);
  if (cap_override) session.options.cap = *cap_override;

  auto claim = [&](const Line& line, const std::string& name, std::size_t column) {
    if (name == session.ring_name && session.ring) fail(line, column, "name '" + name + "' is already the ring");
    if (session.ideals.count(name) || session.quotients.count(name) || session.modules.count(name))
      fail(line, column, "duplicate name '" + name + "'");
  };
  auto need_ring = [&](const Line& line) {
    if (!session.ring) fail(line, 0, "no ring declared yet");
  };

  for (const auto& line : lines) {
    const std::string& s = line.text;
    if (std::regex_match(s, m, kSet)) continue;
    if (std::regex_match(s, m, kRing)) {
      if (session.ring) fail(line, 0, "a session declares exactly one ring");
      if (m[1].matched) session.ring_name = m[1].str();
      std::vector<std::string> vars;
      for (const auto& piece : split_commas(m[3].str(), column_of(m, 3))) {
        if (!valid_variable_name(piece.text)) fail(line, piece.column, "bad variable name '" + piece.text + "'");
        vars.push_back(piece.text);
      }
      try {
        session.ring = make_ring(static_cast<std::uint32_t>(parse_int(line, m[2].str(), column_of(m, 2))), vars,
                                 session.options.cap);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        fail(line, 0, e.what());
      }
      continue;
    }
    if (std::regex_match(s, m, kIdeal)) {
      need_ring(line);
      std::string name = m[1].str();
      claim(line, name, column_of(m, 1));
      std::string rhs = m[2].str();
      std::vector<Polynomial> gens;
      if (rhs != "0") gens = parse_list(line, rhs, column_of(m, 2), session.ring, "ideal " + name);
      session.ideals.emplace(name, IdealHandle(session.ring, std::move(gens)));
      continue;
    }
    if (std::regex_match(s, m, kQuotient)) {
      need_ring(line);
      std::string name = m[1].str();
      claim(line, name, column_of(m, 1));
      if (m[2].str() != session.ring_name) fail(line, column_of(m, 2), "unknown ring '" + m[2].str() + "'");
      if (!session.ideals.count(m[3].str())) fail(line, column_of(m, 3), "unknown ideal '" + m[3].str() + "'");
      session.quotients.emplace(name, m[3].str());
      continue;
    }
    if (std::regex_match(s, m, kModule)) {
      need_ring(line);
      std::string name = m[1].str();
      claim(line, name, column_of(m, 1));
      std::string base = m[2].str();
      std::optional<IdealHandle> quotient;
      if (base != session.ring_name) {
        auto q = session.quotients.find(base);
        if (q == session.quotients.end()) fail(line, column_of(m, 2), "unknown ring or quotient '" + base + "'");
        quotient = session.ideals.at(q->second);
      }
      std::vector<int> shifts{0};
      if (m[3].matched) {
        shifts.clear();
        for (const auto& piece : split_commas(m[3].str(), column_of(m, 3))) shifts.push_back(parse_int(line, piece.text, piece.column));
      } else if (m[4].matched) {
        shifts.assign(static_cast<std::size_t>(parse_int(line, m[4].str(), column_of(m, 4))), 0);
      }
      if (shifts.empty()) fail(line, column_of(m, 2), "a module needs at least one generator");
      std::vector<VectorPolynomial> columns;
      const bool cyclic_form = !m[3].matched && !m[4].matched;
      for (const auto& group : parse_groups(line, m[5].str(), column_of(m, 5))) {
        std::vector<Polynomial> entries;
        for (const auto& piece : split_commas(group.text, group.column)) {
          if (piece.text.empty() && split_commas(group.text, group.column).size() == 1) break;
          entries.push_back(parse_at(line, piece, session.ring));
        }
        if (cyclic_form) {
          for (std::size_t k = 0; k < entries.size(); ++k) {
            if (!entries[k].is_homogeneous()) fail(line, group.column, "relation '" + entries[k].to_string() + "' is not homogeneous");
            columns.push_back(VectorPolynomial::from_polynomial(entries[k]));
          }
          continue;
        }
        if (entries.size() != shifts.size())
          fail(line, group.column, "column has " + std::to_string(entries.size()) + " entries, expected " +
                                       std::to_string(shifts.size()));
        columns.emplace_back(std::move(entries));
      }
      try {
        session.modules.emplace(name, ModulePresentation(session.ring, quotient, shifts, std::move(columns)));
      } catch (const NotHomogeneous& e) {
        fail(line, column_of(m, 5), e.what());
      }
      continue;
    }
    fail(line, 0, "unrecognized statement");
  }
  if (!session.ring) throw ParseError("no ring declaration", 0);
  return session;
}

}  // namespace burchlab
