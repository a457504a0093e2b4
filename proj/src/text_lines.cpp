#include "ctl/text_lines.hpp"

#include "ctl/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ctl {

std::vector<TokenLine> tokenize_lines(std::string_view text) {
  std::vector<TokenLine> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    TokenLine tl{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tl.tokens.push_back({line.substr(start, i - start), start + 1});
    }
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

int parse_int_token(const TokenLine& line, const Token& token, std::size_t skip) {
  std::string_view s = token.text.substr(std::min(skip, token.text.size()));
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line.number, token.column + skip, "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

double parse_double_token(const TokenLine& line, const Token& token, std::size_t skip) {
  std::string_view s = token.text.substr(std::min(skip, token.text.size()));
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(value)) {
    throw ParseError(line.number, token.column + skip, "expected a number, got '" + std::string(s) + "'");
  }
  return value;
}

void expect_arity(const TokenLine& line, std::size_t count) {
  if (line.tokens.size() == count) return;
  std::size_t column = line.tokens.size() > count ? line.tokens[count].column : line.tokens.back().column;
  throw ParseError(line.number, column,
                   "'" + std::string(line.tokens[0].text) + "' expects " + std::to_string(count - 1) + " fields");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ctl
