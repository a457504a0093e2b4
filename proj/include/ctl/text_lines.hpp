#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ctl {

struct Token {
  std::string_view text;
  std::size_t column;  ///< 1-based
};

/// One non-blank, non-comment input line split on whitespace.
struct TokenLine {
  std::size_t number;  ///< 1-based
  std::vector<Token> tokens;
};

/// Splits `text` into token lines; '#' starts a comment running to end of line.
/// Tokens view into `text`, which must outlive the result.
std::vector<TokenLine> tokenize_lines(std::string_view text);

/// Parses a decimal integer after skipping `skip` leading characters (e.g. "q=").
int parse_int_token(const TokenLine& line, const Token& token, std::size_t skip = 0);
double parse_double_token(const TokenLine& line, const Token& token, std::size_t skip = 0);
void expect_arity(const TokenLine& line, std::size_t count);

/// Throws DomainError if the file cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace ctl
