#include "ctl/errors.hpp"
#include "ctl/partitioner.hpp"
#include "ctl/text_lines.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ctl::part {

NamedPartition parse_gpt(std::string_view text, const lc::LineComplex& complex) {
  NamedPartition out;
  std::map<std::string, std::size_t, std::less<>> by_name;
  std::vector<std::pair<const TokenLine*, const Token*>> flags;
  auto lines = tokenize_lines(text);
  for (const auto& line : lines) {
    const auto& head = line.tokens[0];
    if (head.text == "piece") {
      if (line.tokens.size() < 3) throw ParseError(line.number, head.column, "'piece' needs an id and vertices");
      std::string name(line.tokens[1].text);
      if (by_name.count(name)) throw ParseError(line.number, line.tokens[1].column, "duplicate piece '" + name + "'");
      Subgraph piece;
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        auto v = complex.find(line.tokens[i].text);
        if (!v) {
          throw ParseError(line.number, line.tokens[i].column,
                           "unknown vertex '" + std::string(line.tokens[i].text) + "'");
        }
        piece.vertices.push_back(*v);
      }
      std::sort(piece.vertices.begin(), piece.vertices.end());
      by_name.emplace(name, out.names.size());
      out.names.push_back(std::move(name));
      out.partition.pieces.push_back(std::move(piece));
    } else if (head.text == "infinite") {
      expect_arity(line, 2);
      flags.emplace_back(&line, &line.tokens[1]);
    } else {
      throw ParseError(line.number, head.column, "unknown record '" + std::string(head.text) + "'");
    }
  }
  for (auto [line, token] : flags) {
    auto it = by_name.find(token->text);
    if (it == by_name.end()) {
      throw ParseError(line->number, token->column, "unknown piece '" + std::string(token->text) + "'");
    }
    out.partition.pieces[it->second].infinite = true;
  }
  return out;
}

std::string serialize_gpt(const NamedPartition& p, const lc::LineComplex& complex) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.partition.pieces.size(); ++i) {
    out << "piece " << p.names[i];
    for (int v : p.partition.pieces[i].vertices) out << " " << complex.id(v);
    out << "\n";
  }
  for (std::size_t i = 0; i < p.partition.pieces.size(); ++i) {
    if (p.partition.pieces[i].infinite) out << "infinite " << p.names[i] << "\n";
  }
  return out.str();
}

NamedPartition read_gpt_file(const std::string& path, const lc::LineComplex& complex) {
  return parse_gpt(read_text_file(path), complex);
}

}  // namespace ctl::part
