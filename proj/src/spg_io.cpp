#include "ctl/errors.hpp"
#include "ctl/line_complex.hpp"
#include "ctl/text_lines.hpp"

#include <fstream>
#include <sstream>

namespace ctl::lc {

LineComplex parse_spg(std::string_view text) {
  auto lines = tokenize_lines(text);
  auto it = lines.begin();
  if (it == lines.end()) throw ParseError(1, 1, "empty input, expected 'spg 1 q=<q>' header");
  const auto& header = *it;
  if (header.tokens.size() != 3 || header.tokens[0].text != "spg" || header.tokens[1].text != "1" ||
      !header.tokens[2].text.starts_with("q=")) {
    throw ParseError(header.number, 1, "expected header 'spg 1 q=<q>'");
  }
  int q = parse_int_token(header, header.tokens[2], 2);
  if (q < 2) throw ParseError(header.number, header.tokens[2].column, "q must be at least 2");
  LineComplexBuilder builder(q);
  for (++it; it != lines.end(); ++it) {
    const auto& line = *it;
    const auto& head = line.tokens[0];
    try {
      if (head.text == "v") {
        expect_arity(line, 3);
        const auto& parity = line.tokens[2];
        if (parity.text != "o" && parity.text != "x") {
          throw ParseError(line.number, parity.column, "parity must be 'o' or 'x'");
        }
        builder.add_vertex(std::string(line.tokens[1].text), parity.text == "o" ? Parity::circle : Parity::cross);
      } else if (head.text == "e") {
        expect_arity(line, 4);
        int label = parse_int_token(line, line.tokens[3]);
        if (label < 1) throw ParseError(line.number, line.tokens[3].column, "label must be positive");
        builder.add_edge(line.tokens[1].text, line.tokens[2].text, label);
      } else if (head.text == "frontier") {
        expect_arity(line, 3);
        builder.add_frontier(line.tokens[1].text, parse_int_token(line, line.tokens[2]));
      } else if (head.text == "infinite") {
        expect_arity(line, 3);
        builder.add_infinite(line.tokens[1].text, parse_int_token(line, line.tokens[2]));
      } else {
        throw ParseError(line.number, head.column, "unknown record '" + std::string(head.text) + "'");
      }
    } catch (const UnknownVertex& e) {
      throw ParseError(line.number, line.tokens[1].column, e.what());
    } catch (const InvalidComplex& e) {
      throw ParseError(line.number, line.tokens[1].column, e.what());
    }
  }
  return std::move(builder).build();
}

std::string serialize_spg(const LineComplex& complex) {
  std::ostringstream out;
  out << "spg 1 q=" << complex.q() << "\n";
  for (const auto& v : complex.vertices()) out << "v " << v.id << " " << (v.parity == Parity::circle ? "o" : "x") << "\n";
  for (const auto& e : complex.edges()) out << "e " << complex.id(e.a) << " " << complex.id(e.b) << " " << e.label << "\n";
  for (const auto& s : complex.frontier()) out << "frontier " << complex.id(s.vertex) << " " << s.label << "\n";
  for (const auto& s : complex.infinite_corners()) out << "infinite " << complex.id(s.vertex) << " " << s.label << "\n";
  return out.str();
}

LineComplex read_spg_file(const std::string& path) { return parse_spg(read_text_file(path)); }

}  // namespace ctl::lc
