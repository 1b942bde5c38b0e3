#include "tightturan/hypergraph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace tightturan {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

std::uint64_t parse_number(const Token& tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(line_no, tok.column, "expected a non-negative integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::optional<unsigned> r;
  std::size_t n = 0;
  std::vector<VertexSet> edges;
  std::set<VertexSet> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!r) {
      if (tokens.size() != 2) {
        std::size_t col = tokens.size() > 2 ? tokens[2].column : tokens.back().column + tokens.back().text.size();
        throw ParseError(line_no, col, "header must be 'r n'");
      }
      auto rv = parse_number(tokens[0], line_no);
      if (rv < 1 || rv > 64) throw ParseError(line_no, tokens[0].column, "uniformity must be in [1, 64]");
      r = static_cast<unsigned>(rv);
      n = static_cast<std::size_t>(parse_number(tokens[1], line_no));
    } else {
      if (tokens.size() != *r) {
        std::size_t col = tokens.size() > *r ? tokens[*r].column : tokens.back().column + tokens.back().text.size();
        throw ParseError(line_no, col,
                         "edge has " + std::to_string(tokens.size()) + " vertices, expected " + std::to_string(*r));
      }
      std::vector<Vertex> vs;
      for (const auto& tok : tokens) {
        auto v = parse_number(tok, line_no);
        if (v >= n) {
          throw ParseError(line_no, tok.column,
                           "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
        }
        for (Vertex u : vs) {
          if (u == v) throw ParseError(line_no, tok.column, "repeated vertex " + std::to_string(v));
        }
        vs.push_back(static_cast<Vertex>(v));
      }
      VertexSet e(std::move(vs));
      if (!seen.insert(e).second) throw ParseError(line_no, tokens[0].column, "duplicate edge");
      edges.push_back(std::move(e));
    }
    if (end == text.size()) break;
  }
  if (!r) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing header 'r n'");
  return Hypergraph(*r, n, std::move(edges));
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

std::string format_hypergraph(const Hypergraph& g) {
  std::string out = std::to_string(g.uniformity()) + " " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace tightturan
