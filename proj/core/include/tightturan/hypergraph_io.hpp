#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tightturan/error.hpp"
#include "tightturan/hypergraph.hpp"

namespace tightturan {

/// Raised for malformed text input; carries a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Text format: first line `r n`, then one edge per non-empty line as r
/// whitespace-separated 0-based ids. `#` starts a comment.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph(const std::filesystem::path& path);

/// Canonical text: header, then edges sorted lexicographically, vertices ascending.
std::string format_hypergraph(const Hypergraph& g);

}  // namespace tightturan
