#include "tightturan/constructions.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "tightturan/hypergraph_io.hpp"
#include "tightturan/rational.hpp"

namespace tightturan {

Hypergraph complete_hypergraph(std::size_t n, unsigned r) {
  if (r < 1 || n < r) throw Error(ErrorCode::InvalidArgument, "complete_hypergraph requires n >= r >= 1");
  std::vector<Vertex> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
  return Hypergraph(r, n, subsets_of_size(VertexSet(std::move(all)), r));
}

Hypergraph ekr_family(std::size_t n, unsigned r) {
  if (r < 1 || n < r) throw Error(ErrorCode::InvalidArgument, "ekr_family requires n >= r >= 1");
  std::vector<Vertex> rest;
  for (std::size_t v = 1; v < n; ++v) rest.push_back(static_cast<Vertex>(v));
  std::vector<VertexSet> edges;
  for (const auto& s : subsets_of_size(VertexSet(std::move(rest)), r - 1)) edges.push_back(s.with(0));
  return Hypergraph(r, n, std::move(edges));
}

bool Tournament::is_valid() const {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [i, j] : arcs) {
    if (i >= vertex_count || j >= vertex_count || i == j) return false;
    if (!pairs.insert({std::min(i, j), std::max(i, j)}).second) return false;
  }
  return pairs.size() == vertex_count * (vertex_count - (vertex_count > 0 ? 1 : 0)) / 2;
}

std::vector<std::size_t> Tournament::out_degrees() const {
  std::vector<std::size_t> out(vertex_count, 0);
  for (auto [i, j] : arcs) {
    if (i < vertex_count) ++out[i];
  }
  return out;
}

std::vector<std::size_t> Tournament::sinks() const {
  std::vector<std::size_t> out;
  auto deg = out_degrees();
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (deg[v] == 0) out.push_back(v);
  }
  return out;
}

Tournament cyclic_tournament(std::size_t k) {
  Tournament d{k, {}};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t step = 1; 2 * step < k; ++step) d.arcs.emplace_back(i, (i + step) % k);
    if (k % 2 == 0 && i < k / 2) d.arcs.emplace_back(i, i + k / 2);
  }
  return d;
}

Tournament parse_tournament(std::string_view text) {
  std::optional<std::size_t> k;
  Tournament d;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<std::string, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      tokens.emplace_back(std::string(line.substr(start, i - start)), start + 1);
    }
    auto number = [&](const std::pair<std::string, std::size_t>& tok) {
      std::size_t used = 0;
      unsigned long long value = 0;
      bool ok = !tok.first.empty() && tok.first[0] != '-' && tok.first[0] != '+';
      if (ok) {
        try {
          value = std::stoull(tok.first, &used);
        } catch (const std::exception&) {
          ok = false;
        }
      }
      if (!ok || used != tok.first.size()) {
        throw ParseError(line_no, tok.second, "expected a non-negative integer, got '" + tok.first + "'");
      }
      return static_cast<std::size_t>(value);
    };

    if (!tokens.empty()) {
      if (!k) {
        if (tokens.size() != 1) throw ParseError(line_no, tokens[1].second, "header must be the vertex count");
        k = number(tokens[0]);
        d.vertex_count = *k;
      } else {
        if (tokens.size() != 2) {
          std::size_t col = tokens.size() > 2 ? tokens[2].second : tokens.back().second + tokens.back().first.size();
          throw ParseError(line_no, col, "arc must be 'i j'");
        }
        std::size_t i = number(tokens[0]);
        std::size_t j = number(tokens[1]);
        if (i >= *k) throw ParseError(line_no, tokens[0].second, "vertex out of range");
        if (j >= *k) throw ParseError(line_no, tokens[1].second, "vertex out of range");
        d.arcs.emplace_back(i, j);
      }
    }
    if (end == text.size()) break;
  }
  if (!k) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing vertex count");
  return d;
}

Tournament read_tournament(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tournament(buf.str());
}

std::string format_tournament(const Tournament& d) {
  std::string out = std::to_string(d.vertex_count) + "\n";
  for (auto [i, j] : d.arcs) out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

Hypergraph tournament_family(std::size_t n, const Tournament& d) {
  if (n % 3 != 0) throw Error(ErrorCode::InvalidArgument, "tournament_family requires 3 | n");
  if (d.vertex_count != n / 3 || !d.is_valid()) {
    throw Error(ErrorCode::InvalidArgument, "arcs must form a tournament on n/3 vertices");
  }
  std::vector<VertexSet> edges;
  for (auto [i, j] : d.arcs) {
    const auto a = static_cast<Vertex>(3 * i);
    const auto b = static_cast<Vertex>(3 * j);
    for (Vertex x = 0; x < 3; ++x) {
      for (Vertex y = x + 1; y < 3; ++y) {
        for (Vertex z = 0; z < 3; ++z) edges.push_back(VertexSet{a + x, a + y, b + z});
      }
    }
  }
  return Hypergraph(3, n, std::move(edges));
}

Hypergraph disjoint_cliques(std::size_t n, std::size_t t) {
  if (t < 1 || n % t != 0) throw Error(ErrorCode::InvalidArgument, "disjoint_cliques requires t >= 1 and t | n");
  std::vector<VertexSet> edges;
  for (std::size_t base = 0; base < n; base += t) {
    for (std::size_t u = base; u < base + t; ++u) {
      for (std::size_t v = u + 1; v < base + t; ++v) {
        edges.push_back(VertexSet{static_cast<Vertex>(u), static_cast<Vertex>(v)});
      }
    }
  }
  return Hypergraph(2, n, std::move(edges));
}

namespace {

/// Advances `s` to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<Vertex>& s, std::size_t n) {
  const std::size_t k = s.size();
  std::size_t i = k;
  while (i > 0 && s[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++s[i - 1];
  for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  return true;
}

}  // namespace

PackingResult shadow_disjoint_packing(const Hypergraph& g, std::size_t n, std::uint64_t budget,
                                      const std::optional<std::vector<VertexSet>>& candidates) {
  const unsigned r = g.uniformity();
  const VertexSet support = g.non_isolated_vertices();
  const std::size_t k = support.size();
  PackingResult out;
  out.union_graph = Hypergraph(r, n);
  if (k == 0 || n < k) return out;

  // shadow of g in local coordinates (positions within `support`)
  std::vector<std::size_t> position(g.vertex_count(), 0);
  for (std::size_t i = 0; i < k; ++i) position[support[i]] = i;
  std::set<std::vector<std::size_t>> local_shadow;
  for (const auto& d : shadow(g)) {
    std::vector<std::size_t> local;
    for (Vertex v : d) local.push_back(position[v]);
    local_shadow.insert(std::move(local));
  }
  auto in_copy_shadow = [&](const VertexSet& placed, const VertexSet& d) {
    std::vector<std::size_t> local;
    for (Vertex v : d) local.push_back(static_cast<std::size_t>(std::lower_bound(placed.begin(), placed.end(), v) - placed.begin()));
    return local_shadow.count(local) > 0;
  };

  std::vector<VertexSet> edges;
  auto try_place = [&](const VertexSet& cand) {
    ++out.candidates_examined;
    if (cand.size() != k || (!cand.empty() && cand.items().back() >= n)) return;
    for (const auto& other : out.vertex_sets) {
      const std::size_t common = cand.intersection_size(other);
      if (common + 1 < r) continue;
      if (common + 1 > r) return;
      VertexSet shared = cand.set_difference(cand.set_difference(other));
      if (in_copy_shadow(cand, shared) || in_copy_shadow(other, shared)) return;
    }
    for (const auto& e : g.edges()) {
      std::vector<Vertex> img;
      for (Vertex v : e) img.push_back(cand[position[v]]);
      edges.emplace_back(std::move(img));
    }
    out.vertex_sets.push_back(cand);
  };

  if (candidates) {
    for (const auto& cand : *candidates) {
      if (out.candidates_examined >= budget) break;
      try_place(cand);
    }
  } else {
    std::vector<Vertex> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<Vertex>(i);
    do {
      if (out.candidates_examined >= budget) break;
      try_place(VertexSet(cur));
    } while (next_combination(cur, n));
  }
  out.m = out.vertex_sets.size();
  out.union_graph = Hypergraph(r, n, std::move(edges));
  return out;
}

std::vector<VertexSet> grid_candidates(std::size_t k) {
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Vertex> row;
    for (std::size_t j = 0; j < k; ++j) row.push_back(static_cast<Vertex>(i * k + j));
    out.emplace_back(std::move(row));
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Vertex> col;
    for (std::size_t i = 0; i < k; ++i) col.push_back(static_cast<Vertex>(i * k + j));
    out.emplace_back(std::move(col));
  }
  return out;
}

}  // namespace tightturan
