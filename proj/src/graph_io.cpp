#include "pathweyl/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pathweyl/errors.hpp"

namespace pathweyl {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

std::size_t parse_number(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  if (token.empty()) throw ParseError(where(line) + "expected a number");
  for (char c : token) {
    if (c < '0' || c > '9') throw ParseError(where(line) + "expected a number, got '" + std::string(token) + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

LabeledDigraph build(std::size_t vertices, std::vector<Edge> edges, std::vector<std::size_t> sizes) {
  try {
    return LabeledDigraph(vertices, std::move(edges), sizes);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

LabeledDigraph parse_graph_text(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<std::size_t> sizes;
  std::optional<std::size_t> vertices;
  bool blocked = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;

    if (line.front() == '#') {
      auto words = split_ws(line.substr(1));
      if (words.empty()) continue;
      if (words[0] == "block") {
        if (words.size() > 2) throw ParseError(where(line_no) + "expected '#block [k]'");
        if (words.size() == 2 && parse_number(words[1], line_no) != sizes.size() + 1) {
          throw ParseError(where(line_no) + "blocks must be numbered 1, 2, ... in order");
        }
        if (!sizes.empty() && sizes.back() == 0) throw ParseError(where(line_no) + "empty block");
        if (!blocked && !edges.empty()) throw ParseError(where(line_no) + "edges before the first #block");
        blocked = true;
        sizes.push_back(0);
      } else if (words[0] == "vertices") {
        if (words.size() != 2) throw ParseError(where(line_no) + "expected '#vertices n'");
        if (vertices) throw ParseError(where(line_no) + "duplicate #vertices");
        vertices = parse_number(words[1], line_no);
      }
      continue;
    }

    auto words = split_ws(line);
    if (words.size() != 2) throw ParseError(where(line_no) + "expected 'tail head'");
    std::size_t tail = parse_number(words[0], line_no);
    std::size_t head = parse_number(words[1], line_no);
    if (tail == 0 || head == 0) throw ParseError(where(line_no) + "vertex ids start at 1");
    if (!sizes.empty()) {
      ++sizes.back();
    } else if (blocked) {
      throw ParseError(where(line_no) + "edge outside any block");
    }
    edges.push_back({static_cast<Vertex>(tail), static_cast<Vertex>(head)});
  }
  if (blocked && sizes.back() == 0) throw ParseError("empty block at end of input");

  std::size_t max_vertex = 0;
  for (const Edge& e : edges) max_vertex = std::max<std::size_t>({max_vertex, e.tail, e.head});
  std::size_t n = vertices.value_or(max_vertex);
  if (!blocked) sizes.assign(edges.size(), 1);
  return build(n, std::move(edges), std::move(sizes));
}

std::string format_graph_text(const LabeledDigraph& g) {
  std::ostringstream out;
  out << "#vertices " << g.vertex_count() << '\n';
  bool headers = !g.is_blockless();
  for (std::size_t b = 0; b < g.blocks().size(); ++b) {
    const LabelRange& block = g.blocks()[b];
    if (headers) out << "#block " << b + 1 << '\n';
    for (Label l = block.first; l <= block.last; ++l) out << g.edge(l).tail << ' ' << g.edge(l).head << '\n';
  }
  return out.str();
}

LabeledDigraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  try {
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph JSON: each edge is [tail, head]");
      edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
    }
    std::size_t n = 0;
    if (doc.contains("vertices")) {
      n = doc.at("vertices").get<std::size_t>();
    } else {
      for (const Edge& e : edges) n = std::max<std::size_t>({n, e.tail, e.head});
    }
    std::vector<std::size_t> sizes;
    if (doc.contains("blocks")) {
      Label expected = 1;
      for (const auto& b : doc.at("blocks")) {
        Label first = b.at(0).get<Label>();
        Label last = b.at(1).get<Label>();
        if (first != expected || last < first) {
          throw ParseError("graph JSON: blocks must be consecutive label intervals covering 1..m");
        }
        sizes.push_back(last - first + 1);
        expected = last + 1;
      }
    } else {
      sizes.assign(edges.size(), 1);
    }
    return build(n, std::move(edges), std::move(sizes));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

std::string format_graph_json(const LabeledDigraph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.vertex_count();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.tail, e.head});
  doc["blocks"] = nlohmann::json::array();
  for (const LabelRange& b : g.blocks()) doc["blocks"].push_back({b.first, b.last});
  return doc.dump() + '\n';
}

LabeledDigraph parse_graph(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_graph_json(body);
  return parse_graph_text(text);
}

LabeledDigraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read graph file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

}  // namespace pathweyl
