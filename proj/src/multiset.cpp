#include "pathweyl/multiset.hpp"

#include <algorithm>
#include <charconv>

#include "pathweyl/errors.hpp"

namespace pathweyl {

VertexMultiset::VertexMultiset(std::initializer_list<Vertex> elements) {
  for (Vertex v : elements) add(v);
}

VertexMultiset::VertexMultiset(std::span<const Vertex> elements) {
  for (Vertex v : elements) add(v);
}

VertexMultiset VertexMultiset::from_dense(std::span<const std::uint32_t> counts) {
  VertexMultiset result;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) result.add(static_cast<Vertex>(i + 1), counts[i]);
  }
  return result;
}

std::uint32_t VertexMultiset::count(Vertex v) const {
  auto it = counts_.find(v);
  return it == counts_.end() ? 0 : it->second;
}

void VertexMultiset::add(Vertex v, std::uint32_t copies) {
  if (copies == 0) return;
  counts_[v] += copies;
  size_ += copies;
}

void VertexMultiset::remove(Vertex v, std::uint32_t copies) {
  auto it = counts_.find(v);
  if (it == counts_.end() || copies == 0) return;
  std::uint32_t removed = std::min(copies, it->second);
  it->second -= removed;
  size_ -= removed;
  if (it->second == 0) counts_.erase(it);
}

bool VertexMultiset::contains(const VertexMultiset& sub) const {
  for (const auto& [v, c] : sub.counts_) {
    if (count(v) < c) return false;
  }
  return true;
}

std::vector<Vertex> VertexMultiset::elements() const {
  std::vector<Vertex> out;
  out.reserve(size_);
  for (const auto& [v, c] : counts_) out.insert(out.end(), c, v);
  return out;
}

std::vector<std::uint32_t> VertexMultiset::dense(std::size_t n) const {
  std::vector<std::uint32_t> out(n, 0);
  for (const auto& [v, c] : counts_) {
    if (v >= 1 && v <= n) out[v - 1] = c;
  }
  return out;
}

std::strong_ordering VertexMultiset::operator<=>(const VertexMultiset& other) const {
  if (auto cmp = size_ <=> other.size_; cmp != 0) return cmp;
  auto a = counts_.begin();
  auto b = other.counts_.begin();
  // Walk both sorted element lists without materializing them.
  std::uint32_t left_a = a == counts_.end() ? 0 : a->second;
  std::uint32_t left_b = b == other.counts_.end() ? 0 : b->second;
  while (a != counts_.end() && b != other.counts_.end()) {
    if (auto cmp = a->first <=> b->first; cmp != 0) return cmp;
    std::uint32_t step = std::min(left_a, left_b);
    left_a -= step;
    left_b -= step;
    if (left_a == 0 && ++a != counts_.end()) left_a = a->second;
    if (left_b == 0 && ++b != other.counts_.end()) left_b = b->second;
  }
  return std::strong_ordering::equal;
}

VertexMultiset multiset_difference(const VertexMultiset& a, const VertexMultiset& x) {
  VertexMultiset result = a;
  for (const auto& [v, c] : x.counts()) result.remove(v, c);
  return result;
}

VertexMultiset multiset_merge(const VertexMultiset& a, const VertexMultiset& x) {
  VertexMultiset result = a;
  for (const auto& [v, c] : x.counts()) result.add(v, c);
  return result;
}

std::vector<VertexMultiset> sub_multisets(const VertexMultiset& a) {
  std::vector<std::pair<Vertex, std::uint32_t>> items(a.counts().begin(), a.counts().end());
  std::vector<std::uint32_t> pick(items.size(), 0);
  std::vector<VertexMultiset> out;
  while (true) {
    VertexMultiset m;
    for (std::size_t i = 0; i < items.size(); ++i) m.add(items[i].first, pick[i]);
    out.push_back(std::move(m));
    std::size_t i = 0;
    while (i < items.size() && pick[i] == items[i].second) pick[i++] = 0;
    if (i == items.size()) break;
    ++pick[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const VertexMultiset& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, c] : m.counts()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
    if (c > 1) out += '^' + std::to_string(c);
  }
  return out + '}';
}

std::string to_list(const VertexMultiset& m) {
  std::string out;
  for (Vertex v : m.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

namespace {

std::uint32_t parse_count(std::string_view token, std::string_view whole) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError("malformed multiset '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

VertexMultiset parse_multiset(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw ParseError("malformed multiset '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
  }
  VertexMultiset result;
  if (body.empty()) return result;
  while (true) {
    std::size_t comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    std::size_t caret = item.find('^');
    Vertex v = parse_count(trim(item.substr(0, caret)), text);
    std::uint32_t copies = caret == std::string_view::npos ? 1 : parse_count(trim(item.substr(caret + 1)), text);
    if (v == 0) throw ParseError("vertex ids start at 1 in '" + std::string(text) + "'");
    result.add(v, copies);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  return result;
}

}  // namespace pathweyl
