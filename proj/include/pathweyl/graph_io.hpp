#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pathweyl/digraph.hpp"

namespace pathweyl {

/// Line-oriented graph format:
///
///   # free comment
///   #vertices 4        optional; defaults to the largest vertex id
///   #block 1           optional; starts block 1, then 2, ... (index optional)
///   1 2                one edge per line, "tail head", in label order
///
/// When block headers appear, every edge must follow one. Without them the
/// graph is blockless.
LabeledDigraph parse_graph_text(std::string_view text);
/// Canonical text form; emits block headers only when some block has two or more edges.
std::string format_graph_text(const LabeledDigraph& g);

/// Structured form: {"vertices": n, "edges": [[t,h],...], "blocks": [[first,last],...]}.
/// "blocks" is optional on input.
LabeledDigraph parse_graph_json(std::string_view text);
std::string format_graph_json(const LabeledDigraph& g);

/// Chooses the JSON reader when the first non-blank character is '{'.
LabeledDigraph parse_graph(std::string_view text);
LabeledDigraph load_graph(const std::filesystem::path& path);

}  // namespace pathweyl
