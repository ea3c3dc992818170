#ifndef METRIC_COMPLETER_IO_H_
#define METRIC_COMPLETER_IO_H_

// Text formats shared by the library and the command line tool.
//
// Graph file:
//   params <delta> <K> <C>
//   vertices <n>
//   edge <u> <v> <d>        (one per line, any order, 0-based vertices)
// Blank lines and lines starting with '#' are ignored on input. Output is
// canonical: edges with u < v in lexicographic order.
//
// Catalogue file:
//   catalogue <delta> <K> <C> <n> <method>
//   <labels>                (one canonical cycle per line, ascending)
// Labels are written as a digit string when every label is at most 9 and
// comma-separated otherwise.

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"
#include "metric_completer/completion.h"
#include "metric_completer/graph.h"
#include "metric_completer/obstacles.h"
#include "metric_completer/params.h"

namespace metric_completer {

struct GraphFile {
  Params params;
  EdgeLabelledGraph graph;
};

// Throws FormatError (with the line number) on malformed text, and the
// build_graph errors on invalid content.
GraphFile parse_graph(std::string_view text);
GraphFile read_graph_file(const std::string& path);
std::string write_graph(const GraphFile& file);

// "11665" or "1,10,3".
std::string format_labels(const LabelSequence& labels);
LabelSequence parse_labels(std::string_view text);

std::string write_catalogue(const ObstacleCatalogue& catalogue);
ObstacleCatalogue parse_catalogue(std::string_view text);

// Steps as {rank, distance, u, v, witness, fork, family} in that field order;
// witness and fork are null for fill-value and shortest path steps.
nlohmann::ordered_json trace_to_json(const CompletionTrace& trace);
nlohmann::ordered_json result_to_json(const CompletionResult& result);

// The completed graph; inserted edges are dashed and labelled with their rank.
std::string to_dot(const EdgeLabelledGraph& input,
                   const CompletionResult& result);

// "rank 3: (0,2)=2 witness 1 fork (1,1) F+"
std::string describe_step(const CompletionStep& step);
// "non-metric 1,3,5 at (0,1,3)"
std::string describe_violation(const Violation& violation);

}  // namespace metric_completer

#endif  // METRIC_COMPLETER_IO_H_
