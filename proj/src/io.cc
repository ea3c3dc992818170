#include "metric_completer/io.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "metric_completer/errors.h"

namespace metric_completer {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::string at_line(int line_number, std::string_view message) {
  std::ostringstream os;
  os << "line " << line_number << ": " << message;
  return os.str();
}

int parse_int(std::string_view word, int line_number) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw FormatError(
        at_line(line_number, "expected an integer, got '" + std::string(word) +
                                 "'"));
  }
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_number;
    const std::string_view line = text.substr(start, end - start);
    const auto words = split_words(line);
    if (!words.empty() && words.front().front() != '#') fn(words, line_number);
    if (end == text.size()) break;
    start = end + 1;
  }
}

}  // namespace

GraphFile parse_graph(std::string_view text) {
  std::optional<std::array<int, 3>> params;
  std::optional<int> vertices;
  std::vector<Edge> edges;
  for_each_line(text, [&](const std::vector<std::string_view>& words,
                          int line_number) {
    const std::string_view keyword = words.front();
    auto expect_arity = [&](std::size_t arity) {
      if (words.size() != arity + 1) {
        throw FormatError(at_line(
            line_number, "'" + std::string(keyword) + "' takes " +
                             std::to_string(arity) + " arguments"));
      }
    };
    if (keyword == "params") {
      expect_arity(3);
      if (params) throw FormatError(at_line(line_number, "duplicate params"));
      params = {parse_int(words[1], line_number),
                parse_int(words[2], line_number),
                parse_int(words[3], line_number)};
    } else if (keyword == "vertices") {
      expect_arity(1);
      if (vertices) {
        throw FormatError(at_line(line_number, "duplicate vertices"));
      }
      vertices = parse_int(words[1], line_number);
      if (*vertices < 0) {
        throw FormatError(at_line(line_number, "negative vertex count"));
      }
    } else if (keyword == "edge") {
      expect_arity(3);
      edges.push_back({parse_int(words[1], line_number),
                       parse_int(words[2], line_number),
                       parse_int(words[3], line_number)});
    } else {
      throw FormatError(at_line(line_number, "unknown keyword '" +
                                                 std::string(keyword) + "'"));
    }
  });
  if (!params) throw FormatError("missing 'params' line");
  if (!vertices) throw FormatError("missing 'vertices' line");
  const Params p = Params::create((*params)[0], (*params)[1], (*params)[2]);
  return GraphFile{p, build_graph(*vertices, edges, p)};
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string write_graph(const GraphFile& file) {
  std::ostringstream os;
  os << "params " << file.params.delta() << ' ' << file.params.k() << ' '
     << file.params.c() << '\n';
  os << "vertices " << file.graph.vertex_count() << '\n';
  for (const Edge& e : file.graph.edges()) {
    os << "edge " << e.u << ' ' << e.v << ' ' << e.d << '\n';
  }
  return os.str();
}

std::string format_labels(const LabelSequence& labels) {
  const bool digits = std::all_of(labels.begin(), labels.end(),
                                  [](Distance d) { return d >= 0 && d <= 9; });
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(labels[i]);
  }
  return out;
}

LabelSequence parse_labels(std::string_view text) {
  LabelSequence out;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw FormatError("bad label string '" + std::string(text) + "'");
      }
      out.push_back(ch - '0');
    }
  } else {
    std::size_t start = 0;
    while (true) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      out.push_back(parse_int(text.substr(start, end - start), 0));
      if (end == text.size()) break;
      start = end + 1;
    }
  }
  if (out.empty()) throw FormatError("empty label string");
  return out;
}

std::string write_catalogue(const ObstacleCatalogue& catalogue) {
  std::vector<LabelSequence> cycles = catalogue.cycles;
  std::sort(cycles.begin(), cycles.end());
  std::ostringstream os;
  os << "catalogue " << catalogue.params.delta() << ' '
     << catalogue.params.k() << ' ' << catalogue.params.c() << ' '
     << catalogue.size << ' ' << to_string(catalogue.method) << '\n';
  for (const LabelSequence& c : cycles) os << format_labels(c) << '\n';
  return os.str();
}

ObstacleCatalogue parse_catalogue(std::string_view text) {
  std::optional<ObstacleCatalogue> catalogue;
  for_each_line(text, [&](const std::vector<std::string_view>& words,
                          int line_number) {
    if (!catalogue) {
      if (words.size() != 6 || words[0] != "catalogue") {
        throw FormatError(at_line(
            line_number, "expected 'catalogue <delta> <K> <C> <n> <method>'"));
      }
      const auto method = parse_method(words[5]);
      if (!method) {
        throw FormatError(at_line(line_number, "unknown method '" +
                                                   std::string(words[5]) + "'"));
      }
      catalogue = ObstacleCatalogue{
          Params::create(parse_int(words[1], line_number),
                         parse_int(words[2], line_number),
                         parse_int(words[3], line_number)),
          parse_int(words[4], line_number), *method, {}};
      return;
    }
    if (words.size() != 1) {
      throw FormatError(at_line(line_number, "expected one label string"));
    }
    LabelSequence labels = parse_labels(words[0]);
    if (static_cast<int>(labels.size()) != catalogue->size) {
      throw FormatError(at_line(line_number, "cycle has the wrong length"));
    }
    catalogue->cycles.push_back(std::move(labels));
  });
  if (!catalogue) throw FormatError("missing catalogue header");
  return *catalogue;
}

nlohmann::ordered_json trace_to_json(const CompletionTrace& trace) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const CompletionStep& step : trace.steps) {
    nlohmann::ordered_json j;
    j["rank"] = step.rank;
    j["distance"] = step.distance;
    j["u"] = step.u;
    j["v"] = step.v;
    j["witness"] = step.witness ? nlohmann::ordered_json(*step.witness)
                                : nlohmann::ordered_json(nullptr);
    j["fork"] = step.fork ? nlohmann::ordered_json::array(
                                {step.fork->a, step.fork->b})
                          : nlohmann::ordered_json(nullptr);
    j["family"] = std::string(to_string(step.family));
    steps.push_back(std::move(j));
  }
  return steps;
}

nlohmann::ordered_json result_to_json(const CompletionResult& result) {
  nlohmann::ordered_json j;
  j["status"] = result.completed() ? "completed" : "failed";
  j["magic"] = result.magic;
  j["steps"] = trace_to_json(result.trace);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : result.trace.final_graph.edges()) {
    edges.push_back({e.u, e.v, e.d});
  }
  j["final_graph"] = {{"vertices", result.trace.final_graph.vertex_count()},
                      {"edges", std::move(edges)}};
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const Violation& v : result.violations) {
    nlohmann::ordered_json jv;
    jv["vertices"] = v.vertices;
    jv["sides"] = v.sides;
    jv["status"] = std::string(to_string(v.status));
    violations.push_back(std::move(jv));
  }
  j["violations"] = std::move(violations);
  return j;
}

std::string to_dot(const EdgeLabelledGraph& input,
                   const CompletionResult& result) {
  std::map<std::pair<Vertex, Vertex>, int> rank_of;
  for (const CompletionStep& step : result.trace.steps) {
    rank_of[{step.u, step.v}] = step.rank;
  }
  const EdgeLabelledGraph& g = result.trace.final_graph;
  std::ostringstream os;
  os << "graph completion {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v << " [label=\"" << e.d << "\"";
    if (!input.has_edge(e.u, e.v)) {
      os << ", style=dashed, xlabel=\"r" << rank_of[{e.u, e.v}] << "\"";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string describe_step(const CompletionStep& step) {
  std::ostringstream os;
  if (step.family == Family::kFinalM) {
    os << "final";
  } else {
    os << "rank " << step.rank;
  }
  os << ": (" << step.u << ',' << step.v << ")=" << step.distance;
  if (step.witness) os << " witness " << *step.witness;
  if (step.fork) os << " fork (" << step.fork->a << ',' << step.fork->b << ')';
  os << ' ' << to_string(step.family);
  return os.str();
}

std::string describe_violation(const Violation& violation) {
  std::ostringstream os;
  os << to_string(violation.status) << ' ' << violation.sides[0] << ','
     << violation.sides[1] << ',' << violation.sides[2] << " at ("
     << violation.vertices[0] << ',' << violation.vertices[1] << ','
     << violation.vertices[2] << ')';
  return os.str();
}

}  // namespace metric_completer
