#include "fgc/io.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace fgc {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::int64_t parse_int(std::string_view word, int line, const char* what) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || end != word.data() + word.size()) throw ParseError(std::string("bad ") + what, line);
  return value;
}

struct Line {
  int number;
  std::vector<std::string_view> words;
};

std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (!words.empty()) lines.push_back({number, std::move(words)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

void expect_words(const Line& line, std::size_t count, const char* what) {
  if (line.words.size() != count) throw ParseError(std::string("malformed ") + what + " line", line.number);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError("empty instance", 1);
  std::size_t next = 0;

  const Line& header = lines[next++];
  expect_words(header, 2, "header");
  const bool is_fgc = header.words[0] == "fgc";
  if (!is_fgc && header.words[0] != "capk") throw ParseError("unknown problem tag", header.number);
  if (header.words[1] != "1") throw ParseError("unsupported format version", header.number);

  if (next >= lines.size()) throw ParseError("missing vertex count", header.number);
  const Line& size_line = lines[next++];
  expect_words(size_line, 2, "vertex count");
  if (size_line.words[0] != "n") throw ParseError("expected 'n'", size_line.number);
  const std::int64_t n = parse_int(size_line.words[1], size_line.number, "vertex count");
  if (n < 1 || n > kMaxVertices) throw ParseError("vertex count out of range", size_line.number);

  if (next >= lines.size()) throw ParseError("missing parameters", size_line.number);
  const Line& params = lines[next++];
  std::int64_t p = 1;
  std::int64_t q = 0;
  std::int64_t k = 1;
  if (is_fgc) {
    expect_words(params, 4, "parameter");
    if (params.words[0] != "p" || params.words[2] != "q") throw ParseError("expected 'p <p> q <q>'", params.number);
    p = parse_int(params.words[1], params.number, "p");
    q = parse_int(params.words[3], params.number, "q");
    if (p < 1 || q < 0) throw ParseError("need p >= 1 and q >= 0", params.number);
  } else {
    expect_words(params, 2, "parameter");
    if (params.words[0] != "k") throw ParseError("expected 'k <k>'", params.number);
    k = parse_int(params.words[1], params.number, "k");
    if (k < 1) throw ParseError("need k >= 1", params.number);
  }

  std::vector<EdgeSpec> specs;
  for (; next < lines.size(); ++next) {
    const Line& line = lines[next];
    expect_words(line, 5, "edge");
    if (line.words[0] != "edge") throw ParseError("expected 'edge'", line.number);
    EdgeSpec spec;
    const std::int64_t u = parse_int(line.words[1], line.number, "endpoint");
    const std::int64_t v = parse_int(line.words[2], line.number, "endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("endpoint out of range", line.number);
    if (u == v) throw ParseError("self-loop", line.number);
    spec.u = static_cast<Vertex>(u);
    spec.v = static_cast<Vertex>(v);
    try {
      spec.cost = Rational::parse(line.words[3]);
    } catch (const std::exception&) {
      throw ParseError("bad cost", line.number);
    }
    if (spec.cost.sign() < 0) throw ParseError("negative cost", line.number);
    if (is_fgc) {
      if (line.words[4] == "S") {
        spec.label = Label::Safe;
      } else if (line.words[4] == "U") {
        spec.label = Label::Unsafe;
      } else {
        throw ParseError("label must be S or U", line.number);
      }
    } else {
      spec.capacity = parse_int(line.words[4], line.number, "capacity");
      if (spec.capacity < 0) throw ParseError("negative capacity", line.number);
    }
    specs.push_back(std::move(spec));
  }

  MultiGraph graph = build_graph(static_cast<int>(n), specs);
  if (is_fgc) return FgcInstance{std::move(graph), static_cast<int>(p), static_cast<int>(q)};
  return CapEcssInstance{std::move(graph), static_cast<int>(k)};
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  const auto edges = [&](const MultiGraph& graph, bool fgc) {
    for (const auto& e : graph.edges()) {
      out << "edge " << e.u << ' ' << e.v << ' ' << e.cost.to_string() << ' ';
      if (fgc) {
        out << (e.safe() ? 'S' : 'U');
      } else {
        out << e.capacity;
      }
      out << '\n';
    }
  };
  if (const auto* f = std::get_if<FgcInstance>(&instance)) {
    out << "fgc 1\nn " << f->graph.vertex_count() << "\np " << f->p << " q " << f->q << '\n';
    edges(f->graph, true);
  } else {
    const auto& c = std::get<CapEcssInstance>(instance);
    out << "capk 1\nn " << c.graph.vertex_count() << "\nk " << c.k << '\n';
    edges(c.graph, false);
  }
  return out.str();
}

EdgeSet parse_solution(std::string_view text, int edge_count) {
  std::vector<EdgeId> ids;
  for (const auto& line : meaningful_lines(text)) {
    expect_words(line, 1, "solution");
    const std::int64_t id = parse_int(line.words[0], line.number, "edge id");
    if (id < 0 || id >= edge_count) throw ParseError("edge id out of range", line.number);
    ids.push_back(static_cast<EdgeId>(id));
  }
  return make_edge_set(std::move(ids));
}

std::string serialize_solution(const EdgeSet& solution) {
  std::string out;
  for (EdgeId id : solution) out += std::to_string(id) + '\n';
  return out;
}

FgcInstance gen_figure1(int n) {
  if (n < 2) throw GraphError("figure-1 family needs n >= 2");
  const int vertices = 2 * n;
  std::vector<EdgeSpec> specs;
  for (int i = 0; i < vertices; ++i) specs.push_back({i, (i + 1) % vertices, Rational(1), Label::Unsafe, 1});
  for (int i = 1; i <= n - 1; ++i) specs.push_back({2 * i - 1, vertices - 1, Rational(1), Label::Safe, 1});
  return FgcInstance{build_graph(vertices, specs), 1, 1};
}

MultiGraph gen_random(const RandomGraphOptions& options) {
  const int n = options.n;
  if (n < 1 || n > kMaxVertices) throw GraphError("vertex count out of range");
  if (options.m < n - 1) throw GraphError("need m >= n - 1 for a connected graph");
  if (n == 1 && options.m > 0) throw GraphError("a single vertex admits no edges");
  if (options.cost_min < 0 || options.cost_max < options.cost_min) throw GraphError("bad cost range");
  if (options.capacity_min < 0 || options.capacity_max < options.capacity_min) throw GraphError("bad capacity range");

  std::mt19937_64 rng(options.seed);
  const auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const auto make_edge = [&](Vertex u, Vertex v) {
    EdgeSpec spec;
    spec.u = u;
    spec.v = v;
    spec.cost = Rational(uniform(options.cost_min, options.cost_max));
    spec.label = std::bernoulli_distribution(options.safe_probability)(rng) ? Label::Safe : Label::Unsafe;
    spec.capacity = uniform(options.capacity_min, options.capacity_max);
    return spec;
  };

  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[uniform(0, i)]);

  std::vector<EdgeSpec> specs;
  for (int i = 1; i < n; ++i) specs.push_back(make_edge(order[uniform(0, i - 1)], order[i]));
  while (static_cast<int>(specs.size()) < options.m) {
    const auto u = static_cast<Vertex>(uniform(0, n - 1));
    const auto v = static_cast<Vertex>(uniform(0, n - 2));
    specs.push_back(make_edge(u, v >= u ? v + 1 : v));
  }
  for (int i = static_cast<int>(specs.size()) - 1; i > 0; --i) std::swap(specs[i], specs[uniform(0, i)]);

  MultiGraph graph = build_graph(n, specs);
  if (!options.repair_unsafe_bridges) return graph;
  bool changed = false;
  for (const auto& e : graph.edges()) {
    if (e.safe()) continue;
    if (!is_connected(graph, set_difference(all_edges(graph), EdgeSet{e.id}))) {
      specs[e.id].label = Label::Safe;
      changed = true;
    }
  }
  return changed ? build_graph(n, specs) : graph;
}

std::uint64_t instance_digest(const Instance& instance) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : serialize_instance(instance)) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

RunReport make_run_report(const Instance& instance, const std::string& algorithm, const SolveReport& report,
                          double elapsed_ms) {
  RunReport out;
  std::ostringstream digest;
  digest << std::hex;
  digest.width(16);
  digest.fill('0');
  digest << instance_digest(instance);
  out.instance_digest = digest.str();
  out.algorithm = algorithm;
  out.cost = report.cost;
  out.guarantee = report.guarantee;
  out.lower_bound = report.lower_bound;
  if (report.lower_bound && report.lower_bound->sign() > 0) out.ratio = report.cost / *report.lower_bound;
  out.iterations = report.iterations;
  out.elapsed_ms = elapsed_ms;
  out.solution = report.solution;
  out.stage_costs = report.stage_costs;
  return out;
}

std::string to_json(const RunReport& report, bool include_elapsed) {
  using nlohmann::json;
  const auto rational = [](const std::optional<Rational>& value) -> json {
    if (!value) return nullptr;
    return value->to_string();
  };
  json out;
  out["instance_digest"] = report.instance_digest;
  out["algorithm"] = report.algorithm;
  out["cost"] = report.cost.to_string();
  out["guarantee"] = report.guarantee.to_string();
  out["lower_bound"] = rational(report.lower_bound);
  out["ratio"] = rational(report.ratio);
  out["iterations"] = report.iterations;
  if (include_elapsed) out["elapsed_ms"] = report.elapsed_ms;
  out["solution"] = report.solution;
  json stages = json::array();
  for (const auto& c : report.stage_costs) stages.push_back(c.to_string());
  out["stage_costs"] = stages;
  return out.dump(2);
}

}  // namespace fgc
