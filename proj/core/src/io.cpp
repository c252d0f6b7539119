#include "antiramsey/io.hpp"

#include <charconv>
#include <sstream>

#include "antiramsey/errors.hpp"

namespace antiramsey {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool read_int(std::string_view& s, long long& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{}) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<Edge> edges;
  long long declared = -1;
  long long max_endpoint = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("n=") || line.starts_with("n =")) {
      if (declared >= 0 || !edges.empty()) throw ParseError(line_no, "header must precede all edges");
      std::string_view rest = line.substr(line.find('=') + 1);
      if (!read_int(rest, declared) || !trim(rest).empty() || declared < 0) {
        throw ParseError(line_no, "malformed header '" + std::string(line) + "'");
      }
      continue;
    }

    long long a = 0;
    long long b = 0;
    std::string_view rest = line;
    if (!read_int(rest, a) || !read_int(rest, b) || !trim(rest).empty() || a < 0 || b < 0) {
      throw ParseError(line_no, "expected 'u v', got '" + std::string(line) + "'");
    }
    if (a == b) throw ParseError(line_no, "loop at vertex " + std::to_string(a));
    if (declared >= 0 && (a >= declared || b >= declared)) {
      throw ParseError(line_no, "endpoint exceeds declared n=" + std::to_string(declared));
    }
    max_endpoint = std::max({max_endpoint, a, b});
    edges.push_back(make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
  }
  const auto n = declared >= 0 ? declared : max_endpoint + 1;
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

nlohmann::json graph_to_json(const Graph& g) {
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<long long>();
    if (n < 0) throw DomainError("negative vertex count");
    std::vector<Edge> edges;
    for (const auto& pair : j.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) throw DomainError("edge entries must be [u, v]");
      edges.push_back(make_edge(pair[0].get<Vertex>(), pair[1].get<Vertex>()));
    }
    return Graph(static_cast<Vertex>(n), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("graph JSON: ") + e.what());
  }
}

Graph parse_graph_any(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("graph JSON: ") + e.what());
    }
    if (j.contains("graph")) return graph_from_json(j.at("graph"));
    return graph_from_json(j);
  }
  return parse_graph(text);
}

}  // namespace antiramsey
