#include "vsp/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vsp/errors.hpp"

namespace vsp {
namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line_no, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer " + what +
                     ", got '" + std::string(tok) + "'");
  }
  return value;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char ch) { return std::isspace(ch) != 0; });
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

Graph read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParseError("empty MatrixMarket file");
  ++line_no;
  auto banner = split_ws(line);
  if (banner.size() < 5 || banner[0] != "%%MatrixMarket") {
    throw ParseError("line 1: missing %%MatrixMarket banner");
  }
  const std::string object = lowercase(std::string(banner[1]));
  const std::string layout = lowercase(std::string(banner[2]));
  const std::string field = lowercase(std::string(banner[3]));
  const std::string symmetry = lowercase(std::string(banner[4]));
  if (object != "matrix") throw ParseError("line 1: unsupported object '" + object + "'");
  if (layout != "coordinate") throw ParseError("line 1: only coordinate format is supported");
  std::size_t values_per_entry = 0;
  if (field == "pattern") {
    values_per_entry = 0;
  } else if (field == "real" || field == "integer" || field == "double") {
    values_per_entry = 1;
  } else if (field == "complex") {
    values_per_entry = 2;
  } else {
    throw ParseError("line 1: unknown field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric" &&
      symmetry != "hermitian") {
    throw ParseError("line 1: unknown symmetry '" + symmetry + "'");
  }

  // Size line follows any comment lines.
  std::vector<std::string_view> dims;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%' || is_blank(line)) continue;
    dims = split_ws(line);
    break;
  }
  if (dims.size() != 3) throw ParseError("missing or malformed size line");
  const auto rows = parse_int(dims[0], line_no, "row count");
  const auto cols = parse_int(dims[1], line_no, "column count");
  const auto nnz = parse_int(dims[2], line_no, "entry count");
  if (rows < 0 || cols < 0 || nnz < 0) throw ParseError("negative dimension in size line");
  if (rows != cols) {
    throw ParseError("matrix is " + std::to_string(rows) + "x" + std::to_string(cols) +
                     "; a graph needs a square matrix");
  }
  if (rows > std::numeric_limits<Vertex>::max()) throw ParseError("matrix too large");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(nnz));
  std::int64_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%' || is_blank(line)) continue;
    auto tok = split_ws(line);
    if (tok.size() != 2 + values_per_entry) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(2 + values_per_entry) + " fields");
    }
    const auto i = parse_int(tok[0], line_no, "row index");
    const auto j = parse_int(tok[1], line_no, "column index");
    for (std::size_t k = 2; k < tok.size(); ++k) {
      std::istringstream number{std::string(tok[k])};
      double value = 0.0;
      if (!(number >> value)) {
        throw ParseError("line " + std::to_string(line_no) + ": bad numeric value");
      }
    }
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw IndexError("line " + std::to_string(line_no) + ": entry (" + std::to_string(i) +
                       ", " + std::to_string(j) + ") outside " + std::to_string(rows) + "x" +
                       std::to_string(cols));
    }
    ++seen;
    if (i != j) edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1), 1});
  }
  if (seen != nnz) {
    throw ParseError("header declares " + std::to_string(nnz) + " entries, found " +
                     std::to_string(seen));
  }
  return Graph::from_edges(static_cast<Vertex>(rows), edges, DuplicateEdges::kCollapse);
}

Graph load_matrix_market(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_matrix_market(in);
}

Graph read_metis(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  auto next_content_line = [&](bool allow_blank) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line[0] == '%') continue;
      if (!allow_blank && is_blank(line)) continue;
      return true;
    }
    return false;
  };

  if (!next_content_line(false)) throw ParseError("empty METIS file");
  auto header = split_ws(line);
  if (header.size() < 2 || header.size() > 4) {
    throw ParseError("line " + std::to_string(line_no) + ": header must be 'n m [fmt [ncon]]'");
  }
  const auto n = parse_int(header[0], line_no, "vertex count");
  const auto m = parse_int(header[1], line_no, "edge count");
  if (n < 0 || m < 0) throw ParseError("negative count in header");
  if (n > std::numeric_limits<Vertex>::max()) throw ParseError("graph too large");

  bool has_sizes = false;
  bool has_vertex_weights = false;
  bool has_edge_weights = false;
  if (header.size() >= 3) {
    std::string fmt(header[2]);
    if (fmt.size() > 3 || fmt.find_first_not_of("01") != std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": bad fmt field '" + fmt + "'");
    }
    fmt.insert(0, 3 - fmt.size(), '0');
    has_sizes = fmt[0] == '1';
    has_vertex_weights = fmt[1] == '1';
    has_edge_weights = fmt[2] == '1';
  }
  std::int64_t ncon = has_vertex_weights ? 1 : 0;
  if (header.size() == 4) {
    ncon = parse_int(header[3], line_no, "ncon");
    if (ncon != 1) throw ParseError("only a single vertex-weight constraint is supported");
    has_vertex_weights = true;
  }

  std::vector<std::vector<Neighbor>> adjacency(static_cast<std::size_t>(n));
  std::vector<Weight> cost(static_cast<std::size_t>(n), 1);
  std::vector<Weight> size(static_cast<std::size_t>(n), 1);
  std::int64_t entries = 0;

  for (std::int64_t v = 0; v < n; ++v) {
    if (!next_content_line(true)) {
      throw ParseError("expected " + std::to_string(n) + " vertex lines, found " +
                       std::to_string(v));
    }
    auto tok = split_ws(line);
    std::size_t k = 0;
    auto take = [&](const char* what) {
      if (k >= tok.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": missing " + what);
      }
      return parse_int(tok[k++], line_no, what);
    };
    if (has_sizes) size[v] = take("vertex size");
    if (has_vertex_weights) cost[v] = take("vertex weight");
    while (k < tok.size()) {
      const auto u = take("neighbor id");
      const Weight w = has_edge_weights ? take("edge weight") : 1;
      if (u < 1 || u > n) {
        throw IndexError("line " + std::to_string(line_no) + ": neighbor " +
                         std::to_string(u) + " outside 1.." + std::to_string(n));
      }
      if (u - 1 == v) {
        throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                         std::to_string(v + 1));
      }
      if (w < 1) throw ParseError("line " + std::to_string(line_no) + ": nonpositive edge weight");
      adjacency[v].push_back({static_cast<Vertex>(u - 1), w});
      ++entries;
    }
    if (size[v] < 1) throw ParseError("line " + std::to_string(line_no) + ": vertex size < 1");
    if (cost[v] < 0) throw ParseError("line " + std::to_string(line_no) + ": negative vertex weight");
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '%') continue;
    if (!is_blank(line)) {
      throw ParseError("line " + std::to_string(line_no) + ": trailing content after vertex lines");
    }
  }

  Graph g(std::move(adjacency), std::move(cost), std::move(size));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto list = g.neighbors(v);
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (k > 0 && list[k - 1].vertex == list[k].vertex) {
        throw ParseError("vertex " + std::to_string(v + 1) + " lists neighbor " +
                         std::to_string(list[k].vertex + 1) + " twice");
      }
      if (g.edge_weight(list[k].vertex, v) != list[k].weight) {
        throw AsymmetryError("edge (" + std::to_string(v + 1) + ", " +
                             std::to_string(list[k].vertex + 1) +
                             ") is not listed identically by both endpoints");
      }
    }
  }
  if (entries != 2 * m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, adjacency lists hold " +
                     std::to_string(entries / 2));
  }
  return g;
}

Graph load_metis(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_metis(in);
}

void write_metis(std::ostream& out, const Graph& g) {
  const Vertex n = g.num_vertices();
  auto all_one = [](std::span<const Weight> w) {
    return std::all_of(w.begin(), w.end(), [](Weight x) { return x == 1; });
  };
  bool unit_edges = true;
  for (Vertex v = 0; v < n && unit_edges; ++v) {
    for (const Neighbor& nb : g.neighbors(v)) unit_edges = unit_edges && nb.weight == 1;
  }
  const bool sizes = !all_one(g.sizes());
  const bool costs = !all_one(g.costs());

  out << n << ' ' << g.num_edges();
  if (sizes || costs || !unit_edges) {
    out << ' ' << (sizes ? '1' : '0') << (costs ? '1' : '0') << (unit_edges ? '0' : '1');
  }
  out << '\n';
  for (Vertex v = 0; v < n; ++v) {
    bool first = true;
    auto put = [&](Weight x) {
      if (!first) out << ' ';
      out << x;
      first = false;
    };
    if (sizes) put(g.size(v));
    if (costs) put(g.cost(v));
    for (const Neighbor& nb : g.neighbors(v)) {
      put(nb.vertex + 1);
      if (!unit_edges) put(nb.weight);
    }
    out << '\n';
  }
}

void save_metis(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_metis(out, g);
}

GraphFormat format_from_extension(const std::filesystem::path& path) {
  const std::string ext = lowercase(path.extension().string());
  if (ext == ".mtx") return GraphFormat::kMatrixMarket;
  if (ext == ".graph" || ext == ".metis") return GraphFormat::kMetis;
  throw ParseError("cannot infer graph format from extension '" + ext + "' of " + path.string());
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format) {
  return format == GraphFormat::kMatrixMarket ? load_matrix_market(path) : load_metis(path);
}

}  // namespace vsp
