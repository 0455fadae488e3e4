#pragma once

#include <filesystem>
#include <iosfwd>

#include "vsp/graph.hpp"

namespace vsp {

/// Reads a MatrixMarket coordinate file as the nonzero pattern of A + A^T.
/// Off-diagonal entries become unit-weight edges; the diagonal and all
/// numerical values are dropped. Costs and sizes are 1.
///
/// Throws ParseError on a malformed header or entry, IndexError on an
/// entry outside the declared dimensions and IoError if the file cannot be
/// opened.
Graph load_matrix_market(const std::filesystem::path& path);
Graph read_matrix_market(std::istream& in);

/// Reads a METIS graph file. The optional fmt field selects vertex sizes
/// (100), vertex weights (010, stored as costs) and edge weights (001).
///
/// Throws AsymmetryError when an edge appears in only one endpoint's list or
/// with different weights on the two sides.
Graph load_metis(const std::filesystem::path& path);
Graph read_metis(std::istream& in);

/// Writes METIS format, emitting only the weight fields that are not all 1.
void write_metis(std::ostream& out, const Graph& g);
void save_metis(const std::filesystem::path& path, const Graph& g);

enum class GraphFormat { kMatrixMarket, kMetis };

/// .mtx -> MatrixMarket; .graph / .metis -> METIS. Throws ParseError otherwise.
GraphFormat format_from_extension(const std::filesystem::path& path);

Graph load_graph(const std::filesystem::path& path, GraphFormat format);

}  // namespace vsp
