#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tristrip {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

// Simple undirected graph on vertices 0..vertex_count-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::initializer_list<Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  // Returns false when the edge was already present. Throws on loops or
  // out-of-range vertices.
  bool add_edge(Vertex u, Vertex v);
  int degree(Vertex v) const;
  std::vector<Vertex> neighbours(Vertex v) const;
  Vertex add_vertex() { return n_++; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(Vertex v) const;
  int n_ = 0;
  std::set<Edge> edges_;
};

// Frame order a1 a2 a3 a4; frame edges a1a2, a2a3, a3a4, a4a1.
using Frame = std::array<Vertex, 4>;

struct FramedGraph {
  Graph graph;
  Frame frame{};

  // Throws std::invalid_argument unless the frame is four distinct vertices
  // spanning a 4-cycle of the graph.
  void validate() const;
};

enum class ColouringType { type1 = 1, type2 = 2, type3 = 3, type4 = 4 };

// Classifies a frame colouring by the equalities c1=c3 and c2=c4.
ColouringType colouring_type(int c1, int c2, int c3, int c4);
// Number of distinct colours on the frame: 2, 3, 3, 4.
int frame_colour_count(ColouringType t);
inline int type_index(ColouringType t) { return static_cast<int>(t) - 1; }

struct Contraction {
  Graph graph;
  // image[v] is the vertex of `graph` that v was mapped to.
  std::vector<Vertex> image;
};

// Merges v into u. The merged vertex keeps the smaller index and every later
// vertex shifts down by one. Throws AdjacentMergeError when u and v are
// adjacent.
Contraction contract_pair(const Graph& g, Vertex u, Vertex v);
Graph identify_vertices(const Graph& g, Vertex u, Vertex v);

// A / a1a3 / a2a4.
Graph diagonal_contraction(const FramedGraph& fg);

// Auxiliary graph whose chromatic polynomial counts colourings of the given
// type; nullopt when a required identification joins adjacent vertices.
std::optional<Graph> type_auxiliary_graph(const FramedGraph& fg, ColouringType t);

// Identifies b's frame with a's frame vertex by vertex.
Graph glue_graphs(const FramedGraph& a, const FramedGraph& b);

// One layer of the width-4 cylindrical triangular lattice: outer cycle
// 0-1-2-3, inner cycle 4-5-6-7, inner vertex 4+j adjacent to outer j and j+1.
struct Gadget {
  Graph graph;
  Frame outer;
  Frame inner;
};
Gadget gadget_layer();

// A with the gadget's inner cycle glued onto its frame; the gadget's outer
// cycle becomes the new frame.
FramedGraph add_layer(const FramedGraph& a);

// X_{A,B}(n): n stacked 4-cycles joined as in the gadget, with A glued to the
// first ring and B to the last. Vertex count |A| + |B| + 4n - 8.
Graph strip_graph(const FramedGraph& a, const FramedGraph& b, int n);

// Text format:
//   vertices N
//   edge u v        (one per edge)
//   frame a1 a2 a3 a4  (optional, repeatable)
// Blank lines and lines starting with '#' are ignored.
struct GraphFile {
  Graph graph;
  std::vector<Frame> frames;

  // The first frame; throws GraphFormatError when there is none.
  FramedGraph framed(std::size_t which = 0) const;
};

GraphFile parse_graph_text(std::string_view text);
GraphFile load_graph_file(const std::filesystem::path& path);
std::string to_text(const GraphFile& file);

}  // namespace tristrip
