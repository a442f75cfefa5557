#ifndef QHOM_QUIVER_HPP
#define QHOM_QUIVER_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhom/field.hpp"

namespace qhom {

struct QuiverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  int src;
  int tgt;
};

class Quiver {
public:
  int add_vertex(const std::string& id);
  int add_arrow(const std::string& name, const std::string& src, const std::string& tgt);

  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  int vertex_id(const std::string& name) const;   // -1 if unknown
  int arrow_id(const std::string& name) const;    // -1 if unknown

  // Arrows reversed, same names and declaration order.
  Quiver opposite() const;

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_ids_;
  std::map<std::string, int> arrow_ids_;
};

// A path in the quiver.  Arrows compose left to right: a path (a1, ..., ak)
// traverses a1 first, so tgt(a_i) == src(a_{i+1}).  An empty arrow list is
// the trivial path at `vertex`.
struct PathWord {
  int vertex = -1;               // source vertex (defining for trivial paths)
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
  friend bool operator==(const PathWord& a, const PathWord& b) {
    return a.vertex == b.vertex && a.arrows == b.arrows;
  }
};

// Validates composability; returns (source, target) of the path.
std::pair<int, int> path_endpoints(const Quiver& q, const PathWord& w);

struct RelationTerm {
  Scalar coeff;
  PathWord path;
};

// A parallel linear combination of paths of length >= 2.
using Relation = std::vector<RelationTerm>;

}  // namespace qhom

#endif
