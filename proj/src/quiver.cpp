#include "qhom/quiver.hpp"

namespace qhom {

int Quiver::add_vertex(const std::string& id) {
  if (vertex_ids_.count(id)) throw QuiverError("duplicate vertex id: " + id);
  int v = n_vertices();
  vertices_.push_back(id);
  vertex_ids_[id] = v;
  return v;
}

int Quiver::add_arrow(const std::string& name, const std::string& src,
                      const std::string& tgt) {
  if (arrow_ids_.count(name)) throw QuiverError("duplicate arrow name: " + name);
  int s = vertex_id(src), t = vertex_id(tgt);
  if (s < 0) throw QuiverError("arrow " + name + " references unknown vertex " + src);
  if (t < 0) throw QuiverError("arrow " + name + " references unknown vertex " + tgt);
  int a = n_arrows();
  arrows_.push_back(Arrow{name, s, t});
  arrow_ids_[name] = a;
  return a;
}

int Quiver::vertex_id(const std::string& name) const {
  auto it = vertex_ids_.find(name);
  return it == vertex_ids_.end() ? -1 : it->second;
}

int Quiver::arrow_id(const std::string& name) const {
  auto it = arrow_ids_.find(name);
  return it == arrow_ids_.end() ? -1 : it->second;
}

Quiver Quiver::opposite() const {
  Quiver op;
  for (const auto& v : vertices_) op.add_vertex(v);
  for (const auto& a : arrows_)
    op.add_arrow(a.name, vertices_[a.tgt], vertices_[a.src]);
  return op;
}

std::pair<int, int> path_endpoints(const Quiver& q, const PathWord& w) {
  if (w.trivial()) {
    if (w.vertex < 0 || w.vertex >= q.n_vertices())
      throw QuiverError("trivial path at unknown vertex");
    return {w.vertex, w.vertex};
  }
  int src = q.arrow(w.arrows.front()).src;
  int cur = src;
  for (int a : w.arrows) {
    if (q.arrow(a).src != cur)
      throw QuiverError("non-composable path: arrow " + q.arrow(a).name +
                        " does not start where the previous arrow ends");
    cur = q.arrow(a).tgt;
  }
  return {src, cur};
}

}  // namespace qhom
