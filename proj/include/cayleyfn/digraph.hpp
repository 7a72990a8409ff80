#pragma once

#include <string>
#include <vector>

#include <cayleyfn/transformation.hpp>

namespace cayleyfn {

// A maximal chain from an in-degree-zero vertex down to its first cycle
// vertex. path.front() is the initial vertex, path.back() lies on the cycle,
// no interior vertex does, and length() >= 1.
struct Branch {
  std::vector<int> path;

  int length() const { return static_cast<int>(path.size()) - 1; }
  int initial() const { return path.front(); }
  int attach() const { return path.back(); }

  bool operator==(const Branch& other) const { return path == other.path; }
};

struct FiniteComponent {
  // Rotated so cycle.front() is the smallest cycle vertex.
  std::vector<int> cycle;
  // Every vertex of the component, ascending.
  std::vector<int> vertices;
  // Ordered by initial vertex.
  std::vector<Branch> branches;
};

struct ComponentDecomposition {
  // Ordered by smallest vertex.
  std::vector<FiniteComponent> components;
  std::vector<int> vertex_to_component;
  // Distance from each vertex to its component's cycle; 0 on the cycle.
  std::vector<int> depth;
};

ComponentDecomposition decompose(const Transformation& f);

// Vertices lying on a cycle, ascending. Equals img(f^s) for s = stabilizer(f).
std::vector<int> stable_image(const Transformation& f);

// The least s with img(f^s) == img(f^(s+1)); also the maximum vertex depth.
int stabilizer(const Transformation& f);

// Vertices at depth exactly stabilizer(f), ascending. When the stabilizer is
// 0 this is the whole carrier; otherwise these are the initial vertices of
// the longest twigs.
std::vector<int> max_depth_vertices(const Transformation& f);

// Longest branch length, 0 when f is a permutation.
int max_branch_length(const Transformation& f);

// Branches truncated at their first vertex inside the stable image. Over a
// finite carrier the stable image is exactly the cycle set, so each twig
// coincides with its branch; both are computed independently.
std::vector<Branch> twigs(const Transformation& f);

// Graphviz rendering of the functional digraph. Edges leaving a cycle vertex
// carry class="cycle", all others class="twig". Node order is deterministic.
std::string digraph_to_dot(const Transformation& f);

}  // namespace cayleyfn
