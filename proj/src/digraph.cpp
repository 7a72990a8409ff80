#include <cayleyfn/digraph.hpp>

#include <algorithm>
#include <deque>
#include <sstream>

namespace cayleyfn {

namespace {

// Vertices that survive repeated peeling of in-degree-zero vertices are
// exactly the cycle vertices of a functional digraph.
std::vector<char> cycle_flags(const Transformation& f) {
  const int n = f.size();
  std::vector<int> indegree(n, 0);
  for (int x = 0; x < n; ++x) {
    ++indegree[f(x)];
  }
  std::deque<int> queue;
  for (int x = 0; x < n; ++x) {
    if (indegree[x] == 0) {
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    int y = f(x);
    if (--indegree[y] == 0) {
      queue.push_back(y);
    }
  }
  std::vector<char> on_cycle(n, 0);
  for (int x = 0; x < n; ++x) {
    on_cycle[x] = indegree[x] > 0;
  }
  return on_cycle;
}

}  // namespace

ComponentDecomposition decompose(const Transformation& f) {
  const int n = f.size();
  auto on_cycle = cycle_flags(f);

  std::vector<std::vector<int>> preimages(n);
  std::vector<int> indegree(n, 0);
  for (int x = 0; x < n; ++x) {
    preimages[f(x)].push_back(x);
    ++indegree[f(x)];
  }

  ComponentDecomposition dec;
  dec.vertex_to_component.assign(n, -1);
  dec.depth.assign(n, 0);

  // Walk each unseen cycle, then sweep its trees backwards. That reaches
  // every vertex: each tree vertex drains into exactly one cycle.
  std::vector<FiniteComponent> raw;
  for (int start = 0; start < n; ++start) {
    if (!on_cycle[start] || dec.vertex_to_component[start] != -1) {
      continue;
    }
    FiniteComponent comp;
    int id = static_cast<int>(raw.size());
    for (int v = start;; v = f(v)) {
      comp.cycle.push_back(v);
      dec.vertex_to_component[v] = id;
      if (f(v) == start) {
        break;
      }
    }
    std::deque<int> queue(comp.cycle.begin(), comp.cycle.end());
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.vertices.push_back(v);
      for (int u : preimages[v]) {
        if (on_cycle[u]) {
          continue;
        }
        dec.vertex_to_component[u] = id;
        dec.depth[u] = dec.depth[v] + 1;
        queue.push_back(u);
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    auto min_it = std::min_element(comp.cycle.begin(), comp.cycle.end());
    std::rotate(comp.cycle.begin(), min_it, comp.cycle.end());
    raw.push_back(std::move(comp));
  }

  // Branches, one per initial vertex, gathered in ascending order of the
  // initial vertex so each component's list comes out sorted.
  for (int x = 0; x < n; ++x) {
    if (indegree[x] != 0) {
      continue;
    }
    Branch branch;
    int v = x;
    branch.path.push_back(v);
    while (!on_cycle[v]) {
      v = f(v);
      branch.path.push_back(v);
    }
    raw[dec.vertex_to_component[x]].branches.push_back(std::move(branch));
  }

  // Renumber components by their smallest vertex.
  std::vector<int> order(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    order[i] = static_cast<int>(i);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return raw[a].vertices.front() < raw[b].vertices.front();
  });
  std::vector<int> new_id(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_id[order[i]] = static_cast<int>(i);
    dec.components.push_back(std::move(raw[order[i]]));
  }
  for (int x = 0; x < n; ++x) {
    dec.vertex_to_component[x] = new_id[dec.vertex_to_component[x]];
  }
  return dec;
}

std::vector<int> stable_image(const Transformation& f) {
  auto on_cycle = cycle_flags(f);
  std::vector<int> result;
  for (int x = 0; x < f.size(); ++x) {
    if (on_cycle[x]) {
      result.push_back(x);
    }
  }
  return result;
}

int stabilizer(const Transformation& f) {
  auto dec = decompose(f);
  int s = 0;
  for (int d : dec.depth) {
    s = std::max(s, d);
  }
  return s;
}

std::vector<int> max_depth_vertices(const Transformation& f) {
  auto dec = decompose(f);
  int s = 0;
  for (int d : dec.depth) {
    s = std::max(s, d);
  }
  std::vector<int> result;
  for (int x = 0; x < f.size(); ++x) {
    if (dec.depth[x] == s) {
      result.push_back(x);
    }
  }
  return result;
}

int max_branch_length(const Transformation& f) {
  auto dec = decompose(f);
  int best = 0;
  for (const auto& comp : dec.components) {
    for (const auto& branch : comp.branches) {
      best = std::max(best, branch.length());
    }
  }
  return best;
}

std::vector<Branch> twigs(const Transformation& f) {
  const int n = f.size();
  std::vector<char> in_sim(n, 0);
  for (int v : stable_image(f)) {
    in_sim[v] = 1;
  }
  std::vector<int> indegree(n, 0);
  for (int x = 0; x < n; ++x) {
    ++indegree[f(x)];
  }
  std::vector<Branch> result;
  for (int x = 0; x < n; ++x) {
    if (indegree[x] != 0 || in_sim[x]) {
      continue;
    }
    Branch twig;
    int v = x;
    twig.path.push_back(v);
    while (!in_sim[v]) {
      v = f(v);
      twig.path.push_back(v);
    }
    result.push_back(std::move(twig));
  }
  return result;
}

std::string digraph_to_dot(const Transformation& f) {
  auto on_cycle = cycle_flags(f);
  std::ostringstream out;
  out << "digraph functional {\n";
  for (int x = 0; x < f.size(); ++x) {
    out << "  v" << x << " [label=\"" << f.label(x) << "\"];\n";
  }
  for (int x = 0; x < f.size(); ++x) {
    out << "  v" << x << " -> v" << f(x) << " [class=\""
        << (on_cycle[x] ? "cycle" : "twig") << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cayleyfn
