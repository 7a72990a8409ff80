#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <cayleyfn/centralizer.hpp>
#include <cayleyfn/symbolic.hpp>
#include <cayleyfn/transformation.hpp>

namespace support {

// A 13-point carrier with five idempotent classes (sizes 3,4,3,1,2) and a
// commuting map whose digraph is a 4-cycle carrying nine length-1 branches.
inline const std::vector<std::string> kThirteenLabels = {
    "a", "a1", "a2", "b", "b1", "b2", "b3", "c", "c1", "c2", "d", "e", "e1"};

inline cayleyfn::Transformation thirteen_point_idempotent() {
  return cayleyfn::Transformation({0, 0, 0, 3, 3, 3, 3, 7, 7, 7, 10, 11, 11},
                                  kThirteenLabels);
}

inline cayleyfn::Transformation thirteen_point_rotation() {
  return cayleyfn::Transformation({3, 3, 3, 7, 7, 7, 7, 10, 10, 10, 11, 3, 3},
                                  kThirteenLabels);
}

inline cayleyfn::Transformation random_map(int n, std::mt19937_64& gen) {
  std::vector<int> images(n);
  for (int& v : images) {
    v = static_cast<int>(gen() % n);
  }
  return cayleyfn::Transformation(std::move(images));
}

inline cayleyfn::Transformation random_idempotent(int n, std::mt19937_64& gen) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) {
    order[i] = i;
  }
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[gen() % (i + 1)]);
  }
  const int classes = 1 + static_cast<int>(gen() % n);
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) {
    images[order[i]] = i < classes ? order[i] : order[gen() % classes];
  }
  return cayleyfn::Transformation(std::move(images));
}

// Chain lengths attached at each spine position of a truncation, measured on
// the raw map: walk every in-degree-zero non-spine vertex down to the spine.
inline std::map<long long, std::vector<int>> branch_census(
    const cayleyfn::Materialization& m) {
  const auto& f = m.map;
  const int n = f.size();
  std::set<int> spine_ids;
  std::map<int, long long> position_of;
  for (const auto& [pos, id] : m.spine) {
    spine_ids.insert(id);
    position_of[id] = pos;
  }
  std::vector<int> indegree(n, 0);
  for (int x = 0; x < n; ++x) {
    ++indegree[f(x)];
  }
  std::map<long long, std::vector<int>> census;
  for (int x = 0; x < n; ++x) {
    if (indegree[x] != 0 || spine_ids.count(x)) {
      continue;
    }
    int length = 0;
    int v = x;
    while (!spine_ids.count(v)) {
      v = f(v);
      ++length;
    }
    census[position_of[v]].push_back(length);
  }
  for (auto& [pos, lengths] : census) {
    std::sort(lengths.begin(), lengths.end());
  }
  return census;
}

// The branch lengths a descriptor expects at one position, expanded to
// multiplicities; unbounded multiplicities count twice, matching the
// materializer, and infinite branches truncate to cut_length.
inline std::vector<int> expected_lengths(const cayleyfn::BranchGroup& group,
                                         int cut_length) {
  std::vector<int> lengths;
  for (const auto& spec : group) {
    const int copies = spec.multiplicity ? *spec.multiplicity : 2;
    const int len = spec.kind == cayleyfn::BranchKind::Finite ? spec.length : cut_length;
    for (int c = 0; c < copies; ++c) {
      lengths.push_back(len);
    }
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

// An 11-point pair whose quotient has cycle lengths 2 and 3, so the
// sufficient criterion stays silent, while the map itself is a translation:
// two fixed vertices swap, their six satellites run a single 6-cycle, and a
// bare 3-cycle of fixed vertices fills the rest.
inline cayleyfn::Transformation silent_pair_idempotent() {
  return cayleyfn::Transformation({0, 0, 0, 0, 4, 4, 4, 4, 8, 9, 10});
}

inline cayleyfn::Transformation silent_pair_map() {
  return cayleyfn::Transformation({4, 5, 6, 7, 0, 2, 3, 1, 9, 10, 8});
}

inline const cayleyfn::BranchGroup& right_ray_group_at(
    const cayleyfn::RightRayDescriptor& d, long long pos) {
  static const cayleyfn::BranchGroup kEmpty;
  if (pos < static_cast<long long>(d.prefix.size())) {
    return d.prefix[static_cast<std::size_t>(pos)];
  }
  if (!d.tail) {
    return kEmpty;
  }
  const long long offset = pos - static_cast<long long>(d.prefix.size());
  return d.tail->pattern[static_cast<std::size_t>(offset % d.tail->period)];
}

// Random ray descriptor with a bare tail: finite branches sprinkled over a
// short prefix, each respecting the attachment bound so the ray condition can
// pass or fail on branch lengths alone.
inline cayleyfn::RightRayDescriptor random_right_ray(std::mt19937_64& gen,
                                                     bool satisfiable) {
  const int prefix_len = 2 + static_cast<int>(gen() % 7);
  std::vector<cayleyfn::BranchGroup> prefix(prefix_len);
  for (int pos = 1; pos < prefix_len; ++pos) {
    const int count = static_cast<int>(gen() % 3);
    for (int c = 0; c < count; ++c) {
      int length;
      if (satisfiable) {
        length = 1 + static_cast<int>(gen() % pos);
      } else {
        length = 1 + static_cast<int>(gen() % (pos + 3));
      }
      const int multiplicity = 1 + static_cast<int>(gen() % 2);
      prefix[pos].push_back(cayleyfn::BranchSpec{cayleyfn::BranchKind::Finite,
                                                 length, multiplicity});
    }
  }
  return cayleyfn::RightRayDescriptor{std::move(prefix), std::nullopt, false};
}

}  // namespace support
