#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <cayleyfn/transformation.hpp>

namespace cayleyfn {

enum class BranchKind { Finite, Infinite };

// One family of branches attached at a spine position.
struct BranchSpec {
  BranchKind kind = BranchKind::Finite;
  // Finite branches only; number of edges, >= 1.
  int length = 1;
  // How many identical branches attach here; nullopt means unboundedly many.
  std::optional<int> multiplicity = 1;

  bool operator==(const BranchSpec& other) const = default;
};

using BranchGroup = std::vector<BranchSpec>;

// Periodic description of branch groups along an infinite stretch of spine.
struct TailRule {
  int period = 1;
  std::vector<BranchGroup> pattern;  // pattern.size() == period
};

// A component that is a maximal right ray x_0 -> x_1 -> ... with finite
// branches. prefix[i] lists the branches at position i; a tail, when
// present, governs positions >= prefix.size() with slot
// (position - prefix.size()) % period. Position 0 never carries a branch:
// the ray would not be maximal.
//
// unbounded_growth records that branch lengths keep growing past the prefix,
// which no periodic tail can express; it forces the ray condition to fail
// just past the prefix.
struct RightRayDescriptor {
  std::vector<BranchGroup> prefix;
  std::optional<TailRule> tail;
  bool unbounded_growth = false;
};

// A component whose spine is a double ray ... -> x_-1 -> x_0 -> x_1 -> ...
// window[p + radius] lists the branches at position p for |p| <= radius.
// right_tail governs positions p > radius with slot (p - radius - 1) %
// period; left_tail governs p < -radius with slot (-radius - 1 - p) % period,
// walking leftwards. Branches may be infinite (left rays feeding the spine).
struct DoubleRayDescriptor {
  int radius = 0;
  std::vector<BranchGroup> window;  // size 2*radius + 1
  std::optional<TailRule> left_tail;
  std::optional<TailRule> right_tail;
};

enum class SymbolicStatus { Satisfied, Violated, Unknown };

std::string to_string(SymbolicStatus status);

struct SymbolicVerdict {
  SymbolicStatus status = SymbolicStatus::Unknown;
  // For Violated, the spine position witnessing the failure; for Satisfied
  // existence checks, the position found.
  std::optional<long long> witness_position;
  std::string detail;
};

// The ray branch condition: every branch of length m attached at x_i needs
// m <= i. The prefix is checked position by position; a periodic tail is
// decided at the first position each slot governs, since slot lengths stay
// constant while the position index grows.
SymbolicVerdict check_right_ray_condition(const RightRayDescriptor& d);

// The double-ray condition with twig bound max_twig: some position i must
// carry a finite branch of length exactly max_twig (vacuous when max_twig is
// 0) while every position right of i carries an infinite branch.
SymbolicVerdict check_double_ray_condition(const DoubleRayDescriptor& d, int max_twig);

// The branch-only variant for double rays without infinite branches: some
// position must carry a finite branch of length exactly max_branch (vacuous
// at 0). Throws InfiniteBranchError when an infinite branch is present.
SymbolicVerdict check_double_ray_finite_branches(const DoubleRayDescriptor& d,
                                                 int max_branch);

// Sufficient Cayley tests for a map commuting with an idempotent whose
// quotient digraph is the given descriptor. A satisfied condition lifts
// along the fixed vertices and certifies Cayley; a violated one certifies
// nothing, so these forward Satisfied or downgrade to Unknown.
SymbolicVerdict quotient_right_ray_criterion(const RightRayDescriptor& d);
SymbolicVerdict quotient_double_ray_criterion(const DoubleRayDescriptor& d,
                                              int stabilizer);

struct SatelliteTail {
  int period = 1;
  std::vector<int> pattern;
};

// Satellite counts for each quotient node of a descriptor: one entry per
// prefix/window position, periodic rules for the tails.
struct SatelliteCounts {
  std::vector<int> spine;
  std::optional<SatelliteTail> tail;       // right tail for double rays
  std::optional<SatelliteTail> left_tail;  // double rays only
};

// The subdigraph induced on fixed vertices by a map whose quotient digraph
// matches the descriptor: the skeleton survives unchanged, every finite
// quotient branch of length k lifts to a finite branch of length k, every
// infinite one stays infinite. Satellite counts are validated against the
// descriptor shape; they add satellite vertices, never fixed ones, so they
// do not show up in the lift.
RightRayDescriptor lift_fixed_points(const RightRayDescriptor& d,
                                     const SatelliteCounts& counts);
DoubleRayDescriptor lift_fixed_points(const DoubleRayDescriptor& d,
                                      const SatelliteCounts& counts);

// A finite truncation of a descriptor. The spine covers positions 0..radius
// (right rays) or -radius..radius (double rays); the forward end closes with
// a self-loop. Boundary lists every artificial vertex: the closed end, a
// truncated left spine end, and the cut end of each truncated infinite
// branch. Branches with unbounded multiplicity materialize twice.
struct Materialization {
  Transformation map;
  std::vector<int> boundary;       // ascending vertex ids
  std::map<long long, int> spine;  // position -> vertex id
};

Materialization materialize(const RightRayDescriptor& d, int radius);
Materialization materialize(const DoubleRayDescriptor& d, int radius);

json descriptor_to_json(const RightRayDescriptor& d);
json descriptor_to_json(const DoubleRayDescriptor& d);

// Reads {"skeleton": "rro" | "double_ray", ...} records.
std::variant<RightRayDescriptor, DoubleRayDescriptor> descriptor_from_json(const json& j);

json symbolic_verdict_to_json(const SymbolicVerdict& v);

// Graphviz rendering of a truncation; boundary vertices are dashed.
std::string materialization_to_dot(const Materialization& m);

}  // namespace cayleyfn
