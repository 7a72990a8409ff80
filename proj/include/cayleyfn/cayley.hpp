#pragma once

#include <optional>
#include <string>

#include <cayleyfn/digraph.hpp>
#include <cayleyfn/transformation.hpp>

namespace cayleyfn {

enum class CayleyStatus { Cayley, NotCayley, Unknown };

std::string to_string(CayleyStatus status);

struct CayleyVerdict {
  CayleyStatus status = CayleyStatus::Unknown;
  std::string criterion;
  // A vertex whose orbit certifies the power criterion, when one exists.
  std::optional<int> witness;
  std::string details;
};

// Decides whether f is an inner left translation of some associative
// operation by probing orbits: f is Cayley exactly when some vertex a
// satisfies f^m(a) = f^n(a) => f^(m+1) = f^(n+1) for all m < n. The shift
// matters: f^m(a) = a^(m+1) in the witnessing semigroup, so an orbit
// coincidence only identifies the translations one step later. The
// quantifier is bounded by s + lcm(cycle lengths).
CayleyVerdict zupnik_criterion(const Transformation& f);

// Decides the same question from the digraph alone: every distinct cycle
// length must divide the largest one, and when the stabilizer s is 2 or
// more, some cycle of maximal length must carry a branch of length at least
// s - 1 (the translating element sits at depth s - 1 or deeper on such a
// cycle; depth s - 1 suffices because orbit coincidences shift by one).
CayleyVerdict digraph_criterion(const Transformation& f);

// Runs both finite deciders and requires agreement; carries the digraph
// explanation together with the power-criterion witness.
CayleyVerdict is_cayley(const Transformation& f);

json verdict_to_json(const CayleyVerdict& v);

}  // namespace cayleyfn
