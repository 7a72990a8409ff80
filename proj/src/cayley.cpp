#include <cayleyfn/cayley.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cayleyfn {

std::string to_string(CayleyStatus status) {
  switch (status) {
    case CayleyStatus::Cayley:
      return "Cayley";
    case CayleyStatus::NotCayley:
      return "NotCayley";
    case CayleyStatus::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

namespace {

long long cycle_length_lcm(const ComponentDecomposition& dec) {
  long long l = 1;
  for (const auto& comp : dec.components) {
    l = std::lcm(l, static_cast<long long>(comp.cycle.size()));
  }
  return l;
}

// f^m == f^n holds exactly when m == n, or both exponents are at least the
// stabilizer and m == n (mod lcm of cycle lengths): past the stabilizer all
// values live on cycles and the power sequence is periodic.
bool powers_equal(long long m, long long n, int s, long long period) {
  if (m == n) {
    return true;
  }
  return m >= s && n >= s && (m - n) % period == 0;
}

}  // namespace

CayleyVerdict zupnik_criterion(const Transformation& f) {
  auto dec = decompose(f);
  int s = 0;
  for (int d : dec.depth) {
    s = std::max(s, d);
  }
  const long long period = cycle_length_lcm(dec);
  const long long window = s + period;

  // A witnessing semigroup pins a = the translating element, and then
  // f^m(a) = a^(m+1). An orbit coincidence f^m(a) = f^n(a) therefore only
  // forces the translations one step later, f^(m+1) = f^(n+1), which is why
  // a may sit one level below the deepest vertices.
  for (int a = 0; a < f.size(); ++a) {
    const auto& cycle = dec.components[dec.vertex_to_component[a]].cycle;
    const long long cycle_len = static_cast<long long>(cycle.size());
    const int depth = dec.depth[a];

    // The orbit of a visits distinct vertices until it enters its cycle, so
    // the coincidences f^m(a) = f^n(a) with m < n are exactly the pairs with
    // m >= depth and n - m a multiple of the cycle length. The first such
    // pair always fits inside the window.
    bool ok = true;
    if (window <= 512) {
      for (long long m = depth; m <= window && ok; ++m) {
        for (long long n = m + cycle_len; n <= window && ok; n += cycle_len) {
          if (!powers_equal(m + 1, n + 1, s, period)) {
            ok = false;
          }
        }
      }
    } else {
      // The scan above succeeds exactly when the first coincidence already
      // lands in the periodic regime of the powers; spelled out, the orbit
      // tail reaches depth s - 1 and the cycle realizes the full period.
      ok = depth >= s - 1 && cycle_len == period;
    }

    if (ok) {
      CayleyVerdict v2;
      v2.status = CayleyStatus::Cayley;
      v2.criterion = "power-criterion";
      v2.witness = a;
      std::ostringstream detail;
      detail << "orbit of " << f.label(a) << " (tail " << depth << ", period "
             << cycle_len << ") forces the shifted power equalities";
      v2.details = detail.str();
      return v2;
    }
  }

  CayleyVerdict v2;
  v2.status = CayleyStatus::NotCayley;
  v2.criterion = "power-criterion";
  std::ostringstream detail;
  detail << "no orbit forces the shifted power equalities (stabilizer " << s
         << ", period " << period << ")";
  v2.details = detail.str();
  return v2;
}

CayleyVerdict digraph_criterion(const Transformation& f) {
  auto dec = decompose(f);
  std::set<int> lengths;
  for (const auto& comp : dec.components) {
    lengths.insert(static_cast<int>(comp.cycle.size()));
  }
  const int longest = *lengths.rbegin();

  CayleyVerdict v;
  v.criterion = "digraph-criterion";

  for (int k : lengths) {
    if (longest % k != 0) {
      v.status = CayleyStatus::NotCayley;
      std::ostringstream detail;
      detail << "divisibility: cycle length " << k
             << " does not divide the maximum " << longest;
      v.details = detail.str();
      return v;
    }
  }

  int deepest = 0;
  for (const auto& comp : dec.components) {
    for (const auto& branch : comp.branches) {
      deepest = std::max(deepest, branch.length());
    }
  }
  // The translating element needs depth >= s - 1 on a cycle realizing the
  // full period, so only stabilizers of 2 or more constrain the branches. A
  // stabilizer of 1 is covered by any vertex of the longest cycle itself.
  int anchor = -1;
  if (deepest >= 2) {
    for (const auto& comp : dec.components) {
      if (static_cast<int>(comp.cycle.size()) != longest) {
        continue;
      }
      for (const auto& branch : comp.branches) {
        if (branch.length() >= deepest - 1) {
          anchor = std::max(anchor, branch.length());
        }
      }
    }
    if (anchor < 0) {
      v.status = CayleyStatus::NotCayley;
      std::ostringstream detail;
      detail << "branch-placement: no cycle of length " << longest
             << " carries a branch of length at least " << deepest - 1;
      v.details = detail.str();
      return v;
    }
  }

  v.status = CayleyStatus::Cayley;
  std::ostringstream detail;
  detail << "all cycle lengths divide " << longest;
  if (anchor >= 0) {
    detail << "; a branch of length " << anchor
           << " attaches to a cycle of length " << longest;
  }
  v.details = detail.str();
  return v;
}

CayleyVerdict is_cayley(const Transformation& f) {
  CayleyVerdict structural = digraph_criterion(f);
  CayleyVerdict orbital = zupnik_criterion(f);
  if (structural.status != orbital.status) {
    throw DeciderDisagreement(
        "finite deciders disagree on " + format_transformation(f) +
        ": digraph says " + to_string(structural.status) + ", powers say " +
        to_string(orbital.status));
  }
  CayleyVerdict merged = structural;
  merged.criterion = "digraph-criterion+power-criterion";
  merged.witness = orbital.witness;
  if (!orbital.details.empty() && orbital.status == CayleyStatus::Cayley) {
    merged.details += "; " + orbital.details;
  }
  return merged;
}

json verdict_to_json(const CayleyVerdict& v) {
  json j = json::object();
  j["status"] = to_string(v.status);
  j["criterion"] = v.criterion;
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  j["details"] = v.details;
  return j;
}

}  // namespace cayleyfn
