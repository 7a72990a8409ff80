#include <cayleyfn/symbolic.hpp>

#include <algorithm>
#include <sstream>

namespace cayleyfn {

std::string to_string(SymbolicStatus status) {
  switch (status) {
    case SymbolicStatus::Satisfied:
      return "Satisfied";
    case SymbolicStatus::Violated:
      return "Violated";
    case SymbolicStatus::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

namespace {

constexpr int kUnboundedCopies = 2;

void validate_spec(const BranchSpec& spec, bool allow_infinite) {
  if (spec.kind == BranchKind::Infinite) {
    if (!allow_infinite) {
      throw InfiniteBranchError("this skeleton admits finite branches only");
    }
  } else if (spec.length < 1) {
    throw Error("finite branches need length at least 1");
  }
  if (spec.multiplicity && *spec.multiplicity < 1) {
    throw Error("branch multiplicity must be positive");
  }
}

void validate_tail(const TailRule& tail, bool allow_infinite) {
  if (tail.period < 1) {
    throw Error("tail period must be positive");
  }
  if (static_cast<int>(tail.pattern.size()) != tail.period) {
    throw Error("tail pattern must list one branch group per period slot");
  }
  for (const auto& group : tail.pattern) {
    for (const auto& spec : group) {
      validate_spec(spec, allow_infinite);
    }
  }
}

void validate(const RightRayDescriptor& d) {
  for (const auto& group : d.prefix) {
    for (const auto& spec : group) {
      validate_spec(spec, /*allow_infinite=*/false);
    }
  }
  if (!d.prefix.empty() && !d.prefix.front().empty()) {
    throw Error("a maximal right ray admits no branch at position 0");
  }
  if (d.tail) {
    validate_tail(*d.tail, /*allow_infinite=*/false);
    if (d.unbounded_growth) {
      throw Error("unbounded growth and a periodic tail are mutually exclusive");
    }
  }
}

void validate(const DoubleRayDescriptor& d) {
  if (d.radius < 0) {
    throw Error("window radius must be non-negative");
  }
  if (static_cast<int>(d.window.size()) != 2 * d.radius + 1) {
    throw Error("window must list one branch group per position -radius..radius");
  }
  for (const auto& group : d.window) {
    for (const auto& spec : group) {
      validate_spec(spec, /*allow_infinite=*/true);
    }
  }
  if (d.left_tail) {
    validate_tail(*d.left_tail, /*allow_infinite=*/true);
  }
  if (d.right_tail) {
    validate_tail(*d.right_tail, /*allow_infinite=*/true);
  }
}

const BranchGroup kEmptyGroup;

const BranchGroup& group_at(const RightRayDescriptor& d, long long pos) {
  if (pos < static_cast<long long>(d.prefix.size())) {
    return d.prefix[static_cast<std::size_t>(pos)];
  }
  if (d.tail) {
    auto slot = (pos - static_cast<long long>(d.prefix.size())) % d.tail->period;
    return d.tail->pattern[static_cast<std::size_t>(slot)];
  }
  return kEmptyGroup;
}

const BranchGroup& group_at(const DoubleRayDescriptor& d, long long pos) {
  if (pos >= -d.radius && pos <= d.radius) {
    return d.window[static_cast<std::size_t>(pos + d.radius)];
  }
  if (pos > d.radius) {
    if (d.right_tail) {
      auto slot = (pos - d.radius - 1) % d.right_tail->period;
      return d.right_tail->pattern[static_cast<std::size_t>(slot)];
    }
  } else if (d.left_tail) {
    auto slot = (-static_cast<long long>(d.radius) - 1 - pos) % d.left_tail->period;
    return d.left_tail->pattern[static_cast<std::size_t>(slot)];
  }
  return kEmptyGroup;
}

bool has_infinite(const BranchGroup& group) {
  return std::any_of(group.begin(), group.end(), [](const BranchSpec& s) {
    return s.kind == BranchKind::Infinite;
  });
}

bool has_finite_of_length(const BranchGroup& group, int length) {
  return std::any_of(group.begin(), group.end(), [&](const BranchSpec& s) {
    return s.kind == BranchKind::Finite && s.length == length;
  });
}

}  // namespace

SymbolicVerdict check_right_ray_condition(const RightRayDescriptor& d) {
  validate(d);
  SymbolicVerdict v;
  for (std::size_t i = 0; i < d.prefix.size(); ++i) {
    for (const auto& spec : d.prefix[i]) {
      if (spec.length > static_cast<int>(i)) {
        v.status = SymbolicStatus::Violated;
        v.witness_position = static_cast<long long>(i);
        std::ostringstream msg;
        msg << "a branch of length " << spec.length << " attaches at position "
            << i;
        v.detail = msg.str();
        return v;
      }
    }
  }
  const long long tail_start = static_cast<long long>(d.prefix.size());
  if (d.unbounded_growth) {
    v.status = SymbolicStatus::Violated;
    v.witness_position = tail_start;
    v.detail = "branch lengths grow without bound past the prefix";
    return v;
  }
  if (d.tail) {
    // Slot lengths are fixed while the position index grows, so the first
    // position each slot governs decides all later ones.
    for (int j = 0; j < d.tail->period; ++j) {
      const long long pos = tail_start + j;
      for (const auto& spec : d.tail->pattern[static_cast<std::size_t>(j)]) {
        if (spec.length > pos) {
          v.status = SymbolicStatus::Violated;
          v.witness_position = pos;
          std::ostringstream msg;
          msg << "a branch of length " << spec.length << " attaches at position "
              << pos;
          v.detail = msg.str();
          return v;
        }
      }
    }
  }
  v.status = SymbolicStatus::Satisfied;
  v.detail = "every branch of length m attaches at a position of index at least m";
  return v;
}

SymbolicVerdict check_double_ray_condition(const DoubleRayDescriptor& d, int max_twig) {
  validate(d);
  if (max_twig < 0) {
    throw Error("twig bound must be non-negative");
  }
  SymbolicVerdict v;

  // Positions grow without bound to the right, so infinite branches must
  // recur in every right-tail slot no matter where the witness sits.
  if (!d.right_tail) {
    v.status = SymbolicStatus::Violated;
    v.witness_position = static_cast<long long>(d.radius) + 1;
    v.detail = "no infinite branch occurs past the window";
    return v;
  }
  for (int j = 0; j < d.right_tail->period; ++j) {
    if (!has_infinite(d.right_tail->pattern[static_cast<std::size_t>(j)])) {
      v.status = SymbolicStatus::Violated;
      v.witness_position = static_cast<long long>(d.radius) + 1 + j;
      v.detail = "infinitely many positions past the window lack an infinite branch";
      return v;
    }
  }

  // Periodicity makes the scan below complete: a workable witness deeper in
  // a tail has a first-period twin with the same slot that works too.
  const long long low = -static_cast<long long>(d.radius) -
                        (d.left_tail ? d.left_tail->period : 0);
  const long long high = static_cast<long long>(d.radius) + d.right_tail->period;

  bool found_candidate = false;
  long long last_blocker = 0;
  for (long long i = low; i <= high; ++i) {
    if (max_twig > 0 && !has_finite_of_length(group_at(d, i), max_twig)) {
      continue;
    }
    found_candidate = true;
    bool clear = true;
    for (long long j = i + 1; j <= d.radius; ++j) {
      if (!has_infinite(group_at(d, j))) {
        clear = false;
        last_blocker = j;
        break;
      }
    }
    if (clear) {
      v.status = SymbolicStatus::Satisfied;
      v.witness_position = i;
      std::ostringstream msg;
      if (max_twig > 0) {
        msg << "position " << i << " carries a finite branch of length "
            << max_twig << " and every later position carries an infinite branch";
      } else {
        msg << "every position past " << i << " carries an infinite branch";
      }
      v.detail = msg.str();
      return v;
    }
  }

  v.status = SymbolicStatus::Violated;
  if (!found_candidate) {
    v.witness_position = static_cast<long long>(d.radius) + 1;
    std::ostringstream msg;
    msg << "no position carries a finite branch of length " << max_twig;
    v.detail = msg.str();
  } else {
    v.witness_position = last_blocker;
    std::ostringstream msg;
    msg << "every candidate position is followed by one without an infinite branch,"
        << " first obstruction at position " << last_blocker;
    v.detail = msg.str();
  }
  return v;
}

SymbolicVerdict check_double_ray_finite_branches(const DoubleRayDescriptor& d,
                                                 int max_branch) {
  validate(d);
  if (max_branch < 0) {
    throw Error("branch bound must be non-negative");
  }
  const long long low = -static_cast<long long>(d.radius) -
                        (d.left_tail ? d.left_tail->period : 0);
  const long long high = static_cast<long long>(d.radius) +
                         (d.right_tail ? d.right_tail->period : 0);
  for (long long p = low; p <= high; ++p) {
    if (has_infinite(group_at(d, p))) {
      throw InfiniteBranchError("the descriptor carries an infinite branch");
    }
  }

  SymbolicVerdict v;
  if (max_branch == 0) {
    v.status = SymbolicStatus::Satisfied;
    v.detail = "no branch is required when the longest branch length is 0";
    return v;
  }
  int longest = 0;
  long long longest_at = 0;
  for (long long p = low; p <= high; ++p) {
    for (const auto& spec : group_at(d, p)) {
      if (spec.length == max_branch) {
        v.status = SymbolicStatus::Satisfied;
        v.witness_position = p;
        std::ostringstream msg;
        msg << "position " << p << " carries a finite branch of length " << max_branch;
        v.detail = msg.str();
        return v;
      }
      if (spec.length > longest) {
        longest = spec.length;
        longest_at = p;
      }
    }
  }
  v.status = SymbolicStatus::Violated;
  v.witness_position = longest_at;
  std::ostringstream msg;
  msg << "no position carries a finite branch of length " << max_branch
      << "; the longest present has length " << longest;
  v.detail = msg.str();
  return v;
}

SymbolicVerdict quotient_right_ray_criterion(const RightRayDescriptor& d) {
  auto c = check_right_ray_condition(d);
  SymbolicVerdict v;
  if (c.status == SymbolicStatus::Satisfied) {
    v.status = SymbolicStatus::Satisfied;
    v.detail = "ray condition holds on the quotient; the fixed vertices lift it and "
               "the underlying map is Cayley";
  } else {
    v.status = SymbolicStatus::Unknown;
    v.witness_position = c.witness_position;
    v.detail = "ray condition fails (" + c.detail +
               "); the criterion is sufficient only, the underlying map may still be Cayley";
  }
  return v;
}

SymbolicVerdict quotient_double_ray_criterion(const DoubleRayDescriptor& d,
                                              int stabilizer) {
  auto c = check_double_ray_condition(d, stabilizer);
  SymbolicVerdict v;
  if (c.status == SymbolicStatus::Satisfied) {
    v.status = SymbolicStatus::Satisfied;
    v.witness_position = c.witness_position;
    v.detail = "double-ray condition holds on the quotient; the underlying map is Cayley";
  } else {
    v.status = SymbolicStatus::Unknown;
    v.witness_position = c.witness_position;
    v.detail = "double-ray condition fails (" + c.detail +
               "); the criterion is sufficient only, the underlying map may still be Cayley";
  }
  return v;
}

namespace {

void validate_counts_tail(const std::optional<SatelliteTail>& counts,
                          const std::optional<TailRule>& tail,
                          const char* side) {
  if (tail.has_value() != counts.has_value()) {
    throw Error(std::string("satellite counts must cover exactly the ") + side +
                " tail of the descriptor");
  }
  if (!counts) {
    return;
  }
  if (counts->period != tail->period ||
      static_cast<int>(counts->pattern.size()) != counts->period) {
    throw Error(std::string("satellite count period must match the ") + side +
                " tail period");
  }
  for (int c : counts->pattern) {
    if (c < 0) {
      throw Error("satellite counts must be non-negative");
    }
  }
}

void validate_counts_spine(const std::vector<int>& spine, std::size_t expected) {
  if (spine.size() != expected) {
    throw Error("satellite counts must list one entry per spine position");
  }
  for (int c : spine) {
    if (c < 0) {
      throw Error("satellite counts must be non-negative");
    }
  }
}

}  // namespace

RightRayDescriptor lift_fixed_points(const RightRayDescriptor& d,
                                     const SatelliteCounts& counts) {
  validate(d);
  validate_counts_spine(counts.spine, d.prefix.size());
  validate_counts_tail(counts.tail, d.tail, "right");
  if (counts.left_tail) {
    throw Error("a right ray has no left tail");
  }
  // One fixed vertex per quotient node: the lift reproduces the skeleton and
  // every branch at its own length.
  return d;
}

DoubleRayDescriptor lift_fixed_points(const DoubleRayDescriptor& d,
                                      const SatelliteCounts& counts) {
  validate(d);
  validate_counts_spine(counts.spine, d.window.size());
  validate_counts_tail(counts.tail, d.right_tail, "right");
  validate_counts_tail(counts.left_tail, d.left_tail, "left");
  return d;
}

namespace {

struct Builder {
  std::vector<int> images;
  std::vector<std::string> labels;
  std::vector<int> boundary;

  int add_vertex(std::string label) {
    images.push_back(-1);
    labels.push_back(std::move(label));
    return static_cast<int>(images.size()) - 1;
  }
};

// Attaches every branch of `group` at the spine vertex `attach`, labelling
// by spine position. Truncated infinite branches get `cut_length` vertices
// and their cut end marked as boundary.
void attach_group(Builder& b, const BranchGroup& group, long long pos, int attach,
                  int cut_length) {
  int branch_index = 0;
  for (const auto& spec : group) {
    const int copies = spec.multiplicity ? *spec.multiplicity : kUnboundedCopies;
    for (int copy = 0; copy < copies; ++copy, ++branch_index) {
      const bool finite = spec.kind == BranchKind::Finite;
      const int len = finite ? spec.length : cut_length;
      int previous = -1;
      for (int k2 = 0; k2 < len; ++k2) {
        std::ostringstream label;
        label << "x" << pos << (finite ? "b" : "i") << branch_index << "n" << k2;
        int v = b.add_vertex(label.str());
        if (k2 == 0 && !finite) {
          b.boundary.push_back(v);
        }
        if (previous >= 0) {
          b.images[previous] = v;
        }
        previous = v;
      }
      if (previous >= 0) {
        b.images[previous] = attach;
      }
    }
  }
}

}  // namespace

Materialization materialize(const RightRayDescriptor& d, int radius) {
  validate(d);
  if (d.unbounded_growth) {
    throw Error("a descriptor with unbounded growth cannot be materialized");
  }
  if (radius + 1 < static_cast<int>(d.prefix.size())) {
    throw RadiusTooSmallError("radius " + std::to_string(radius) +
                              " does not cover the prefix of extent " +
                              std::to_string(d.prefix.size() - 1));
  }

  Builder b;
  std::map<long long, int> spine;
  for (long long pos = 0; pos <= radius; ++pos) {
    std::ostringstream label;
    label << "x" << pos;
    spine[pos] = b.add_vertex(label.str());
  }
  for (long long pos = 0; pos < radius; ++pos) {
    b.images[spine[pos]] = spine[pos + 1];
  }
  b.images[spine[radius]] = spine[radius];
  b.boundary.push_back(spine[radius]);

  for (long long pos = 0; pos <= radius; ++pos) {
    attach_group(b, group_at(d, pos), pos, spine[pos], radius);
  }

  std::sort(b.boundary.begin(), b.boundary.end());
  return Materialization{Transformation(std::move(b.images), std::move(b.labels)),
                         std::move(b.boundary), std::move(spine)};
}

Materialization materialize(const DoubleRayDescriptor& d, int radius) {
  validate(d);
  if (radius < d.radius) {
    throw RadiusTooSmallError("radius " + std::to_string(radius) +
                              " does not cover the window of radius " +
                              std::to_string(d.radius));
  }

  Builder b;
  std::map<long long, int> spine;
  for (long long pos = -radius; pos <= radius; ++pos) {
    std::ostringstream label;
    label << "x" << pos;
    spine[pos] = b.add_vertex(label.str());
  }
  for (long long pos = -radius; pos < radius; ++pos) {
    b.images[spine[pos]] = spine[pos + 1];
  }
  b.images[spine[radius]] = spine[radius];
  b.boundary.push_back(spine[radius]);
  b.boundary.push_back(spine[-radius]);

  const int cut_length = std::max(radius, 1);
  for (long long pos = -radius; pos <= radius; ++pos) {
    attach_group(b, group_at(d, pos), pos, spine[pos], cut_length);
  }

  std::sort(b.boundary.begin(), b.boundary.end());
  b.boundary.erase(std::unique(b.boundary.begin(), b.boundary.end()), b.boundary.end());
  return Materialization{Transformation(std::move(b.images), std::move(b.labels)),
                         std::move(b.boundary), std::move(spine)};
}

namespace {

json spec_to_json(const BranchSpec& spec) {
  json j = json::object();
  j["kind"] = spec.kind == BranchKind::Finite ? "finite" : "infinite";
  if (spec.kind == BranchKind::Finite) {
    j["length"] = spec.length;
  }
  j["multiplicity"] = spec.multiplicity ? json(*spec.multiplicity) : json("unbounded");
  return j;
}

json group_to_json(const BranchGroup& group) {
  json j = json::array();
  for (const auto& spec : group) {
    j.push_back(spec_to_json(spec));
  }
  return j;
}

json tail_to_json(const TailRule& tail) {
  json pattern = json::array();
  for (const auto& group : tail.pattern) {
    pattern.push_back(group_to_json(group));
  }
  json j = json::object();
  j["period"] = tail.period;
  j["pattern"] = std::move(pattern);
  return j;
}

BranchSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ParseError("branch entries need a \"kind\"");
  }
  BranchSpec spec;
  const auto kind = j["kind"].get<std::string>();
  if (kind == "finite") {
    spec.kind = BranchKind::Finite;
    if (!j.contains("length") || !j["length"].is_number_integer()) {
      throw ParseError("finite branches need an integer \"length\"");
    }
    spec.length = j["length"].get<int>();
  } else if (kind == "infinite") {
    spec.kind = BranchKind::Infinite;
    spec.length = 0;
  } else {
    throw ParseError("branch kind must be \"finite\" or \"infinite\"");
  }
  if (j.contains("multiplicity")) {
    if (j["multiplicity"].is_string()) {
      if (j["multiplicity"].get<std::string>() != "unbounded") {
        throw ParseError("multiplicity must be an integer or \"unbounded\"");
      }
      spec.multiplicity = std::nullopt;
    } else if (j["multiplicity"].is_number_integer()) {
      spec.multiplicity = j["multiplicity"].get<int>();
    } else {
      throw ParseError("multiplicity must be an integer or \"unbounded\"");
    }
  }
  return spec;
}

BranchGroup group_from_json(const json& j) {
  if (!j.is_array()) {
    throw ParseError("branch groups must be arrays");
  }
  BranchGroup group;
  for (const auto& spec : j) {
    group.push_back(spec_from_json(spec));
  }
  return group;
}

TailRule tail_from_json(const json& j) {
  if (!j.is_object() || !j.contains("period") || !j.contains("pattern")) {
    throw ParseError("tails need \"period\" and \"pattern\"");
  }
  TailRule tail;
  tail.period = j["period"].get<int>();
  for (const auto& group : j["pattern"]) {
    tail.pattern.push_back(group_from_json(group));
  }
  return tail;
}

}  // namespace

json descriptor_to_json(const RightRayDescriptor& d) {
  json prefix = json::array();
  for (const auto& group : d.prefix) {
    prefix.push_back(group_to_json(group));
  }
  json j = json::object();
  j["skeleton"] = "rro";
  j["prefix"] = std::move(prefix);
  j["tails"] = d.tail ? tail_to_json(*d.tail) : json(nullptr);
  j["unbounded_growth"] = d.unbounded_growth;
  return j;
}

json descriptor_to_json(const DoubleRayDescriptor& d) {
  json window = json::array();
  for (const auto& group : d.window) {
    window.push_back(group_to_json(group));
  }
  json tails = json::object();
  tails["left"] = d.left_tail ? tail_to_json(*d.left_tail) : json(nullptr);
  tails["right"] = d.right_tail ? tail_to_json(*d.right_tail) : json(nullptr);
  json j = json::object();
  j["skeleton"] = "double_ray";
  j["radius"] = d.radius;
  j["window"] = std::move(window);
  j["tails"] = std::move(tails);
  return j;
}

std::variant<RightRayDescriptor, DoubleRayDescriptor> descriptor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("skeleton")) {
    throw ParseError("descriptors need a \"skeleton\" field");
  }
  const auto skeleton = j["skeleton"].get<std::string>();
  if (skeleton == "rro") {
    RightRayDescriptor d;
    if (!j.contains("prefix") || !j["prefix"].is_array()) {
      throw ParseError("right-ray descriptors need a \"prefix\" array");
    }
    for (const auto& group : j["prefix"]) {
      d.prefix.push_back(group_from_json(group));
    }
    if (j.contains("tails") && !j["tails"].is_null()) {
      d.tail = tail_from_json(j["tails"]);
    }
    if (j.contains("unbounded_growth")) {
      d.unbounded_growth = j["unbounded_growth"].get<bool>();
    }
    try {
      validate(d);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
    return d;
  }
  if (skeleton == "double_ray") {
    DoubleRayDescriptor d;
    if (!j.contains("radius") || !j.contains("window")) {
      throw ParseError("double-ray descriptors need \"radius\" and \"window\"");
    }
    d.radius = j["radius"].get<int>();
    for (const auto& group : j["window"]) {
      d.window.push_back(group_from_json(group));
    }
    if (j.contains("tails") && j["tails"].is_object()) {
      const auto& tails = j["tails"];
      if (tails.contains("left") && !tails["left"].is_null()) {
        d.left_tail = tail_from_json(tails["left"]);
      }
      if (tails.contains("right") && !tails["right"].is_null()) {
        d.right_tail = tail_from_json(tails["right"]);
      }
    }
    try {
      validate(d);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
    return d;
  }
  throw ParseError("unknown skeleton \"" + skeleton + "\"");
}

json symbolic_verdict_to_json(const SymbolicVerdict& v) {
  json j = json::object();
  j["status"] = to_string(v.status);
  j["witness_position"] = v.witness_position ? json(*v.witness_position) : json(nullptr);
  j["detail"] = v.detail;
  return j;
}

std::string materialization_to_dot(const Materialization& m) {
  std::vector<char> boundary(m.map.size(), 0);
  for (int v : m.boundary) {
    boundary[v] = 1;
  }
  std::ostringstream out;
  out << "digraph truncation {\n";
  for (int x = 0; x < m.map.size(); ++x) {
    out << "  v" << x << " [label=\"" << m.map.label(x) << "\"";
    if (boundary[x]) {
      out << ", style=dashed";
    }
    out << "];\n";
  }
  for (int x = 0; x < m.map.size(); ++x) {
    out << "  v" << x << " -> v" << m.map(x) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cayleyfn
