#include <cayleyfn/oracle.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace cayleyfn {

bool is_associative(const OperationTable& t) {
  const int n = t.size;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = t.entry(x, y);
      for (int z = 0; z < n; ++z) {
        if (t.entry(xy, z) != t.entry(x, t.entry(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

constexpr int kOracleCap = 4;
constexpr std::int8_t kUnset = -1;

// True while no fully determined triple violates associativity. Cheap enough
// at n <= 4 to rescan after every assignment.
bool partial_ok(const OperationTable& t) {
  const int n = t.size;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = t.entry(x, y);
      if (xy == kUnset) {
        continue;
      }
      for (int z = 0; z < n; ++z) {
        const int yz = t.entry(y, z);
        if (yz == kUnset) {
          continue;
        }
        const int lhs = t.entry(xy, z);
        const int rhs = t.entry(x, yz);
        if (lhs == kUnset || rhs == kUnset) {
          continue;
        }
        if (lhs != rhs) {
          return false;
        }
      }
    }
  }
  return true;
}

bool fill(OperationTable& t, const std::vector<int>& free_cells, std::size_t at) {
  if (at == free_cells.size()) {
    return true;
  }
  const int cell = free_cells[at];
  for (int v = 0; v < t.size; ++v) {
    t.cells[cell] = static_cast<std::int8_t>(v);
    if (partial_ok(t) && fill(t, free_cells, at + 1)) {
      return true;
    }
  }
  t.cells[cell] = kUnset;
  return false;
}

}  // namespace

std::optional<TranslationWitness> find_witness_table(const Transformation& f) {
  const int n = f.size();
  if (n > kOracleCap) {
    throw CarrierTooLargeError("witness search is exhaustive and capped at " +
                               std::to_string(kOracleCap) + " points, got " +
                               std::to_string(n));
  }
  for (int a = 0; a < n; ++a) {
    OperationTable t;
    t.size = n;
    t.cells.assign(static_cast<std::size_t>(n) * n, kUnset);
    for (int x = 0; x < n; ++x) {
      t.cells[a * n + x] = static_cast<std::int8_t>(f(x));
    }
    std::vector<int> free_cells;
    for (int r = 0; r < n; ++r) {
      if (r == a) {
        continue;
      }
      for (int c = 0; c < n; ++c) {
        free_cells.push_back(r * n + c);
      }
    }
    if (partial_ok(t) && fill(t, free_cells, 0)) {
      if (!is_associative(t)) {
        throw DeciderDisagreement("witness search produced a non-associative table");
      }
      return TranslationWitness{std::move(t), a};
    }
  }
  return std::nullopt;
}

std::vector<Transformation> all_cayley_functions(int n) {
  if (n > 3) {
    throw CarrierTooLargeError(
        "full table enumeration is capped at 3 points, got " + std::to_string(n));
  }
  if (n < 1) {
    throw Error("a transformation needs a non-empty carrier");
  }
  std::set<std::vector<int>> rows;
  OperationTable t;
  t.size = n;
  t.cells.assign(static_cast<std::size_t>(n) * n, 0);
  while (true) {
    if (is_associative(t)) {
      for (int a = 0; a < n; ++a) {
        std::vector<int> row(n);
        for (int x = 0; x < n; ++x) {
          row[x] = t.entry(a, x);
        }
        rows.insert(std::move(row));
      }
    }
    // Odometer over all n^(n*n) tables.
    std::size_t i = 0;
    for (; i < t.cells.size(); ++i) {
      if (++t.cells[i] < n) {
        break;
      }
      t.cells[i] = 0;
    }
    if (i == t.cells.size()) {
      break;
    }
  }
  std::vector<Transformation> result;
  result.reserve(rows.size());
  for (const auto& row : rows) {
    result.emplace_back(row);
  }
  return result;
}

std::string table_to_string(const OperationTable& t,
                            const std::vector<std::string>& labels) {
  std::ostringstream out;
  for (int a = 0; a < t.size; ++a) {
    for (int x = 0; x < t.size; ++x) {
      if (x > 0) {
        out << ' ';
      }
      const int v = t.entry(a, x);
      if (labels.empty()) {
        out << v;
      } else {
        out << labels.at(v);
      }
    }
    out << '\n';
  }
  return out.str();
}

json table_to_json(const OperationTable& t) {
  json rows = json::array();
  for (int a = 0; a < t.size; ++a) {
    json row = json::array();
    for (int x = 0; x < t.size; ++x) {
      row.push_back(t.entry(a, x));
    }
    rows.push_back(std::move(row));
  }
  json j = json::object();
  j["size"] = t.size;
  j["table"] = std::move(rows);
  return j;
}

}  // namespace cayleyfn
