#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <cayleyfn/transformation.hpp>

namespace cayleyfn {

// An explicit binary operation on {0,...,size-1}; entry(a, x) is a*x.
struct OperationTable {
  int size = 0;
  std::vector<std::int8_t> cells;  // row-major

  int entry(int a, int x) const { return cells[a * size + x]; }
};

// Checks all size^3 triples.
bool is_associative(const OperationTable& t);

struct TranslationWitness {
  OperationTable table;
  // Row `element` of the table equals the probed map.
  int element = 0;
};

// Exhaustive search for an associative operation with a row equal to f.
// For each candidate row index the remaining cells are filled depth-first,
// pruning on any fully determined associativity triple. Returns the first
// witness found, or nothing once the whole space is exhausted (which proves
// f is not Cayley). Throws CarrierTooLargeError for carriers above 4.
std::optional<TranslationWitness> find_witness_table(const Transformation& f);

// All Cayley functions on n points, collected from the rows of every
// associative table on n points. Ascending by image tuple. n <= 3.
std::vector<Transformation> all_cayley_functions(int n);

// n rows of n labels; indices when no labels are supplied.
std::string table_to_string(const OperationTable& t,
                            const std::vector<std::string>& labels = {});
json table_to_json(const OperationTable& t);

}  // namespace cayleyfn
