#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include <cayleyfn/errors.hpp>

namespace cayleyfn {

using json = nlohmann::ordered_json;

// A total map from {0,...,n-1} to itself, n >= 1. Instances are immutable.
//
// Labels are presentation metadata only: equality, composition and every
// structural question ignore them. A map whose labels are exactly
// "0","1",...,"n-1" is normalised to the unlabelled form.
class Transformation {
 public:
  explicit Transformation(std::vector<int> images,
                          std::optional<std::vector<std::string>> labels = std::nullopt);

  static Transformation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_.at(x); }
  const std::vector<int>& images() const { return images_; }

  bool has_labels() const { return labels_.has_value(); }
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }
  // The label of x, falling back to its decimal index.
  std::string label(int x) const;
  // Index of a label, if this map carries labels and one matches.
  std::optional<int> index_of(std::string_view label) const;

  Transformation with_labels(std::vector<std::string> labels) const;
  Transformation without_labels() const;

  bool operator==(const Transformation& other) const { return images_ == other.images_; }
  bool operator!=(const Transformation& other) const { return !(*this == other); }

 private:
  std::vector<int> images_;
  std::optional<std::vector<std::string>> labels_;
};

// x -> f(g(x)). Throws SizeMismatchError unless both maps share a carrier.
Transformation compose(const Transformation& f, const Transformation& g);

// f applied `exponent` times; exponent 0 gives the identity.
Transformation power(const Transformation& f, int exponent);

// The weakly decreasing chain img(f^0) >= img(f^1) >= ... listed up to the
// first power whose image stops shrinking. Each set is ascending; the last
// index equals the stabilizer of f.
std::vector<std::vector<int>> image_chain(const Transformation& f);

bool is_idempotent(const Transformation& f);
bool commutes(const Transformation& f, const Transformation& g);

// Accepts either a two-row table "x1 x2 ... / y1 y2 ..." (top row labels,
// bottom row their images, whitespace insensitive) or a JSON record
// {"labels": [...], "map": [...]} with 0-based images. Labels are non-empty
// tokens without whitespace or '/'.
Transformation parse_transformation(std::string_view text);

// Two-row table form; parse_transformation(format_transformation(f)) == f.
std::string format_transformation(const Transformation& f);

json transformation_to_json(const Transformation& f);
Transformation transformation_from_json(const json& j);

}  // namespace cayleyfn
