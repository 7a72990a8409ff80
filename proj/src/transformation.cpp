#include <cayleyfn/transformation.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace cayleyfn {

namespace {

bool labels_are_canonical(const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != std::to_string(i)) {
      return false;
    }
  }
  return true;
}

void validate_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.size() != n) {
    throw Error("expected " + std::to_string(n) + " labels, got " +
                std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) {
      throw Error("labels must be non-empty");
    }
    for (char c : l) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '/') {
        throw Error("label '" + l + "' contains whitespace or '/'");
      }
    }
    if (!seen.insert(l).second) {
      throw Error("duplicate label '" + l + "'");
    }
  }
}

}  // namespace

Transformation::Transformation(std::vector<int> images,
                               std::optional<std::vector<std::string>> labels)
    : images_(std::move(images)), labels_(std::move(labels)) {
  if (images_.empty()) {
    throw Error("a transformation needs a non-empty carrier");
  }
  const int n = size();
  for (int v : images_) {
    if (v < 0 || v >= n) {
      throw Error("image " + std::to_string(v) + " outside carrier of size " +
                  std::to_string(n));
    }
  }
  if (labels_) {
    validate_labels(*labels_, images_.size());
    if (labels_are_canonical(*labels_)) {
      labels_.reset();
    }
  }
}

Transformation Transformation::identity(int n) {
  if (n < 1) {
    throw Error("a transformation needs a non-empty carrier");
  }
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Transformation(std::move(images));
}

std::string Transformation::label(int x) const {
  if (labels_) {
    return (*labels_).at(x);
  }
  if (x < 0 || x >= size()) {
    throw Error("vertex " + std::to_string(x) + " outside carrier");
  }
  return std::to_string(x);
}

std::optional<int> Transformation::index_of(std::string_view label) const {
  if (!labels_) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < labels_->size(); ++i) {
    if ((*labels_)[i] == label) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

Transformation Transformation::with_labels(std::vector<std::string> labels) const {
  return Transformation(images_, std::move(labels));
}

Transformation Transformation::without_labels() const {
  return Transformation(images_);
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.size() != g.size()) {
    throw SizeMismatchError("cannot compose maps on carriers of size " +
                            std::to_string(f.size()) + " and " +
                            std::to_string(g.size()));
  }
  std::vector<int> images(f.size());
  for (int x = 0; x < f.size(); ++x) {
    images[x] = f(g(x));
  }
  auto labels = f.labels() ? f.labels() : g.labels();
  return Transformation(std::move(images), labels);
}

Transformation power(const Transformation& f, int exponent) {
  if (exponent < 0) {
    throw Error("negative power of a non-invertible map");
  }
  Transformation result = Transformation::identity(f.size());
  if (f.has_labels()) {
    result = result.with_labels(*f.labels());
  }
  Transformation base = f;
  while (exponent > 0) {
    if (exponent & 1) {
      result = compose(base, result);
    }
    exponent >>= 1;
    if (exponent > 0) {
      base = compose(base, base);
    }
  }
  return result;
}

std::vector<std::vector<int>> image_chain(const Transformation& f) {
  const int n = f.size();
  std::vector<std::vector<int>> chain;
  std::vector<int> current(n);
  std::iota(current.begin(), current.end(), 0);
  chain.push_back(current);
  while (true) {
    std::vector<char> hit(n, 0);
    for (int x : current) {
      hit[f(x)] = 1;
    }
    std::vector<int> next;
    for (int v = 0; v < n; ++v) {
      if (hit[v]) {
        next.push_back(v);
      }
    }
    if (next == current) {
      break;
    }
    chain.push_back(next);
    current = std::move(next);
  }
  return chain;
}

bool is_idempotent(const Transformation& f) {
  for (int x = 0; x < f.size(); ++x) {
    if (f(f(x)) != f(x)) {
      return false;
    }
  }
  return true;
}

bool commutes(const Transformation& f, const Transformation& g) {
  if (f.size() != g.size()) {
    throw SizeMismatchError("cannot compare maps on carriers of size " +
                            std::to_string(f.size()) + " and " +
                            std::to_string(g.size()));
  }
  for (int x = 0; x < f.size(); ++x) {
    if (f(g(x)) != g(f(x))) {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) {
    tokens.push_back(std::move(current));
  }
  return tokens;
}

}  // namespace

Transformation parse_transformation(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw ParseError("empty transformation text");
  }
  if (text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("bad JSON: ") + e.what());
    }
    return transformation_from_json(j);
  }

  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw ParseError("expected two rows separated by '/'");
  }
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw ParseError("expected exactly one '/' row separator");
  }
  auto labels = tokenize(text.substr(0, slash));
  auto images = tokenize(text.substr(slash + 1));
  if (labels.empty()) {
    throw ParseError("empty carrier row");
  }
  if (labels.size() != images.size()) {
    throw ParseError("row lengths differ: " + std::to_string(labels.size()) +
                     " labels vs " + std::to_string(images.size()) + " images");
  }
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<int>(i)).second) {
      throw ParseError("duplicate label '" + labels[i] + "'");
    }
  }
  std::vector<int> map(labels.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto it = index.find(images[i]);
    if (it == index.end()) {
      throw ParseError("unknown label '" + images[i] + "' in image row");
    }
    map[i] = it->second;
  }
  try {
    return Transformation(std::move(map), std::move(labels));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string format_transformation(const Transformation& f) {
  std::ostringstream out;
  for (int x = 0; x < f.size(); ++x) {
    if (x > 0) {
      out << ' ';
    }
    out << f.label(x);
  }
  out << " /";
  for (int x = 0; x < f.size(); ++x) {
    out << ' ' << f.label(f(x));
  }
  return out.str();
}

json transformation_to_json(const Transformation& f) {
  json j = json::object();
  if (f.has_labels()) {
    j["labels"] = *f.labels();
  }
  j["map"] = f.images();
  return j;
}

Transformation transformation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("map") || !j["map"].is_array()) {
    throw ParseError("expected an object with a \"map\" array");
  }
  std::vector<int> map;
  for (const auto& v : j["map"]) {
    if (!v.is_number_integer()) {
      throw ParseError("\"map\" entries must be integers");
    }
    map.push_back(v.get<int>());
  }
  std::optional<std::vector<std::string>> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) {
      throw ParseError("\"labels\" must be an array of strings");
    }
    labels.emplace();
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) {
        throw ParseError("\"labels\" must be an array of strings");
      }
      labels->push_back(l.get<std::string>());
    }
  }
  try {
    return Transformation(std::move(map), std::move(labels));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace cayleyfn
