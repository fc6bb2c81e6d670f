#include "reflex/gallery.hpp"

#include <map>
#include <sstream>

#include "reflex/error.hpp"

namespace reflex {

namespace {

std::vector<IntVector> points(std::initializer_list<std::initializer_list<long>> list) {
  std::vector<IntVector> out;
  for (const auto& p : list) out.push_back(make_vector(p));
  return out;
}

void require_dim(std::size_t d, std::size_t least, const char* name) {
  if (d < least) fail(ErrorCode::WrongDimension, std::string(name) + " needs dimension >= " + std::to_string(least));
}

}  // namespace

Polytope zonotope(std::size_t d) {
  require_dim(d, 1, "zonotope");
  if (d > 20) fail(ErrorCode::WrongDimension, "zonotope dimension too large");
  std::vector<IntVector> pts;
  for (unsigned long mask = 1; mask < (1UL << d); ++mask) {
    IntVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1UL;
    pts.push_back(v);
    pts.push_back(-v);
  }
  return Polytope::hull(pts);
}

Polytope cube(std::size_t d) {
  require_dim(d, 1, "cube");
  if (d > 20) fail(ErrorCode::WrongDimension, "cube dimension too large");
  std::vector<IntVector> pts;
  for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
    IntVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = ((mask >> i) & 1UL) ? 1 : -1;
    pts.push_back(v);
  }
  return Polytope::hull(pts);
}

Polytope cross(std::size_t d) {
  require_dim(d, 1, "cross");
  std::vector<IntVector> pts;
  for (std::size_t i = 0; i < d; ++i) {
    pts.push_back(unit_vector(d, i));
    pts.push_back(-unit_vector(d, i));
  }
  return Polytope::hull(pts);
}

Polytope simplex(std::size_t d) {
  require_dim(d, 1, "simplex");
  std::vector<IntVector> pts;
  IntVector sum = zero_vector(d);
  for (std::size_t i = 0; i < d; ++i) {
    pts.push_back(unit_vector(d, i));
    sum = sum + unit_vector(d, i);
  }
  pts.push_back(-sum);
  return Polytope::hull(pts);
}

Polytope hexagon() { return zonotope(2); }

Polytope cell24() {
  std::vector<IntVector> pts;
  auto e = [](std::size_t i) { return unit_vector(4, i - 1); };
  std::vector<IntVector> half;
  for (std::size_t i = 1; i <= 4; ++i) half.push_back(e(i));
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = i + 1; j <= 4; ++j) half.push_back(e(i) - e(j));
  for (std::size_t i = 1; i <= 2; ++i) half.push_back(e(i) - e(3) - e(4));
  half.push_back(e(1) + e(2) - e(3) - e(4));
  for (const auto& v : half) {
    pts.push_back(v);
    pts.push_back(-v);
  }
  return Polytope::hull(pts);
}

Polytope wirth() {
  return Polytope::hull(points({{2, 1, 1, 1}, {-2, -1, -1, -1}, {0, 1, 0, 0}, {0, -1, 0, 0},
                                {0, 0, 1, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}, {0, 0, 0, -1}}));
}

Polytope hexagon_power(std::size_t k) {
  require_dim(k, 1, "hexagon power");
  Polytope p = hexagon();
  for (std::size_t i = 1; i < k; ++i) p = product(p, hexagon());
  return p;
}

const std::vector<std::string>& polygon_labels() {
  static const std::vector<std::string> labels = {"3",  "4a", "4b", "4c", "5a", "5b", "6a", "6b",
                                                  "6c", "6d", "7a", "7b", "8a", "8b", "8c", "9"};
  return labels;
}

Polytope polygon(const std::string& label) {
  static const std::map<std::string, std::vector<IntVector>> reps = {
      {"3", points({{1, 0}, {0, 1}, {-1, -1}})},
      {"4a", points({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})},
      {"4b", points({{1, 0}, {0, 1}, {-1, 0}, {1, -1}})},
      {"4c", points({{-1, 1}, {1, 1}, {0, -1}})},
      {"5a", points({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}})},
      {"5b", points({{-1, 1}, {1, 1}, {0, -1}, {-1, 0}})},
      {"6a", points({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}})},
      {"6b", points({{-1, 1}, {1, 1}, {1, 0}, {0, -1}, {-1, 0}})},
      {"6c", points({{-1, 1}, {1, 1}, {1, 0}, {-1, -1}})},
      {"6d", points({{-1, -1}, {2, -1}, {-1, 1}})},
      {"7a", points({{-1, 0}, {0, -1}, {-1, 1}, {1, -1}, {1, 1}})},
      {"7b", points({{-2, 1}, {0, -1}, {1, 0}, {1, 1}})},
      {"8a", points({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}})},
      {"8b", points({{-1, -1}, {-1, 0}, {1, -1}, {1, 2}})},
      {"8c", points({{-2, 1}, {0, -1}, {2, 1}})},
      {"9", points({{-1, -1}, {2, -1}, {-1, 2}})},
  };
  auto it = reps.find(label);
  if (it == reps.end()) fail(ErrorCode::UnknownName, "no polygon labelled '" + label + "'");
  return Polytope::hull(it->second);
}

namespace {

class GalleryParser {
 public:
  explicit GalleryParser(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      auto colon = tok.find(':');
      if (colon != std::string::npos && colon > 0 && colon + 1 < tok.size()) {
        tokens_.push_back(tok.substr(0, colon));
        tokens_.push_back(tok.substr(colon + 1));
      } else {
        tokens_.push_back(tok);
      }
    }
  }

  Polytope parse_all() {
    Polytope p = parse();
    if (pos_ != tokens_.size()) fail(ErrorCode::UnknownName, "trailing input '" + tokens_[pos_] + "'");
    return p;
  }

 private:
  const std::string& next(const char* what) {
    if (pos_ >= tokens_.size()) fail(ErrorCode::UnknownName, std::string("missing ") + what);
    return tokens_[pos_++];
  }

  std::size_t dimension(const std::string& name) {
    const std::string& t = next("dimension");
    std::size_t used = 0;
    unsigned long d = 0;
    try {
      d = std::stoul(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || t.empty() || t[0] == '-')
      fail(ErrorCode::UnknownName, name + ": bad dimension '" + t + "'");
    return d;
  }

  Polytope parse() {
    const std::string name = next("polytope name");
    if (name == "zonotope") return zonotope(dimension(name));
    if (name == "cube") return cube(dimension(name));
    if (name == "cross") return cross(dimension(name));
    if (name == "simplex") return simplex(dimension(name));
    if (name == "hexagon") return hexagon();
    if (name == "cell24") return cell24();
    if (name == "wirth") return wirth();
    if (name == "polygon") return polygon(next("polygon label"));
    if (name == "product") {
      Polytope a = parse();
      Polytope b = parse();
      return product(a, b);
    }
    fail(ErrorCode::UnknownName, "unknown polytope '" + name + "'");
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Polytope gallery(const std::string& description) { return GalleryParser(description).parse_all(); }

}  // namespace reflex
