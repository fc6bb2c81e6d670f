#include "reflex/classify.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "reflex/error.hpp"
#include "reflex/gallery.hpp"
#include "reflex/io.hpp"
#include "reflex/reflexive.hpp"

namespace reflex {

namespace {

using Pt = std::array<long, 2>;
constexpr long kBox = 3;

long cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counterclockwise hull vertices, starting from the least point.
std::vector<Pt> hull2(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Pt> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// 0 strictly inside and no other interior lattice point (Pick).
bool canonical2(const std::vector<Pt>& h) {
  if (h.size() < 3) return false;
  const Pt o{0, 0};
  long twice_area = 0, boundary = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Pt& a = h[i];
    const Pt& b = h[(i + 1) % h.size()];
    if (cross(a, b, o) <= 0) return false;
    twice_area += a[0] * b[1] - a[1] * b[0];
    boundary += std::gcd(std::labs(b[0] - a[0]), std::labs(b[1] - a[1]));
  }
  long interior = (twice_area - boundary + 2) / 2;
  return interior == 1;
}

Polytope to_polytope(const std::vector<Pt>& h) {
  std::vector<IntVector> pts;
  for (const auto& p : h) pts.push_back(make_vector({p[0], p[1]}));
  return Polytope::hull(pts);
}

std::vector<Pt> from_form(const NormalForm& nf) {
  std::vector<Pt> out;
  for (std::size_t j = 0; j < nf.matrix.cols(); ++j)
    out.push_back({nf.matrix(0, j).get_si(), nf.matrix(1, j).get_si()});
  return hull2(out);
}

std::string assign_label(const PolygonClass& c, const std::vector<PolygonClass>& all) {
  switch (c.boundary_points) {
    case 3: return "3";
    case 4: return c.vertices == 3 ? "4c" : (c.centrally_symmetric ? "4a" : "4b");
    case 5: return c.smooth ? "5a" : "5b";
    case 6: return "6" + std::string(1, static_cast<char>('a' + (6 - c.vertices)));
    case 9: return "9";
    default: break;
  }
  // Types 7 and 8 take the letter of their duals.
  const PolygonClass& d = all[c.dual_id];
  std::string dl = assign_label(d, all);
  return std::to_string(c.boundary_points) + dl.substr(1);
}

}  // namespace

const PolygonClass* ClassificationResult::find(const std::string& label) const {
  for (const auto& c : classes)
    if (c.label == label) return &c;
  return nullptr;
}

std::string ClassificationResult::summary_table() const {
  std::ostringstream out;
  out << "id label vertices boundary dual_id flags\n";
  for (const auto& c : classes) {
    std::string flags;
    auto add = [&](bool b, const char* s) {
      if (!b) return;
      if (!flags.empty()) flags += ",";
      flags += s;
    };
    add(c.smooth, "smooth");
    add(c.self_dual, "self-dual");
    add(c.centrally_symmetric, "symmetric");
    if (flags.empty()) flags = "-";
    out << c.id << " " << c.label << " " << c.vertices << " " << c.boundary_points << " " << c.dual_id << " "
        << flags << "\n";
  }
  out << classes.size() << " classes\n";
  return out.str();
}

void ClassificationResult::write(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  for (const auto& c : classes) {
    std::ofstream f(dir / ("d2_" + c.label + ".poly"));
    if (!f) fail(ErrorCode::Parse, "cannot write " + (dir / ("d2_" + c.label + ".poly")).string());
    f << "# reflexive polygon " << c.label << "\n" << format_polytope(c.polytope);
  }
  std::ofstream s(dir / "summary.txt");
  if (!s) fail(ErrorCode::Parse, "cannot write " + (dir / "summary.txt").string());
  s << summary_table();
}

ClassificationResult classify_reflexive_2d() {
  ClassificationResult res;
  std::vector<Pt> box;
  for (long x = -kBox; x <= kBox; ++x)
    for (long y = -kBox; y <= kBox; ++y) box.push_back({x, y});

  std::map<std::vector<Pt>, NormalForm> form_cache;
  auto form_of = [&](const std::vector<Pt>& h) -> const NormalForm& {
    auto it = form_cache.find(h);
    if (it == form_cache.end()) it = form_cache.emplace(h, normal_form(to_polytope(h))).first;
    return it->second;
  };

  std::set<NormalForm> seen;
  std::vector<std::vector<Pt>> frontier;
  // Seeds: canonical triangles and quadrilaterals. Every canonical polygon
  // contains one (0 is interior to the hull of at most four of its points),
  // and conv(±e_1, ±e_2) contains no canonical triangle.
  auto seed = [&](std::vector<Pt> pts) {
    const std::size_t n = pts.size();
    auto h = hull2(std::move(pts));
    if (h.size() != n || !canonical2(h)) return;
    ++res.seed_polygons;
    if (seen.insert(form_of(h)).second) frontier.push_back(h);
  };
  const std::size_t n = box.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        seed({box[i], box[j], box[k]});
        for (std::size_t l = k + 1; l < n; ++l) seed({box[i], box[j], box[k], box[l]});
      }

  std::vector<std::vector<Pt>> reps = frontier;
  while (!frontier.empty()) {
    std::vector<std::vector<Pt>> next;
    for (const auto& p : frontier) {
      for (const auto& q : box) {
        std::vector<Pt> pts = p;
        pts.push_back(q);
        auto h = hull2(pts);
        if (h == p || !canonical2(h)) continue;
        ++res.canonical_seen;
        if (seen.insert(form_of(h)).second) next.push_back(h);
      }
    }
    reps.insert(reps.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::vector<PolygonClass> classes;
  for (const auto& h : reps) {
    const NormalForm& nf = form_of(h);
    Polytope p = to_polytope(from_form(nf));
    PolygonClass c{0, "", nf, p};
    c.vertices = p.vertices().size();
    c.boundary_points = p.boundary_lattice_points().size();
    for (std::size_t f = 0; f < p.facets().size(); ++f)
      c.max_edge_points = std::max(c.max_edge_points, p.facet_lattice_points(f).size());
    c.reflexive = is_fano(p) && is_reflexive(p);
    c.smooth = c.reflexive && is_smooth(p);
    c.centrally_symmetric = p.is_centrally_symmetric();
    classes.push_back(std::move(c));
  }

  res.closed_under_duality = true;
  for (auto& c : classes) {
    if (!c.reflexive) {
      res.closed_under_duality = false;
      c.dual_id = classes.size();
      continue;
    }
    Polytope d = reflexive_dual(c.polytope);
    c.dual_boundary_points = d.boundary_lattice_points().size();
    NormalForm df = normal_form(d);
    auto it = std::find_if(classes.begin(), classes.end(), [&](const PolygonClass& o) { return o.form == df; });
    if (it == classes.end()) {
      res.closed_under_duality = false;
      c.dual_id = classes.size();
    } else {
      c.dual_id = static_cast<std::size_t>(it - classes.begin());
    }
  }
  if (!res.closed_under_duality) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      classes[i].id = i;
      classes[i].label = "x" + std::to_string(i);
    }
    res.classes = std::move(classes);
    return res;
  }
  for (auto& c : classes) c.label = assign_label(c, classes);

  // Renumber in label order.
  const auto& order = polygon_labels();
  auto rank_of = [&](const std::string& l) {
    auto it = std::find(order.begin(), order.end(), l);
    return static_cast<std::size_t>(it - order.begin());
  };
  std::vector<std::size_t> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return std::make_pair(rank_of(classes[a].label), classes[a].form) <
           std::make_pair(rank_of(classes[b].label), classes[b].form);
  });
  std::vector<std::size_t> new_id(classes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_id[perm[i]] = i;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    PolygonClass c = classes[perm[i]];
    c.id = i;
    c.dual_id = new_id[c.dual_id];
    c.self_dual = c.dual_id == i;
    res.classes.push_back(std::move(c));
  }
  return res;
}

PolygonFacts check_polygon_facts(const ClassificationResult& r) {
  PolygonFacts f;
  auto note = [&](const std::string& s) {
    if (f.witness.empty()) f.witness = s;
  };
  const auto& cs = r.classes;
  f.sixteen = cs.size() == 16 && r.closed_under_duality;
  if (!f.sixteen) note(std::to_string(cs.size()) + " classes");

  std::vector<std::size_t> b;
  for (const auto& c : cs) b.push_back(c.boundary_points);
  std::sort(b.begin(), b.end());
  f.boundary_multiset = b == std::vector<std::size_t>{3, 4, 4, 4, 5, 5, 6, 6, 6, 6, 7, 7, 8, 8, 8, 9};
  f.five_smooth = std::count_if(cs.begin(), cs.end(), [](const PolygonClass& c) { return c.smooth; }) == 5;
  f.all_reflexive = std::all_of(cs.begin(), cs.end(), [](const PolygonClass& c) { return c.reflexive; });

  f.twelve = f.all_reflexive;
  for (const auto& c : cs)
    if (c.boundary_points + c.dual_boundary_points != 12) {
      f.twelve = false;
      note("12-relation fails for " + c.label);
    }

  f.labels_match_gallery = true;
  for (const auto& c : cs) {
    auto it = std::find(polygon_labels().begin(), polygon_labels().end(), c.label);
    if (it == polygon_labels().end() || normal_form(polygon(c.label)) != c.form) {
      f.labels_match_gallery = false;
      note("class " + c.label + " differs from the gallery polygon");
    }
  }

  const NormalForm six = normal_form(polygon("6a"));
  const NormalForm eight = normal_form(polygon("8c"));
  f.max_vertices = true;
  f.max_edge_points = true;
  for (const auto& c : cs) {
    if (c.vertices > 6 || (c.vertices == 6) != (c.form == six)) f.max_vertices = false;
    if (c.max_edge_points > 5 || (c.max_edge_points == 5) != (c.form == eight)) f.max_edge_points = false;
  }
  if (!f.max_vertices) note("vertex maximum not attained by 6a alone");
  if (!f.max_edge_points) note("edge maximum not attained by 8c alone");
  return f;
}

}  // namespace reflex
