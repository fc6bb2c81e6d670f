#include <deque>
#include <set>

#include "reflex/gallery.hpp"
#include "reflex/normal_form.hpp"
#include "reflex/reflexive.hpp"

namespace reflex {

namespace {

std::vector<Polytope> children(const Polytope& p) {
  std::vector<Polytope> out;
  const auto& pts = p.lattice_points();
  for (const auto& v : p.vertices()) {
    std::vector<IntVector> rest;
    for (const auto& x : pts)
      if (x != v) rest.push_back(x);
    if (affine_dimension(rest) != static_cast<long>(p.dim())) continue;
    Polytope q = Polytope::hull(rest);
    if (q.origin_in_interior() && is_fano(q) && is_reflexive(q)) out.push_back(q);
  }
  return out;
}

struct Grower {
  std::set<NormalForm>* seen;
  std::deque<Polytope> queue;

  void offer(const Polytope& p) {
    if (seen->insert(normal_form(p)).second) queue.push_back(p);
  }
};

std::vector<Polytope> grow(const std::vector<Polytope>& roots, std::size_t limit) {
  std::set<NormalForm> seen;
  std::vector<Grower> growers;
  for (const auto& r : roots) {
    growers.push_back(Grower{&seen, {}});
    growers.back().offer(r);
  }
  std::vector<Polytope> out;
  bool progress = true;
  while (out.size() < limit && progress) {
    progress = false;
    for (auto& g : growers) {
      if (out.size() >= limit) break;
      if (g.queue.empty()) continue;
      progress = true;
      Polytope p = g.queue.front();
      g.queue.pop_front();
      out.push_back(p);
      for (const auto& c : children(p)) g.offer(c);
    }
  }
  return out;
}

}  // namespace

std::vector<Polytope> reflexive_subpolytopes(const Polytope& p, std::size_t limit) { return grow({p}, limit); }

std::vector<Polytope> corpus_3d(std::size_t limit) {
  std::vector<Polytope> roots = {cube(3), zonotope(3), reflexive_dual(simplex(3)), reflexive_dual(zonotope(3)),
                                 product(polygon("9"), cube(1)), product(polygon("8b"), cube(1)),
                                 product(polygon("8c"), cube(1)), product(polygon("7b"), cube(1))};
  return grow(roots, limit);
}

}  // namespace reflex
