#include "reflex/reflex.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <limits>
#include <new>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "reflex/classify.hpp"
#include "reflex/error.hpp"
#include "reflex/gallery.hpp"
#include "reflex/io.hpp"
#include "reflex/normal_form.hpp"
#include "reflex/projection.hpp"
#include "reflex/reflexive.hpp"
#include "reflex/relations.hpp"
#include "reflex/verify.hpp"

struct rfx_polytope {
  reflex::Polytope p;
};

namespace {

using reflex::ErrorCode;
using Json = nlohmann::ordered_json;

thread_local std::string last_error;

rfx_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
      return RFX_ERR_PARSE;
    case ErrorCode::NotFullDimensional:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::WrongDimension:
      return RFX_ERR_DIMENSION;
    case ErrorCode::UnknownName:
      return RFX_ERR_UNKNOWN_NAME;
    default:
      return RFX_ERR_PRECONDITION;
  }
}

template <class F>
rfx_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const reflex::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    last_error = e.what();
    return RFX_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RFX_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RFX_ERR_INTERNAL;
  }
}

rfx_status missing(const char* what) {
  last_error = std::string("null argument: ") + what;
  return RFX_ERR_PRECONDITION;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rfx_polytope* wrap(reflex::Polytope p) { return new rfx_polytope{std::move(p)}; }

Json number(const reflex::Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json vector_json(const reflex::IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(number(x));
  return a;
}

Json point_json(const reflex::RationalPoint& p) {
  Json a = Json::array();
  for (const auto& q : p.coords()) {
    if (q.get_den() == 1) a.push_back(number(q.get_num()));
    else a.push_back(q.get_str());
  }
  return a;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render(const reflex::Report& r, rfx_format f) { return f == RFX_JSON ? r.to_json() : r.to_text(); }

std::string point_lines(std::size_t d, const std::vector<reflex::IntVector>& pts) {
  std::ostringstream out;
  out << d << ' ' << pts.size() << '\n';
  for (const auto& v : pts) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i].get_str();
    out << '\n';
  }
  return out.str();
}

}  // namespace

extern "C" {

const char* rfx_last_error(void) { return last_error.c_str(); }

const char* rfx_status_name(rfx_status status) {
  switch (status) {
    case RFX_OK: return "ok";
    case RFX_VERIFY_FAILED: return "verification failed";
    case RFX_ERR_PARSE: return "parse error";
    case RFX_ERR_DIMENSION: return "dimension error";
    case RFX_ERR_PRECONDITION: return "precondition violated";
    case RFX_ERR_UNKNOWN_NAME: return "unknown name";
    case RFX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void rfx_string_free(char* s) { std::free(s); }

rfx_status rfx_polytope_parse(const char* text, rfx_polytope** out) {
  if (!text || !out) return missing("text/out");
  return guarded([&] {
    *out = wrap(reflex::parse_polytope(text));
    return RFX_OK;
  });
}

rfx_status rfx_polytope_read(const char* path, rfx_polytope** out) {
  if (!path || !out) return missing("path/out");
  return guarded([&] {
    *out = wrap(reflex::read_polytope_file(path));
    return RFX_OK;
  });
}

rfx_status rfx_polytope_from_points(size_t dim, size_t n, const long* coords, rfx_polytope** out) {
  if (!out || (n > 0 && !coords)) return missing("coords/out");
  return guarded([&] {
    if (dim == 0 || n == 0) reflex::fail(ErrorCode::NotFullDimensional, "no points");
    std::vector<reflex::IntVector> pts(n, reflex::IntVector(dim));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < dim; ++j) pts[i][j] = coords[i * dim + j];
    *out = wrap(reflex::Polytope::hull(pts));
    return RFX_OK;
  });
}

rfx_status rfx_gallery(const char* description, rfx_polytope** out) {
  if (!description || !out) return missing("description/out");
  return guarded([&] {
    *out = wrap(reflex::gallery(description));
    return RFX_OK;
  });
}

void rfx_polytope_free(rfx_polytope* p) { delete p; }

size_t rfx_polytope_dim(const rfx_polytope* p) { return p ? p->p.dim() : 0; }
size_t rfx_polytope_vertex_count(const rfx_polytope* p) { return p ? p->p.vertices().size() : 0; }
size_t rfx_polytope_facet_count(const rfx_polytope* p) { return p ? p->p.facets().size() : 0; }

rfx_status rfx_polytope_vertex(const rfx_polytope* p, size_t i, long* coords) {
  if (!p || !coords) return missing("polytope/coords");
  return guarded([&] {
    if (i >= p->p.vertices().size()) reflex::fail(ErrorCode::NotVertex, "vertex index out of range");
    const auto& v = p->p.vertices()[i];
    for (const auto& x : v)
      if (!x.fits_slong_p()) reflex::fail(ErrorCode::DimensionMismatch, "coordinate exceeds long");
    for (size_t j = 0; j < v.size(); ++j) coords[j] = v[j].get_si();
    return RFX_OK;
  });
}

rfx_status rfx_polytope_format(const rfx_polytope* p, char** out) {
  if (!p || !out) return missing("polytope/out");
  return guarded([&] {
    *out = dup(reflex::format_polytope(p->p));
    return RFX_OK;
  });
}

rfx_status rfx_check(const rfx_polytope* p, rfx_format format, char** out) {
  if (!p || !out) return missing("polytope/out");
  return guarded([&] {
    *out = dup(render(reflex::check_predicates(p->p).to_report(), format));
    return RFX_OK;
  });
}

rfx_status rfx_is_reflexive(const rfx_polytope* p, int* out) {
  if (!p || !out) return missing("polytope/out");
  return guarded([&] {
    *out = reflex::is_fano(p->p) && reflex::is_reflexive(p->p);
    return RFX_OK;
  });
}

rfx_status rfx_dual(const rfx_polytope* p, rfx_format format, char** out, rfx_polytope** dual) {
  if (!p || !out) return missing("polytope/out");
  return guarded([&] {
    const reflex::DualPolytope d = reflex::dual(p->p);
    std::string text;
    if (format == RFX_JSON) {
      Json j;
      j["lattice"] = d.is_lattice;
      j["vertices"] = Json::array();
      for (const auto& v : d.vertices) j["vertices"].push_back(point_json(v));
      text = dump(j);
    } else if (d.polytope) {
      text = reflex::format_polytope(*d.polytope);
    } else {
      std::ostringstream s;
      s << "# rational vertices; the dual is not a lattice polytope\n";
      for (const auto& v : d.vertices) {
        auto c = v.coords();
        for (std::size_t i = 0; i < c.size(); ++i) s << (i ? " " : "") << c[i].get_str();
        s << '\n';
      }
      text = s.str();
    }
    char* t = dup(text);
    if (dual && d.polytope) *dual = wrap(*d.polytope);
    *out = t;
    return RFX_OK;
  });
}

rfx_status rfx_project(const rfx_polytope* p, const char* v, rfx_format format, char** out, rfx_polytope** image) {
  if (!p || !v || !out) return missing("polytope/v/out");
  return guarded([&] {
    const reflex::IntVector dir = reflex::parse_vector(v);
    if (dir.size() != p->p.dim()) reflex::fail(ErrorCode::DimensionMismatch, "direction has wrong length");
    const reflex::ProjectionResult pr = reflex::project(p->p, dir);
    reflex::Report r;
    r.set("direction", reflex::format_vector(dir));
    r.set("image", pr.image.to_string());
    r.set("image.vertices", std::to_string(pr.image.vertices().size()));
    reflex::PredicateReport pred = reflex::check_predicates(pr.image);
    r.set_bool("image.fano", pred.fano);
    r.set_bool("image.canonical", pred.canonical);
    r.set_bool("image.terminal", pred.terminal);
    r.set_bool("image.reflexive", pred.reflexive);
    if (reflex::is_fano(p->p) && reflex::is_reflexive(p->p))
      r.append(reflex::verify_projection_claims(p->p, dir).to_report());
    char* t = dup(render(r, format));
    if (image) *image = wrap(pr.image);
    *out = t;
    return RFX_OK;
  });
}

rfx_status rfx_pair(const rfx_polytope* p, const char* v, const char* w, rfx_format format, char** out) {
  if (!p || !v || !w || !out) return missing("polytope/v/w/out");
  return guarded([&] {
    const reflex::IntVector a = reflex::parse_vector(v);
    const reflex::IntVector b = reflex::parse_vector(w);
    if (a.size() != p->p.dim() || b.size() != p->p.dim())
      reflex::fail(ErrorCode::DimensionMismatch, "points have wrong length");
    const reflex::PairClass c = reflex::classify_pair(p->p, a, b);
    reflex::Report r;
    r.set("class", reflex::to_string(c));
    std::string head = reflex::to_string(c);
    if (c == reflex::PairClass::Sum) {
      const reflex::PrimCheck pc = reflex::verify_prim_properties(p->p, a, b);
      head += " z=" + reflex::format_vector(pc.relation.z) + " a=" + pc.relation.a.get_str() +
              " b=" + pc.relation.b.get_str();
      r.set("z", reflex::format_vector(pc.relation.z));
      r.set("a", pc.relation.a.get_str());
      r.set("b", pc.relation.b.get_str());
      reflex::Report checks = pc.to_report();
      for (const auto& [k, val] : checks.entries())
        if (k != "prim.z" && k != "prim.a" && k != "prim.b") r.set(k, val);
    }
    if (format == RFX_JSON) {
      *out = dup(r.to_json());
    } else {
      std::string text = head + "\n";
      for (const auto& [k, val] : r.entries())
        if (k.rfind("prim.", 0) == 0) text += k + "=" + val + "\n";
      *out = dup(text);
    }
    return RFX_OK;
  });
}

rfx_status rfx_graph(const rfx_polytope* p, int vertices_only, rfx_format format, char** out) {
  if (!p || !out) return missing("polytope/out");
  return guarded([&] {
    const reflex::BoundaryGraph g = reflex::boundary_graph(p->p, vertices_only != 0);
    if (format == RFX_JSON) {
      Json j;
      j["nodes"] = Json::array();
      for (const auto& n : g.nodes()) j["nodes"].push_back(vector_json(n));
      j["adjacency"] = Json::array();
      for (const auto& a : g.adjacency()) j["adjacency"].push_back(a);
      j["diameter"] = g.diameter();
      *out = dup(dump(j));
    } else {
      *out = dup(g.to_text() + "# diameter " + std::to_string(g.diameter()) + "\n");
    }
    return RFX_OK;
  });
}

rfx_status rfx_normal_form(const rfx_polytope* p, rfx_format format, char** out) {
  if (!p || !out) return missing("polytope/out");
  return guarded([&] {
    const reflex::NormalForm nf = reflex::normal_form(p->p);
    if (format == RFX_JSON) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < nf.matrix.rows(); ++i) rows.push_back(vector_json(nf.matrix.row(i)));
      Json j;
      j["normal_form"] = rows;
      *out = dup(dump(j));
    } else {
      *out = dup(nf.to_string());
    }
    return RFX_OK;
  });
}

rfx_status rfx_isomorphic(const rfx_polytope* p, const rfx_polytope* q, int* out) {
  if (!p || !q || !out) return missing("polytope/out");
  return guarded([&] {
    *out = reflex::isomorphic(p->p, q->p);
    return RFX_OK;
  });
}

rfx_status rfx_lattice_points(const rfx_polytope* p, rfx_format format, char** out) {
  if (!p || !out) return missing("polytope/out");
  return guarded([&] {
    const auto& pts = p->p.lattice_points();
    if (format == RFX_JSON) {
      Json j;
      j["count"] = pts.size();
      j["points"] = Json::array();
      for (const auto& x : pts) j["points"].push_back(vector_json(x));
      *out = dup(dump(j));
    } else {
      *out = dup(point_lines(p->p.dim(), pts));
    }
    return RFX_OK;
  });
}

rfx_status rfx_classify2d(const char* outdir, rfx_format format, char** out) {
  if (!out) return missing("out");
  return guarded([&] {
    const reflex::ClassificationResult r = reflex::classify_reflexive_2d();
    if (outdir) r.write(outdir);
    const reflex::PolygonFacts facts = reflex::check_polygon_facts(r);
    if (format == RFX_JSON) {
      Json j;
      j["count"] = r.classes.size();
      j["closed_under_duality"] = r.closed_under_duality;
      j["facts_hold"] = facts.all_pass();
      j["classes"] = Json::array();
      for (const auto& c : r.classes) {
        Json e;
        e["id"] = c.id;
        e["label"] = c.label;
        e["vertices"] = c.vertices;
        e["boundary"] = c.boundary_points;
        e["dual_id"] = c.dual_id;
        e["smooth"] = c.smooth;
        e["self_dual"] = c.self_dual;
        e["symmetric"] = c.centrally_symmetric;
        Json rows = Json::array();
        for (std::size_t i = 0; i < c.form.matrix.rows(); ++i) rows.push_back(vector_json(c.form.matrix.row(i)));
        e["normal_form"] = rows;
        j["classes"].push_back(e);
      }
      *out = dup(dump(j));
    } else {
      std::string text = r.summary_table();
      if (!facts.all_pass()) text += "check failed: " + facts.witness + "\n";
      *out = dup(text);
    }
    if (!facts.all_pass()) last_error = "classification check failed: " + facts.witness;
    return facts.all_pass() ? RFX_OK : RFX_VERIFY_FAILED;
  });
}

rfx_status rfx_verify(const rfx_polytope* p, const char* suite, rfx_format format, char** out) {
  if (!p || !out) return missing("polytope/out");
  return guarded([&] {
    const reflex::VerifyReport r = reflex::verify_polytope(p->p, suite ? suite : "all");
    *out = dup(format == RFX_JSON ? r.to_report().to_json() : r.to_text());
    if (!r.all_pass()) last_error = "theorem check failed";
    return r.all_pass() ? RFX_OK : RFX_VERIFY_FAILED;
  });
}

}  // extern "C"
