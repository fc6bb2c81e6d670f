// Command line front end over the C interface.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "reflex/reflex.h"

namespace {

struct Options {
  std::string format = "text";
  std::string out;
  std::string path;
  std::vector<std::string> paths;
  std::vector<std::string> words;
  std::string v, w;
  std::string suite = "all";
  bool vertices_only = false;
};

rfx_format fmt(const Options& o) { return o.format == "json" ? RFX_JSON : RFX_TEXT; }

int report_error(rfx_status s) {
  std::cerr << "error: " << rfx_last_error() << "\n";
  return static_cast<int>(s);
}

// Takes ownership of text.
int emit(const Options& o, char* text) {
  std::string s = text ? text : "";
  rfx_string_free(text);
  if (o.out.empty()) {
    std::cout << s;
    std::cout.flush();
    return 0;
  }
  std::ofstream f(o.out);
  if (!f || !(f << s)) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return RFX_ERR_PARSE;
  }
  return 0;
}

struct Handle {
  rfx_polytope* p = nullptr;
  ~Handle() { rfx_polytope_free(p); }
};

template <class F>
int with_polytope(const Options& o, F&& body) {
  Handle h;
  rfx_status s = rfx_polytope_read(o.path.c_str(), &h.p);
  if (s != RFX_OK) return report_error(s);
  char* text = nullptr;
  s = body(h.p, &text);
  if (s != RFX_OK && s != RFX_VERIFY_FAILED) return report_error(s);
  int e = emit(o, text);
  return e ? e : static_cast<int>(s);
}

std::vector<std::string> expand(const std::vector<std::string>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) {
    std::error_code ec;
    if (p != "-" && std::filesystem::is_directory(p, ec)) {
      std::vector<std::string> files;
      for (const auto& e : std::filesystem::directory_iterator(p))
        if (e.path().extension() == ".poly") files.push_back(e.path().string());
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

int run_verify(const Options& o) {
  const auto files = expand(o.paths);
  if (files.empty()) {
    std::cerr << "error: no polytope files\n";
    return RFX_ERR_PARSE;
  }
  std::string all;
  int worst = 0;
  std::size_t failed = 0;
  for (const auto& f : files) {
    Handle h;
    rfx_status s = rfx_polytope_read(f.c_str(), &h.p);
    char* text = nullptr;
    if (s == RFX_OK) s = rfx_verify(h.p, o.suite.c_str(), fmt(o), &text);
    if (s != RFX_OK && s != RFX_VERIFY_FAILED) {
      std::cerr << "error: " << f << ": " << rfx_last_error() << "\n";
      if (worst == 0 || worst == RFX_VERIFY_FAILED) worst = s;
      continue;
    }
    if (s == RFX_VERIFY_FAILED) {
      ++failed;
      if (worst == 0) worst = RFX_VERIFY_FAILED;
    }
    if (files.size() > 1 && fmt(o) == RFX_TEXT) all += "== " + f + "\n";
    all += text;
    rfx_string_free(text);
  }
  if (files.size() > 1 && fmt(o) == RFX_TEXT)
    all += std::to_string(files.size() - failed) + " of " + std::to_string(files.size()) + " polytopes pass\n";
  int e = emit(o, strdup(all.c_str()));
  return e ? e : worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Fano and reflexive lattice polytopes"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out, "Write output to this file");

  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--out", o.out, "Write output to this file");
  };
  auto add_path = [&](CLI::App* c) { c->add_option("path", o.path, "Polytope file, - for stdin")->required(); };

  auto* check = app.add_subcommand("check", "Predicate report");
  auto* dual = app.add_subcommand("dual", "Dual polytope");
  auto* project = app.add_subcommand("project", "Projection along a boundary point");
  auto* pair = app.add_subcommand("pair", "Classify a pair of boundary points");
  auto* graph = app.add_subcommand("graph", "Graph of boundary points sharing a facet");
  auto* nf = app.add_subcommand("normalform", "Normal form");
  auto* lattice = app.add_subcommand("latticepoints", "All lattice points");
  auto* gallery = app.add_subcommand("gallery", "Named polytope");
  auto* classify = app.add_subcommand("classify2d", "Classify reflexive polygons");
  auto* verify = app.add_subcommand("verify", "Run theorem checks");

  for (auto* c : {check, dual, project, pair, graph, nf, lattice}) {
    add_common(c);
    add_path(c);
  }
  project->add_option("--v", o.v, "Direction, comma separated")->required();
  pair->add_option("--v", o.v, "First point, comma separated")->required();
  pair->add_option("--w", o.w, "Second point, comma separated")->required();
  graph->add_flag("--vertices-only", o.vertices_only, "Restrict to vertices");
  add_common(gallery);
  gallery->add_option("name", o.words, "Name and parameters, e.g. zonotope 3")->required();
  add_common(classify);
  classify->add_option("outdir", o.path, "Directory for d2_<label>.poly files");
  add_common(verify);
  verify->add_option("paths", o.paths, "Polytope files or directories")->required();
  verify->add_option("--suite", o.suite, "Check group")->check(CLI::IsMember(
      {"all", "predicates", "projection", "termprop", "prim", "graph", "bounds", "modk", "central"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return RFX_ERR_PARSE;
  }

  const rfx_format f = fmt(o);
  if (*check) return with_polytope(o, [&](rfx_polytope* p, char** t) { return rfx_check(p, f, t); });
  if (*dual) return with_polytope(o, [&](rfx_polytope* p, char** t) { return rfx_dual(p, f, t, nullptr); });
  if (*project)
    return with_polytope(o, [&](rfx_polytope* p, char** t) { return rfx_project(p, o.v.c_str(), f, t, nullptr); });
  if (*pair)
    return with_polytope(o, [&](rfx_polytope* p, char** t) { return rfx_pair(p, o.v.c_str(), o.w.c_str(), f, t); });
  if (*graph)
    return with_polytope(o, [&](rfx_polytope* p, char** t) { return rfx_graph(p, o.vertices_only, f, t); });
  if (*nf) return with_polytope(o, [&](rfx_polytope* p, char** t) { return rfx_normal_form(p, f, t); });
  if (*lattice) return with_polytope(o, [&](rfx_polytope* p, char** t) { return rfx_lattice_points(p, f, t); });
  if (*gallery) {
    std::string desc;
    for (const auto& w : o.words) desc += (desc.empty() ? "" : " ") + w;
    Handle h;
    rfx_status s = rfx_gallery(desc.c_str(), &h.p);
    if (s != RFX_OK) return report_error(s);
    char* text = nullptr;
    if (f == RFX_JSON) {
      std::string j = "{\n  \"dim\": " + std::to_string(rfx_polytope_dim(h.p)) + ",\n  \"vertices\": [";
      std::vector<long> c(rfx_polytope_dim(h.p));
      for (size_t i = 0; i < rfx_polytope_vertex_count(h.p); ++i) {
        s = rfx_polytope_vertex(h.p, i, c.data());
        if (s != RFX_OK) return report_error(s);
        j += std::string(i ? ", " : "") + "[";
        for (size_t k = 0; k < c.size(); ++k) j += (k ? ", " : "") + std::to_string(c[k]);
        j += "]";
      }
      j += "]\n}\n";
      text = strdup(j.c_str());
    } else {
      s = rfx_polytope_format(h.p, &text);
      if (s != RFX_OK) return report_error(s);
    }
    return emit(o, text);
  }
  if (*classify) {
    std::string dir = o.path;
    char* text = nullptr;
    rfx_status s = rfx_classify2d(dir.empty() ? nullptr : dir.c_str(), f, &text);
    if (s != RFX_OK && s != RFX_VERIFY_FAILED) return report_error(s);
    int e = emit(o, text);
    return e ? e : static_cast<int>(s);
  }
  if (*verify) return run_verify(o);
  return RFX_ERR_PARSE;
}
