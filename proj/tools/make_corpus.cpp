// Writes the 3-dimensional reflexive corpus as numbered .poly files.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "reflex/gallery.hpp"
#include "reflex/io.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make_corpus <dir> [count]\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  const std::size_t count = argc > 2 ? std::stoul(argv[2]) : 250;
  std::filesystem::create_directories(dir);
  const auto polys = reflex::corpus_3d(count);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "d3_%03zu.poly", i);
    std::ofstream f(dir / name);
    f << reflex::format_polytope(polys[i]);
  }
  std::cout << polys.size() << " polytopes written to " << dir.string() << "\n";
  return 0;
}
