#pragma once

// Sweep of every applicable theorem check over one polytope.

#include <string>
#include <vector>

#include "reflex/polytope.hpp"
#include "reflex/reflexive.hpp"

namespace reflex {

struct CheckRow {
  std::string name;
  bool pass = true;
  bool asserted = true;  // false for conjectures, which are only reported
  std::size_t cases = 0;
  std::string witness;
};

struct VerifyReport {
  std::vector<CheckRow> rows;

  bool all_pass() const;
  /// "name cases PASS|FAIL|INFO witness" per row.
  std::string to_text() const;
  Report to_report() const;
};

/// Suite names accepted by verify_polytope.
const std::vector<std::string>& verify_suites();

/// Runs the checks of the suite ("all" or one of verify_suites()) that
/// apply to P. Non-Fano input only gets the predicate checks.
/// Throws UnknownName for an unknown suite.
VerifyReport verify_polytope(const Polytope& p, const std::string& suite = "all");

}  // namespace reflex
