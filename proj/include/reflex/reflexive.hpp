#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reflex/polytope.hpp"

namespace reflex {

/// 0 in the interior and every vertex primitive.
bool is_fano(const Polytope& p);
/// Throws NotFano.
bool is_reflexive(const Polytope& p);
/// Throw OriginNotInterior.
bool is_canonical(const Polytope& p);
bool is_terminal(const Polytope& p);
/// Every segment between vertices sharing a facet has no interior lattice point.
/// Throws NotFano.
bool is_semi_terminal(const Polytope& p);
/// Throws NotFano.
bool is_smooth(const Polytope& p);

struct DualPolytope {
  /// eta_F for every facet, sorted.
  std::vector<RationalPoint> vertices;
  bool is_lattice = false;
  std::optional<Polytope> polytope;  // set when is_lattice
};

/// Throws OriginNotInterior.
DualPolytope dual(const Polytope& p);
/// Dual of a reflexive polytope. Throws NotReflexive.
Polytope reflexive_dual(const Polytope& p);

/// lcm of all facet levels. Throws NotFano.
Integer gorenstein_index(const Polytope& p);
/// Throws NotFano.
Rational discrepancy(const Polytope& p);

/// Unimodular U with U(P) inside [-1,1]^d, rows taken from a lattice basis
/// in the boundary of the dual. Throws NotReflexive.
std::optional<UnimodularMap> embed_in_unit_cube(const Polytope& p);

/// Key-value report. Keys are in insertion order.
class Report {
 public:
  void set(const std::string& key, const std::string& value);
  void set_bool(const std::string& key, bool value) { set(key, value ? "true" : "false"); }
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::optional<std::string> get(const std::string& key) const;
  void append(const Report& other, const std::string& prefix = "");

  std::string to_text() const;
  std::string to_json() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct PredicateReport {
  bool fano = false;
  bool canonical = false;
  bool terminal = false;
  bool semi_terminal = false;
  bool reflexive = false;
  bool smooth = false;
  bool simplicial = false;
  bool centrally_symmetric = false;
  std::optional<Integer> gorenstein_index;
  std::optional<Rational> discrepancy;
  std::map<std::string, std::string> witnesses;

  Report to_report() const;
};

/// Runs every predicate that applies; never throws on valid polytopes.
PredicateReport check_predicates(const Polytope& p);

}  // namespace reflex
