#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xpg/group.hpp"

namespace xpg {

struct CatalogEntry {
  std::string description;
  FiniteGroup group;
  // Present for entries built as (semi)direct products of two factors.
  std::optional<SemidirectProduct> construction;
};

struct CatalogOptions {
  int max_order = 60;
  bool builtin_fixtures = true;             // bundled quaternion table
  std::vector<std::string> fixture_files;   // extra Cayley table files
};

// Deterministic constructor-generated sweep: cyclic groups, products of two
// cyclic groups, dihedral groups, S3/A4/S4/A5, the cyclic-by-cyclic
// semidirect products Z_n x|_k Z_m with k^m = 1 (mod n), generalized
// dihedral groups (Z_a x Z_b) x| Z_2, and ingested table fixtures.
// Descriptions are unique and every group passes the axiom checker.
std::vector<CatalogEntry> make_catalog(const CatalogOptions& options = {});

}  // namespace xpg
