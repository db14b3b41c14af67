#pragma once

#include "cosetcover/element.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cosetcover {

enum class Family { FreeAbelian, Heisenberg, Free, Lamplighter, SL3Z };

std::string family_name(Family f);

// Group registry, usable in config files and on the CLI:
//   "Z^d" (or "Z", "Zd")   free abelian of rank d, d <= 6
//   "heisenberg"           integer Heisenberg group
//   "free:k"               free group F_k, 2 <= k <= 4
//   "lamplighter:m"        Z_m wr Z, 2 <= m <= 4
//   "sl3z"                 SL(3, Z) with the twelve elementary matrices
struct GroupSpec {
  Family family = Family::FreeAbelian;
  int param = 1;  // d, k or m; unused for Heisenberg and SL3Z
  // Empty = standard generating set; otherwise a finite symmetric custom set.
  std::vector<Element> custom_generators;
};

class MarkedGroup {
 public:
  // Validates ranges, symmetry and (for custom sets) that the set generates.
  static MarkedGroup make(const GroupSpec& spec);

  Family family() const { return spec_.family; }
  int param() const { return spec_.param; }
  const GroupSpec& spec() const { return spec_; }
  const std::string& name() const { return name_; }
  bool standard_marking() const { return spec_.custom_generators.empty(); }

  const std::vector<Element>& generators() const { return generators_; }
  const Element& identity() const { return identity_; }

  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  bool is_identity(const Element& a) const { return a == identity_; }

  // Word length in closed form where one exists (standard markings of Z^d and
  // F_k); nullopt means BFS is required.
  std::optional<int64_t> closed_form_length(const Element& g) const;

  // Image of g under the abelianization map onto Z^rank; rank is d for Z^d,
  // k for F_k, 2 for Heisenberg (z dies), 1 for lamplighter (lamps die) and
  // 0 for SL3Z (perfect group).
  int abelianization_rank() const;
  VecZ abelianize(const Element& g) const;

  std::string element_str(const Element& g) const { return element_to_string(g); }

 private:
  MarkedGroup() = default;

  GroupSpec spec_;
  std::string name_;
  Element identity_;
  std::vector<Element> generators_;
};

// Parses a registry name; throws UsageError on unknown syntax.
GroupSpec parse_group_spec(const std::string& name);
MarkedGroup parse_group(const std::string& name);

}  // namespace cosetcover
