#pragma once

#include "cosetcover/element.hpp"
#include "cosetcover/group.hpp"
#include "cosetcover/hom.hpp"
#include "cosetcover/lattice.hpp"
#include "cosetcover/stallings.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cosetcover {

// How we know (or fail to know) that [G : H] is infinite.
struct IndexEvidence {
  enum class Kind { Exact, Depth, FiniteIndex };
  Kind kind = Kind::Depth;
  int64_t value = 0;  // BFS depth for Depth, [G:H] for FiniteIndex
  std::string detail;

  bool infinite_ok() const { return kind != Kind::FiniteIndex; }
  std::string tag() const;
};

// Decidable membership in a subgroup H of a fixed marked group, plus an
// optional canonical key for right cosets Hg (two elements get the same key
// iff they lie in the same right coset) and an optional coarser bucket key
// (same coset implies same bucket) used to cut down pairwise scans.
class SubgroupOracle {
 public:
  virtual ~SubgroupOracle() = default;

  const MarkedGroup& group() const { return *group_; }
  const std::string& name() const { return name_; }

  virtual bool contains(const Element& g) const = 0;
  virtual std::optional<std::string> coset_key(const Element& g) const { return std::nullopt; }
  virtual std::string bucket_key(const Element& g) const { return {}; }
  // Exact index determination for the decidable kinds; nullopt means BFS
  // evidence is required.
  virtual std::optional<IndexEvidence> decide_index() const { return std::nullopt; }

 protected:
  SubgroupOracle(std::shared_ptr<const MarkedGroup> group, std::string name)
      : group_(std::move(group)), name_(std::move(name)) {}

  std::shared_ptr<const MarkedGroup> group_;
  std::string name_;
};

using OraclePtr = std::shared_ptr<const SubgroupOracle>;

bool is_member(const SubgroupOracle& h, const Element& g);
// Right cosets: H g1 == H g2 iff g1 * g2^-1 in H.
bool same_coset(const SubgroupOracle& h, const Element& g1, const Element& g2);

struct Coset {
  OraclePtr subgroup;
  Element representative;
};

// Factories (each validates family compatibility and spot-checks membership
// closure on short generator products).
OraclePtr make_trivial_oracle(std::shared_ptr<const MarkedGroup> g);
OraclePtr make_lattice_oracle(std::shared_ptr<const MarkedGroup> g, std::vector<VecZ> basis);
OraclePtr make_free_subgroup_oracle(std::shared_ptr<const MarkedGroup> g,
                                    std::vector<FreeWord> generators);
OraclePtr make_kernel_oracle(std::shared_ptr<const MarkedGroup> g, AbelianHom hom);
OraclePtr make_finite_kernel_oracle(std::shared_ptr<const MarkedGroup> g, FiniteHom hom);
OraclePtr make_shape_oracle(std::shared_ptr<const MarkedGroup> g, const std::string& predicate);
// Pullback of a subgroup of Z^m along phi: G -> Z^m (Claim-2.2 style lifts).
OraclePtr make_pullback_oracle(std::shared_ptr<const MarkedGroup> g, AbelianHom phi,
                               std::shared_ptr<const MarkedGroup> codomain, OraclePtr inner);

// For free-subgroup oracles: access to the folded automaton (used by the
// lumped walk DP). Null for other kinds.
const StallingsGraph* stallings_graph_of(const SubgroupOracle& h);
// For kernel oracles: the underlying abelian hom, if that is what they wrap.
const AbelianHom* abelian_hom_of(const SubgroupOracle& h);

// Subgroup descriptor syntax (config files and CLI):
//   "trivial"
//   "lattice:[[1,1]]"
//   "freegens:[a,bab^-1]"
//   "kernel:Z2->Z:[1,-1]"        images per abelianized generator
//   "kernel:Z2->Z/4:[1,2]"       finite abelian codomain via moduli
//   "shape:upper-triangular"
OraclePtr parse_subgroup(std::shared_ptr<const MarkedGroup> g, const std::string& descriptor);

// Roster = preset name ("trivial", "lines2", "free2", "heis", "lamp", "sl3z")
// or ';'-separated descriptors.
std::vector<OraclePtr> parse_roster(std::shared_ptr<const MarkedGroup> g, const std::string& text);

}  // namespace cosetcover
