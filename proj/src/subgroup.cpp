#include "cosetcover/subgroup.hpp"

#include "cosetcover/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace cosetcover {

std::string IndexEvidence::tag() const {
  switch (kind) {
    case Kind::Exact: return "exact";
    case Kind::Depth: return "depth-" + std::to_string(value);
    case Kind::FiniteIndex: return "finite-index(" + std::to_string(value) + ")";
  }
  return "?";
}

bool is_member(const SubgroupOracle& h, const Element& g) { return h.contains(g); }

bool same_coset(const SubgroupOracle& h, const Element& g1, const Element& g2) {
  return h.contains(h.group().mul(g1, h.group().inv(g2)));
}

namespace {

std::string vec_to_key(const VecZ& v) {
  std::ostringstream out;
  for (int64_t x : v) out << x << ",";
  return out.str();
}

class TrivialOracle final : public SubgroupOracle {
 public:
  explicit TrivialOracle(std::shared_ptr<const MarkedGroup> g)
      : SubgroupOracle(std::move(g), "trivial") {}

  bool contains(const Element& g) const override { return group_->is_identity(g); }
  std::optional<std::string> coset_key(const Element& g) const override {
    return element_to_string(g);
  }
  std::optional<IndexEvidence> decide_index() const override {
    return IndexEvidence{IndexEvidence::Kind::Exact, 0,
                         "trivial subgroup of an infinite group"};
  }
};

class LatticeOracle final : public SubgroupOracle {
 public:
  LatticeOracle(std::shared_ptr<const MarkedGroup> g, std::vector<VecZ> basis, LatticeForm form,
                std::string name)
      : SubgroupOracle(std::move(g), std::move(name)),
        basis_(std::move(basis)),
        form_(std::move(form)) {}

  bool contains(const Element& g) const override { return form_.contains(std::get<VecZ>(g)); }
  std::optional<std::string> coset_key(const Element& g) const override {
    return vec_to_key(form_.residue(std::get<VecZ>(g)));
  }
  std::optional<IndexEvidence> decide_index() const override {
    if (auto idx = form_.index()) {
      return IndexEvidence{IndexEvidence::Kind::FiniteIndex, *idx,
                           "lattice has full rank; index = |det|"};
    }
    return IndexEvidence{IndexEvidence::Kind::Exact, 0,
                         "lattice rank " + std::to_string(form_.rank()) + " < " +
                             std::to_string(form_.dim())};
  }
  const std::vector<VecZ>& basis() const { return basis_; }

 private:
  std::vector<VecZ> basis_;
  LatticeForm form_;
};

class FreeSubgroupOracle final : public SubgroupOracle {
 public:
  FreeSubgroupOracle(std::shared_ptr<const MarkedGroup> g, std::vector<FreeWord> gens,
                     std::string name)
      : SubgroupOracle(std::move(g), std::move(name)),
        generators_(std::move(gens)),
        graph_(generators_, group_->param()) {}

  bool contains(const Element& g) const override {
    return graph_.accepts(std::get<FreeWord>(g));
  }
  std::optional<std::string> coset_key(const Element& g) const override {
    return graph_.coset_key(std::get<FreeWord>(g));
  }
  const StallingsGraph& graph() const { return graph_; }
  const std::vector<FreeWord>& generators() const { return generators_; }

 private:
  std::vector<FreeWord> generators_;
  StallingsGraph graph_;
};

class KernelOracle final : public SubgroupOracle {
 public:
  KernelOracle(std::shared_ptr<const MarkedGroup> g, AbelianHom hom, std::string name)
      : SubgroupOracle(std::move(g), std::move(name)), hom_(std::move(hom)) {}

  bool contains(const Element& g) const override {
    const VecZ v = hom_.eval(*group_, g);
    return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
  }
  std::optional<std::string> coset_key(const Element& g) const override {
    return vec_to_key(hom_.eval(*group_, g));
  }
  std::optional<IndexEvidence> decide_index() const override {
    if (hom_.is_zero()) {
      return IndexEvidence{IndexEvidence::Kind::FiniteIndex, 1, "zero homomorphism: kernel = G"};
    }
    return IndexEvidence{IndexEvidence::Kind::Exact, 0,
                         "hom image has rank " + std::to_string(hom_.image_rank()) +
                             " >= 1, hence is infinite"};
  }
  const AbelianHom& hom() const { return hom_; }

 private:
  AbelianHom hom_;
};

class FiniteKernelOracle final : public SubgroupOracle {
 public:
  FiniteKernelOracle(std::shared_ptr<const MarkedGroup> g, FiniteHom hom, std::string name)
      : SubgroupOracle(std::move(g), std::move(name)), hom_(std::move(hom)) {}

  bool contains(const Element& g) const override {
    const VecZ v = hom_.eval(*group_, g);
    return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
  }
  std::optional<std::string> coset_key(const Element& g) const override {
    return vec_to_key(hom_.eval(*group_, g));
  }
  std::optional<IndexEvidence> decide_index() const override {
    return IndexEvidence{IndexEvidence::Kind::FiniteIndex, hom_.image_order(),
                         "kernel of a hom onto a finite abelian group"};
  }

 private:
  FiniteHom hom_;
};

class ShapeOracle final : public SubgroupOracle {
 public:
  ShapeOracle(std::shared_ptr<const MarkedGroup> g, std::string predicate)
      : SubgroupOracle(std::move(g), "shape:" + predicate), predicate_(std::move(predicate)) {}

  bool contains(const Element& g) const override {
    const Mat3& m = std::get<Mat3>(g);
    return m.m[3] == 0 && m.m[6] == 0 && m.m[7] == 0;
  }

  // Coarse invariant: the bottom row of u*g equals +-(bottom row of g) for
  // upper-triangular u, so the sign-normalized bottom row buckets cosets.
  std::string bucket_key(const Element& g) const override {
    const Mat3& m = std::get<Mat3>(g);
    VecZ row{m.m[6], m.m[7], m.m[8]};
    for (int64_t x : row) {
      if (x > 0) break;
      if (x < 0) {
        for (auto& y : row) y = -y;
        break;
      }
    }
    return vec_to_key(row);
  }

 private:
  std::string predicate_;
};

class PullbackOracle final : public SubgroupOracle {
 public:
  PullbackOracle(std::shared_ptr<const MarkedGroup> g, AbelianHom phi,
                 std::shared_ptr<const MarkedGroup> codomain, OraclePtr inner)
      : SubgroupOracle(std::move(g), "pullback(" + inner->name() + ")"),
        phi_(std::move(phi)),
        codomain_(std::move(codomain)),
        inner_(std::move(inner)) {}

  bool contains(const Element& g) const override {
    return inner_->contains(Element{phi_.eval(*group_, g)});
  }
  std::optional<std::string> coset_key(const Element& g) const override {
    return inner_->coset_key(Element{phi_.eval(*group_, g)});
  }
  std::string bucket_key(const Element& g) const override {
    return inner_->bucket_key(Element{phi_.eval(*group_, g)});
  }
  std::optional<IndexEvidence> decide_index() const override {
    // If phi is onto Z^m, [G : phi^-1(K)] = [Z^m : K]; otherwise defer to BFS.
    LatticeForm image(phi_.images, phi_.codomain_rank);
    const auto idx = image.index();
    if (!idx || *idx != 1) return std::nullopt;
    auto evidence = inner_->decide_index();
    if (evidence) evidence->detail = "pullback along surjection: " + evidence->detail;
    return evidence;
  }

 private:
  AbelianHom phi_;
  std::shared_ptr<const MarkedGroup> codomain_;
  OraclePtr inner_;
};

void require_family(const MarkedGroup& g, Family f, const char* oracle_kind) {
  if (g.family() != f) {
    throw InfeasibleError(std::string(oracle_kind) + " oracle is not supported on " + g.name());
  }
}

// Spot check: membership must hold on products of up to four stated
// generators (and their inverses).
void spot_check_closure(const SubgroupOracle& h, const std::vector<Element>& gens) {
  if (!h.contains(h.group().identity())) {
    throw InfeasibleError("oracle rejects the identity");
  }
  std::vector<Element> pool = gens;
  for (const Element& g : gens) pool.push_back(h.group().inv(g));
  std::vector<Element> layer{h.group().identity()};
  for (int len = 1; len <= 4; ++len) {
    std::vector<Element> next;
    for (const Element& prefix : layer) {
      for (const Element& g : pool) {
        Element p = h.group().mul(prefix, g);
        if (!h.contains(p)) {
          throw InfeasibleError("oracle is not closed under its stated generators");
        }
        next.push_back(std::move(p));
      }
    }
    if (next.size() > 4096) next.resize(4096);
    layer = std::move(next);
  }
}

}  // namespace

OraclePtr make_trivial_oracle(std::shared_ptr<const MarkedGroup> g) {
  return std::make_shared<TrivialOracle>(std::move(g));
}

OraclePtr make_lattice_oracle(std::shared_ptr<const MarkedGroup> g, std::vector<VecZ> basis) {
  require_family(*g, Family::FreeAbelian, "lattice");
  LatticeForm form(basis, g->param());
  std::ostringstream name;
  name << "lattice:[";
  for (size_t i = 0; i < basis.size(); ++i) {
    if (i) name << ",";
    name << element_to_string(Element{basis[i]});
  }
  name << "]";
  auto oracle = std::make_shared<LatticeOracle>(g, basis, std::move(form), name.str());
  std::vector<Element> gens;
  for (const VecZ& b : basis) gens.emplace_back(b);
  spot_check_closure(*oracle, gens);
  return oracle;
}

OraclePtr make_free_subgroup_oracle(std::shared_ptr<const MarkedGroup> g,
                                    std::vector<FreeWord> generators) {
  require_family(*g, Family::Free, "freegens");
  std::ostringstream name;
  name << "freegens:[";
  for (size_t i = 0; i < generators.size(); ++i) {
    if (i) name << ",";
    name << element_to_string(Element{generators[i]});
  }
  name << "]";
  auto oracle = std::make_shared<FreeSubgroupOracle>(g, generators, name.str());
  std::vector<Element> gens;
  for (const FreeWord& w : generators) gens.emplace_back(free_reduce(w));
  spot_check_closure(*oracle, gens);
  return oracle;
}

OraclePtr make_kernel_oracle(std::shared_ptr<const MarkedGroup> g, AbelianHom hom) {
  validate_hom(*g, hom);
  const std::string name = "kernel:" + g->name() + hom.describe();
  return std::make_shared<KernelOracle>(std::move(g), std::move(hom), name);
}

OraclePtr make_finite_kernel_oracle(std::shared_ptr<const MarkedGroup> g, FiniteHom hom) {
  validate_hom(*g, hom);
  const std::string name = "kernel:" + g->name() + hom.describe();
  return std::make_shared<FiniteKernelOracle>(std::move(g), std::move(hom), name);
}

OraclePtr make_shape_oracle(std::shared_ptr<const MarkedGroup> g, const std::string& predicate) {
  require_family(*g, Family::SL3Z, "shape");
  if (predicate != "upper-triangular") {
    throw UsageError("unknown shape predicate \"" + predicate + "\"");
  }
  return std::make_shared<ShapeOracle>(std::move(g), predicate);
}

OraclePtr make_pullback_oracle(std::shared_ptr<const MarkedGroup> g, AbelianHom phi,
                               std::shared_ptr<const MarkedGroup> codomain, OraclePtr inner) {
  validate_hom(*g, phi);
  if (codomain->family() != Family::FreeAbelian || codomain->param() != phi.codomain_rank) {
    throw InfeasibleError("pullback codomain must be Z^m matching the homomorphism");
  }
  if (&inner->group() != codomain.get()) {
    // allow equal-by-value groups as well
    if (inner->group().name() != codomain->name()) {
      throw InfeasibleError("pullback inner oracle lives in the wrong group");
    }
  }
  return std::make_shared<PullbackOracle>(std::move(g), std::move(phi), std::move(codomain),
                                          std::move(inner));
}

const StallingsGraph* stallings_graph_of(const SubgroupOracle& h) {
  const auto* fs = dynamic_cast<const FreeSubgroupOracle*>(&h);
  return fs != nullptr ? &fs->graph() : nullptr;
}

const AbelianHom* abelian_hom_of(const SubgroupOracle& h) {
  const auto* k = dynamic_cast<const KernelOracle*>(&h);
  return k != nullptr ? &k->hom() : nullptr;
}

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& context) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError("malformed JSON in " + context + ": \"" + text + "\"");
  return j;
}

std::vector<VecZ> parse_vec_list(const json& j, const std::string& context) {
  std::vector<VecZ> out;
  if (!j.is_array()) throw UsageError(context + " expects a JSON array");
  for (const auto& row : j) {
    if (!row.is_array()) throw UsageError(context + " expects an array of integer vectors");
    VecZ v;
    for (const auto& x : row) v.push_back(x.get<int64_t>());
    out.push_back(std::move(v));
  }
  return out;
}

// "Z2->Z:[1,-1]" after the "kernel:" prefix.
OraclePtr parse_kernel(std::shared_ptr<const MarkedGroup> g, const std::string& body) {
  const size_t arrow = body.find("->");
  if (arrow == std::string::npos) throw UsageError("kernel descriptor needs '->'");
  const size_t colon = body.find(':', arrow);
  if (colon == std::string::npos) throw UsageError("kernel descriptor needs ':<images>'");
  const std::string domain = body.substr(0, arrow);
  const std::string codomain = body.substr(arrow + 2, colon - arrow - 2);
  const std::string images_text = body.substr(colon + 1);

  const GroupSpec domain_spec = parse_group_spec(domain);
  if (domain_spec.family != g->family() ||
      (domain_spec.family != Family::Heisenberg && domain_spec.family != Family::SL3Z &&
       domain_spec.param != g->param())) {
    throw InfeasibleError("kernel domain \"" + domain + "\" does not match group " + g->name());
  }

  const json images_json = parse_json(images_text, "kernel images");
  auto images_as_vectors = [&](int m) {
    std::vector<VecZ> images;
    for (const auto& item : images_json) {
      if (item.is_number_integer()) {
        if (m != 1) throw UsageError("kernel images must be vectors for codomain rank > 1");
        images.push_back(VecZ{item.get<int64_t>()});
      } else {
        VecZ v;
        for (const auto& x : item) v.push_back(x.get<int64_t>());
        images.push_back(std::move(v));
      }
    }
    return images;
  };

  if (codomain == "Z" || codomain.rfind("Z^", 0) == 0) {
    AbelianHom hom;
    hom.codomain_rank = codomain == "Z" ? 1 : std::stoi(codomain.substr(2));
    hom.images = images_as_vectors(hom.codomain_rank);
    return make_kernel_oracle(std::move(g), std::move(hom));
  }
  if (codomain.rfind("Z/", 0) == 0) {
    FiniteHom hom;
    std::stringstream ss(codomain);
    std::string part;
    while (std::getline(ss, part, 'x')) {
      if (part.rfind("Z/", 0) != 0) throw UsageError("finite codomain must look like Z/q1xZ/q2");
      hom.moduli.push_back(std::stoll(part.substr(2)));
    }
    hom.images = images_as_vectors(static_cast<int>(hom.moduli.size()));
    return make_finite_kernel_oracle(std::move(g), std::move(hom));
  }
  throw UsageError("unknown kernel codomain \"" + codomain + "\"");
}

}  // namespace

OraclePtr parse_subgroup(std::shared_ptr<const MarkedGroup> g, const std::string& descriptor) {
  if (descriptor == "trivial") return make_trivial_oracle(std::move(g));
  if (descriptor.rfind("lattice:", 0) == 0) {
    const json j = parse_json(descriptor.substr(8), "lattice basis");
    return make_lattice_oracle(std::move(g), parse_vec_list(j, "lattice basis"));
  }
  if (descriptor.rfind("freegens:", 0) == 0) {
    std::string body = descriptor.substr(9);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
      throw UsageError("freegens expects [w1,w2,...]");
    }
    body = body.substr(1, body.size() - 2);
    std::vector<FreeWord> words;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) words.push_back(parse_free_word(item, g->param()));
    }
    if (words.empty()) throw UsageError("freegens needs at least one word");
    return make_free_subgroup_oracle(std::move(g), std::move(words));
  }
  if (descriptor.rfind("kernel:", 0) == 0) {
    return parse_kernel(std::move(g), descriptor.substr(7));
  }
  if (descriptor.rfind("shape:", 0) == 0) {
    return make_shape_oracle(std::move(g), descriptor.substr(6));
  }
  throw UsageError("unknown subgroup descriptor \"" + descriptor + "\"");
}

std::vector<OraclePtr> parse_roster(std::shared_ptr<const MarkedGroup> g,
                                    const std::string& text) {
  std::vector<OraclePtr> roster;
  if (text == "trivial") {
    roster.push_back(make_trivial_oracle(g));
    return roster;
  }
  if (text == "lines2") {
    require_family(*g, Family::FreeAbelian, "lines2 roster");
    if (g->param() != 2) throw InfeasibleError("lines2 roster requires Z^2");
    for (const VecZ& dir :
         {VecZ{1, 0}, VecZ{0, 1}, VecZ{1, 1}, VecZ{1, -1}}) {
      roster.push_back(make_lattice_oracle(g, {dir}));
    }
    roster.push_back(make_trivial_oracle(g));
    return roster;
  }
  if (text == "free2") {
    require_family(*g, Family::Free, "free2 roster");
    roster.push_back(make_free_subgroup_oracle(g, {FreeWord{1}}));
    roster.push_back(make_free_subgroup_oracle(g, {FreeWord{2}}));
    AbelianHom ha;
    ha.codomain_rank = 1;
    ha.images.assign(g->param(), VecZ{0});
    ha.images[0] = VecZ{1};
    roster.push_back(make_kernel_oracle(g, ha));
    AbelianHom hb = ha;
    hb.images[0] = VecZ{0};
    hb.images[1] = VecZ{1};
    roster.push_back(make_kernel_oracle(g, hb));
    roster.push_back(make_trivial_oracle(g));
    return roster;
  }
  if (text == "heis") {
    require_family(*g, Family::Heisenberg, "heis roster");
    for (const VecZ& images : {VecZ{1, 0}, VecZ{0, 1}, VecZ{1, 1}, VecZ{1, -1}}) {
      AbelianHom hom;
      hom.codomain_rank = 1;
      hom.images = {VecZ{images[0]}, VecZ{images[1]}};
      roster.push_back(make_kernel_oracle(g, hom));
    }
    roster.push_back(make_trivial_oracle(g));
    return roster;
  }
  if (text == "lamp") {
    require_family(*g, Family::Lamplighter, "lamp roster");
    AbelianHom hom;
    hom.codomain_rank = 1;
    hom.images = {VecZ{1}};
    roster.push_back(make_kernel_oracle(g, hom));
    roster.push_back(make_trivial_oracle(g));
    return roster;
  }
  if (text == "sl3z") {
    require_family(*g, Family::SL3Z, "sl3z roster");
    roster.push_back(make_shape_oracle(g, "upper-triangular"));
    roster.push_back(make_trivial_oracle(g));
    return roster;
  }
  // ';'-separated descriptor list
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (!item.empty()) roster.push_back(parse_subgroup(g, item));
  }
  if (roster.empty()) throw UsageError("empty roster \"" + text + "\"");
  return roster;
}

}  // namespace cosetcover
