#include "cosetcover/hom.hpp"

#include "cosetcover/errors.hpp"
#include "cosetcover/lattice.hpp"

#include <set>
#include <sstream>

namespace cosetcover {

VecZ AbelianHom::eval(const MarkedGroup& domain, const Element& g) const {
  const VecZ ab = domain.abelianize(g);
  VecZ out(codomain_rank, 0);
  for (size_t i = 0; i < ab.size(); ++i) {
    if (ab[i] == 0) continue;
    for (int j = 0; j < codomain_rank; ++j) out[j] += ab[i] * images[i][j];
  }
  return out;
}

bool AbelianHom::is_zero() const {
  for (const VecZ& v : images) {
    for (int64_t x : v) {
      if (x != 0) return false;
    }
  }
  return true;
}

int AbelianHom::image_rank() const {
  LatticeForm lat(images, codomain_rank);
  return lat.rank();
}

std::string AbelianHom::describe() const {
  std::ostringstream out;
  out << "->Z^" << codomain_rank << ":[";
  for (size_t i = 0; i < images.size(); ++i) {
    if (i) out << ",";
    out << element_to_string(Element{images[i]});
  }
  out << "]";
  return out.str();
}

VecZ FiniteHom::eval(const MarkedGroup& domain, const Element& g) const {
  const VecZ ab = domain.abelianize(g);
  VecZ out(moduli.size(), 0);
  for (size_t i = 0; i < ab.size(); ++i) {
    for (size_t j = 0; j < moduli.size(); ++j) {
      out[j] = (out[j] + ab[i] % moduli[j] * (images[i][j] % moduli[j])) % moduli[j];
    }
  }
  for (size_t j = 0; j < moduli.size(); ++j) out[j] = ((out[j] % moduli[j]) + moduli[j]) % moduli[j];
  return out;
}

int64_t FiniteHom::image_order() const {
  // Closure of the generator images inside the finite product group.
  std::set<VecZ> seen;
  std::vector<VecZ> frontier;
  VecZ zero(moduli.size(), 0);
  seen.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    VecZ cur = frontier.back();
    frontier.pop_back();
    for (const VecZ& img : images) {
      VecZ next(moduli.size());
      for (size_t j = 0; j < moduli.size(); ++j) {
        next[j] = (((cur[j] + img[j]) % moduli[j]) + moduli[j]) % moduli[j];
      }
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return static_cast<int64_t>(seen.size());
}

std::string FiniteHom::describe() const {
  std::ostringstream out;
  out << "->";
  for (size_t j = 0; j < moduli.size(); ++j) {
    if (j) out << "x";
    out << "Z/" << moduli[j];
  }
  out << ":[";
  for (size_t i = 0; i < images.size(); ++i) {
    if (i) out << ",";
    out << element_to_string(Element{images[i]});
  }
  out << "]";
  return out.str();
}

namespace {

void check_image_shape(const MarkedGroup& domain, size_t image_count, size_t entry_count,
                       size_t expected_entries) {
  if (static_cast<int>(image_count) != domain.abelianization_rank()) {
    throw InfeasibleError("homomorphism on " + domain.name() + " needs " +
                          std::to_string(domain.abelianization_rank()) +
                          " generator images, got " + std::to_string(image_count));
  }
  if (entry_count != expected_entries) {
    throw InfeasibleError("homomorphism image vectors have the wrong dimension");
  }
}

}  // namespace

void validate_hom(const MarkedGroup& domain, const AbelianHom& hom) {
  if (hom.codomain_rank < 1) throw InfeasibleError("homomorphism codomain rank must be >= 1");
  if (domain.family() == Family::SL3Z) {
    if (!hom.images.empty()) {
      throw InfeasibleError("sl3z admits only the zero homomorphism to Z^m");
    }
    return;
  }
  size_t entries = hom.images.empty() ? static_cast<size_t>(hom.codomain_rank)
                                      : hom.images.front().size();
  for (const VecZ& v : hom.images) entries = v.size() == entries ? entries : SIZE_MAX;
  check_image_shape(domain, hom.images.size(), entries, static_cast<size_t>(hom.codomain_rank));
}

void validate_hom(const MarkedGroup& domain, const FiniteHom& hom) {
  if (hom.moduli.empty()) throw InfeasibleError("finite homomorphism needs at least one modulus");
  for (int64_t q : hom.moduli) {
    if (q < 2) throw InfeasibleError("finite homomorphism moduli must be >= 2");
  }
  if (domain.family() == Family::SL3Z) {
    if (!hom.images.empty()) {
      throw InfeasibleError("sl3z admits only the zero homomorphism to finite abelian groups");
    }
    return;
  }
  size_t entries = hom.images.empty() ? hom.moduli.size() : hom.images.front().size();
  for (const VecZ& v : hom.images) entries = v.size() == entries ? entries : SIZE_MAX;
  check_image_shape(domain, hom.images.size(), entries, hom.moduli.size());
}

}  // namespace cosetcover
