#pragma once

#include "cosetcover/element.hpp"
#include "cosetcover/group.hpp"

#include <string>
#include <vector>

namespace cosetcover {

// Homomorphism G -> Z^m factoring through the abelianization: one image
// vector per abelianized basis generator (d for Z^d, k for F_k, {x, y} for
// Heisenberg, {t} for lamplighter, none for SL3Z). Well-defined on elements,
// not words, so it works for any marking of G.
struct AbelianHom {
  int codomain_rank = 1;
  std::vector<VecZ> images;  // size = domain abelianization rank

  VecZ eval(const MarkedGroup& domain, const Element& g) const;
  bool is_zero() const;
  // Rank of the image lattice (0 = trivial image, codomain_rank = finite cokernel).
  int image_rank() const;
  std::string describe() const;
};

// Homomorphism onto a finite abelian group Z/q1 x ... x Z/qm, evaluated as the
// abelian hom reduced componentwise. Kernels have finite index |image|.
struct FiniteHom {
  std::vector<int64_t> moduli;  // each >= 2
  std::vector<VecZ> images;     // entries taken mod the respective modulus

  VecZ eval(const MarkedGroup& domain, const Element& g) const;
  // Order of the image subgroup; equals the index of the kernel.
  int64_t image_order() const;
  std::string describe() const;
};

// Validates image count against the domain and constrains SL3Z (perfect, so
// only the zero hom exists).
void validate_hom(const MarkedGroup& domain, const AbelianHom& hom);
void validate_hom(const MarkedGroup& domain, const FiniteHom& hom);

}  // namespace cosetcover
