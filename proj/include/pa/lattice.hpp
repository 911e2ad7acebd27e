#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pa/errors.hpp"

namespace pa {

/// Graded face lattice: faces carry a dimension and a label; `covers` lists
/// the faces of dimension dim-1 immediately below. There is a single top
/// face of dimension `top_dim` (the polytope / the empty tubing); the formal
/// empty face of rank -1 is implicit.
struct FaceLattice {
  struct Face {
    int dim = 0;
    std::string label;
    std::vector<int> covers;
  };

  int top_dim = 0;
  int top = -1;
  std::vector<Face> faces;

  /// Face counts by dimension 0..top_dim-1 (the top face excluded).
  std::vector<long long> f_vector() const;
  /// Coefficients of the f-polynomial including the top face,
  /// index = dimension. Multiplicative under polytope products.
  std::vector<long long> f_polynomial() const;
  int count_faces(int dim) const;
};

/// Every covering edge connects consecutive dimensions and each dimension
/// 0..top_dim is populated (single face at the top).
bool graded_check(const FaceLattice& l);

/// Euler relation sum (-1)^i f_i = 1 - (-1)^d.
bool euler_check(const FaceLattice& l);

/// Diamond property with the formal empty face adjoined at rank -1:
/// every interval of length two has exactly two interior elements.
bool diamond_check(const FaceLattice& l);

/// Rank- and incidence-preserving bijection from l1's faces to l2's, if one
/// exists. Exact backtracking with iterated-refinement pruning.
/// `colors1`/`colors2`, when given, constrain the bijection to map equal
/// colors to equal colors (used to pin facet labels).
std::optional<std::vector<int>> lattice_iso(const FaceLattice& l1, const FaceLattice& l2,
                                            long long budget = 50'000'000,
                                            const std::vector<int>* colors1 = nullptr,
                                            const std::vector<int>* colors2 = nullptr);

std::string lattice_to_dot(const FaceLattice& l);

std::string fvec_to_string(const std::vector<long long>& f);

}  // namespace pa
