#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pa/lattice.hpp"
#include "pa/poset.hpp"

namespace pa {

/// A tubing: canonically ordered set of tubes (masks of the host poset).
using Tubing = std::vector<Mask>;

inline constexpr long long kDefaultBudget = 10'000'000;

/// True iff for every element x with boundary contained in s, s meets x's
/// bundle. Quantified over all of P, so the empty set is unfilled whenever P
/// has a minimal element.
bool is_filled(const Poset& p, Mask s);

/// Tube: filled, connected, non-empty, proper lower set.
bool is_tube(const Poset& p, Mask s);

/// All tubes, canonically ordered. Enumerates filled lower sets directly
/// (bundle by bundle along a linear extension of bundles) and filters for
/// connectivity and properness.
std::vector<Mask> tubes(const Poset& p);

/// Disjoint or nested.
bool is_compatible(Mask t1, Mask t2);

/// Tubing test: members are tubes (else NotATube), pairwise compatible, the
/// union of every pairwise-disjoint subfamily is filled, and the union of the
/// whole tubing is a proper subset of the elements.
bool is_tubing(const Poset& p, const Tubing& t);

struct EnumOptions {
  std::optional<int> max_size;
  long long budget = kDefaultBudget;
};

/// All tubings, including the empty one, canonically ordered.
/// Throws BudgetExceeded past options.budget results.
std::vector<Tubing> tubings(const Poset& p, const EnumOptions& options = {});

/// n - b.
int dimension(const Poset& p);

/// Direct (oracle) construction: the face lattice of KP with faces = tubings
/// under reverse containment; dim(T) = (n-b) - |T|.
FaceLattice face_poset(const Poset& p, long long budget = kDefaultBudget);

std::vector<long long> f_vector(const Poset& p, long long budget = kDefaultBudget);

/// {x} ∪ ⋃T if that is a tube of P, else nullopt. T holds pairwise-disjoint
/// tubes of P - x expressed in P's indexing; x must have a trivial bundle.
std::optional<Mask> x_fill(const Poset& p, int x, const std::vector<Mask>& disjoint_tubes);

/// Connected components of u - {x} (u a tube containing x), each validated
/// as a tube of P - x; returned in P's indexing, canonically ordered.
/// Throws ComponentNotTube on validation failure.
std::vector<Mask> tube_components(const Poset& p, int x, Mask u);

/// Canonical label of a tubing, e.g. "[{a},{b,c,q}]".
std::string tubing_label(const Poset& p, const Tubing& t);

}  // namespace pa
