#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rigid/lattice.hpp"

namespace rigid {

/// Subsets of the finite simple roots, as bitmasks over simple-root indices.
using Subset = std::uint32_t;

inline bool contains(Subset s, std::size_t i) { return (s >> i) & 1U; }
inline std::size_t subset_size(Subset s) { return static_cast<std::size_t>(__builtin_popcount(s)); }
inline Subset full_subset(std::size_t k) { return k >= 32 ? ~0U : ((1U << k) - 1U); }
/// Renders a subset with 1-based indices, e.g. "{1,2}".
std::string subset_name(Subset s);

/// X = Z^m and X^vee = Z^m paired by the dot product.
struct BasedRootDatum {
  std::string name;
  std::size_t m = 0;
  std::vector<IntVec> simple_roots;
  std::vector<IntVec> simple_coroots;
  std::vector<std::string> param_orbit_names;

  std::size_t rank() const { return simple_roots.size(); }
};

struct RootSystem {
  std::vector<IntVec> roots;
  std::vector<IntVec> coroots;  // coroots[i] belongs to roots[i]
  std::vector<bool> positive;
  std::vector<int> simple_index;          // root index of the i-th simple root
  std::vector<std::vector<int>> cartan;   // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<RatVec> root_coords;        // coefficients in the simple roots
  std::vector<RatVec> coroot_coords;      // coefficients in the simple coroots
  std::vector<std::vector<int>> components;  // irreducible components (simple indices)

  int find(const IntVec& root) const;  // -1 if absent
  int find_coroot(const IntVec& coroot) const;
  std::size_t num_positive() const;
  /// Component containing simple root i.
  int component_of(int i) const;
};

/// Checks the Cartan conditions, finiteness and reducedness; throws NotCartan,
/// InfiniteWeylGroup or NotReduced.
RootSystem generate_root_system(const BasedRootDatum& d, std::size_t root_bound = 20000);

/// Full validation; returns |W| as a certificate.
std::size_t validate_datum(const BasedRootDatum& d, std::size_t weyl_bound = 100000);

std::vector<std::string> preset_names();
BasedRootDatum preset(std::string_view name);

/// {"name", "lattice_rank", "simple_roots", "simple_coroots",
///  optional "param_orbit_names"}; errors cite line or field.
BasedRootDatum parse_datum_json(std::string_view text);
BasedRootDatum load_datum_file(const std::string& path);

/// Semisimple quotient X_J = X / (X cap (J^vee)^perp), realized as the image
/// lattice of x -> (<x, alpha_j^vee>)_{j in J}.
struct QuotientDatum {
  BasedRootDatum datum;
  std::vector<int> ambient_index;  // quotient simple j' is ambient simple ambient_index[j']
  IntMat to_quotient;              // r x m: coordinates of the image of x
};
QuotientDatum semisimple_quotient(const BasedRootDatum& d, Subset J);

/// Coordinates on X / (X cap QJ) (free part): P x, with P of size (m - rank J) x m,
/// surjective onto Z^(m - rank J), kernel the saturation of the J-root lattice.
IntMat cotwist_coordinates(const BasedRootDatum& d, Subset J);

}  // namespace rigid
