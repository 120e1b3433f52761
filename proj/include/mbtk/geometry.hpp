#pragma once
#include <array>
#include <vector>

namespace mbtk {

using Vec3 = std::array<double, 3>;

/// Nuclear frame: centers in Bohr with per-center charges.
struct Geometry {
  std::vector<Vec3> centers;
  std::vector<double> charges;

  std::size_t size() const { return centers.size(); }
};

/// Linear chain of n_atoms hydrogens along z with the given spacing (Bohr).
Geometry build_chain(int n_atoms, double spacing);

double distance(const Vec3& a, const Vec3& b);

}  // namespace mbtk
