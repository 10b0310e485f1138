#include "jvoa/space.hpp"

#include "jvoa/errors.hpp"

namespace jvoa {

std::string_view family_name(Family f) { return f == Family::B ? "B" : "C"; }

Family parse_family(std::string_view text) {
  if (text == "B" || text == "b") return Family::B;
  if (text == "C" || text == "c") return Family::C;
  throw InvalidSpace("unknown family '" + std::string(text) + "'");
}

SpaceSpec SpaceSpec::symplectic(int dim, bool allow_dim_2) {
  if (dim <= 0 || dim % 2 != 0) throw InvalidSpace("symplectic dimension must be even and positive");
  if (dim < 4 && !allow_dim_2)
    throw InvalidSpace("symplectic dimension must be at least 4 (pass the dim-2 override for raw algebra work)");
  return SpaceSpec(Family::C, dim, allow_dim_2);
}

SpaceSpec SpaceSpec::orthogonal(int dim) {
  if (dim <= 0) throw InvalidSpace("orthogonal dimension must be positive");
  return SpaceSpec(Family::B, dim, false);
}

SpaceSpec SpaceSpec::make(Family family, int dim, bool allow_dim_2) {
  return family == Family::C ? symplectic(dim, allow_dim_2) : orthogonal(dim);
}

void SpaceSpec::check_index(int a) const {
  if (a < 0 || a >= dim_)
    throw IndexOutOfRange("basis index " + std::to_string(a) + " outside [0, " + std::to_string(dim_) + ")");
}

int SpaceSpec::pairing(int a, int b) const {
  check_index(a);
  check_index(b);
  if (family_ == Family::B) return a == b ? 1 : 0;
  const int n = rank();
  // <psi*_i, psi_j> = delta_ij, <psi_i, psi*_j> = -delta_ij
  if (a >= n && b < n) return a - n == b ? 1 : 0;
  if (a < n && b >= n) return b - n == a ? -1 : 0;
  return 0;
}

std::string SpaceSpec::label(int a) const {
  check_index(a);
  if (family_ == Family::B) return "e" + std::to_string(a + 1);
  const int n = rank();
  return a < n ? "psi" + std::to_string(a + 1) : "psi" + std::to_string(a - n + 1) + "*";
}

}  // namespace jvoa
