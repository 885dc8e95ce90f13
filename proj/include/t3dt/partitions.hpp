#pragma once

// Partitions of n, block Levi subgroups of GL_n / SL_n / PGL_n and their
// additive analogue, relative Weyl groups with conjugacy-class data, and
// the centre structure of Levis (free rank and component group, with the
// Weyl action on components computed from the character lattice).

#include <map>
#include <vector>

#include "t3dt/exact.hpp"
#include "t3dt/linalg.hpp"

namespace t3dt {

class Partition {
 public:
  Partition() = default;
  // Canonicalizes to weakly decreasing order; parts must be positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // part size -> how many times it occurs, largest size first
  std::map<int, int, std::greater<int>> multiplicities() const;

  int gcd_of_parts() const;  // 0 for the empty partition

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b);  // lexicographic

  std::string str() const;  // "(3,1,1)"

 private:
  std::vector<int> parts_;
};

// All partitions of n in lexicographically decreasing order, (n) first.
std::vector<Partition> partitions_of(int n);

enum class GroupKind { GL, SL, PGL, GLAdditive };

const char* kind_name(GroupKind k);          // "gl" | "sl" | "pgl" | "gl_add"
GroupKind kind_from_name(std::string_view);  // throws parse_error

struct LeviDescriptor {
  GroupKind kind;
  Partition lambda;
  int dim_centre;      // length l for GL/GLAdditive, l-1 for SL/PGL
  Integer weyl_order;  // prod m_j!
};

LeviDescriptor levi_descriptor(GroupKind kind, const Partition& lambda);

// A conjugacy class of the relative Weyl group prod_j S_{m_j}: one cycle
// type per distinct part size.
struct CycleType {
  // (part size j, cycle type of the S_{m_j} factor), largest j first
  std::vector<std::pair<int, Partition>> factors;
  Integer class_size;

  // all cycle lengths of the block permutation, concatenated
  std::vector<int> cycles() const;
  // total number of transpositions mod 2 (the sign character)
  int transposition_parity() const;
};

std::vector<CycleType> weyl_cycle_types(const Partition& lambda);

struct CentreStructure {
  int free_rank;
  Integer torsion_order;
};

// GL -> (l, 1); SL -> (l-1, gcd(lambda)) via the Smith normal form of the
// column (lambda_1, ..., lambda_l); PGL -> (l-1, 1).
CentreStructure centre_structure(GroupKind kind, const Partition& lambda);

// pi0(Z(L_{SL_n,lambda})) = Z/g with g = gcd(lambda), together with the
// unit of Z/g by which each adjacent equal-part swap generator of the
// relative Weyl group acts on it.
struct ComponentGroupData {
  Partition lambda;
  Integer g;
  // part size j -> the unit image of the transpositions of S_{m_j};
  // entries exist only for sizes with m_j >= 2
  std::map<int, Integer> generator_units;
  bool is_trivial;
};

ComponentGroupData component_action(const Partition& lambda);

// Number of fixed points of a class representative acting on (Z/g)^3.
// Throws shape_error when tau does not belong to the same Weyl group.
Integer fixed_components(const ComponentGroupData& data, const CycleType& tau);

Integer factorial(int n);

}  // namespace t3dt
