#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "msindex/counting.hpp"
#include "msindex/tree.hpp"

namespace msindex {

/// Replace edge y-x by y-x_new, where x_new lies on x's side of y-x.
struct Rotation {
  Vertex y = -1;
  Vertex x = -1;
  Vertex x_new = -1;
  friend bool operator==(const Rotation&, const Rotation&) = default;
};

/// Parses "y x x_new" (decimal ids separated by single spaces).
Rotation parse_rotation(std::string_view text);
std::string format_rotation(const Rotation& rot);

/// Throws InvalidRotation unless rot is a rotation of tree.
void validate_rotation(const Tree& tree, const Rotation& rot);

Tree apply_rotation(const Tree& tree, const Rotation& rot);

/// Counts attached to a rotation. x_i range over neighbours of x other
/// than y and z, x'_i over neighbours of x_new other than z', and every
/// T_v is the component of T - {x, x_new} holding v.
///
///   X   = prod F(T_{x_i})       Xbar   = prod F(T_{x_i} - x_i)
///   Xp  = prod F(T_{x'_i})      Xpbar  = prod F(T_{x'_i} - x'_i)
///   Y   = F(T_y)                Ybar   = F(T_y - y)
///   Z   = F(T_z)                Zbar_z = F(T_z - z)
///   Zbar_zp = F(T_z - z')       Zbar_zzp = F(T_z - {z, z'})
///
/// z and z' are the neighbours of x and x_new on the x-x_new path; when x
/// and x_new are adjacent they are reported absent and the four Z counts
/// are 1.
struct RotationDecomposition {
  Count X, Xbar, Xp, Xpbar, Y, Ybar, Z, Zbar_z, Zbar_zp, Zbar_zzp;
  std::optional<Vertex> z;
  std::optional<Vertex> z_new;
};

RotationDecomposition decompose(const Tree& tree, const Rotation& rot);

/// F(T) - F(rot(T)) counted directly, and the factored form
/// (X Xpbar Zbar_zp - Xbar Xp Zbar_z) (Y - Ybar). They always agree.
struct DeltaIdentity {
  Count lhs;
  Count rhs;
};
DeltaIdentity f_delta_identity(const Tree& tree, const Rotation& rot);

/// F strictly drops iff X Xpbar Zbar_zp > Xbar Xp Zbar_z.
bool decreases_f(const RotationDecomposition& d);

/// Same stability number and strictly smaller F.
bool is_good(const Tree& tree, const Rotation& rot);

/// First good rotation in scan order (y, then x among neighbours of y,
/// then x_new, all ascending), or nullopt.
std::optional<Rotation> find_good_rotation(const Tree& tree);

/// Calls visit(rot) for every rotation of the tree in scan order.
template <typename Visit>
void for_each_rotation(const Tree& tree, Visit&& visit);

/// Good rotation of a tree that is neither a tree of stars nor a path,
/// built from the deepest witness leaf. Throws NotApplicable otherwise.
Rotation construct_good_rotation_nontos(const Tree& tree);

/// For an unbalanced tree of stars: move a leaf-side neighbour of a
/// maximum-degree center over to a minimum-degree center. Throws
/// NotApplicable for balanced trees and non-trees-of-stars.
Rotation rebalance_rotation(const Tree& tree);

template <typename Visit>
void for_each_rotation(const Tree& tree, Visit&& visit) {
  for (Vertex y = 0; y < tree.order(); ++y)
    for (Vertex x : tree.neighbors(y)) {
      auto side = tree.side_of(x, y);
      for (Vertex x_new = 0; x_new < tree.order(); ++x_new)
        if (side[x_new] && x_new != x) visit(Rotation{y, x, x_new});
    }
}

}  // namespace msindex
