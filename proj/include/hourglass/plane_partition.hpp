#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hourglass {

using BigInt = boost::multiprecision::cpp_int;

struct Box3 {
  int a = 0, b = 0, c = 0;
  friend bool operator==(const Box3&, const Box3&) = default;
};

// A plane partition in a box, stored as its height matrix.  Heights are
// 0-indexed internally; documentation, errors and serialization speak of
// entries p_{i,j} with 1 <= i <= a, 1 <= j <= b.
class PlanePartition {
 public:
  // Validates the stacking condition and entry bounds; throws
  // std::invalid_argument naming the offending cell otherwise.
  PlanePartition(Box3 box, std::vector<std::vector<int>> heights);

  const Box3& box() const { return box_; }
  const std::vector<std::vector<int>>& heights() const { return heights_; }
  // 1-indexed accessor matching the matrix notation p_{i,j}.
  int at(int i, int j) const { return heights_[i - 1][j - 1]; }

  bool contains_cube(int i, int j, int k) const {
    return 1 <= i && i <= box_.a && 1 <= j && j <= box_.b && k >= 1 &&
           at(i, j) >= k;
  }
  long long cube_count() const;

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
  friend bool operator<(const PlanePartition& x, const PlanePartition& y) {
    return x.heights_ < y.heights_;
  }

 private:
  Box3 box_;
  std::vector<std::vector<int>> heights_;
};

enum class SymmetryClass { Plain, SPP, CSPP, TSPP, SCPP, TSSCPP };

std::string to_string(SymmetryClass c);
std::optional<SymmetryClass> symmetry_class_from_string(const std::string& s);

// Throws std::invalid_argument unless the box shape admits the class
// (SPP: a=b; CSPP/TSPP: a=b=c; TSSCPP: a=b=c even).
void require_class_shape(SymmetryClass c, const Box3& box);

// All plane partitions in the box, ordered lexicographically on the
// row-major flattened height matrix, largest first.
std::vector<PlanePartition> enumerate_box(const Box3& box);
// Streaming form of the above (same order).
void for_each_in_box(const Box3& box,
                     const std::function<void(const PlanePartition&)>& fn);

// MacMahon's product formula, evaluated exactly.
BigInt macmahon_count(const Box3& box);

bool has_symmetry(const PlanePartition& p, SymmetryClass c);
// The "i-th row conjugate to i-th column" formulation of cyclic symmetry;
// used as a cross-check against the cube-set rotation.
bool cspp_by_conjugation(const PlanePartition& p);

std::vector<PlanePartition> enumerate_class(SymmetryClass c, const Box3& box);

enum class SymmetryOp { transpose, complement, cyclic_rotate };
PlanePartition apply_symmetry_op(const PlanePartition& p, SymmetryOp op);

// Adds the cube (i,j,k) if absent, removes it if present; throws when the
// toggle would break the stacking condition.
PlanePartition toggle_cube(const PlanePartition& p, int i, int j, int k);

}  // namespace hourglass
