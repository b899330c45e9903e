#pragma once

#include "torsioncover/f9.hpp"
#include "torsioncover/numeric.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace tc {

using Mat3 = std::array<F9, 9>;   // row major
using Vec3 = std::array<F9, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b);
Vec3 mat_apply(const Mat3& m, const Vec3& v);
Mat3 conj_transpose(const Mat3& m);
F9 mat_det(const Mat3& m);
F9 mat_trace(const Mat3& m);
Mat3 mat_identity();
Mat3 mat_neg(const Mat3& m);
Mat3 mat_scale(F9 s, const Mat3& m);
bool is_unitary(const Mat3& m);  // conj(M)^T M = Id for the standard form
uint64_t mat_key(const Mat3& m);
std::string mat_str(const Mat3& m);

// H(u, v) = sum conj(u_k) v_k; H(v) = H(v, v) takes values in F3.
F9 hermitian_pairing(const Vec3& u, const Vec3& v);
int hermitian_value(const Vec3& v);

// A_n / B_n: number of vectors in F_(q^2)^n with H(v) = 1 (any prescribed
// unit value) respectively H(v) = 0, for the standard form.
// Closed forms A_n = q^(2n-1) + (-q)^(n-1), B_n = q^(2n-1) - (q-1)(-q)^(n-1).
Integer hermitian_count_unit(long n, long q);
Integer hermitian_count_zero(long n, long q);
// Exhaustive counts for small n, q, used as the independent check.
Integer hermitian_count_bruteforce(long n, long q, int value);

// monic cubic char poly over F9: x^3 + c[2] x^2 + c[1] x + c[0]
using CharPolyF9 = std::array<F9, 3>;
CharPolyF9 mat_charpoly(const Mat3& m);

struct ConjClass {
  std::string label;   // ATLAS-style: element order + letter by class size
  long size = 0;
  long order = 0;
  F9 trace;
  CharPolyF9 charpoly;
  std::vector<long> ct_iso;     // cycle type on the 28 isotropic lines
  std::vector<long> ct_noniso;  // cycle type on the 63 non-isotropic lines
  Mat3 rep;                     // canonical representative (least matrix key)
};

enum class ScalarSubgroup { One, PlusMinus, FourthRoots, All };

// SU3(F9) for the standard Hermitian form: 6048 matrices enumerated by
// orthonormal column completion, partitioned into conjugacy classes.
class GroupTable {
 public:
  GroupTable();

  const std::vector<Mat3>& elements() const { return elems_; }
  long order() const { return static_cast<long>(elems_.size()); }
  long prefilter_order() const { return prefilter_order_; }  // |GU3(3)|
  long center_size() const { return center_size_; }

  const std::vector<ConjClass>& classes() const { return classes_; }
  const ConjClass& class_of(const Mat3& m) const;
  int class_index_of(const Mat3& m) const;
  const ConjClass* class_by_label(const std::string& label) const;

  const std::vector<Vec3>& isotropic_lines() const { return iso_lines_; }
  const std::vector<Vec3>& nonisotropic_lines() const { return noniso_lines_; }

  std::vector<long> line_cycle_type(const Mat3& m, bool isotropic) const;

  // classes whose isotropic-line cycle type equals the given partition,
  // ordered by label
  std::vector<const ConjClass*> classes_with_cycle_type(const std::vector<long>& ct) const;

  // sorted orbit sizes of SU3 x K-scalars acting on (F9^3 minus 0)/K
  std::vector<long> orbit_degrees(ScalarSubgroup k) const;

  long element_order(const Mat3& m) const;

  std::string serialize_classes() const;
  // consistency check of an externally loaded class table against this one
  void check_serialized_classes(const std::string& text) const;

 private:
  std::vector<Mat3> elems_;
  std::unordered_map<uint64_t, int> index_;
  std::vector<int> class_of_;
  std::vector<ConjClass> classes_;
  std::vector<Vec3> iso_lines_, noniso_lines_;
  std::unordered_map<uint64_t, int> iso_index_, noniso_index_;
  long prefilter_order_ = 0;
  long center_size_ = 0;

  void enumerate();
  void build_lines();
  void build_classes();
};

// Printed representative fixtures: verify unitarity/determinant and locate
// each matrix's conjugacy class.
struct RepLocation {
  std::string name;
  Mat3 matrix;
  std::string class_label;
  F9 trace;
};
std::vector<RepLocation> verify_class_reps(
    const GroupTable& g, const std::vector<std::pair<std::string, Mat3>>& reps);

std::string scalar_subgroup_name(ScalarSubgroup k);

}  // namespace tc
