#pragma once

#include <map>
#include <memory>
#include <vector>

#include "gradalg/cohomology.hpp"
#include "gradalg/group.hpp"
#include "gradalg/matrix.hpp"

namespace gradalg {

enum class HostKind { GradedVec, RepCat };

/// Object of a host category.  GradedVec: one host grade per basis vector.
/// RepCat: the action of every group element (indexed like the multiplication table).
struct HostObject {
  std::size_t dim = 0;
  std::vector<int> grades;
  std::vector<Matrix> rep;
  friend bool operator==(const HostObject&, const HostObject&) = default;
};

/// Host object together with a module grading (one Gamma index per basis vector).
struct GradedObject {
  HostObject obj;
  std::vector<int> mgrades;
  std::size_t dim() const { return obj.dim; }
  friend bool operator==(const GradedObject&, const GradedObject&) = default;
};

struct ImageSplitting {
  HostObject object;
  Matrix e;  // object -> source, mono
  Matrix r;  // source -> object, epi
  std::vector<std::size_t> pivots;
};

struct CokernelData {
  HostObject object;
  Matrix projection;  // target -> object
  Matrix section;     // object -> target, projection * section = id
  std::vector<std::size_t> complement;
};

/// Strict k-linear braided host category: graded vector spaces over a finite
/// abelian group with braiding table beta, or representations of a finite
/// group (multiplication table) with the swap braiding.
class HostContext {
 public:
  static std::shared_ptr<const HostContext> graded_vec(FinAbGroup group, Cochain2 braid);
  static std::shared_ptr<const HostContext> rep_cat(std::vector<std::vector<int>> mul_table,
                                                    std::vector<int> generators = {});

  HostKind kind() const { return kind_; }
  const FinAbGroup& group() const { return group_; }
  const Cochain2& braid() const { return braid_; }
  const std::vector<std::vector<int>>& mul_table() const { return mul_; }
  const std::vector<int>& generators() const { return generators_; }
  int group_order() const { return static_cast<int>(mul_.size()); }
  int identity_element() const { return identity_; }
  int inverse_element(int g) const { return inverse_[g]; }

  HostObject unit() const;
  HostObject zero_object() const;
  HostObject graded_object(std::vector<int> grades) const;
  HostObject graded_object_from_dims(const std::map<int, std::size_t>& dims) const;
  // Extends generator images to the whole group; checks all relations.
  HostObject rep_object(const std::vector<Matrix>& generator_images) const;
  HostObject rep_object_all(std::vector<Matrix> element_images) const;
  void validate(const HostObject& x) const;

  HostObject direct_sum(const HostObject& a, const HostObject& b) const;
  HostObject tensor(const HostObject& a, const HostObject& b) const;
  HostObject tensor(const std::vector<HostObject>& factors) const;
  Matrix tensor(const Matrix& f, const Matrix& g) const { return Matrix::kron(f, g); }

  // c_{x,y}: x (x) y -> y (x) x and its inverse y (x) x -> x (x) y.
  Matrix braiding(const HostObject& x, const HostObject& y) const;
  Matrix braiding_inverse(const HostObject& x, const HostObject& y) const;

  std::vector<Matrix> hom_basis(const HostObject& x, const HostObject& y) const;
  bool is_morphism(const HostObject& x, const HostObject& y, const Matrix& f) const;
  // Isomorphism x -> y if one exists among host morphisms.
  std::optional<Matrix> find_isomorphism(const HostObject& x, const HostObject& y) const;
  bool is_simple(const HostObject& x) const;

  // Host grade of each basis vector (GradedVec) or all zero (RepCat).
  std::vector<int> host_keys(const HostObject& x) const;

  // Subobject spanned by the columns of an invariant basis in reduced echelon form.
  HostObject subobject(const HostObject& x, const Matrix& basis, const std::vector<std::size_t>& pivots) const;
  ImageSplitting split_idempotent(const HostObject& x, const Matrix& pi) const;
  ImageSplitting image(const HostObject& x, const HostObject& y, const Matrix& f) const;
  CokernelData cokernel(const HostObject& y, const Matrix& f) const;

  friend bool operator==(const HostContext& a, const HostContext& b);

 private:
  HostContext() = default;
  HostKind kind_ = HostKind::GradedVec;
  FinAbGroup group_;
  Cochain2 braid_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> generators_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

using Host = std::shared_ptr<const HostContext>;

// f = sum_d f_d with f_d keeping entries whose module grade shifts by d.
std::map<int, Matrix> grade_components(const Matrix& f, const std::vector<int>& source_mgrades,
                                       const std::vector<int>& target_mgrades, const FinAbGroup& gamma);
bool is_homogeneous(const Matrix& f, const std::vector<int>& source_mgrades, const std::vector<int>& target_mgrades,
                    const FinAbGroup& gamma, int degree);

GradedObject graded_tensor_object(const HostContext& host, const GradedObject& a, const GradedObject& b,
                                  const FinAbGroup& gamma);

}  // namespace gradalg
