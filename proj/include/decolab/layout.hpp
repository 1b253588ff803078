#pragma once

#include <initializer_list>
#include <vector>

namespace decolab {

/// Tensor-product structure of a finite-dimensional Hilbert space:
/// an ordered list of subsystem dimensions. The first listed factor
/// varies slowest in the flattened index (row-major Kronecker order).
class SpaceLayout {
  public:
    explicit SpaceLayout(std::vector<int> dims);
    SpaceLayout(std::initializer_list<int> dims) : SpaceLayout(std::vector<int>(dims)) {}

    /// Single-factor layout of the given dimension.
    static SpaceLayout single(int dim) { return SpaceLayout({dim}); }

    const std::vector<int>& dims() const { return dims_; }
    int dim(int factor) const { return dims_.at(static_cast<std::size_t>(factor)); }
    int factor_count() const { return static_cast<int>(dims_.size()); }
    int total_dim() const { return total_dim_; }

    /// Stride of a factor in the flattened index (product of later dims).
    int stride(int factor) const;

    friend bool operator==(const SpaceLayout& a, const SpaceLayout& b) {
        return a.dims_ == b.dims_;
    }
    friend bool operator!=(const SpaceLayout& a, const SpaceLayout& b) { return !(a == b); }

  private:
    std::vector<int> dims_;
    int total_dim_ = 0;
};

/// Layout of a tensor product: concatenation of the factor lists.
SpaceLayout concat(const SpaceLayout& a, const SpaceLayout& b);

}  // namespace decolab
