#include "decolab/layout.hpp"

#include <limits>
#include <stdexcept>

namespace decolab {

SpaceLayout::SpaceLayout(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("SpaceLayout: empty dimension list");
    long long total = 1;
    for (int d : dims_) {
        if (d < 1) throw std::invalid_argument("SpaceLayout: dimensions must be >= 1");
        total *= d;
        if (total > std::numeric_limits<int>::max())
            throw std::overflow_error("SpaceLayout: total dimension overflows");
    }
    total_dim_ = static_cast<int>(total);
}

int SpaceLayout::stride(int factor) const {
    if (factor < 0 || factor >= factor_count())
        throw std::out_of_range("SpaceLayout: factor index out of range");
    int s = 1;
    for (int f = factor + 1; f < factor_count(); ++f) s *= dims_[static_cast<std::size_t>(f)];
    return s;
}

SpaceLayout concat(const SpaceLayout& a, const SpaceLayout& b) {
    std::vector<int> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return SpaceLayout(dims);
}

}  // namespace decolab
