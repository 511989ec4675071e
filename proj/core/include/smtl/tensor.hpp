#pragma once

#include <cstdint>
#include <vector>

#include "smtl/errors.hpp"

namespace smtl {

/// Dense row-major float32 tensor, rank 1..4. This is the storage type of
/// the network stack; benchmark metrics and scoring run in double elsewhere.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int64_t> shape);

    static Tensor zeros(std::vector<int64_t> shape) { return Tensor(std::move(shape)); }
    static Tensor full(std::vector<int64_t> shape, float value);
    static Tensor from(std::vector<int64_t> shape, std::vector<float> values);

    const std::vector<int64_t>& shape() const { return shape_; }
    int rank() const { return static_cast<int>(shape_.size()); }
    int64_t dim(int i) const { return shape_[static_cast<size_t>(i)]; }
    int64_t numel() const { return static_cast<int64_t>(data_.size()); }
    bool empty() const { return data_.empty(); }

    float* data() { return data_.data(); }
    const float* data() const { return data_.data(); }

    float& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    float operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    /// 4-d accessor (NCHW and OIHW layouts use this).
    float& at(int64_t a, int64_t b, int64_t c, int64_t d) {
        return data_[static_cast<size_t>(((a * shape_[1] + b) * shape_[2] + c) * shape_[3] + d)];
    }
    float at(int64_t a, int64_t b, int64_t c, int64_t d) const {
        return data_[static_cast<size_t>(((a * shape_[1] + b) * shape_[2] + c) * shape_[3] + d)];
    }
    float& at(int64_t a, int64_t b) { return data_[static_cast<size_t>(a * shape_[1] + b)]; }
    float at(int64_t a, int64_t b) const { return data_[static_cast<size_t>(a * shape_[1] + b)]; }

    void fill(float value);
    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    /// True if every element is finite.
    bool all_finite() const;

private:
    std::vector<int64_t> shape_;
    std::vector<float> data_;
};

int64_t shape_numel(const std::vector<int64_t>& shape);

}  // namespace smtl
