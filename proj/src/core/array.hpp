#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace l4p::core {

using Shape = std::vector<long>;

inline long numel_of(const Shape& s) {
    long n = 1;
    for (long d : s) n *= d;
    return n;
}

std::string shape_str(const Shape& s);

// Dense row-major n-d array of doubles. The plain-data counterpart of the
// autograd tensor: ground truth, predictions, container payloads.
class Array {
public:
    Array() = default;
    explicit Array(Shape shape) : shape_(std::move(shape)) {
        data_ = Eigen::ArrayXd::Zero(numel_of(shape_));
    }
    Array(Shape shape, Eigen::ArrayXd data) : shape_(std::move(shape)), data_(std::move(data)) {
        if (data_.size() != numel_of(shape_))
            throw ValidationError("Array: data size " + std::to_string(data_.size()) +
                                  " does not match shape " + shape_str(shape_));
    }

    static Array full(Shape shape, double v) {
        Array a(std::move(shape));
        a.data_.setConstant(v);
        return a;
    }

    const Shape& shape() const { return shape_; }
    long dim(int i) const { return shape_[static_cast<size_t>(i >= 0 ? i : int(shape_.size()) + i)]; }
    int ndim() const { return static_cast<int>(shape_.size()); }
    long numel() const { return data_.size(); }

    Eigen::ArrayXd& data() { return data_; }
    const Eigen::ArrayXd& data() const { return data_; }
    double* ptr() { return data_.data(); }
    const double* ptr() const { return data_.data(); }

    // Row-major flat index.
    long index(std::initializer_list<long> idx) const {
        long flat = 0;
        size_t k = 0;
        for (long i : idx) {
            flat = flat * shape_[k] + i;
            ++k;
        }
        return flat;
    }
    double& at(std::initializer_list<long> idx) { return data_[index(idx)]; }
    double at(std::initializer_list<long> idx) const { return data_[index(idx)]; }

    double& operator[](long i) { return data_[i]; }
    double operator[](long i) const { return data_[i]; }

    bool same_shape(const Array& o) const { return shape_ == o.shape_; }

private:
    Shape shape_;
    Eigen::ArrayXd data_;
};

inline std::string shape_str(const Shape& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.size(); ++i) {
        out += std::to_string(s[i]);
        if (i + 1 < s.size()) out += ",";
    }
    return out + ")";
}

inline void check_shape(const Array& a, const Shape& want, const char* what) {
    if (a.shape() != want)
        throw ValidationError(std::string(what) + ": expected shape " + shape_str(want) +
                              ", got " + shape_str(a.shape()));
}

}  // namespace l4p::core
