#pragma once

#include <cstddef>
#include <vector>

namespace chromascope {

/// Dense square matrix of doubles, row-major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    /// Largest |a_ij - a_ji|.
    double asymmetry() const;

    DenseMatrix& operator-=(const DenseMatrix& other);
    DenseMatrix& operator*=(double s);

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

}  // namespace chromascope
