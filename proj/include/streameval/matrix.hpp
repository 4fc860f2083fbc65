#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace streameval {

// Dense row-major matrix of doubles. Rows are observations, columns features.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        Matrix m;
        for (const auto& r : rows) m.append_row(std::vector<double>(r));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    void append_row(std::span<const double> r) {
        if (rows_ == 0) {
            cols_ = r.size();
        } else if (r.size() != cols_) {
            throw std::invalid_argument("matrix row width mismatch");
        }
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }
    void append_row(const std::vector<double>& r) { append_row(std::span<const double>(r)); }

    Matrix slice_rows(std::size_t first, std::size_t count) const {
        Matrix out(count, cols_);
        for (std::size_t i = 0; i < count; ++i) {
            auto src = row(first + i);
            std::copy(src.begin(), src.end(), out.row(i).begin());
        }
        return out;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace streameval
