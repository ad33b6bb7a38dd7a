#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace hexfour {

/// A small dense real matrix in row-major storage.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {
        if (r < 0 || c < 0) throw std::invalid_argument("Mat: negative dimension");
    }

    double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const {
        return data[static_cast<std::size_t>(i) * cols + j];
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// The antidiagonal permutation (1 on (i, size-1-i)).
    static Mat antidiag(int size) {
        Mat j(size, size);
        for (int i = 0; i < size; ++i) j(i, size - 1 - i) = 1.0;
        return j;
    }

    Mat mul(const Mat& m) const {
        if (cols != m.rows) throw std::invalid_argument("Mat::mul: dimension mismatch");
        Mat out(rows, m.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const double v = (*this)(i, k);
                if (v == 0.0) continue;
                for (int j = 0; j < m.cols; ++j) out(i, j) += v * m(k, j);
            }
        return out;
    }

    /// Matrix-vector product with a complex vector.
    std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const {
        if (static_cast<int>(v.size()) != cols)
            throw std::invalid_argument("Mat::apply: dimension mismatch");
        std::vector<std::complex<double>> out(rows, 0.0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    double max_abs_diff(const Mat& m) const {
        if (rows != m.rows || cols != m.cols)
            throw std::invalid_argument("Mat::max_abs_diff: dimension mismatch");
        double best = 0.0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            const double d = std::abs(data[i] - m.data[i]);
            if (d > best) best = d;
        }
        return best;
    }
};

}  // namespace hexfour
