#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sklab {

// All coordinate arithmetic is exact; affine-rank preconditions must not be
// subject to rounding.
using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix of exact rationals with rank via Gaussian elimination.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::size_t rank() const {
        std::vector<Rational> a = data_;
        auto elem = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * cols_ + c]; };
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows_ && elem(pivot, col) == 0) ++pivot;
            if (pivot == rows_) continue;
            for (std::size_t c = 0; c < cols_; ++c) std::swap(elem(rank, c), elem(pivot, c));
            for (std::size_t r = rank + 1; r < rows_; ++r) {
                if (elem(r, col) == 0) continue;
                Rational factor = elem(r, col) / elem(rank, col);
                for (std::size_t c = col; c < cols_; ++c) elem(r, c) -= factor * elem(rank, c);
            }
            ++rank;
        }
        return rank;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Affine dimension of a point set: rank of the differences from the first
/// point. The empty set has affine dimension -1, a single point 0.
inline int affine_dimension(const std::vector<std::vector<Rational>>& points) {
    if (points.empty()) return -1;
    const std::size_t dim = points[0].size();
    RationalMatrix diffs(points.size() - 1, dim);
    for (std::size_t r = 1; r < points.size(); ++r) {
        if (points[r].size() != dim) throw std::invalid_argument("ragged coordinate rows");
        for (std::size_t c = 0; c < dim; ++c) diffs.at(r - 1, c) = points[r][c] - points[0][c];
    }
    return static_cast<int>(diffs.rank());
}

inline Rational parse_rational(const std::string& s) {
    return Rational(s);
}

inline std::string rational_to_string(const Rational& r) {
    return r.str();
}

}  // namespace sklab
