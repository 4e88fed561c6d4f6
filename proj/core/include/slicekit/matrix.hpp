#pragma once

#include <cstddef>
#include <vector>

#include "slicekit/error.hpp"
#include "slicekit/rational.hpp"

namespace slicekit {

// Dense matrix of exact rationals.  Gaussian elimination here is the engine
// behind degree-bounded kernel computation and span comparisons; everything
// stays exact.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) {
        check(r, c);
        return data_[r * cols_ + c];
    }
    const Rational& at(std::size_t r, std::size_t c) const {
        check(r, c);
        return data_[r * cols_ + c];
    }

    // In-place reduced row echelon form; returns the pivot columns in order.
    std::vector<std::size_t> reduce();

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw IndexError("matrix index out of range");
    }

    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Basis of { v : M v = 0 }, one vector per non-pivot column, via reduced row
// echelon form.  Each basis vector has entry 1 in its own free column, so the
// result is deterministic.
std::vector<std::vector<Rational>> nullspace_basis(RationalMatrix m);

std::size_t rank(RationalMatrix m);

}  // namespace slicekit
