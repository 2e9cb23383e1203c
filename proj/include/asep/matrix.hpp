#ifndef ASEP_MATRIX_HPP
#define ASEP_MATRIX_HPP

#include <vector>

#include "asep/poly.hpp"

namespace asep {

// Dense matrix of MultiPoly entries sharing one ring.
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const RingPtr& ring() const noexcept { return ring_; }

    MultiPoly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const MultiPoly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix scaled(const MultiPoly& c) const;
    PolyMatrix transposed() const;
    bool operator==(const PolyMatrix& o) const;

private:
    RingPtr ring_;
    std::size_t rows_, cols_;
    std::vector<MultiPoly> e_;
};

// Exact determinant by fraction-free (Bareiss) elimination with row swaps.
// Pivot selection: lowest-index nonzero entry in the current column.
MultiPoly determinant(PolyMatrix a);

// Nonzero row vector v with v*m = 0, for square m whose left kernel over
// the fraction field is one-dimensional.  The result has collective
// integer content 1 and its first nonzero entry has a positive leading
// coefficient.  Throws KernelRankError when the kernel dimension is not 1.
std::vector<MultiPoly> left_kernel(const PolyMatrix& m);

// Exact determinant of a rational matrix (used for evaluated specializations).
Rat determinant_rational(std::vector<std::vector<Rat>> a);

} // namespace asep

#endif
