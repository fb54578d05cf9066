#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpg {

class Triangulation;

/// Raised when an intermediate value would overflow 64 bits.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Dense integer matrix with checked 64-bit arithmetic.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    }
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    std::int64_t operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Positive invariant factors d1 | d2 | ... | dr with r = rank(m).
std::vector<std::int64_t> smith_normal_form(IntMatrix m);

struct H1Result {
    int rank = 0;
    std::vector<std::int64_t> torsion;  // invariant factors > 1, each dividing the next

    bool operator==(const H1Result&) const = default;
    /// e.g. "0", "Z", "Z_2", "2Z + Z_3".
    std::string str() const;
};

/// Boundary matrices of the orbit cell complex: rows index edges for d1
/// (columns vertices) and faces for d2 (columns edges).
IntMatrix boundary_1(const Triangulation& t);
IntMatrix boundary_2(const Triangulation& t);

/// H1 of a closed, valid triangulation.
H1Result first_homology(const Triangulation& t);

}  // namespace fpg
