#include "fpg/homology.hpp"

#include <algorithm>
#include <cstdlib>

#include "fpg/triangulation.hpp"

namespace fpg {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in Smith normal form");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in Smith normal form");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in Smith normal form");
    return r;
}

std::int64_t checked_abs(std::int64_t a) {
    if (a == INT64_MIN) throw OverflowError("integer overflow in Smith normal form");
    return a < 0 ? -a : a;
}

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] -= q * row[src]
void row_op(IntMatrix& m, int dst, int src, std::int64_t q, int from) {
    for (int c = from; c < m.cols(); ++c) m(dst, c) = checked_sub(m(dst, c), checked_mul(q, m(src, c)));
}

void col_op(IntMatrix& m, int dst, int src, std::int64_t q, int from) {
    for (int r = from; r < m.rows(); ++r) m(r, dst) = checked_sub(m(r, dst), checked_mul(q, m(r, src)));
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

std::vector<std::int64_t> smith_normal_form(IntMatrix m) {
    std::vector<std::int64_t> factors;
    const int rows = m.rows(), cols = m.cols();
    for (int k = 0; k < std::min(rows, cols); ++k) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            int pr = -1, pc = -1;
            std::int64_t best = 0;
            for (int r = k; r < rows; ++r)
                for (int c = k; c < cols; ++c)
                    if (m(r, c) != 0 && (pr < 0 || checked_abs(m(r, c)) < best)) {
                        pr = r;
                        pc = c;
                        best = checked_abs(m(r, c));
                    }
            if (pr < 0) return factors;
            swap_rows(m, k, pr);
            swap_cols(m, k, pc);

            bool dirty = false;
            for (int r = k + 1; r < rows; ++r) {
                if (m(r, k) == 0) continue;
                row_op(m, r, k, m(r, k) / m(k, k), k);
                if (m(r, k) != 0) dirty = true;
            }
            for (int c = k + 1; c < cols; ++c) {
                if (m(k, c) == 0) continue;
                col_op(m, c, k, m(k, c) / m(k, k), k);
                if (m(k, c) != 0) dirty = true;
            }
            if (dirty) continue;

            // Pivot must divide the rest of the block; otherwise fold in an offending row.
            int bad = -1;
            for (int r = k + 1; r < rows && bad < 0; ++r)
                for (int c = k + 1; c < cols; ++c)
                    if (m(r, c) % m(k, k) != 0) {
                        bad = r;
                        break;
                    }
            if (bad < 0) break;
            for (int c = k; c < cols; ++c) m(k, c) = checked_add(m(k, c), m(bad, c));
        }
        factors.push_back(checked_abs(m(k, k)));
    }
    return factors;
}

std::string H1Result::str() const {
    std::string out;
    if (rank == 1) out = "Z";
    else if (rank > 1) out = std::to_string(rank) + "Z";
    for (auto d : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z_" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

IntMatrix boundary_1(const Triangulation& t) {
    Skeleton s(t);
    IntMatrix d1(s.edge_count(), s.vertex_count());
    std::vector<char> done(s.edge_count(), 0);
    for (int tet = 0; tet < t.size(); ++tet)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                if (a == b) continue;
                int e = s.edge_of(tet, a, b);
                if (done[e] || s.edge_sign(tet, a, b) != 1) continue;
                done[e] = 1;
                d1(e, s.vertex_of(tet, b)) += 1;
                d1(e, s.vertex_of(tet, a)) -= 1;
            }
    return d1;
}

IntMatrix boundary_2(const Triangulation& t) {
    Skeleton s(t);
    IntMatrix d2(s.face_count(), s.edge_count());
    for (int f = 0; f < s.face_count(); ++f) {
        FaceSlot slot = s.faces()[f].slots.front();
        std::array<int, 3> v{};
        for (int x = 0, k = 0; x < 4; ++x)
            if (x != slot.face) v[k++] = x;
        for (int i = 0; i < 3; ++i) {
            int a = v[i], b = v[(i + 1) % 3];
            d2(f, s.edge_of(slot.tet, a, b)) += s.edge_sign(slot.tet, a, b);
        }
    }
    return d2;
}

H1Result first_homology(const Triangulation& t) {
    if (!t.all_faces_glued()) throw TriangulationError("first_homology: triangulation has unglued faces");
    Skeleton s(t);
    if (!s.valid()) throw TriangulationError("first_homology: triangulation has a reversed edge");
    auto f1 = smith_normal_form(boundary_1(t));
    auto f2 = smith_normal_form(boundary_2(t));
    H1Result h;
    h.rank = s.edge_count() - static_cast<int>(f1.size()) - static_cast<int>(f2.size());
    for (auto d : f2)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

}  // namespace fpg
