#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace monav {

struct GridIndex {
    int row = 0;
    int col = 0;
    bool operator==(const GridIndex&) const = default;
};

// Row-major 2D array.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    size_t size() const { return data_.size(); }

    bool in_bounds(int r, int c) const {
        return r >= 0 && r < rows_ && c >= 0 && c < cols_;
    }
    bool in_bounds(GridIndex i) const { return in_bounds(i.row, i.col); }

    T& at(int r, int c) {
        assert(in_bounds(r, c));
        return data_[static_cast<size_t>(r) * cols_ + c];
    }
    const T& at(int r, int c) const {
        assert(in_bounds(r, c));
        return data_[static_cast<size_t>(r) * cols_ + c];
    }
    T& at(GridIndex i) { return at(i.row, i.col); }
    const T& at(GridIndex i) const { return at(i.row, i.col); }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    void fill(T v) { data_.assign(data_.size(), v); }

    bool operator==(const Grid&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using MaskGrid = Grid<uint8_t>; // 0/1 flags; meaning set by context

} // namespace monav
