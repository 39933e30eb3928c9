#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace gaidec {

// A point of a finite product of chains; coords[i] ranges over 0..card[i]-1
// of the grid it lives on. operator< is lexicographic, which is a linear
// extension of the componentwise order.
struct GridPoint {
    std::vector<int> coords;

    GridPoint() = default;
    explicit GridPoint(std::vector<int> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }

    bool operator==(const GridPoint&) const = default;
    auto operator<=>(const GridPoint&) const = default;
};

bool leq(const GridPoint& a, const GridPoint& b);       // componentwise
GridPoint join(const GridPoint& a, const GridPoint& b); // componentwise max
std::vector<int> support(const GridPoint& a);           // axes with coord > 0
int support_size(const GridPoint& a);

std::string grid_point_str(const GridPoint& p);                 // "2,0,1"
GridPoint grid_point_parse(const std::string& text, int dim);   // validates arity

// Dense lexicographic indexing for a product of chains with per-axis
// cardinalities card[i] >= 1. Lexicographic order of coordinate vectors,
// i.e. row-major with the last axis fastest.
struct LevelGrid {
    std::vector<int> card;

    LevelGrid() = default;
    explicit LevelGrid(std::vector<int> cardinalities);
    static LevelGrid uniform(int n, int k); // n axes, levels 0..k

    int arity() const { return static_cast<int>(card.size()); }
    std::size_t size() const { return size_; }

    std::size_t index_of(const GridPoint& p) const;
    GridPoint point_at(std::size_t index) const;
    bool contains(const GridPoint& p) const;

    // Odometer step in index order; returns false after the last point.
    bool next(GridPoint& p) const;

    GridPoint origin() const { return GridPoint(std::vector<int>(card.size(), 0)); }
    GridPoint top() const;

    // index delta of a unit step along an axis
    std::size_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }

private:
    std::vector<std::size_t> strides_;
    std::size_t size_ = 1;
};

} // namespace gaidec
