#include "gaidec/grid.hpp"

#include "gaidec/errors.hpp"

#include <limits>

namespace gaidec {

bool leq(const GridPoint& a, const GridPoint& b) {
    if (a.dim() != b.dim()) throw ValidationError("grid points of different arity");
    for (int i = 0; i < a.dim(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

GridPoint join(const GridPoint& a, const GridPoint& b) {
    if (a.dim() != b.dim()) throw ValidationError("grid points of different arity");
    GridPoint r = a;
    for (int i = 0; i < a.dim(); ++i)
        if (b[i] > r.coords[static_cast<std::size_t>(i)]) r.coords[static_cast<std::size_t>(i)] = b[i];
    return r;
}

std::vector<int> support(const GridPoint& a) {
    std::vector<int> s;
    for (int i = 0; i < a.dim(); ++i)
        if (a[i] > 0) s.push_back(i);
    return s;
}

int support_size(const GridPoint& a) {
    int c = 0;
    for (int i = 0; i < a.dim(); ++i)
        if (a[i] > 0) ++c;
    return c;
}

std::string grid_point_str(const GridPoint& p) {
    std::string s;
    for (int i = 0; i < p.dim(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

GridPoint grid_point_parse(const std::string& text, int dim) {
    std::vector<int> coords;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw ValidationError("bad coordinate '" + part + "' in grid point '" + text + "'");
        coords.push_back(std::stoi(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (dim >= 0 && static_cast<int>(coords.size()) != dim)
        throw ValidationError("grid point '" + text + "' has arity " + std::to_string(coords.size()) +
                              ", expected " + std::to_string(dim));
    return GridPoint(std::move(coords));
}

LevelGrid::LevelGrid(std::vector<int> cardinalities) : card(std::move(cardinalities)) {
    strides_.assign(card.size(), 1);
    size_ = 1;
    for (std::size_t i = card.size(); i-- > 0;) {
        if (card[i] < 1) throw ValidationError("grid axis with cardinality < 1");
        strides_[i] = size_;
        if (size_ > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(card[i]))
            throw BudgetError("grid size overflows size_t");
        size_ *= static_cast<std::size_t>(card[i]);
    }
}

LevelGrid LevelGrid::uniform(int n, int k) {
    if (n < 1) throw ValidationError("grid needs at least one axis");
    if (k < 1) throw ValidationError("levels bound k must be >= 1");
    return LevelGrid(std::vector<int>(static_cast<std::size_t>(n), k + 1));
}

std::size_t LevelGrid::index_of(const GridPoint& p) const {
    if (!contains(p)) throw ValidationError("grid point " + grid_point_str(p) + " outside grid");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < card.size(); ++i)
        idx = idx * static_cast<std::size_t>(card[i]) + static_cast<std::size_t>(p.coords[i]);
    return idx;
}

GridPoint LevelGrid::point_at(std::size_t index) const {
    if (index >= size_) throw ValidationError("grid index out of range");
    GridPoint p(std::vector<int>(card.size(), 0));
    for (std::size_t i = card.size(); i-- > 0;) {
        p.coords[i] = static_cast<int>(index % static_cast<std::size_t>(card[i]));
        index /= static_cast<std::size_t>(card[i]);
    }
    return p;
}

bool LevelGrid::contains(const GridPoint& p) const {
    if (p.dim() != arity()) return false;
    for (std::size_t i = 0; i < card.size(); ++i)
        if (p.coords[i] < 0 || p.coords[i] >= card[i]) return false;
    return true;
}

bool LevelGrid::next(GridPoint& p) const {
    for (std::size_t i = card.size(); i-- > 0;) {
        if (++p.coords[i] < card[i]) return true;
        p.coords[i] = 0;
    }
    return false;
}

GridPoint LevelGrid::top() const {
    GridPoint t(std::vector<int>(card.size(), 0));
    for (std::size_t i = 0; i < card.size(); ++i) t.coords[i] = card[i] - 1;
    return t;
}

} // namespace gaidec
