#pragma once

#include "gaidec/grid.hpp"
#include "gaidec/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gaidec::kary {

// A game on the grid {0..k}^n: a dense value table in lexicographic order.
// Capacity laws (zero at the origin, monotonicity, normalization) are not
// enforced here; check_capacity diagnoses them and KaryCapacity requires them.
struct KaryGame {
    int n = 0;
    int k = 0;
    std::vector<Rat> values;

    KaryGame() = default;
    KaryGame(int n, int k); // zero-filled
    KaryGame(int n, int k, std::vector<Rat> values);

    LevelGrid grid() const { return LevelGrid::uniform(n, k); }
    const Rat& at(const GridPoint& z) const;
    Rat& at(const GridPoint& z);

    bool operator==(const KaryGame&) const = default;
};

struct CapacityReport {
    struct Violation {
        GridPoint at;
        std::optional<GridPoint> to; // the covering neighbour, for monotonicity
        std::string what;
    };
    bool zero_grounded = false;
    bool monotone = false;
    bool normalized = false;
    std::vector<Violation> violations;

    bool ok() const { return zero_grounded && monotone && normalized; }
};

CapacityReport check_capacity(const KaryGame& v);

// A game that passed check_capacity: v(0)=0, componentwise monotone,
// v(k,...,k)=1. Construction throws ValidationError naming the first
// violation.
class KaryCapacity {
public:
    explicit KaryCapacity(KaryGame game);

    const KaryGame& game() const { return game_; }
    operator const KaryGame&() const { return game_; }
    int n() const { return game_.n; }
    int k() const { return game_.k; }
    const Rat& at(const GridPoint& z) const { return game_.at(z); }

    bool operator==(const KaryCapacity& o) const { return game_ == o.game_; }

private:
    KaryGame game_;
};

// Sparse Mobius coefficients of a game; zero coefficients are omitted and
// keys iterate in lexicographic point order.
struct MobiusMap {
    int n = 0;
    int k = 0;
    std::map<GridPoint, Rat> coeffs;

    bool operator==(const MobiusMap&) const = default;
};

// zeta: v(z) = sum of m(y) over y <= z. Inverse of mobius.
KaryGame zeta(const MobiusMap& m);        // OpenMP over grid points
KaryGame zeta_serial(const MobiusMap& m); // reference implementation

// mobius: inverse of zeta. The production route applies per-axis first
// differences in place (n passes over the grid, OpenMP over chains); the
// serial reference evaluates the direct alternating sum over the unit lower
// box, m(z) = sum over y with z_i - 1 <= y_i <= z_i of (-1)^{sum(z_i-y_i)} v(y).
MobiusMap mobius(const KaryGame& v);
MobiusMap mobius_serial(const KaryGame& v);

// Dense Mobius coefficients in grid order; the workhorse behind mobius,
// p_additivity_degree and support, exposed for callers that need to scan
// large grids without building a sparse map.
std::vector<Rat> mobius_dense(const KaryGame& v);

// Independent oracle: generic poset inversion m(x) = sum over all y <= x of
// mu(y, x) v(y), with mu the product of per-chain Mobius functions. Small
// grids only; quadratic-ish work, guarded by a budget.
MobiusMap mobius_bruteforce(const KaryGame& v);

// Unanimity game u_x: value 1 on {z >= x}, else 0. x must not be the origin.
KaryCapacity unanimity(const GridPoint& x, int k);

// Smallest p such that every nonzero Mobius coefficient has support size
// <= p. Returns 0 exactly for the identically zero game (degenerate case).
int p_additivity_degree(const KaryGame& v);

// Union of the supports of nonzero Mobius coefficients (0-based axes).
std::vector<int> support(const KaryGame& v);

} // namespace gaidec::kary
