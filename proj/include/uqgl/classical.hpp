#pragma once

#include <map>
#include <utility>

#include "uqgl/rational.hpp"
#include "uqgl/rootdata.hpp"

namespace uqgl {

// Classical counterpart used as the q -> 1 oracle: the Lie superalgebra of
// (M+N) x (M+N) matrix units with the graded commutator. Kept deliberately
// independent of the q-side machinery; products contract by index matching.
struct MatrixUnit {
    int row;
    int col;
};

// Linear combination of matrix units, keyed by (row, col).
using ClassicalElem = std::map<std::pair<int, int>, Rational>;

inline int matrix_unit_parity(const Superdim& dim, const MatrixUnit& u) {
    return (parity_index(dim, u.row) + parity_index(dim, u.col)) % 2;
}

// [x, y} = xy - (-1)^{|x||y|} yx with E_ab E_cd = delta_bc E_ad.
inline ClassicalElem classical_bracket(const Superdim& dim, const MatrixUnit& x,
                                       const MatrixUnit& y) {
    check_index(dim, x.row);
    check_index(dim, x.col);
    check_index(dim, y.row);
    check_index(dim, y.col);
    ClassicalElem out;
    auto add = [&out](int a, int b, const Rational& c) {
        auto key = std::make_pair(a, b);
        auto it = out.find(key);
        if (it == out.end()) {
            if (c != 0) out.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    };
    if (x.col == y.row) add(x.row, y.col, Rational(1));
    int sign = (matrix_unit_parity(dim, x) & matrix_unit_parity(dim, y)) != 0 ? -1 : 1;
    if (y.col == x.row) add(y.row, x.col, Rational(-sign));
    return out;
}

}  // namespace uqgl
