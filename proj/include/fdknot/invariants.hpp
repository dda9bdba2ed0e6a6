#ifndef FDKNOT_INVARIANTS_HPP
#define FDKNOT_INVARIANTS_HPP

#include <map>

#include "fdknot/gauss_diagram.hpp"
#include "fdknot/laurent.hpp"

namespace fdknot {

/// Sign of the endpoint at a position: a Head carries +ε of its chord, a
/// Tail carries -ε.
inline int endpoint_sign(const GaussDiagram& d, std::size_t position) {
    const Endpoint& e = d.at(position);
    const int s = value(d.sign(e.chord));
    return e.role == Role::Head ? s : -s;
}

/// Index i(γ) of a chord: the sum of endpoint signs over its specified arc,
/// the arc from the chord's Tail to its Head in the circle's orientation,
/// excluding the chord's own endpoints.
inline int chord_index(const GaussDiagram& d, int chord) {
    const std::size_t tail = d.position(chord, Role::Tail);
    const std::size_t head = d.position(chord, Role::Head);
    int sum = 0;
    for (std::size_t p = d.next(tail); p != head; p = d.next(p)) sum += endpoint_sign(d, p);
    return sum;
}

/// n-writhes J_n: for each nonzero n, the sum of ε(γ) over chords with
/// i(γ) = n. Keys with value 0 are dropped; key 0 is never present.
using WritheTable = std::map<int, int>;

inline WritheTable n_writhes(const GaussDiagram& d) {
    WritheTable table;
    for (const auto& [chord, sign] : d.signs()) {
        const int n = chord_index(d, chord);
        if (n != 0) table[n] += value(sign);
    }
    for (auto it = table.begin(); it != table.end();)
        it = it->second == 0 ? table.erase(it) : std::next(it);
    return table;
}

/// Affine index polynomial P_K = Σ_n J_n (t^-n - 1). Vanishes at t = 1.
inline LaurentPoly affine_index_poly(const GaussDiagram& d) {
    std::map<int, long long> coeffs;
    for (const auto& [n, j] : n_writhes(d)) {
        coeffs[-n] += j;
        coeffs[0] -= j;
    }
    return LaurentPoly(std::move(coeffs));
}

} // namespace fdknot

#endif
