#ifndef FDKNOT_MOVES_HPP
#define FDKNOT_MOVES_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fdknot/gauss_diagram.hpp"

namespace fdknot {

enum class MoveKind { Fd, F, R1Remove, R1Insert, R2Remove, R2Insert };

inline std::string_view to_string(MoveKind k) {
    switch (k) {
        case MoveKind::Fd: return "Fd";
        case MoveKind::F: return "F";
        case MoveKind::R1Remove: return "R1Remove";
        case MoveKind::R1Insert: return "R1Insert";
        case MoveKind::R2Remove: return "R2Remove";
        case MoveKind::R2Insert: return "R2Insert";
    }
    return "?";
}

inline std::optional<MoveKind> move_kind_from(std::string_view name) {
    for (MoveKind k : {MoveKind::Fd, MoveKind::F, MoveKind::R1Remove, MoveKind::R1Insert,
                       MoveKind::R2Remove, MoveKind::R2Insert})
        if (to_string(k) == name) return k;
    return std::nullopt;
}

struct MoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One applied move, with enough data to replay it deterministically on the
/// pre-move diagram.
///
///   Fd, F      position = left index i of the swapped cyclic pair (i, i+1);
///              chords = the pair's chord ids in position order.
///   R1Remove   chords = {id}; position = first index of the adjacent pair.
///   R2Remove   chords = {a, b}; position = first index of the tails pair.
///   R1Insert   position = insertion gap in [0, 2c]; chords = {fresh id};
///              sign and head_first give the inserted pair.
///   R2Insert   gaps position <= position2 in [0, 2c]; chords = {a, b} fresh;
///              sign is ε(a) (b gets the opposite); nested flips the head
///              pair's order.
struct MoveRecord {
    MoveKind kind = MoveKind::Fd;
    std::size_t position = 0;
    std::size_t position2 = 0;
    std::vector<int> chords;
    ChordSign sign = ChordSign::Plus;
    bool head_first = false;
    bool nested = false;

    friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

/// A certified move sequence: a start diagram and records that replay on it
/// without error. fd_count counts only the forbidden detour moves.
struct MoveTrace {
    GaussDiagram start;
    std::vector<MoveRecord> records;

    int fd_count() const {
        return static_cast<int>(
            std::count_if(records.begin(), records.end(),
                          [](const MoveRecord& r) { return r.kind == MoveKind::Fd; }));
    }
};

namespace detail {

inline std::pair<Endpoint, Endpoint> adjacent_pair(const GaussDiagram& d, std::size_t i,
                                                   const char* move_name) {
    if (d.empty()) throw MoveError(std::string(move_name) + ": empty diagram");
    if (i >= d.endpoint_count())
        throw MoveError(std::string(move_name) + ": position " + std::to_string(i) +
                        " out of range");
    return {d.at(i), d.at(d.next(i))};
}

inline GaussDiagram swap_adjacent(const GaussDiagram& d, std::size_t i) {
    std::vector<Endpoint> endpoints = d.endpoints();
    std::swap(endpoints[i], endpoints[d.next(i)]);
    return GaussDiagram(std::move(endpoints), d.signs());
}

inline bool cyclically_adjacent(const GaussDiagram& d, std::size_t p, std::size_t q) {
    return d.next(p) == q || d.next(q) == p;
}

} // namespace detail

/// Forbidden detour move: swap the endpoints at cyclic positions (i, i+1),
/// which must be one Head and one Tail of two distinct chords. Signs are
/// unchanged. Applying it twice at the same position is the identity.
inline GaussDiagram apply_fd(const GaussDiagram& d, std::size_t i) {
    const auto [a, b] = detail::adjacent_pair(d, i, "Fd");
    if (a.chord == b.chord)
        throw MoveError("Fd: both endpoints belong to chord " + std::to_string(a.chord));
    if (a.role == b.role)
        throw MoveError("Fd: endpoints have equal roles (that is an F position)");
    return detail::swap_adjacent(d, i);
}

/// Forbidden move: swap the endpoints at (i, i+1), which must be two Heads
/// or two Tails of distinct chords.
inline GaussDiagram apply_f(const GaussDiagram& d, std::size_t i) {
    const auto [a, b] = detail::adjacent_pair(d, i, "F");
    if (a.chord == b.chord)
        throw MoveError("F: both endpoints belong to chord " + std::to_string(a.chord));
    if (a.role != b.role)
        throw MoveError("F: endpoints have mixed roles (that is an Fd position)");
    return detail::swap_adjacent(d, i);
}

/// First Reidemeister move, removal direction: delete a chord whose two
/// endpoints are cyclically adjacent (in either order).
inline GaussDiagram apply_r1_remove(const GaussDiagram& d, int chord) {
    if (!d.has_chord(chord))
        throw MoveError("R1Remove: unknown chord " + std::to_string(chord));
    const std::size_t tail = d.position(chord, Role::Tail);
    const std::size_t head = d.position(chord, Role::Head);
    if (!detail::cyclically_adjacent(d, tail, head))
        throw MoveError("R1Remove: endpoints of chord " + std::to_string(chord) +
                        " are not adjacent");
    std::vector<Endpoint> endpoints;
    endpoints.reserve(d.endpoint_count() - 2);
    for (const Endpoint& e : d.endpoints())
        if (e.chord != chord) endpoints.push_back(e);
    std::map<int, ChordSign> signs = d.signs();
    signs.erase(chord);
    return GaussDiagram(std::move(endpoints), std::move(signs));
}

/// Second Reidemeister move, removal direction: delete two chords of
/// opposite sign whose Tails occupy one cyclically adjacent position pair
/// and whose Heads occupy another (both the parallel and the nested
/// arrangement qualify).
inline GaussDiagram apply_r2_remove(const GaussDiagram& d, int chord_a, int chord_b) {
    if (chord_a == chord_b)
        throw MoveError("R2Remove: the same chord given twice");
    if (!d.has_chord(chord_a) || !d.has_chord(chord_b))
        throw MoveError("R2Remove: unknown chord pair");
    if (d.sign(chord_a) != opposite(d.sign(chord_b)))
        throw MoveError("R2Remove: chords must have opposite signs");
    const std::size_t ta = d.position(chord_a, Role::Tail);
    const std::size_t tb = d.position(chord_b, Role::Tail);
    const std::size_t ha = d.position(chord_a, Role::Head);
    const std::size_t hb = d.position(chord_b, Role::Head);
    if (!detail::cyclically_adjacent(d, ta, tb) || !detail::cyclically_adjacent(d, ha, hb))
        throw MoveError("R2Remove: endpoint pairs do not match the R2 pattern");
    std::vector<Endpoint> endpoints;
    endpoints.reserve(d.endpoint_count() - 4);
    for (const Endpoint& e : d.endpoints())
        if (e.chord != chord_a && e.chord != chord_b) endpoints.push_back(e);
    std::map<int, ChordSign> signs = d.signs();
    signs.erase(chord_a);
    signs.erase(chord_b);
    return GaussDiagram(std::move(endpoints), std::move(signs));
}

/// R1 insertion: place an isolated chord (both endpoints adjacent) into the
/// gap before position `gap` (gap = 2c appends). The fresh id must not occur
/// in the diagram.
inline GaussDiagram apply_r1_insert(const GaussDiagram& d, std::size_t gap, int chord,
                                    ChordSign sign, bool head_first) {
    if (gap > d.endpoint_count())
        throw MoveError("R1Insert: gap out of range");
    if (chord <= 0 || d.has_chord(chord))
        throw MoveError("R1Insert: chord id " + std::to_string(chord) + " is not fresh");
    std::vector<Endpoint> endpoints = d.endpoints();
    const Role first = head_first ? Role::Head : Role::Tail;
    const Role second = head_first ? Role::Tail : Role::Head;
    endpoints.insert(endpoints.begin() + static_cast<std::ptrdiff_t>(gap),
                     {Endpoint{chord, first}, Endpoint{chord, second}});
    std::map<int, ChordSign> signs = d.signs();
    signs.emplace(chord, sign);
    return GaussDiagram(std::move(endpoints), std::move(signs));
}

/// R2 insertion: place a removable opposite-sign pair, tails [T_a, T_b] into
/// gap1 and heads into gap2 (order [H_a, H_b], or [H_b, H_a] when nested).
inline GaussDiagram apply_r2_insert(const GaussDiagram& d, std::size_t gap1, std::size_t gap2,
                                    int chord_a, int chord_b, ChordSign sign_a, bool nested) {
    if (gap1 > gap2 || gap2 > d.endpoint_count())
        throw MoveError("R2Insert: gaps out of range");
    if (chord_a == chord_b || chord_a <= 0 || chord_b <= 0 || d.has_chord(chord_a) ||
        d.has_chord(chord_b))
        throw MoveError("R2Insert: chord ids are not fresh");
    std::vector<Endpoint> endpoints;
    endpoints.reserve(d.endpoint_count() + 4);
    for (std::size_t i = 0; i < gap1; ++i) endpoints.push_back(d.at(i));
    endpoints.push_back({chord_a, Role::Tail});
    endpoints.push_back({chord_b, Role::Tail});
    for (std::size_t i = gap1; i < gap2; ++i) endpoints.push_back(d.at(i));
    if (nested) {
        endpoints.push_back({chord_b, Role::Head});
        endpoints.push_back({chord_a, Role::Head});
    } else {
        endpoints.push_back({chord_a, Role::Head});
        endpoints.push_back({chord_b, Role::Head});
    }
    for (std::size_t i = gap2; i < d.endpoint_count(); ++i) endpoints.push_back(d.at(i));
    std::map<int, ChordSign> signs = d.signs();
    signs.emplace(chord_a, sign_a);
    signs.emplace(chord_b, opposite(sign_a));
    return GaussDiagram(std::move(endpoints), std::move(signs));
}

inline GaussDiagram apply_move(const GaussDiagram& d, const MoveRecord& r) {
    switch (r.kind) {
        case MoveKind::Fd: return apply_fd(d, r.position);
        case MoveKind::F: return apply_f(d, r.position);
        case MoveKind::R1Remove:
            if (r.chords.size() != 1) throw MoveError("R1Remove: record needs one chord id");
            return apply_r1_remove(d, r.chords[0]);
        case MoveKind::R2Remove:
            if (r.chords.size() != 2) throw MoveError("R2Remove: record needs two chord ids");
            return apply_r2_remove(d, r.chords[0], r.chords[1]);
        case MoveKind::R1Insert:
            if (r.chords.size() != 1) throw MoveError("R1Insert: record needs one chord id");
            return apply_r1_insert(d, r.position, r.chords[0], r.sign, r.head_first);
        case MoveKind::R2Insert:
            if (r.chords.size() != 2) throw MoveError("R2Insert: record needs two chord ids");
            return apply_r2_insert(d, r.position, r.position2, r.chords[0], r.chords[1], r.sign,
                                   r.nested);
    }
    throw MoveError("unknown move kind");
}

namespace detail {

inline int max_chord_id(const GaussDiagram& d) {
    return d.signs().empty() ? 0 : d.signs().rbegin()->first;
}

} // namespace detail

/// All legal records of the requested kinds, ordered by (position, kind,
/// chords). Insert kinds are enumerated only when explicitly requested and
/// use the smallest fresh chord ids.
inline std::vector<MoveRecord> enumerate_moves(const GaussDiagram& d,
                                               const std::vector<MoveKind>& kinds) {
    const auto wanted = [&](MoveKind k) {
        return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
    };
    std::vector<MoveRecord> out;
    const std::size_t n = d.endpoint_count();

    if ((wanted(MoveKind::Fd) || wanted(MoveKind::F)) && n > 0) {
        for (std::size_t i = 0; i < n; ++i) {
            const Endpoint& a = d.at(i);
            const Endpoint& b = d.at(d.next(i));
            if (a.chord == b.chord) continue;
            const MoveKind k = a.role == b.role ? MoveKind::F : MoveKind::Fd;
            if (wanted(k)) out.push_back({k, i, 0, {a.chord, b.chord}});
        }
    }
    if (wanted(MoveKind::R1Remove)) {
        for (const auto& [chord, sign] : d.signs()) {
            (void)sign;
            const std::size_t tail = d.position(chord, Role::Tail);
            const std::size_t head = d.position(chord, Role::Head);
            if (!detail::cyclically_adjacent(d, tail, head)) continue;
            const std::size_t first = d.next(tail) == head ? tail : head;
            out.push_back({MoveKind::R1Remove, first, 0, {chord}});
        }
    }
    if (wanted(MoveKind::R2Remove)) {
        for (auto ia = d.signs().begin(); ia != d.signs().end(); ++ia) {
            for (auto ib = std::next(ia); ib != d.signs().end(); ++ib) {
                const int a = ia->first, b = ib->first;
                if (ia->second != opposite(ib->second)) continue;
                const std::size_t ta = d.position(a, Role::Tail);
                const std::size_t tb = d.position(b, Role::Tail);
                const std::size_t ha = d.position(a, Role::Head);
                const std::size_t hb = d.position(b, Role::Head);
                if (!detail::cyclically_adjacent(d, ta, tb) ||
                    !detail::cyclically_adjacent(d, ha, hb))
                    continue;
                const std::size_t first = d.next(ta) == tb ? ta : tb;
                out.push_back({MoveKind::R2Remove, first, 0, {a, b}});
            }
        }
    }
    if (wanted(MoveKind::R1Insert)) {
        const int fresh = detail::max_chord_id(d) + 1;
        for (std::size_t gap = 0; gap <= n; ++gap)
            for (bool head_first : {false, true})
                for (ChordSign s : {ChordSign::Plus, ChordSign::Minus})
                    out.push_back({MoveKind::R1Insert, gap, 0, {fresh}, s, head_first});
    }
    if (wanted(MoveKind::R2Insert)) {
        const int fresh = detail::max_chord_id(d) + 1;
        for (std::size_t gap1 = 0; gap1 <= n; ++gap1)
            for (std::size_t gap2 = gap1; gap2 <= n; ++gap2)
                for (bool nested : {false, true})
                    for (ChordSign s : {ChordSign::Plus, ChordSign::Minus})
                        out.push_back({MoveKind::R2Insert, gap1, gap2, {fresh, fresh + 1}, s,
                                       false, nested});
    }

    std::stable_sort(out.begin(), out.end(), [](const MoveRecord& x, const MoveRecord& y) {
        if (x.position != y.position) return x.position < y.position;
        if (x.kind != y.kind) return x.kind < y.kind;
        return x.chords < y.chords;
    });
    return out;
}

/// Replay failure, reported with the offending step.
struct ReplayError : MoveError {
    ReplayError(std::size_t s, const std::string& message)
        : MoveError("step " + std::to_string(s) + ": " + message), step(s) {}

    std::size_t step;
};

/// Applies the trace's records in order to its start diagram. Any illegal
/// step raises ReplayError, which makes traces independently checkable
/// certificates.
inline GaussDiagram replay(const MoveTrace& trace) {
    GaussDiagram d = trace.start;
    for (std::size_t s = 0; s < trace.records.size(); ++s) {
        try {
            d = apply_move(d, trace.records[s]);
        } catch (const MoveError& e) {
            throw ReplayError(s, e.what());
        }
    }
    return d;
}

} // namespace fdknot

#endif
