#ifndef FDKNOT_BOUNDS_HPP
#define FDKNOT_BOUNDS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "fdknot/gauss_diagram.hpp"
#include "fdknot/invariants.hpp"
#include "fdknot/moves.hpp"

namespace fdknot {

/// Closed-form upper bound on the forbidden detour moves needed to unknot a
/// diagram with c real crossings: (c-1)(2c^2+11c-3)/24 for odd c,
/// c(2c^2+9c-14)/24 for even c. Exact integer arithmetic; the numerator is
/// always divisible by 24.
inline long long closed_form_upper(long long c) {
    if (c <= 0) return 0;
    const long long numerator =
        (c % 2 != 0) ? (c - 1) * (2 * c * c + 11 * c - 3) : c * (2 * c * c + 9 * c - 14);
    if (numerator % 24 != 0)
        throw std::logic_error("closed-form numerator not divisible by 24 at c = " +
                               std::to_string(c));
    return numerator / 24;
}

/// The same bound computed the way the proof builds it: the sum over stages
/// k = 1..c of the per-stage worst case floor((k-1)^2/4) + k - 1.
inline long long summation_upper(long long c) {
    long long sum = 0;
    for (long long k = 1; k <= c; ++k) sum += ((k - 1) * (k - 1)) / 4 + k - 1;
    return sum;
}

/// One stage of the unknotting algorithm: the removed arrow A, the head and
/// tail counts (a, b) on the chosen side, the Fd moves spent, and the chord
/// count when the stage began. Always fd_used <= a(b+1)+b and a+b <= c-1.
struct StageReport {
    int chord_removed = 0;
    int heads_on_side = 0;
    int tails_on_side = 0;
    int fd_used = 0;
    int chords_at_stage = 0;
};

struct UnknotResult {
    MoveTrace trace;
    std::vector<StageReport> stages;

    int fd_total() const { return trace.fd_count(); }
};

namespace detail {

enum class Side { Specified, Complement };

struct StageChoice {
    int chord = 0;
    Side side = Side::Specified;
    int heads = 0;
    int tails = 0;
};

// Interior positions of the chosen side, in walk order: Specified walks
// tail -> head, Complement walks head -> tail.
inline std::vector<std::size_t> side_interior(const GaussDiagram& d, int chord, Side side) {
    const std::size_t tail = d.position(chord, Role::Tail);
    const std::size_t head = d.position(chord, Role::Head);
    const std::size_t from = side == Side::Specified ? tail : head;
    const std::size_t to = side == Side::Specified ? head : tail;
    std::vector<std::size_t> interior;
    for (std::size_t p = d.next(from); p != to; p = d.next(p)) interior.push_back(p);
    return interior;
}

// Greedy selection of the arrow A and side minimizing a + b + ab, ties
// broken by smaller chord id, then by the specified-arc side. Minimizing
// (1+a)(1+b) also guarantees a + b <= c - 1 and that no chord has both
// endpoints inside the chosen side.
inline StageChoice select_stage(const GaussDiagram& d) {
    StageChoice best;
    long long best_cost = -1;
    for (const auto& [chord, sign] : d.signs()) {
        (void)sign;
        for (Side side : {Side::Specified, Side::Complement}) {
            int heads = 0, tails = 0;
            for (std::size_t p : side_interior(d, chord, side))
                (d.at(p).role == Role::Head ? heads : tails)++;
            const long long cost =
                static_cast<long long>(heads) + tails + static_cast<long long>(heads) * tails;
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                best = {chord, side, heads, tails};
            }
        }
    }
    return best;
}

} // namespace detail

/// Constructive unknotting: repeatedly picks an arrow A and a side, sweeps
/// every arrow-head on that side out through A's Tail (each head costs at
/// most b+1 Fd moves), walks A's Head across the remaining b tails, and
/// removes A with an R1 move. Always reaches the empty diagram; the trace
/// replays, and the total Fd count is at most closed_form_upper(c).
inline UnknotResult unknot(const GaussDiagram& start) {
    UnknotResult result;
    result.trace.start = start;
    GaussDiagram d = start;

    const auto record = [&](MoveRecord r) {
        result.trace.records.push_back(std::move(r));
    };

    while (!d.empty()) {
        const detail::StageChoice choice = detail::select_stage(d);
        const int chord = choice.chord;
        const bool specified = choice.side == detail::Side::Specified;
        StageReport stage{chord, choice.heads, choice.tails, 0,
                          static_cast<int>(d.chord_count())};

        // Phase 1: sweep each head on the side out through A's Tail, nearest
        // to the exit first, so only tails (and finally the Tail itself) are
        // crossed.
        for (;;) {
            const auto interior = detail::side_interior(d, chord, choice.side);
            std::size_t head_pos = 0;
            bool found = false;
            if (specified) {
                for (std::size_t p : interior)
                    if (d.at(p).role == Role::Head) {
                        head_pos = p;
                        found = true;
                        break;
                    }
            } else {
                for (auto it = interior.rbegin(); it != interior.rend(); ++it)
                    if (d.at(*it).role == Role::Head) {
                        head_pos = *it;
                        found = true;
                        break;
                    }
            }
            if (!found) break;
            const std::size_t i = specified ? d.prev(head_pos) : head_pos;
            const std::size_t other = specified ? i : d.next(i);
            if (d.at(other).chord == d.at(head_pos).chord)
                throw std::logic_error("unknot: head blocked by its own tail");
            record({MoveKind::Fd, i, 0, {d.at(i).chord, d.at(d.next(i)).chord}});
            d = apply_fd(d, i);
            ++stage.fd_used;
        }

        // Phase 2: only tails remain on the side; move A's Head across them
        // until A's endpoints are adjacent.
        for (;;) {
            const std::size_t tail = d.position(chord, Role::Tail);
            const std::size_t head = d.position(chord, Role::Head);
            if (d.next(tail) == head || d.next(head) == tail) break;
            const std::size_t i = specified ? d.prev(head) : head;
            record({MoveKind::Fd, i, 0, {d.at(i).chord, d.at(d.next(i)).chord}});
            d = apply_fd(d, i);
            ++stage.fd_used;
        }

        const std::size_t tail = d.position(chord, Role::Tail);
        const std::size_t head = d.position(chord, Role::Head);
        record({MoveKind::R1Remove, d.next(tail) == head ? tail : head, 0, {chord}});
        d = apply_r1_remove(d, chord);

        if (stage.fd_used > stage.heads_on_side * (stage.tails_on_side + 1) + stage.tails_on_side)
            throw std::logic_error("unknot: stage exceeded its a(b+1)+b budget");
        result.stages.push_back(stage);
    }
    return result;
}

/// Lower bound from the affine index polynomial: with P_K expressed as
/// (t-1) Σ a_n t^n, the forbidden detour number is at least Σ|a_n| / 2;
/// returned as the integer ceiling.
inline int lower_bound(const GaussDiagram& d) {
    const LaurentPoly quotient = divide_by_t_minus_1(affine_index_poly(d));
    const long long s = sum_abs_coefficients(quotient);
    return static_cast<int>((s + 1) / 2);
}

/// Breadth-first search for the fewest Fd moves reaching the empty diagram,
/// deduplicated by canonical key, with R1/R2 removals applied as free moves
/// at every level. Returns the minimum Fd cost among such sequences (an
/// upper bound on the forbidden detour number, since insertions and R3 are
/// not searched), or nullopt if every sequence needs more than max_fd.
inline std::optional<int> bfs_min_fd(const GaussDiagram& start, int max_fd) {
    if (max_fd < 0) throw std::invalid_argument("max_fd must be non-negative");
    std::unordered_set<CanonicalKey> visited;
    std::vector<GaussDiagram> frontier{start};
    visited.insert(canonical_key(start));

    for (int fd = 0;; ++fd) {
        // Close the level under free removals.
        std::vector<GaussDiagram> layer = std::move(frontier);
        for (std::size_t i = 0; i < layer.size(); ++i) {
            if (layer[i].empty()) return fd;
            for (const MoveRecord& r :
                 enumerate_moves(layer[i], {MoveKind::R1Remove, MoveKind::R2Remove})) {
                GaussDiagram next = apply_move(layer[i], r);
                if (visited.insert(canonical_key(next)).second)
                    layer.push_back(std::move(next));
            }
        }
        if (fd == max_fd) return std::nullopt;

        frontier.clear();
        for (const GaussDiagram& d : layer) {
            for (const MoveRecord& r : enumerate_moves(d, {MoveKind::Fd})) {
                GaussDiagram next = apply_fd(d, r.position);
                if (visited.insert(canonical_key(next)).second)
                    frontier.push_back(std::move(next));
            }
        }
        if (frontier.empty()) return std::nullopt;
    }
}

/// Bracket on the forbidden detour number of the knot a diagram represents.
/// `exact` is present exactly when the lower bound meets the best achieved
/// upper bound.
struct BoundsReport {
    int lower = 0;
    int algorithmic_upper = 0;
    long long closed_form_upper = 0;
    std::optional<int> search_upper;
    std::optional<int> exact;

    int best_upper() const {
        return search_upper && *search_upper < algorithmic_upper ? *search_upper
                                                                 : algorithmic_upper;
    }
};

inline BoundsReport bounds_report(const GaussDiagram& d,
                                  std::optional<int> search_max_fd = std::nullopt) {
    BoundsReport report;
    report.lower = lower_bound(d);
    report.algorithmic_upper = unknot(d).fd_total();
    report.closed_form_upper = closed_form_upper(static_cast<long long>(d.chord_count()));
    if (report.lower > report.algorithmic_upper)
        throw std::logic_error("lower bound exceeds the algorithmic upper bound");
    if (search_max_fd) report.search_upper = bfs_min_fd(d, *search_max_fd);
    if (report.lower == report.best_upper()) report.exact = report.best_upper();
    return report;
}

/// Structured text rendering; without an exact value the result is shown as
/// the interval [lower, best upper].
inline std::string to_text(const BoundsReport& report) {
    std::string out;
    out += "lower_bound: " + std::to_string(report.lower) + "\n";
    out += "algorithmic_upper: " + std::to_string(report.algorithmic_upper) + "\n";
    out += "closed_form_upper: " + std::to_string(report.closed_form_upper) + "\n";
    if (report.search_upper)
        out += "search_upper: " + std::to_string(*report.search_upper) + "\n";
    if (report.exact)
        out += "exact: " + std::to_string(*report.exact) + "\n";
    else
        out += "exact: unknown, in [" + std::to_string(report.lower) + ", " +
               std::to_string(report.best_upper()) + "]\n";
    return out;
}

} // namespace fdknot

#endif
