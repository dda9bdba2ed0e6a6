// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fdknot/fdknot.hpp"

using namespace fdknot;

namespace {

int g_failures = 0;

void check(bool condition, const std::string& what) {
    if (!condition) throw std::runtime_error(what);
}

void criterion(int number, const std::string& name, double budget_ms,
               const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (error.empty() && budget_ms > 0 && ms > budget_ms)
        error = "time " + std::to_string(ms) + " ms exceeds the stated budget of " +
                std::to_string(budget_ms) + " ms";
    if (error.empty()) {
        std::printf("PASS  %2d. %s  [%.2f ms]\n", number, name.c_str(), ms);
    } else {
        std::printf("FAIL  %2d. %s  [%.2f ms]  %s\n", number, name.c_str(), ms, error.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

// Every diagram with exactly c chords, one representative per canonical
// class: all perfect matchings of 2c positions, all orientations, all signs.
std::vector<GaussDiagram> all_diagrams_up_to_symmetry(std::size_t c) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> matchings;
    std::vector<std::pair<std::size_t, std::size_t>> current;
    std::vector<bool> used(2 * c, false);
    const std::function<void()> build = [&] {
        std::size_t first = 2 * c;
        for (std::size_t i = 0; i < 2 * c; ++i)
            if (!used[i]) {
                first = i;
                break;
            }
        if (first == 2 * c) {
            matchings.push_back(current);
            return;
        }
        used[first] = true;
        for (std::size_t j = first + 1; j < 2 * c; ++j) {
            if (used[j]) continue;
            used[j] = true;
            current.emplace_back(first, j);
            build();
            current.pop_back();
            used[j] = false;
        }
        used[first] = false;
    };
    build();

    std::set<CanonicalKey> seen;
    std::vector<GaussDiagram> out;
    for (const auto& matching : matchings) {
        for (std::uint32_t orientation = 0; orientation < (1u << c); ++orientation) {
            for (std::uint32_t sign_bits = 0; sign_bits < (1u << c); ++sign_bits) {
                std::vector<Endpoint> endpoints(2 * c);
                std::map<int, ChordSign> signs;
                for (std::size_t k = 0; k < c; ++k) {
                    const int chord = static_cast<int>(k) + 1;
                    const auto [p, q] = matching[k];
                    const bool head_at_p = (orientation >> k) & 1;
                    endpoints[p] = {chord, head_at_p ? Role::Head : Role::Tail};
                    endpoints[q] = {chord, head_at_p ? Role::Tail : Role::Head};
                    signs[chord] = ((sign_bits >> k) & 1) ? ChordSign::Plus : ChordSign::Minus;
                }
                GaussDiagram d(std::move(endpoints), std::move(signs));
                if (seen.insert(canonical_key(d)).second) out.push_back(std::move(d));
            }
        }
    }
    return out;
}

// The quotient (P_before - P_after)/(t-1) for a single move application.
LaurentPoly move_quotient(const GaussDiagram& before, const GaussDiagram& after) {
    return divide_by_t_minus_1(affine_index_poly(before) - affine_index_poly(after));
}

bool is_signed_monomial_pair_opposite(const LaurentPoly& q) {
    if (q.is_zero()) return true;
    return q.term_count() == 2 && sum_abs_coefficients(q) == 2 && evaluate_at_one(q) == 0;
}

bool is_signed_monomial_pair(const LaurentPoly& q) {
    return sum_abs_coefficients(q) == 0 || sum_abs_coefficients(q) == 2;
}

void criterion_1() {
    const std::vector<long long> table{0, 1, 4, 9, 17, 28, 43, 62, 86, 115};
    for (long long c = 1; c <= 10; ++c) {
        check(summation_upper(c) == table[static_cast<std::size_t>(c - 1)],
              "summation oracle disagrees with the frozen table at c = " + std::to_string(c));
        check(closed_form_upper(c) == table[static_cast<std::size_t>(c - 1)],
              "closed form disagrees with the oracle table at c = " + std::to_string(c));
    }
}

void criterion_2() {
    for (long long c = 1; c <= 200; ++c)
        check(summation_upper(c) == closed_form_upper(c),
              "parity-split identity fails at c = " + std::to_string(c));
}

void criterion_3() {
    for (std::size_t c = 1; c <= 12; ++c) {
        for (std::uint64_t seed = 0; seed < 500; ++seed) {
            const GaussDiagram d = random_diagram(c, seed * 977 + c);
            const UnknotResult r = unknot(d);
            check(replay(r.trace).empty(), "trace does not replay to the empty diagram");
            check(r.fd_total() <= closed_form_upper(static_cast<long long>(c)),
                  "total fd count exceeds the closed-form bound");
            for (const StageReport& s : r.stages) {
                const int a = s.heads_on_side, b = s.tails_on_side, n = s.chords_at_stage;
                check(s.fd_used <= a * (b + 1) + b, "stage exceeded a(b+1)+b");
                check(a + b <= n - 1, "stage violates a+b <= c-1");
                check(4 * a * b <= (n - 1) * (n - 1), "stage violates 4ab <= (c-1)^2");
                check(a + b + a * b <= (n - 1) + ((n - 1) * (n - 1)) / 4,
                      "stage violates a+b+ab <= (c-1) + floor((c-1)^2/4)");
            }
        }
    }
}

void criterion_4() {
    std::mt19937_64 rng(4001);
    int th_order = 0, ht_order = 0;
    std::uint64_t seed = 0;
    while (th_order < 1000) {
        const GaussDiagram d = random_diagram(2 + seed % 6, seed);
        ++seed;
        const auto moves = enumerate_moves(d, {MoveKind::Fd});
        if (moves.empty()) continue;
        const MoveRecord& r = moves[rng() % moves.size()];
        const GaussDiagram after = apply_fd(d, r.position);

        check(is_signed_monomial_pair_opposite(move_quotient(d, after)),
              "fd quotient is not 0 or a +1/-1 monomial pair");

        const Endpoint left = d.at(r.position);
        const Endpoint right = d.at(d.next(r.position));
        const int head_chord = left.role == Role::Head ? left.chord : right.chord;
        const int tail_chord = left.role == Role::Head ? right.chord : left.chord;
        if (left.role == Role::Tail) {
            // (Tail, Head) order: the head chord gains ε(tail chord), the
            // tail chord loses ε(head chord).
            check(chord_index(after, head_chord) ==
                      chord_index(d, head_chord) + value(d.sign(tail_chord)),
                  "(T,H)-order head-chord index shift violated");
            check(chord_index(after, tail_chord) ==
                      chord_index(d, tail_chord) - value(d.sign(head_chord)),
                  "(T,H)-order tail-chord index shift violated");
            ++th_order;
        } else {
            check(chord_index(after, head_chord) ==
                      chord_index(d, head_chord) - value(d.sign(tail_chord)),
                  "(H,T)-order head-chord index shift violated");
            check(chord_index(after, tail_chord) ==
                      chord_index(d, tail_chord) + value(d.sign(head_chord)),
                  "(H,T)-order tail-chord index shift violated");
            ++ht_order;
        }
    }
    check(ht_order > 0, "no (H,T)-order samples drawn");
}

void criterion_5() {
    std::mt19937_64 rng(4002);
    int done = 0;
    std::uint64_t seed = 0;
    while (done < 1000) {
        const GaussDiagram d = random_diagram(2 + seed % 6, seed ^ 0x5151);
        ++seed;
        const auto moves = enumerate_moves(d, {MoveKind::F});
        if (moves.empty()) continue;
        const MoveRecord& r = moves[rng() % moves.size()];
        check(is_signed_monomial_pair(move_quotient(d, apply_f(d, r.position))),
              "f quotient is not of the form ±t^l ± t^m");
        ++done;
    }
}

void criterion_6() {
    std::mt19937_64 rng(4003);
    int r1_events = 0, r2_events = 0;
    std::uint64_t seed = 0;
    while (r1_events < 500 || r2_events < 500) {
        GaussDiagram d = random_diagram(1 + seed % 6, seed * 31 + 2);
        ++seed;
        // Grow with one or two insertions so removals exist.
        const int grows = 1 + static_cast<int>(rng() % 2);
        for (int g = 0; g < grows; ++g) {
            const MoveKind kind = rng() % 2 ? MoveKind::R1Insert : MoveKind::R2Insert;
            const auto inserts = enumerate_moves(d, {kind});
            d = apply_move(d, inserts[rng() % inserts.size()]);
        }
        const auto removals = enumerate_moves(d, {MoveKind::R1Remove, MoveKind::R2Remove});
        check(!removals.empty(), "no removal available after insertion");
        const MoveRecord& r = removals[rng() % removals.size()];
        const GaussDiagram after = apply_move(d, r);
        check(affine_index_poly(after) == affine_index_poly(d),
              "affine index polynomial changed under an R-move removal");
        (r.kind == MoveKind::R1Remove ? r1_events : r2_events)++;
    }
}

void criterion_7() {
    const GaussDiagram trefoil = parse_gauss_code("O1+O2+U1+U2+");
    check(affine_index_poly(trefoil) == LaurentPoly({{1, 1}, {-1, 1}, {0, -2}}),
          "virtual trefoil polynomial is not t + t^-1 - 2");
    check(to_string(affine_index_poly(trefoil)) == "t^1 + t^-1 - 2",
          "virtual trefoil polynomial text form mismatch");
    check(lower_bound(trefoil) == 1, "virtual trefoil lower bound is not 1");
    const UnknotResult u = unknot(trefoil);
    check(u.fd_total() == 1, "unknot does not use exactly one fd move");
    check(replay(u.trace).empty(), "unknot trace does not replay to empty");
    check(bfs_min_fd(trefoil, 5) == 1, "bfs does not find the 1-fd solution");
    const BoundsReport report = bounds_report(trefoil, 5);
    check(report.exact == 1, "report does not pin the exact value 1");
}

void criterion_8() {
    for (std::size_t c = 0; c <= 3; ++c) {
        for (const GaussDiagram& d : all_diagrams_up_to_symmetry(c)) {
            const int upper = unknot(d).fd_total();
            const auto searched = bfs_min_fd(d, upper);
            check(searched.has_value(), "bfs failed to reach empty within the unknot bound");
            check(lower_bound(d) <= *searched, "lower bound exceeds the bfs value");
            check(*searched <= upper, "bfs value exceeds the unknot fd count");
        }
    }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const GaussDiagram d = random_diagram(1 + seed % 6, seed * 41 + 3);
        const int upper = unknot(d).fd_total();
        const auto searched = bfs_min_fd(d, upper);
        check(searched.has_value(), "bfs failed to reach empty within the unknot bound");
        check(lower_bound(d) <= *searched, "lower bound exceeds the bfs value");
        check(*searched <= upper, "bfs value exceeds the unknot fd count");
    }
}

void criterion_9() {
    std::mt19937_64 rng(4009);
    int completed = 0;
    std::uint64_t attempt = 0;
    while (completed < 100) {
        GaussDiagram d = random_diagram(4 + attempt % 5, 9000 + attempt);
        ++attempt;
        long long previous = sum_abs_coefficients(divide_by_t_minus_1(affine_index_poly(d)));
        int steps = 0;
        while (steps < 10) {
            const auto moves = enumerate_moves(d, {MoveKind::Fd});
            if (moves.empty()) break;
            d = apply_fd(d, moves[rng() % moves.size()].position);
            const long long current =
                sum_abs_coefficients(divide_by_t_minus_1(affine_index_poly(d)));
            check(std::llabs(current - previous) <= 2,
                  "Σ|a_n| changed by more than 2 in a single fd step");
            previous = current;
            ++steps;
        }
        if (steps == 10) ++completed;
    }
}

void criterion_10() {
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const GaussDiagram d = random_diagram(seed % 15, seed);
        check(parse_gauss_code(serialize(d)) == d, "round trip failed");
    }
    const auto kind_of = [](const char* text) -> std::optional<ParseError::Kind> {
        try {
            parse_gauss_code(text);
        } catch (const ParseError& e) {
            return e.kind;
        }
        return std::nullopt;
    };
    check(kind_of("X1+U1+") == ParseError::Kind::BadToken, "bad token not detected");
    check(kind_of("O1+U1+O2+") == ParseError::Kind::OccurrenceCount,
          "odd occurrence count not detected");
    check(kind_of("O1+O1+") == ParseError::Kind::DuplicateRole, "O/O duplication not detected");
    check(kind_of("O1+U1-") == ParseError::Kind::SignMismatch, "sign mismatch not detected");
}

} // namespace

int main() {
    criterion(1, "closed-form bound table matches the summation oracle (c = 1..10)", 1.0,
              criterion_1);
    criterion(2, "summation route equals both parity closed forms (c = 1..200)", 10.0,
              criterion_2);
    criterion(3, "unknotting soundness on 500 random diagrams per c = 1..12", 30000.0,
              criterion_3);
    criterion(4, "fd difference shape and index-shift laws (>= 1000 applications)", 0,
              criterion_4);
    criterion(5, "f-move contrast: quotient is ±t^l ± t^m (>= 1000 applications)", 0,
              criterion_5);
    criterion(6, "affine index polynomial invariant under >= 1000 R1/R2 removals", 0,
              criterion_6);
    criterion(7, "virtual trefoil end-to-end golden values", 0, criterion_7);
    criterion(8, "bracket lower <= bfs <= unknot on all c <= 3 and 200 random c <= 6", 120000.0,
              criterion_8);
    criterion(9, "telescoping: Σ|a_n| moves by at most 2 per fd step (100 traces)", 0,
              criterion_9);
    criterion(10, "parser round-trip on 10000 diagrams and distinct rejection classes", 0,
              criterion_10);
    return g_failures;
}
