#ifndef FDKNOT_GAUSS_DIAGRAM_HPP
#define FDKNOT_GAUSS_DIAGRAM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdknot {

/// Sign of a chord (real crossing), +1 or -1.
enum class ChordSign : int { Plus = +1, Minus = -1 };

constexpr int value(ChordSign s) { return static_cast<int>(s); }

constexpr ChordSign opposite(ChordSign s) {
    return s == ChordSign::Plus ? ChordSign::Minus : ChordSign::Plus;
}

constexpr char sign_symbol(ChordSign s) { return s == ChordSign::Plus ? '+' : '-'; }

/// Endpoint role on the circle. Tail is the arrow origin (O token in a
/// Gauss code), Head is the arrow point (U token).
enum class Role : std::uint8_t { Tail, Head };

constexpr char role_symbol(Role r) { return r == Role::Tail ? 'O' : 'U'; }

struct Endpoint {
    int chord = 0;
    Role role = Role::Tail;

    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// A Gauss diagram: a cyclic sequence of 2c chord endpoints plus a sign per
/// chord. Each chord id appears exactly twice, once as Tail and once as Head.
/// The empty diagram represents the trivial knot. Instances are immutable
/// after construction; all operations on them are pure functions.
class GaussDiagram {
  public:
    GaussDiagram() = default;

    GaussDiagram(std::vector<Endpoint> endpoints, std::map<int, ChordSign> signs)
        : endpoints_(std::move(endpoints)), signs_(std::move(signs)) {
        validate();
    }

    std::size_t chord_count() const { return signs_.size(); }
    std::size_t endpoint_count() const { return endpoints_.size(); }
    bool empty() const { return endpoints_.empty(); }

    const Endpoint& at(std::size_t i) const {
        if (i >= endpoints_.size())
            throw std::out_of_range("endpoint index out of range");
        return endpoints_[i];
    }

    /// Cyclic successor / predecessor of an endpoint position.
    std::size_t next(std::size_t i) const { return (i + 1) % endpoints_.size(); }
    std::size_t prev(std::size_t i) const { return (i + endpoints_.size() - 1) % endpoints_.size(); }

    bool has_chord(int chord) const { return signs_.count(chord) != 0; }

    ChordSign sign(int chord) const {
        auto it = signs_.find(chord);
        if (it == signs_.end())
            throw std::out_of_range("unknown chord id " + std::to_string(chord));
        return it->second;
    }

    /// Position of the given endpoint of a chord.
    std::size_t position(int chord, Role role) const {
        for (std::size_t i = 0; i < endpoints_.size(); ++i)
            if (endpoints_[i].chord == chord && endpoints_[i].role == role) return i;
        throw std::out_of_range("unknown chord id " + std::to_string(chord));
    }

    const std::vector<Endpoint>& endpoints() const { return endpoints_; }
    const std::map<int, ChordSign>& signs() const { return signs_; }

    /// Same diagram with the basepoint advanced by k positions.
    GaussDiagram rotated(std::size_t k) const {
        if (endpoints_.empty()) return *this;
        k %= endpoints_.size();
        std::vector<Endpoint> rotated_endpoints;
        rotated_endpoints.reserve(endpoints_.size());
        for (std::size_t i = 0; i < endpoints_.size(); ++i)
            rotated_endpoints.push_back(endpoints_[(i + k) % endpoints_.size()]);
        return GaussDiagram(std::move(rotated_endpoints), signs_);
    }

    friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

  private:
    void validate() const {
        std::map<int, int> tails, heads;
        for (const Endpoint& e : endpoints_) {
            if (e.chord <= 0)
                throw std::invalid_argument("chord ids must be positive");
            (e.role == Role::Tail ? tails : heads)[e.chord]++;
        }
        for (const auto& [chord, sign] : signs_) {
            (void)sign;
            if (tails[chord] != 1 || heads[chord] != 1)
                throw std::invalid_argument("chord " + std::to_string(chord) +
                                            " must appear exactly once as Tail and once as Head");
        }
        if (2 * signs_.size() != endpoints_.size())
            throw std::invalid_argument("every chord in the sequence needs exactly one sign entry");
    }

    std::vector<Endpoint> endpoints_;
    std::map<int, ChordSign> signs_;
};

/// Identifies a diagram up to rotation of the basepoint and relabeling of
/// chord ids: the lexicographic minimum, over all rotations, of the Gauss
/// code written with chords renamed in first-appearance order.
using CanonicalKey = std::string;

inline CanonicalKey canonical_key(const GaussDiagram& d) {
    const std::size_t n = d.endpoint_count();
    if (n == 0) return {};
    CanonicalKey best;
    std::string candidate;
    for (std::size_t start = 0; start < n; ++start) {
        candidate.clear();
        std::map<int, int> relabel;
        for (std::size_t k = 0; k < n; ++k) {
            const Endpoint& e = d.at((start + k) % n);
            auto [it, inserted] = relabel.try_emplace(e.chord, static_cast<int>(relabel.size()) + 1);
            candidate += role_symbol(e.role);
            candidate += std::to_string(it->second);
            candidate += sign_symbol(d.sign(e.chord));
        }
        if (start == 0 || candidate < best) best = candidate;
    }
    return best;
}

/// Uniformly random valid diagram with c chords, deterministic in (c, seed):
/// a uniform perfect matching of the 2c positions, then an independent fair
/// coin per chord for orientation and for sign.
inline GaussDiagram random_diagram(std::size_t c, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> slot_chord;
    slot_chord.reserve(2 * c);
    for (std::size_t k = 1; k <= c; ++k) {
        slot_chord.push_back(static_cast<int>(k));
        slot_chord.push_back(static_cast<int>(k));
    }
    std::shuffle(slot_chord.begin(), slot_chord.end(), rng);

    std::map<int, ChordSign> signs;
    std::map<int, Role> first_role;
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t k = 1; k <= c; ++k) {
        first_role[static_cast<int>(k)] = coin(rng) ? Role::Head : Role::Tail;
        signs[static_cast<int>(k)] = coin(rng) ? ChordSign::Plus : ChordSign::Minus;
    }

    std::vector<Endpoint> endpoints;
    endpoints.reserve(2 * c);
    std::map<int, bool> seen;
    for (int chord : slot_chord) {
        Role r = first_role[chord];
        if (seen[chord]) r = (r == Role::Tail ? Role::Head : Role::Tail);
        seen[chord] = true;
        endpoints.push_back({chord, r});
    }
    return GaussDiagram(std::move(endpoints), std::move(signs));
}

} // namespace fdknot

#endif
