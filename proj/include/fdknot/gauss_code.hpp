#ifndef FDKNOT_GAUSS_CODE_HPP
#define FDKNOT_GAUSS_CODE_HPP

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fdknot/gauss_diagram.hpp"

namespace fdknot {

/// Rejection of a Gauss code, with the malformed-input class that caused it.
struct ParseError : std::runtime_error {
    enum class Kind {
        BadToken,        // text does not match (O|U)<digits><+|->
        OccurrenceCount, // a label appears once, or three or more times
        DuplicateRole,   // a label appears twice with the same O/U letter
        SignMismatch,    // the two occurrences of a label carry different signs
    };

    ParseError(Kind k, const std::string& message) : std::runtime_error(message), kind(k) {}

    Kind kind;
};

/// Parses the Gauss-code grammar
///   token := ("O"|"U") DIGITS ("+"|"-")
///   code  := token* with optional ASCII whitespace between tokens
/// into a diagram. O becomes the chord's Tail, U its Head. Labels are
/// positive integers and need not be consecutive.
inline GaussDiagram parse_gauss_code(std::string_view text) {
    std::vector<Endpoint> endpoints;
    std::map<int, ChordSign> signs;
    std::map<int, std::vector<Role>> roles_seen;

    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };

    skip_ws();
    while (i < text.size()) {
        const std::size_t token_start = i;
        const char letter = text[i];
        if (letter != 'O' && letter != 'U')
            throw ParseError(ParseError::Kind::BadToken,
                             "expected 'O' or 'U' at offset " + std::to_string(i));
        ++i;

        long long label = 0;
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            label = label * 10 + (text[i] - '0');
            if (label > 1000000000)
                throw ParseError(ParseError::Kind::BadToken,
                                 "label too large at offset " + std::to_string(token_start));
            ++i;
            ++digits;
        }
        if (digits == 0 || label == 0)
            throw ParseError(ParseError::Kind::BadToken,
                             "expected a positive label at offset " + std::to_string(token_start));

        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
            throw ParseError(ParseError::Kind::BadToken,
                             "expected '+' or '-' at offset " + std::to_string(i));
        const ChordSign sign = text[i] == '+' ? ChordSign::Plus : ChordSign::Minus;
        ++i;

        const int chord = static_cast<int>(label);
        const Role role = letter == 'O' ? Role::Tail : Role::Head;

        auto& roles = roles_seen[chord];
        if (roles.size() >= 2)
            throw ParseError(ParseError::Kind::OccurrenceCount,
                             "label " + std::to_string(chord) + " appears more than twice");
        if (!roles.empty() && roles.front() == role)
            throw ParseError(ParseError::Kind::DuplicateRole,
                             "label " + std::to_string(chord) + " appears twice as '" +
                                 std::string(1, letter) + "'");
        auto [it, inserted] = signs.try_emplace(chord, sign);
        if (!inserted && it->second != sign)
            throw ParseError(ParseError::Kind::SignMismatch,
                             "label " + std::to_string(chord) + " carries both signs");

        roles.push_back(role);
        endpoints.push_back({chord, role});
        skip_ws();
    }

    for (const auto& [chord, roles] : roles_seen)
        if (roles.size() != 2)
            throw ParseError(ParseError::Kind::OccurrenceCount,
                             "label " + std::to_string(chord) + " appears only once");

    return GaussDiagram(std::move(endpoints), std::move(signs));
}

/// Inverse of parse_gauss_code: emits tokens in stored order with the stored
/// labels and no whitespace, so parse(serialize(d)) == d endpoint-for-endpoint.
inline std::string serialize(const GaussDiagram& d) {
    std::string out;
    for (const Endpoint& e : d.endpoints()) {
        out += role_symbol(e.role);
        out += std::to_string(e.chord);
        out += sign_symbol(d.sign(e.chord));
    }
    return out;
}

} // namespace fdknot

#endif
