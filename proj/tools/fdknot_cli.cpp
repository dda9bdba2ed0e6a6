// Command-line front end for the fdknot library: parsing, invariants, the
// unknotting algorithm, bounds and search, random diagrams, and trace
// verification. Exit codes: 0 success, 1 usage error, 2 invalid input,
// 3 failed verification.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdknot/fdknot.hpp"

namespace {

using nlohmann::json;

struct CodeInput {
    std::string code;
    bool use_empty = false;
    CLI::Option* positional = nullptr;
};

void add_code_input(CLI::App* cmd, CodeInput& input) {
    input.positional = cmd->add_option("code", input.code, "Gauss code, e.g. O1+O2+U1+U2+");
    cmd->add_flag("--empty", input.use_empty, "use the empty Gauss code (trivial knot)");
}

fdknot::GaussDiagram diagram_from(const CodeInput& input) {
    if (input.use_empty) return {};
    return fdknot::parse_gauss_code(input.code);
}

bool code_missing(const CodeInput& input) {
    return !input.use_empty && input.positional->count() == 0;
}

std::string sign_string(fdknot::ChordSign s) {
    return s == fdknot::ChordSign::Plus ? "+1" : "-1";
}

int run_parse(const CodeInput& input, bool as_json) {
    const fdknot::GaussDiagram d = diagram_from(input);
    if (as_json) {
        std::cout << json{{"c", d.chord_count()}, {"canonical_key", fdknot::canonical_key(d)}}
                  << '\n';
    } else {
        std::cout << "c: " << d.chord_count() << '\n'
                  << "canonical_key: " << fdknot::canonical_key(d) << '\n';
    }
    return 0;
}

int run_invariants(const CodeInput& input, bool as_json) {
    const fdknot::GaussDiagram d = diagram_from(input);
    const fdknot::WritheTable writhes = fdknot::n_writhes(d);
    const std::string poly = fdknot::to_string(fdknot::affine_index_poly(d));
    if (as_json) {
        json chords = json::array();
        for (const auto& [chord, sign] : d.signs())
            chords.push_back({{"id", chord},
                              {"sign", fdknot::value(sign)},
                              {"index", fdknot::chord_index(d, chord)}});
        json jw = json::object();
        for (const auto& [n, j] : writhes) jw[std::to_string(n)] = j;
        std::cout << json{{"chords", std::move(chords)},
                          {"n_writhes", std::move(jw)},
                          {"affine_index_polynomial", poly}}
                  << '\n';
        return 0;
    }
    std::cout << "chord  sign  index\n";
    for (const auto& [chord, sign] : d.signs())
        std::cout << chord << "  " << sign_string(sign) << "  " << fdknot::chord_index(d, chord)
                  << '\n';
    std::cout << "n_writhes: {";
    bool first = true;
    for (const auto& [n, j] : writhes) {
        if (!first) std::cout << ", ";
        std::cout << n << ": " << j;
        first = false;
    }
    std::cout << "}\n";
    std::cout << "affine_index_polynomial: " << poly << '\n';
    return 0;
}

int run_unknot(const CodeInput& input, const std::string& trace_path, bool as_json) {
    const fdknot::GaussDiagram d = diagram_from(input);
    const fdknot::UnknotResult result = fdknot::unknot(d);
    const long long bound = fdknot::closed_form_upper(static_cast<long long>(d.chord_count()));
    if (!trace_path.empty()) fdknot::write_trace(result.trace, trace_path);
    if (as_json) {
        json stages = json::array();
        for (const fdknot::StageReport& s : result.stages)
            stages.push_back({{"chord", s.chord_removed},
                              {"a", s.heads_on_side},
                              {"b", s.tails_on_side},
                              {"fd_used", s.fd_used},
                              {"c", s.chords_at_stage}});
        std::cout << json{{"stages", std::move(stages)},
                          {"fd_total", result.fd_total()},
                          {"closed_form_upper", bound}}
                  << '\n';
        return 0;
    }
    std::cout << "stage  chord  a  b  fd  c\n";
    for (std::size_t i = 0; i < result.stages.size(); ++i) {
        const fdknot::StageReport& s = result.stages[i];
        std::cout << i + 1 << "  " << s.chord_removed << "  " << s.heads_on_side << "  "
                  << s.tails_on_side << "  " << s.fd_used << "  " << s.chords_at_stage << '\n';
    }
    std::cout << "fd_total: " << result.fd_total() << '\n'
              << "closed_form_upper: " << bound << '\n';
    return 0;
}

int run_bounds(const CodeInput& input, bool search, std::optional<int> max_fd, bool as_json) {
    const fdknot::GaussDiagram d = diagram_from(input);
    std::optional<int> cap;
    if (search) cap = max_fd ? *max_fd : fdknot::unknot(d).fd_total();
    const fdknot::BoundsReport report = fdknot::bounds_report(d, cap);
    if (as_json) {
        json j{{"lower", report.lower},
               {"algorithmic_upper", report.algorithmic_upper},
               {"closed_form_upper", report.closed_form_upper}};
        j["search_upper"] = report.search_upper ? json(*report.search_upper) : json();
        j["exact"] = report.exact ? json(*report.exact) : json();
        std::cout << j << '\n';
        return 0;
    }
    std::cout << fdknot::to_text(report);
    return 0;
}

int run_random(std::size_t chords, std::uint64_t seed, std::size_t count, bool as_json) {
    json codes = json::array();
    for (std::size_t i = 0; i < count; ++i) {
        const std::string code = fdknot::serialize(fdknot::random_diagram(chords, seed + i));
        if (as_json)
            codes.push_back(code);
        else
            std::cout << code << '\n';
    }
    if (as_json) std::cout << json{{"codes", std::move(codes)}} << '\n';
    return 0;
}

int run_verify(const std::string& trace_path, bool as_json) {
    const fdknot::MoveTrace trace = fdknot::read_trace(trace_path);
    std::string failure;
    fdknot::GaussDiagram final_diagram;
    try {
        final_diagram = fdknot::replay(trace);
        if (!final_diagram.empty())
            failure = "final diagram is not empty (c = " +
                      std::to_string(final_diagram.chord_count()) + ")";
    } catch (const fdknot::ReplayError& e) {
        failure = e.what();
    }
    if (as_json) {
        json j{{"ok", failure.empty()},
               {"moves", trace.records.size()},
               {"fd", trace.fd_count()}};
        if (!failure.empty()) j["error"] = failure;
        std::cout << j << '\n';
    } else if (failure.empty()) {
        std::cout << "verified: " << trace.records.size() << " moves (" << trace.fd_count()
                  << " fd) replay to the empty diagram\n";
    } else {
        std::cerr << "verification failed: " << failure << '\n';
    }
    return failure.empty() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual knot toolkit: Gauss diagrams, forbidden detour moves, affine index "
                 "polynomial, unknotting bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit structured JSON instead of plain text");

    CodeInput parse_input, invariants_input, unknot_input, bounds_input;

    CLI::App* parse_cmd = app.add_subcommand("parse", "validate a Gauss code");
    add_code_input(parse_cmd, parse_input);

    CLI::App* invariants_cmd =
        app.add_subcommand("invariants", "chord indices, n-writhes, affine index polynomial");
    add_code_input(invariants_cmd, invariants_input);

    CLI::App* unknot_cmd =
        app.add_subcommand("unknot", "run the unknotting algorithm with move accounting");
    add_code_input(unknot_cmd, unknot_input);
    std::string trace_path;
    unknot_cmd->add_option("--trace", trace_path, "write the move trace to this JSON file");

    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "lower/upper bounds on the forbidden detour number");
    add_code_input(bounds_cmd, bounds_input);
    bool search = false;
    CLI::Option* search_opt =
        bounds_cmd->add_flag("--search", search, "also run the exhaustive BFS (small c only)");
    int max_fd = -1;
    CLI::Option* max_fd_opt =
        bounds_cmd->add_option("--max-fd", max_fd, "Fd-move cap for the BFS")->needs(search_opt);

    CLI::App* random_cmd = app.add_subcommand("random", "emit random Gauss codes");
    std::size_t chords = 0;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    random_cmd->add_option("--chords", chords, "number of chords")->required();
    random_cmd->add_option("--seed", seed, "seed of the first diagram")->required();
    random_cmd->add_option("--count", count, "how many diagrams (seeds seed..seed+count-1)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "replay and check a move trace");
    std::string verify_path;
    verify_cmd->add_option("--trace", verify_path, "trace JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*parse_cmd) {
            if (code_missing(parse_input)) throw CLI::RequiredError("code (or --empty)");
            return run_parse(parse_input, as_json);
        }
        if (*invariants_cmd) {
            if (code_missing(invariants_input)) throw CLI::RequiredError("code (or --empty)");
            return run_invariants(invariants_input, as_json);
        }
        if (*unknot_cmd) {
            if (code_missing(unknot_input)) throw CLI::RequiredError("code (or --empty)");
            return run_unknot(unknot_input, trace_path, as_json);
        }
        if (*bounds_cmd) {
            if (code_missing(bounds_input)) throw CLI::RequiredError("code (or --empty)");
            std::optional<int> cap;
            if (max_fd_opt->count() > 0) {
                if (max_fd < 0) throw CLI::ValidationError("--max-fd must be non-negative");
                cap = max_fd;
            }
            return run_bounds(bounds_input, search, cap, as_json);
        }
        if (*random_cmd) return run_random(chords, seed, count, as_json);
        if (*verify_cmd) return run_verify(verify_path, as_json);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const fdknot::ParseError& e) {
        std::cerr << "invalid Gauss code: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
