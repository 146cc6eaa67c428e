#include <cctype>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lha/abacus.hpp"
#include "lha/errors.hpp"
#include "lha/json_io.hpp"
#include "lha/partition.hpp"
#include "lha/render.hpp"
#include "lha/series.hpp"

namespace {

using lha::Int;
using lha::Json;

Int parse_int(const std::string& token) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &pos);
    } catch (const std::exception&) {
        throw lha::parse_error("not an integer: \"" + token + '"');
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size()) throw lha::parse_error("not an integer: \"" + token + '"');
    return value;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(parse_int(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::pair<Int, Int> parse_rows(const std::string& text) {
    std::size_t sep = text.find("..");
    if (sep == std::string::npos)
        throw lha::parse_error("row range must look like lo..hi, got \"" + text + '"');
    return {parse_int(text.substr(0, sep)), parse_int(text.substr(sep + 2))};
}

Json read_stdin_json() {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    std::string text = buffer.str();
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw lha::parse_error("expected JSON on stdin (or pass flags)");
    return Json::parse(text);
}

// Per-command input state: flags win over stdin JSON.
struct InputFlags {
    Int n = 0;
    std::string parts;
    std::string beads;
    CLI::Option* n_opt = nullptr;
    CLI::Option* parts_opt = nullptr;
    CLI::Option* beads_opt = nullptr;

    void add_partition_flags(CLI::App* cmd) {
        n_opt = cmd->add_option("--n", n, "number of parts / columns pair count");
        parts_opt = cmd->add_option("--parts", parts,
                                    "comma-separated parts (may be empty for the empty "
                                    "bounded partition)");
    }

    void add_abacus_flags(CLI::App* cmd) {
        n_opt = cmd->add_option("--n", n, "number of classes");
        beads_opt = cmd->add_option("--beads", beads, "comma-separated defining bead positions");
    }

    bool flags_used(CLI::Option* value_opt) const {
        return (n_opt && n_opt->count() > 0) || (value_opt && value_opt->count() > 0);
    }

    lha::LectureHallPartition lecture_hall() const {
        if (flags_used(parts_opt)) {
            if (n_opt->count() == 0 || parts_opt->count() == 0)
                throw lha::parse_error("--n and --parts must be given together");
            return lha::LectureHallPartition{n, parse_int_list(parts)};
        }
        return lha::lecture_hall_from_json(read_stdin_json());
    }

    lha::BoundedPartition bounded() const {
        if (flags_used(parts_opt)) {
            if (n_opt->count() == 0 || parts_opt->count() == 0)
                throw lha::parse_error("--n and --parts must be given together");
            return lha::BoundedPartition{n, parse_int_list(parts)};
        }
        return lha::bounded_from_json(read_stdin_json());
    }

    lha::AbacusDiagram abacus() const {
        if (flags_used(beads_opt)) {
            if (n_opt->count() == 0 || beads_opt->count() == 0)
                throw lha::parse_error("--n and --beads must be given together");
            return lha::AbacusDiagram{n, parse_int_list(beads)};
        }
        return lha::abacus_from_json(read_stdin_json());
    }
};

void print_json(Json j) { std::cout << j.dump() << '\n'; }

int run_encode(const InputFlags& in) {
    lha::LectureHallPartition lambda = in.lecture_hall();
    lha::AbacusDiagram a = lha::encode(lambda);
    Json out = lha::to_json(a);
    out["weight"] = lha::weight(lambda.parts);
    print_json(out);
    return 0;
}

int run_decode(const InputFlags& in) {
    lha::LectureHallPartition lambda = lha::decode(in.abacus());
    Json out = lha::to_json(lambda);
    out["weight"] = lha::weight(lambda.parts);
    print_json(out);
    return 0;
}

int run_to_bounded(const InputFlags& in) {
    lha::BoundedPartition p = lha::to_bounded(in.abacus());
    Json out = lha::to_json(p);
    out["weight"] = lha::weight(p.parts);
    print_json(out);
    return 0;
}

int run_from_bounded(const InputFlags& in) {
    lha::AbacusDiagram a = lha::from_bounded(in.bounded());
    Json out = lha::to_json(a);
    out["weight"] = lha::weight(lha::decode(a).parts);
    print_json(out);
    return 0;
}

std::string join_parts(const std::vector<Int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '|';
        out += std::to_string(parts[i]);
    }
    return out;
}

int run_enumerate(Int n, Int max_weight, const std::string& family, const std::string& format) {
    std::map<Int, Int> counts;
    Int total = 0;
    auto emit = [&](Int w, const Json& j, const std::vector<Int>& parts) {
        ++counts[w];
        ++total;
        if (format == "csv")
            std::cout << w << ',' << join_parts(parts) << '\n';
        else
            print_json(j);
    };
    if (family == "bounded") {
        lha::for_each_bounded(n, max_weight, [&](const lha::BoundedPartition& p) {
            emit(lha::weight(p.parts), lha::to_json(p), p.parts);
        });
    } else {
        lha::for_each_lecture_hall(n, max_weight, [&](const lha::LectureHallPartition& p) {
            emit(lha::weight(p.parts), lha::to_json(p), p.parts);
        });
    }
    std::cerr << "# weight counts:";
    for (const auto& [w, c] : counts) std::cerr << ' ' << w << ':' << c;
    std::cerr << " total:" << total << '\n';
    return 0;
}

int run_verify(Int n, Int max_x, bool refined, Int budget) {
    if (lha::checked_mul(n, max_x) > budget)
        throw lha::budget_error("n*max_x = " + std::to_string(n * max_x) + " exceeds budget " +
                                std::to_string(budget) + " (raise --budget to proceed)");
    lha::ComparisonReport report =
        refined ? lha::compare_series(lha::lhs_refined(n, max_x), lha::rhs_refined(n, max_x))
                : lha::compare_series(lha::lhs_plain(n, max_x), lha::rhs_plain(n, max_x));
    if (report.equal) {
        std::cout << "OK (compared " << report.coefficients_compared << " coefficients)\n";
        return 0;
    }
    const lha::CoefficientMismatch& m = *report.mismatch;
    std::cout << "mismatch at x^" << m.monomial.x << " u^" << m.monomial.u << " v^"
              << m.monomial.v << ": lhs=" << m.lhs << ", rhs=" << m.rhs << '\n';
    return 1;
}

int run_render(const InputFlags& in, const std::string& rows, bool rows_given, bool classes) {
    lha::AbacusDiagram a = in.abacus();
    Int row_lo = 0;
    Int row_hi = 0;
    if (rows_given) {
        std::tie(row_lo, row_hi) = parse_rows(rows);
    } else if (a.n >= 1 && static_cast<Int>(a.defining_beads.size()) == a.n &&
               !a.defining_beads.empty()) {
        row_hi = std::max<Int>(lha::geometry(a.n, a.defining_beads.back()).row, 0);
    }
    std::cout << lha::render_abacus(lha::RenderSpec{a.n, a.defining_beads, row_lo, row_hi, classes});
    return 0;
}

int run_stats(const InputFlags& in) {
    lha::LectureHallPartition lambda = in.lecture_hall();
    lha::AbacusDiagram a = lha::encode(lambda);
    lha::CeilingVector cv = lha::ceiling_stats(lambda);
    lha::BoundedPartition p = lha::to_bounded(a);

    std::vector<Int> small, large;
    for (Int part : p.parts) (part <= p.n ? small : large).push_back(part);

    Json out = lha::to_json(lambda);
    out["weight"] = lha::weight(lambda.parts);
    out["ceilings"] = cv.entries;
    out["ceiling_weight"] = cv.weight;
    out["odd_ceilings"] = cv.odd_count;
    out["window_vector"] = lha::window_vector(a);
    Json bounded = lha::to_json(p);
    bounded["weight"] = lha::weight(p.parts);
    bounded["small_parts"] = small;
    bounded["large_parts"] = large;
    out["bounded"] = bounded;
    print_json(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lecture hall partitions, abacus diagrams, and bounded partitions"};
    app.require_subcommand(1);

    int rc = 0;

    InputFlags encode_in;
    CLI::App* cmd_encode = app.add_subcommand("encode", "lecture hall partition -> abacus");
    encode_in.add_partition_flags(cmd_encode);
    cmd_encode->callback([&] { rc = run_encode(encode_in); });

    InputFlags decode_in;
    CLI::App* cmd_decode = app.add_subcommand("decode", "abacus -> lecture hall partition");
    decode_in.add_abacus_flags(cmd_decode);
    cmd_decode->callback([&] { rc = run_decode(decode_in); });

    InputFlags to_bounded_in;
    CLI::App* cmd_to_bounded = app.add_subcommand("to-bounded", "abacus -> bounded partition");
    to_bounded_in.add_abacus_flags(cmd_to_bounded);
    cmd_to_bounded->callback([&] { rc = run_to_bounded(to_bounded_in); });

    InputFlags from_bounded_in;
    CLI::App* cmd_from_bounded =
        app.add_subcommand("from-bounded", "bounded partition -> abacus");
    from_bounded_in.add_partition_flags(cmd_from_bounded);
    cmd_from_bounded->callback([&] { rc = run_from_bounded(from_bounded_in); });

    Int enum_n = 0;
    Int enum_max_weight = 0;
    std::string enum_family = "lecture_hall";
    std::string enum_format = "json";
    CLI::App* cmd_enumerate =
        app.add_subcommand("enumerate", "list every partition up to a weight bound");
    cmd_enumerate->add_option("--n", enum_n, "number of parts")->required();
    cmd_enumerate->add_option("--max-weight", enum_max_weight, "inclusive weight bound")
        ->required();
    cmd_enumerate->add_option("--family", enum_family, "partition family")
        ->check(CLI::IsMember({"lecture_hall", "bounded"}));
    cmd_enumerate->add_option("--format", enum_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_enumerate->callback(
        [&] { rc = run_enumerate(enum_n, enum_max_weight, enum_family, enum_format); });

    Int verify_n = 0;
    Int verify_max_x = 0;
    bool verify_refined = false;
    Int verify_budget = 5000;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "compare enumerated and product generating functions");
    cmd_verify->add_option("--n", verify_n, "number of parts")->required();
    cmd_verify->add_option("--max-x", verify_max_x, "x-degree truncation")->required();
    cmd_verify->add_flag("--refined", verify_refined, "track u (ceiling weight) and v (odd ceilings)");
    cmd_verify->add_option("--budget", verify_budget,
                           "refuse runs with n*max-x above this bound (exit 4)");
    cmd_verify->callback(
        [&] { rc = run_verify(verify_n, verify_max_x, verify_refined, verify_budget); });

    InputFlags render_in;
    std::string render_rows;
    bool render_classes = false;
    CLI::App* cmd_render = app.add_subcommand("render", "draw the abacus grid as text");
    render_in.add_abacus_flags(cmd_render);
    CLI::Option* rows_opt =
        cmd_render->add_option("--rows", render_rows, "inclusive row range lo..hi (default: row "
                                                      "0 through the last defining bead's row)");
    cmd_render->add_flag("--classes", render_classes, "append the [class] footer row");
    cmd_render->callback(
        [&] { rc = run_render(render_in, render_rows, rows_opt->count() > 0, render_classes); });

    InputFlags stats_in;
    CLI::App* cmd_stats =
        app.add_subcommand("stats", "weights, ceilings, window vector, bounded split");
    stats_in.add_partition_flags(cmd_stats);
    cmd_stats->callback([&] { rc = run_stats(stats_in); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const lha::budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const lha::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const lha::error& e) {
        // validation, placement, config, range
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return rc;
}
