#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "r2ps.hpp"

namespace r2ps::cli {

// exit codes
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;    // parse or validation failure
inline constexpr int exit_total_conflict = 2; // irreconcilable evidence
inline constexpr int exit_property_failed = 3;
inline constexpr int exit_usage = 4;

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::vector<std::string> split(const std::string& text, char separator) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == separator) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

inline Frame frame_from_labels(const std::string& text) {
    std::vector<std::string> labels;
    std::string current;
    for (char c : text + " ") {
        if (c == ' ' || c == '\t') {
            if (!current.empty()) {
                labels.push_back(current);
                current.clear();
            }
        } else {
            current += c;
        }
    }
    return Frame(std::move(labels));
}

inline std::string property_line(const PropertyReport& report, const std::string& operands,
                                 bool informational) {
    std::string status = report.pass ? "pass" : "fail";
    std::string measure = "max deviation";
    if (informational) {
        status = report.pass ? "agrees" : "differs";
        measure = "max difference";
    }
    std::string line = report.name;
    if (!operands.empty())
        line += " " + operands;
    line += " : " + status + " (" + measure + " " + format_scientific(report.max_deviation);
    if (!report.detail.empty())
        line += "; " + report.detail;
    line += ")\n";
    if (!report.pass)
        for (const auto& witness : report.witness)
            line += "  " + witness + "\n";
    return line;
}

} // namespace detail

/// Run the command-line tool. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Repeatable random permutation set evidence toolkit"};
    app.require_subcommand(1);

    int precision = 6;
    double tol = MassFunction::default_tolerance;
    app.add_option("--precision", precision, "fractional digits for rendered masses")
        ->check(CLI::Range(1, 17));
    app.add_option("--tol", tol, "tolerance for mass totals and property checks")
        ->check(CLI::PositiveNumber);

    std::string file;
    std::string rule_name = "left";
    std::string frame_labels;
    std::string source_name;
    std::string sources_list;
    std::string order_list;
    std::string properties_list = "consistency,matthew,associativity";
    int max_len = 0;
    bool count_only = false;

    CLI::App* validate = app.add_subcommand("validate", "parse a file and report its contents");
    validate->add_option("file", file, "evidence file")->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "list the repeatable event space");
    enumerate->add_option("--frame", frame_labels, "whitespace-separated element labels")
        ->required();
    enumerate->add_option("--max-len", max_len, "maximum event length (default: frame size)")
        ->check(CLI::PositiveNumber);
    enumerate->add_flag("--count-only", count_only, "print only the number of events");

    CLI::App* project = app.add_subcommand("project", "degenerate a source to set level");
    project->add_option("file", file, "evidence file")->required();
    project->add_option("--source", source_name, "source name")->required();

    CLI::App* combine_cmd = app.add_subcommand("combine", "junctional sum of two sources");
    combine_cmd->add_option("file", file, "evidence file")->required();
    combine_cmd->add_option("--rule", rule_name, "left or right")->required();
    combine_cmd->add_option("--sources", sources_list, "two source names, comma separated")
        ->required();

    CLI::App* chain_cmd = app.add_subcommand("chain", "fold every source under one rule");
    chain_cmd->add_option("file", file, "evidence file")->required();
    chain_cmd->add_option("--rule", rule_name, "left or right")->required();
    chain_cmd->add_option("--order", order_list, "source names, comma separated (default: file order)");

    CLI::App* decide_cmd = app.add_subcommand("decide", "winner-take-all decision over all sources");
    decide_cmd->add_option("file", file, "evidence file")->required();

    CLI::App* check = app.add_subcommand("check", "run algebraic property checks");
    check->add_option("file", file, "evidence file")->required();
    check->add_option("--properties", properties_list,
                      "comma separated: consistency,matthew,associativity");

    for (CLI::App* sub : {validate, enumerate, project, combine_cmd, chain_cmd, decide_cmd, check})
        sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (app.got_subcommand(validate)) {
            EvidenceDocument document = parse_document(detail::read_file(file), tol);
            out << "frame :";
            for (const auto& label : document.frame().labels())
                out << " " << label;
            out << "\n";
            for (const auto& [name, mf] : document.sources())
                out << "source " << name << " : " << mf.size() << " focal events\n";
            return exit_ok;
        }

        if (app.got_subcommand(enumerate)) {
            Frame frame = detail::frame_from_labels(frame_labels);
            std::size_t depth = max_len > 0 ? static_cast<std::size_t>(max_len) : frame.size();
            std::vector<Event> events = enumerate_r2es(frame, depth);
            if (count_only) {
                out << events.size() << "\n";
            } else {
                for (const auto& event : events)
                    out << event.to_string() << "\n";
            }
            return exit_ok;
        }

        if (app.got_subcommand(project)) {
            EvidenceDocument document = parse_document(detail::read_file(file), tol);
            out << render(project_mass(document.source(source_name)), precision);
            return exit_ok;
        }

        if (app.got_subcommand(combine_cmd)) {
            Rule rule = rule_from_string(rule_name);
            EvidenceDocument document = parse_document(detail::read_file(file), tol);
            std::vector<std::string> names = detail::split(sources_list, ',');
            if (names.size() != 2)
                throw ValidationError("--sources takes exactly two names");
            FusionOutcome outcome =
                combine(rule, document.source(names[0]), document.source(names[1]));
            outcome.operands = names;
            out << render(outcome, precision);
            return exit_ok;
        }

        if (app.got_subcommand(chain_cmd)) {
            Rule rule = rule_from_string(rule_name);
            EvidenceDocument document = parse_document(detail::read_file(file), tol);
            std::vector<std::string> names;
            if (order_list.empty()) {
                for (const auto& [name, mf] : document.sources())
                    names.push_back(name);
            } else {
                names = detail::split(order_list, ',');
            }
            if (names.empty())
                throw ValidationError("no sources to chain");
            std::vector<MassFunction> ordered;
            ordered.reserve(names.size());
            for (const auto& name : names)
                ordered.push_back(document.source(name));
            out << render(chain(rule, ordered, names), precision);
            return exit_ok;
        }

        if (app.got_subcommand(decide_cmd)) {
            EvidenceDocument document = parse_document(detail::read_file(file), tol);
            ExpertPanel panel(document.frame(), document.sources());
            out << render(decide(panel), precision);
            return exit_ok;
        }

        if (app.got_subcommand(check)) {
            EvidenceDocument document = parse_document(detail::read_file(file), tol);
            const auto& sources = document.sources();
            bool failed = false;
            for (const std::string& property : detail::split(properties_list, ',')) {
                if (property == "consistency") {
                    for (std::size_t i = 0; i < sources.size(); ++i)
                        for (std::size_t j = i + 1; j < sources.size(); ++j) {
                            PropertyReport report =
                                check_consistency(sources[i].second, sources[j].second, tol);
                            failed = failed || !report.pass;
                            out << detail::property_line(
                                report, sources[i].first + "," + sources[j].first, false);
                        }
                } else if (property == "matthew") {
                    std::vector<MassFunction> all;
                    std::string names;
                    for (const auto& [name, mf] : sources) {
                        all.push_back(mf);
                        names += (names.empty() ? "" : ",") + name;
                    }
                    if (!all.empty()) {
                        for (Rule rule : {Rule::left, Rule::right}) {
                            PropertyReport report = check_pseudo_matthew(rule, all, tol);
                            failed = failed || !report.pass;
                            out << detail::property_line(report, names, false);
                        }
                    }
                } else if (property == "associativity") {
                    for (std::size_t i = 0; i < sources.size(); ++i)
                        for (std::size_t j = i + 1; j < sources.size(); ++j)
                            for (std::size_t k = j + 1; k < sources.size(); ++k) {
                                std::string names = sources[i].first + "," + sources[j].first +
                                                    "," + sources[k].first;
                                for (Rule rule1 : {Rule::left, Rule::right})
                                    for (Rule rule2 : {Rule::left, Rule::right}) {
                                        PropertyReport report = check_associativity(
                                            rule1, rule2, sources[i].second, sources[j].second,
                                            sources[k].second, tol);
                                        bool informational = rule1 != rule2;
                                        if (!informational)
                                            failed = failed || !report.pass;
                                        out << detail::property_line(report, names, informational);
                                    }
                            }
                } else {
                    err << "usage error: unknown property '" << property << "'\n";
                    return exit_usage;
                }
            }
            return failed ? exit_property_failed : exit_ok;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const TotalConflictError& e) {
        err << "error: " << e.what() << "\n";
        return exit_total_conflict;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const FrameMismatchError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    err << "usage error: no subcommand\n";
    return exit_usage;
}

} // namespace r2ps::cli
