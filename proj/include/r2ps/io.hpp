#pragma once

#include <charconv>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decision.hpp"

namespace r2ps {

/// A parsed evidence file: one frame plus named sources in declaration order.
class EvidenceDocument {
public:
    EvidenceDocument(Frame frame, std::vector<std::pair<std::string, MassFunction>> sources)
        : frame_(std::move(frame)), sources_(std::move(sources)) {
        for (std::size_t i = 0; i < sources_.size(); ++i) {
            require_same_frame(frame_, sources_[i].second.frame());
            for (std::size_t j = i + 1; j < sources_.size(); ++j)
                if (sources_[i].first == sources_[j].first)
                    throw ValidationError("duplicate source name '" + sources_[i].first + "'");
        }
    }

    const Frame& frame() const noexcept { return frame_; }
    const std::vector<std::pair<std::string, MassFunction>>& sources() const noexcept {
        return sources_;
    }

    bool has_source(std::string_view name) const {
        for (const auto& [source_name, mf] : sources_)
            if (source_name == name)
                return true;
        return false;
    }

    const MassFunction& source(std::string_view name) const {
        for (const auto& [source_name, mf] : sources_)
            if (source_name == name)
                return mf;
        throw ValidationError("unknown source '" + std::string(name) + "'");
    }

private:
    Frame frame_;
    std::vector<std::pair<std::string, MassFunction>> sources_;
};

namespace detail {

struct Token {
    bool colon = false;
    std::string text;
    std::size_t column = 0; // 1-based
};

inline bool is_space_byte(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

inline std::vector<Token> lex_line(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#')
            break;
        if (is_space_byte(c)) {
            ++i;
            continue;
        }
        if (c == ':') {
            tokens.push_back({true, ":", i + 1});
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !is_space_byte(line[i]) && line[i] != ':' && line[i] != '#')
            ++i;
        tokens.push_back({false, std::string(line.substr(start, i - start)), start + 1});
    }
    return tokens;
}

// decimal literal: digits, optional '.' digits, optional exponent; no sign
inline bool is_decimal_literal(std::string_view text) {
    std::size_t i = 0;
    auto digits = [&] {
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9')
            ++i;
        return i > start;
    };
    if (!digits())
        return false;
    if (i < text.size() && text[i] == '.') {
        ++i;
        if (!digits())
            return false;
    }
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-'))
            ++i;
        if (!digits())
            return false;
    }
    return i == text.size();
}

} // namespace detail

/// Parse the line-oriented evidence format.
///
///   frame: a b c          # one frame declaration, before any source
///   source M1             # named source block
///   a b : 0.4             # assignment: event labels, ':', decimal mass
///   end
///
/// '#' starts a comment; blank lines are ignored; tokens are any characters
/// except whitespace, '#' and ':'. Every rejection carries a 1-based line and
/// column.
inline EvidenceDocument parse_document(std::string_view text,
                                       double tolerance = MassFunction::default_tolerance) {
    std::optional<Frame> frame;
    std::vector<std::pair<std::string, MassFunction>> sources;

    struct OpenSource {
        std::string name;
        std::size_t line = 0;
        std::size_t column = 0;
        std::vector<std::pair<Event, double>> assignments;
        std::map<std::vector<std::size_t>, std::size_t> seen; // items -> first line
    };
    std::optional<OpenSource> open;

    std::size_t line_no = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t newline = text.find('\n', offset);
        std::string_view line = newline == std::string_view::npos
                                    ? text.substr(offset)
                                    : text.substr(offset, newline - offset);
        ++line_no;
        if (newline == std::string_view::npos)
            offset = text.size() + 1;
        else
            offset = newline + 1;

        std::vector<detail::Token> tokens = detail::lex_line(line);
        if (tokens.empty())
            continue;

        // frame declaration
        if (!tokens[0].colon && tokens[0].text == "frame" && tokens.size() >= 2 &&
            tokens[1].colon) {
            if (frame)
                throw ParseError(line_no, tokens[0].column, "duplicate frame declaration");
            if (tokens.size() < 3)
                throw ParseError(line_no, tokens[1].column + 1, "frame needs at least one element");
            std::vector<std::string> labels;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                if (tokens[i].colon)
                    throw ParseError(line_no, tokens[i].column, "unexpected ':' in frame declaration");
                for (const auto& existing : labels)
                    if (existing == tokens[i].text)
                        throw ParseError(line_no, tokens[i].column,
                                         "duplicate element label '" + tokens[i].text + "'");
                labels.push_back(tokens[i].text);
            }
            frame.emplace(std::move(labels));
            continue;
        }

        bool has_colon = false;
        for (const auto& token : tokens)
            if (token.colon)
                has_colon = true;

        // source header
        if (!tokens[0].colon && tokens[0].text == "source" && !has_colon) {
            if (!frame)
                throw ParseError(line_no, tokens[0].column, "no frame declared before source");
            if (open)
                throw ParseError(line_no, tokens[0].column,
                                 "missing 'end' before a new source (source '" + open->name +
                                     "' is still open)");
            if (tokens.size() != 2)
                throw ParseError(line_no, tokens[0].column, "source header takes exactly one name");
            for (const auto& [name, mf] : sources)
                if (name == tokens[1].text)
                    throw ParseError(line_no, tokens[1].column,
                                     "duplicate source name '" + tokens[1].text + "'");
            open = OpenSource{tokens[1].text, line_no, tokens[0].column, {}, {}};
            continue;
        }

        // source footer
        if (tokens.size() == 1 && !tokens[0].colon && tokens[0].text == "end") {
            if (!open)
                throw ParseError(line_no, tokens[0].column, "'end' outside a source");
            try {
                sources.emplace_back(open->name,
                                     MassFunction(*frame, std::move(open->assignments), tolerance));
            } catch (const ValidationError& e) {
                throw ParseError(line_no, tokens[0].column,
                                 "source '" + open->name + "': " + e.what());
            }
            open.reset();
            continue;
        }

        // assignment
        if (!frame)
            throw ParseError(line_no, tokens[0].column, "no frame declared");
        if (!open)
            throw ParseError(line_no, tokens[0].column, "assignment outside a source");

        std::size_t colon_index = tokens.size();
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (tokens[i].colon) {
                colon_index = i;
                break;
            }
        }
        if (colon_index == tokens.size()) {
            const auto& last = tokens.back();
            throw ParseError(line_no, last.column + last.text.size(),
                             "expected ':' in assignment");
        }
        if (colon_index == 0)
            throw ParseError(line_no, tokens[0].column,
                             "assignment needs at least one element label");
        for (std::size_t i = colon_index + 1; i < tokens.size(); ++i)
            if (tokens[i].colon)
                throw ParseError(line_no, tokens[i].column, "unexpected second ':'");
        if (colon_index + 1 == tokens.size())
            throw ParseError(line_no, tokens[colon_index].column + 1, "expected mass after ':'");
        if (colon_index + 2 < tokens.size())
            throw ParseError(line_no, tokens[colon_index + 2].column,
                             "unexpected token after mass");

        std::vector<std::size_t> items;
        items.reserve(colon_index);
        for (std::size_t i = 0; i < colon_index; ++i) {
            auto index = frame->find(tokens[i].text);
            if (!index)
                throw ParseError(line_no, tokens[i].column,
                                 "unknown element '" + tokens[i].text + "'");
            items.push_back(*index);
        }

        const detail::Token& mass_token = tokens[colon_index + 1];
        if (!detail::is_decimal_literal(mass_token.text))
            throw ParseError(line_no, mass_token.column,
                             "malformed mass literal '" + mass_token.text + "'");
        double mass = 0.0;
        auto [ptr, ec] = std::from_chars(mass_token.text.data(),
                                         mass_token.text.data() + mass_token.text.size(), mass);
        if (ec != std::errc() || ptr != mass_token.text.data() + mass_token.text.size())
            throw ParseError(line_no, mass_token.column,
                             "mass literal '" + mass_token.text + "' out of range");
        if (!(mass > 0.0))
            throw ParseError(line_no, mass_token.column, "mass must be positive");

        auto [it, inserted] = open->seen.emplace(items, line_no);
        if (!inserted) {
            Event duplicate(*frame, items);
            throw ParseError(line_no, tokens[0].column,
                             "duplicate focal event '" + duplicate.to_string() +
                                 "' (first assigned at line " + std::to_string(it->second) + ")");
        }
        open->assignments.emplace_back(Event(*frame, std::move(items)), mass);
    }

    if (open)
        throw ParseError(open->line, open->column,
                         "source '" + open->name + "' is never closed with 'end'");
    if (!frame)
        throw ParseError(1, 1, "no frame declaration");
    return EvidenceDocument(std::move(*frame), std::move(sources));
}

/// Assignment lines in canonical event order: "<labels> : <mass>".
inline std::string render(const MassFunction& mf, int precision = 6) {
    std::string out;
    for (const auto& [event, mass] : mf.focal())
        out += event.to_string() + " : " + format_fixed(mass, precision) + "\n";
    return out;
}

/// Set-level masses, one focal set per line in canonical set order. Members
/// print in ascending frame order, so the text doubles as the lifted event
/// representation.
inline std::string render(const SetMassFunction& m, int precision = 6) {
    std::string out;
    for (const auto& [set, mass] : m.focal())
        out += set.to_string() + " : " + format_fixed(mass, precision) + "\n";
    return out;
}

/// Rule and conflict as comment lines, then the combined masses.
inline std::string render(const FusionOutcome& outcome, int precision = 6) {
    std::string out;
    out += std::string("# rule : ") + to_string(outcome.rule) + "\n";
    if (!outcome.operands.empty()) {
        out += "# sources :";
        for (const auto& name : outcome.operands)
            out += " " + name;
        out += "\n";
    }
    out += "# conflict : " + format_fixed(outcome.conflict, precision) + "\n";
    out += render(outcome.result, precision);
    return out;
}

inline std::string render(const PropertyReport& report, int precision = 6) {
    (void)precision; // witness lines are pre-rendered at fixed precision
    std::string out = report.name + " : " + (report.pass ? "pass" : "fail") +
                      " (max deviation " + format_scientific(report.max_deviation);
    if (!report.detail.empty())
        out += "; " + report.detail;
    out += ")\n";
    for (const auto& line : report.witness)
        out += "  " + line + "\n";
    return out;
}

/// Per-ordering fusions, shared projection, grouped support table with the
/// winner starred, then the winner-take-all decision.
inline std::string render(const DecisionReport& report, int precision = 6) {
    std::string out;
    for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
        const FusionOutcome& outcome = report.outcomes[i];
        std::string first = outcome.operands.empty() ? std::to_string(i + 1)
                                                     : outcome.operands.front();
        out += "# fusion " + first + " first\n";
        out += "# conflict : " + format_fixed(outcome.conflict, precision) + "\n";
        out += render(outcome.result, precision);
    }
    out += "# projection\n";
    out += render(report.projection, precision);
    for (const auto& group : report.support) {
        out += "# support {" + group.set.to_string() + "}\n";
        for (std::size_t i = 0; i < group.entries.size(); ++i) {
            out += group.entries[i].first.to_string() + " : " +
                   format_fixed(group.entries[i].second, precision);
            if (i == group.winner)
                out += " *";
            out += "\n";
        }
        if (group.tie)
            out += "# tie within {" + group.set.to_string() + "}\n";
    }
    out += "# decision\n";
    out += render(report.decision, precision);
    return out;
}

/// Full document in the evidence format; parses back to an equal document.
inline std::string render(const EvidenceDocument& document, int precision = 6) {
    std::string out = "frame:";
    for (const auto& label : document.frame().labels())
        out += " " + label;
    out += "\n";
    for (const auto& [name, mf] : document.sources()) {
        out += "\nsource " + name + "\n";
        out += render(mf, precision);
        out += "end\n";
    }
    return out;
}

} // namespace r2ps
