// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gozinta/core.hpp"
#include "gozinta/errors.hpp"
#include "gozinta/nesting.hpp"

namespace gozinta {

// Line-oriented text format, '#' starts a comment:
//
//   box <label> dims <v1> <v2> ... [expand <index>]
//   arrangement <name> order <innermost> <next> ... <outermost>
//   show <arrangement-name> <label> closed
//   show <arrangement-name> <label> expanded <amount>
//
// Numbers are integers, "p/q", or exact decimals. Canonical rendering
// lists boxes first (input order), then arrangement lines, then show
// lines grouped per arrangement innermost-first.

namespace detail {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

[[noreturn]] inline void parse_fail(Errc code, std::size_t line, std::size_t col,
                                    const std::string& message) {
    throw Error(code, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                          message);
}

}  // namespace detail

/// Parses the text format into an instance (bound enforcement defaults
/// to on; it is a runtime flag, not part of the file).
inline TrickInstance parse(std::string_view text) {
    TrickInstance out;
    out.enforce_bound = true;
    std::map<std::string, std::size_t> arrangement_index;
    std::map<std::string, std::set<std::string>> shown;  // arrangement -> labels covered

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        auto tokens = detail::tokenize_line(line);
        if (tokens.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        const auto& head = tokens[0];
        auto need = [&](std::size_t idx, const char* what) -> const detail::Token& {
            if (idx >= tokens.size())
                detail::parse_fail(Errc::ParseError, line_no, line.size() + 1,
                                   std::string("expected ") + what);
            return tokens[idx];
        };
        auto number = [&](const detail::Token& tok) {
            try {
                return Rational::from_string(tok.text);
            } catch (const Error&) {
                detail::parse_fail(Errc::ParseError, line_no, tok.column,
                                   "bad number: " + tok.text);
            }
        };

        if (head.text == "box") {
            const auto& label = need(1, "label");
            if (out.has_box(label.text))
                detail::parse_fail(Errc::DuplicateLabel, line_no, label.column,
                                   "box " + label.text + " already defined");
            const auto& kw = need(2, "'dims'");
            if (kw.text != "dims")
                detail::parse_fail(Errc::ParseError, line_no, kw.column, "expected 'dims'");
            std::vector<Scalar> sides;
            std::size_t i = 3;
            for (; i < tokens.size() && tokens[i].text != "expand"; ++i)
                sides.push_back(number(tokens[i]));
            std::optional<std::size_t> expand;
            if (i < tokens.size()) {
                const auto& idx_tok = need(i + 1, "expand index");
                Rational idx = number(idx_tok);
                if (!idx.is_integer() || idx < Rational(1) ||
                    idx > Rational(static_cast<std::int64_t>(sides.size())))
                    detail::parse_fail(Errc::ParseError, line_no, idx_tok.column,
                                       "expand index out of range");
                expand = static_cast<std::size_t>(idx.num().to_int64());
                if (i + 2 < tokens.size())
                    detail::parse_fail(Errc::ParseError, line_no, tokens[i + 2].column,
                                       "trailing tokens");
            }
            Dims dims;
            try {
                dims = make_dims(std::move(sides));
            } catch (const Error& e) {
                detail::parse_fail(Errc::ParseError, line_no, head.column, e.what());
            }
            out.boxes.push_back({label.text, std::move(dims), expand});
        } else if (head.text == "arrangement") {
            const auto& name = need(1, "name");
            if (arrangement_index.count(name.text))
                detail::parse_fail(Errc::DuplicateLabel, line_no, name.column,
                                   "arrangement " + name.text + " already defined");
            const auto& kw = need(2, "'order'");
            if (kw.text != "order")
                detail::parse_fail(Errc::ParseError, line_no, kw.column, "expected 'order'");
            Arrangement arr;
            arr.name = name.text;
            std::set<std::string> seen;
            for (std::size_t i = 3; i < tokens.size(); ++i) {
                if (!out.has_box(tokens[i].text))
                    detail::parse_fail(Errc::UnknownLabel, line_no, tokens[i].column,
                                       "unknown box " + tokens[i].text);
                if (!seen.insert(tokens[i].text).second)
                    detail::parse_fail(Errc::DuplicateLabel, line_no, tokens[i].column,
                                       "box " + tokens[i].text + " repeated in order");
                arr.order.push_back(tokens[i].text);
            }
            if (arr.order.size() != out.boxes.size())
                detail::parse_fail(Errc::ParseError, line_no, head.column,
                                   "order must list every box exactly once");
            arrangement_index[arr.name] = out.arrangements.size();
            out.arrangements.push_back(std::move(arr));
        } else if (head.text == "show") {
            const auto& name = need(1, "arrangement name");
            auto it = arrangement_index.find(name.text);
            if (it == arrangement_index.end())
                detail::parse_fail(Errc::UnknownLabel, line_no, name.column,
                                   "unknown arrangement " + name.text);
            Arrangement& arr = out.arrangements[it->second];
            const auto& label = need(2, "box label");
            if (!out.has_box(label.text))
                detail::parse_fail(Errc::UnknownLabel, line_no, label.column,
                                   "unknown box " + label.text);
            if (!shown[name.text].insert(label.text).second)
                detail::parse_fail(Errc::DuplicateLabel, line_no, label.column,
                                   "box " + label.text + " already shown in " + name.text);
            const auto& state = need(3, "'closed' or 'expanded'");
            if (state.text == "closed") {
                if (tokens.size() > 4)
                    detail::parse_fail(Errc::ParseError, line_no, tokens[4].column,
                                       "trailing tokens");
                arr.presentation[label.text] = Presentation::make_closed();
            } else if (state.text == "expanded") {
                const auto& amt = need(4, "amount");
                if (tokens.size() > 5)
                    detail::parse_fail(Errc::ParseError, line_no, tokens[5].column,
                                       "trailing tokens");
                arr.presentation[label.text] = Presentation::expanded(number(amt));
            } else {
                detail::parse_fail(Errc::ParseError, line_no, state.column,
                                   "expected 'closed' or 'expanded'");
            }
        } else {
            detail::parse_fail(Errc::ParseError, line_no, head.column,
                               "unknown directive " + head.text);
        }
        if (pos > text.size()) break;
    }

    for (const auto& arr : out.arrangements)
        for (const auto& label : arr.order)
            if (!arr.presentation.count(label))
                throw Error(Errc::ParseError, "arrangement " + arr.name +
                                                  " has no show line for box " + label);
    return out;
}

/// Canonical text rendering; parse(render(x)) == x for structurally
/// valid instances.
inline std::string render(const TrickInstance& instance) {
    std::string out;
    for (const auto& b : instance.boxes) {
        out += "box " + b.label + " dims";
        for (const auto& s : b.dims.sides()) out += " " + s.to_string();
        if (b.expand_side) out += " expand " + std::to_string(*b.expand_side);
        out += "\n";
    }
    for (const auto& arr : instance.arrangements) {
        out += "arrangement " + arr.name + " order";
        for (const auto& label : arr.order) out += " " + label;
        out += "\n";
    }
    for (const auto& arr : instance.arrangements) {
        for (const auto& label : arr.order) {
            const Presentation& p = arr.presentation_of(label);
            out += "show " + arr.name + " " + label + " ";
            out += p.closed() ? "closed" : "expanded " + p.amount->to_string();
            out += "\n";
        }
    }
    return out;
}

}  // namespace gozinta
