#pragma once

// Splits a diagnostic line into whitespace-delimited tokens and tags each one
// so that code (quoted literals, file positions, ALL-CAPS keywords) can be
// kept away from the lexicon.

#include <errlingo/text.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace errlingo {

enum class TokenKind { natural, quoted, location, all_caps_code };

inline std::string_view to_string(TokenKind k) {
    switch (k) {
        case TokenKind::natural: return "natural";
        case TokenKind::quoted: return "quoted";
        case TokenKind::location: return "location";
        case TokenKind::all_caps_code: return "all-caps-code";
    }
    return "unknown";
}

struct Token {
    std::string raw;
    std::string normalized;  // case-folded, edge punctuation stripped
    TokenKind kind = TokenKind::natural;

    bool operator==(const Token&) const = default;
};

inline std::string normalize_token(std::string_view raw) {
    return fold_case(strip_edge_punctuation(raw));
}

namespace detail {

inline bool is_quoted(std::string_view raw) {
    constexpr std::string_view lsq = "\xE2\x80\x98", rsq = "\xE2\x80\x99";
    if (raw.size() >= 2) {
        const char open = raw.front(), close = raw.back();
        if ((open == '`' || open == '\'') && close == '\'') return true;
        if (open == '"' && close == '"') return true;
    }
    return raw.size() >= lsq.size() + rsq.size() && raw.starts_with(lsq) && raw.ends_with(rsq);
}

// name.ext: -- a file name followed by a colon.
inline bool is_file_colon(std::string_view raw) {
    if (raw.size() < 2 || raw.back() != ':') return false;
    auto body = raw.substr(0, raw.size() - 1);
    auto dot = body.rfind('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 1 == body.size()) return false;
    for (char c : body.substr(dot + 1))
        if (!is_alpha_ascii(c) && !is_digit_ascii(c)) return false;
    for (char c : body.substr(0, dot))
        if (!is_alpha_ascii(c) && !is_digit_ascii(c) && c != '_' && c != '-' && c != '.')
            return false;
    return true;
}

inline bool is_location(std::string_view raw) {
    if (raw.find('/') != std::string_view::npos) return true;
    // "6:", "err.c:7:1:", "err.f90:4.5:"
    if (raw.size() >= 2 && raw.back() == ':' && is_digit_ascii(raw[raw.size() - 2])) return true;
    return is_file_colon(raw);
}

inline bool is_all_caps(std::string_view raw) {
    if (raw.size() < 2) return false;
    bool any_letter = false;
    for (char c : raw) {
        if (is_lower_ascii(c)) return false;
        any_letter = any_letter || is_upper_ascii(c);
    }
    return any_letter;
}

}  // namespace detail

/// Precedence: quoted, location, all-caps-code, natural.
inline TokenKind classify_token(std::string_view raw) {
    if (detail::is_quoted(raw)) return TokenKind::quoted;
    if (detail::is_location(raw)) return TokenKind::location;
    if (detail::is_all_caps(raw)) return TokenKind::all_caps_code;
    return TokenKind::natural;
}

inline Token make_token(std::string_view raw) {
    return Token{std::string(raw), normalize_token(raw), classify_token(raw)};
}

inline std::vector<Token> split_line(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) tokens.push_back(make_token(line.substr(start, i - start)));
    }
    return tokens;
}

}  // namespace errlingo
