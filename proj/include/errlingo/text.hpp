#pragma once

// Byte-level text helpers shared by the lexicon, tokenizer and runner.
// Case folding is ASCII-only: keys are English words, and non-ASCII bytes
// pass through unchanged.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace errlingo {

/// Raised when input that must be UTF-8 is not.
class EncodingError : public std::runtime_error {
public:
    EncodingError(std::size_t offset)
        : std::runtime_error("invalid UTF-8 at byte offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Returns the byte offset of the first malformed sequence, or nothing if
/// the text is well-formed UTF-8 (no overlongs, no surrogates, <= U+10FFFF).
inline std::optional<std::size_t> find_invalid_utf8(std::string_view text) {
    const auto* s = reinterpret_cast<const unsigned char*>(text.data());
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        const unsigned char c = s[i];
        if (c < 0x80) {
            ++i;
            continue;
        }
        std::size_t len = 0;
        char32_t cp = 0;
        char32_t min = 0;
        if ((c & 0xE0) == 0xC0) { len = 2; cp = c & 0x1F; min = 0x80; }
        else if ((c & 0xF0) == 0xE0) { len = 3; cp = c & 0x0F; min = 0x800; }
        else if ((c & 0xF8) == 0xF0) { len = 4; cp = c & 0x07; min = 0x10000; }
        else return i;
        if (i + len > n) return i;
        for (std::size_t k = 1; k < len; ++k) {
            if ((s[i + k] & 0xC0) != 0x80) return i;
            cp = (cp << 6) | (s[i + k] & 0x3F);
        }
        if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
        i += len;
    }
    return std::nullopt;
}

inline void require_utf8(std::string_view text) {
    if (auto bad = find_invalid_utf8(text)) throw EncodingError(*bad);
}

constexpr bool is_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

constexpr char to_lower_ascii(char c) noexcept {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

constexpr bool is_upper_ascii(char c) noexcept { return c >= 'A' && c <= 'Z'; }
constexpr bool is_lower_ascii(char c) noexcept { return c >= 'a' && c <= 'z'; }
constexpr bool is_digit_ascii(char c) noexcept { return c >= '0' && c <= '9'; }
constexpr bool is_alpha_ascii(char c) noexcept { return is_upper_ascii(c) || is_lower_ascii(c); }

inline std::string fold_case(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = to_lower_ascii(c);
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

inline std::string_view trim_right(std::string_view s) {
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

namespace detail {

// Typographic quotes that compilers put around identifiers (‘ ’ “ ” « »).
inline constexpr std::string_view unicode_quotes[] = {
    "\xE2\x80\x98", "\xE2\x80\x99", "\xE2\x80\x9C", "\xE2\x80\x9D", "\xC2\xAB", "\xC2\xBB",
};

inline std::size_t quote_prefix(std::string_view s) {
    for (auto q : unicode_quotes)
        if (s.starts_with(q)) return q.size();
    return 0;
}

inline std::size_t quote_suffix(std::string_view s) {
    for (auto q : unicode_quotes)
        if (s.ends_with(q)) return q.size();
    return 0;
}

}  // namespace detail

/// Word characters are ASCII letters, digits, underscore and any non-ASCII
/// code point other than the typographic quotes above.
inline std::string_view strip_edge_punctuation(std::string_view s) {
    auto is_ascii_punct = [](char c) {
        return static_cast<unsigned char>(c) < 0x80 && !is_alpha_ascii(c) && !is_digit_ascii(c) &&
               c != '_';
    };
    for (;;) {
        if (!s.empty() && is_ascii_punct(s.front())) s.remove_prefix(1);
        else if (auto q = detail::quote_prefix(s)) s.remove_prefix(q);
        else break;
    }
    for (;;) {
        if (!s.empty() && is_ascii_punct(s.back())) s.remove_suffix(1);
        else if (auto q = detail::quote_suffix(s)) s.remove_suffix(q);
        else break;
    }
    return s;
}

/// Splits on '\n'. A trailing newline does not produce an empty final line.
inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        if (nl == std::string_view::npos) {
            lines.emplace_back(text);
            break;
        }
        lines.emplace_back(text.substr(0, nl));
        text.remove_prefix(nl + 1);
    }
    return lines;
}

}  // namespace errlingo
