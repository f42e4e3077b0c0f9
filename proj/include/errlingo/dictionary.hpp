#pragma once

// Lexicon: English diagnostic words -> target-language glosses.
//
// File format, one entry per line:
//
//     key=gloss
//
// The first '=' separates key from gloss. Lines without '=' are headers or
// comments and are skipped; blank lines are ignored. The key is trimmed and
// case-folded, the gloss is right-trimmed and kept verbatim, including any
// parenthetical explanation.

#include <errlingo/text.hpp>

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace errlingo {

/// Section headers used by the renderer.
struct ReportLabels {
    std::string results = "RESULTATS";
    std::string errors = "ERREURS";
    std::string translation = "TRADUCTION";
    std::string line = "LIGNE";

    bool operator==(const ReportLabels&) const = default;
};

struct LexiconEntry {
    std::string key;    // case-folded
    std::string gloss;

    bool operator==(const LexiconEntry&) const = default;
};

enum class FindingKind {
    duplicate_key,  // same case-folded key seen again; the later entry wins
    empty_key,      // line begins with '='
    invalid_key,    // key contains whitespace
    empty_gloss,    // nothing after '='
};

inline std::string_view to_string(FindingKind k) {
    switch (k) {
        case FindingKind::duplicate_key: return "duplicate key";
        case FindingKind::empty_key: return "empty key";
        case FindingKind::invalid_key: return "key contains whitespace";
        case FindingKind::empty_gloss: return "empty gloss";
    }
    return "unknown";
}

struct LexiconFinding {
    FindingKind kind;
    std::size_t line = 0;        // 1-based
    std::string key;
    std::size_t first_line = 0;  // duplicate_key only: where the key was first defined

    std::string message() const {
        std::string m = "line " + std::to_string(line) + ": " + std::string(to_string(kind));
        if (!key.empty()) m += " '" + key + "'";
        if (kind == FindingKind::duplicate_key)
            m += " (first defined on line " + std::to_string(first_line) + ")";
        return m;
    }
};

class Lexicon {
public:
    using map_type = std::map<std::string, LexiconEntry, std::less<>>;

    Lexicon() = default;
    Lexicon(map_type entries, std::string source_path = {}, ReportLabels labels = {})
        : entries_(std::move(entries)),
          source_path_(std::move(source_path)),
          labels_(std::move(labels)) {}

    const map_type& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const std::string& source_path() const noexcept { return source_path_; }
    const ReportLabels& labels() const noexcept { return labels_; }

    /// Exact match of the case-folded token against the keys, then a retry
    /// with leading/trailing punctuation removed. Glosses are never searched.
    const LexiconEntry* lookup(std::string_view token) const {
        if (auto* e = find_key(fold_case(token))) return e;
        auto stripped = strip_edge_punctuation(token);
        if (stripped.empty() || stripped.size() == token.size()) return nullptr;
        return find_key(fold_case(stripped));
    }

    bool operator==(const Lexicon& o) const { return entries_ == o.entries_; }

private:
    const LexiconEntry* find_key(std::string_view folded) const {
        auto it = entries_.find(folded);
        return it == entries_.end() ? nullptr : &it->second;
    }

    map_type entries_;
    std::string source_path_;
    ReportLabels labels_;
};

inline std::optional<LexiconEntry> lookup(const Lexicon& lex, std::string_view token) {
    if (auto* e = lex.lookup(token)) return *e;
    return std::nullopt;
}

struct ValidationReport {
    std::size_t entries = 0;
    std::size_t header_lines = 0;
    std::size_t duplicate_keys = 0;
    std::size_t empty_keys = 0;
    std::size_t invalid_keys = 0;
    std::size_t empty_glosses = 0;
    std::vector<LexiconFinding> findings;

    bool clean() const noexcept { return findings.empty(); }
};

namespace detail {

struct ScanResult {
    Lexicon::map_type entries;
    ValidationReport report;
};

inline ScanResult scan_lexicon(std::string_view text) {
    require_utf8(text);
    ScanResult out;
    std::map<std::string, std::size_t, std::less<>> defined_at;
    std::size_t lineno = 0;
    for (const auto& raw : split_lines(text)) {
        ++lineno;
        std::string_view line = raw;
        if (trim(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            ++out.report.header_lines;
            continue;
        }
        auto key = trim(line.substr(0, eq));
        auto gloss = trim_right(line.substr(eq + 1));
        auto reject = [&](FindingKind kind, std::size_t& counter) {
            ++counter;
            out.report.findings.push_back({kind, lineno, fold_case(key), 0});
        };
        if (key.empty()) {
            reject(FindingKind::empty_key, out.report.empty_keys);
            continue;
        }
        bool has_space = false;
        for (char c : key) has_space = has_space || is_space(c);
        if (has_space) {
            reject(FindingKind::invalid_key, out.report.invalid_keys);
            continue;
        }
        if (trim(gloss).empty()) {
            reject(FindingKind::empty_gloss, out.report.empty_glosses);
            continue;
        }
        std::string folded = fold_case(key);
        if (auto it = defined_at.find(folded); it != defined_at.end()) {
            ++out.report.duplicate_keys;
            out.report.findings.push_back({FindingKind::duplicate_key, lineno, folded, it->second});
            it->second = lineno;
        } else {
            defined_at.emplace(folded, lineno);
        }
        out.entries.insert_or_assign(folded, LexiconEntry{folded, std::string(gloss)});
    }
    out.report.entries = out.entries.size();
    return out;
}

}  // namespace detail

/// Parses a lexicon document. Rejected lines and duplicate keys are appended
/// to `warnings` when given; malformed UTF-8 throws EncodingError.
inline Lexicon parse_lexicon(std::string_view text, std::vector<LexiconFinding>* warnings = nullptr,
                             std::string source_path = {}, ReportLabels labels = {}) {
    auto scanned = detail::scan_lexicon(text);
    if (warnings)
        warnings->insert(warnings->end(), scanned.report.findings.begin(),
                         scanned.report.findings.end());
    return Lexicon(std::move(scanned.entries), std::move(source_path), std::move(labels));
}

inline ValidationReport validate_lexicon(std::string_view text) {
    return detail::scan_lexicon(text).report;
}

/// Raised when a lexicon or other input file cannot be read.
class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec)) throw FileError("'" + path + "' is a directory");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw FileError("error reading '" + path + "'");
    return ss.str();
}

inline Lexicon load_lexicon(const std::string& path, std::vector<LexiconFinding>* warnings = nullptr) {
    return parse_lexicon(read_file(path), warnings, path);
}

}  // namespace errlingo
