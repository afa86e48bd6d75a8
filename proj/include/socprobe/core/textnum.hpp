#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace socprobe {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Lowercase, collapse whitespace runs, strip leading/trailing punctuation.
// This is the normal form used for lenient text comparison.
inline std::string normalize_text(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char raw : s) {
        unsigned char c = static_cast<unsigned char>(raw);
        if (std::isspace(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    std::size_t b = 0, e = out.size();
    auto is_punct = [](char c) {
        return c == '.' || c == ',' || c == '!' || c == '?' || c == ';' || c == ':' ||
               c == '"' || c == '\'' || c == '(' || c == ')' || c == '[' || c == ']';
    };
    while (b < e && is_punct(out[b])) ++b;
    while (e > b && is_punct(out[e - 1])) --e;
    return out.substr(b, e - b);
}

// A parsed numeric value. Fractions and decimals unify through `value`;
// exactness is tracked so integer comparisons need no tolerance.
struct ParsedNumber {
    double value = 0.0;
    bool exact_integer = false;
    std::int64_t int_value = 0;
};

// Parse a string that is entirely one number: optional sign, digits with
// optional thousands separators, optional decimal part, or a/b fractions.
inline std::optional<ParsedNumber> parse_number(std::string_view raw) {
    std::string s = trim(raw);
    if (s.empty()) return std::nullopt;
    // strip wrapping punctuation like "(3,360)" or "42."
    while (!s.empty() && (s.front() == '(' || s.front() == '$')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ')' || s.back() == '.' || s.back() == ',' ||
                          s.back() == '!' || s.back() == '?')) s.pop_back();
    if (s.empty()) return std::nullopt;

    auto parse_simple = [](std::string_view t, double& out, bool& is_int,
                           std::int64_t& int_out) -> bool {
        std::size_t i = 0;
        bool neg = false;
        if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
            neg = t[i] == '-';
            ++i;
        }
        if (i >= t.size()) return false;
        std::string digits;
        bool seen_dot = false;
        bool seen_digit = false;
        std::size_t int_digits = 0;
        for (; i < t.size(); ++i) {
            char c = t[i];
            if (is_digit(c)) {
                digits.push_back(c);
                seen_digit = true;
                if (!seen_dot) ++int_digits;
            } else if (c == ',' && !seen_dot) {
                // thousands separator: needs at least 3 digits after it
                std::size_t run = 0;
                for (std::size_t j = i + 1; j < t.size() && is_digit(t[j]); ++j) ++run;
                if (run < 3) return false;
            } else if (c == '.' && !seen_dot) {
                seen_dot = true;
                digits.push_back('.');
            } else {
                return false;
            }
        }
        if (!seen_digit) return false;
        double v = 0.0;
        double frac_scale = 0.1;
        bool in_frac = false;
        for (char c : digits) {
            if (c == '.') {
                in_frac = true;
                continue;
            }
            if (!in_frac) {
                v = v * 10.0 + (c - '0');
            } else {
                v += (c - '0') * frac_scale;
                frac_scale *= 0.1;
            }
        }
        if (neg) v = -v;
        is_int = !seen_dot;
        if (is_int && int_digits <= 18) {
            std::int64_t iv = 0;
            for (char c : digits) iv = iv * 10 + (c - '0');
            int_out = neg ? -iv : iv;
        } else {
            is_int = false;
        }
        out = v;
        return true;
    };

    // fraction a/b
    std::size_t slash = s.find('/');
    if (slash != std::string::npos && slash > 0 && slash + 1 < s.size()) {
        double num = 0, den = 0;
        bool ni = false, di = false;
        std::int64_t dummy = 0;
        if (parse_simple(std::string_view(s).substr(0, slash), num, ni, dummy) &&
            parse_simple(std::string_view(s).substr(slash + 1), den, di, dummy) && den != 0.0) {
            ParsedNumber p;
            p.value = num / den;
            double rounded = std::nearbyint(p.value);
            p.exact_integer = std::abs(p.value - rounded) == 0.0 &&
                              std::abs(rounded) < 9.0e18;
            if (p.exact_integer) p.int_value = static_cast<std::int64_t>(rounded);
            return p;
        }
        return std::nullopt;
    }

    ParsedNumber p;
    bool is_int = false;
    if (!parse_simple(s, p.value, is_int, p.int_value)) return std::nullopt;
    p.exact_integer = is_int;
    return p;
}

// Lenient numeric equivalence: exact for integers, otherwise relative
// tolerance 1e-4 (absolute near zero).
inline bool numbers_equivalent(const ParsedNumber& a, const ParsedNumber& b) {
    if (a.exact_integer && b.exact_integer) return a.int_value == b.int_value;
    double scale = std::max(std::abs(a.value), std::abs(b.value));
    if (scale < 1e-12) return true;
    return std::abs(a.value - b.value) <= 1e-4 * std::max(scale, 1e-12) ||
           std::abs(a.value - b.value) <= 1e-9;
}

// Split into whitespace-delimited tokens.
inline std::vector<std::string> split_tokens(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// True iff the whole string is a single integer token (the counting-thread
// well-formedness rule): optional sign and digits, nothing else.
inline std::optional<std::int64_t> parse_bare_integer(std::string_view raw) {
    std::string s = trim(raw);
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    if (i >= s.size()) return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!is_digit(s[j])) return std::nullopt;
    }
    if (s.size() - i > 18) return std::nullopt;
    std::int64_t v = 0;
    for (std::size_t j = i; j < s.size(); ++j) v = v * 10 + (s[j] - '0');
    return s[0] == '-' ? -v : v;
}

// True iff the text contains at least one digit anywhere.
inline bool contains_integer_token(std::string_view s) {
    for (char c : s) {
        if (is_digit(c)) return true;
    }
    return false;
}

// Strip wrapping punctuation and markup from a single token.
inline std::string strip_token_punct(std::string_view tok) {
    std::size_t b = 0, e = tok.size();
    auto is_wrap = [](char c) {
        return c == '(' || c == ')' || c == '[' || c == ']' || c == '"' || c == '\'' ||
               c == '*' || c == '.' || c == ',' || c == '!' || c == '?' || c == ';' || c == ':';
    };
    while (b < e && is_wrap(tok[b])) ++b;
    while (e > b && is_wrap(tok[e - 1])) --e;
    return std::string(tok.substr(b, e - b));
}

inline std::string strip_leading_article(std::string s) {
    for (const char* art : {"a ", "an ", "the "}) {
        std::string a(art);
        if (s.size() > a.size() && s.compare(0, a.size(), a) == 0) return s.substr(a.size());
    }
    return s;
}

// Option letter of a multiple-choice value written as "D", "D)", "D.",
// or "D) full text".
inline std::optional<char> option_letter(std::string_view s) {
    std::string t = trim(s);
    if (t.empty()) return std::nullopt;
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    if (c < 'A' || c > 'J') return std::nullopt;
    if (t.size() == 1) return c;
    char next = t[1];
    if (next == ')' || next == '.' || next == ':') return c;
    return std::nullopt;
}

// Numeric tokens mentioned in free text: digit literals plus a small
// lexicon of number words and ordinals. Used by the dataset validator.
inline std::vector<double> extract_mentioned_numbers(std::string_view text) {
    static const std::unordered_map<std::string, double> words = {
        {"zero", 0},   {"one", 1},     {"two", 2},      {"three", 3},  {"four", 4},
        {"five", 5},   {"six", 6},     {"seven", 7},    {"eight", 8},  {"nine", 9},
        {"ten", 10},   {"eleven", 11}, {"twelve", 12},  {"twenty", 20},
        {"first", 1},  {"second", 2},  {"third", 3},    {"fourth", 4}, {"fifth", 5},
        {"sixth", 6},  {"seventh", 7}, {"eighth", 8},   {"ninth", 9},  {"tenth", 10},
        {"once", 1},   {"twice", 2},   {"half", 0.5},   {"dozen", 12}, {"no", 0},
    };
    std::vector<double> out;
    std::string cur;
    auto flush_word = [&]() {
        if (cur.empty()) return;
        auto it = words.find(to_lower(cur));
        if (it != words.end()) out.push_back(it->second);
        cur.clear();
    };
    for (std::size_t i = 0; i < text.size();) {
        char c = text[i];
        if (is_digit(c)) {
            flush_word();
            std::size_t j = i;
            std::string num;
            while (j < text.size() &&
                   (is_digit(text[j]) || text[j] == ',' || text[j] == '.')) {
                num.push_back(text[j]);
                ++j;
            }
            while (!num.empty() && (num.back() == '.' || num.back() == ',')) num.pop_back();
            if (auto p = parse_number(num)) out.push_back(p->value);
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            cur.push_back(c);
            ++i;
        } else {
            flush_word();
            ++i;
        }
    }
    flush_word();
    return out;
}

}  // namespace socprobe
