#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socprobe/core/ids.hpp"
#include "socprobe/core/platform.hpp"
#include "socprobe/core/textnum.hpp"
#include "socprobe/probe/dataset.hpp"

namespace socprobe {

// Appendix-style individual verdict for one comment.
struct Judgment {
    std::uint64_t comment_id = 0;
    bool offers_answer = false;
    std::optional<std::string> answer_value;
    std::optional<bool> is_correct;  // set iff offers_answer
    std::string note;
};

namespace detail {

// Lines like "Consensus: 42" summarize the group, not the commenter's own
// answer; the individual scan skips them (the collective judge reads them).
inline std::vector<std::string> non_consensus_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    auto flush = [&]() {
        std::string t = trim(cur);
        if (!t.empty() && to_lower(t).rfind("consensus:", 0) != 0) lines.push_back(cur);
        cur.clear();
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return lines;
}

inline std::vector<std::string> consensus_values(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&]() {
        std::string t = trim(cur);
        if (to_lower(t).rfind("consensus:", 0) == 0) out.push_back(trim(t.substr(10)));
        cur.clear();
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return out;
}

// The answer-marker patterns, in priority order:
//   1. "answer is X" / "answer: X" / "final answer X"
//   2. "<is|=|equals|totals|gives|comes to> <number>"
//   3. a terminal standalone number, or the whole comment being one token
//   4. a standalone option letter (multiple choice only)
struct Commitment {
    std::string value;
    int pattern = 0;
};

inline std::optional<Commitment> find_commitment(std::string_view content, bool multiple_choice) {
    std::vector<std::string> lines = non_consensus_lines(content);
    std::string text;
    for (const std::string& l : lines) {
        if (!text.empty()) text.push_back('\n');
        text += l;
    }
    std::vector<std::string> raw_tokens = split_tokens(text);
    std::vector<std::string> tokens;
    tokens.reserve(raw_tokens.size());
    for (const auto& t : raw_tokens) tokens.push_back(strip_token_punct(t));

    auto lower = [&](std::size_t i) { return to_lower(tokens[i]); };

    // pattern 1: phrase after an explicit answer marker, up to sentence end
    std::optional<Commitment> best;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        std::string w = lower(i);
        bool marker = false;
        std::size_t value_from = 0;
        if (w == "answer" || w == "answer:") {
            value_from = i + 1;
            if (value_from < tokens.size()) {
                std::string nxt = to_lower(tokens[value_from]);
                if (nxt == "is" || nxt == "=" || nxt == ":") ++value_from;
            }
            marker = true;
        }
        if (marker && value_from < tokens.size()) {
            std::string phrase;
            for (std::size_t j = value_from; j < tokens.size(); ++j) {
                bool sentence_end = !raw_tokens[j].empty() &&
                                    (raw_tokens[j].back() == '.' || raw_tokens[j].back() == '!' ||
                                     raw_tokens[j].back() == '?');
                if (!phrase.empty()) phrase.push_back(' ');
                phrase += tokens[j];
                if (sentence_end) break;
            }
            if (!trim(phrase).empty()) best = Commitment{trim(phrase), 1};
        }
    }
    if (best) return best;

    // pattern 2: copula followed directly by a number
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        std::string w = lower(i);
        bool copula = w == "is" || w == "=" || w == "equals" || w == "totals" || w == "gives" ||
                      w == "makes" || (w == "to" && i > 0 &&
                                       (lower(i - 1) == "comes" || lower(i - 1) == "equal"));
        if (!copula) continue;
        if (auto p = parse_number(tokens[i + 1])) {
            (void)p;
            best = Commitment{tokens[i + 1], 2};
        }
    }
    if (best) return best;

    // pattern 3: terminal standalone number / single-token comment
    if (!tokens.empty()) {
        const std::string& last = tokens.back();
        if (parse_number(last)) return Commitment{last, 3};
        if (tokens.size() == 1 && !tokens[0].empty()) {
            if (multiple_choice || parse_number(tokens[0])) return Commitment{tokens[0], 3};
        }
    }

    // pattern 4: standalone option letter
    if (multiple_choice) {
        auto is_letter_tok = [](const std::string& t) {
            return t.size() == 1 && t[0] >= 'A' && t[0] <= 'J';
        };
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            std::string w = lower(i);
            if ((w == "option" || w == "choice" || w == "pick" || w == "with" || w == "choose" ||
                 w == "select") &&
                i + 1 < tokens.size() && is_letter_tok(tokens[i + 1])) {
                return Commitment{tokens[i + 1], 4};
            }
        }
        if (!tokens.empty() && is_letter_tok(tokens.back())) return Commitment{tokens.back(), 4};
        // parenthesized letters like "(D)" keep their marker through stripping
        for (std::size_t i = 0; i < raw_tokens.size(); ++i) {
            const std::string& rt = raw_tokens[i];
            if (rt.size() >= 3 && rt.front() == '(' &&
                is_letter_tok(strip_token_punct(rt)) && rt[2] == ')') {
                return Commitment{strip_token_punct(rt), 4};
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Lenient equivalence between a committed value and the ground truth.
// Numbers unify across fractions, decimals, separators, and a 1e-4
// relative tolerance; text falls back to normalized comparison.
inline bool answer_equivalent(const std::string& committed, const std::string& truth,
                              AnswerType type) {
    std::string c_norm = normalize_text(committed);
    std::string t_norm = normalize_text(truth);
    if (c_norm == t_norm) return true;
    if (type == AnswerType::multipleChoice) {
        auto cl = option_letter(committed);
        auto tl = option_letter(truth);
        if (cl && tl) return *cl == *tl;
        // full option text: truth "D) blue" vs committed "blue"
        if (tl && !cl) {
            std::string rest = trim(truth);
            rest = rest.size() > 2 ? trim(rest.substr(2)) : "";
            if (!rest.empty() && normalize_text(rest) == c_norm) return true;
        }
        return false;
    }
    auto cn = parse_number(committed);
    auto tn = parse_number(truth);
    if (cn && tn) return numbers_equivalent(*cn, *tn);
    if (static_cast<bool>(cn) != static_cast<bool>(tn)) {
        // "6" vs "6 tendons" style: compare the leading number of the text side
        const std::string& textual = cn ? truth : committed;
        auto toks = split_tokens(textual);
        if (!toks.empty()) {
            auto lead = parse_number(strip_token_punct(toks.front()));
            if (lead && cn) return numbers_equivalent(*cn, *lead);
            if (lead && tn) return numbers_equivalent(*lead, *tn);
        }
        return false;
    }
    return strip_leading_article(c_norm) == strip_leading_article(t_norm);
}

// Appendix-rubric individual judgment: does this comment, on its own,
// offer or state the correct answer? Total; never throws.
inline Judgment judge_answer(const Comment& comment, const std::string& answer, AnswerType type) {
    Judgment j;
    j.comment_id = comment.id.value;
    auto commitment =
        detail::find_commitment(comment.content, type == AnswerType::multipleChoice);
    if (!commitment) {
        j.offers_answer = false;
        j.note = "no committed answer";
        return j;
    }
    j.offers_answer = true;
    j.answer_value = commitment->value;
    j.is_correct = answer_equivalent(commitment->value, answer, type);
    j.note = *j.is_correct ? "committed answer matches" : "committed answer does not match";
    return j;
}

}  // namespace socprobe
