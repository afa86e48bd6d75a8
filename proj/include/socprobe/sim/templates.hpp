#pragma once

#include <array>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "socprobe/core/labels.hpp"
#include "socprobe/core/rng.hpp"
#include "socprobe/core/textnum.hpp"
#include "socprobe/probe/dataset.hpp"

namespace socprobe {

// Shared vocabulary between the generator and the rule-based judges.
// Every synthetic comment carries exactly one marker phrase; the judge
// maps markers back to classes, so round-tripping is exact by design.
enum class MarkerClass { attempt, partial, superficial, irrelevant };

struct CommentTemplate {
    const char* marker;   // verbatim substring present in every render
    MarkerClass cls;
    int relevance;        // 0-5 substantiveness anchor for this phrasing
    const char* pattern;  // "{A}" is replaced by the committed answer
};

// Non-attempt patterns deliberately contain no digits, no "answer"
// token, and no terminal option letter, so they can never register as a
// committed answer.
inline const std::vector<CommentTemplate>& comment_templates() {
    static const std::vector<CommentTemplate> bank = {
        {"Worked through the steps", MarkerClass::attempt, 4,
         "Worked through the steps: starting from the given quantities and applying them in "
         "order, the answer is {A}."},
        {"Putting the pieces together", MarkerClass::attempt, 4,
         "Putting the pieces together from the thread, the answer is {A}."},
        {"derivation checks out", MarkerClass::attempt, 4,
         "Ran it twice and the derivation checks out. The answer is {A}."},
        {"framing apart", MarkerClass::attempt, 5,
         "Taking the post's framing apart and checking it against the evidence, the claim only "
         "holds one way: the answer is {A}."},
        {"chase the definitions", MarkerClass::attempt, 5,
         "You have to chase the definitions all the way down; doing that carefully, the answer "
         "is {A}."},

        {"A useful starting point", MarkerClass::partial, 3,
         "A useful starting point is to restate what each given quantity controls before "
         "combining anything."},
        {"One relevant angle", MarkerClass::partial, 3,
         "One relevant angle: the structure here rewards dimensional analysis before any "
         "computation."},
        {"key relation ties", MarkerClass::partial, 4,
         "Can't pin down the final value yet, but the key relation ties the per-step quantities "
         "to the overall total directly."},

        {"Great post", MarkerClass::superficial, 1, "Great post!"},
        {"Thanks for sharing", MarkerClass::superficial, 1, "Thanks for sharing!"},
        {"Welcome", MarkerClass::superficial, 1, "Welcome! Glad this community is growing."},
        {"Fascinating question", MarkerClass::superficial, 1,
         "Fascinating question, following this thread."},
        {"re-reading the prompt", MarkerClass::superficial, 2,
         "Mostly re-reading the prompt here; the question itself is clear enough, just hard."},
        {"what everyone else said", MarkerClass::superficial, 2,
         "Agreed with what everyone else said above."},

        {"meteor shower", MarkerClass::irrelevant, 0,
         "Anyone else watching the meteor shower tonight? Absolutely unreal."},
        {"ramen place", MarkerClass::irrelevant, 0,
         "Has anyone tried the new ramen place downtown? Genuinely life-changing."},
        {"premium persona themes", MarkerClass::irrelevant, 0,
         "Limited offer: premium persona themes, DM to claim."},
        {"daily hot takes", MarkerClass::irrelevant, 0,
         "Follow me for daily hot takes and giveaways!!"},
    };
    return bank;
}

inline const CommentTemplate* recognize_template(const std::string& content) {
    for (const CommentTemplate& t : comment_templates()) {
        if (content.find(t.marker) != std::string::npos) return &t;
    }
    return nullptr;
}

// A committed value that can never pass the lenient equivalence check
// against `truth`.
inline std::string wrong_answer_for(const std::string& truth, AnswerType type) {
    if (type == AnswerType::multipleChoice) {
        if (auto letter = option_letter(truth)) {
            char next = *letter == 'E' ? 'A' : static_cast<char>(*letter + 1);
            return std::string(1, next);
        }
        return "A";
    }
    if (auto n = parse_number(truth)) {
        if (n->exact_integer) return std::to_string(2 * n->int_value + 7);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", 2.0 * n->value + 7.0);
        return std::string(buf);
    }
    return normalize_text(truth) == "obsidian" ? "feldspar" : "obsidian";
}

namespace detail {

inline std::string substitute_answer(std::string pattern, const std::string& value) {
    const std::string slot = "{A}";
    std::size_t at = pattern.find(slot);
    while (at != std::string::npos) {
        pattern.replace(at, slot.size(), value);
        at = pattern.find(slot, at + value.size());
    }
    return pattern;
}

inline const CommentTemplate& pick_template(MarkerClass cls, Rng& rng) {
    const auto& bank = comment_templates();
    std::vector<const CommentTemplate*> pool;
    for (const CommentTemplate& t : bank) {
        if (t.cls == cls) pool.push_back(&t);
    }
    return *pool[rng.bounded(pool.size())];
}

}  // namespace detail

// Render a quality-labelled comment for a Tier I/II thread. Attempts
// commit to the true answer (CORRECT_REASONING) or a provably wrong one
// (WRONG_REASONING).
inline std::string render_quality_comment(QualityLabel label, const std::string& truth,
                                          AnswerType type, Rng& rng) {
    switch (label) {
        case QualityLabel::CORRECT_REASONING:
            return detail::substitute_answer(
                detail::pick_template(MarkerClass::attempt, rng).pattern, truth);
        case QualityLabel::WRONG_REASONING:
            return detail::substitute_answer(
                detail::pick_template(MarkerClass::attempt, rng).pattern,
                wrong_answer_for(truth, type));
        case QualityLabel::PARTIAL_REASONING:
            return detail::pick_template(MarkerClass::partial, rng).pattern;
        case QualityLabel::SUPERFICIAL:
            return detail::pick_template(MarkerClass::superficial, rng).pattern;
        case QualityLabel::IRRELEVANT:
            return detail::pick_template(MarkerClass::irrelevant, rng).pattern;
    }
    throw ValidationError("bad quality label");
}

// Render a counting-thread reply. `expected` is the chain value a
// rule-following reply must contain at this position.
inline std::string render_counting_comment(LatentLabel label, std::int64_t expected, Rng& rng) {
    switch (label) {
        case LatentLabel::COUNT_OK:
            return std::to_string(expected);
        case LatentLabel::COUNT_WRONG_VALUE: {
            std::int64_t offsets[6] = {-3, -2, -1, 1, 2, 3};
            return std::to_string(expected + offsets[rng.bounded(6)]);
        }
        case LatentLabel::COUNT_WRONG_FORMAT:
            return "The next number is " + std::to_string(expected) + ".";
        case LatentLabel::OFFTOPIC:
            return detail::pick_template(MarkerClass::irrelevant, rng).pattern;
        default:
            throw ValidationError("not a counting label");
    }
}

}  // namespace socprobe
