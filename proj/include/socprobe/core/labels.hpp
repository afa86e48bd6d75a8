#pragma once

#include <optional>
#include <string>

#include "socprobe/core/errors.hpp"

namespace socprobe {

// Comment quality categories, one per comment.
enum class QualityLabel {
    CORRECT_REASONING,
    PARTIAL_REASONING,
    WRONG_REASONING,
    SUPERFICIAL,
    IRRELEVANT,
};

// Verdicts for replies on counting threads.
enum class CountVerdict {
    COUNT_OK,
    COUNT_WRONG_VALUE,
    COUNT_WRONG_FORMAT,
    OFFTOPIC,
    DOUBLE_POST,
};

// Simulation-side ground truth attached to generated comments. Stripped
// before any judging input. The first five mirror QualityLabel; the rest
// are counting-thread outcomes (DOUBLE_POST never arises from the
// generator, so it is not a latent label).
enum class LatentLabel {
    CORRECT_REASONING,
    PARTIAL_REASONING,
    WRONG_REASONING,
    SUPERFICIAL,
    IRRELEVANT,
    COUNT_OK,
    COUNT_WRONG_VALUE,
    COUNT_WRONG_FORMAT,
    OFFTOPIC,
};

inline const char* to_string(QualityLabel l) {
    switch (l) {
        case QualityLabel::CORRECT_REASONING: return "CORRECT_REASONING";
        case QualityLabel::PARTIAL_REASONING: return "PARTIAL_REASONING";
        case QualityLabel::WRONG_REASONING: return "WRONG_REASONING";
        case QualityLabel::SUPERFICIAL: return "SUPERFICIAL";
        case QualityLabel::IRRELEVANT: return "IRRELEVANT";
    }
    return "?";
}

inline const char* to_string(CountVerdict v) {
    switch (v) {
        case CountVerdict::COUNT_OK: return "COUNT_OK";
        case CountVerdict::COUNT_WRONG_VALUE: return "COUNT_WRONG_VALUE";
        case CountVerdict::COUNT_WRONG_FORMAT: return "COUNT_WRONG_FORMAT";
        case CountVerdict::OFFTOPIC: return "OFFTOPIC";
        case CountVerdict::DOUBLE_POST: return "DOUBLE_POST";
    }
    return "?";
}

inline const char* to_string(LatentLabel l) {
    switch (l) {
        case LatentLabel::CORRECT_REASONING: return "CORRECT_REASONING";
        case LatentLabel::PARTIAL_REASONING: return "PARTIAL_REASONING";
        case LatentLabel::WRONG_REASONING: return "WRONG_REASONING";
        case LatentLabel::SUPERFICIAL: return "SUPERFICIAL";
        case LatentLabel::IRRELEVANT: return "IRRELEVANT";
        case LatentLabel::COUNT_OK: return "COUNT_OK";
        case LatentLabel::COUNT_WRONG_VALUE: return "COUNT_WRONG_VALUE";
        case LatentLabel::COUNT_WRONG_FORMAT: return "COUNT_WRONG_FORMAT";
        case LatentLabel::OFFTOPIC: return "OFFTOPIC";
    }
    return "?";
}

inline QualityLabel quality_from_string(const std::string& s) {
    if (s == "CORRECT_REASONING") return QualityLabel::CORRECT_REASONING;
    if (s == "PARTIAL_REASONING") return QualityLabel::PARTIAL_REASONING;
    if (s == "WRONG_REASONING") return QualityLabel::WRONG_REASONING;
    if (s == "SUPERFICIAL") return QualityLabel::SUPERFICIAL;
    if (s == "IRRELEVANT") return QualityLabel::IRRELEVANT;
    throw ValidationError("unknown quality label: " + s);
}

inline CountVerdict count_verdict_from_string(const std::string& s) {
    if (s == "COUNT_OK") return CountVerdict::COUNT_OK;
    if (s == "COUNT_WRONG_VALUE") return CountVerdict::COUNT_WRONG_VALUE;
    if (s == "COUNT_WRONG_FORMAT") return CountVerdict::COUNT_WRONG_FORMAT;
    if (s == "OFFTOPIC") return CountVerdict::OFFTOPIC;
    if (s == "DOUBLE_POST") return CountVerdict::DOUBLE_POST;
    throw ValidationError("unknown count verdict: " + s);
}

inline LatentLabel latent_from_string(const std::string& s) {
    if (s == "CORRECT_REASONING") return LatentLabel::CORRECT_REASONING;
    if (s == "PARTIAL_REASONING") return LatentLabel::PARTIAL_REASONING;
    if (s == "WRONG_REASONING") return LatentLabel::WRONG_REASONING;
    if (s == "SUPERFICIAL") return LatentLabel::SUPERFICIAL;
    if (s == "IRRELEVANT") return LatentLabel::IRRELEVANT;
    if (s == "COUNT_OK") return LatentLabel::COUNT_OK;
    if (s == "COUNT_WRONG_VALUE") return LatentLabel::COUNT_WRONG_VALUE;
    if (s == "COUNT_WRONG_FORMAT") return LatentLabel::COUNT_WRONG_FORMAT;
    if (s == "OFFTOPIC") return LatentLabel::OFFTOPIC;
    throw ValidationError("unknown latent label: " + s);
}

// Latent labels that correspond one-to-one with a quality category.
inline std::optional<QualityLabel> quality_of_latent(LatentLabel l) {
    switch (l) {
        case LatentLabel::CORRECT_REASONING: return QualityLabel::CORRECT_REASONING;
        case LatentLabel::PARTIAL_REASONING: return QualityLabel::PARTIAL_REASONING;
        case LatentLabel::WRONG_REASONING: return QualityLabel::WRONG_REASONING;
        case LatentLabel::SUPERFICIAL: return QualityLabel::SUPERFICIAL;
        case LatentLabel::IRRELEVANT: return QualityLabel::IRRELEVANT;
        default: return std::nullopt;
    }
}

inline std::optional<CountVerdict> count_verdict_of_latent(LatentLabel l) {
    switch (l) {
        case LatentLabel::COUNT_OK: return CountVerdict::COUNT_OK;
        case LatentLabel::COUNT_WRONG_VALUE: return CountVerdict::COUNT_WRONG_VALUE;
        case LatentLabel::COUNT_WRONG_FORMAT: return CountVerdict::COUNT_WRONG_FORMAT;
        case LatentLabel::OFFTOPIC: return CountVerdict::OFFTOPIC;
        default: return std::nullopt;
    }
}

}  // namespace socprobe
