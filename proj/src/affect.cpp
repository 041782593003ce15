#include "cvp/affect.hpp"

namespace cvp {

std::string_view to_string(AffectDimension d) {
    switch (d) {
        case AffectDimension::valence: return "valence";
        case AffectDimension::arousal: return "arousal";
        case AffectDimension::dominance: return "dominance";
    }
    return "unknown";
}

std::optional<AffectDimension> parse_dimension(std::string_view s) {
    for (auto d : kAllDimensions)
        if (to_string(d) == s) return d;
    return std::nullopt;
}

std::string_view to_string(PolarityLabel l) {
    switch (l) {
        case PolarityLabel::negative: return "negative";
        case PolarityLabel::neutral: return "neutral";
        case PolarityLabel::positive: return "positive";
    }
    return "unknown";
}

std::optional<PolarityLabel> parse_polarity(std::string_view s) {
    for (auto l : kAllLabels)
        if (to_string(l) == s) return l;
    return std::nullopt;
}

}  // namespace cvp
