#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace cvp {

enum class AffectDimension { valence, arousal, dominance };

inline constexpr std::size_t kDimensionCount = 3;
inline constexpr std::array<AffectDimension, kDimensionCount> kAllDimensions = {
    AffectDimension::valence, AffectDimension::arousal, AffectDimension::dominance};

constexpr std::size_t index_of(AffectDimension d) { return static_cast<std::size_t>(d); }

std::string_view to_string(AffectDimension d);
std::optional<AffectDimension> parse_dimension(std::string_view s);

enum class PolarityLabel { negative, neutral, positive };

inline constexpr std::array<PolarityLabel, 3> kAllLabels = {
    PolarityLabel::negative, PolarityLabel::neutral, PolarityLabel::positive};

std::string_view to_string(PolarityLabel l);
std::optional<PolarityLabel> parse_polarity(std::string_view s);

}  // namespace cvp
