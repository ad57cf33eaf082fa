#pragma once

// The six-valued CEFR proficiency scale and its (tiny) algebra.

#include <array>
#include <optional>
#include <string_view>

namespace jscefr {

/// Ordered proficiency scale: A1 < A2 < B1 < B2 < C1 < C2.
enum class Level : int {
    A1 = 0,
    A2 = 1,
    B1 = 2,
    B2 = 3,
    C1 = 4,
    C2 = 5,
};

inline constexpr int kLevelCount = 6;

inline constexpr std::array<Level, kLevelCount> all_levels() {
    return {Level::A1, Level::A2, Level::B1, Level::B2, Level::C1, Level::C2};
}

inline constexpr std::string_view level_name(Level level) {
    switch (level) {
        case Level::A1: return "A1";
        case Level::A2: return "A2";
        case Level::B1: return "B1";
        case Level::B2: return "B2";
        case Level::C1: return "C1";
        case Level::C2: return "C2";
    }
    return "??";
}

/// Accepts exactly the six strings "A1".."C2", case-sensitive, no trimming.
/// Whitespace normalization is the mapping-file loader's job, not ours.
inline constexpr std::optional<Level> parse_level(std::string_view text) {
    for (Level level : all_levels()) {
        if (text == level_name(level)) {
            return level;
        }
    }
    return std::nullopt;
}

/// Greater of the two under the total order. Commutative, associative,
/// idempotent, so it folds cleanly over occurrence sets.
inline constexpr Level level_max(Level a, Level b) {
    return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

inline constexpr int level_index(Level level) {
    return static_cast<int>(level);
}

}  // namespace jscefr
