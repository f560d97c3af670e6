#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace graham {

/// Market-cap tiers. Enumerator values increase with size so that
/// `a > b` means tier a is larger than tier b.
enum class MarketCapTier { Nano = 0, Micro = 1, Small = 2, Mid = 3, Big = 4, Mega = 5 };

/// Mega through Nano, the order screens are reported in.
inline constexpr std::array<MarketCapTier, 6> kTiersDescending{
    MarketCapTier::Mega,  MarketCapTier::Big,   MarketCapTier::Mid,
    MarketCapTier::Small, MarketCapTier::Micro, MarketCapTier::Nano};

std::string_view tier_name(MarketCapTier tier) noexcept;   // "mega", "big", ...
std::string_view tier_title(MarketCapTier tier) noexcept;  // "MegaCap", "BigCap", ...
std::optional<MarketCapTier> parse_tier(std::string_view name) noexcept;

/// Lower-inclusive USD floors for each tier above Nano, plus the per-tier
/// minimum analyst count.
struct TierScheme {
    double mega_floor = 300e9;
    double big_floor = 10e9;
    double mid_floor = 2e9;
    double small_floor = 300e6;
    double micro_floor = 50e6;

    int mega_analysts = 25;
    int big_analysts = 20;
    int mid_analysts = 15;
    int small_analysts = 10;
    int micro_analysts = 5;
    int nano_analysts = 3;
};

/// Throws Error(InvalidInput) for negative or non-finite caps.
MarketCapTier classify_market_cap(double cap_usd, const TierScheme& scheme = {});

int min_analysts_for_tier(MarketCapTier tier, const TierScheme& scheme = {});

}  // namespace graham
