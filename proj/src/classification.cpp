#include "graham/classification.hpp"

#include <cmath>

#include "graham/error.hpp"

namespace graham {

std::string_view tier_name(MarketCapTier tier) noexcept {
    switch (tier) {
    case MarketCapTier::Mega: return "mega";
    case MarketCapTier::Big: return "big";
    case MarketCapTier::Mid: return "mid";
    case MarketCapTier::Small: return "small";
    case MarketCapTier::Micro: return "micro";
    case MarketCapTier::Nano: return "nano";
    }
    return "unknown";
}

std::string_view tier_title(MarketCapTier tier) noexcept {
    switch (tier) {
    case MarketCapTier::Mega: return "MegaCap";
    case MarketCapTier::Big: return "BigCap";
    case MarketCapTier::Mid: return "MidCap";
    case MarketCapTier::Small: return "SmallCap";
    case MarketCapTier::Micro: return "MicroCap";
    case MarketCapTier::Nano: return "NanoCap";
    }
    return "Unknown";
}

std::optional<MarketCapTier> parse_tier(std::string_view name) noexcept {
    for (auto tier : kTiersDescending)
        if (tier_name(tier) == name) return tier;
    return std::nullopt;
}

MarketCapTier classify_market_cap(double cap_usd, const TierScheme& scheme) {
    if (!std::isfinite(cap_usd) || cap_usd < 0.0)
        throw Error(ErrorKind::InvalidInput, "market cap must be finite and >= 0");
    if (cap_usd >= scheme.mega_floor) return MarketCapTier::Mega;
    if (cap_usd >= scheme.big_floor) return MarketCapTier::Big;
    if (cap_usd >= scheme.mid_floor) return MarketCapTier::Mid;
    if (cap_usd >= scheme.small_floor) return MarketCapTier::Small;
    if (cap_usd >= scheme.micro_floor) return MarketCapTier::Micro;
    return MarketCapTier::Nano;
}

int min_analysts_for_tier(MarketCapTier tier, const TierScheme& scheme) {
    switch (tier) {
    case MarketCapTier::Mega: return scheme.mega_analysts;
    case MarketCapTier::Big: return scheme.big_analysts;
    case MarketCapTier::Mid: return scheme.mid_analysts;
    case MarketCapTier::Small: return scheme.small_analysts;
    case MarketCapTier::Micro: return scheme.micro_analysts;
    case MarketCapTier::Nano: return scheme.nano_analysts;
    }
    throw Error(ErrorKind::InvalidInput, "unknown market-cap tier");
}

}  // namespace graham
