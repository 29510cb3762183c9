// Copyright 2026 The FOCAN Simulator Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FOCAN_IDS_HPP_
#define FOCAN_IDS_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace focan {

struct ThingId {
  std::uint32_t value{};
  auto operator<=>(const ThingId&) const = default;
};

struct FnId {
  std::uint32_t value{};
  auto operator<=>(const FnId&) const = default;
};

// Ledger bucket for energy that cannot be attributed to any fog node
// (D2D transfers between uncovered things).
inline constexpr FnId kUnattributed{0xFFFFFFFFu};

// A communication endpoint: either an IoE thing or a fog node.
using Endpoint = std::variant<ThingId, FnId>;

enum class CommType : std::uint8_t { Interprimary = 0, Primary = 1, Secondary = 2 };
inline constexpr std::array<CommType, 3> kAllCommTypes = {
    CommType::Interprimary, CommType::Primary, CommType::Secondary};
inline constexpr std::size_t index_of(CommType c) { return static_cast<std::size_t>(c); }

enum class Medium : std::uint8_t { Wired, Wireless };

enum class Radio : std::uint8_t { Bluetooth, ZigBee, WiFi };

std::string_view to_string(CommType c);
std::string_view to_string(Medium m);
std::string_view to_string(Radio r);
std::optional<CommType> parse_comm_type(std::string_view s);
std::optional<Radio> parse_radio(std::string_view s);

std::string to_string(FnId id);
std::string to_string(ThingId id);
// "t<id>" for things, "fn<id>" for fog nodes.
std::string to_string(const Endpoint& e);

}  // namespace focan

template <>
struct std::hash<focan::ThingId> {
  std::size_t operator()(focan::ThingId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

template <>
struct std::hash<focan::FnId> {
  std::size_t operator()(focan::FnId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

#endif  // FOCAN_IDS_HPP_
