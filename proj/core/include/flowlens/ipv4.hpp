#ifndef FLOWLENS_IPV4_HPP
#define FLOWLENS_IPV4_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace flowlens {

// IPv4 address held in host byte order so numeric comparison matches the
// usual dotted-quad ordering.
struct Ipv4 {
    uint32_t addr = 0;

    auto operator<=>(const Ipv4&) const = default;
};

std::string to_string(Ipv4 ip);
std::optional<Ipv4> parse_ipv4(std::string_view text);

} // namespace flowlens

#endif
