#include "flowlens/ipv4.hpp"

#include <charconv>

namespace flowlens {

std::string to_string(Ipv4 ip)
{
    std::string out;
    out.reserve(15);
    for (int shift = 24; shift >= 0; shift -= 8) {
        out += std::to_string((ip.addr >> shift) & 0xff);
        if (shift > 0) {
            out += '.';
        }
    }
    return out;
}

std::optional<Ipv4> parse_ipv4(std::string_view text)
{
    uint32_t addr = 0;
    const char* p = text.data();
    const char* end = text.data() + text.size();
    for (int octet = 0; octet < 4; ++octet) {
        unsigned value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{} || value > 255) {
            return std::nullopt;
        }
        addr = (addr << 8) | value;
        p = next;
        if (octet < 3) {
            if (p == end || *p != '.') {
                return std::nullopt;
            }
            ++p;
        }
    }
    if (p != end) {
        return std::nullopt;
    }
    return Ipv4{addr};
}

} // namespace flowlens
