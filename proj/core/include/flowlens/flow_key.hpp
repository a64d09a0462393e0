#ifndef FLOWLENS_FLOW_KEY_HPP
#define FLOWLENS_FLOW_KEY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>

#include "flowlens/packet.hpp"

namespace flowlens {

// Canonical bidirectional 5-tuple: the (ip, port) pair with the smaller ip
// goes first, ties broken by the smaller port, so a packet and its reverse
// produce the same key.
struct FlowKey {
    Ipv4 ip_a;
    Ipv4 ip_b;
    uint16_t port_a = 0;
    uint16_t port_b = 0;
    uint8_t protocol = 0;

    auto operator<=>(const FlowKey&) const = default;
};

inline FlowKey canonical_key(const PacketRecord& pkt)
{
    FlowKey key;
    key.protocol = pkt.protocol;
    bool src_first = pkt.src_ip < pkt.dst_ip ||
                     (pkt.src_ip == pkt.dst_ip && pkt.src_port <= pkt.dst_port);
    if (src_first) {
        key.ip_a = pkt.src_ip;
        key.port_a = pkt.src_port;
        key.ip_b = pkt.dst_ip;
        key.port_b = pkt.dst_port;
    } else {
        key.ip_a = pkt.dst_ip;
        key.port_a = pkt.dst_port;
        key.ip_b = pkt.src_ip;
        key.port_b = pkt.src_port;
    }
    return key;
}

struct FlowKeyHash {
    std::size_t operator()(const FlowKey& k) const
    {
        uint64_t h = 0xcbf29ce484222325ull;
        auto mix = [&h](uint64_t v) {
            h ^= v;
            h *= 0x100000001b3ull;
        };
        mix(k.ip_a.addr);
        mix(k.ip_b.addr);
        mix((uint64_t(k.port_a) << 24) | (uint64_t(k.port_b) << 8) | k.protocol);
        return static_cast<std::size_t>(h);
    }
};

} // namespace flowlens

#endif
