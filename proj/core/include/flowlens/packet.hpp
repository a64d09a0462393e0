#ifndef FLOWLENS_PACKET_HPP
#define FLOWLENS_PACKET_HPP

#include <cstdint>
#include <vector>

#include "flowlens/ipv4.hpp"

namespace flowlens {

// TCP flag bits as they appear in the header's flags byte.
enum TcpFlag : uint8_t {
    TCP_FIN = 0x01,
    TCP_SYN = 0x02,
    TCP_RST = 0x04,
    TCP_PSH = 0x08,
    TCP_ACK = 0x10,
    TCP_URG = 0x20,
};

inline constexpr uint8_t IPPROTO_ICMP_V4 = 1;
inline constexpr uint8_t IPPROTO_TCP_V4 = 6;
inline constexpr uint8_t IPPROTO_UDP_V4 = 17;

// Transport payload bytes retained per packet, enough for DNS and FTP
// reply parsing without keeping whole payloads around.
inline constexpr std::size_t kPayloadPrefixCap = 512;

// One decoded IPv4 packet. Ports are zero unless the protocol is TCP or
// UDP; the tcp_* fields are zero for anything that is not TCP.
struct PacketRecord {
    int64_t ts_micros = 0; // capture time, microseconds since Unix epoch
    Ipv4 src_ip;
    Ipv4 dst_ip;
    uint16_t src_port = 0;
    uint16_t dst_port = 0;
    uint8_t protocol = 0;
    uint16_t ip_total_len = 0;
    uint8_t ttl = 0;
    uint8_t tcp_flags = 0;
    uint32_t tcp_seq = 0;
    uint16_t tcp_window = 0;
    uint32_t payload_len = 0;           // declared transport payload bytes
    std::vector<uint8_t> payload_prefix; // captured payload, <= 512 bytes
    uint8_t icmp_type = 0;
    uint8_t icmp_code = 0;

    bool operator==(const PacketRecord&) const = default;
};

} // namespace flowlens

#endif
