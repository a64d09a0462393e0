#ifndef FLOWLENS_FLOW_RECORD_HPP
#define FLOWLENS_FLOW_RECORD_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "flowlens/ipv4.hpp"

namespace flowlens {

// The 53 exported features of a finalized bidirectional flow, oriented so
// that the "source" is the client (first packet seen), plus the optional
// binary label / attack class pair.
struct FlowRecord {
    Ipv4 src_ip;  // IPV4_SRC_ADDR, the client
    Ipv4 dst_ip;  // IPV4_DST_ADDR, the server
    uint16_t src_port = 0;
    uint16_t dst_port = 0;
    uint8_t protocol = 0;
    uint16_t l7_proto = 0;

    uint64_t in_bytes = 0;   // client -> server
    uint64_t out_bytes = 0;  // server -> client
    uint64_t in_pkts = 0;
    uint64_t out_pkts = 0;

    uint64_t flow_duration_ms = 0;
    uint8_t tcp_flags = 0;
    uint8_t client_tcp_flags = 0;
    uint8_t server_tcp_flags = 0;
    uint64_t duration_in_ms = 0;
    uint64_t duration_out_ms = 0;

    uint8_t min_ttl = 0;
    uint8_t max_ttl = 0;
    uint32_t longest_flow_pkt = 0;
    uint32_t shortest_flow_pkt = 0;
    uint32_t min_ip_pkt_len = 0;
    uint32_t max_ip_pkt_len = 0;

    double src_to_dst_second_bytes = 0.0;
    double dst_to_src_second_bytes = 0.0;
    uint64_t retransmitted_in_bytes = 0;
    uint64_t retransmitted_in_pkts = 0;
    uint64_t retransmitted_out_bytes = 0;
    uint64_t retransmitted_out_pkts = 0;
    double src_to_dst_avg_throughput = 0.0; // bps
    double dst_to_src_avg_throughput = 0.0; // bps

    uint64_t num_pkts_up_to_128_bytes = 0;
    uint64_t num_pkts_128_to_256_bytes = 0;
    uint64_t num_pkts_256_to_512_bytes = 0;
    uint64_t num_pkts_512_to_1024_bytes = 0;
    uint64_t num_pkts_1024_to_1514_bytes = 0;

    uint32_t tcp_win_max_in = 0;
    uint32_t tcp_win_max_out = 0;

    uint32_t icmp_type = 0;      // type * 256 + code
    uint32_t icmp_ipv4_type = 0; // type alone

    uint32_t dns_query_id = 0;
    uint32_t dns_query_type = 0;
    uint32_t dns_ttl_answer = 0;
    uint32_t ftp_command_ret_code = 0;

    int64_t flow_start_ms = 0;
    int64_t flow_end_ms = 0;

    // IAT statistics, rounded to whole milliseconds; all zero when the
    // direction saw fewer than two packets.
    int64_t src_to_dst_iat_min = 0;
    int64_t src_to_dst_iat_max = 0;
    int64_t src_to_dst_iat_avg = 0;
    int64_t src_to_dst_iat_stddev = 0;
    int64_t dst_to_src_iat_min = 0;
    int64_t dst_to_src_iat_max = 0;
    int64_t dst_to_src_iat_avg = 0;
    int64_t dst_to_src_iat_stddev = 0;

    std::optional<uint8_t> label;
    std::string attack;

    bool operator==(const FlowRecord&) const = default;
};

inline constexpr int kFlowFeatureCount = 53;

// "Benign" is both the default class of unlabeled flows and the class that
// label 0 pairs with.
inline constexpr const char* kBenignClass = "Benign";

inline std::string record_class(const FlowRecord& rec)
{
    return rec.attack.empty() ? std::string(kBenignClass) : rec.attack;
}

// Deterministic total order used whenever records are written out:
// flow start first, then the identity tuple.
bool flow_start_order(const FlowRecord& a, const FlowRecord& b);

} // namespace flowlens

#endif
