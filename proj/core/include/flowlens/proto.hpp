#ifndef FLOWLENS_PROTO_HPP
#define FLOWLENS_PROTO_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "flowlens/flow_key.hpp"

namespace flowlens {

// Numeric application tag. The numbering is this project's own stable
// enumeration (see l7_table() / README); it is not nDPI-compatible.
struct L7Tag {
    uint16_t code = 0; // 0 = unknown
    std::string_view name = "Unknown";
};

struct L7TableEntry {
    uint16_t port;
    uint16_t code;
    std::string_view name;
};

// The shipped port -> application table, ordered by port.
std::span<const L7TableEntry> l7_table();

// Deterministic lookup of the lower well-known port of the key; if the
// smaller port is not in the table the larger one is tried, otherwise the
// tag is Unknown (code 0). Symmetric in endpoint order by construction.
L7Tag classify_l7(const FlowKey& key, uint8_t protocol);

// DNS fields of interest: header transaction id, first question's QTYPE,
// and for responses the TTL of the first A answer.
struct DnsInfo {
    uint16_t query_id = 0;
    uint16_t query_type = 0;
    bool is_response = false;
    std::optional<uint32_t> ttl_first_a;

    bool operator==(const DnsInfo&) const = default;
};

// Parses one DNS message (RFC 1035 layout, name compression included).
// Returns nullopt on truncated names, counts inconsistent with the payload
// length, or pointer chains longer than 32 hops. Never reads outside the
// given bytes.
std::optional<DnsInfo> parse_dns(std::span<const uint8_t> payload);

// Returns the 3-digit FTP reply code when the payload starts with exactly
// three ASCII digits followed by a space or hyphen, else nullopt.
std::optional<int> parse_ftp_return(std::span<const uint8_t> payload);

} // namespace flowlens

#endif
