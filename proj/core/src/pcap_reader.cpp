#include "flowlens/pcap_reader.hpp"

#include <cstring>
#include <fstream>

#include "flowlens/errors.hpp"

namespace flowlens {

namespace {

uint32_t bswap32(uint32_t v)
{
    return ((v & 0x000000ffu) << 24) | ((v & 0x0000ff00u) << 8) |
           ((v & 0x00ff0000u) >> 8) | ((v & 0xff000000u) >> 24);
}

constexpr uint32_t kMagicMicros = 0xa1b2c3d4u;
constexpr uint32_t kMagicMicrosSwapped = 0xd4c3b2a1u;
constexpr uint32_t kMagicNanos = 0xa1b23c4du;
constexpr uint32_t kMagicNanosSwapped = 0x4d3cb2a1u;

constexpr uint16_t kEtherTypeIpv4 = 0x0800;
constexpr uint16_t kEtherTypeVlan = 0x8100;

constexpr std::size_t kGlobalHeaderLen = 24;
constexpr std::size_t kPacketHeaderLen = 16;
constexpr std::size_t kEthHeaderLen = 14;

uint16_t load_be16(const uint8_t* p)
{
    return static_cast<uint16_t>((p[0] << 8) | p[1]);
}

uint32_t load_be32(const uint8_t* p)
{
    return (uint32_t(p[0]) << 24) | (uint32_t(p[1]) << 16) | (uint32_t(p[2]) << 8) | uint32_t(p[3]);
}

} // namespace

CaptureReader::CaptureReader(std::unique_ptr<std::istream> source)
    : source_(std::move(source))
{
    uint8_t hdr[kGlobalHeaderLen];
    if (!read_exact(hdr, 4)) {
        throw TruncatedHeader("pcap global header shorter than 4 bytes");
    }
    uint32_t magic;
    std::memcpy(&magic, hdr, 4);
    switch (magic) {
    case kMagicMicros:
        resolution_ = TimestampResolution::microsecond;
        byte_order_ = PcapByteOrder::native;
        break;
    case kMagicMicrosSwapped:
        resolution_ = TimestampResolution::microsecond;
        byte_order_ = PcapByteOrder::swapped;
        break;
    case kMagicNanos:
        resolution_ = TimestampResolution::nanosecond;
        byte_order_ = PcapByteOrder::native;
        break;
    case kMagicNanosSwapped:
        resolution_ = TimestampResolution::nanosecond;
        byte_order_ = PcapByteOrder::swapped;
        break;
    default:
        throw UnknownMagic("not a classic pcap file (magic mismatch)");
    }
    if (!read_exact(hdr + 4, kGlobalHeaderLen - 4)) {
        throw TruncatedHeader("pcap global header shorter than 24 bytes");
    }
    link_type_ = load_u32(hdr + 20);
    if (link_type_ != 1) {
        throw UnsupportedLinkType("pcap link type " + std::to_string(link_type_) + " is not Ethernet");
    }
}

bool CaptureReader::read_exact(uint8_t* dst, std::size_t n)
{
    source_->read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
    std::size_t got = static_cast<std::size_t>(source_->gcount());
    bytes_consumed_ += got;
    return got == n;
}

uint32_t CaptureReader::load_u32(const uint8_t* p) const
{
    uint32_t v;
    std::memcpy(&v, p, 4);
    return byte_order_ == PcapByteOrder::swapped ? bswap32(v) : v;
}

ReadStatus CaptureReader::next_packet(PacketRecord& out)
{
    uint8_t hdr[kPacketHeaderLen];
    source_->read(reinterpret_cast<char*>(hdr), kPacketHeaderLen);
    std::size_t got = static_cast<std::size_t>(source_->gcount());
    bytes_consumed_ += got;
    if (got == 0) {
        return ReadStatus::end_of_capture;
    }
    if (got < kPacketHeaderLen) {
        throw CorruptPacketHeader("per-packet header truncated mid-record");
    }

    uint32_t ts_sec = load_u32(hdr);
    uint32_t ts_subsec = load_u32(hdr + 4);
    uint32_t incl_len = load_u32(hdr + 8);

    frame_buf_.resize(incl_len);
    if (incl_len > 0 && !read_exact(frame_buf_.data(), incl_len)) {
        throw CorruptPacketHeader("declared capture length exceeds remaining file");
    }

    int64_t ts_micros = int64_t(ts_sec) * 1000000;
    if (resolution_ == TimestampResolution::nanosecond) {
        ts_micros += int64_t(ts_subsec) / 1000; // truncate, not round
    } else {
        ts_micros += int64_t(ts_subsec);
    }

    const uint8_t* frame = frame_buf_.data();
    std::size_t len = frame_buf_.size();

    auto skip = [this]() {
        ++packets_skipped_;
        return ReadStatus::skipped;
    };

    if (len < kEthHeaderLen) {
        return skip();
    }
    uint16_t ethertype = load_be16(frame + 12);
    std::size_t l3 = kEthHeaderLen;
    if (ethertype == kEtherTypeVlan) {
        // single 802.1Q tag removed, then the inner type is dispatched
        if (len < kEthHeaderLen + 4) {
            return skip();
        }
        ethertype = load_be16(frame + kEthHeaderLen + 2);
        l3 = kEthHeaderLen + 4;
    }
    if (ethertype != kEtherTypeIpv4) {
        return skip();
    }
    if (len < l3 + 20) {
        return skip();
    }

    const uint8_t* ip = frame + l3;
    if ((ip[0] >> 4) != 4) {
        return skip();
    }
    std::size_t ihl = std::size_t(ip[0] & 0x0f) * 4;
    if (ihl < 20 || len < l3 + ihl) {
        return skip();
    }
    uint16_t total_len = load_be16(ip + 2);
    if (total_len < ihl) {
        return skip();
    }
    uint16_t frag = load_be16(ip + 6);
    if ((frag & 0x1fff) != 0) {
        // non-first fragment: no transport header to decode
        return skip();
    }

    PacketRecord pkt;
    pkt.ts_micros = ts_micros;
    pkt.ttl = ip[8];
    pkt.protocol = ip[9];
    pkt.src_ip = Ipv4{load_be32(ip + 12)};
    pkt.dst_ip = Ipv4{load_be32(ip + 16)};
    pkt.ip_total_len = total_len;

    const uint8_t* l4 = ip + ihl;
    std::size_t l4_captured = len - l3 - ihl;
    std::size_t payload_off = 0; // payload start relative to l4

    if (pkt.protocol == IPPROTO_TCP_V4) {
        if (l4_captured < 20) {
            return skip();
        }
        std::size_t data_off = std::size_t(l4[12] >> 4) * 4;
        if (data_off < 20 || l4_captured < data_off || total_len < ihl + data_off) {
            return skip();
        }
        pkt.src_port = load_be16(l4);
        pkt.dst_port = load_be16(l4 + 2);
        pkt.tcp_seq = load_be32(l4 + 4);
        pkt.tcp_flags = l4[13];
        pkt.tcp_window = load_be16(l4 + 14);
        pkt.payload_len = total_len - uint32_t(ihl) - uint32_t(data_off);
        payload_off = data_off;
    } else if (pkt.protocol == IPPROTO_UDP_V4) {
        if (l4_captured < 8 || total_len < ihl + 8) {
            return skip();
        }
        pkt.src_port = load_be16(l4);
        pkt.dst_port = load_be16(l4 + 2);
        pkt.payload_len = total_len - uint32_t(ihl) - 8;
        payload_off = 8;
    } else if (pkt.protocol == IPPROTO_ICMP_V4) {
        if (l4_captured < 4) {
            return skip();
        }
        pkt.icmp_type = l4[0];
        pkt.icmp_code = l4[1];
        pkt.payload_len = total_len - uint32_t(ihl);
    } else {
        pkt.payload_len = total_len - uint32_t(ihl);
    }

    std::size_t avail = l4_captured > payload_off ? l4_captured - payload_off : 0;
    std::size_t prefix = std::min({std::size_t(pkt.payload_len), avail, kPayloadPrefixCap});
    pkt.payload_prefix.assign(l4 + payload_off, l4 + payload_off + prefix);

    out = std::move(pkt);
    ++packets_read_;
    return ReadStatus::packet;
}

bool CaptureReader::next_ipv4(PacketRecord& out)
{
    for (;;) {
        switch (next_packet(out)) {
        case ReadStatus::packet:
            return true;
        case ReadStatus::skipped:
            continue;
        case ReadStatus::end_of_capture:
            return false;
        }
    }
}

CaptureReader open_capture(const std::string& path)
{
    auto stream = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!stream->is_open()) {
        throw Error("cannot open capture file: " + path);
    }
    return CaptureReader(std::move(stream));
}

} // namespace flowlens
