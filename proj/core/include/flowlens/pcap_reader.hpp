#ifndef FLOWLENS_PCAP_READER_HPP
#define FLOWLENS_PCAP_READER_HPP

#include <cstdint>
#include <istream>
#include <memory>
#include <string>

#include "flowlens/packet.hpp"

namespace flowlens {

enum class TimestampResolution { microsecond, nanosecond };
enum class PcapByteOrder { native, swapped };

enum class ReadStatus {
    packet,       // an IPv4 PacketRecord was produced
    skipped,      // a frame was consumed but not decodable as IPv4
    end_of_capture,
};

/// Sequential reader over a classic pcap file (Ethernet link type only).
///
/// Not safe for concurrent calls; distinct readers over distinct files may
/// run in parallel. pcapng is not supported.
class CaptureReader {
public:
    // Takes ownership of the stream and parses the 24-byte global header.
    // Throws UnknownMagic, TruncatedHeader or UnsupportedLinkType.
    explicit CaptureReader(std::unique_ptr<std::istream> source);

    CaptureReader(const CaptureReader&) = delete;
    CaptureReader& operator=(const CaptureReader&) = delete;
    CaptureReader(CaptureReader&&) = default;
    CaptureReader& operator=(CaptureReader&&) = default;

    /// Consumes exactly one per-packet record. Non-IPv4 frames and frames
    /// too short for their declared headers yield ReadStatus::skipped;
    /// VLAN (0x8100) tags are removed once before dispatch. Throws
    /// CorruptPacketHeader when the declared capture length exceeds the
    /// remaining file.
    ReadStatus next_packet(PacketRecord& out);

    /// Convenience loop over next_packet that drops skipped frames.
    /// Returns false at end of capture.
    bool next_ipv4(PacketRecord& out);

    TimestampResolution timestamp_resolution() const { return resolution_; }
    PcapByteOrder byte_order() const { return byte_order_; }
    uint32_t link_type() const { return link_type_; }
    uint64_t packets_read() const { return packets_read_; }
    uint64_t packets_skipped() const { return packets_skipped_; }
    uint64_t bytes_consumed() const { return bytes_consumed_; }

private:
    bool read_exact(uint8_t* dst, std::size_t n);
    uint32_t load_u32(const uint8_t* p) const;

    std::unique_ptr<std::istream> source_;
    TimestampResolution resolution_ = TimestampResolution::microsecond;
    PcapByteOrder byte_order_ = PcapByteOrder::native;
    uint32_t link_type_ = 0;
    uint64_t packets_read_ = 0;
    uint64_t packets_skipped_ = 0;
    uint64_t bytes_consumed_ = 0;
    std::vector<uint8_t> frame_buf_;
};

/// Opens a capture file from disk. Throws flowlens::Error if the path is
/// not readable, plus the CaptureReader header errors.
CaptureReader open_capture(const std::string& path);

} // namespace flowlens

#endif
