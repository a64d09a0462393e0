#ifndef FLOWLENS_ERRORS_HPP
#define FLOWLENS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flowlens {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// pcap file level
struct UnknownMagic : Error { using Error::Error; };
struct UnsupportedLinkType : Error { using Error::Error; };
struct TruncatedHeader : Error { using Error::Error; };
struct CorruptPacketHeader : Error { using Error::Error; };

// flow metering
struct EmptyAccumulator : Error { using Error::Error; };

// dataset io
struct SinkFailure : Error { using Error::Error; };
struct MissingColumn : Error { using Error::Error; };
struct MalformedRow : Error { using Error::Error; };
struct InvertedInterval : Error { using Error::Error; };

// analytics / tfr
struct EmptyInput : Error { using Error::Error; };
struct NoSuchClass : Error { using Error::Error; };
struct SignalTooShort : Error { using Error::Error; };
struct BadWindow : Error { using Error::Error; };

} // namespace flowlens

#endif
