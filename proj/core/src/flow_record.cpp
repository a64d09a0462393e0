#include "flowlens/flow_record.hpp"

#include <tuple>

namespace flowlens {

bool flow_start_order(const FlowRecord& a, const FlowRecord& b)
{
    return std::tie(a.flow_start_ms, a.src_ip, a.dst_ip, a.src_port, a.dst_port,
                    a.protocol, a.flow_end_ms) <
           std::tie(b.flow_start_ms, b.src_ip, b.dst_ip, b.src_port, b.dst_port,
                    b.protocol, b.flow_end_ms);
}

} // namespace flowlens
