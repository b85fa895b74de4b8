#ifndef ASAI_PACKET_IO_HPP
#define ASAI_PACKET_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "asai/lfunction.hpp"
#include "asai/transfer.hpp"

namespace asai {

using Json = nlohmann::ordered_json;

struct PacketParseError : std::runtime_error {
    explicit PacketParseError(std::vector<std::string> diags);
    std::vector<std::string> diagnostics;
};

// Polynomial expression over the declared indeterminates:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | identifier ['^' natural]
// This is exactly the language MPoly::str produces.
MPoly parse_mpoly(std::string_view text, const VarTableRef& table);

// Rational literal, or a polynomial over `table` (required for the latter).
Scalar parse_scalar(std::string_view text, const VarTableRef& table);

HilbertEigenPacket parse_packet_json(const Json& j);
HilbertEigenPacket parse_packet_file(const std::string& path);

Json render_packet(const HilbertEigenPacket& pkt);

bool packets_equal(const HilbertEigenPacket& a, const HilbertEigenPacket& b);

// Full transfer report: GL(4) locals with characteristic polynomials,
// p-part, refinement tuple, weight/slope/classicality data.
Json render_report(const HilbertEigenPacket& pkt, TransferSign sign);

// Reads back the part of a report that the Q-fiber comparison needs.
GL4EigenPacket parse_report_json(const Json& j);
GL4EigenPacket parse_report_file(const std::string& path);

} // namespace asai

#endif
