#pragma once

#include <string>
#include <vector>

#include "combx/bigint.hpp"

namespace combx {

// One search hit. matched_offset is the position within the hit's data list
// where the query terms appear as a contiguous run, or -1 when the endpoint
// matched more loosely than that.
struct OeisMatch {
    std::string sequence_id;  // "A" + 6 digits
    std::string name;
    int matched_offset = -1;

    bool operator==(const OeisMatch&) const = default;
};

enum class OeisStatus { Ok, Offline, Error };

struct OeisResult {
    OeisStatus status = OeisStatus::Ok;
    std::vector<OeisMatch> matches;    // meaningful when status == Ok
    std::string error;                 // cause when status == Error
};

// Parse a search response body into matches, ranked as returned. Accepts both
// the object form {"results":[...]} and the bare-array form. Throws
// std::runtime_error on malformed payloads.
std::vector<OeisMatch> parse_oeis_response(const std::string& body,
                                           const std::vector<BigCount>& terms);

// Query the search endpoint with comma-joined terms. Needs at least 4 terms.
// COMBX_OFFLINE=1 short-circuits to Offline without touching the network;
// COMBX_OEIS_URL overrides the default base https://oeis.org. Network and
// parse failures come back as status Error, never as exceptions: lookups are
// advisory and must not break verification flows.
OeisResult oeis_lookup(const std::vector<BigCount>& terms);

}  // namespace combx
