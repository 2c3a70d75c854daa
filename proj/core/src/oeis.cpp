#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cstdio>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "combx/oeis.hpp"

namespace combx {

namespace {

std::string pad_id(long long number) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "A%06lld", number);
    return buf;
}

// position of `terms` as a contiguous run inside the sequence's data, -1 if
// absent (the endpoint also matches shifted or signed variants)
int run_offset(const std::string& data_csv, const std::vector<BigCount>& terms) {
    std::vector<std::string> data;
    size_t pos = 0;
    while (pos <= data_csv.size()) {
        size_t comma = data_csv.find(',', pos);
        if (comma == std::string::npos) comma = data_csv.size();
        if (comma > pos) data.push_back(data_csv.substr(pos, comma - pos));
        if (comma == data_csv.size()) break;
        pos = comma + 1;
    }
    std::vector<std::string> want;
    want.reserve(terms.size());
    for (const auto& t : terms) want.push_back(t.str());
    if (want.empty() || data.size() < want.size()) return -1;
    for (size_t i = 0; i + want.size() <= data.size(); ++i) {
        bool all = true;
        for (size_t j = 0; j < want.size() && all; ++j)
            if (data[i + j] != want[j]) all = false;
        if (all) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

std::vector<OeisMatch> parse_oeis_response(const std::string& body,
                                           const std::vector<BigCount>& terms) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("bad search response: ") + e.what());
    }
    // modern responses are a bare array; older ones wrap it in an object
    // whose "results" is null when nothing matched
    const nlohmann::json* rows = nullptr;
    if (doc.is_array()) {
        rows = &doc;
    } else if (doc.is_object()) {
        auto it = doc.find("results");
        if (it == doc.end() || it->is_null()) return {};
        if (!it->is_array()) throw std::runtime_error("bad search response: results not a list");
        rows = &*it;
    } else {
        throw std::runtime_error("bad search response: unexpected document shape");
    }
    std::vector<OeisMatch> out;
    for (const auto& row : *rows) {
        if (!row.is_object() || !row.contains("number")) continue;
        OeisMatch m;
        m.sequence_id = pad_id(row["number"].get<long long>());
        m.name = row.value("name", std::string{});
        m.matched_offset = run_offset(row.value("data", std::string{}), terms);
        out.push_back(std::move(m));
    }
    return out;
}

OeisResult oeis_lookup(const std::vector<BigCount>& terms) {
    if (terms.size() < 4)
        throw std::invalid_argument("lookup needs at least 4 terms");
    const char* offline = std::getenv("COMBX_OFFLINE");
    if (offline && *offline && std::string_view(offline) != "0")
        return {OeisStatus::Offline, {}, {}};

    const char* base_env = std::getenv("COMBX_OEIS_URL");
    const std::string base = base_env && *base_env ? base_env : "https://oeis.org";

    std::string query;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) query += ',';
        query += terms[i].str();
    }

    httplib::Client client(base);
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(10, 0);
    client.set_follow_location(true);
    auto res = client.Get("/search?q=" + query + "&fmt=json");
    if (!res)
        return {OeisStatus::Error, {}, "request failed: " + httplib::to_string(res.error())};
    if (res->status != 200)
        return {OeisStatus::Error, {}, "unexpected HTTP status " + std::to_string(res->status)};
    try {
        return {OeisStatus::Ok, parse_oeis_response(res->body, terms), {}};
    } catch (const std::runtime_error& e) {
        return {OeisStatus::Error, {}, e.what()};
    }
}

}  // namespace combx
