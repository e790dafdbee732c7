#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "mincode/errors.hpp"
#include "mincode/geometry.hpp"
#include "mincode/search.hpp"

namespace mincode {

inline nlohmann::json certificate_to_json(const SearchCertificate& cert) {
    nlohmann::json j;
    j["N"] = cert.N;
    j["outcome"] = cert.outcome == SearchCertificate::Outcome::Found ? "found" : "exhausted";
    if (cert.generator)
        j["generator"] = *cert.generator;
    else
        j["generator"] = nullptr;
    j["nodes"] = cert.nodes;
    j["pruned_by"] = {
        {"pairwise", cert.pruned_by.pairwise},
        {"structure", cert.pruned_by.structure},
        {"weight", cert.pruned_by.weight},
        {"parity", cert.pruned_by.parity},
    };
    j["assumptions"] = cert.assumptions;
    j["elapsed_s"] = cert.elapsed_s;
    j["version"] = cert.version;
    return j;
}

inline SearchCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        SearchCertificate cert;
        cert.N = j.at("N").get<int>();
        const std::string outcome = j.at("outcome").get<std::string>();
        if (outcome == "found")
            cert.outcome = SearchCertificate::Outcome::Found;
        else if (outcome == "exhausted")
            cert.outcome = SearchCertificate::Outcome::Exhausted;
        else
            throw ParseError("unknown outcome: " + outcome);
        if (!j.at("generator").is_null())
            cert.generator = j.at("generator").get<std::vector<std::string>>();
        cert.nodes = j.at("nodes").get<std::uint64_t>();
        const nlohmann::json& p = j.at("pruned_by");
        cert.pruned_by.pairwise = p.at("pairwise").get<std::uint64_t>();
        cert.pruned_by.structure = p.at("structure").get<std::uint64_t>();
        cert.pruned_by.weight = p.at("weight").get<std::uint64_t>();
        cert.pruned_by.parity = p.at("parity").get<std::uint64_t>();
        cert.assumptions = j.at("assumptions").get<std::vector<std::string>>();
        cert.elapsed_s = j.at("elapsed_s").get<double>();
        cert.version = j.at("version").get<std::string>();
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
}

inline SearchCertificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open certificate file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return certificate_from_json(j);
}

/// Re-establishes a certificate from scratch. Found: the recorded generator
/// must define a verified minimal [3N, N+1, N+1] code that is also a strong
/// blocking set. Exhausted: the search is replayed with the recorded
/// parameters and must reproduce the same counters.
inline bool verify_certificate(const SearchCertificate& cert) {
    if (cert.outcome == SearchCertificate::Outcome::Found) {
        const LinearCode code = certificate_code(cert);
        if (code.n() != 3 * cert.N)
            throw VerificationFailed("generator length is not 3N");
        if (code.k() != cert.N + 1)
            throw VerificationFailed("generator dimension is not N+1");
        const WeightProfile wp = weight_profile(code);
        if (wp.d_min != cert.N + 1)
            throw VerificationFailed("minimum distance is not N+1");
        if (wp.w_max > 2 * cert.N)
            throw VerificationFailed("maximum weight exceeds 2N");
        if (!is_minimal_code(code).minimal)
            throw VerificationFailed("generator does not span a minimal code");
        if (!is_strong_blocking_set(projective_points(code), code.k(), code.q()).strong)
            throw VerificationFailed("column set is not a strong blocking set");
        return true;
    }
    const SearchCertificate replay = search(cert.N);
    if (replay.outcome != SearchCertificate::Outcome::Exhausted)
        throw VerificationFailed("replayed search found a code");
    if (replay.nodes != cert.nodes)
        throw VerificationFailed("replayed node count differs: " + std::to_string(replay.nodes) +
                                 " vs " + std::to_string(cert.nodes));
    return true;
}

} // namespace mincode
