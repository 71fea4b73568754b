#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <openssl/evp.h>

#include <nlohmann/json.hpp>

#include "g2theta/qp.hpp"

namespace g2theta {

inline constexpr const char* kToolVersion = "1.0.0";

inline long checked_long(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("matrix entry exceeds long");
    return x.get_si();
}

inline nlohmann::json sym_to_json(const SymMat3& T) {
    nlohmann::json m = nlohmann::json::array();
    for (int i = 0; i < 3; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 3; ++j) row.push_back(checked_long(rat_num(T.entry(i, j))));
        m.push_back(row);
    }
    return m;
}

inline SymMat3 sym_from_json(const nlohmann::json& m) {
    auto e = [&](int i, int j) { return Int(m.at(i).at(j).get<long>()); };
    if (e(0, 1) != e(1, 0) || e(0, 2) != e(2, 0) || e(1, 2) != e(2, 1))
        throw std::invalid_argument("matrix not symmetric");
    return SymMat3{e(0, 0), e(1, 1), e(2, 2), e(1, 2), e(0, 2), e(0, 1)};
}

inline nlohmann::json qp_result_to_json(const QpResult& res) {
    nlohmann::json j;
    j["polynomial"] = format_monic_cubic(res.polynomial);
    j["total"] = res.total;
    nlohmann::json orbits = nlohmann::json::array();
    for (const auto& orb : res.orbits) {
        nlohmann::json o;
        o["rep"] = sym_to_json(orb.representative);
        o["size"] = orb.size;
        o["stabilizer_order"] = orb.stabilizer_order;
        orbits.push_back(o);
    }
    j["orbits"] = orbits;
    return j;
}

inline QpResult qp_result_from_json(const nlohmann::json& j) {
    QpResult res;
    res.polynomial = parse_monic_cubic(j.at("polynomial").get<std::string>());
    res.total = j.at("total").get<long>();
    for (const auto& o : j.at("orbits")) {
        QpOrbit orb;
        orb.representative = sym_from_json(o.at("rep"));
        orb.size = o.at("size").get<int>();
        orb.stabilizer_order = o.at("stabilizer_order").get<int>();
        res.orbits.push_back(orb);
    }
    // reconstruct the full matrix list from the orbit representatives
    for (const auto& orb : res.orbits)
        for (const auto& g : so3z_elements())
            res.matrices.push_back(conjugate(g, orb.representative));
    std::sort(res.matrices.begin(), res.matrices.end());
    res.matrices.erase(std::unique(res.matrices.begin(), res.matrices.end()),
                       res.matrices.end());
    return res;
}

inline std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("digest failure");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

// cache key: canonical polynomial text plus the tool version
inline std::string cache_key(const MonicCubic& p) {
    return sha256_hex(std::string(kToolVersion) + "\n" + format_monic_cubic(p));
}

inline std::optional<QpResult> cache_load(const std::string& dir, const MonicCubic& p) {
    std::ifstream in(dir + "/" + cache_key(p) + ".json");
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("version").get<std::string>() != kToolVersion) return std::nullopt;
        return qp_result_from_json(j.at("result"));
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache entries are ignored
    }
}

inline void cache_store(const std::string& dir, const QpResult& res) {
    nlohmann::json j;
    j["version"] = kToolVersion;
    j["timestamp"] = static_cast<long>(::time(nullptr));
    j["result"] = qp_result_to_json(res);
    std::ofstream out(dir + "/" + cache_key(res.polynomial) + ".json");
    out << j.dump(2) << "\n";
}

}  // namespace g2theta
