#include "symsq/hecke/cache.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace symsq::hecke {

using nlohmann::json;

CacheStore::CacheStore(std::string dir) : dir_(std::move(dir)) {}

std::string CacheStore::path_for(int weight) const {
    return dir_ + "/eigen_w" + std::to_string(weight) + ".json";
}

std::optional<CachedWeight> CacheStore::load(int weight) const {
    std::ifstream in(path_for(weight));
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
    } catch (const json::exception&) {
        return std::nullopt;
    }
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != schema_version)
        return std::nullopt;
    CachedWeight out;
    try {
        out.weight = j.at("weight").get<int>();
        out.dim = j.at("dim").get<int>();
        out.precision_bits = j.at("precision_bits").get<unsigned>();
        out.coverage = j.at("coverage").get<std::uint64_t>();
        for (auto& f : j.at("forms")) {
            CachedForm cf;
            cf.basis_coords = f.at("basis_coords").get<std::vector<std::string>>();
            cf.lambda_p = f.at("lambda_p").get<std::vector<std::string>>();
            out.forms.push_back(std::move(cf));
        }
    } catch (const json::exception&) {
        return std::nullopt;
    }
    if (out.weight != weight) return std::nullopt;
    return out;
}

void CacheStore::store(const CachedWeight& data) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    json j;
    j["schema_version"] = schema_version;
    j["weight"] = data.weight;
    j["dim"] = data.dim;
    j["precision_bits"] = data.precision_bits;
    j["coverage"] = data.coverage;
    json forms = json::array();
    for (auto& f : data.forms) {
        json jf;
        jf["basis_coords"] = f.basis_coords;
        jf["lambda_p"] = f.lambda_p;
        forms.push_back(std::move(jf));
    }
    j["forms"] = std::move(forms);

    std::string tmp = path_for(data.weight) + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump();
    }
    std::filesystem::rename(tmp, path_for(data.weight), ec);
    if (ec) std::remove(tmp.c_str());
}

} // namespace symsq::hecke
